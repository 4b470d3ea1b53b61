//! Exact arithmetic in a tower of fields.
//!
//! The tower starts at `Q` (arbitrary-precision rationals) and `GF(p)` and is
//! closed under three constructions: quadratic extensions by a verified
//! non-square, univariate rational function fields, and quotient extensions by
//! a polynomial that is irreducible over its base (checked where a test is
//! available). Every element carries its field descriptor and is kept in a
//! canonical representation, so equality is structural and hashing is sound.

mod intsqf;
pub(crate) mod parse;
mod upoly;

pub use upoly::UPoly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("elements belong to different fields")]
    DescriptorMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation not supported over {0}")]
    UnsupportedField(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("radicand {0} is a square in the base field")]
    RadicandIsSquare(String),
    #[error("radicand is zero")]
    RadicandIsZero,
    #[error("no non-square test available over {0}")]
    SquareTestUnavailable(String),
    #[error("defining polynomial must have degree >= 2")]
    ModulusDegreeTooSmall,
    #[error("defining polynomial is reducible over the base")]
    ReducibleModulus,
    #[error("no irreducibility test available for degree {0} over {1}")]
    IrreducibilityTestUnavailable(usize, String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type FieldRef = Arc<FieldDescriptor>;

/// Description of one field in the tower.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// The rational numbers.
    Rationals,
    /// The prime field `GF(p)`; `p` is checked prime at construction.
    PrimeField(u64),
    /// `base(sqrt(d))` for a non-square `d` in the base.
    QuadExt { base: FieldRef, d: Box<FieldElement> },
    /// Univariate rational function field `base(var)`.
    FunctionField { base: FieldRef, var: String },
    /// `base[var]/(modulus)` for a monic irreducible `modulus` of degree >= 2.
    QuotientExt {
        base: FieldRef,
        var: String,
        modulus: UPoly,
    },
}

impl FieldDescriptor {
    pub fn rationals() -> FieldRef {
        Arc::new(FieldDescriptor::Rationals)
    }

    pub fn prime_field(p: u64) -> Result<FieldRef, ScalarError> {
        if !intsqf::is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Arc::new(FieldDescriptor::PrimeField(p)))
    }

    /// Quadratic extension of `base` by `sqrt(d)`.
    ///
    /// Over `Q` the radicand is normalized to a square-free integer and the
    /// extracted square factor is returned as a scale `s`, so that
    /// `sqrt(d_in) = s * sqrt(d_normalized)`. Over `GF(p)` the radicand must be
    /// a verified non-residue. Over other bases construction is rejected
    /// because no non-square test is available.
    pub fn quad_ext(base: &FieldRef, d: &FieldElement) -> Result<(FieldRef, FieldElement), ScalarError> {
        if d.desc != *base {
            return Err(ScalarError::DescriptorMismatch);
        }
        if d.is_zero() {
            return Err(ScalarError::RadicandIsZero);
        }
        match base.as_ref() {
            FieldDescriptor::Rationals => {
                let r = d.as_rational().unwrap();
                let (sqfree, scale) = intsqf::extract_square_part(&r);
                if sqfree.is_one() {
                    return Err(ScalarError::RadicandIsSquare(d.to_string()));
                }
                let dnorm = FieldElement::from_bigint(base, sqfree);
                let desc = Arc::new(FieldDescriptor::QuadExt {
                    base: base.clone(),
                    d: Box::new(dnorm),
                });
                let scale_elem = FieldElement {
                    desc: base.clone(),
                    repr: Repr::Rat(scale),
                };
                Ok((desc, scale_elem))
            }
            FieldDescriptor::PrimeField(_) => {
                if d.sqrt()?.is_some() {
                    return Err(ScalarError::RadicandIsSquare(d.to_string()));
                }
                let desc = Arc::new(FieldDescriptor::QuadExt {
                    base: base.clone(),
                    d: Box::new(d.clone()),
                });
                Ok((desc, FieldElement::one(base)))
            }
            _ => Err(ScalarError::SquareTestUnavailable(base.to_string())),
        }
    }

    pub fn function_field(base: &FieldRef, var: &str) -> FieldRef {
        Arc::new(FieldDescriptor::FunctionField {
            base: base.clone(),
            var: var.to_string(),
        })
    }

    /// Quotient extension `base[var]/(modulus)`.
    ///
    /// The modulus is normalized monic. Degree 2 moduli are checked
    /// irreducible through the discriminant where a square test exists in the
    /// base; other degrees are rejected for lack of a test.
    pub fn quotient_ext(base: &FieldRef, var: &str, modulus: &UPoly) -> Result<FieldRef, ScalarError> {
        if modulus.base() != base {
            return Err(ScalarError::DescriptorMismatch);
        }
        let deg = modulus.degree().unwrap_or(0);
        if deg < 2 {
            return Err(ScalarError::ModulusDegreeTooSmall);
        }
        let monic = modulus.monic()?;
        if deg == 2 {
            // discriminant test: x^2 + px + q irreducible iff p^2 - 4q is a non-square
            let p = monic.coeff(1);
            let q = monic.coeff(0);
            let four = FieldElement::from_i64(base, 4);
            let disc = &(&p * &p) - &(&four * &q);
            match square_test(&disc) {
                Some(is_sq) => {
                    if is_sq {
                        return Err(ScalarError::ReducibleModulus);
                    }
                }
                None => {
                    return Err(ScalarError::IrreducibilityTestUnavailable(deg, base.to_string()));
                }
            }
        } else {
            return Err(ScalarError::IrreducibilityTestUnavailable(deg, base.to_string()));
        }
        Ok(Arc::new(FieldDescriptor::QuotientExt {
            base: base.clone(),
            var: var.to_string(),
            modulus: monic,
        }))
    }

    pub fn base(&self) -> Option<&FieldRef> {
        match self {
            FieldDescriptor::Rationals | FieldDescriptor::PrimeField(_) => None,
            FieldDescriptor::QuadExt { base, .. }
            | FieldDescriptor::FunctionField { base, .. }
            | FieldDescriptor::QuotientExt { base, .. } => Some(base),
        }
    }

    /// Characteristic of the field (0 or p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
            _ => self.base().unwrap().characteristic(),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "QQ"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
            FieldDescriptor::QuadExt { base, d } => write!(f, "{base}(sqrt({d}))"),
            FieldDescriptor::FunctionField { base, var } => write!(f, "{base}({var})"),
            FieldDescriptor::QuotientExt { base, var, modulus } => {
                write!(f, "{base}[{var}]/({})", modulus.display(var))
            }
        }
    }
}

/// Is `x` a square in its own field, where a test exists?
/// Returns `None` when no test is available for the field kind.
fn square_test(x: &FieldElement) -> Option<bool> {
    match x.desc.as_ref() {
        FieldDescriptor::Rationals | FieldDescriptor::PrimeField(_) => {
            Some(x.sqrt().ok().flatten().is_some())
        }
        FieldDescriptor::FunctionField { .. } => x.function_field_sqrt().map(|r| r.is_some()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    /// Reduced fraction, positive denominator (maintained by `Ratio`).
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Mod(u64),
    /// `u + v*sqrt(d)`, components in the base field.
    Quad(Box<FieldElement>, Box<FieldElement>),
    /// Reduced fraction of polynomials over the base: monic denominator,
    /// coprime with the numerator.
    Frac(UPoly, UPoly),
    /// Remainder of degree < deg(modulus).
    Ext(UPoly),
}

/// An element of one field in the tower; always canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    desc: FieldRef,
    repr: Repr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn descriptor(&self) -> &FieldRef {
        &self.desc
    }

    pub fn zero(desc: &FieldRef) -> Self {
        let repr = match desc.as_ref() {
            FieldDescriptor::Rationals => Repr::Rat(BigRational::zero()),
            FieldDescriptor::PrimeField(_) => Repr::Mod(0),
            FieldDescriptor::QuadExt { base, .. } => Repr::Quad(
                Box::new(FieldElement::zero(base)),
                Box::new(FieldElement::zero(base)),
            ),
            FieldDescriptor::FunctionField { base, .. } => {
                Repr::Frac(UPoly::zero(base), UPoly::one(base))
            }
            FieldDescriptor::QuotientExt { base, .. } => Repr::Ext(UPoly::zero(base)),
        };
        FieldElement {
            desc: desc.clone(),
            repr,
        }
    }

    pub fn one(desc: &FieldRef) -> Self {
        Self::from_i64(desc, 1)
    }

    pub fn from_i64(desc: &FieldRef, n: i64) -> Self {
        Self::from_bigint(desc, BigInt::from(n))
    }

    pub fn from_bigint(desc: &FieldRef, n: BigInt) -> Self {
        let repr = match desc.as_ref() {
            FieldDescriptor::Rationals => Repr::Rat(BigRational::from_integer(n)),
            FieldDescriptor::PrimeField(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                Repr::Mod(u64::try_from(r).unwrap())
            }
            FieldDescriptor::QuadExt { base, .. } => Repr::Quad(
                Box::new(FieldElement::from_bigint(base, n)),
                Box::new(FieldElement::zero(base)),
            ),
            FieldDescriptor::FunctionField { base, .. } => Repr::Frac(
                UPoly::constant(FieldElement::from_bigint(base, n)),
                UPoly::one(base),
            ),
            FieldDescriptor::QuotientExt { base, .. } => {
                Repr::Ext(UPoly::constant(FieldElement::from_bigint(base, n)))
            }
        };
        FieldElement {
            desc: desc.clone(),
            repr,
        }
    }

    pub fn from_rational(desc: &FieldRef, r: BigRational) -> Result<Self, ScalarError> {
        match desc.as_ref() {
            FieldDescriptor::Rationals => Ok(FieldElement {
                desc: desc.clone(),
                repr: Repr::Rat(r),
            }),
            FieldDescriptor::PrimeField(_) => {
                let num = FieldElement::from_bigint(desc, r.numer().clone());
                let den = FieldElement::from_bigint(desc, r.denom().clone());
                num.try_div(&den)
            }
            _ => {
                let base = desc.base().expect("extension field has a base");
                let b = FieldElement::from_rational(base, r)?;
                Ok(b.lift_to(desc))
            }
        }
    }

    /// Embed an element of the base field into the extension `desc`
    /// (whose base must be the element's field).
    pub fn lift_to(&self, desc: &FieldRef) -> Self {
        debug_assert_eq!(desc.base(), Some(&self.desc));
        let repr = match desc.as_ref() {
            FieldDescriptor::QuadExt { base, .. } => Repr::Quad(
                Box::new(self.clone()),
                Box::new(FieldElement::zero(base)),
            ),
            FieldDescriptor::FunctionField { base, .. } => {
                if self.is_zero() {
                    Repr::Frac(UPoly::zero(base), UPoly::one(base))
                } else {
                    Repr::Frac(UPoly::constant(self.clone()), UPoly::one(base))
                }
            }
            FieldDescriptor::QuotientExt { .. } => {
                if self.is_zero() {
                    Repr::Ext(UPoly::zero(&self.desc))
                } else {
                    Repr::Ext(UPoly::constant(self.clone()))
                }
            }
            _ => panic!("lift_to target is not an extension"),
        };
        FieldElement {
            desc: desc.clone(),
            repr,
        }
    }

    /// The distinguished generator of an extension field: `sqrt(d)` for a
    /// quadratic extension, the variable for a function field, the class of
    /// the variable for a quotient extension.
    pub fn generator(desc: &FieldRef) -> Result<Self, ScalarError> {
        let repr = match desc.as_ref() {
            FieldDescriptor::QuadExt { base, .. } => Repr::Quad(
                Box::new(FieldElement::zero(base)),
                Box::new(FieldElement::one(base)),
            ),
            FieldDescriptor::FunctionField { base, .. } => {
                Repr::Frac(UPoly::variable(base), UPoly::one(base))
            }
            FieldDescriptor::QuotientExt { base, modulus, .. } => {
                debug_assert!(modulus.degree().unwrap() >= 2);
                Repr::Ext(UPoly::variable(base))
            }
            _ => return Err(ScalarError::UnsupportedField(desc.to_string())),
        };
        Ok(FieldElement {
            desc: desc.clone(),
            repr,
        })
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(m) => *m == 0,
            Repr::Quad(u, v) => u.is_zero() && v.is_zero(),
            Repr::Frac(num, _) => num.is_zero(),
            Repr::Ext(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == FieldElement::one(&self.desc)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(m) => Some(*m),
            _ => None,
        }
    }

    /// Components `(u, v)` of `u + v*sqrt(d)` in a quadratic extension.
    pub fn quad_parts(&self) -> Option<(&FieldElement, &FieldElement)> {
        match &self.repr {
            Repr::Quad(u, v) => Some((u, v)),
            _ => None,
        }
    }

    /// The remainder-polynomial representation in a quotient extension.
    pub fn ext_poly(&self) -> Option<&UPoly> {
        match &self.repr {
            Repr::Ext(p) => Some(p),
            _ => None,
        }
    }

    /// Numerator and denominator in a function field.
    pub fn frac_parts(&self) -> Option<(&UPoly, &UPoly)> {
        match &self.repr {
            Repr::Frac(n, d) => Some((n, d)),
            _ => None,
        }
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement, ScalarError> {
        match op {
            ArithOp::Add => self.try_add(other),
            ArithOp::Sub => self.try_sub(other),
            ArithOp::Mul => self.try_mul(other),
            ArithOp::Div => self.try_div(other),
        }
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), ScalarError> {
        if Arc::ptr_eq(&self.desc, &other.desc) || self.desc == other.desc {
            Ok(())
        } else {
            Err(ScalarError::DescriptorMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.modulus_p();
                Repr::Mod(addmod(*a, *b, p))
            }
            (Repr::Quad(a, b), Repr::Quad(c, d)) => Repr::Quad(
                Box::new(a.try_add(c)?),
                Box::new(b.try_add(d)?),
            ),
            (Repr::Frac(n1, d1), Repr::Frac(n2, d2)) => {
                let num = n1.mul(d2).add(&n2.mul(d1));
                let den = d1.mul(d2);
                return Ok(FieldElement::make_frac(&self.desc, num, den));
            }
            (Repr::Ext(p), Repr::Ext(q)) => Repr::Ext(p.add(q)),
            _ => unreachable!("same descriptor implies same representation kind"),
        };
        Ok(FieldElement {
            desc: self.desc.clone(),
            repr,
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let p = self.modulus_p();
                Repr::Mod(if *a == 0 { 0 } else { p - *a })
            }
            Repr::Quad(a, b) => Repr::Quad(Box::new(a.neg()), Box::new(b.neg())),
            Repr::Frac(n, d) => Repr::Frac(n.neg(), d.clone()),
            Repr::Ext(p) => Repr::Ext(p.neg()),
        };
        FieldElement {
            desc: self.desc.clone(),
            repr,
        }
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.modulus_p();
                Repr::Mod(mulmod(*a, *b, p))
            }
            (Repr::Quad(a, b), Repr::Quad(c, d)) => {
                let dd = self.quad_d();
                // (a + b s)(c + d s) = (ac + bd d) + (ad + bc) s
                let ac = a.try_mul(c)?;
                let bd = b.try_mul(d)?;
                let ad = a.try_mul(d)?;
                let bc = b.try_mul(c)?;
                Repr::Quad(
                    Box::new(ac.try_add(&bd.try_mul(dd)?)?),
                    Box::new(ad.try_add(&bc)?),
                )
            }
            (Repr::Frac(n1, d1), Repr::Frac(n2, d2)) => {
                return Ok(FieldElement::make_frac(&self.desc, n1.mul(n2), d1.mul(d2)));
            }
            (Repr::Ext(p), Repr::Ext(q)) => {
                let modulus = self.ext_modulus();
                Repr::Ext(p.mul(q).rem_by_monic(modulus))
            }
            _ => unreachable!("same descriptor implies same representation kind"),
        };
        Ok(FieldElement {
            desc: self.desc.clone(),
            repr,
        })
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => {
                let p = self.modulus_p();
                Repr::Mod(invmod(*a, p))
            }
            Repr::Quad(a, b) => {
                // 1/(a + b s) = (a - b s) / (a^2 - b^2 d)
                let d = self.quad_d();
                let norm = a.try_mul(a)?.try_sub(&b.try_mul(b)?.try_mul(d)?)?;
                let ninv = norm.inv()?;
                Repr::Quad(
                    Box::new(a.try_mul(&ninv)?),
                    Box::new(b.neg().try_mul(&ninv)?),
                )
            }
            Repr::Frac(n, d) => {
                return Ok(FieldElement::make_frac(&self.desc, d.clone(), n.clone()));
            }
            Repr::Ext(p) => {
                let modulus = self.ext_modulus();
                Repr::Ext(p.inv_mod(modulus)?)
            }
        };
        Ok(FieldElement {
            desc: self.desc.clone(),
            repr,
        })
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut result = FieldElement::one(&self.desc);
        for _ in 0..e {
            result = result.try_mul(self).expect("same field");
        }
        result
    }

    /// A square root in `Q` or `GF(p)` when one exists. Deterministic: the
    /// non-negative root over `Q`, the smaller residue over `GF(p)`.
    pub fn sqrt(&self) -> Result<Option<FieldElement>, ScalarError> {
        match (&*self.desc, &self.repr) {
            (FieldDescriptor::Rationals, Repr::Rat(r)) => {
                if r.is_negative() {
                    return Ok(None);
                }
                let sn = intsqf::perfect_sqrt(r.numer());
                let sd = intsqf::perfect_sqrt(r.denom());
                Ok(match (sn, sd) {
                    (Some(sn), Some(sd)) => Some(FieldElement {
                        desc: self.desc.clone(),
                        repr: Repr::Rat(BigRational::new(sn, sd)),
                    }),
                    _ => None,
                })
            }
            (FieldDescriptor::PrimeField(p), Repr::Mod(a)) => {
                Ok(intsqf::sqrt_mod_p(*a, *p).map(|r| FieldElement {
                    desc: self.desc.clone(),
                    repr: Repr::Mod(r),
                }))
            }
            _ => Err(ScalarError::UnsupportedField(self.desc.to_string())),
        }
    }

    /// Square root inside a function field over a base with a square test.
    /// `None` means not a square, `Some(None)` is not used; outer `None`
    /// means the test is unavailable for the base.
    pub(crate) fn function_field_sqrt(&self) -> Option<Option<FieldElement>> {
        let (num, den) = self.frac_parts()?;
        if num.is_zero() {
            return Some(Some(FieldElement::zero(&self.desc)));
        }
        // num/den = num*den / den^2, so square iff num*den is a square poly
        let prod = num.mul(den);
        match prod.sqrt_poly() {
            None => None, // base square test unavailable
            Some(None) => Some(None),
            Some(Some(root)) => Some(Some(FieldElement::make_frac(
                &self.desc,
                root,
                den.clone(),
            ))),
        }
    }

    fn modulus_p(&self) -> u64 {
        match self.desc.as_ref() {
            FieldDescriptor::PrimeField(p) => *p,
            _ => unreachable!(),
        }
    }

    fn quad_d(&self) -> &FieldElement {
        match self.desc.as_ref() {
            FieldDescriptor::QuadExt { d, .. } => d,
            _ => unreachable!(),
        }
    }

    fn ext_modulus(&self) -> &UPoly {
        match self.desc.as_ref() {
            FieldDescriptor::QuotientExt { modulus, .. } => modulus,
            _ => unreachable!(),
        }
    }

    /// Build a canonical function-field element from a numerator/denominator
    /// pair of polynomials over the base.
    pub fn make_frac(desc: &FieldRef, num: UPoly, den: UPoly) -> FieldElement {
        debug_assert!(matches!(desc.as_ref(), FieldDescriptor::FunctionField { .. }));
        assert!(!den.is_zero(), "zero denominator in function field");
        if num.is_zero() {
            return FieldElement::zero(desc);
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        // make denominator monic
        let lc = den.leading_coeff().unwrap();
        let lci = lc.inv().expect("nonzero leading coefficient");
        let num = num.scale(&lci);
        let den = den.scale(&lci);
        FieldElement {
            desc: desc.clone(),
            repr: Repr::Frac(num, den),
        }
    }

    /// Quadratic-extension element from base parts `u + v*sqrt(d)`.
    pub fn make_quad(desc: &FieldRef, u: FieldElement, v: FieldElement) -> FieldElement {
        debug_assert!(matches!(desc.as_ref(), FieldDescriptor::QuadExt { .. }));
        FieldElement {
            desc: desc.clone(),
            repr: Repr::Quad(Box::new(u), Box::new(v)),
        }
    }

    /// Reduce a polynomial over the base of a quotient extension to the
    /// canonical remainder representative.
    pub fn reduce_in_quotient(poly: &UPoly, desc: &FieldRef) -> Result<FieldElement, ScalarError> {
        let FieldDescriptor::QuotientExt { base, modulus, .. } = desc.as_ref() else {
            return Err(ScalarError::UnsupportedField(desc.to_string()));
        };
        if poly.base() != base {
            return Err(ScalarError::DescriptorMismatch);
        }
        Ok(FieldElement {
            desc: desc.clone(),
            repr: Repr::Ext(poly.rem_by_monic(modulus)),
        })
    }
}

// Operator sugar for reference operands inside a fixed ring context.
// Panics on descriptor mismatch; fallible paths use the try_* methods.
impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("field mismatch in +")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("field mismatch in -")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("field mismatch in *")
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

#[cfg(test)]
mod tests;
