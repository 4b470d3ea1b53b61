//! Dense univariate polynomials over a scalar field, the workhorse behind
//! function fields and quotient extensions.

use super::{FieldElement, FieldRef, ScalarError};
use std::fmt::Write as _;

/// Coefficients ascending by degree, no trailing zeros, all in `base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    base: FieldRef,
    coeffs: Vec<FieldElement>,
}

impl UPoly {
    pub fn zero(base: &FieldRef) -> Self {
        UPoly {
            base: base.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(base: &FieldRef) -> Self {
        UPoly::constant(FieldElement::one(base))
    }

    pub fn constant(c: FieldElement) -> Self {
        let base = c.descriptor().clone();
        if c.is_zero() {
            UPoly {
                base,
                coeffs: Vec::new(),
            }
        } else {
            UPoly {
                base,
                coeffs: vec![c],
            }
        }
    }

    pub fn variable(base: &FieldRef) -> Self {
        UPoly {
            base: base.clone(),
            coeffs: vec![FieldElement::zero(base), FieldElement::one(base)],
        }
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(base: &FieldRef, coeffs: Vec<FieldElement>) -> Self {
        let mut p = UPoly {
            base: base.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.base))
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &other.coeff(i));
        }
        UPoly::from_coeffs(&self.base, out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> UPoly {
        if s.is_zero() {
            return UPoly::zero(&self.base);
        }
        UPoly {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.base);
        }
        let mut out = vec![FieldElement::zero(&self.base); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::from_coeffs(&self.base, out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::zero(&self.base); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly {
            base: self.base.clone(),
            coeffs,
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &UPoly) -> Result<(UPoly, UPoly), ScalarError> {
        if div.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let dlc = div.leading_coeff().unwrap().inv()?;
        let dd = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = UPoly::zero(&self.base);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = &rem.coeff(rd) * &dlc;
            let t = UPoly::constant(c).shift(rd - dd);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(div));
        }
        Ok((quo, rem))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_by_monic(&self, modulus: &UPoly) -> UPoly {
        self.divrem(modulus).expect("monic modulus is nonzero").1
    }

    /// Exact division; panics when not divisible (internal invariant).
    pub fn div_exact(&self, div: &UPoly) -> UPoly {
        let (q, r) = self.divrem(div).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `gcd(0, g) = monic(g)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero polynomial")
        }
    }

    pub fn monic(&self) -> Result<UPoly, ScalarError> {
        let lc = self.leading_coeff().ok_or(ScalarError::DivisionByZero)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Inverse modulo a monic modulus, by the extended Euclidean algorithm.
    pub fn inv_mod(&self, modulus: &UPoly) -> Result<UPoly, ScalarError> {
        // maintain r0 = s0 * self (mod modulus)
        let mut r0 = modulus.clone();
        let mut r1 = self.rem_by_monic(modulus);
        let mut s0 = UPoly::zero(&self.base);
        let mut s1 = UPoly::one(&self.base);
        if r1.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            // gcd not a unit: the modulus is reducible and self is a zero divisor
            return Err(ScalarError::DivisionByZero);
        }
        let c = r0.coeff(0).inv()?;
        Ok(s0.scale(&c).rem_by_monic(modulus))
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&self.base);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero(&self.base);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &FieldElement::from_i64(&self.base, i as i64))
            .collect();
        UPoly::from_coeffs(&self.base, coeffs)
    }

    /// Exact polynomial square root, when the base supports a square test.
    /// Outer `None`: no test available. Inner `None`: not a square.
    pub fn sqrt_poly(&self) -> Option<Option<UPoly>> {
        if self.is_zero() {
            return Some(Some(self.clone()));
        }
        let deg = self.degree().unwrap();
        if deg % 2 != 0 {
            return Some(None);
        }
        let lc = self.leading_coeff().unwrap();
        let s = match lc.sqrt() {
            Err(_) => return None,
            Ok(None) => return Some(None),
            Ok(Some(s)) => s,
        };
        let half = deg / 2;
        let mut q = UPoly::constant(s.clone()).shift(half);
        let two_s = &s + &s;
        // peel coefficients from the top: each step fixes one more coefficient
        for _ in 0..half {
            let r = self.sub(&q.mul(&q));
            let Some(rd) = r.degree() else {
                return Some(Some(q));
            };
            if rd < half {
                return Some(None);
            }
            let t = r.coeff(rd).try_div(&two_s).expect("nonzero");
            q = q.add(&UPoly::constant(t).shift(rd - half));
        }
        if self.sub(&q.mul(&q)).is_zero() {
            Some(Some(q))
        } else {
            Some(None)
        }
    }

    /// Render with the given variable name, descending powers.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (neg, mag) = super::parse::split_sign(&cs);
            // a nested coefficient that is itself a sum must be parenthesized
            let needs_parens = super::parse::top_level_ops(&mag).1;
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = if needs_parens {
                format!("({mag})")
            } else {
                mag
            };
            let is_one = coeff_str == "1";
            match (i, is_one) {
                (0, _) => out.push_str(&coeff_str),
                (1, true) => out.push_str(var),
                (1, false) => {
                    let _ = write!(out, "{coeff_str}*{var}");
                }
                (_, true) => {
                    let _ = write!(out, "{var}^{i}");
                }
                (_, false) => {
                    let _ = write!(out, "{coeff_str}*{var}^{i}");
                }
            }
        }
        out
    }
}
