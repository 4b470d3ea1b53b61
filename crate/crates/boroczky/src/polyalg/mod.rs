//! Sparse multivariate polynomial arithmetic over exact fields: division,
//! gcd, resultants, Buchberger Gröbner bases, ideal membership, intersection,
//! product, and elimination.

mod gcd;
mod groebner;
mod ideal;
mod parse;

pub use gcd::{gcd_multivariate, resultant};
pub use groebner::{buchberger, normal_form, BuchbergerOptions};
pub use ideal::{ideal_intersection, ideal_power, ideal_product, IdealPresentation};

use crate::scalar::{FieldDescriptor, FieldElement, FieldRef, ScalarError};
use num::bigint::BigInt;
use num::integer::Integer as _;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("zero divisor in division")]
    ZeroDivisor,
    #[error("zero input")]
    ZeroInput,
    #[error("polynomial does not involve variable {0}")]
    VariableAbsent(String),
    #[error("reduction budget exceeded after {0} steps")]
    ResourceExceeded(u64),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A polynomial ring context: coefficient field plus ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub field: FieldRef,
    pub vars: Vec<String>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new(field: &FieldRef, vars: &[&str]) -> RingRef {
        Arc::new(PolyRing {
            field: field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub type Mono = Vec<u32>;

pub(crate) fn mono_total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub(crate) fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b / a, assuming a | b.
pub(crate) fn mono_div(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub(crate) fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Monomial orders. `Block { elim }` eliminates the first `elim` variables:
/// both blocks are compared by degrevlex, the first block dominating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { elim: usize },
}

fn cmp_degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da = mono_total_degree(a);
    let db = mono_total_degree(b);
    if da != db {
        return da.cmp(&db);
    }
    // larger = smaller exponent in the last position where they differ
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { elim } => {
                let first = cmp_degrevlex(&a[..*elim], &b[..*elim]);
                if first != Ordering::Equal {
                    return first;
                }
                cmp_degrevlex(&a[*elim..], &b[*elim..])
            }
        }
    }
}

/// A sparse multivariate polynomial. Terms are stored sorted descending under
/// degrevlex, with no zero coefficients, which makes the representation
/// canonical for equality and hashing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: RingRef,
    terms: Vec<(Mono, FieldElement)>,
}

impl MultiPoly {
    pub fn zero(ring: &RingRef) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        MultiPoly::constant(ring, FieldElement::one(&ring.field))
    }

    pub fn constant(ring: &RingRef, c: FieldElement) -> Self {
        assert_eq!(c.descriptor(), &ring.field, "constant from wrong field");
        if c.is_zero() {
            return MultiPoly::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(vec![0; ring.num_vars()], c)],
        }
    }

    pub fn from_i64(ring: &RingRef, n: i64) -> Self {
        MultiPoly::constant(ring, FieldElement::from_i64(&ring.field, n))
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        let mut mono = vec![0; ring.num_vars()];
        mono[index] = 1;
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(mono, FieldElement::one(&ring.field))],
        }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self, PolyError> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(MultiPoly::var(ring, idx))
    }

    /// From unsorted term list; combines duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Mono, FieldElement)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = &last.1 + &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| mono_total_degree(m) == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| mono_total_degree(m)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m[var]).max()
    }

    pub fn coefficient(&self, mono: &[u32]) -> FieldElement {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| FieldElement::zero(&self.ring.field))
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other).expect("ring mismatch in +");
        // merge two grevlex-descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match MonomialOrder::DegRevLex.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul_term(&self, mono: &[u32], coef: &FieldElement) -> MultiPoly {
        if coef.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono_mul(m, mono), c * coef))
                .collect(),
        }
    }

    pub fn scale(&self, coef: &FieldElement) -> MultiPoly {
        self.mul_term(&vec![0; self.ring.num_vars()], coef)
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other).expect("ring mismatch in *");
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((mono_mul(m1, m2), c1 * c2));
            }
        }
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Mono, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Term list sorted descending under `order` (clones).
    pub(crate) fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Mono, FieldElement)> {
        let mut ts = self.terms.clone();
        ts.sort_by(|a, b| order.cmp(&b.0, &a.0));
        ts
    }

    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Mono, FieldElement)>) -> MultiPoly {
        MultiPoly::from_terms(ring, terms)
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            let factor = FieldElement::from_i64(&self.ring.field, m[var] as i64);
            terms.push((m2, c * &factor));
        }
        MultiPoly::from_terms(&self.ring, terms)
    }

    /// Evaluate at field elements, embedding coefficients through `embed`.
    pub fn eval_map(
        &self,
        values: &[FieldElement],
        embed: &dyn Fn(&FieldElement) -> FieldElement,
    ) -> FieldElement {
        assert_eq!(values.len(), self.ring.num_vars());
        let target = if values.is_empty() {
            embed(&FieldElement::zero(&self.ring.field)).descriptor().clone()
        } else {
            values[0].descriptor().clone()
        };
        let mut acc = FieldElement::zero(&target);
        for (m, c) in &self.terms {
            let mut t = embed(c);
            for (v, e) in values.iter().zip(m) {
                if *e > 0 {
                    t = &t * &v.pow(*e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Evaluate at elements of the coefficient field itself.
    pub fn eval(&self, values: &[FieldElement]) -> FieldElement {
        self.eval_map(values, &|c| c.clone())
    }

    /// Over Q: clear denominators, divide by the numerator gcd, and make the
    /// degrevlex-leading coefficient positive. Over other fields: make the
    /// degrevlex-leading coefficient 1. The result generates the same ideal.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        match self.ring.field.as_ref() {
            FieldDescriptor::Rationals => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for (_, c) in &self.terms {
                    let r = c.as_rational().unwrap();
                    den_lcm = den_lcm.lcm(r.denom());
                    num_gcd = num_gcd.gcd(r.numer());
                }
                let mut factor = BigRational::new(den_lcm, num_gcd);
                let lead_sign = self.terms[0].1.as_rational().unwrap().is_negative();
                if lead_sign != factor.is_negative() {
                    factor = -factor;
                }
                let f = FieldElement::from_rational(&self.ring.field, factor).unwrap();
                self.scale(&f)
            }
            _ => {
                let lc = self.terms[0].1.clone();
                self.scale(&lc.inv().expect("nonzero leading coefficient"))
            }
        }
    }

    /// Integer coefficients of a normalized Q-polynomial.
    pub(crate) fn integer_coeffs(&self) -> Option<Vec<(&Mono, BigInt)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let r = c.as_rational()?;
            if !r.denom().is_one() {
                return None;
            }
            out.push((m, r.numer().clone()));
        }
        Some(out)
    }

    /// Reduce a primitive-integer Q-polynomial modulo p into `ring_p`.
    /// Returns `None` when the reduction drops the degrevlex leading term
    /// (an unlucky prime for this polynomial).
    pub fn reduce_mod_p(&self, ring_p: &RingRef) -> Option<MultiPoly> {
        let FieldDescriptor::PrimeField(_) = ring_p.field.as_ref() else {
            return None;
        };
        let ints = self.normalized().integer_coeffs()?;
        let lead = ints.first().map(|(m, _)| (*m).clone());
        let mut terms = Vec::with_capacity(ints.len());
        for (m, n) in ints {
            let c = FieldElement::from_bigint(&ring_p.field, n);
            if !c.is_zero() {
                terms.push((m.clone(), c));
            }
        }
        let poly = MultiPoly::from_terms(ring_p, terms);
        match (lead, poly.terms.first()) {
            (Some(lm), Some((pm, _))) if lm == *pm => Some(poly),
            (None, None) => Some(poly),
            _ => None,
        }
    }
}

/// Multivariate division with remainder: `f = sum q_i d_i + r` where no term
/// of `r` is divisible by any divisor's leading term under `order`.
pub fn divide(
    f: &MultiPoly,
    divisors: &[MultiPoly],
    order: MonomialOrder,
) -> Result<(Vec<MultiPoly>, MultiPoly), PolyError> {
    for d in divisors {
        if d.ring() != f.ring() {
            return Err(PolyError::RingMismatch);
        }
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
    }
    let ring = f.ring().clone();
    let leads: Vec<(Mono, FieldElement)> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    let mut quotients = vec![MultiPoly::zero(&ring); divisors.len()];
    let mut remainder: Vec<(Mono, FieldElement)> = Vec::new();
    let mut work = f.sorted_terms(order);
    while let Some((m, c)) = work.first().cloned() {
        let mut reduced = false;
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if mono_divides(lm, &m) {
                let qm = mono_div(&m, lm);
                let qc = c.try_div(lc)?;
                quotients[i] = quotients[i].add(&MultiPoly::from_terms(
                    &ring,
                    vec![(qm.clone(), qc.clone())],
                ));
                let sub = divisors[i].mul_term(&qm, &qc);
                work = merge_sub(work, sub.sorted_terms(order), order);
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.push((m, c));
            work.remove(0);
        }
    }
    Ok((quotients, MultiPoly::from_sorted(&ring, remainder)))
}

/// a - b on order-sorted term lists.
pub(crate) fn merge_sub(
    a: Vec<(Mono, FieldElement)>,
    b: Vec<(Mono, FieldElement)>,
    order: MonomialOrder,
) -> Vec<(Mono, FieldElement)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), b[j].1.neg()));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 - &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), c.neg())));
    out
}

/// Exact division: panics if not divisible (used where divisibility is an
/// invariant, e.g. Bareiss elimination).
pub fn exact_div(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (q, r) = divide(f, std::slice::from_ref(g), MonomialOrder::DegRevLex)
        .expect("exact_div preconditions");
    assert!(r.is_zero(), "inexact polynomial division");
    q.into_iter().next().unwrap()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::format_multipoly(self))
    }
}

#[cfg(test)]
mod tests;
