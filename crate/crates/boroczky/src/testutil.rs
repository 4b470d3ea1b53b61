//! Random-element generators shared by property tests and benches.

use crate::scalar::{FieldDescriptor, FieldElement, FieldRef, UPoly};
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;

/// A random nonzero-denominator rational with small numerator/denominator.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A random element of any tower field, built bottom-up.
pub fn random_element<R: Rng>(rng: &mut R, desc: &FieldRef, bound: i64) -> FieldElement {
    match desc.as_ref() {
        FieldDescriptor::Rationals => {
            FieldElement::from_rational(desc, random_rational(rng, bound)).unwrap()
        }
        FieldDescriptor::PrimeField(p) => {
            FieldElement::from_i64(desc, rng.gen_range(0..*p) as i64)
        }
        FieldDescriptor::QuadExt { base, .. } => {
            let u = random_element(rng, base, bound);
            let v = random_element(rng, base, bound);
            FieldElement::make_quad(desc, u, v)
        }
        FieldDescriptor::FunctionField { base, .. } => {
            let num = random_upoly(rng, base, 2, bound);
            let mut den = random_upoly(rng, base, 2, bound);
            while den.is_zero() {
                den = random_upoly(rng, base, 2, bound);
            }
            FieldElement::make_frac(desc, num, den)
        }
        FieldDescriptor::QuotientExt { base, modulus, .. } => {
            let deg = modulus.degree().unwrap();
            let p = random_upoly(rng, base, deg - 1, bound);
            FieldElement::reduce_in_quotient(&p, desc).unwrap()
        }
    }
}

/// A random nonzero element.
pub fn random_nonzero<R: Rng>(rng: &mut R, desc: &FieldRef, bound: i64) -> FieldElement {
    loop {
        let x = random_element(rng, desc, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random polynomial of degree <= max_degree over `base`.
pub fn random_upoly<R: Rng>(rng: &mut R, base: &FieldRef, max_degree: usize, bound: i64) -> UPoly {
    let deg = rng.gen_range(0..=max_degree);
    let coeffs = (0..=deg)
        .map(|_| random_element(rng, base, bound))
        .collect();
    UPoly::from_coeffs(base, coeffs)
}
