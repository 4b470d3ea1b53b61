use super::*;
use crate::testutil::{random_element, random_nonzero, random_upoly};
use num::rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn qq() -> FieldRef {
    FieldDescriptor::rationals()
}

fn rat(p: i64, q: i64) -> FieldElement {
    FieldElement::from_rational(&qq(), BigRational::new(BigInt::from(p), BigInt::from(q))).unwrap()
}

#[test]
fn rational_arithmetic() {
    // 2/3 + 1/6 = 5/6
    assert_eq!(rat(2, 3).try_add(&rat(1, 6)).unwrap(), rat(5, 6));
    assert_eq!(rat(2, 3).arith(&rat(1, 6), ArithOp::Add).unwrap(), rat(5, 6));
    assert!(rat(1, 1).try_div(&rat(0, 1)).is_err());
}

#[test]
fn prime_field_arithmetic() {
    let f7 = FieldDescriptor::prime_field(7).unwrap();
    let three = FieldElement::from_i64(&f7, 3);
    let five = FieldElement::from_i64(&f7, 5);
    // 3 / 5 = 2 in GF(7)
    assert_eq!(three.try_div(&five).unwrap(), FieldElement::from_i64(&f7, 2));
    assert!(FieldDescriptor::prime_field(6).is_err());
}

#[test]
fn descriptor_mismatch_detected() {
    let f7 = FieldDescriptor::prime_field(7).unwrap();
    let a = FieldElement::from_i64(&f7, 3);
    assert_eq!(
        rat(1, 2).try_add(&a).unwrap_err(),
        ScalarError::DescriptorMismatch
    );
}

#[test]
fn quadratic_extension_product() {
    // QQ(sqrt(15)): (2 + (2/5) s)(2 - (2/5) s) = 4 - (4/25)*15 = 8/5
    let (desc, scale) = FieldDescriptor::quad_ext(&qq(), &rat(15, 1)).unwrap();
    assert!(scale.is_one());
    let s = FieldElement::generator(&desc).unwrap();
    let two = FieldElement::from_i64(&desc, 2);
    let coef = rat(2, 5).lift_to(&desc);
    let b = two.try_add(&coef.try_mul(&s).unwrap()).unwrap();
    let bbar = two.try_sub(&coef.try_mul(&s).unwrap()).unwrap();
    let prod = b.try_mul(&bbar).unwrap();
    assert_eq!(prod, rat(8, 5).lift_to(&desc));
}

#[test]
fn quad_ext_normalizes_radicand() {
    // sqrt(240) = 4 sqrt(15)
    let (desc, scale) = FieldDescriptor::quad_ext(&qq(), &rat(240, 1)).unwrap();
    let FieldDescriptor::QuadExt { d, .. } = desc.as_ref() else {
        panic!()
    };
    assert_eq!(**d, rat(15, 1));
    assert_eq!(scale, rat(4, 1));
    // squares are rejected
    assert!(FieldDescriptor::quad_ext(&qq(), &rat(9, 4)).is_err());
    assert!(FieldDescriptor::quad_ext(&qq(), &rat(0, 1)).is_err());
    // negative radicands normalize with the sign kept on the square-free part
    let (desc, scale) = FieldDescriptor::quad_ext(&qq(), &rat(-8, 1)).unwrap();
    let FieldDescriptor::QuadExt { d, .. } = desc.as_ref() else {
        panic!()
    };
    assert_eq!(**d, rat(-2, 1));
    assert_eq!(scale, rat(2, 1));
}

#[test]
fn square_roots() {
    assert_eq!(rat(240, 1).sqrt().unwrap(), None);
    assert_eq!(rat(9, 4).sqrt().unwrap(), Some(rat(3, 2)));
    assert_eq!(rat(-4, 1).sqrt().unwrap(), None);
    let f13 = FieldDescriptor::prime_field(13).unwrap();
    let ten = FieldElement::from_i64(&f13, 10);
    assert_eq!(ten.sqrt().unwrap(), Some(FieldElement::from_i64(&f13, 6)));
    let two = FieldElement::from_i64(&f13, 2);
    assert_eq!(two.sqrt().unwrap(), None);
    // unsupported beyond Q and GF(p)
    let fa = FieldDescriptor::function_field(&qq(), "a");
    assert!(FieldElement::one(&fa).sqrt().is_err());
}

/// QQ(a)[b]/(f) with f the quadratic-in-b parameter polynomial.
fn b15_quotient() -> (FieldRef, FieldRef) {
    let fa = FieldDescriptor::function_field(&qq(), "a");
    let a = FieldElement::generator(&fa).unwrap();
    let one = FieldElement::one(&fa);
    // f = (1 - a - a^2) b^2 + (a^4 + a^2) b - a^3
    let c2 = &(&one - &a) - &a.pow(2);
    let c1 = &a.pow(4) + &a.pow(2);
    let c0 = -&a.pow(3);
    let f = UPoly::from_coeffs(&fa, vec![c0, c1, c2]);
    let desc = FieldDescriptor::quotient_ext(&fa, "b", &f).unwrap();
    (fa, desc)
}

#[test]
fn quotient_extension_reduction() {
    let (fa, desc) = b15_quotient();
    let FieldDescriptor::QuotientExt { modulus, .. } = desc.as_ref() else {
        panic!()
    };
    // the defining polynomial reduces to zero
    let r = FieldElement::reduce_in_quotient(modulus, &desc).unwrap();
    assert!(r.is_zero());
    // inputs of degree < 2 are already reduced
    let low = UPoly::from_coeffs(&fa, vec![FieldElement::one(&fa), FieldElement::generator(&fa).unwrap()]);
    let r = FieldElement::reduce_in_quotient(&low, &desc).unwrap();
    assert_eq!(r.ext_poly().unwrap(), &low);
    // b^3 reduces to degree <= 1, and the division identity b^3 = q*f + r holds
    let b3 = UPoly::variable(&fa).mul(&UPoly::variable(&fa)).mul(&UPoly::variable(&fa));
    let r = FieldElement::reduce_in_quotient(&b3, &desc).unwrap();
    let rp = r.ext_poly().unwrap();
    assert!(rp.degree().unwrap_or(0) <= 1);
    let (q, r2) = b3.divrem(modulus).unwrap();
    assert_eq!(&r2, rp);
    assert_eq!(q.mul(modulus).add(&r2), b3);
}

#[test]
fn quotient_rejects_reducible() {
    // b^2 - a^2 is reducible over QQ(a)
    let fa = FieldDescriptor::function_field(&qq(), "a");
    let a = FieldElement::generator(&fa).unwrap();
    let m = UPoly::from_coeffs(
        &fa,
        vec![-&a.pow(2), FieldElement::zero(&fa), FieldElement::one(&fa)],
    );
    assert!(matches!(
        FieldDescriptor::quotient_ext(&fa, "b", &m),
        Err(ScalarError::ReducibleModulus)
    ));
}

fn test_fields() -> Vec<FieldRef> {
    let q = qq();
    let f13 = FieldDescriptor::prime_field(13).unwrap();
    let (q15, _) = FieldDescriptor::quad_ext(&q, &rat(15, 1)).unwrap();
    let fa = FieldDescriptor::function_field(&q, "a");
    let (_, quot) = b15_quotient();
    vec![q, f13, q15, fa, quot]
}

#[test]
fn field_axioms_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for desc in test_fields() {
        for _ in 0..40 {
            let x = random_element(&mut rng, &desc, 6);
            let y = random_element(&mut rng, &desc, 6);
            let z = random_element(&mut rng, &desc, 6);
            let assoc_l = x.try_add(&y).unwrap().try_add(&z).unwrap();
            let assoc_r = x.try_add(&y.try_add(&z).unwrap()).unwrap();
            assert_eq!(assoc_l, assoc_r);
            assert_eq!(x.try_mul(&y).unwrap(), y.try_mul(&x).unwrap());
            let dist_l = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            let dist_r = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
            assert_eq!(dist_l, dist_r);
            let nz = random_nonzero(&mut rng, &desc, 6);
            assert!(nz.try_mul(&nz.inv().unwrap()).unwrap().is_one());
        }
    }
}

#[test]
fn text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for desc in test_fields() {
        for _ in 0..40 {
            let x = random_element(&mut rng, &desc, 6);
            let s = x.to_string();
            let back = FieldElement::parse(&desc, &s)
                .unwrap_or_else(|e| panic!("parse {s:?} in {desc}: {e}"));
            assert_eq!(back, x, "round trip failed for {s:?} in {desc}");
        }
    }
}

#[test]
fn quotient_reduce_ignores_multiples() {
    let (fa, desc) = b15_quotient();
    let FieldDescriptor::QuotientExt { modulus, .. } = desc.as_ref() else {
        panic!()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let g = random_upoly(&mut rng, &fa, 2, 4);
        let r = random_upoly(&mut rng, &fa, 1, 4);
        let lhs = FieldElement::reduce_in_quotient(&modulus.mul(&g).add(&r), &desc).unwrap();
        let rhs = FieldElement::reduce_in_quotient(&r, &desc).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn parse_plain_fractions() {
    assert_eq!(FieldElement::parse(&qq(), "5/6").unwrap(), rat(5, 6));
    assert_eq!(FieldElement::parse(&qq(), "-7").unwrap(), rat(-7, 1));
    assert!(FieldElement::parse(&qq(), "2 + ").is_err());
    assert!(FieldElement::parse(&qq(), "x").is_err());
}
