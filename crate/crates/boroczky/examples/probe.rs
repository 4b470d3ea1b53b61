use boroczky::scalar::*;
use boroczky::testutil::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let q = FieldDescriptor::rationals();
    let fa = FieldDescriptor::function_field(&q, "a");
    let a = FieldElement::generator(&fa).unwrap();
    let one = FieldElement::one(&fa);
    let c2 = (&(&one - &a)) - (&a.pow(2));
    let c1 = (&a.pow(4)) + (&a.pow(2));
    let c0 = (&a.pow(3)).neg();
    let f = UPoly::from_coeffs(&fa, vec![c0, c1, c2]);
    let desc = FieldDescriptor::quotient_ext(&fa, "b", &f).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let x = random_element(&mut rng, &desc, 6);
        let s = x.to_string();
        match FieldElement::parse(&desc, &s) {
            Ok(back) => {
                if back != x {
                    println!("MISMATCH: printed {s:?}");
                    println!("  orig {x}");
                    println!("  back {back}");
                    return;
                }
            }
            Err(e) => { println!("PARSE ERROR: {s:?} -> {e}"); return; }
        }
    }
    println!("all ok");
}
