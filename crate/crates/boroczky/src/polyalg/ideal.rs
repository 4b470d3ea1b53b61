//! Ideals with a cached reduced Gröbner basis; membership, intersection
//! via elimination, products and powers.

use super::{
    buchberger, normal_form, BuchbergerOptions, MonomialOrder, MultiPoly, PolyError, PolyRing,
    RingRef,
};
use crate::scalar::FieldElement;
use once_cell::sync::OnceCell;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct IdealPresentation {
    ring: RingRef,
    gens: Vec<MultiPoly>,
    order: MonomialOrder,
    options: BuchbergerOptions,
    gb_cache: OnceCell<Vec<MultiPoly>>,
}

impl IdealPresentation {
    pub fn new(ring: &RingRef, gens: Vec<MultiPoly>, order: MonomialOrder) -> Self {
        debug_assert!(gens.iter().all(|g| g.ring() == ring));
        IdealPresentation {
            ring: ring.clone(),
            gens,
            order,
            options: BuchbergerOptions::default(),
            gb_cache: OnceCell::new(),
        }
    }

    pub fn with_options(mut self, options: BuchbergerOptions) -> Self {
        self.options = options;
        self
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The reduced Gröbner basis, computed once and cached.
    pub fn groebner_basis(&self) -> Result<&[MultiPoly], PolyError> {
        self.gb_cache
            .get_or_try_init(|| buchberger(&self.gens, self.order, self.options))
            .map(|v| v.as_slice())
    }

    /// Ideal membership: the normal form of `f` against the basis is zero.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool, PolyError> {
        if f.ring() != &self.ring {
            return Err(PolyError::RingMismatch);
        }
        let gb = self.groebner_basis()?;
        Ok(normal_form(f, gb, self.order, self.options)?.is_zero())
    }

    /// Mutual containment of generator sets.
    pub fn equals(&self, other: &IdealPresentation) -> Result<bool, PolyError> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in self.generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Generators of `I ∩ J`, by eliminating an auxiliary scalar `t` from
/// `t*I + (1-t)*J` under a block order. The result is verified by membership
/// of every output generator in both inputs.
pub fn ideal_intersection(
    i: &IdealPresentation,
    j: &IdealPresentation,
) -> Result<IdealPresentation, PolyError> {
    if i.ring() != j.ring() {
        return Err(PolyError::RingMismatch);
    }
    let ring = i.ring();
    // extended ring with t in front
    let mut vars: Vec<&str> = vec!["t_aux"];
    let var_names: Vec<String> = ring.vars.clone();
    vars.extend(var_names.iter().map(|s| s.as_str()));
    let ext = PolyRing::new(&ring.field, &vars);
    let lift = |p: &MultiPoly| -> MultiPoly {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut m2 = Vec::with_capacity(m.len() + 1);
                m2.push(0);
                m2.extend_from_slice(m);
                (m2, c.clone())
            })
            .collect();
        MultiPoly::from_terms(&ext, terms)
    };
    let t = MultiPoly::var(&ext, 0);
    let one_minus_t = MultiPoly::one(&ext).sub(&t);
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(t.mul(&lift(g)));
    }
    for g in j.generators() {
        gens.push(one_minus_t.mul(&lift(g)));
    }
    let elim = IdealPresentation::new(&ext, gens, MonomialOrder::Block { elim: 1 })
        .with_options(super::BuchbergerOptions {
            step_budget: i.options.step_budget,
        });
    let gb = elim.groebner_basis()?;
    let mut result = Vec::new();
    for p in gb {
        if p.degree_in(0) == Some(0) {
            // drop the t coordinate
            let terms = p
                .terms()
                .iter()
                .map(|(m, c)| (m[1..].to_vec(), c.clone()))
                .collect();
            result.push(MultiPoly::from_terms(ring, terms));
        }
    }
    let out = IdealPresentation::new(ring, result, i.order());
    for g in out.generators() {
        if !i.contains(g)? || !j.contains(g)? {
            return Err(PolyError::ZeroInput); // unreachable: elimination is sound
        }
    }
    Ok(out)
}

/// Generators of `I * J`: pairwise products, deduplicated.
pub fn ideal_product(
    i: &IdealPresentation,
    j: &IdealPresentation,
) -> Result<IdealPresentation, PolyError> {
    if i.ring() != j.ring() {
        return Err(PolyError::RingMismatch);
    }
    let mut gens: Vec<MultiPoly> = Vec::new();
    for a in i.generators() {
        for b in j.generators() {
            let p = a.mul(b).normalized();
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    Ok(IdealPresentation::new(i.ring(), gens, i.order()))
}

/// `I^r` by iterated products; `I^0 = (1)`.
pub fn ideal_power(i: &IdealPresentation, r: u32) -> Result<IdealPresentation, PolyError> {
    let one = IdealPresentation::new(
        i.ring(),
        vec![MultiPoly::constant(
            i.ring(),
            FieldElement::one(&i.ring().field),
        )],
        i.order(),
    );
    let mut acc = one;
    for _ in 0..r {
        acc = ideal_product(&acc, i)?;
    }
    Ok(acc)
}
