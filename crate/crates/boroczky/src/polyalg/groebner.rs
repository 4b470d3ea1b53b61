//! Buchberger's algorithm with the coprimality and chain criteria, normal
//! pair selection, and a reduction-step budget.
//!
//! Over Q all intermediate polynomials are kept primitive with integer
//! coefficients and reduction is fraction-free; over GF(p) reduction divides
//! by leading coefficients directly.

use super::{
    merge_sub, mono_coprime, mono_div, mono_divides, mono_lcm, mono_total_degree, MonomialOrder,
    Mono, MultiPoly, PolyError, RingRef,
};
use crate::scalar::{FieldDescriptor, FieldElement};
use num::bigint::BigInt;
use num::integer::Integer as _;
use num::rational::BigRational;
use num::One;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy)]
pub struct BuchbergerOptions {
    /// Maximum number of single reduction steps before aborting.
    pub step_budget: u64,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            step_budget: 10_000_000,
        }
    }
}

struct Reducer {
    over_q: bool,
    steps: u64,
    budget: u64,
}

impl Reducer {
    fn new(ring: &RingRef, budget: u64) -> Self {
        Reducer {
            over_q: matches!(ring.field.as_ref(), FieldDescriptor::Rationals),
            steps: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<(), PolyError> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(PolyError::ResourceExceeded(self.steps))
        } else {
            Ok(())
        }
    }

    /// Full normal form of `f` against `basis` (leading terms precomputed).
    /// Over Q the result is a primitive integer polynomial that differs from
    /// the field normal form by a nonzero rational factor, which is all the
    /// callers need (zero tests, new basis elements).
    fn normal_form(
        &mut self,
        f: &MultiPoly,
        basis: &[MultiPoly],
        leads: &[(Mono, FieldElement)],
        order: MonomialOrder,
    ) -> Result<MultiPoly, PolyError> {
        let ring = f.ring().clone();
        let mut work = f.sorted_terms(order);
        let mut out: Vec<(Mono, FieldElement)> = Vec::new();
        'outer: while let Some((m, c)) = work.first().cloned() {
            for (i, (lm, lc)) in leads.iter().enumerate() {
                if mono_divides(lm, &m) {
                    self.tick()?;
                    let qm = mono_div(&m, lm);
                    if self.over_q {
                        // fraction-free: (lc/g) * work - (c/g) * x^qm * basis[i]
                        let cr = c.as_rational().unwrap();
                        let lr = lc.as_rational().unwrap();
                        debug_assert!(cr.denom().is_one() && lr.denom().is_one());
                        let g = cr.numer().gcd(lr.numer());
                        let scale = FieldElement::from_rational(
                            &ring.field,
                            BigRational::from_integer(lr.numer() / &g),
                        )
                        .unwrap();
                        let mult = FieldElement::from_rational(
                            &ring.field,
                            BigRational::from_integer(cr.numer() / &g),
                        )
                        .unwrap();
                        if !scale.is_one() {
                            for t in work.iter_mut() {
                                t.1 = &t.1 * &scale;
                            }
                            for t in out.iter_mut() {
                                t.1 = &t.1 * &scale;
                            }
                        }
                        let sub = basis[i].mul_term(&qm, &mult);
                        work = merge_sub(work, sub.sorted_terms(order), order);
                    } else {
                        let qc = c.try_div(lc)?;
                        let sub = basis[i].mul_term(&qm, &qc);
                        work = merge_sub(work, sub.sorted_terms(order), order);
                    }
                    continue 'outer;
                }
            }
            out.push((m, c));
            work.remove(0);
        }
        let mut r = MultiPoly::from_sorted(&ring, out);
        if self.over_q && !r.is_zero() {
            r = r.normalized();
        }
        Ok(r)
    }
}

/// S-polynomial, fraction-free over Q.
fn s_poly(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder, over_q: bool) -> MultiPoly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = mono_lcm(fm, gm);
    if over_q {
        let fr = fc.as_rational().unwrap().numer().clone();
        let gr = gc.as_rational().unwrap().numer().clone();
        let d = fr.gcd(&gr);
        let cf = big(&gr / &d, f.ring());
        let cg = big(&fr / &d, f.ring());
        f.mul_term(&mono_div(&l, fm), &cf)
            .sub(&g.mul_term(&mono_div(&l, gm), &cg))
    } else {
        let cf = fc.inv().unwrap();
        let cg = gc.inv().unwrap();
        f.mul_term(&mono_div(&l, fm), &cf)
            .sub(&g.mul_term(&mono_div(&l, gm), &cg))
    }
}

fn big(n: BigInt, ring: &RingRef) -> FieldElement {
    FieldElement::from_bigint(&ring.field, n)
}

/// Reduced Gröbner basis of the given generators under `order`.
///
/// Deterministic: pairs are selected by (lcm degree, lcm order, indices), and
/// the final basis is interreduced, made monic, and sorted by leading term.
pub fn buchberger(
    gens: &[MultiPoly],
    order: MonomialOrder,
    options: BuchbergerOptions,
) -> Result<Vec<MultiPoly>, PolyError> {
    let gens: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let ring = gens[0].ring().clone();
    for g in &gens {
        if g.ring() != &ring {
            return Err(PolyError::RingMismatch);
        }
    }
    let over_q = matches!(ring.field.as_ref(), FieldDescriptor::Rationals);
    let mut reducer = Reducer::new(&ring, options.step_budget);

    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut leads: Vec<(Mono, FieldElement)> = Vec::new();
    let mut push = |p: MultiPoly, basis: &mut Vec<MultiPoly>, leads: &mut Vec<(Mono, FieldElement)>| {
        let (m, c) = p.leading_term(order).unwrap();
        leads.push((m.clone(), c.clone()));
        basis.push(p);
    };
    // seed with normalized generators, dropping exact duplicates
    for g in &gens {
        let n = g.normalized();
        if !basis.contains(&n) {
            push(n, &mut basis, &mut leads);
        }
    }

    // pending pairs (i < j)
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    // normal selection strategy with a value-level tie break, so the choice
    // does not depend on the pair list's internal order
    let pair_key = |pairs: &[(usize, usize)], leads: &[(Mono, FieldElement)]| -> usize {
        let mut best = 0;
        for (idx, (i, j)) in pairs.iter().enumerate().skip(1) {
            let l = mono_lcm(&leads[*i].0, &leads[*j].0);
            let (bi, bj) = pairs[best];
            let lb = mono_lcm(&leads[bi].0, &leads[bj].0);
            let c = match mono_total_degree(&l).cmp(&mono_total_degree(&lb)) {
                Ordering::Equal => order.cmp(&l, &lb),
                other => other,
            };
            if c == Ordering::Less || (c == Ordering::Equal && (*i, *j) < (bi, bj)) {
                best = idx;
            }
        }
        best
    };

    while !pairs.is_empty() {
        let best = pair_key(&pairs, &leads);
        let (i, j) = pairs.swap_remove(best);
        let (lmi, lmj) = (&leads[i].0, &leads[j].0);
        // Buchberger's first criterion: coprime leading terms
        if mono_coprime(lmi, lmj) {
            continue;
        }
        // chain criterion: some k whose lead divides lcm(i,j), with both
        // (i,k) and (j,k) already handled
        let l = mono_lcm(lmi, lmj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && mono_divides(&leads[k].0, &l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order, over_q);
        let r = reducer.normal_form(&s, &basis, &leads, order)?;
        if r.is_zero() {
            continue;
        }
        let new_idx = basis.len();
        push(r, &mut basis, &mut leads);
        for i in 0..new_idx {
            pairs.push((i, new_idx));
        }
    }

    // interreduce to the unique reduced basis
    let mut reduced: Vec<MultiPoly> = Vec::new();
    // keep only elements whose leads are not divisible by another lead
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let redundant = (0..basis.len()).any(|k| {
            if k == i {
                return false;
            }
            let (mk, _) = basis[k].leading_term(order).unwrap();
            mono_divides(mk, mi) && (mk != mi || k < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    for &i in &keep {
        let others: Vec<MultiPoly> = keep
            .iter()
            .filter(|&&k| k != i)
            .map(|&k| basis[k].clone())
            .collect();
        let other_leads: Vec<(Mono, FieldElement)> = others
            .iter()
            .map(|p| {
                let (m, c) = p.leading_term(order).unwrap();
                (m.clone(), c.clone())
            })
            .collect();
        let r = reducer.normal_form(&basis[i], &others, &other_leads, order)?;
        if !r.is_zero() {
            let (_, lc) = r.leading_term(order).unwrap();
            reduced.push(r.scale(&lc.clone().inv()?));
        }
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).unwrap();
        let (mb, _) = b.leading_term(order).unwrap();
        order.cmp(ma, mb)
    });
    Ok(reduced)
}

/// Normal form of `f` against an already-computed (reduced, monic) basis.
pub fn normal_form(
    f: &MultiPoly,
    basis: &[MultiPoly],
    order: MonomialOrder,
    options: BuchbergerOptions,
) -> Result<MultiPoly, PolyError> {
    if basis.is_empty() {
        return Ok(f.clone());
    }
    let ring = f.ring().clone();
    let mut reducer = Reducer::new(&ring, options.step_budget);
    // over Q the fraction-free path needs integer inputs: renormalize both
    let f_in = if reducer.over_q { f.normalized() } else { f.clone() };
    let basis_in: Vec<MultiPoly> = if reducer.over_q {
        basis.iter().map(|b| b.normalized()).collect()
    } else {
        basis.to_vec()
    };
    let leads: Vec<(Mono, FieldElement)> = basis_in
        .iter()
        .map(|p| {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    reducer.normal_form(&f_in, &basis_in, &leads, order)
}
