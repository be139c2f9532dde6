#![allow(dead_code)]

use flagcert_core::{Monomial, PolyF2, Vars};
use rand::Rng;

/// Uniformly random subset of the degree-`degree` monomials.
pub fn random_homogeneous<R: Rng>(rng: &mut R, vars: Vars, degree: u32) -> PolyF2 {
    let all = Monomial::all_of_degree(vars.count(), degree);
    PolyF2::from_monomials(vars, all.into_iter().filter(|_| rng.gen_bool(0.5))).unwrap()
}

/// Random element of the degree-`degree` part of the ideal generated by `relations`.
pub fn random_ideal_element<R: Rng>(rng: &mut R, vars: Vars, relations: &[PolyF2], degree: u32) -> PolyF2 {
    let mut acc = PolyF2::zero(vars);
    for g in relations {
        let e = g.degree().unwrap();
        if e > degree {
            continue;
        }
        let cofactor = random_homogeneous(rng, vars, degree - e);
        acc = &acc + &(&cofactor * g);
    }
    acc
}

/// Product by integer convolution over exponent vectors, reduced mod 2 at the end.
pub fn naive_product(p: &PolyF2, q: &PolyF2) -> PolyF2 {
    let mut counts: std::collections::BTreeMap<Vec<u32>, u32> = Default::default();
    for a in p.terms() {
        for b in q.terms() {
            let key: Vec<u32> = a
                .exponents()
                .iter()
                .zip(b.exponents())
                .map(|(x, y)| x + y)
                .collect();
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    PolyF2::from_monomials(
        p.vars(),
        counts
            .into_iter()
            .filter(|(_, c)| c % 2 == 1)
            .map(|(e, _)| Monomial::from_exponents(e)),
    )
    .unwrap()
}
