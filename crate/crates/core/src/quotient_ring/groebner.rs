//! Buchberger's algorithm over GF(2) with the normal selection strategy, the
//! coprime-leads criterion and the chain criterion, followed by
//! interreduction to the unique reduced basis.

use std::collections::{BTreeSet, HashSet};

use super::order::{Keyed, TermOrder};
use crate::f2_poly::{Monomial, PolyF2};

/// Terms sorted from greatest to smallest under the order in use.
pub(crate) type SortedTerms = Vec<Monomial>;

/// Reduced Gröbner basis, leads ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GroebnerBasis {
    pub elements: Vec<SortedTerms>,
}

impl GroebnerBasis {
    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| &g[0])
    }
}

fn sorted<O: TermOrder>(p: impl IntoIterator<Item = Monomial>) -> SortedTerms {
    let mut terms: Vec<Monomial> = p.into_iter().collect();
    terms.sort_by(|a, b| O::cmp(b, a));
    terms
}

fn toggle<O: TermOrder>(set: &mut BTreeSet<Keyed<O>>, m: Monomial) {
    let k = Keyed::new(m);
    if !set.remove(&k) {
        set.insert(k);
    }
}

/// Full reduction of `terms` by `basis`: no term of the result is divisible
/// by a lead of `basis`.
pub(crate) fn reduce<O: TermOrder>(
    terms: impl IntoIterator<Item = Monomial>,
    basis: &[SortedTerms],
) -> SortedTerms {
    let mut work: BTreeSet<Keyed<O>> = BTreeSet::new();
    for m in terms {
        toggle(&mut work, m);
    }
    let mut out = Vec::new();
    while let Some(Keyed(top, ..)) = work.pop_last() {
        match basis.iter().find(|g| g[0].divides(&top)) {
            Some(g) => {
                let q = g[0].quotient_of(&top).expect("lead divides");
                for t in &g[1..] {
                    toggle(&mut work, q.mul(t));
                }
            }
            None => out.push(top),
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial<O: TermOrder>(f: &SortedTerms, g: &SortedTerms, lcm: &Monomial) -> Vec<Monomial> {
    let mf = f[0].quotient_of(lcm).expect("lead divides lcm");
    let mg = g[0].quotient_of(lcm).expect("lead divides lcm");
    let mut out: BTreeSet<Keyed<O>> = BTreeSet::new();
    for t in &f[1..] {
        toggle(&mut out, mf.mul(t));
    }
    for t in &g[1..] {
        toggle(&mut out, mg.mul(t));
    }
    out.into_iter().map(|k| k.0).collect()
}

pub(crate) fn buchberger<O: TermOrder>(generators: &[PolyF2]) -> GroebnerBasis {
    let mut gens: Vec<SortedTerms> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted::<O>(g.terms().cloned()))
        .collect();
    gens.sort_by(|a, b| {
        a[0].degree()
            .cmp(&b[0].degree())
            .then_with(|| O::cmp(&a[0], &b[0]))
    });

    let mut basis: Vec<SortedTerms> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |basis: &mut Vec<SortedTerms>,
                   pending: &mut Vec<Pair>,
                   pending_set: &mut HashSet<(usize, usize)>,
                   g: SortedTerms| {
        let j = basis.len();
        for (i, f) in basis.iter().enumerate() {
            pending.push(Pair {
                i,
                j,
                lcm: f[0].lcm(&g[0]),
            });
            pending_set.insert((i, j));
        }
        basis.push(g);
    };

    for g in gens {
        let r = reduce::<O>(g, &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pending, &mut pending_set, r);
        }
    }

    while !pending.is_empty() {
        // Normal strategy: lowest lcm degree, then smallest lcm, then indices.
        let pos = (0..pending.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pending[a], &pending[b]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| O::cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pending.swap_remove(pos);
        pending_set.remove(&(pair.i, pair.j));

        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        if f[0].is_coprime(&g[0]) {
            continue;
        }
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k][0].divides(&pair.lcm)
                && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_polynomial::<O>(f, g, &pair.lcm);
        let r = reduce::<O>(s, &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pending, &mut pending_set, r);
        }
    }

    interreduce::<O>(basis)
}

/// Minimalizes and tail-reduces a Gröbner basis into the reduced one.
fn interreduce<O: TermOrder>(basis: Vec<SortedTerms>) -> GroebnerBasis {
    let mut minimal: Vec<SortedTerms> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h[0].divides(&g[0]) && (h[0] != g[0] || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| O::cmp(&a[0], &b[0]));

    let mut elements = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<SortedTerms> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[idx][0].clone();
        let mut g = vec![lead];
        g.extend(reduce::<O>(minimal[idx][1..].iter().cloned(), &others));
        elements.push(g);
    }
    GroebnerBasis { elements }
}
