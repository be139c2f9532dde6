use std::cmp::Ordering;
use std::marker::PhantomData;

use crate::f2_poly::Monomial;

/// Monomial order used by a presentation. Both orders rank the
/// highest-index variable greatest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Lexicographic: `x_m ≻ x_{m−1} ≻ ⋯ ≻ x_first`.
    #[default]
    Lex,
    /// Graded reverse lexicographic with the same variable ranking.
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => Lex::cmp(a, b),
            MonomialOrder::DegRevLex => DegRevLex::cmp(a, b),
        }
    }
}

pub(crate) trait TermOrder: Copy + Default + 'static {
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering;
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Lex;

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct DegRevLex;

impl TermOrder for Lex {
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }
}

impl TermOrder for DegRevLex {
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering {
        // Degree first; then the monomial with the smaller exponent on the
        // least significant (lowest-index) differing variable is greater.
        a.degree().cmp(&b.degree()).then_with(|| {
            a.exponents()
                .iter()
                .zip(b.exponents())
                .map(|(x, y)| y.cmp(x))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

/// A monomial that sorts by `O`.
#[derive(Debug, Clone)]
pub(crate) struct Keyed<O: TermOrder>(pub Monomial, pub PhantomData<O>);

impl<O: TermOrder> Keyed<O> {
    pub fn new(m: Monomial) -> Self {
        Keyed(m, PhantomData)
    }
}

impl<O: TermOrder> PartialEq for Keyed<O> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<O: TermOrder> Eq for Keyed<O> {}

impl<O: TermOrder> PartialOrd for Keyed<O> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<O: TermOrder> Ord for Keyed<O> {
    fn cmp(&self, other: &Self) -> Ordering {
        O::cmp(&self.0, &other.0)
    }
}
