//! Graded quotient rings `F₂[x…]/(g₁,…,g_k)` by homogeneous relations.
//!
//! Two normal-form engines are available and are kept independent:
//!
//! * the Gröbner engine ([`RingPresentation::normal_form`]) reduces by a
//!   reduced Gröbner basis computed once and cached in the presentation;
//! * the per-degree oracle ([`RingPresentation::oracle_membership`],
//!   [`RingPresentation::oracle_normal_form`]) spans each degree slice of
//!   the ideal explicitly and row-reduces it.
//!
//! Hilbert functions come from the oracle; [`RingPresentation::standard_monomials`]
//! gives the Gröbner-side count for cross-checking.

mod groebner;
mod order;
mod slice;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::f2_poly::{Monomial, PolyF2, Vars};
use groebner::GroebnerBasis;
use order::{DegRevLex, Lex};

pub use order::MonomialOrder;
pub use slice::IdealSlice;

/// Default cap on the size of one degree slice, in bits.
pub const DEFAULT_SLICE_BUDGET_BITS: u64 = 1 << 30;

#[derive(Debug, Clone)]
pub struct RingPresentation {
    vars: Vars,
    relations: Vec<PolyF2>,
    order: MonomialOrder,
    top_degree_hint: Option<u32>,
    standard_exponent_bounds: Option<Vec<u32>>,
    slice_budget_bits: u64,
    groebner: OnceLock<GroebnerBasis>,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.relations == other.relations
            && self.order == other.order
            && self.top_degree_hint == other.top_degree_hint
            && self.standard_exponent_bounds == other.standard_exponent_bounds
    }
}

impl Eq for RingPresentation {}

impl RingPresentation {
    /// Every relation must be a nonzero homogeneous polynomial over `vars`.
    pub fn new(vars: Vars, relations: Vec<PolyF2>) -> Result<Self> {
        for (index, g) in relations.iter().enumerate() {
            if g.vars() != vars {
                return Err(Error::VarMismatch {
                    expected: vars,
                    found: g.vars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroRelation { index });
            }
            if !g.is_homogeneous() {
                return Err(Error::RelationNotHomogeneous { index });
            }
        }
        Ok(RingPresentation {
            vars,
            relations,
            order: MonomialOrder::default(),
            top_degree_hint: None,
            standard_exponent_bounds: None,
            slice_budget_bits: DEFAULT_SLICE_BUDGET_BITS,
            groebner: OnceLock::new(),
        })
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if order != self.order {
            self.order = order;
            self.groebner = OnceLock::new();
        }
        self
    }

    pub fn with_top_degree_hint(mut self, degree: u32) -> Self {
        self.top_degree_hint = Some(degree);
        self
    }

    /// Records a conjectured monomial basis `{x^a : a_i ≤ bounds[i]}`. The
    /// bounds are metadata only; nothing computes with them.
    pub fn with_standard_exponent_bounds(mut self, bounds: Vec<u32>) -> Result<Self> {
        if bounds.len() != self.vars.count() {
            return Err(Error::ArityMismatch {
                expected: self.vars.count(),
                found: bounds.len(),
            });
        }
        self.standard_exponent_bounds = Some(bounds);
        Ok(self)
    }

    pub fn with_slice_budget(mut self, bits: u64) -> Self {
        self.slice_budget_bits = bits;
        self
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn relations(&self) -> &[PolyF2] {
        &self.relations
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn top_degree_hint(&self) -> Option<u32> {
        self.top_degree_hint
    }

    pub fn standard_exponent_bounds(&self) -> Option<&[u32]> {
        self.standard_exponent_bounds.as_deref()
    }

    pub fn slice_budget_bits(&self) -> u64 {
        self.slice_budget_bits
    }

    fn check_vars(&self, p: &PolyF2) -> Result<()> {
        if p.vars() != self.vars {
            return Err(Error::VarMismatch {
                expected: self.vars,
                found: p.vars(),
            });
        }
        Ok(())
    }

    fn groebner(&self) -> &GroebnerBasis {
        self.groebner.get_or_init(|| match self.order {
            MonomialOrder::Lex => groebner::buchberger::<Lex>(&self.relations),
            MonomialOrder::DegRevLex => groebner::buchberger::<DegRevLex>(&self.relations),
        })
    }

    /// Computes and caches the Gröbner basis. Later queries only read it.
    pub fn initialize(&self) -> &Self {
        self.groebner();
        self
    }

    /// The reduced Gröbner basis, leads ascending.
    pub fn groebner_basis(&self) -> Vec<PolyF2> {
        self.groebner()
            .elements
            .iter()
            .map(|g| PolyF2::from_monomials(self.vars, g.iter().cloned()).expect("same arity"))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner().leads().cloned().collect()
    }

    /// Unique reduced representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &PolyF2) -> Result<PolyF2> {
        self.check_vars(p)?;
        let gb = &self.groebner().elements;
        let terms = match self.order {
            MonomialOrder::Lex => groebner::reduce::<Lex>(p.terms().cloned(), gb),
            MonomialOrder::DegRevLex => groebner::reduce::<DegRevLex>(p.terms().cloned(), gb),
        };
        PolyF2::from_monomials(self.vars, terms)
    }

    pub fn is_nonzero_in_quotient(&self, p: &PolyF2) -> Result<bool> {
        Ok(!self.normal_form(p)?.is_zero())
    }

    /// Row-reduced degree slice of the ideal.
    pub fn ideal_slice(&self, degree: u32) -> Result<IdealSlice> {
        IdealSlice::build(self, degree)
    }

    /// Ideal membership of a homogeneous polynomial by explicit row reduction
    /// of its degree slice, independent of the Gröbner engine.
    pub fn oracle_membership(&self, p: &PolyF2) -> Result<bool> {
        self.check_vars(p)?;
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let Some(d) = p.degree() else { return Ok(true) };
        self.ideal_slice(d)?.contains(p)
    }

    /// Normal form computed degree by degree through the oracle slices.
    pub fn oracle_normal_form(&self, p: &PolyF2) -> Result<PolyF2> {
        self.check_vars(p)?;
        let mut out = PolyF2::zero(self.vars);
        for (d, part) in p.homogeneous_components() {
            out = out.checked_add(&self.ideal_slice(d)?.reduce(&part)?)?;
        }
        Ok(out)
    }

    /// `dims[d]` = monomials of degree `d` minus the rank of the ideal slice.
    pub fn hilbert_function(&self, cap: u32) -> Result<HilbertTable> {
        let mut dims = Vec::with_capacity(cap as usize + 1);
        for d in 0..=cap {
            let (rows, cols) = slice::slice_shape(self, d);
            if rows == 0 {
                dims.push(cols);
            } else {
                dims.push(self.ideal_slice(d)?.quotient_dim() as u64);
            }
        }
        Ok(HilbertTable { dims })
    }

    /// Degree-`d` monomials divisible by no Gröbner lead.
    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        let leads = self.leading_monomials();
        Monomial::all_of_degree(self.vars.count(), degree)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// Monomials of the recorded conjectural basis in degree `d`.
    pub fn hypothesized_standard_monomials(&self, degree: u32) -> Option<Vec<Monomial>> {
        let bounds = self.standard_exponent_bounds.as_ref()?;
        Some(
            Monomial::all_of_degree(self.vars.count(), degree)
                .into_iter()
                .filter(|m| m.exponents().iter().zip(bounds).all(|(e, b)| e <= b))
                .collect(),
        )
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F2[")?;
        for (k, i) in self.vars.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{i}")?;
        }
        f.write_str("]/(")?;
        for (k, g) in self.relations.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Per-degree dimensions of a graded quotient, degrees `0..=cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    dims: Vec<u64>,
}

impl HilbertTable {
    pub fn new(dims: Vec<u64>) -> Self {
        HilbertTable { dims }
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn cap(&self) -> u32 {
        self.dims.len().saturating_sub(1) as u32
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    /// Highest degree with a nonzero dimension.
    pub fn socle_degree(&self) -> Option<u32> {
        self.dims.iter().rposition(|&d| d != 0).map(|d| d as u32)
    }

    /// Symmetric about half the socle degree. Entries after the socle
    /// degree are zero by definition of the socle.
    pub fn is_palindromic(&self) -> bool {
        let Some(top) = self.socle_degree() else { return true };
        let top = top as usize;
        (0..=top).all(|d| self.dims[d] == self.dims[top - d])
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
