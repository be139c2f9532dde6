use std::collections::HashMap;

use super::{MonomialOrder, RingPresentation};
use crate::error::{Error, Result};
use crate::f2_poly::{Monomial, PolyF2, Vars};
use crate::linalg::{BitRow, EchelonBasis};

/// The degree-`d` part of a relation ideal, spanned by every product
/// `m·g` with `g` a relation and `m` a monomial of degree `d − deg g`,
/// row-reduced over GF(2).
///
/// Columns run from the greatest monomial to the smallest under the ring's
/// order, so pivots are leading monomials and [`IdealSlice::reduce`]
/// returns the same canonical representative as the Gröbner engine.
#[derive(Debug, Clone)]
pub struct IdealSlice {
    vars: Vars,
    degree: u32,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    basis: EchelonBasis,
}

/// Rows and columns of the degree-`degree` slice matrix.
pub(crate) fn slice_shape(pres: &RingPresentation, degree: u32) -> (u64, u64) {
    let arity = pres.vars().count();
    let rows = pres
        .relations()
        .iter()
        .filter_map(|g| g.degree())
        .filter(|&e| e <= degree)
        .map(|e| Monomial::count_of_degree(arity, degree - e))
        .fold(0u64, u64::saturating_add);
    (rows, Monomial::count_of_degree(arity, degree))
}

pub(crate) fn check_budget(pres: &RingPresentation, degree: u32) -> Result<(u64, u64)> {
    let (rows, cols) = slice_shape(pres, degree);
    // One extra row holds the vector being tested.
    let bits = rows.saturating_add(1).saturating_mul(cols);
    if bits > pres.slice_budget_bits() {
        return Err(Error::BudgetExceeded {
            degree,
            rows,
            cols,
            bits,
            budget: pres.slice_budget_bits(),
        });
    }
    Ok((rows, cols))
}

impl IdealSlice {
    pub(crate) fn build(pres: &RingPresentation, degree: u32) -> Result<Self> {
        check_budget(pres, degree)?;
        let vars = pres.vars();
        let order: MonomialOrder = pres.order();
        let mut columns = Monomial::all_of_degree(vars.count(), degree);
        columns.sort_by(|a, b| order.cmp(b, a));
        let index: HashMap<Monomial, usize> =
            columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut basis = EchelonBasis::new(columns.len());

        'relations: for g in pres.relations() {
            let Some(e) = g.degree() else { continue };
            if e > degree {
                continue;
            }
            for m in Monomial::all_of_degree(vars.count(), degree - e) {
                if basis.is_full() {
                    break 'relations;
                }
                let mut row = BitRow::zeros(columns.len());
                for t in g.terms() {
                    row.flip(index[&t.mul(&m)]);
                }
                basis.insert(row);
            }
        }
        Ok(IdealSlice {
            vars,
            degree,
            columns,
            index,
            basis,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomial_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// Dimension of the quotient in this degree.
    pub fn quotient_dim(&self) -> usize {
        self.columns.len() - self.basis.rank()
    }

    fn to_row(&self, p: &PolyF2) -> Result<BitRow> {
        if p.vars() != self.vars {
            return Err(Error::VarMismatch {
                expected: self.vars,
                found: p.vars(),
            });
        }
        let mut row = BitRow::zeros(self.columns.len());
        for t in p.terms() {
            match self.index.get(t) {
                Some(&c) => row.flip(c),
                None => return Err(Error::NotHomogeneous),
            }
        }
        Ok(row)
    }

    /// Whether `p` (homogeneous of this slice's degree) lies in the ideal.
    pub fn contains(&self, p: &PolyF2) -> Result<bool> {
        Ok(self.basis.contains(&self.to_row(p)?))
    }

    /// Canonical representative of `p` modulo the ideal: the unique
    /// combination of non-leading monomials congruent to `p`.
    pub fn reduce(&self, p: &PolyF2) -> Result<PolyF2> {
        let mut row = self.to_row(p)?;
        self.basis.reduce(&mut row);
        PolyF2::from_monomials(self.vars, row.ones().map(|c| self.columns[c].clone()))
    }

    /// Monomials that are not leading monomials of any ideal element.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..self.columns.len())
            .filter(|&c| !self.basis.is_pivot(c))
            .map(|c| self.columns[c].clone())
            .collect();
        out.sort();
        out
    }
}
