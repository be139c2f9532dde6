//! Multivariate polynomials over the two-element field.
//!
//! A polynomial is a set of monomials: every listed monomial has coefficient
//! one, so addition is symmetric difference and `p + p = 0`. Every value
//! carries its ambient [`Vars`]; combining values over different variable
//! sets is an error, never an implicit padding.
//!
//! Monomials are ordered lexicographically with the highest-index variable
//! greatest, so `x2 ≻ x1^k ≻ x0^k` for every `k`. The canonical text form
//! lists terms from greatest to smallest, e.g. `x2^2+x1*x2+x1^2`.

use std::cmp::Ordering;
use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// A contiguous block of named variables `x_first, …, x_{first+count−1}`.
///
/// Base rings use `first = 0` (with `x0` the sphere generator); flag rings
/// use `first = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars {
    first: usize,
    count: usize,
}

impl Vars {
    pub const fn new(first: usize, count: usize) -> Self {
        Vars { first, count }
    }

    pub const fn first(&self) -> usize {
        self.first
    }

    pub const fn count(&self) -> usize {
        self.count
    }

    /// Name index of the last variable, if any.
    pub fn last(&self) -> Option<usize> {
        (self.count > 0).then(|| self.first + self.count - 1)
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= self.first && index < self.first + self.count
    }

    /// Exponent slot of variable `x_index`.
    pub fn slot(&self, index: usize) -> Result<usize> {
        if self.contains(index) {
            Ok(index - self.first)
        } else {
            Err(Error::VariableOutOfRange { index, vars: *self })
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        self.first..self.first + self.count
    }

    /// Whether `other` names a subset of these variables.
    pub fn covers(&self, other: &Vars) -> bool {
        other.count == 0
            || (other.first >= self.first && other.first + other.count <= self.first + self.count)
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.last() {
            None => f.write_str("no variables"),
            Some(last) if last == self.first => write!(f, "x{}", self.first),
            Some(last) => write!(f, "x{}..x{}", self.first, last),
        }
    }
}

/// Exponent vector, one entry per ambient variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity].into_boxed_slice(),
        }
    }

    pub fn from_exponents(exps: impl Into<Vec<u32>>) -> Self {
        Monomial {
            exps: exps.into().into_boxed_slice(),
        }
    }

    /// `x_slot^exp` in an ambient ring with `arity` variables.
    pub fn power(arity: usize, slot: usize, exp: u32) -> Self {
        let mut exps = vec![0; arity];
        exps[slot] = exp;
        Monomial::from_exponents(exps)
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `degree` in `arity` variables, in
    /// ascending order.
    pub fn all_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if arity == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        let mut exps = vec![0u32; arity];
        fill_degree(&mut exps, arity - 1, degree, &mut out);
        out.sort();
        out
    }

    /// Number of monomials of total degree `degree` in `arity` variables,
    /// saturating at `u64::MAX`.
    pub fn count_of_degree(arity: usize, degree: u32) -> u64 {
        if arity == 0 {
            return u64::from(degree == 0);
        }
        binomial(u64::from(degree) + arity as u64 - 1, arity as u64 - 1)
    }

    pub(crate) fn fmt_named(&self, first: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str("*")?;
            }
            write!(f, "x{}", first + slot)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn fill_degree(exps: &mut [u32], slot: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if slot == 0 {
        exps[0] = remaining;
        out.push(Monomial::from_exponents(exps.to_vec()));
        exps[0] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[slot] = e;
        fill_degree(exps, slot - 1, remaining - e, out);
    }
    exps[slot] = 0;
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

impl Ord for Monomial {
    /// Lexicographic, highest slot most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity().cmp(&other.arity()).then_with(|| {
            self.exps
                .iter()
                .rev()
                .zip(other.exps.iter().rev())
                .map(|(a, b)| a.cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyF2 {
    vars: Vars,
    terms: BTreeSet<Monomial>,
}

impl PolyF2 {
    pub fn zero(vars: Vars) -> Self {
        PolyF2 {
            vars,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::from_monomial_unchecked(vars, Monomial::one(vars.count()))
    }

    /// The variable `x_index`.
    pub fn var(vars: Vars, index: usize) -> Result<Self> {
        let slot = vars.slot(index)?;
        Ok(Self::from_monomial_unchecked(
            vars,
            Monomial::power(vars.count(), slot, 1),
        ))
    }

    pub fn monomial(vars: Vars, m: Monomial) -> Result<Self> {
        check_arity(vars, &m)?;
        Ok(Self::from_monomial_unchecked(vars, m))
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(vars: Vars, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = PolyF2::zero(vars);
        for m in monomials {
            check_arity(vars, &m)?;
            p.toggle(m);
        }
        Ok(p)
    }

    /// Monomial with the given exponents listed by variable name, e.g.
    /// `[(0, 3), (1, 2)]` for `x0^3*x1^2`.
    pub fn from_powers(vars: Vars, powers: &[(usize, u32)]) -> Result<Self> {
        let mut exps = vec![0u32; vars.count()];
        for &(index, e) in powers {
            exps[vars.slot(index)?] += e;
        }
        Ok(Self::from_monomial_unchecked(vars, Monomial::from_exponents(exps)))
    }

    pub(crate) fn from_monomial_unchecked(vars: Vars, m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        PolyF2 { vars, terms }
    }

    pub(crate) fn from_sorted_unchecked(vars: Vars, terms: BTreeSet<Monomial>) -> Self {
        PolyF2 { vars, terms }
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> btree_set::Iter<'_, Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`PolyF2::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Greatest monomial in the lexicographic order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    pub fn constant_term(&self) -> bool {
        self.terms.contains(&Monomial::one(self.vars.count()))
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(Monomial::degree).max()
    }

    /// Whether every term has the same total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// The sum of terms of total degree exactly `degree`.
    pub fn graded_component(&self, degree: u32) -> PolyF2 {
        PolyF2 {
            vars: self.vars,
            terms: self.terms.iter().filter(|m| m.degree() == degree).cloned().collect(),
        }
    }

    /// Nonzero homogeneous components, by ascending degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, PolyF2)> {
        let mut by_degree: std::collections::BTreeMap<u32, BTreeSet<Monomial>> = Default::default();
        for m in &self.terms {
            by_degree.entry(m.degree()).or_default().insert(m.clone());
        }
        by_degree
            .into_iter()
            .map(|(d, terms)| (d, PolyF2 { vars: self.vars, terms }))
            .collect()
    }

    /// Drops every term of total degree above `cap`.
    pub fn truncate(&self, cap: u32) -> PolyF2 {
        PolyF2 {
            vars: self.vars,
            terms: self.terms.iter().filter(|m| m.degree() <= cap).cloned().collect(),
        }
    }

    /// Re-expresses this polynomial over a larger variable block.
    pub fn embed(&self, target: Vars) -> Result<PolyF2> {
        if !target.covers(&self.vars) {
            return Err(Error::VarMismatch {
                expected: target,
                found: self.vars,
            });
        }
        let shift = self.vars.first().saturating_sub(target.first());
        let terms = self
            .terms
            .iter()
            .map(|m| {
                let mut exps = vec![0u32; target.count()];
                exps[shift..shift + m.arity()].copy_from_slice(m.exponents());
                Monomial::from_exponents(exps)
            })
            .collect();
        Ok(PolyF2 { vars: target, terms })
    }

    fn check_same(&self, other: &PolyF2) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        Ok(())
    }

    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn checked_add(&self, other: &PolyF2) -> Result<PolyF2> {
        self.check_same(other)?;
        Ok(PolyF2 {
            vars: self.vars,
            terms: self.terms.symmetric_difference(&other.terms).cloned().collect(),
        })
    }

    /// Product with coefficients reduced mod 2.
    pub fn checked_mul(&self, other: &PolyF2) -> Result<PolyF2> {
        self.check_same(other)?;
        let mut out = PolyF2::zero(self.vars);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        Ok(out)
    }

    /// Multiplication by a single monomial, which cannot cancel terms.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<PolyF2> {
        check_arity(self.vars, m)?;
        Ok(PolyF2 {
            vars: self.vars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        })
    }

    /// Frobenius: squaring each term suffices because cross terms appear twice.
    pub fn square(&self) -> PolyF2 {
        PolyF2 {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|m| Monomial {
                    exps: m.exps.iter().map(|e| 2 * e).collect(),
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> PolyF2 {
        let mut base = self.clone();
        let mut acc = PolyF2::one(self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same variables");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Parses the canonical text form (`0`, `1`, `x0^3*x1^2+x2`, …).
    /// Whitespace is ignored and repeated terms cancel.
    pub fn parse(vars: Vars, text: &str) -> Result<PolyF2> {
        Self::parse_line(vars, text, 1)
    }

    pub fn parse_line(vars: Vars, text: &str, line: usize) -> Result<PolyF2> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(line, text.trim(), "empty polynomial"));
        }
        if compact == "0" {
            return Ok(PolyF2::zero(vars));
        }
        let mut p = PolyF2::zero(vars);
        for term in compact.split('+') {
            p.toggle(parse_term(vars, term, line)?);
        }
        Ok(p)
    }
}

fn parse_term(vars: Vars, term: &str, line: usize) -> Result<Monomial> {
    if term.is_empty() {
        return Err(Error::parse(line, term, "empty term"));
    }
    let mut exps = vec![0u32; vars.count()];
    for factor in term.split('*') {
        if factor == "1" {
            continue;
        }
        let Some(rest) = factor.strip_prefix('x') else {
            return Err(Error::parse(line, factor, "expected `1` or a variable `x<index>`"));
        };
        let (index, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e),
            None => (rest, "1"),
        };
        let index: usize = index
            .parse()
            .map_err(|_| Error::parse(line, factor, "bad variable index"))?;
        let exp: u32 = exp
            .parse()
            .map_err(|_| Error::parse(line, factor, "bad exponent"))?;
        let slot = vars
            .slot(index)
            .map_err(|_| Error::parse(line, factor, format!("variable not among {vars}")))?;
        exps[slot] += exp;
    }
    Ok(Monomial::from_exponents(exps))
}

fn check_arity(vars: Vars, m: &Monomial) -> Result<()> {
    if m.arity() != vars.count() {
        return Err(Error::ArityMismatch {
            expected: vars.count(),
            found: m.arity(),
        });
    }
    Ok(())
}

impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            m.fmt_named(self.vars.first(), f)?;
        }
        Ok(())
    }
}

/// # Panics
///
/// Panics when the operands live over different variables; use
/// [`PolyF2::checked_add`] to get an error instead.
impl Add for &PolyF2 {
    type Output = PolyF2;

    fn add(self, rhs: &PolyF2) -> PolyF2 {
        self.checked_add(rhs).expect("polynomials over different variables")
    }
}

/// # Panics
///
/// Panics when the operands live over different variables; use
/// [`PolyF2::checked_mul`] to get an error instead.
impl Mul for &PolyF2 {
    type Output = PolyF2;

    fn mul(self, rhs: &PolyF2) -> PolyF2 {
        self.checked_mul(rhs).expect("polynomials over different variables")
    }
}

/// The complete homogeneous symmetric polynomial `h_degree` in the variables
/// named by `subset`, expressed over the ambient `vars`. `h_0 = 1`.
pub fn complete_symmetric(vars: Vars, degree: u32, subset: &[usize]) -> Result<PolyF2> {
    let mut slots = subset
        .iter()
        .map(|&i| vars.slot(i))
        .collect::<Result<Vec<_>>>()?;
    slots.sort_unstable();
    slots.dedup();
    if degree == 0 {
        return Ok(PolyF2::one(vars));
    }
    if slots.is_empty() {
        return Err(Error::EmptyVariableSet { degree });
    }
    let terms = Monomial::all_of_degree(slots.len(), degree)
        .into_iter()
        .map(|small| {
            let mut exps = vec![0u32; vars.count()];
            for (&slot, &e) in slots.iter().zip(small.exponents()) {
                exps[slot] = e;
            }
            Monomial::from_exponents(exps)
        })
        .collect();
    Ok(PolyF2::from_sorted_unchecked(vars, terms))
}

/// Truncated inverse of a power series with constant term one: returns `q`
/// with `p·q ≡ 1` modulo all monomials of degree above `cap`.
pub fn series_invert(p: &PolyF2, cap: u32) -> Result<PolyF2> {
    if !p.constant_term() {
        return Err(Error::NotInvertible);
    }
    // With p = 1 + r, the degree-d part of q is Σ_{k=1..d} r_k q_{d−k} (signs vanish mod 2).
    let vars = p.vars();
    let tail: Vec<PolyF2> = (0..=cap).map(|k| p.graded_component(k)).collect();
    let mut parts: Vec<PolyF2> = Vec::with_capacity(cap as usize + 1);
    parts.push(PolyF2::one(vars));
    for d in 1..=cap as usize {
        let mut part = PolyF2::zero(vars);
        for k in 1..=d {
            if tail[k].is_zero() || parts[d - k].is_zero() {
                continue;
            }
            for a in tail[k].terms() {
                for b in parts[d - k].terms() {
                    part.toggle(a.mul(b));
                }
            }
        }
        parts.push(part);
    }
    let mut terms = BTreeSet::new();
    for part in parts {
        terms.extend(part.terms);
    }
    Ok(PolyF2::from_sorted_unchecked(vars, terms))
}
