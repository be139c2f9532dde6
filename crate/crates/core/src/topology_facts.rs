//! Mod-2 cohomology presentations for `RP^n`, the real partial flag
//! manifolds `G_ℝ(1,…,1,n−ℓ)` and their product.
//!
//! Flag-ring variables are `x1..xℓ` (first Stiefel–Whitney classes of the
//! tautological lines); the base ring adds `x0` for `RP^n`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::f2_poly::{complete_symmetric, series_invert, PolyF2, Vars};
use crate::quotient_ring::RingPresentation;

/// Flag signature `(1,…,1,n−ℓ)` with `ℓ` line factors, `1 ≤ ℓ < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagSpec {
    n: u32,
    ell: u32,
}

impl FlagSpec {
    pub fn new(n: u32, ell: u32) -> Result<Self> {
        if ell < 1 || ell >= n {
            return Err(Error::InvalidFlagSpec { n, ell });
        }
        Ok(FlagSpec { n, ell })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `x1..xℓ`.
    pub fn flag_vars(&self) -> Vars {
        Vars::new(1, self.ell as usize)
    }

    /// `x0..xℓ`.
    pub fn base_vars(&self) -> Vars {
        Vars::new(0, self.ell as usize + 1)
    }

    /// `nℓ − ℓ(ℓ+1)/2`, the dimension of `V_{n,ℓ}` and of the flag manifold.
    pub fn manifold_dim(&self) -> u32 {
        self.n * self.ell - self.ell * (self.ell + 1) / 2
    }

    /// Degrees of Borel's fiber generators `z_{n−ℓ},…,z_{n−1}`.
    pub fn stiefel_generator_degrees(&self) -> RangeInclusive<u32> {
        self.n - self.ell..=self.n - 1
    }

    /// `n!/(n−ℓ)!`, the total rank of the flag cohomology.
    pub fn total_betti(&self) -> u64 {
        (self.n - self.ell + 1..=self.n).map(u64::from).product()
    }

    fn flag_relations(&self) -> Vec<PolyF2> {
        let vars = self.flag_vars();
        let idx: Vec<usize> = vars.indices().collect();
        (self.n - self.ell + 1..=self.n)
            .map(|d| complete_symmetric(vars, d, &idx).expect("nonempty variable set"))
            .collect()
    }
}

pub fn manifold_dim(spec: FlagSpec) -> u32 {
    spec.manifold_dim()
}

/// `F₂[x1..xℓ]/(h_{n−ℓ+1},…,h_n)` with `h_j` complete homogeneous symmetric
/// in `x1..xℓ`. The conjectured basis `{x^a : a_i ≤ n−i}` is attached as
/// unverified metadata.
pub fn flag_presentation(spec: FlagSpec) -> RingPresentation {
    let bounds = (1..=spec.ell).map(|i| spec.n - i).collect();
    RingPresentation::new(spec.flag_vars(), spec.flag_relations())
        .expect("flag relations are homogeneous")
        .with_top_degree_hint(spec.manifold_dim())
        .with_standard_exponent_bounds(bounds)
        .expect("one bound per variable")
}

/// `H*(RP^n × G_ℝ(1,…,1,n−ℓ); F₂) = F₂[x0..xℓ]/(x0^{n+1}, h_{n−ℓ+1},…,h_n)`.
pub fn base_presentation(spec: FlagSpec) -> RingPresentation {
    let vars = spec.base_vars();
    let mut relations = vec![PolyF2::from_powers(vars, &[(0, spec.n + 1)]).expect("x0 present")];
    relations.extend(
        spec.flag_relations()
            .iter()
            .map(|h| h.embed(vars).expect("flag vars inside base vars")),
    );
    let bounds = std::iter::once(spec.n)
        .chain((1..=spec.ell).map(|i| spec.n - i))
        .collect();
    RingPresentation::new(vars, relations)
        .expect("base relations are homogeneous")
        .with_top_degree_hint(spec.n + spec.manifold_dim())
        .with_standard_exponent_bounds(bounds)
        .expect("one bound per variable")
}

/// `∏_{i=1}^{ℓ} x_i^{n−i}` in the flag ring.
pub fn top_class(spec: FlagSpec) -> PolyF2 {
    let powers: Vec<(usize, u32)> = (1..=spec.ell).map(|i| (i as usize, spec.n - i)).collect();
    PolyF2::from_powers(spec.flag_vars(), &powers).expect("flag vars")
}

/// Total Stiefel–Whitney class `∏(1 + x_i)` of the sum of the tautological
/// lines, in the flag variables.
pub fn total_sw_class(spec: FlagSpec) -> PolyF2 {
    let vars = spec.flag_vars();
    vars.indices().fold(PolyF2::one(vars), |acc, i| {
        let line = &PolyF2::one(vars) + &PolyF2::var(vars, i).expect("flag var");
        &acc * &line
    })
}

/// Dual class `∏(1 + x_i)^{−1}` truncated above degree `cap`.
pub fn inverse_total_sw_class(spec: FlagSpec, cap: u32) -> PolyF2 {
    series_invert(&total_sw_class(spec), cap).expect("constant term is one")
}

/// Transgressive differentials `d_{j+1}(z_j)`, for `j` in `n−ℓ..=n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialTable {
    entries: BTreeMap<u32, PolyF2>,
}

impl DifferentialTable {
    pub fn entries(&self) -> &BTreeMap<u32, PolyF2> {
        &self.entries
    }

    pub fn get(&self, j: u32) -> Option<&PolyF2> {
        self.entries.get(&j)
    }

    pub fn domain(&self) -> Vec<u32> {
        self.entries.keys().copied().collect()
    }
}

/// `d_{j+1}(z_j) = h_{j+1}(x1..xℓ)` for the Stiefel fiber generators.
pub fn serre_differential_table(spec: FlagSpec) -> DifferentialTable {
    let vars = spec.flag_vars();
    let idx: Vec<usize> = vars.indices().collect();
    let entries = spec
        .stiefel_generator_degrees()
        .map(|j| (j, complete_symmetric(vars, j + 1, &idx).expect("nonempty variable set")))
        .collect();
    DifferentialTable { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, ell: u32) -> FlagSpec {
        FlagSpec::new(n, ell).unwrap()
    }

    #[test]
    fn invalid_specs() {
        assert_eq!(FlagSpec::new(1, 1), Err(Error::InvalidFlagSpec { n: 1, ell: 1 }));
        assert!(FlagSpec::new(4, 0).is_err());
        assert!(FlagSpec::new(4, 5).is_err());
    }

    #[test]
    fn flag_presentations() {
        let r = flag_presentation(spec(5, 1));
        assert_eq!(r.to_string(), "F2[x1]/(x1^5)");
        assert_eq!(
            flag_presentation(spec(3, 2)).to_string(),
            "F2[x1,x2]/(x2^2+x1*x2+x1^2, x2^3+x1*x2^2+x1^2*x2+x1^3)"
        );
        let r = flag_presentation(spec(4, 2));
        let degrees: Vec<u32> = r.relations().iter().map(|g| g.degree().unwrap()).collect();
        assert_eq!(degrees, vec![3, 4]);
        assert_eq!(r.standard_exponent_bounds(), Some(&[3, 2][..]));
    }

    #[test]
    fn base_presentations() {
        assert_eq!(base_presentation(spec(2, 1)).to_string(), "F2[x0,x1]/(x0^3, x1^2)");
        assert_eq!(base_presentation(spec(3, 1)).to_string(), "F2[x0,x1]/(x0^4, x1^3)");
        let r = base_presentation(spec(3, 2));
        assert_eq!(r.relations().len(), 3);
        assert_eq!(r.relations()[0].to_string(), "x0^4");
        assert_eq!(r.relations()[1].to_string(), "x2^2+x1*x2+x1^2");
    }

    #[test]
    fn dimensions() {
        assert_eq!(manifold_dim(spec(3, 2)), 3);
        assert_eq!(manifold_dim(spec(7, 1)), 6);
        assert_eq!(manifold_dim(spec(4, 2)), 5);
        assert_eq!(spec(5, 3).total_betti(), 60);
    }

    #[test]
    fn top_classes() {
        assert_eq!(top_class(spec(3, 2)).to_string(), "x1^2*x2");
        assert_eq!(top_class(spec(6, 1)).to_string(), "x1^5");
        assert_eq!(top_class(spec(5, 3)).to_string(), "x1^4*x2^3*x3^2");
        for n in 2..9 {
            for ell in 1..n {
                let s = spec(n, ell);
                assert_eq!(top_class(s).degree(), Some(s.manifold_dim()));
            }
        }
    }

    #[test]
    fn differential_tables() {
        let t = serre_differential_table(spec(3, 2));
        assert_eq!(t.domain(), vec![1, 2]);
        assert_eq!(t.get(1).unwrap().to_string(), "x2^2+x1*x2+x1^2");
        assert_eq!(t.get(2).unwrap().degree(), Some(3));

        let t = serre_differential_table(spec(6, 1));
        assert_eq!(t.domain(), vec![5]);
        assert_eq!(t.get(5).unwrap().to_string(), "x1^6");

        let t = serre_differential_table(spec(4, 2));
        assert_eq!(t.get(2).unwrap().to_string(), "x2^3+x1*x2^2+x1^2*x2+x1^3");
    }

    #[test]
    fn total_class_expands() {
        assert_eq!(total_sw_class(spec(3, 2)).to_string(), "x1*x2+x2+x1+1");
    }
}
