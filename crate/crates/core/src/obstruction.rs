//! Euler classes of representations in the cohomology of the free quotient
//! `X/G = RP^n × G_ℝ(1,…,1,n−ℓ)` and the resulting nonexistence verdict.
//!
//! The Euler class of a sum of characters is the product of their first
//! Stiefel–Whitney classes. Thom (unit) classes act invertibly on the
//! cohomology of a free `G`-space, so they are dropped throughout and only
//! the polynomial part is tracked. A nonzero image of `a_V` contradicts the
//! vanishing of `H̃^V_G(S(V)₊)` and rules out any equivariant map
//! `S^n × V_{n,ℓ} → S(V)`. A zero image proves nothing: the verdict is then
//! inconclusive, never "a map exists".

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::f2_poly::{PolyF2, Vars};
use crate::quotient_ring::RingPresentation;
use crate::rep_theory::{build_test_representation, RepSpec};
use crate::topology_facts::{base_presentation, FlagSpec};

/// Which normal-form engine produces the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    #[default]
    Groebner,
    Oracle,
    /// Run both and fail on any disagreement.
    Both,
}

impl Engine {
    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Groebner => "groebner",
            Engine::Oracle => "oracle",
            Engine::Both => "both",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groebner" => Ok(Engine::Groebner),
            "oracle" => Ok(Engine::Oracle),
            "both" => Ok(Engine::Both),
            other => Err(Error::parse(0, other, "engine must be groebner, oracle or both")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    obstruction_nonzero: bool,
    certificate: PolyF2,
    certificate_degree: u32,
    presentation: Arc<RingPresentation>,
    trivial_summand_shortcut: bool,
}

impl ObstructionVerdict {
    /// Whether the reduced Euler class is nonzero, which rules out the
    /// equivariant map.
    pub fn obstruction_nonzero(&self) -> bool {
        self.obstruction_nonzero
    }

    /// The Euler-class image in normal form.
    pub fn certificate(&self) -> &PolyF2 {
        &self.certificate
    }

    /// Cohomological degree of the Euler class, i.e. `dim V`.
    pub fn certificate_degree(&self) -> u32 {
        self.certificate_degree
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    /// Set when `V` has a trivial summand and the class was declared zero
    /// without any reduction.
    pub fn trivial_summand_shortcut(&self) -> bool {
        self.trivial_summand_shortcut
    }

    pub fn summary(&self) -> String {
        if self.obstruction_nonzero {
            format!(
                "NONZERO obstruction: {} — no equivariant map exists",
                self.certificate
            )
        } else if self.trivial_summand_shortcut {
            "ZERO obstruction: 0 (trivial summand) — inconclusive".to_string()
        } else {
            "ZERO obstruction: 0 — inconclusive".to_string()
        }
    }
}

fn check_rank(v: &RepSpec, base: &RingPresentation) -> Result<()> {
    let vars = base.vars();
    if vars.first() != 0 || vars.count() != v.rank() {
        return Err(Error::RankMismatch {
            expected: vars.count(),
            found: v.rank(),
        });
    }
    Ok(())
}

/// `∏_χ w₁(χ)^{mult χ}` before any reduction.
pub fn euler_class_product(v: &RepSpec, vars: Vars) -> Result<PolyF2> {
    let mut acc = PolyF2::one(vars);
    for (chi, &mult) in v.summands() {
        acc = acc.checked_mul(&chi.sw1_linear_form(vars)?.pow(mult))?;
    }
    Ok(acc)
}

/// Normal form of the Euler class of `v` in `base` (Gröbner engine).
pub fn euler_class_image(v: &RepSpec, base: &RingPresentation) -> Result<PolyF2> {
    euler_class_image_with(v, base, Engine::Groebner)
}

pub fn euler_class_image_with(v: &RepSpec, base: &RingPresentation, engine: Engine) -> Result<PolyF2> {
    check_rank(v, base)?;
    if v.has_trivial_summand() {
        return Err(Error::TrivialSummand);
    }
    let product = euler_class_product(v, base.vars())?;
    match engine {
        Engine::Groebner => base.normal_form(&product),
        Engine::Oracle => base.oracle_normal_form(&product),
        Engine::Both => {
            let groebner = base.normal_form(&product)?;
            let oracle = base.oracle_normal_form(&product)?;
            if groebner != oracle {
                return Err(Error::EngineDisagreement {
                    groebner: groebner.to_string(),
                    oracle: oracle.to_string(),
                });
            }
            Ok(groebner)
        }
    }
}

/// Verdict for an arbitrary representation over a base presentation.
pub fn euler_verdict(
    v: &RepSpec,
    base: Arc<RingPresentation>,
    engine: Engine,
) -> Result<ObstructionVerdict> {
    check_rank(v, &base)?;
    let degree = u32::try_from(v.dimension()).expect("dimension fits in u32");
    if v.has_trivial_summand() {
        return Ok(ObstructionVerdict {
            obstruction_nonzero: false,
            certificate: PolyF2::zero(base.vars()),
            certificate_degree: degree,
            presentation: base,
            trivial_summand_shortcut: true,
        });
    }
    let certificate = euler_class_image_with(v, &base, engine)?;
    Ok(ObstructionVerdict {
        obstruction_nonzero: !certificate.is_zero(),
        certificate,
        certificate_degree: degree,
        presentation: base,
        trivial_summand_shortcut: false,
    })
}

/// Shared, initialized base presentation for `spec`.
pub fn cached_base_presentation(spec: FlagSpec) -> Arc<RingPresentation> {
    static CACHE: OnceLock<Mutex<HashMap<FlagSpec, Arc<RingPresentation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&spec) {
        return Arc::clone(p);
    }
    let fresh = Arc::new(base_presentation(spec));
    fresh.initialize();
    Arc::clone(cache.lock().expect("cache lock").entry(spec).or_insert(fresh))
}

/// Euler-class obstruction for the test representation of `(n, ℓ)`.
pub fn certify_no_equivariant_map(n: u32, ell: u32) -> Result<ObstructionVerdict> {
    certify_with_engine(n, ell, Engine::Groebner)
}

pub fn certify_with_engine(n: u32, ell: u32, engine: Engine) -> Result<ObstructionVerdict> {
    let spec = FlagSpec::new(n, ell)?;
    let v = build_test_representation(n, ell)?;
    euler_verdict(&v, cached_base_presentation(spec), engine)
}

/// `x0^n · ∏_{i=1}^{ℓ} x_i^{n−i}` in the base ring.
pub fn closed_form_certificate(spec: FlagSpec) -> PolyF2 {
    let powers: Vec<(usize, u32)> = std::iter::once((0, spec.n()))
        .chain((1..=spec.ell()).map(|i| (i as usize, spec.n() - i)))
        .collect();
    PolyF2::from_powers(spec.base_vars(), &powers).expect("base vars")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_theory::Character;

    fn spec(n: u32, ell: u32) -> FlagSpec {
        FlagSpec::new(n, ell).unwrap()
    }

    #[test]
    fn euler_image_examples() {
        let base = base_presentation(spec(3, 1));
        let v = build_test_representation(3, 1).unwrap();
        assert_eq!(euler_class_image(&v, &base).unwrap().to_string(), "x0^3*x1^2");

        let base2 = base_presentation(spec(2, 1));
        let v2 = build_test_representation(2, 1).unwrap();
        assert_eq!(euler_class_image(&v2, &base2).unwrap().to_string(), "x0^2*x1");

        let pure = RepSpec::new(2, [(Character::parse("10").unwrap(), 4)]).unwrap();
        assert!(euler_class_image(&pure, &base).unwrap().is_zero());
    }

    #[test]
    fn euler_image_errors() {
        let base = base_presentation(spec(3, 1));
        let wrong_rank = build_test_representation(3, 2).unwrap();
        assert!(matches!(
            euler_class_image(&wrong_rank, &base),
            Err(Error::RankMismatch { .. })
        ));
        let trivial = RepSpec::new(2, [(Character::parse("00").unwrap(), 1)]).unwrap();
        assert_eq!(euler_class_image(&trivial, &base), Err(Error::TrivialSummand));
    }

    #[test]
    fn certify_examples() {
        let v = certify_no_equivariant_map(2, 1).unwrap();
        assert!(v.obstruction_nonzero());
        assert_eq!(v.certificate().to_string(), "x0^2*x1");
        assert_eq!(v.certificate_degree(), 3);

        let v = certify_no_equivariant_map(3, 2).unwrap();
        assert_eq!(v.certificate().to_string(), "x0^3*x1^2*x2");
        assert_eq!(v.certificate_degree(), 6);

        let v = certify_no_equivariant_map(5, 3).unwrap();
        assert_eq!(v.certificate().to_string(), "x0^5*x1^4*x2^3*x3^2");
        assert!(!v.presentation().oracle_membership(v.certificate()).unwrap());

        assert_eq!(
            certify_no_equivariant_map(1, 1),
            Err(Error::InvalidFlagSpec { n: 1, ell: 1 })
        );
    }

    #[test]
    fn engines_agree_on_small_certificates() {
        for (n, ell) in [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)] {
            let g = certify_with_engine(n, ell, Engine::Groebner).unwrap();
            let o = certify_with_engine(n, ell, Engine::Oracle).unwrap();
            let b = certify_with_engine(n, ell, Engine::Both).unwrap();
            assert_eq!(g, o);
            assert_eq!(g, b);
        }
    }

    #[test]
    fn trivial_summand_shortcut() {
        let base = Arc::new(base_presentation(spec(3, 1)));
        let v = build_test_representation(3, 1)
            .unwrap()
            .direct_sum(&RepSpec::new(2, [(Character::trivial(2).unwrap(), 1)]).unwrap())
            .unwrap();
        let verdict = euler_verdict(&v, base, Engine::Groebner).unwrap();
        assert!(verdict.trivial_summand_shortcut());
        assert!(!verdict.obstruction_nonzero());
        assert!(verdict.certificate().is_zero());
        assert_eq!(verdict.summary(), "ZERO obstruction: 0 (trivial summand) — inconclusive");
    }

    #[test]
    fn summary_text() {
        let v = certify_no_equivariant_map(3, 1).unwrap();
        assert_eq!(
            v.summary(),
            "NONZERO obstruction: x0^3*x1^2 — no equivariant map exists"
        );
    }

    #[test]
    fn engine_names_round_trip() {
        for e in [Engine::Groebner, Engine::Oracle, Engine::Both] {
            assert_eq!(e.as_str().parse::<Engine>().unwrap(), e);
        }
        assert!("fast".parse::<Engine>().is_err());
    }

    #[test]
    fn values_cross_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ObstructionVerdict>();
        assert_send_sync::<RingPresentation>();
        let handles: Vec<_> = (2..6u32)
            .map(|n| std::thread::spawn(move || certify_no_equivariant_map(n, n - 1).unwrap()))
            .collect();
        for h in handles {
            assert!(h.join().unwrap().obstruction_nonzero());
        }
    }
}
