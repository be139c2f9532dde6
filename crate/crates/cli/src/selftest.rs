//! Desk-scale consistency checks behind `flagcert selftest`.

use std::io::{self, Write};

use flagcert_core::obstruction::closed_form_certificate;
use flagcert_core::topology_facts::{flag_presentation, inverse_total_sw_class, serre_differential_table};
use flagcert_core::{
    certify_no_equivariant_map, complete_symmetric, FlagSpec, Monomial, PolyF2, RingPresentation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("symmetric-function identity", series_identity),
    ("engine equivalence", engine_equivalence),
    ("flag hilbert tables", flag_hilbert),
    ("closed-form certificates", closed_forms),
];

/// Runs every check, printing one line each. Returns whether all passed.
pub fn run_all(out: &mut dyn Write) -> io::Result<bool> {
    let mut all = true;
    for (name, check) in CHECKS {
        match check() {
            Ok(detail) => writeln!(out, "ok   {name}: {detail}")?,
            Err(detail) => {
                all = false;
                writeln!(out, "FAIL {name}: {detail}")?;
            }
        }
    }
    Ok(all)
}

fn specs(max_n: u32) -> impl Iterator<Item = FlagSpec> {
    (2..=max_n).flat_map(|n| (1..n).map(move |ell| FlagSpec::new(n, ell).expect("valid")))
}

fn series_identity() -> Result<String, String> {
    let mut count = 0;
    for spec in specs(5) {
        let cap = spec.n() + 3;
        let dual = inverse_total_sw_class(spec, cap);
        let vars = spec.flag_vars();
        let idx: Vec<usize> = vars.indices().collect();
        for d in 0..=cap {
            let h = complete_symmetric(vars, d, &idx).map_err(|e| e.to_string())?;
            if dual.graded_component(d) != h {
                return Err(format!("{spec:?}: degree {d} component is not h_{d}"));
            }
            count += 1;
        }
        for (j, entry) in serre_differential_table(spec).entries() {
            if entry != &dual.graded_component(j + 1) {
                return Err(format!("{spec:?}: differential on z{j} disagrees"));
            }
        }
    }
    Ok(format!("{count} graded components"))
}

fn random_poly(rng: &mut ChaCha8Rng, r: &RingPresentation, degree: u32) -> PolyF2 {
    let vars = r.vars();
    let pick = |rng: &mut ChaCha8Rng, d: u32| {
        PolyF2::from_monomials(
            vars,
            Monomial::all_of_degree(vars.count(), d)
                .into_iter()
                .filter(|_| rng.gen_bool(0.5)),
        )
        .expect("same arity")
    };
    if rng.gen_bool(0.5) {
        return pick(rng, degree);
    }
    let mut acc = PolyF2::zero(vars);
    for g in r.relations() {
        let e = g.degree().expect("nonzero relation");
        if e <= degree {
            acc = &acc + &(&pick(rng, degree - e) * g);
        }
    }
    acc
}

fn engine_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00f1_a9ce);
    let rings: Vec<(FlagSpec, RingPresentation)> = specs(4).map(|s| (s, flag_presentation(s))).collect();
    let mut members = 0;
    const CASES: usize = 200;
    for _ in 0..CASES {
        let (spec, r) = &rings[rng.gen_range(0..rings.len())];
        let degree = rng.gen_range(0..=spec.manifold_dim());
        let p = random_poly(&mut rng, r, degree);
        let nf = r.normal_form(&p).map_err(|e| e.to_string())?;
        let member = r.oracle_membership(&p).map_err(|e| e.to_string())?;
        if nf.is_zero() != member {
            return Err(format!("{spec:?}: {p} reduces to {nf} but oracle says member={member}"));
        }
        members += usize::from(member);
    }
    Ok(format!("{CASES} cases, {members} ideal members"))
}

fn flag_hilbert() -> Result<String, String> {
    let mut count = 0;
    for spec in specs(5) {
        let r = flag_presentation(spec);
        let h = r.hilbert_function(spec.manifold_dim() + 1).map_err(|e| e.to_string())?;
        if h.total() != spec.total_betti()
            || !h.is_palindromic()
            || h.socle_degree() != Some(spec.manifold_dim())
        {
            return Err(format!("{spec:?}: unexpected table {h}"));
        }
        count += 1;
    }
    Ok(format!("{count} presentations"))
}

fn closed_forms() -> Result<String, String> {
    let mut count = 0;
    for spec in specs(6) {
        let v = certify_no_equivariant_map(spec.n(), spec.ell()).map_err(|e| e.to_string())?;
        if !v.obstruction_nonzero() || v.certificate() != &closed_form_certificate(spec) {
            return Err(format!("{spec:?}: certificate {}", v.certificate()));
        }
        count += 1;
    }
    Ok(format!("{count} instances"))
}
