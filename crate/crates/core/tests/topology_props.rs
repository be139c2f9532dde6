use flagcert_core::topology_facts::{
    flag_presentation, inverse_total_sw_class, serre_differential_table, top_class,
};
use flagcert_core::FlagSpec;

fn flag_specs(max_n: u32) -> impl Iterator<Item = FlagSpec> {
    (2..=max_n).flat_map(|n| (1..n).map(move |ell| FlagSpec::new(n, ell).unwrap()))
}

#[test]
fn differentials_match_inverse_total_class() {
    for spec in flag_specs(6) {
        let table = serre_differential_table(spec);
        let dual = inverse_total_sw_class(spec, spec.n());
        for (&j, entry) in table.entries() {
            assert_eq!(entry, &dual.graded_component(j + 1), "{spec:?} j={j}");
            assert_eq!(entry.degree(), Some(j + 1));
        }
    }
}

#[test]
fn differential_domain_is_stiefel_generators() {
    for spec in flag_specs(8) {
        let table = serre_differential_table(spec);
        assert_eq!(table.domain(), spec.stiefel_generator_degrees().collect::<Vec<_>>());
        assert_eq!(table.domain().len(), spec.ell() as usize);
    }
}

#[test]
fn relations_are_the_differentials() {
    for spec in flag_specs(6) {
        let r = flag_presentation(spec);
        let table = serre_differential_table(spec);
        let entries: Vec<_> = table.entries().values().cloned().collect();
        assert_eq!(r.relations(), entries.as_slice());
    }
}

#[test]
fn top_class_degree_is_manifold_dim() {
    for spec in flag_specs(10) {
        assert_eq!(top_class(spec).degree(), Some(spec.manifold_dim()));
    }
}

#[test]
fn projective_space_specialization() {
    for n in 2..=10 {
        let spec = FlagSpec::new(n, 1).unwrap();
        let r = flag_presentation(spec);
        assert_eq!(r.relations().len(), 1);
        assert_eq!(r.relations()[0].to_string(), format!("x1^{n}"));
        assert_eq!(spec.manifold_dim(), n - 1);
    }
}
