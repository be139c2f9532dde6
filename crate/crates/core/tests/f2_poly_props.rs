mod common;

use flagcert_core::{complete_symmetric, series_invert, Monomial, PolyF2, Vars};
use proptest::prelude::*;

fn poly_strategy(count: usize, max_degree: u32) -> impl Strategy<Value = PolyF2> {
    let vars = Vars::new(0, count);
    proptest::collection::vec(proptest::collection::vec(0..=max_degree, count), 0..12).prop_map(
        move |exps| {
            let monos = exps
                .into_iter()
                .filter(|e| e.iter().sum::<u32>() <= max_degree)
                .map(Monomial::from_exponents);
            PolyF2::from_monomials(vars, monos).unwrap()
        },
    )
}

fn pair_strategy() -> impl Strategy<Value = (PolyF2, PolyF2)> {
    (1usize..=5).prop_flat_map(|count| (poly_strategy(count, 8), poly_strategy(count, 8)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mul_matches_naive_convolution((p, q) in pair_strategy()) {
        prop_assert_eq!(&p * &q, common::naive_product(&p, &q));
    }
}

proptest! {
    #[test]
    fn self_sum_vanishes(p in poly_strategy(4, 6)) {
        prop_assert!((&p + &p).is_zero());
    }

    #[test]
    fn frobenius_is_additive((p, q) in pair_strategy()) {
        let s = &p + &q;
        prop_assert_eq!(&s * &s, &(&p * &p) + &(&q * &q));
    }

    #[test]
    fn text_round_trip(p in poly_strategy(3, 7)) {
        prop_assert_eq!(PolyF2::parse(p.vars(), &p.to_string()).unwrap(), p);
    }
}

#[test]
fn complete_symmetric_recurrence() {
    // h_d(x1..xi) = h_d(x1..x_{i-1}) + x_i h_{d-1}(x1..xi)
    for count in 2..=6usize {
        let vars = Vars::new(1, count);
        for i in 2..=count {
            let first: Vec<usize> = (1..=i).collect();
            let prev: Vec<usize> = (1..i).collect();
            let xi = PolyF2::var(vars, i).unwrap();
            for d in 1..=8 {
                let lhs = complete_symmetric(vars, d, &first).unwrap();
                let rhs = &complete_symmetric(vars, d, &prev).unwrap()
                    + &(&xi * &complete_symmetric(vars, d - 1, &first).unwrap());
                assert_eq!(lhs, rhs, "count={count} i={i} d={d}");
            }
        }
    }
}

#[test]
fn inverse_product_is_sum_of_complete_symmetric() {
    for ell in 1..=6usize {
        let vars = Vars::new(1, ell);
        let idx: Vec<usize> = vars.indices().collect();
        let product = idx.iter().fold(PolyF2::one(vars), |acc, &i| {
            &acc * &(&PolyF2::one(vars) + &PolyF2::var(vars, i).unwrap())
        });
        for cap in 0..=12u32 {
            let inv = series_invert(&product, cap).unwrap();
            let expected = (0..=cap).fold(PolyF2::zero(vars), |acc, d| {
                &acc + &complete_symmetric(vars, d, &idx).unwrap()
            });
            assert_eq!(inv, expected, "ell={ell} cap={cap}");
        }
    }
}

#[test]
fn inverse_multiplies_back_to_one() {
    let vars = Vars::new(0, 3);
    let p = PolyF2::parse(vars, "1+x0+x1*x2+x0^2*x2+x2^3").unwrap();
    for cap in 0..8 {
        let q = series_invert(&p, cap).unwrap();
        assert!((&p * &q).truncate(cap).is_one(), "cap={cap}");
    }
}

#[test]
fn enumerated_degree_three_in_two_vars() {
    let vars = Vars::new(1, 2);
    let all = Monomial::all_of_degree(2, 3);
    assert_eq!(
        complete_symmetric(vars, 3, &[1, 2]).unwrap(),
        PolyF2::from_monomials(vars, all).unwrap()
    );
}
