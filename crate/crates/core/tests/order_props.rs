//! Order-term invariants: total-order laws on sampled triples, exact
//! enumeration round trips, neighbor duality, and grammar round trips.

use ordlab::catalog::catalog;
use ordlab::order::{
    compare, enumerate, index_of, neighbor, parse_term, points, Cardinality, Direction, OrderTerm,
    Point,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

fn sample_points(term: &OrderTerm, want: usize) -> Vec<Point> {
    points(term).take(want).collect()
}

#[test]
fn compare_is_a_total_order_on_sampled_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (name, term) in catalog() {
        let sample = sample_points(&term, 120);
        for _ in 0..10_000 {
            let p = &sample[rng.gen_range(0..sample.len())];
            let q = &sample[rng.gen_range(0..sample.len())];
            let r = &sample[rng.gen_range(0..sample.len())];
            let pq = compare(&term, p, q).unwrap();
            let qp = compare(&term, q, p).unwrap();
            assert_eq!(pq, qp.reverse(), "{name}: antisymmetry at {p},{q}");
            assert_eq!(pq == Ordering::Equal, p == q, "{name}: reflexivity");
            let qr = compare(&term, q, r).unwrap();
            if pq == Ordering::Less && qr == Ordering::Less {
                assert_eq!(
                    compare(&term, p, r).unwrap(),
                    Ordering::Less,
                    "{name}: transitivity at {p},{q},{r}"
                );
            }
        }
    }
}

#[test]
fn enumeration_is_bijective_on_the_first_thousand_indices() {
    for (name, term) in catalog() {
        let cap = match term.size() {
            Cardinality::Finite(n) => (n as usize).min(1000),
            Cardinality::Infinite => 1000,
        };
        let mut seen = std::collections::HashSet::new();
        for (i, p) in points(&term).take(cap).enumerate() {
            assert!(p.is_valid_for(&term), "{name}: invalid point at {i}");
            assert!(seen.insert(p.clone()), "{name}: duplicate at {i}");
            assert_eq!(index_of(&term, &p), Ok(i as u128), "{name}: inverse at {i}");
        }
        assert_eq!(seen.len(), cap, "{name}");
        if let Cardinality::Finite(n) = term.size() {
            assert_eq!(enumerate(&term, n as u64), None, "{name}: beyond the end");
        }
    }
}

#[test]
fn successor_and_predecessor_are_inverse_where_defined() {
    for (name, term) in catalog() {
        for p in sample_points(&term, 300) {
            if let Some(s) = neighbor(&term, &p, Direction::Succ).unwrap() {
                assert_eq!(
                    neighbor(&term, &s, Direction::Pred).unwrap(),
                    Some(p.clone()),
                    "{name}: pred(succ({p}))"
                );
            }
            if let Some(s) = neighbor(&term, &p, Direction::Pred).unwrap() {
                assert_eq!(
                    neighbor(&term, &s, Direction::Succ).unwrap(),
                    Some(p.clone()),
                    "{name}: succ(pred({p}))"
                );
            }
        }
    }
}

#[test]
fn bounds_agree_with_enumerated_extrema() {
    for (name, term) in catalog() {
        let sample = sample_points(&term, 500);
        let min = sample
            .iter()
            .min_by(|a, b| compare(&term, a, b).unwrap())
            .unwrap();
        let max = sample
            .iter()
            .max_by(|a, b| compare(&term, a, b).unwrap())
            .unwrap();
        let (has_least, has_greatest) = term.bounds();
        if has_least {
            assert_eq!(term.least().as_ref(), Some(min), "{name}: least");
        } else {
            // something smaller shows up in a deeper scan
            let deeper = sample_points(&term, 4000);
            assert!(
                deeper
                    .iter()
                    .any(|p| compare(&term, p, min).unwrap() == Ordering::Less),
                "{name}: no point below the sampled minimum"
            );
        }
        if has_greatest {
            assert_eq!(term.greatest().as_ref(), Some(max), "{name}: greatest");
        } else {
            let deeper = sample_points(&term, 4000);
            assert!(
                deeper
                    .iter()
                    .any(|p| compare(&term, p, max).unwrap() == Ordering::Greater),
                "{name}: no point above the sampled maximum"
            );
        }
    }
}

fn arb_term() -> impl Strategy<Value = OrderTerm> {
    let leaf = prop_oneof![
        (1u32..6).prop_map(OrderTerm::Finite),
        Just(OrderTerm::Omega),
        Just(OrderTerm::OmegaStar),
        Just(OrderTerm::Zeta),
        Just(OrderTerm::Eta),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4).prop_map(OrderTerm::sum),
            (inner.clone(), inner).prop_map(|(a, b)| OrderTerm::replace(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn printer_round_trips(term in arb_term()) {
        let printed = term.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap(), term);
    }

    #[test]
    fn reversal_mirrors_comparison(term in arb_term()) {
        let rev = term.reversed();
        let sample: Vec<Point> = points(&term).take(24).collect();
        for p in &sample {
            for q in &sample {
                let fwd = compare(&term, p, q).unwrap();
                let mirrored = compare(&rev, &p.mirrored_in(&term), &q.mirrored_in(&term)).unwrap();
                prop_assert_eq!(fwd, mirrored.reverse());
            }
        }
    }

    #[test]
    fn reversal_mirrors_neighbors(term in arb_term()) {
        let rev = term.reversed();
        for p in points(&term).take(24) {
            let s = neighbor(&term, &p, Direction::Succ).unwrap();
            let mirrored = neighbor(&rev, &p.mirrored_in(&term), Direction::Pred).unwrap();
            prop_assert_eq!(s.map(|x| x.mirrored_in(&term)), mirrored);
        }
    }

    #[test]
    fn enumeration_round_trips_on_random_terms(term in arb_term()) {
        for (i, p) in points(&term).take(60).enumerate() {
            prop_assert!(p.is_valid_for(&term));
            prop_assert_eq!(index_of(&term, &p).unwrap(), i as u128);
        }
    }
}
