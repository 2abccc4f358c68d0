//! Cross-module invariants checked exhaustively over small genus ranges and
//! with randomized inputs.

use proptest::prelude::*;

use nsmoduli::cotangent;
use nsmoduli::enumeration::{enumerate_by_genus, TreeNode};
use nsmoduli::presentation::{self, TieBreak};
use nsmoduli::semigroup::NumericalSemigroup;

#[test]
fn betti_search_window_is_sound_up_to_genus_7() {
    for s in enumerate_by_genus(7).unwrap().filter(|s| s.genus() >= 1) {
        let gens = s.generators();
        let a_r = gens[gens.len() - 1];
        let bound = s.frobenius() + gens[gens.len() - 2] + a_r;
        let base = presentation::betti_elements(&s).unwrap();
        let extended = presentation::betti_elements_up_to(&s, bound + a_r);
        assert_eq!(base, extended, "new Betti elements above the bound for {s}");
    }
}

#[test]
fn tie_breaks_agree_on_ranks_up_to_genus_7() {
    for s in enumerate_by_genus(7).unwrap().filter(|s| s.genus() >= 1) {
        let a = presentation::minimal_presentation_with(&s, TieBreak::LexMax).unwrap();
        let b = presentation::minimal_presentation_with(&s, TieBreak::LexMin).unwrap();
        assert_eq!(a.betti_degrees, b.betti_degrees, "{s}");
        let max_betti = *a.betti_degrees.last().unwrap_or(&0);
        for l in -max_betti..=s.frobenius() {
            let da = cotangent::degree_cell(&s, &a, l).v_dim;
            let db = cotangent::degree_cell(&s, &b, l).v_dim;
            assert_eq!(da, db, "dim V at degree {l} differs for {s}");
        }
    }
}

#[test]
fn t1_window_extension_adds_nothing_up_to_genus_7() {
    for s in enumerate_by_genus(7).unwrap().filter(|s| s.genus() >= 1) {
        let p = presentation::minimal_presentation(&s).unwrap();
        let graded = cotangent::t1_graded_with(&s, &p).unwrap();
        let max_betti = *p.betti_degrees.last().unwrap();
        let a_r = *s.generators().last().unwrap();
        let mut total = 0;
        for l in (-max_betti - a_r)..=(s.frobenius() - s.multiplicity() + a_r) {
            total += cotangent::t1_dimension(&s, &p, l).unwrap();
        }
        let expected: i64 = graded.by_degree.values().sum();
        assert_eq!(total, expected, "window unsound for {s}");
    }
}

#[test]
fn parallel_and_serial_enumeration_agree() {
    let serial = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| enumerate_by_genus(7).unwrap().collect::<Vec<_>>());
    let parallel = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| enumerate_by_genus(7).unwrap().collect::<Vec<_>>());
    assert_eq!(serial, parallel);
    let gaps_serial: Vec<_> = serial.iter().map(|s| s.gaps().to_vec()).collect();
    let gaps_parallel: Vec<_> = parallel.iter().map(|s| s.gaps().to_vec()).collect();
    assert_eq!(gaps_serial, gaps_parallel);
}

#[test]
fn gap_generator_roundtrip_up_to_genus_7() {
    for s in enumerate_by_genus(7).unwrap() {
        let from_gaps = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
        assert_eq!(from_gaps.generators(), s.generators());
        let from_gens = NumericalSemigroup::from_generators(s.generators()).unwrap();
        assert_eq!(from_gens.gaps(), s.gaps());
    }
}

#[test]
fn symmetric_membership_mirrors_up_to_genus_7() {
    for s in enumerate_by_genus(7).unwrap().filter(|s| s.genus() >= 1) {
        if s.is_symmetric() {
            for n in 0..=s.frobenius() {
                assert!(s.contains(n) ^ s.contains(s.frobenius() - n));
            }
        }
        // lambda stays within [1, g] and ewt below the classical weight
        let lambda = s.lambda();
        assert!(lambda >= 1 && lambda <= s.genus());
        let weight: i64 = s
            .gaps()
            .iter()
            .enumerate()
            .map(|(i, &l)| l - (i as i64 + 1))
            .sum();
        assert!(s.effective_weight() <= weight);
    }
}

#[test]
fn effective_generators_produce_the_next_level() {
    for s in enumerate_by_genus(5).unwrap() {
        let node = TreeNode::new(s);
        for &e in &node.effective_generators {
            assert!(node.semigroup.generators().contains(&e));
            assert!(e > node.semigroup.frobenius());
        }
        assert_eq!(node.children().len(), node.effective_generators.len());
    }
}

proptest! {
    #[test]
    fn random_gap_sets_roundtrip_or_reject(raw in prop::collection::btree_set(1i64..24, 0..10)) {
        let gaps: Vec<i64> = raw.into_iter().collect();
        match NumericalSemigroup::from_gaps(&gaps) {
            Ok(s) => {
                prop_assert_eq!(s.gaps(), gaps.as_slice());
                prop_assert_eq!(s.genus(), gaps.len() as i64);
                let back = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
                prop_assert_eq!(back.generators(), s.generators());
            }
            Err(e) => {
                // the reported witness must be a genuine violation
                match e {
                    nsmoduli::SemigroupError::NotASemigroup { a, b, sum } => {
                        prop_assert!(!gaps.contains(&a));
                        prop_assert!(!gaps.contains(&b));
                        prop_assert!(gaps.contains(&sum));
                        prop_assert_eq!(a + b, sum);
                    }
                    other => return Err(TestCaseError::fail(format!("unexpected error {other}"))),
                }
            }
        }
    }

    #[test]
    fn random_generators_yield_canonical_semigroups(raw in prop::collection::btree_set(2i64..40, 1..6)) {
        let gens: Vec<i64> = raw.into_iter().collect();
        match NumericalSemigroup::from_generators(&gens) {
            Ok(s) => {
                // minimal generators form a subset generating the same set
                for a in s.generators() {
                    prop_assert!(gens.iter().any(|g| a <= g));
                }
                let again = NumericalSemigroup::from_generators(s.generators()).unwrap();
                prop_assert_eq!(again.generators(), s.generators());
                prop_assert_eq!(again.gaps(), s.gaps());
                // membership closed under adding any generator
                for &a in s.generators() {
                    for n in 0..=s.frobenius() + 1 {
                        if s.contains(n) {
                            prop_assert!(s.contains(n + a));
                        }
                    }
                }
            }
            Err(nsmoduli::SemigroupError::GcdError { gcd }) => prop_assert!(gcd > 1),
            Err(other) => return Err(TestCaseError::fail(format!("unexpected error {other}"))),
        }
    }

    #[test]
    fn endo_degrees_above_frobenius(gens_idx in 0usize..4, offset in 0i64..50) {
        let all = [vec![2i64, 3], vec![6, 7, 8], vec![3, 7, 11], vec![6, 9, 10, 13, 14]];
        let s = NumericalSemigroup::from_generators(&all[gens_idx]).unwrap();
        prop_assert!(s.is_endo_degree(s.frobenius() + offset));
    }
}
