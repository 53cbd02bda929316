use permutree::lattice::{self, predicted_node_bound};
use permutree::oracle::{self, Family};
use permutree::{
    enumerate, tree_from_inversion_set, Decoration, Extreme, InversionSet, Kind, Permutree,
};
use proptest::prelude::*;
use rayon::prelude::*;

fn all_up_to(max_n: usize) -> Vec<Decoration> {
    (1..=max_n).flat_map(Decoration::all).collect()
}

#[test]
fn inversion_components_sit_inside_cubic_components() {
    for d in all_up_to(5) {
        let l = enumerate(&d).unwrap();
        for t in l.trees() {
            let (b, c) = (t.inversion_set(), t.cubic_data().set);
            assert!(b.is_subset(&c), "{t}");
            for (i, &ci) in c.vector().iter().enumerate() {
                assert!(ci <= d.len() - (i + 1));
            }
        }
    }
}

#[test]
fn coordinate_sums_lie_on_the_hyperplane() {
    all_up_to(6).par_iter().for_each(|d| {
        let n = d.len() as i64;
        for t in enumerate(d).unwrap().trees() {
            assert_eq!(t.vertex_coordinates().iter().sum::<i64>(), n * (n + 1) / 2, "{t}");
        }
    });
}

#[test]
fn edge_cut_sides_partition_the_vertices() {
    for d in all_up_to(5) {
        for t in enumerate(&d).unwrap().trees() {
            for cut in t.edge_cuts() {
                assert!(cut.child_side.contains(cut.child));
                assert!(cut.parent_side.contains(cut.parent));
                assert!(cut.child_side.intersection(cut.parent_side).is_empty());
                assert_eq!(cut.child_side.len() + cut.parent_side.len(), d.len());
            }
        }
    }
}

#[test]
fn bracket_characterization_for_down_decorations() {
    for n in 1..=6 {
        let l = enumerate(&Decoration::uniform(Kind::Down, n).unwrap()).unwrap();
        assert!(l.nodes().iter().all(oracle::satisfies_bracket_characterization));
    }
}

#[test]
fn node_counts_of_classical_families() {
    for n in 1..=6 {
        for family in [Family::Permutation, Family::Tamari, Family::Boolean, Family::Cambrian] {
            let r = oracle::specialization_check(family, n).unwrap();
            assert!(r.passed, "{r}");
        }
    }
}

#[test]
fn predicted_bounds_match_classical_counts() {
    for d in all_up_to(6) {
        let count = enumerate(&d).unwrap().len() as u128;
        let bound = predicted_node_bound(&d);
        assert!(count <= bound, "{d}");
        let interior = d.interior();
        let classical = interior.iter().all(|k| *k == Kind::UpDown)
            || interior.iter().all(|k| matches!(k, Kind::Up | Kind::Down))
            || interior.iter().all(|k| *k == Kind::None);
        if classical {
            assert_eq!(count, bound, "{d}");
        }
    }
}

#[test]
fn meet_is_idempotent_commutative_and_associative() {
    all_up_to(5).par_iter().for_each(|d| {
        let nodes = enumerate(d).unwrap().nodes().to_vec();
        let meet = |a: &InversionSet, b: &InversionSet| lattice::meet(a, b, d).unwrap();
        for a in &nodes {
            assert_eq!(&meet(a, a), a);
            for b in &nodes {
                let ab = meet(a, b);
                assert_eq!(ab, meet(b, a));
                assert!(ab.is_subset(&a.intersection(b)));
                assert!(lattice::is_valid_inversion_set(&ab, d).unwrap());
                for c in &nodes {
                    assert_eq!(meet(&ab, c), meet(a, &meet(b, c)), "{d}");
                }
            }
        }
    });
}

#[test]
fn meet_is_componentwise_for_down_decorations() {
    for n in 1..=6 {
        let d = Decoration::uniform(Kind::Down, n).unwrap();
        let nodes = enumerate(&d).unwrap().nodes().to_vec();
        for a in &nodes {
            for b in &nodes {
                assert_eq!(lattice::meet(a, b, &d).unwrap(), a.intersection(b));
            }
        }
    }
}

#[test]
fn reconstruction_round_trips() {
    all_up_to(6).par_iter().for_each(|d| {
        let l = enumerate(d).unwrap();
        for (t, e) in l.trees().iter().zip(l.nodes()) {
            let rebuilt = tree_from_inversion_set(e, d).unwrap();
            assert_eq!(&rebuilt, t);
            assert_eq!(&rebuilt.inversion_set(), e);
        }
    });
}

#[test]
fn rotation_search_finds_the_same_family() {
    for d in all_up_to(5) {
        let by_rotation: Vec<InversionSet> = oracle::enumerate_trees_by_rotation(&d)
            .iter()
            .map(|t| t.inversion_set())
            .collect();
        assert_eq!(by_rotation, enumerate(&d).unwrap().nodes());
    }
}

#[test]
fn cover_labels_are_edges_of_the_source_tree() {
    for d in all_up_to(5) {
        let l = enumerate(&d).unwrap();
        for c in l.covers() {
            let (i, j) = c.pair;
            assert!(l.trees()[c.source].has_edge(i, j), "{d} {c:?}");
        }
    }
}

#[test]
fn cubic_vectors_of_the_maximum() {
    for d in all_up_to(6) {
        let n = d.len();
        let max = Permutree::extreme(&d, Extreme::Max);
        let expected: Vec<usize> = (1..n).map(|i| n - i).collect();
        assert_eq!(max.cubic_data().vector(), expected);
    }
}

fn arb_decoration() -> impl Strategy<Value = Decoration> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(proptest::sample::select(Kind::ALL.to_vec()), n)
            .prop_map(|kinds| Decoration::normalized_from_kinds(kinds).unwrap().decoration)
    })
}

/// A decoration and a tree reached from the minimum by random up rotations.
fn arb_tree() -> impl Strategy<Value = Permutree> {
    (arb_decoration(), proptest::collection::vec(any::<prop::sample::Index>(), 0..40)).prop_map(
        |(d, picks)| {
            let mut t = Permutree::extreme(&d, Extreme::Min);
            for pick in picks {
                let ups = t.up_edges();
                if ups.is_empty() {
                    break;
                }
                let (i, j) = ups[pick.index(ups.len())];
                t = t.rotate(i, j).unwrap();
            }
            t
        },
    )
}

proptest! {
    #[test]
    fn random_trees_are_valid_and_round_trip(t in arb_tree()) {
        prop_assert!(t.validate().is_empty());
        let b = t.inversion_set();
        prop_assert!(lattice::is_valid_inversion_set(&b, t.decoration()).unwrap());
        prop_assert_eq!(tree_from_inversion_set(&b, t.decoration()).unwrap(), t.clone());
        let n = t.n() as i64;
        prop_assert_eq!(t.vertex_coordinates().iter().sum::<i64>(), n * (n + 1) / 2);
    }

    #[test]
    fn rotations_follow_the_closure_law(t in arb_tree()) {
        for (i, j) in t.up_edges() {
            let r = t.rotate(i, j).unwrap();
            let mut grown = t.inversion_set();
            grown.insert(i, j).unwrap();
            prop_assert_eq!(r.inversion_set(), grown.transitive_closure());
            prop_assert_eq!(r.rotate_down(i, j).unwrap(), t.clone());
            let cb = t.cubic_data().vector();
            let ca = r.cubic_data().vector();
            let changed: Vec<usize> = (0..cb.len()).filter(|&k| cb[k] != ca[k]).collect();
            prop_assert_eq!(changed.len(), 1);
            prop_assert!(ca[changed[0]] > cb[changed[0]]);
        }
    }

    #[test]
    fn cover_candidates_are_valid_and_above(t in arb_tree()) {
        let b = t.inversion_set();
        for (_, up) in lattice::covers(&b, t.decoration()).unwrap() {
            prop_assert!(b.is_subset(&up) && b != up);
            prop_assert!(lattice::is_valid_inversion_set(&up, t.decoration()).unwrap());
        }
    }
}
