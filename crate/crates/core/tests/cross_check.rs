use std::collections::BTreeMap;

use confcoh::dga::{cohomology_dims, cohomology_reps, cohomology_weights, FilteredBasis, Model};
use confcoh::qformula::{build_q, mixed_table, MixedTable};
use confcoh::repr::{CharacterEngine, RepLabel, VirtualRep, WeightVector};
use confcoh::verify::verify;

#[test]
fn dimensions_agree_with_the_oracle() {
    let engine = CharacterEngine::default();
    for (g, n_max) in [(0, 7), (1, 8), (2, 6), (3, 4)] {
        let report = verify(g, n_max, false, &engine).unwrap();
        assert!(report.passed(), "g={g}: {:?}", report.mismatches);
    }
}

#[test]
fn representations_agree_with_the_oracle() {
    let engine = CharacterEngine::default();
    for (g, n_max) in [(1, 7), (2, 5), (3, 3)] {
        let report = verify(g, n_max, true, &engine).unwrap();
        assert!(report.passed(), "g={g}: {:?}", report.mismatches);
    }
}

#[test]
fn torus_one_point_table() {
    let engine = CharacterEngine::default();
    let oracle = cohomology_reps(1, 1, &engine).unwrap();
    let mut want = MixedTable::new(1, 1);
    want.add(0, 0, &VirtualRep::trivial());
    want.add(1, 1, &VirtualRep::from_label(RepLabel::standard()));
    want.add(2, 2, &VirtualRep::trivial());
    assert_eq!(oracle, want);
    assert_eq!(mixed_table(1, 1).unwrap(), want);
}

#[test]
fn genus_two_two_points_matches_the_series_slice() {
    let engine = CharacterEngine::new(2);
    let slice = build_q(2, 2).unwrap().coeff_u(2).unwrap();
    let from_series = MixedTable::from_series_slice(2, 2, &slice);
    assert_eq!(cohomology_reps(2, 2, &engine).unwrap(), from_series);
}

#[test]
fn weight_masses_match_dimensions() {
    for (g, n) in [(1, 1), (1, 2), (1, 4), (2, 3)] {
        let weights = cohomology_weights(g, n).unwrap();
        let dims = cohomology_dims(g, n, Model::A).unwrap();
        let masses: BTreeMap<(u32, u32), u64> =
            weights.iter().map(|(k, ch)| (*k, ch.mass())).collect();
        assert_eq!(masses, dims, "g={g} n={n}");
        assert!(weights.values().all(|ch| ch.is_weyl_invariant()));
    }
    // sa1 and sb1 span the (1,1) chains at n = 2 with weights +1 and -1,
    // but d(sa1) = a1·p and d(sb1) = b1·p, so that block carries no classes.
    let basis = FilteredBasis::new(1, 2, Model::A);
    let chain_weights: Vec<Vec<i64>> = basis
        .block_keys()
        .filter(|k| (k.0, k.1) == (1, 1))
        .map(|k| k.2.clone())
        .collect();
    assert_eq!(chain_weights, vec![vec![-1], vec![1]]);
    let w = cohomology_weights(1, 2).unwrap();
    assert!(!w.contains_key(&(1, 1)));
    assert_eq!(w[&(2, 0)].get(&WeightVector::new(vec![0])), 1);
}
