//! Oracle-layer properties: calibration of the exhaustive search against the
//! known class counts, agreement between the two oracles, isomorphism
//! and duality invariance of classification, determinism, and verification.

mod common;

use std::collections::BTreeMap;

use common::{random_adjunct, rng};
use lattice_census::canon::canonical_form;
use lattice_census::enumerate::{
    classify, enumerate_adjunct_lattices, enumerate_all_lattices, f_family, is_dismantlable,
    verify, EnumerateError,
};
use lattice_census::formulas::FormulaId;
use lattice_census::{catalog, BasicBlockId, ClassKey};
use rand::seq::SliceRandom;

/// Isomorphism classes of lattices on 1..9 elements (OEIS A006966).
const LATTICE_COUNTS: [usize; 9] = [1, 1, 1, 2, 5, 15, 53, 222, 1078];

#[test]
fn exhaustive_oracle_reproduces_the_known_lattice_counts() {
    for (i, &expected) in LATTICE_COUNTS.iter().enumerate() {
        let n = i + 1;
        let classes = enumerate_all_lattices(n).unwrap();
        assert_eq!(classes.len(), expected, "lattice classes on {n} elements");
    }
}

#[test]
fn adjunct_oracle_equals_the_dismantlable_slice_of_the_exhaustive_oracle() {
    for n in 1..=8 {
        let adjunct: Vec<_> = enumerate_adjunct_lattices(n, 3)
            .unwrap()
            .into_keys()
            .collect();
        let exhaustive = enumerate_all_lattices(n).unwrap();
        let filtered: Vec<_> = exhaustive
            .iter()
            .filter(|(_, p)| p.nullity() <= 3 && is_dismantlable(p).unwrap())
            .map(|(form, _)| form.clone())
            .collect();
        assert_eq!(
            adjunct, filtered,
            "adjunct classes on {n} elements must be exactly the dismantlable ones of nullity <= 3"
        );
        for form in &adjunct {
            assert!(
                exhaustive.contains_key(form),
                "adjunct output must be a lattice class"
            );
        }
    }
}

#[test]
fn classification_is_isomorphism_invariant() {
    let mut r = rng(0xE501);
    for _ in 0..300 {
        let (_, p) = random_adjunct(&mut r, 12, 3);
        let mut perm: Vec<usize> = (0..p.n()).collect();
        perm.shuffle(&mut r);
        let q = p.relabel(&perm);
        assert_eq!(classify(&p).unwrap(), classify(&q).unwrap());
    }
}

#[test]
fn class_multisets_are_invariant_under_duality() {
    for n in 1..=8 {
        let mut direct: BTreeMap<ClassKey, usize> = BTreeMap::new();
        let mut dualized: BTreeMap<ClassKey, usize> = BTreeMap::new();
        for p in enumerate_all_lattices(n).unwrap().values() {
            *direct.entry(classify(p).unwrap()).or_default() += 1;
            *dualized.entry(classify(&p.dual()).unwrap()).or_default() += 1;
        }
        assert_eq!(
            direct, dualized,
            "class census on {n} elements must be self-dual"
        );
    }
}

#[test]
fn enumeration_is_deterministic_across_worker_counts() {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let quad = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let from_single = single.install(|| enumerate_all_lattices(7).unwrap());
    let from_quad = quad.install(|| enumerate_all_lattices(7).unwrap());
    assert_eq!(from_single.len(), from_quad.len());
    for ((form_a, poset_a), (form_b, poset_b)) in from_single.iter().zip(from_quad.iter()) {
        assert_eq!(form_a, form_b);
        assert_eq!(poset_a.covers(), poset_b.covers());
    }
    let adj_single = single.install(|| enumerate_adjunct_lattices(10, 3).unwrap());
    let adj_quad = quad.install(|| enumerate_adjunct_lattices(10, 3).unwrap());
    assert_eq!(adj_single, adj_quad);
}

#[test]
fn family_classifier_recognizes_the_three_reducible_blocks() {
    use BasicBlockId::*;
    for (id, family) in [(F1, 1), (F2, 2), (F3, 3), (F4, 4)] {
        assert_eq!(f_family(&catalog(id)).unwrap(), family, "{id:?}");
    }
    // Families 1 and 2 swap under duality; 3 and 4 are self-paired.
    for id in [F1, F2, F3, F4] {
        let direct = f_family(&catalog(id)).unwrap();
        let dual = f_family(&catalog(id).dual()).unwrap();
        let expected = match direct {
            1 => 2,
            2 => 1,
            other => other,
        };
        assert_eq!(dual, expected, "{id:?} family under duality");
    }
    assert_eq!(
        f_family(&catalog(B1)).unwrap_err(),
        EnumerateError::NotThreeReducibles { r: 4 }
    );
}

#[test]
fn verification_passes_on_a_small_grid() {
    let report = verify(6, &[FormulaId::L2, FormulaId::L3, FormulaId::L43]).unwrap();
    assert!(report.all_match());
    assert!(!report.rows.is_empty());
    for row in &report.rows {
        assert_eq!(row.formula_value, row.oracle_value);
    }
    let empty = verify(6, &[]).unwrap();
    assert!(empty.rows.is_empty());
    assert!(empty.all_match(), "an empty report matches vacuously");
}

#[test]
fn oracle_budgets_are_enforced() {
    assert!(matches!(
        enumerate_all_lattices(10).unwrap_err(),
        EnumerateError::BeyondBudget {
            param: "n",
            value: 10,
            ..
        }
    ));
    assert!(matches!(
        enumerate_adjunct_lattices(12, 3).unwrap_err(),
        EnumerateError::BeyondBudget {
            param: "n",
            value: 12,
            ..
        }
    ));
    assert!(matches!(
        enumerate_adjunct_lattices(8, 5).unwrap_err(),
        EnumerateError::BeyondBudget {
            param: "k_max",
            value: 5,
            ..
        }
    ));
    assert!(matches!(
        verify(99, &[FormulaId::P]).unwrap_err(),
        EnumerateError::BeyondBudget {
            param: "n_max",
            value: 99,
            ..
        }
    ));
    assert!(matches!(
        enumerate_all_lattices(0).unwrap_err(),
        EnumerateError::Zero { .. }
    ));
}

#[test]
fn canonical_keys_are_stable_across_construction_paths() {
    // The same class reached through different expressions must land on the
    // same canonical form and the same class key.
    let a = lattice_census::construct::realize(&lattice_census::AdjunctRep::new(
        vec![4, 1, 1],
        vec![(0, 2), (1, 3)],
    ))
    .unwrap();
    let b = catalog(BasicBlockId::F5);
    assert_eq!(canonical_form(&a), canonical_form(&b));
    assert_eq!(classify(&a).unwrap(), classify(&b).unwrap());
}
