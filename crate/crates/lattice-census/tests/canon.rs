//! Canonical-labeling invariants: idempotence, duality compatibility, and —
//! the load-bearing one — agreement with plain factorial-scan isomorphism on
//! every pair of small lattices.

mod common;

use common::{brute_force_isomorphic, random_adjunct, rng};
use lattice_census::canon::{canonical_form, canonical_poset};
use lattice_census::enumerate::enumerate_all_lattices;
use lattice_census::is_isomorphic;
use rand::seq::SliceRandom;

#[test]
fn canonicalization_is_idempotent() {
    let mut r = rng(0xCA01);
    for _ in 0..300 {
        let (_, p) = random_adjunct(&mut r, 12, 3);
        let c1 = canonical_poset(&p);
        let c2 = canonical_poset(&c1);
        assert_eq!(
            c1.covers(),
            c2.covers(),
            "canonical form must be a fixpoint"
        );
        assert_eq!(canonical_form(&p), canonical_form(&c1));
        assert!(
            is_isomorphic(&c1, &p),
            "canonicalization must not change the class"
        );
    }
}

#[test]
fn equal_forms_imply_equal_dual_forms() {
    let mut r = rng(0xCA02);
    for _ in 0..300 {
        let (_, p) = random_adjunct(&mut r, 12, 3);
        let mut perm: Vec<usize> = (0..p.n()).collect();
        perm.shuffle(&mut r);
        let q = p.relabel(&perm);
        assert_eq!(
            canonical_form(&p),
            canonical_form(&q),
            "relabeling must not change the form"
        );
        assert_eq!(
            canonical_form(&p.dual()),
            canonical_form(&q.dual()),
            "equal forms must stay equal after dualizing\n{}",
            p.to_text()
        );
    }
}

#[test]
fn canonical_form_equality_matches_brute_force_on_all_small_pairs() {
    for n in 1..=7 {
        let reps: Vec<_> = enumerate_all_lattices(n).unwrap().into_values().collect();
        for (i, p) in reps.iter().enumerate() {
            for q in &reps[i..] {
                let by_form = canonical_form(p) == canonical_form(q);
                let by_scan = brute_force_isomorphic(p, q);
                assert_eq!(
                    by_form,
                    by_scan,
                    "canonical labeling and permutation scan disagree\n{}\nvs\n{}",
                    p.to_text(),
                    q.to_text()
                );
            }
        }
    }
}

#[test]
fn relabeled_copies_are_recognized_by_both_checks() {
    let mut r = rng(0xCA03);
    for n in 2..=7 {
        let reps: Vec<_> = enumerate_all_lattices(n).unwrap().into_values().collect();
        for p in &reps {
            let mut perm: Vec<usize> = (0..p.n()).collect();
            perm.shuffle(&mut r);
            let q = p.relabel(&perm);
            assert!(brute_force_isomorphic(p, &q));
            assert_eq!(canonical_form(p), canonical_form(&q));
            assert!(is_isomorphic(p, &q));
        }
    }
}
