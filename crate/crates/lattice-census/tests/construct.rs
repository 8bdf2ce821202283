//! Constructor laws and the block catalog: per-block class data, duality
//! pairings, pairwise distinctness, and the edge/nullity laws of the sum and
//! adjunct operations.

mod common;

use common::{diamond, random_adjunct, rng};
use lattice_census::canon::canonical_form;
use lattice_census::construct::{
    adjunct, catalog_rep, chain, direct_sum, realize, vertical_sum, ConstructError,
};
use lattice_census::enumerate::classify;
use lattice_census::reduce::{basic_block, identify_block};
use lattice_census::{catalog, is_isomorphic, BasicBlockId, ClassKey};
use rand::Rng;

use BasicBlockId::*;

/// Expected `(n, r, k, height)` for each catalog block. Block sizes follow
/// from the chain lengths of their adjunct expressions; heights equal the
/// base-chain height since every adjoined chain sits strictly inside an
/// interval of elements already placed.
const EXPECTED: [(BasicBlockId, usize, usize, usize, usize); 29] = [
    (F1, 6, 3, 2, 3),
    (F2, 6, 3, 2, 3),
    (F3, 7, 3, 2, 4),
    (F4, 8, 3, 3, 4),
    (F5, 6, 4, 2, 3),
    (F6, 7, 4, 2, 4),
    (F7, 8, 4, 2, 5),
    (B1, 7, 4, 3, 3),
    (B2, 7, 4, 3, 3),
    (B3, 7, 4, 3, 3),
    (B4, 8, 4, 3, 4),
    (B5, 8, 4, 3, 4),
    (B6, 8, 4, 3, 4),
    (B7, 8, 4, 3, 4),
    (B8, 8, 4, 3, 4),
    (B9, 8, 4, 3, 4),
    (B10, 8, 4, 3, 4),
    (B11, 8, 4, 3, 4),
    (B12, 8, 4, 3, 4),
    (B13, 9, 4, 3, 5),
    (B14, 9, 4, 3, 5),
    (B15, 9, 4, 3, 5),
    (B16, 9, 4, 3, 5),
    (B17, 9, 4, 3, 5),
    (B18, 9, 4, 3, 5),
    (B19, 9, 4, 3, 5),
    (B20, 9, 4, 3, 5),
    (B21, 9, 4, 3, 5),
    (B22, 10, 4, 3, 6),
];

#[test]
fn catalog_blocks_have_their_stated_class_data() {
    for (id, n, r, k, h) in EXPECTED {
        let p = catalog(id);
        assert!(p.is_lattice(), "{id:?} must be a lattice");
        assert_eq!(p.n(), n, "{id:?} size");
        assert_eq!(p.nullity(), k, "{id:?} nullity");
        assert_eq!(
            p.reducible_elements().unwrap().len(),
            r,
            "{id:?} reducible count"
        );
        assert!(p.is_rc().unwrap(), "{id:?} must have comparable reducibles");
        assert_eq!(p.height(), h, "{id:?} height");
        assert_eq!(
            classify(&p).unwrap(),
            ClassKey {
                n,
                r,
                k,
                rc: true,
                h: Some(h)
            },
            "{id:?} class key"
        );
        assert!(
            is_isomorphic(&basic_block(&p), &p),
            "{id:?} must be a fixpoint of block reduction"
        );
        assert_eq!(
            identify_block(&p),
            Some(id),
            "{id:?} must identify as itself"
        );
    }
}

#[test]
fn catalog_blocks_are_pairwise_non_isomorphic() {
    let forms: Vec<_> = BasicBlockId::ALL
        .iter()
        .map(|&id| canonical_form(&catalog(id)))
        .collect();
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            assert_ne!(
                forms[i],
                forms[j],
                "{:?} and {:?} must be distinct blocks",
                BasicBlockId::ALL[i],
                BasicBlockId::ALL[j]
            );
        }
    }
}

#[test]
fn catalog_duality_pairings_hold() {
    let dual_pairs = [
        (B1, B2),
        (B6, B7),
        (B8, B9),
        (B10, B11),
        (B13, B14),
        (B15, B16),
        (B17, B18),
        (B19, B20),
    ];
    for (a, b) in dual_pairs {
        assert!(
            is_isomorphic(&catalog(a).dual(), &catalog(b)),
            "{a:?} and {b:?} must be dual to each other"
        );
    }
    assert!(
        is_isomorphic(&catalog(F1).dual(), &catalog(F2)),
        "F1 and F2 must be dual"
    );
    for id in [F3, F4, F5, F6, F7, B3, B4, B5, B12, B21, B22] {
        assert!(
            is_isomorphic(&catalog(id).dual(), &catalog(id)),
            "{id:?} must be self-dual"
        );
    }
    // Duality permutes the catalog: every dualized block is again a block.
    for id in BasicBlockId::ALL {
        assert!(
            identify_block(&catalog(id).dual()).is_some(),
            "the dual of {id:?} must be in the catalog"
        );
    }
}

#[test]
fn realize_nullity_equals_pair_count() {
    let mut r = rng(0xC501);
    for _ in 0..500 {
        let (rep, built) = random_adjunct(&mut r, 14, 3);
        let realized = realize(&rep).unwrap();
        assert_eq!(
            realized.covers(),
            built.covers(),
            "realize must replay the construction"
        );
        assert_eq!(
            realized.nullity(),
            rep.pairs.len(),
            "nullity must count the adjoined chains"
        );
        assert_eq!(classify(&realized).unwrap().k, rep.pairs.len());
    }
}

#[test]
fn adjunct_edge_law_holds_on_random_valid_applications() {
    let mut r = rng(0xC502);
    let mut applications = 0usize;
    while applications < 100 {
        let (_, l1) = random_adjunct(&mut r, 10, 2);
        let (_, l2) = random_adjunct(&mut r, 6, 1);
        let candidates: Vec<(usize, usize)> = (0..l1.n())
            .flat_map(|a| (0..l1.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| l1.lt(a, b) && !l1.covers_pair(a, b))
            .collect();
        let Some(&(a, b)) = candidates.get(r.gen_range(0..candidates.len().max(1))) else {
            continue;
        };
        let l = adjunct(&l1, a, b, &l2).unwrap();
        assert_eq!(
            l.covers().len(),
            l1.covers().len() + l2.covers().len() + 2,
            "adjunct edge law"
        );
        assert_eq!(l.n(), l1.n() + l2.n());
        assert!(l.is_lattice());
        assert_eq!(
            l.nullity(),
            l1.nullity() + l2.nullity() + 1,
            "adjunct adds one cycle"
        );
        applications += 1;
    }
}

#[test]
fn adjunct_rejects_invalid_pairs_and_operands() {
    let c4 = chain(4);
    assert_eq!(
        adjunct(&c4, 0, 1, &chain(1)).unwrap_err(),
        ConstructError::PairIsCover { a: 0, b: 1 }
    );
    assert_eq!(
        adjunct(&c4, 2, 0, &chain(1)).unwrap_err(),
        ConstructError::PairNotStrictlyBelow { a: 2, b: 0 }
    );
    assert_eq!(
        adjunct(&c4, 1, 1, &chain(1)).unwrap_err(),
        ConstructError::PairNotStrictlyBelow { a: 1, b: 1 }
    );
    assert_eq!(
        adjunct(&c4, 0, 9, &chain(1)).unwrap_err(),
        ConstructError::IndexOutOfRange { index: 9, n: 4 }
    );
    let antichain = lattice_census::Poset::new(2, &[]).unwrap();
    assert_eq!(
        adjunct(&antichain, 0, 1, &chain(1)).unwrap_err(),
        ConstructError::OperandNotLattice { side: "left" }
    );
    assert_eq!(
        adjunct(&c4, 0, 2, &antichain).unwrap_err(),
        ConstructError::OperandNotLattice { side: "right" }
    );
}

#[test]
fn realize_reports_the_failing_stage() {
    use lattice_census::construct::AdjunctRep;
    // Stage 1 rejects a covering pair.
    let err = realize(&AdjunctRep::new(vec![4, 1], vec![(0, 1)])).unwrap_err();
    assert_eq!(err.stage, 1);
    assert_eq!(err.source, ConstructError::PairIsCover { a: 0, b: 1 });
    // Stage 2 rejects an out-of-range index even though stage 1 is fine.
    let err = realize(&AdjunctRep::new(vec![4, 1, 1], vec![(0, 2), (40, 41)])).unwrap_err();
    assert_eq!(err.stage, 2);
    // Empty chains report the stage that holds them; shape problems are stage 0.
    let err = realize(&AdjunctRep::new(vec![4, 0], vec![(0, 2)])).unwrap_err();
    assert_eq!((err.stage, err.source), (1, ConstructError::EmptyChain));
    let err = realize(&AdjunctRep::new(vec![0], vec![])).unwrap_err();
    assert_eq!((err.stage, err.source), (0, ConstructError::EmptyChain));
    assert_eq!(
        realize(&AdjunctRep::new(vec![], vec![])).unwrap_err().stage,
        0
    );
}

#[test]
fn direct_sum_stacks_and_adds_one_edge() {
    assert!(is_isomorphic(&direct_sum(&chain(2), &chain(3)), &chain(5)));
    let d = diamond();
    let dd = direct_sum(&d, &d);
    assert_eq!(dd.n(), 8);
    assert_eq!(dd.covers().len(), 4 + 4 + 1, "direct sum edge law");
    assert!(dd.is_lattice());
    let mut r = rng(0xC503);
    for _ in 0..100 {
        let (_, p) = random_adjunct(&mut r, 8, 2);
        let (_, q) = random_adjunct(&mut r, 8, 2);
        let s = direct_sum(&p, &q);
        assert_eq!(s.n(), p.n() + q.n());
        assert_eq!(s.covers().len(), p.covers().len() + q.covers().len() + 1);
        assert_eq!(s.nullity(), p.nullity() + q.nullity());
        assert!(s.is_lattice());
    }
}

#[test]
fn vertical_sum_glues_top_to_bottom() {
    assert!(is_isomorphic(
        &vertical_sum(&chain(3), &chain(4)).unwrap(),
        &chain(6)
    ));
    let d = diamond();
    let dd = vertical_sum(&d, &d).unwrap();
    assert_eq!(dd.n(), 7, "vertical sum size law");
    let key = classify(&dd).unwrap();
    // The glued element is reducible on both sides but counts once: the
    // stack has exactly three reducible elements and is the block F3.
    assert_eq!((key.r, key.k), (3, 2), "two stacked diamonds have r=3, k=2");
    assert!(is_isomorphic(&dd, &catalog(BasicBlockId::F3)));
    let no_top = lattice_census::Poset::new(3, &[(0, 1), (0, 2)]).unwrap();
    assert_eq!(
        vertical_sum(&no_top, &chain(2)).unwrap_err(),
        ConstructError::MissingTop
    );
    assert_eq!(
        vertical_sum(&chain(2), &no_top.dual()).unwrap_err(),
        ConstructError::MissingBottom
    );
    let mut r = rng(0xC504);
    for _ in 0..100 {
        let (_, p) = random_adjunct(&mut r, 8, 2);
        let (_, q) = random_adjunct(&mut r, 8, 2);
        let s = vertical_sum(&p, &q).unwrap();
        assert_eq!(s.n(), p.n() + q.n() - 1);
        assert_eq!(s.nullity(), p.nullity() + q.nullity());
        assert!(s.is_lattice());
    }
}

#[test]
fn catalog_representations_match_their_blocks() {
    for id in BasicBlockId::ALL {
        let rep = catalog_rep(id);
        assert_eq!(rep.chains.len(), rep.pairs.len() + 1);
        let built = realize(&rep).unwrap();
        assert_eq!(built.covers(), catalog(id).covers());
    }
}
