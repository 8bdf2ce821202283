//! Shared helpers for the integration suites: independent re-implementations
//! (isomorphism by permutation scan, bound-existence lattice check, partition
//! enumeration) and a seeded random generator of adjunct-of-chains lattices.
//!
//! Everything here deliberately avoids the library's own shortcuts so that
//! agreement between the two is evidence, not circularity.
#![allow(dead_code)] // each test binary uses its own subset

use lattice_census::construct::{adjunct, chain, AdjunctRep};
use lattice_census::Poset;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// A fixed-algorithm RNG so every suite is reproducible from its seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Random adjunct-of-chains lattices
// ---------------------------------------------------------------------------

/// Draws a random adjunct-of-chains lattice with `n ≤ n_max` elements and at
/// most `k_max` adjoined chains, returning both the expression and the
/// lattice built incrementally alongside it.
///
/// Each adjunct pair is sampled uniformly from the pairs that are valid at
/// that stage (comparable but not a cover), so pairs may land on previously
/// adjoined chains, not just the base chain.
pub fn random_adjunct(rng: &mut ChaCha8Rng, n_max: usize, k_max: usize) -> (AdjunctRep, Poset) {
    let n = rng.gen_range(1..=n_max.max(1));
    // An adjunct needs a base with a comparable non-cover pair (length ≥ 3)
    // plus one element per adjoined chain.
    let l_cap = if n >= 4 { k_max.min(n - 3) } else { 0 };
    let l = rng.gen_range(0..=l_cap);
    let c0 = if l == 0 { n } else { rng.gen_range(3..=n - l) };

    let mut chains = vec![c0];
    let mut rest = n - c0;
    for i in 0..l {
        let slots_after = l - 1 - i;
        // The final chain takes whatever remains so the lengths sum to n.
        let c = if slots_after == 0 {
            rest
        } else {
            rng.gen_range(1..=rest - slots_after)
        };
        chains.push(c);
        rest -= c;
    }
    debug_assert_eq!(rest, 0);

    let mut p = chain(c0);
    let mut pairs = Vec::new();
    for &c in &chains[1..] {
        let candidates: Vec<(usize, usize)> = (0..p.n())
            .flat_map(|a| (0..p.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| p.lt(a, b) && !p.covers_pair(a, b))
            .collect();
        let &(a, b) = candidates
            .choose(rng)
            .expect("a base chain of length >= 3 always offers a valid pair");
        p = adjunct(&p, a, b, &chain(c)).expect("sampled pair is valid by construction");
        pairs.push((a, b));
    }
    (AdjunctRep::new(chains, pairs), p)
}

// ---------------------------------------------------------------------------
// Independent order-theoretic checks
// ---------------------------------------------------------------------------

/// The full order relation recomputed from the cover list alone: `le[x][y]`
/// iff `x ≤ y`. Warshall closure, no reuse of the library's reachability.
pub fn reachability(p: &Poset) -> Vec<Vec<bool>> {
    let n = p.n();
    let mut le = vec![vec![false; n]; n];
    for (x, row) in le.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(x, y) in p.covers() {
        le[x][y] = true;
    }
    for k in 0..n {
        let through_k = le[k].clone();
        for row in &mut le {
            if row[k] {
                for (cell, &reaches) in row.iter_mut().zip(&through_k) {
                    *cell |= reaches;
                }
            }
        }
    }
    le
}

/// Lattice test by brute bound existence: every pair of elements must have a
/// least upper bound and a greatest lower bound.
pub fn naive_is_lattice(p: &Poset) -> bool {
    let n = p.n();
    if n == 0 {
        return false;
    }
    let le = reachability(p);
    for x in 0..n {
        for y in x..n {
            let uppers: Vec<usize> = (0..n).filter(|&z| le[x][z] && le[y][z]).collect();
            let lowers: Vec<usize> = (0..n).filter(|&z| le[z][x] && le[z][y]).collect();
            let has_lub = uppers.iter().any(|&u| uppers.iter().all(|&w| le[u][w]));
            let has_glb = lowers.iter().any(|&u| lowers.iter().all(|&w| le[w][u]));
            if !has_lub || !has_glb {
                return false;
            }
        }
    }
    true
}

/// Isomorphism by scanning all `n!` relabelings (with a degree-multiset
/// rejection first — sound, since isomorphisms preserve cover degrees).
pub fn brute_force_isomorphic(p: &Poset, q: &Poset) -> bool {
    let n = p.n();
    if n != q.n() || p.covers().len() != q.covers().len() {
        return false;
    }
    assert!(n <= 8, "factorial scan is meant for tiny posets only");
    let degrees = |r: &Poset| {
        let mut d: Vec<(usize, usize)> = (0..r.n())
            .map(|x| (r.lower_covers(x).len(), r.upper_covers(x).len()))
            .collect();
        d.sort_unstable();
        d
    };
    if degrees(p) != degrees(q) {
        return false;
    }
    let q_covers: std::collections::BTreeSet<(usize, usize)> = q.covers().iter().copied().collect();
    // Both cover sets have equal size, so any injection of p's covers into
    // q's is onto, and a cover-preserving bijection is an isomorphism.
    let matches = |perm: &[usize]| {
        p.covers()
            .iter()
            .all(|&(x, y)| q_covers.contains(&(perm[x], perm[y])))
    };
    let mut perm: Vec<usize> = (0..n).collect();
    try_permutations(&mut perm, 0, &matches)
}

fn try_permutations(perm: &mut Vec<usize>, i: usize, check: &dyn Fn(&[usize]) -> bool) -> bool {
    if i == perm.len() {
        return check(perm);
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        if try_permutations(perm, i + 1, check) {
            perm.swap(i, j);
            return true;
        }
        perm.swap(i, j);
    }
    false
}

// ---------------------------------------------------------------------------
// Partition enumeration
// ---------------------------------------------------------------------------

/// Counts partitions of `n` into exactly `k` parts by explicit recursion on
/// the largest part.
pub fn brute_partitions(n: u64, k: u64) -> u64 {
    fn rec(n: u64, k: u64, max_part: u64) -> u64 {
        if k == 0 {
            return u64::from(n == 0);
        }
        if n < k {
            return 0;
        }
        // Largest part `first` leaves n - first for k - 1 parts of size ≤ first.
        (1..=max_part.min(n - k + 1))
            .map(|first| rec(n - first, k - 1, first))
            .sum()
    }
    rec(n, k, n)
}

// ---------------------------------------------------------------------------
// Small named posets
// ---------------------------------------------------------------------------

/// The four-element diamond: bottom, two incomparable atoms, top.
pub fn diamond() -> Poset {
    Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
}

/// The pentagon: a four-chain with a singleton adjoined between bottom and top.
pub fn pentagon() -> Poset {
    adjunct(&chain(4), 0, 3, &chain(1)).unwrap()
}
