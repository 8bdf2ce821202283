//! Canonical forms for poset isomorphism.
//!
//! [`canonical_form`] computes a byte string that is identical for two
//! posets exactly when they are isomorphic; [`canonical_poset`] returns the
//! canonically relabeled poset itself, which makes deduplicated enumeration
//! output independent of discovery order.
//!
//! # Algorithm
//!
//! The computation is a two-stage color refinement followed by a
//! branch-and-bound search:
//!
//! 1. **Invariant coloring.** Each element gets an initial key built from
//!    isomorphism invariants: longest-chain distance from the bottom level
//!    and to the top level, lower/upper cover counts, and down-set/up-set
//!    sizes. Keys are ranked to dense colors.
//! 2. **Refinement.** Colors are iteratively replaced by the rank of
//!    `(own color, sorted lower-cover colors, sorted upper-cover colors)`
//!    until the number of color classes stops growing. Ties are broken only
//!    by the search, never by labels, so colors stay isomorphism-invariant.
//! 3. **Search.** Elements are assigned to positions class by class (color
//!    classes are ordered by level, so every cover points from an earlier
//!    position to a later one). Each position records the bitmask of its
//!    already-placed lower covers; the search minimizes the tuple of those
//!    masks lexicographically over all class-respecting label orders,
//!    pruning branches that exceed the best tuple found and collapsing
//!    *twin* candidates (equal cover neighborhoods) that are interchangeable
//!    by an automorphism.
//!
//! The winning mask tuple, packed to bytes together with `n`, is the
//! canonical form.
//!
//! ```
//! use lattice_census::canon::is_isomorphic;
//! use lattice_census::poset::Poset;
//!
//! let p = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
//! let q = Poset::new(4, &[(3, 1), (3, 2), (1, 0), (2, 0)]).unwrap();
//! assert!(is_isomorphic(&p, &q));
//! ```

use std::fmt;

use crate::poset::Poset;

// ---------------------------------------------------------------------------
// CanonicalForm
// ---------------------------------------------------------------------------

/// The canonical byte string of a poset.
///
/// Two posets have equal canonical forms iff they are isomorphic. The `Ord`
/// implementation provides an arbitrary but stable total order used for
/// deterministic deduplication and sorted output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    /// The raw canonical bytes: `n` followed by the packed lower-triangular
    /// cover matrix of the canonical labeling.
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering of the canonical bytes.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

/// Computes the canonical form of `p`.
pub fn canonical_form(p: &Poset) -> CanonicalForm {
    let (_, cols) = canonical_search(p);
    pack(p.n(), &cols)
}

/// Returns `p` relabeled into its canonical labeling.
///
/// The result is a fixed representative of the isomorphism class:
/// `canonical_poset(p) == canonical_poset(q)` (as labeled posets) iff `p`
/// and `q` are isomorphic.
pub fn canonical_poset(p: &Poset) -> Poset {
    let (perm_pos_to_old, _) = canonical_search(p);
    let mut old_to_new = vec![0usize; p.n()];
    for (new, &old) in perm_pos_to_old.iter().enumerate() {
        old_to_new[old] = new;
    }
    p.relabel(&old_to_new)
}

/// Whether `p` and `q` are isomorphic as posets.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.n() == q.n() && p.covers().len() == q.covers().len() && canonical_form(p) == canonical_form(q)
}

// ---------------------------------------------------------------------------
// Color refinement
// ---------------------------------------------------------------------------

/// Ranks a slice of keys into dense colors `0..count`, preserving key order.
fn rank_keys(keys: &[Vec<u32>]) -> (Vec<u32>, usize) {
    let mut uniq: Vec<&Vec<u32>> = keys.iter().collect();
    uniq.sort();
    uniq.dedup();
    let colors = keys
        .iter()
        .map(|k| uniq.binary_search(&k).expect("key present") as u32)
        .collect();
    (colors, uniq.len())
}

/// Computes the stable invariant coloring of `p`.
fn refine(p: &Poset) -> Vec<u32> {
    let n = p.n();
    let lev_b = p.levels_from_bottom();
    let lev_t = p.levels_from_top();
    let initial: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            vec![
                lev_b[x],
                lev_t[x],
                p.down_cover_mask(x).count_ones(),
                p.up_cover_mask(x).count_ones(),
                p.down_set_mask(x).count_ones(),
                p.up_set_mask(x).count_ones(),
            ]
        })
        .collect();
    let (mut color, mut count) = rank_keys(&initial);
    loop {
        let keys: Vec<Vec<u32>> = (0..n)
            .map(|x| {
                let mut key = vec![color[x]];
                let mut dc: Vec<u32> = p.lower_covers(x).into_iter().map(|y| color[y]).collect();
                dc.sort_unstable();
                key.extend(dc);
                // Separator between the variable-length cover lists; colors
                // are < n ≤ 64, so u32::MAX never collides.
                key.push(u32::MAX);
                let mut uc: Vec<u32> = p.upper_covers(x).into_iter().map(|y| color[y]).collect();
                uc.sort_unstable();
                key.extend(uc);
                key
            })
            .collect();
        let (next, next_count) = rank_keys(&keys);
        if next_count == count {
            return color;
        }
        color = next;
        count = next_count;
    }
}

// ---------------------------------------------------------------------------
// Branch-and-bound search
// ---------------------------------------------------------------------------

struct Search<'a> {
    p: &'a Poset,
    n: usize,
    /// Color-class membership, classes in color order, members ascending.
    members: Vec<Vec<usize>>,
    /// position -> class index.
    class_of_pos: Vec<usize>,
    /// old label -> assigned position (valid when the `used` bit is set).
    pos_of: Vec<usize>,
    used: u64,
    /// Stack of placed old labels, indexed by position.
    placed: Vec<usize>,
    /// Stack of lower-cover position masks, indexed by position.
    cols: Vec<u64>,
    best_cols: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

/// Runs the canonical search, returning the canonical labeling (position ->
/// old label) and the minimal lower-cover mask tuple.
fn canonical_search(p: &Poset) -> (Vec<usize>, Vec<u64>) {
    let n = p.n();
    let color = refine(p);
    let class_count = color.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut members = vec![Vec::new(); class_count];
    for x in 0..n {
        members[color[x] as usize].push(x);
    }
    let mut class_of_pos = Vec::with_capacity(n);
    for (c, m) in members.iter().enumerate() {
        class_of_pos.extend(std::iter::repeat_n(c, m.len()));
    }
    // Color classes are level-major: every cover points from a smaller
    // color to a larger one, hence from an earlier position to a later one.
    debug_assert!(p.covers().iter().all(|&(x, y)| color[x] < color[y]));

    let mut search = Search {
        p,
        n,
        members,
        class_of_pos,
        pos_of: vec![usize::MAX; n],
        used: 0,
        placed: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best_cols: None,
        best_perm: Vec::new(),
    };
    search.dfs(0, false);
    let best_cols = search
        .best_cols
        .expect("search always completes at least once");
    (search.best_perm, best_cols)
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize, free_in: bool) {
        let free = free_in || self.best_cols.is_none();
        if pos == self.n {
            let better = match &self.best_cols {
                None => true,
                Some(best) => self.cols < *best,
            };
            if better {
                self.best_cols = Some(self.cols.clone());
                self.best_perm = self.placed.clone();
            }
            return;
        }

        // Candidates: unused members of this position's class, collapsing
        // twins (identical cover neighborhoods are swapped by an
        // automorphism, so only the first of each signature matters).
        let class = self.class_of_pos[pos];
        let mut tried: Vec<(u64, u64)> = Vec::new();
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for idx in 0..self.members[class].len() {
            let cand = self.members[class][idx];
            if self.used & (1 << cand) != 0 {
                continue;
            }
            let sig = (self.p.up_cover_mask(cand), self.p.down_cover_mask(cand));
            if tried.contains(&sig) {
                continue;
            }
            tried.push(sig);
            // All lower covers sit in earlier classes, so they are placed.
            let mut col = 0u64;
            let mut lows = self.p.down_cover_mask(cand);
            while lows != 0 {
                let low = lows.trailing_zeros() as usize;
                lows &= lows - 1;
                debug_assert!(self.pos_of[low] < pos);
                col |= 1 << self.pos_of[low];
            }
            cands.push((col, cand));
        }
        cands.sort_unstable();

        if free {
            // Inside a strictly-better prefix only minimal columns can
            // extend a lexicographically minimal completion.
            let min_col = cands[0].0;
            for &(col, cand) in cands.iter().take_while(|&&(c, _)| c == min_col) {
                self.assign(pos, cand, col);
                self.dfs(pos + 1, true);
                self.unassign(pos, cand);
            }
        } else {
            for &(col, cand) in &cands {
                // `best_cols` may improve as siblings complete; comparing
                // against the current value keeps pruning coherent because
                // candidates run in ascending column order.
                let best_col = self.best_cols.as_ref().expect("non-free implies best")[pos];
                if col > best_col {
                    break;
                }
                let child_free = col < best_col;
                self.assign(pos, cand, col);
                self.dfs(pos + 1, child_free);
                self.unassign(pos, cand);
            }
        }
    }

    fn assign(&mut self, pos: usize, cand: usize, col: u64) {
        self.used |= 1 << cand;
        self.pos_of[cand] = pos;
        self.placed.push(cand);
        self.cols.push(col);
    }

    fn unassign(&mut self, _pos: usize, cand: usize) {
        self.used &= !(1 << cand);
        self.pos_of[cand] = usize::MAX;
        self.placed.pop();
        self.cols.pop();
    }
}

/// Packs `n` and the lower-triangular cover matrix into bytes.
///
/// Bit `(q, p)` (for `q < p`) is set when position `q` is a lower cover of
/// position `p`; bits are emitted row by row, LSB first within each byte.
fn pack(n: usize, cols: &[u64]) -> CanonicalForm {
    let total_bits = n * (n - 1) / 2;
    let mut bytes = Vec::with_capacity(1 + total_bits.div_ceil(8));
    bytes.push(n as u8);
    let mut cur = 0u8;
    let mut filled = 0;
    for (p, &col) in cols.iter().enumerate() {
        for q in 0..p {
            if col & (1 << q) != 0 {
                cur |= 1 << filled;
            }
            filled += 1;
            if filled == 8 {
                bytes.push(cur);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(cur);
    }
    CanonicalForm(bytes)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
