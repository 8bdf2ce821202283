//! Finite posets represented by their Hasse diagrams.
//!
//! A [`Poset`] stores a validated cover relation on elements `0..n`: a pair
//! `(x, y)` means *`y` covers `x`* (written `x ≺ y`), i.e. `x < y` with no
//! element strictly between. Validation rejects self-loops, duplicate covers,
//! cycles, and *transitive* covers (pairs `(x, y)` with some `z` satisfying
//! `x < z < y`, which would not be covers of any order).
//!
//! The element count is capped at [`MAX_N`] so that every up-set, down-set,
//! and cover neighborhood fits in a single `u64` bitmask; all order queries
//! (`≤`, joins, meets, lattice tests) reduce to word-parallel mask
//! arithmetic.
//!
//! # Conventions
//!
//! - *Nullity* is the cycle rank of the underlying undirected Hasse graph:
//!   `edges − vertices + components`. A finite lattice is connected, so for
//!   lattices this is `edges − vertices + 1`.
//! - *Height* is the number of edges in a longest chain.
//! - An element is *doubly irreducible* when it has at most one lower cover
//!   and at most one upper cover; [`Poset::irr_star`] restricts to elements
//!   with exactly one of each. For a lattice, the *reducible* elements are
//!   exactly the complement of the doubly irreducible ones.
//!
//! # Text format
//!
//! [`Poset::from_text`] / [`Poset::to_text`] use a line format: the first
//! line holds `n`, and each following line holds one cover `x y` (0-based).
//! Blank lines and lines starting with `#` are ignored on input.
//!
//! ```
//! use lattice_census::poset::Poset;
//!
//! let diamond = Poset::from_text("4\n0 1\n0 2\n1 3\n2 3\n").unwrap();
//! assert!(diamond.is_lattice());
//! assert_eq!(diamond.to_text(), "4\n0 1\n0 2\n1 3\n2 3\n");
//! ```

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Maximum number of elements a [`Poset`] may hold.
///
/// Bounded so that element sets are single `u64` bitmasks. Every task this
/// crate performs (enumeration, reduction, catalog work) lives far below
/// this bound.
pub const MAX_N: usize = 64;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Structural errors raised when building or transforming a [`Poset`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    /// A poset must contain at least one element.
    #[error("a poset must have at least one element")]
    Empty,
    /// More elements requested than [`MAX_N`].
    #[error("poset on {n} elements exceeds the supported maximum of {MAX_N}")]
    TooLarge {
        /// The rejected element count.
        n: usize,
    },
    /// A cover mentions an element outside `0..n`.
    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// The poset size.
        n: usize,
    },
    /// The same cover pair was listed twice.
    #[error("duplicate cover ({x}, {y})")]
    DuplicateCover {
        /// Lower element of the duplicated cover.
        x: usize,
        /// Upper element of the duplicated cover.
        y: usize,
    },
    /// The cover relation contains a directed cycle (including self-loops).
    #[error("cover relation contains a cycle")]
    CoverCycle,
    /// A listed pair is comparable through other covers, hence not a cover.
    #[error("pair ({x}, {y}) is transitive, not a cover")]
    TransitiveCover {
        /// Lower element of the redundant pair.
        x: usize,
        /// Upper element of the redundant pair.
        y: usize,
    },
    /// The operation requires a lattice but the poset is not one.
    #[error("operation requires a lattice")]
    NotALattice,
    /// Removing the last remaining element is not allowed.
    #[error("cannot remove the only element of a poset")]
    CannotRemoveLast,
}

/// Errors raised when parsing the poset text format.
#[derive(Debug, Error)]
pub enum ParseError {
    /// A line failed to parse.
    #[error("line {line}: {msg}")]
    Syntax {
        /// 1-based line number in the input.
        line: usize,
        /// Description of the problem.
        msg: String,
    },
    /// The parsed data does not describe a valid Hasse diagram.
    #[error("invalid poset structure: {0}")]
    Structure(#[from] PosetError),
}

// ---------------------------------------------------------------------------
// ClassKey
// ---------------------------------------------------------------------------

/// The classification key of a lattice: size, reducible-element count,
/// nullity, comparability of the reducibles, and basic-block height.
///
/// `h` is the height of the associated basic block; it is `None` for chains
/// (`r = 0`), which reduce to a point and have no block structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassKey {
    /// Number of elements.
    pub n: usize,
    /// Number of reducible elements.
    pub r: usize,
    /// Nullity of the Hasse diagram.
    pub k: usize,
    /// Whether the reducible elements are pairwise comparable.
    pub rc: bool,
    /// Height of the basic block, when one exists (`r ≥ 2`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} r={} k={} rc={}", self.n, self.r, self.k, self.rc)?;
        match self.h {
            Some(h) => write!(f, " h={h}"),
            None => write!(f, " h=-"),
        }
    }
}

// ---------------------------------------------------------------------------
// Poset
// ---------------------------------------------------------------------------

/// An immutable finite poset, stored as a validated Hasse diagram.
///
/// Elements are `0..n`. Equality, ordering, and hashing are by `(n, covers)`,
/// i.e. by labeled structure; use [`crate::canon::is_isomorphic`] for
/// label-independent comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poset {
    n: usize,
    /// Sorted list of covers `(x, y)` with `x ≺ y`.
    covers: Vec<(usize, usize)>,
    /// `up_covers[x]`: bitmask of upper covers of `x`.
    up_covers: Vec<u64>,
    /// `down_covers[x]`: bitmask of lower covers of `x`.
    down_covers: Vec<u64>,
    /// `up_sets[x]`: bitmask of `{y : x ≤ y}` (reflexive).
    up_sets: Vec<u64>,
    /// `down_sets[x]`: bitmask of `{y : y ≤ x}` (reflexive).
    down_sets: Vec<u64>,
    /// A topological order of the cover digraph (lower elements first).
    topo: Vec<usize>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

impl Poset {
    // -- construction -------------------------------------------------------

    /// Builds a poset on `n` elements from the given cover pairs.
    ///
    /// Each pair `(x, y)` declares that `y` covers `x`. The pairs may be
    /// given in any order; they are validated to form a genuine Hasse
    /// diagram (no duplicates, no cycles, no transitive pairs).
    ///
    /// ```
    /// use lattice_census::poset::Poset;
    ///
    /// // The diamond lattice M2: bottom 0, incomparable a=1, b=2, top 3.
    /// let diamond = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    /// assert!(diamond.is_lattice());
    ///
    /// // (0, 3) would be transitive: 0 < 1 < 3.
    /// assert!(Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).is_err());
    /// ```
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_N {
            return Err(PosetError::TooLarge { n });
        }
        let mut sorted: Vec<(usize, usize)> = covers.to_vec();
        sorted.sort_unstable();
        for &(x, y) in &sorted {
            if x >= n {
                return Err(PosetError::IndexOutOfRange { index: x, n });
            }
            if y >= n {
                return Err(PosetError::IndexOutOfRange { index: y, n });
            }
            if x == y {
                return Err(PosetError::CoverCycle);
            }
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(PosetError::DuplicateCover {
                    x: w[0].0,
                    y: w[0].1,
                });
            }
        }

        let mut up_covers = vec![0u64; n];
        let mut down_covers = vec![0u64; n];
        for &(x, y) in &sorted {
            up_covers[x] |= 1 << y;
            down_covers[y] |= 1 << x;
        }

        // Kahn's algorithm: topological order and cycle detection.
        let mut indeg: Vec<usize> = down_covers
            .iter()
            .map(|m| m.count_ones() as usize)
            .collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            let mut ups = up_covers[x];
            while ups != 0 {
                let y = ups.trailing_zeros() as usize;
                ups &= ups - 1;
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() != n {
            return Err(PosetError::CoverCycle);
        }

        // Reflexive down-sets in topological order.
        let mut down_sets = vec![0u64; n];
        for &y in &topo {
            let mut acc = 1u64 << y;
            let mut lows = down_covers[y];
            while lows != 0 {
                let x = lows.trailing_zeros() as usize;
                lows &= lows - 1;
                acc |= down_sets[x];
            }
            down_sets[y] = acc;
        }

        // A pair (x, y) is transitive iff some other lower cover z of y
        // already has x below it.
        for &(x, y) in &sorted {
            let others = down_covers[y] & !(1 << x);
            let mut rest = others;
            while rest != 0 {
                let z = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if down_sets[z] & (1 << x) != 0 {
                    return Err(PosetError::TransitiveCover { x, y });
                }
            }
        }

        let mut up_sets = vec![0u64; n];
        for (x, &down) in down_sets.iter().enumerate() {
            let mut below = down;
            while below != 0 {
                let z = below.trailing_zeros() as usize;
                below &= below - 1;
                up_sets[z] |= 1 << x;
            }
        }

        Ok(Poset {
            n,
            covers: sorted,
            up_covers,
            down_covers,
            up_sets,
            down_sets,
            topo,
        })
    }

    // -- basic accessors ----------------------------------------------------

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The sorted cover pairs `(x, y)` with `x ≺ y`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether `x ≤ y` in the order.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down_sets[y] & (1 << x) != 0
    }

    /// Whether `x < y` strictly.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Whether `y` covers `x`.
    pub fn covers_pair(&self, x: usize, y: usize) -> bool {
        self.up_covers[x] & (1 << y) != 0
    }

    /// The upper covers of `x`, ascending.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        bits(self.up_covers[x])
    }

    /// The lower covers of `x`, ascending.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        bits(self.down_covers[x])
    }

    /// Bitmask of the upper covers of `x`.
    pub fn up_cover_mask(&self, x: usize) -> u64 {
        self.up_covers[x]
    }

    /// Bitmask of the lower covers of `x`.
    pub fn down_cover_mask(&self, x: usize) -> u64 {
        self.down_covers[x]
    }

    /// Bitmask of `{y : x ≤ y}` (includes `x`).
    pub fn up_set_mask(&self, x: usize) -> u64 {
        self.up_sets[x]
    }

    /// Bitmask of `{y : y ≤ x}` (includes `x`).
    pub fn down_set_mask(&self, x: usize) -> u64 {
        self.down_sets[x]
    }

    /// The reflexive transitive closure as a boolean matrix:
    /// `m[x][y]` iff `x ≤ y`.
    pub fn transitive_closure(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    // -- order structure ----------------------------------------------------

    /// The minimal elements, ascending.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.down_covers[x] == 0).collect()
    }

    /// The maximal elements, ascending.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up_covers[x] == 0).collect()
    }

    /// The least element, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements()[..] {
            [b] => Some(b),
            _ => None,
        }
    }

    /// The greatest element, if one exists.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [t] => Some(t),
            _ => None,
        }
    }

    /// The join (least upper bound) of `x` and `y`, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let common = self.up_sets[x] & self.up_sets[y];
        let mut rest = common;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if common & !self.up_sets[j] == 0 {
                return Some(j);
            }
        }
        None
    }

    /// The meet (greatest lower bound) of `x` and `y`, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let common = self.down_sets[x] & self.down_sets[y];
        let mut rest = common;
        while rest != 0 {
            let m = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if common & !self.down_sets[m] == 0 {
                return Some(m);
            }
        }
        None
    }

    /// Whether the poset is a lattice: a unique least element and a join for
    /// every pair (for finite posets this implies all meets as well).
    pub fn is_lattice(&self) -> bool {
        if self.bottom().is_none() {
            return false;
        }
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.join(x, y).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn components(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen |= 1 << start;
            while let Some(x) = stack.pop() {
                let mut adj = (self.up_covers[x] | self.down_covers[x]) & !seen;
                while adj != 0 {
                    let y = adj.trailing_zeros() as usize;
                    adj &= adj - 1;
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Nullity (cycle rank) of the Hasse diagram:
    /// `edges − vertices + components`.
    pub fn nullity(&self) -> usize {
        self.covers.len() + self.components() - self.n
    }

    /// For each element, the number of edges in a longest chain ending at it
    /// from below.
    pub fn levels_from_bottom(&self) -> Vec<u32> {
        let mut lev = vec![0u32; self.n];
        for &y in &self.topo {
            let mut lows = self.down_covers[y];
            while lows != 0 {
                let x = lows.trailing_zeros() as usize;
                lows &= lows - 1;
                lev[y] = lev[y].max(lev[x] + 1);
            }
        }
        lev
    }

    /// For each element, the number of edges in a longest chain starting at
    /// it going up.
    pub fn levels_from_top(&self) -> Vec<u32> {
        let mut lev = vec![0u32; self.n];
        for &x in self.topo.iter().rev() {
            let mut ups = self.up_covers[x];
            while ups != 0 {
                let y = ups.trailing_zeros() as usize;
                ups &= ups - 1;
                lev[x] = lev[x].max(lev[y] + 1);
            }
        }
        lev
    }

    /// Height: the number of edges in a longest chain.
    pub fn height(&self) -> usize {
        self.levels_from_bottom().iter().copied().max().unwrap_or(0) as usize
    }

    /// Whether the poset is a chain (totally ordered).
    pub fn is_chain(&self) -> bool {
        // A longest chain with n elements must visit every element.
        self.height() + 1 == self.n
    }

    // -- irreducibility -----------------------------------------------------

    /// Elements with at most one lower cover and at most one upper cover,
    /// ascending.
    pub fn doubly_irreducible(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                self.up_covers[x].count_ones() <= 1 && self.down_covers[x].count_ones() <= 1
            })
            .collect()
    }

    /// Elements with exactly one lower cover and exactly one upper cover,
    /// ascending.
    pub fn irr_star(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                self.up_covers[x].count_ones() == 1 && self.down_covers[x].count_ones() == 1
            })
            .collect()
    }

    /// The reducible elements of a lattice: those with at least two lower
    /// covers or at least two upper covers, ascending.
    ///
    /// Returns [`PosetError::NotALattice`] when the poset is not a lattice.
    pub fn reducible_elements(&self) -> Result<Vec<usize>, PosetError> {
        if !self.is_lattice() {
            return Err(PosetError::NotALattice);
        }
        Ok(self.reducible_elements_unchecked())
    }

    /// The complement of [`Poset::doubly_irreducible`], without requiring a
    /// lattice. Internal helper for reduction code that works on posets.
    pub(crate) fn reducible_elements_unchecked(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                self.up_covers[x].count_ones() >= 2 || self.down_covers[x].count_ones() >= 2
            })
            .collect()
    }

    /// Whether the lattice's reducible elements are pairwise comparable.
    ///
    /// Returns [`PosetError::NotALattice`] when the poset is not a lattice.
    pub fn is_rc(&self) -> Result<bool, PosetError> {
        let red = self.reducible_elements()?;
        for (i, &x) in red.iter().enumerate() {
            for &y in &red[i + 1..] {
                if !self.leq(x, y) && !self.leq(y, x) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Elements incident to exactly one cover edge, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (self.up_covers[x] | self.down_covers[x]).count_ones() == 1)
            .collect()
    }

    // -- transformations ----------------------------------------------------

    /// The dual poset: same elements, all comparabilities reversed.
    pub fn dual(&self) -> Poset {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        Poset::new(self.n, &covers).expect("dual of a valid Hasse diagram is valid")
    }

    /// The induced suborder on all elements except `x`, with labels above
    /// `x` shifted down by one.
    ///
    /// Cover edges of the result are recomputed from the induced order, so
    /// removing a doubly irreducible element "splices" its neighbors when no
    /// other path connects them.
    pub fn remove_element(&self, x: usize) -> Result<Poset, PosetError> {
        if self.n == 1 {
            return Err(PosetError::CannotRemoveLast);
        }
        if x >= self.n {
            return Err(PosetError::IndexOutOfRange {
                index: x,
                n: self.n,
            });
        }
        let survivors = !(1u64 << x);
        let relab = |old: usize| if old > x { old - 1 } else { old };
        let mut covers = Vec::with_capacity(self.covers.len());
        for z in 0..self.n {
            if z == x {
                continue;
            }
            let below = self.down_sets[z] & !(1 << z) & survivors;
            let mut rest = below;
            while rest != 0 {
                let y = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let strictly_above_y = self.up_sets[y] & !(1 << y);
                if below & strictly_above_y == 0 {
                    covers.push((relab(y), relab(z)));
                }
            }
        }
        Ok(Poset::new(self.n - 1, &covers)
            .expect("covers of an induced suborder form a valid Hasse diagram"))
    }

    /// Relabels elements: `perm[old]` is the new label of `old`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        debug_assert_eq!(perm.len(), self.n);
        debug_assert_eq!(
            {
                let mut sorted = perm.to_vec();
                sorted.sort_unstable();
                sorted
            },
            (0..self.n).collect::<Vec<_>>(),
            "relabel requires a permutation of 0..n"
        );
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(x, y)| (perm[x], perm[y]))
            .collect();
        Poset::new(self.n, &covers).expect("relabeling preserves Hasse validity")
    }

    // -- serialization ------------------------------------------------------

    /// Renders the text format: first line `n`, then one `x y` line per
    /// cover, sorted.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(x, y) in &self.covers {
            out.push_str(&format!("{x} {y}\n"));
        }
        out
    }

    /// Parses the text format accepted by this crate: the first
    /// non-comment, non-blank line holds `n`; each further such line holds
    /// one cover `x y`. Lines starting with `#` and blank lines are skipped.
    pub fn from_text(input: &str) -> Result<Poset, ParseError> {
        let mut n: Option<usize> = None;
        let mut covers = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut fields = content.split_whitespace();
            match n {
                None => {
                    let first = fields.next().expect("non-empty line has a field");
                    if fields.next().is_some() {
                        return Err(ParseError::Syntax {
                            line,
                            msg: "expected a single element count".into(),
                        });
                    }
                    n = Some(first.parse().map_err(|_| ParseError::Syntax {
                        line,
                        msg: format!("invalid element count {first:?}"),
                    })?);
                }
                Some(_) => {
                    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next())
                    else {
                        return Err(ParseError::Syntax {
                            line,
                            msg: "expected a cover line with two indices".into(),
                        });
                    };
                    let x: usize = a.parse().map_err(|_| ParseError::Syntax {
                        line,
                        msg: format!("invalid element index {a:?}"),
                    })?;
                    let y: usize = b.parse().map_err(|_| ParseError::Syntax {
                        line,
                        msg: format!("invalid element index {b:?}"),
                    })?;
                    covers.push((x, y));
                }
            }
        }
        let n = n.ok_or(ParseError::Syntax {
            line: input.lines().count().max(1),
            msg: "missing element count line".into(),
        })?;
        Ok(Poset::new(n, &covers)?)
    }

    /// Renders a Graphviz DOT digraph. Edges point from each element to its
    /// upper covers and the graph ranks bottom-up, so greater elements are
    /// drawn above smaller ones.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"{name}\" {{\n"));
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=circle, width=0.3, fixedsize=true];\n");
        for x in 0..self.n {
            out.push_str(&format!("  v{x} [label=\"{x}\"];\n"));
        }
        for &(x, y) in &self.covers {
            out.push_str(&format!("  v{x} -> v{y};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Ascending list of set bits.
fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn pentagon() -> Poset {
        // 0 < 1 < 2 < 4 and 0 < 3 < 4.
        Poset::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    fn hexagon() -> Poset {
        // 0 < 1 < 3 < 5 and 0 < 2 < 4 < 5.
        Poset::new(6, &[(0, 1), (1, 3), (3, 5), (0, 2), (2, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Poset::new(0, &[]), Err(PosetError::Empty));
        assert_eq!(Poset::new(65, &[]), Err(PosetError::TooLarge { n: 65 }));
        assert_eq!(
            Poset::new(2, &[(0, 2)]),
            Err(PosetError::IndexOutOfRange { index: 2, n: 2 })
        );
        assert_eq!(
            Poset::new(2, &[(0, 1), (0, 1)]),
            Err(PosetError::DuplicateCover { x: 0, y: 1 })
        );
        assert_eq!(Poset::new(1, &[(0, 0)]), Err(PosetError::CoverCycle));
        assert_eq!(
            Poset::new(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(PosetError::CoverCycle)
        );
        assert_eq!(
            Poset::new(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(PosetError::TransitiveCover { x: 0, y: 2 })
        );
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::new(1, &[]).unwrap();
        assert!(p.is_lattice());
        assert!(p.is_chain());
        assert_eq!(p.height(), 0);
        assert_eq!(p.nullity(), 0);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(0));
        assert_eq!(p.doubly_irreducible(), vec![0]);
        assert_eq!(p.irr_star(), Vec::<usize>::new());
        assert_eq!(p.pendant_vertices(), Vec::<usize>::new());
    }

    #[test]
    fn diamond_structure() {
        let d = diamond();
        assert!(d.is_lattice());
        assert_eq!(d.nullity(), 1);
        assert_eq!(d.height(), 2);
        assert_eq!(d.join(1, 2), Some(3));
        assert_eq!(d.meet(1, 2), Some(0));
        assert_eq!(d.reducible_elements().unwrap(), vec![0, 3]);
        assert_eq!(d.doubly_irreducible(), vec![1, 2]);
        assert_eq!(d.irr_star(), vec![1, 2]);
        assert!(d.is_rc().unwrap());
        assert!(!d.is_chain());
    }

    #[test]
    fn pentagon_structure() {
        let p = pentagon();
        assert!(p.is_lattice());
        assert_eq!(p.nullity(), 1);
        assert_eq!(p.height(), 3);
        assert_eq!(p.reducible_elements().unwrap(), vec![0, 4]);
        assert_eq!(p.doubly_irreducible(), vec![1, 2, 3]);
        assert_eq!(p.join(1, 3), Some(4));
        assert_eq!(p.meet(2, 3), Some(0));
        assert!(p.is_rc().unwrap());
    }

    #[test]
    fn hexagon_structure() {
        let h = hexagon();
        assert!(h.is_lattice());
        assert_eq!(h.nullity(), 1);
        assert_eq!(h.height(), 3);
        assert_eq!(h.reducible_elements().unwrap(), vec![0, 5]);
        assert_eq!(h.join(1, 2), Some(5));
        assert_eq!(h.meet(3, 4), Some(0));
    }

    #[test]
    fn non_lattices_detected() {
        // Two incomparable points.
        let antichain = Poset::new(2, &[]).unwrap();
        assert!(!antichain.is_lattice());
        assert_eq!(antichain.components(), 2);
        assert_eq!(antichain.reducible_elements(), Err(PosetError::NotALattice));
        assert_eq!(antichain.is_rc(), Err(PosetError::NotALattice));

        // Bowtie: two minimal, two maximal, all four cross covers.
        let bowtie = Poset::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!bowtie.is_lattice());
        assert_eq!(bowtie.join(0, 1), None);

        // Unique bottom but a pair with two minimal upper bounds.
        let no_join = Poset::new(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert!(!no_join.is_lattice());
        assert_eq!(no_join.join(1, 2), None);
        assert_eq!(no_join.join(3, 4), Some(5));
    }

    #[test]
    fn closure_and_levels() {
        let p = pentagon();
        let m = p.transitive_closure();
        for (x, row) in m.iter().enumerate() {
            assert!(row[x], "closure is reflexive");
        }
        assert!(m[0][4] && m[1][2] && !m[2][1] && !m[1][3] && !m[3][1]);
        assert_eq!(p.levels_from_bottom(), vec![0, 1, 2, 1, 3]);
        assert_eq!(p.levels_from_top(), vec![3, 2, 1, 1, 0]);
    }

    #[test]
    fn dual_involution() {
        for p in [diamond(), pentagon(), hexagon()] {
            let dd = p.dual().dual();
            assert_eq!(p, dd);
            assert_eq!(p.nullity(), p.dual().nullity());
            assert_eq!(p.height(), p.dual().height());
        }
        let p = pentagon();
        assert_eq!(p.dual().bottom(), Some(4));
        assert_eq!(p.dual().top(), Some(0));
    }

    #[test]
    fn remove_element_splices_and_recomputes() {
        // Removing a middle chain element splices the chain.
        let c = Poset::new(3, &[(0, 1), (1, 2)]).unwrap();
        let removed = c.remove_element(1).unwrap();
        assert_eq!(removed.covers(), &[(0, 1)]);

        // Removing 1 from the pentagon leaves the 4-element "kite".
        let p = pentagon();
        let q = p.remove_element(1).unwrap();
        assert_eq!(q.n(), 4);
        // Old labels 2, 3, 4 become 1, 2, 3; cover 0-2 is spliced in.
        assert_eq!(q.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);

        // No splice when another path exists: removing 1 from the diamond.
        let d = diamond();
        let q = d.remove_element(1).unwrap();
        assert_eq!(q.covers(), &[(0, 1), (1, 2)]);

        let single = Poset::new(1, &[]).unwrap();
        assert_eq!(single.remove_element(0), Err(PosetError::CannotRemoveLast));
    }

    #[test]
    fn pendant_vertices_found() {
        // A chain has two pendants (its endpoints).
        let c = Poset::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(c.pendant_vertices(), vec![0, 3]);
        // The diamond has none.
        assert_eq!(diamond().pendant_vertices(), Vec::<usize>::new());
        // Diamond with a tail below.
        let tailed = Poset::new(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(tailed.pendant_vertices(), vec![0]);
    }

    #[test]
    fn relabel_permutes() {
        let d = diamond();
        let r = d.relabel(&[3, 1, 2, 0]);
        assert_eq!(r.bottom(), Some(3));
        assert_eq!(r.top(), Some(0));
        assert!(r.is_lattice());
    }

    #[test]
    fn text_round_trip() {
        for p in [diamond(), pentagon(), hexagon()] {
            let text = p.to_text();
            let back = Poset::from_text(&text).unwrap();
            assert_eq!(p, back);
        }
        let single = Poset::new(1, &[]).unwrap();
        assert_eq!(single.to_text(), "1\n");
        assert_eq!(Poset::from_text("1\n").unwrap(), single);
    }

    #[test]
    fn text_parser_accepts_comments_and_blanks() {
        let input = "# a diamond\n\n4\n0 1\n0 2\n\n1 3\n2 3\n";
        assert_eq!(Poset::from_text(input).unwrap(), diamond());
    }

    #[test]
    fn text_parser_rejects_garbage() {
        assert!(matches!(
            Poset::from_text(""),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            Poset::from_text("x\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            Poset::from_text("3\n0\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            Poset::from_text("3\n0 1 2\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            Poset::from_text("2\n0 5\n"),
            Err(ParseError::Structure(PosetError::IndexOutOfRange { .. }))
        ));
    }

    #[test]
    fn dot_output_shape() {
        let dot = diamond().to_dot("diamond");
        assert!(dot.starts_with("digraph \"diamond\" {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("v0 -> v1;"));
        assert!(dot.contains("v2 -> v3;"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn class_key_display() {
        let key = ClassKey {
            n: 7,
            r: 4,
            k: 3,
            rc: true,
            h: Some(3),
        };
        assert_eq!(key.to_string(), "n=7 r=4 k=3 rc=true h=3");
        let chain_key = ClassKey {
            n: 5,
            r: 0,
            k: 0,
            rc: true,
            h: None,
        };
        assert_eq!(chain_key.to_string(), "n=5 r=0 k=0 rc=true h=-");
    }
}
