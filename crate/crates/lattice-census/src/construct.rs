//! Structural constructors: chains, sums, the adjunct operation, and the
//! catalog of basic blocks.
//!
//! # The adjunct operation
//!
//! Given lattices `L₁`, `L₂` and a pair `a < b` in `L₁` that is *not* a
//! cover, the adjunct `L₁ ]ᵇₐ L₂` places the whole of `L₂` strictly between
//! `a` and `b`: it adds a cover from `a` to the bottom of `L₂` and from the
//! top of `L₂` to `b`. The result is again a lattice, with
//!
//! - `|E| = |E₁| + |E₂| + 2` cover edges, and
//! - nullity `k = k₁ + k₂ + 1`.
//!
//! Adjuncts of chains are exactly the *dismantlable* lattices; a lattice
//! with nullity `l` is dismantlable iff it is an adjunct of `l + 1` chains.
//! [`AdjunctRep`] encodes such a left-associated expression and
//! [`realize`] builds it.
//!
//! # The catalog
//!
//! [`BasicBlockId`] names the 29 basic blocks that arise when classifying
//! lattices with up to four reducible elements and nullity up to three:
//! `F1`–`F4` (three reducible elements), `F5`–`F7` (four reducible
//! elements, nullity two), and `B1`–`B22` (four pairwise comparable
//! reducible elements, nullity three). [`catalog`] builds each one.
//!
//! ```
//! use lattice_census::construct::{catalog, BasicBlockId};
//!
//! let b22 = catalog(BasicBlockId::B22);
//! assert_eq!(b22.n(), 10);
//! assert_eq!(b22.nullity(), 3);
//! assert_eq!(b22.height(), 6);
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::poset::Poset;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors raised by the constructors in this module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    /// An operand of a lattice-only operation is not a lattice.
    #[error("{side} operand is not a lattice")]
    OperandNotLattice {
        /// Which operand: `"left"` or `"right"`.
        side: &'static str,
    },
    /// An element index lies outside the operand.
    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// The poset size.
        n: usize,
    },
    /// The adjunct pair must satisfy `a < b` strictly.
    #[error("adjunct pair ({a}, {b}) does not satisfy a < b")]
    PairNotStrictlyBelow {
        /// First element of the rejected pair.
        a: usize,
        /// Second element of the rejected pair.
        b: usize,
    },
    /// The adjunct pair must not be a cover.
    #[error("adjunct pair ({a}, {b}) is a cover; the pair must be non-covering")]
    PairIsCover {
        /// First element of the rejected pair.
        a: usize,
        /// Second element of the rejected pair.
        b: usize,
    },
    /// Vertical sums need a top element on the left operand.
    #[error("left operand of a vertical sum has no top element")]
    MissingTop,
    /// Vertical sums need a bottom element on the right operand.
    #[error("right operand of a vertical sum has no bottom element")]
    MissingBottom,
    /// An adjunct representation listed an empty chain.
    #[error("chain length must be at least 1")]
    EmptyChain,
    /// An adjunct representation must have one more chain than pairs.
    #[error("representation shape mismatch: {chains} chains with {pairs} pairs")]
    MismatchedRep {
        /// Number of chains in the representation.
        chains: usize,
        /// Number of adjunct pairs in the representation.
        pairs: usize,
    },
}

/// Error from [`realize`], reporting which stage of the expression failed.
///
/// Stage `0` is the base chain; stage `i ≥ 1` is the `i`-th adjunct
/// operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("stage {stage}: {source}")]
pub struct RealizeError {
    /// Index of the failing stage.
    pub stage: usize,
    /// The underlying constructor error.
    pub source: ConstructError,
}

// ---------------------------------------------------------------------------
// Basic constructors
// ---------------------------------------------------------------------------

/// The chain with `m` elements, labeled `0 < 1 < … < m−1`.
///
/// # Panics
///
/// Panics when `m == 0`; the empty chain is rejected.
pub fn chain(m: usize) -> Poset {
    assert!(m >= 1, "chain length must be at least 1");
    let covers: Vec<(usize, usize)> = (1..m).map(|x| (x - 1, x)).collect();
    Poset::new(m, &covers).expect("a chain is a valid Hasse diagram")
}

/// The direct (ordinal) sum `p ⊕ q`: every element of `p` below every
/// element of `q`.
///
/// Elements of `p` keep their labels; elements of `q` are shifted up by
/// `p.n()`. Covers are added from each maximal element of `p` to each
/// minimal element of `q`; when both operands are lattices this is the
/// single cover `top(p) ≺ bottom(q)`, giving `|E| = |E₁| + |E₂| + 1`.
pub fn direct_sum(p: &Poset, q: &Poset) -> Poset {
    let np = p.n();
    let mut covers: Vec<(usize, usize)> = p.covers().to_vec();
    covers.extend(q.covers().iter().map(|&(x, y)| (x + np, y + np)));
    for m in p.maximal_elements() {
        for m2 in q.minimal_elements() {
            covers.push((m, m2 + np));
        }
    }
    Poset::new(np + q.n(), &covers).expect("direct sum preserves Hasse validity")
}

/// The vertical sum `p ∘ q`: identifies `top(p)` with `bottom(q)`, giving a
/// poset on `p.n() + q.n() − 1` elements.
///
/// Elements of `p` keep their labels; the identified element keeps the
/// label `top(p)`; the remaining elements of `q` take labels `p.n()`
/// onwards in ascending order of their original labels.
pub fn vertical_sum(p: &Poset, q: &Poset) -> Result<Poset, ConstructError> {
    let top = p.top().ok_or(ConstructError::MissingTop)?;
    let bot = q.bottom().ok_or(ConstructError::MissingBottom)?;
    let np = p.n();
    let mut relab = vec![0usize; q.n()];
    let mut next = np;
    for (old, slot) in relab.iter_mut().enumerate() {
        if old == bot {
            *slot = top;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut covers: Vec<(usize, usize)> = p.covers().to_vec();
    covers.extend(q.covers().iter().map(|&(x, y)| (relab[x], relab[y])));
    Ok(Poset::new(np + q.n() - 1, &covers).expect("vertical sum preserves Hasse validity"))
}

/// The adjunct `l1 ]ᵇₐ l2`: glues `l2` strictly between `a` and `b`.
///
/// Requirements: both operands are lattices, `a < b` in `l1`, and `(a, b)`
/// is not a cover. Elements of `l1` keep their labels; elements of `l2` are
/// shifted up by `l1.n()`.
///
/// ```
/// use lattice_census::construct::{adjunct, chain};
///
/// // The pentagon: a singleton adjoined between bottom and top of a 4-chain.
/// let n5 = adjunct(&chain(4), 0, 3, &chain(1)).unwrap();
/// assert!(n5.is_lattice());
/// assert_eq!(n5.nullity(), 1);
/// ```
pub fn adjunct(l1: &Poset, a: usize, b: usize, l2: &Poset) -> Result<Poset, ConstructError> {
    if a >= l1.n() {
        return Err(ConstructError::IndexOutOfRange {
            index: a,
            n: l1.n(),
        });
    }
    if b >= l1.n() {
        return Err(ConstructError::IndexOutOfRange {
            index: b,
            n: l1.n(),
        });
    }
    if !l1.is_lattice() {
        return Err(ConstructError::OperandNotLattice { side: "left" });
    }
    if !l2.is_lattice() {
        return Err(ConstructError::OperandNotLattice { side: "right" });
    }
    if !l1.lt(a, b) {
        return Err(ConstructError::PairNotStrictlyBelow { a, b });
    }
    if l1.covers_pair(a, b) {
        return Err(ConstructError::PairIsCover { a, b });
    }
    let n1 = l1.n();
    let bot2 = l2.bottom().expect("a lattice has a bottom");
    let top2 = l2.top().expect("a lattice has a top");
    let mut covers: Vec<(usize, usize)> = l1.covers().to_vec();
    covers.extend(l2.covers().iter().map(|&(x, y)| (x + n1, y + n1)));
    covers.push((a, bot2 + n1));
    covers.push((top2 + n1, b));
    let result =
        Poset::new(n1 + l2.n(), &covers).expect("adjunct construction preserves Hasse validity");
    debug_assert!(result.is_lattice(), "adjunct of lattices is a lattice");
    Ok(result)
}

// ---------------------------------------------------------------------------
// Adjunct representations
// ---------------------------------------------------------------------------

/// A left-associated adjunct-of-chains expression.
///
/// `chains[0]` is the base chain; for each `i ≥ 1`, the chain of length
/// `chains[i]` is adjoined at the pair `pairs[i−1]` of the partial result.
/// Labels follow [`adjunct`]'s convention: the base chain takes labels
/// `0..chains[0]` bottom-to-top and each adjoined chain continues from the
/// next free label, so pairs may reference any element built so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctRep {
    /// Chain lengths; `chains.len() == pairs.len() + 1`.
    pub chains: Vec<usize>,
    /// Adjunct pair for each stage beyond the base chain.
    pub pairs: Vec<(usize, usize)>,
}

impl AdjunctRep {
    /// Convenience constructor.
    pub fn new(chains: Vec<usize>, pairs: Vec<(usize, usize)>) -> Self {
        AdjunctRep { chains, pairs }
    }
}

/// Builds the lattice described by an [`AdjunctRep`].
///
/// Errors carry the stage at which the expression is invalid: stage `0`
/// covers shape problems and the base chain, stage `i ≥ 1` the `i`-th
/// adjunct.
///
/// ```
/// use lattice_census::construct::{realize, AdjunctRep};
///
/// // 4-chain with two singletons: one parallel to 1..3, one to 0..2.
/// let rep = AdjunctRep::new(vec![4, 1, 1], vec![(1, 3), (0, 2)]);
/// let lattice = realize(&rep).unwrap();
/// assert_eq!(lattice.n(), 6);
/// assert_eq!(lattice.nullity(), 2);
/// ```
pub fn realize(rep: &AdjunctRep) -> Result<Poset, RealizeError> {
    if rep.chains.len() != rep.pairs.len() + 1 {
        return Err(RealizeError {
            stage: 0,
            source: ConstructError::MismatchedRep {
                chains: rep.chains.len(),
                pairs: rep.pairs.len(),
            },
        });
    }
    if rep.chains[0] == 0 {
        return Err(RealizeError {
            stage: 0,
            source: ConstructError::EmptyChain,
        });
    }
    let mut acc = chain(rep.chains[0]);
    for (i, (&len, &(a, b))) in rep.chains[1..].iter().zip(&rep.pairs).enumerate() {
        let stage = i + 1;
        if len == 0 {
            return Err(RealizeError {
                stage,
                source: ConstructError::EmptyChain,
            });
        }
        acc = adjunct(&acc, a, b, &chain(len)).map_err(|source| RealizeError { stage, source })?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// The catalog of basic blocks
// ---------------------------------------------------------------------------

/// Identifier of one of the 29 basic blocks.
///
/// - `F1`–`F4`: three reducible elements (`F4` has nullity 3, the others 2).
/// - `F5`–`F7`: four reducible elements, nullity 2, heights 3, 4, 5.
/// - `B1`–`B22`: four pairwise comparable reducible elements, nullity 3;
///   heights 3 (`B1`–`B3`), 4 (`B4`–`B12`), 5 (`B13`–`B21`), 6 (`B22`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum BasicBlockId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    B10,
    B11,
    B12,
    B13,
    B14,
    B15,
    B16,
    B17,
    B18,
    B19,
    B20,
    B21,
    B22,
}

impl BasicBlockId {
    /// All 29 identifiers, in catalog order.
    pub const ALL: [BasicBlockId; 29] = {
        use BasicBlockId::*;
        [
            F1, F2, F3, F4, F5, F6, F7, B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13,
            B14, B15, B16, B17, B18, B19, B20, B21, B22,
        ]
    };

    /// The identifier's display name (`"F1"`, `"B22"`, …).
    pub fn as_str(self) -> &'static str {
        use BasicBlockId::*;
        match self {
            F1 => "F1",
            F2 => "F2",
            F3 => "F3",
            F4 => "F4",
            F5 => "F5",
            F6 => "F6",
            F7 => "F7",
            B1 => "B1",
            B2 => "B2",
            B3 => "B3",
            B4 => "B4",
            B5 => "B5",
            B6 => "B6",
            B7 => "B7",
            B8 => "B8",
            B9 => "B9",
            B10 => "B10",
            B11 => "B11",
            B12 => "B12",
            B13 => "B13",
            B14 => "B14",
            B15 => "B15",
            B16 => "B16",
            B17 => "B17",
            B18 => "B18",
            B19 => "B19",
            B20 => "B20",
            B21 => "B21",
            B22 => "B22",
        }
    }
}

impl fmt::Display for BasicBlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasicBlockId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase();
        BasicBlockId::ALL
            .into_iter()
            .find(|id| id.as_str() == wanted)
            .ok_or_else(|| format!("unknown basic block id {s:?}"))
    }
}

/// The adjunct-of-chains representation of a catalog block.
///
/// Every block is a base chain with singletons adjoined; see
/// [`AdjunctRep`] for the labeling convention.
pub fn catalog_rep(id: BasicBlockId) -> AdjunctRep {
    use BasicBlockId::*;
    let (chains, pairs): (Vec<usize>, Vec<(usize, usize)>) = match id {
        F1 => (vec![4, 1, 1], vec![(0, 3), (1, 3)]),
        F2 => (vec![4, 1, 1], vec![(0, 3), (0, 2)]),
        F3 => (vec![5, 1, 1], vec![(0, 2), (2, 4)]),
        F4 => (vec![5, 1, 1, 1], vec![(0, 2), (2, 4), (0, 4)]),
        F5 => (vec![4, 1, 1], vec![(0, 2), (1, 3)]),
        F6 => (vec![5, 1, 1], vec![(0, 4), (1, 3)]),
        F7 => (vec![6, 1, 1], vec![(0, 2), (3, 5)]),
        B1 => (vec![4, 1, 1, 1], vec![(1, 3), (0, 2), (0, 2)]),
        B2 => (vec![4, 1, 1, 1], vec![(0, 2), (1, 3), (1, 3)]),
        B3 => (vec![4, 1, 1, 1], vec![(0, 2), (1, 3), (0, 3)]),
        B4 => (vec![5, 1, 1, 1], vec![(1, 3), (1, 3), (0, 4)]),
        B5 => (vec![5, 1, 1, 1], vec![(1, 3), (0, 4), (0, 4)]),
        B6 => (vec![5, 1, 1, 1], vec![(1, 4), (2, 4), (0, 2)]),
        B7 => (vec![5, 1, 1, 1], vec![(2, 4), (0, 2), (0, 3)]),
        B8 => (vec![5, 1, 1, 1], vec![(1, 4), (2, 4), (0, 4)]),
        B9 => (vec![5, 1, 1, 1], vec![(0, 2), (0, 3), (0, 4)]),
        B10 => (vec![5, 1, 1, 1], vec![(1, 3), (0, 3), (0, 4)]),
        B11 => (vec![5, 1, 1, 1], vec![(1, 3), (1, 4), (0, 4)]),
        B12 => (vec![5, 1, 1, 1], vec![(1, 4), (0, 3), (1, 3)]),
        B13 => (vec![6, 1, 1, 1], vec![(0, 2), (0, 2), (3, 5)]),
        B14 => (vec![6, 1, 1, 1], vec![(0, 2), (3, 5), (3, 5)]),
        B15 => (vec![6, 1, 1, 1], vec![(0, 2), (2, 4), (2, 5)]),
        B16 => (vec![6, 1, 1, 1], vec![(1, 3), (0, 3), (3, 5)]),
        B17 => (vec![6, 1, 1, 1], vec![(0, 2), (0, 3), (3, 5)]),
        B18 => (vec![6, 1, 1, 1], vec![(0, 2), (3, 5), (2, 5)]),
        B19 => (vec![6, 1, 1, 1], vec![(0, 2), (2, 4), (0, 5)]),
        B20 => (vec![6, 1, 1, 1], vec![(1, 3), (3, 5), (0, 5)]),
        B21 => (vec![6, 1, 1, 1], vec![(0, 2), (3, 5), (0, 5)]),
        B22 => (vec![7, 1, 1, 1], vec![(0, 2), (2, 4), (4, 6)]),
    };
    AdjunctRep::new(chains, pairs)
}

/// Builds a catalog block.
pub fn catalog(id: BasicBlockId) -> Poset {
    realize(&catalog_rep(id)).expect("catalog representations are valid")
}

/// Canonical forms of all 29 catalog blocks, built once.
pub(crate) fn catalog_canonical_table() -> &'static [(BasicBlockId, CanonicalForm)] {
    static TABLE: OnceLock<Vec<(BasicBlockId, CanonicalForm)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        BasicBlockId::ALL
            .into_iter()
            .map(|id| (id, canonical_form(&catalog(id))))
            .collect()
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
