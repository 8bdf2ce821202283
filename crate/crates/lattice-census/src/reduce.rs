//! The reduction pipeline: retractible elements, basic retracts, basic
//! blocks, and catalog identification.
//!
//! Reduction strips a poset down to the cycle-carrying core of its Hasse
//! diagram while preserving the reducible elements and the nullity:
//!
//! 1. **Retraction.** A doubly irreducible element `x` (one lower cover `y`,
//!    one upper cover `z`) is *retractible* when either its cover
//!    neighborhood is not a reducible pair (`y` or `z` missing or not
//!    reducible), or `y ≺ x ≺ z` is the only directed cover path from `y`
//!    to `z`. Removing a retractible element never changes the reducible
//!    set or the nullity. The *basic retract* removes the lowest-labeled
//!    retractible element repeatedly until none remains.
//! 2. **Pruning.** The *basic block* then removes pendant vertices (degree
//!    one in the Hasse diagram) one at a time, again lowest label first.
//!
//! For a lattice whose reducible elements are pairwise comparable, the
//! basic block is the canonical witness of its class: see
//! [`identify_block`], which matches it against the catalog in
//! [`crate::construct`].
//!
//! ```
//! use lattice_census::construct::{catalog, chain, BasicBlockId};
//! use lattice_census::reduce::{basic_block, identify_block};
//!
//! // Chains retract to a point and match no catalog block.
//! assert_eq!(basic_block(&chain(7)).n(), 1);
//! assert_eq!(identify_block(&chain(7)), None);
//!
//! // Catalog blocks are fixed points of reduction.
//! let b3 = catalog(BasicBlockId::B3);
//! assert_eq!(basic_block(&b3), b3);
//! assert_eq!(identify_block(&b3), Some(BasicBlockId::B3));
//! ```

use thiserror::Error;

use crate::canon::canonical_form;
use crate::construct::{catalog_canonical_table, BasicBlockId};
use crate::poset::Poset;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors raised by reduction queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    /// [`is_retractible`] is only defined for doubly irreducible elements.
    #[error("element {x} is not doubly irreducible")]
    NotDoublyIrreducible {
        /// The offending element.
        x: usize,
    },
    /// An element index lies outside the poset.
    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// The poset size.
        n: usize,
    },
}

// ---------------------------------------------------------------------------
// Retractibility
// ---------------------------------------------------------------------------

/// Whether the doubly irreducible element `x` may be retracted.
///
/// With `y` the lower cover and `z` the upper cover of `x` (either may be
/// absent), `x` is retractible when
///
/// - `y` and `z` do not form a pair of reducible elements (one is missing
///   or irreducible), **or**
/// - they do, but `y ≺ x ≺ z` is the only directed cover path from `y` to
///   `z`.
///
/// Returns [`ReduceError::NotDoublyIrreducible`] when `x` has two or more
/// covers on either side.
pub fn is_retractible(p: &Poset, x: usize) -> Result<bool, ReduceError> {
    if x >= p.n() {
        return Err(ReduceError::IndexOutOfRange { index: x, n: p.n() });
    }
    if p.up_cover_mask(x).count_ones() > 1 || p.down_cover_mask(x).count_ones() > 1 {
        return Err(ReduceError::NotDoublyIrreducible { x });
    }
    let lower = p.lower_covers(x);
    let upper = p.upper_covers(x);
    let (y, z) = match (lower.first(), upper.first()) {
        (Some(&y), Some(&z)) => (y, z),
        // No complete cover neighborhood: condition 1 holds vacuously.
        _ => return Ok(true),
    };
    let reducible =
        |e: usize| p.up_cover_mask(e).count_ones() >= 2 || p.down_cover_mask(e).count_ones() >= 2;
    if !(reducible(y) && reducible(z)) {
        return Ok(true);
    }
    // Condition 2: retractible iff no other directed cover path y -> z.
    Ok(!cover_path_avoiding(p, y, z, x))
}

/// Whether a directed cover path from `from` to `to` exists that avoids
/// `skip`.
///
/// Any such path is an alternative to `from ≺ skip ≺ to` (a direct cover
/// `from ≺ to` cannot coexist with that chain, so no length-1 special case
/// arises).
fn cover_path_avoiding(p: &Poset, from: usize, to: usize, skip: usize) -> bool {
    let blocked = 1u64 << skip;
    let mut seen = 1u64 << from;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        let mut ups = p.up_cover_mask(v) & !seen & !blocked;
        while ups != 0 {
            let w = ups.trailing_zeros() as usize;
            ups &= ups - 1;
            if w == to {
                return true;
            }
            // Only elements below `to` can lie on a path to it.
            if p.lt(w, to) {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Basic retract and basic block
// ---------------------------------------------------------------------------

/// The basic retract: repeatedly removes the lowest-labeled retractible
/// element with exactly one lower and one upper cover until none remains.
pub fn basic_retract(p: &Poset) -> Poset {
    basic_retract_indexed(p).0
}

/// [`basic_retract`] together with the original label of each surviving
/// element.
pub fn basic_retract_indexed(p: &Poset) -> (Poset, Vec<usize>) {
    let mut cur = p.clone();
    let mut orig: Vec<usize> = (0..p.n()).collect();
    loop {
        let next = cur
            .irr_star()
            .into_iter()
            .find(|&x| is_retractible(&cur, x).expect("irr_star elements are doubly irreducible"));
        match next {
            Some(x) => {
                cur = cur
                    .remove_element(x)
                    .expect("a poset with an irr* element has at least two elements");
                orig.remove(x);
            }
            None => return (cur, orig),
        }
    }
}

/// The basic block: the basic retract with pendant vertices then removed
/// one at a time, lowest label first.
pub fn basic_block(p: &Poset) -> Poset {
    basic_block_indexed(p).0
}

/// [`basic_block`] together with the original label of each surviving
/// element.
pub fn basic_block_indexed(p: &Poset) -> (Poset, Vec<usize>) {
    let (mut cur, mut orig) = basic_retract_indexed(p);
    loop {
        match cur.pendant_vertices().first().copied() {
            Some(x) if cur.n() > 1 => {
                cur = cur
                    .remove_element(x)
                    .expect("more than one element remains");
                orig.remove(x);
            }
            _ => return (cur, orig),
        }
    }
}

/// Matches the basic block of `p` against the catalog.
///
/// Returns `None` when the basic block is not one of the 29 catalog
/// blocks — in particular for chains, whose basic block is a single point.
pub fn identify_block(p: &Poset) -> Option<BasicBlockId> {
    let block = basic_block(p);
    let form = canonical_form(&block);
    catalog_canonical_table()
        .iter()
        .find(|(_, f)| *f == form)
        .map(|&(id, _)| id)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
