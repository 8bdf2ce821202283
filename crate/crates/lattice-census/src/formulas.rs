//! Closed-form counting formulas for lattice classes with up to four
//! reducible elements and nullity up to three.
//!
//! Every formula is a finite sum over restricted partition counts
//! `P(n, k)` (see [`crate::partitions`]); each is evaluated term by term
//! in exact integer arithmetic, with empty sums contributing zero, so
//! arguments below a formula's domain simply evaluate to `0`.
//!
//! # Formula identifiers
//!
//! [`FormulaId`] names each count with a stable string (usable from the
//! CLI and in reports):
//!
//! | id | arguments | counts |
//! |----|-----------|--------|
//! | `P` | `n, k` | partitions of `n` into exactly `k` parts |
//! | `L2` | `n, k` | lattices, 2 reducible elements, nullity `k` |
//! | `L3` | `n, k` | lattices, 3 reducible elements, nullity `k` |
//! | `L22s` | `n` | sandwiched `r=2, k=2` lattices (chains on both sides) |
//! | `B3` | `n, k` | maximal blocks, `r=3`, nullity `k` |
//! | `B3.F1`–`B3.F4` | `n, k` | the four `r=3` block families |
//! | `L42` | `n` | lattices, `r=4`, `k=2` |
//! | `B42` | `n` | maximal blocks, `r=4`, `k=2` |
//! | `B42.3`–`B42.5` | `n` | those blocks by height 3, 4, 5 |
//! | `L43` | `n` | lattices, `r=4` comparable reducibles, `k=3` |
//! | `B43` | `n` | maximal blocks, `r=4` comparable, `k=3` |
//! | `B43.3`–`B43.6` | `n` | those blocks by height 3–6 |
//! | `BB43.1`–`BB43.22` | `n` | those blocks by associated basic block |
//!
//! ```
//! use lattice_census::formulas::{evaluate, FormulaId};
//! use lattice_census::partitions::PartitionTable;
//!
//! let pt = PartitionTable::new(32);
//! assert_eq!(evaluate(FormulaId::L43, &pt, 7, None).unwrap().to_string(), "3");
//! assert_eq!(evaluate(FormulaId::L2, &pt, 5, Some(1)).unwrap().to_string(), "3");
//! // Below the domain every sum is empty.
//! assert_eq!(evaluate(FormulaId::L43, &pt, 6, None).unwrap().to_string(), "0");
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::partitions::PartitionTable;

// ---------------------------------------------------------------------------
// Identifiers and errors
// ---------------------------------------------------------------------------

/// Stable identifier of a counting formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum FormulaId {
    P,
    L2,
    L3,
    L22s,
    B3,
    B3F1,
    B3F2,
    B3F3,
    B3F4,
    L42,
    B42,
    B42_3,
    B42_4,
    B42_5,
    L43,
    B43,
    B43_3,
    B43_4,
    B43_5,
    B43_6,
    BB43_1,
    BB43_2,
    BB43_3,
    BB43_4,
    BB43_5,
    BB43_6,
    BB43_7,
    BB43_8,
    BB43_9,
    BB43_10,
    BB43_11,
    BB43_12,
    BB43_13,
    BB43_14,
    BB43_15,
    BB43_16,
    BB43_17,
    BB43_18,
    BB43_19,
    BB43_20,
    BB43_21,
    BB43_22,
}

impl FormulaId {
    /// All identifiers, in canonical listing order.
    pub const ALL: [FormulaId; 42] = {
        use FormulaId::*;
        [
            P, L2, L3, L22s, B3, B3F1, B3F2, B3F3, B3F4, L42, B42, B42_3, B42_4, B42_5, L43, B43,
            B43_3, B43_4, B43_5, B43_6, BB43_1, BB43_2, BB43_3, BB43_4, BB43_5, BB43_6, BB43_7,
            BB43_8, BB43_9, BB43_10, BB43_11, BB43_12, BB43_13, BB43_14, BB43_15, BB43_16, BB43_17,
            BB43_18, BB43_19, BB43_20, BB43_21, BB43_22,
        ]
    };

    /// The identifier's stable string (`"L2"`, `"B3.F3"`, `"BB43.15"`, …).
    pub fn as_str(self) -> &'static str {
        use FormulaId::*;
        match self {
            P => "P",
            L2 => "L2",
            L3 => "L3",
            L22s => "L22s",
            B3 => "B3",
            B3F1 => "B3.F1",
            B3F2 => "B3.F2",
            B3F3 => "B3.F3",
            B3F4 => "B3.F4",
            L42 => "L42",
            B42 => "B42",
            B42_3 => "B42.3",
            B42_4 => "B42.4",
            B42_5 => "B42.5",
            L43 => "L43",
            B43 => "B43",
            B43_3 => "B43.3",
            B43_4 => "B43.4",
            B43_5 => "B43.5",
            B43_6 => "B43.6",
            BB43_1 => "BB43.1",
            BB43_2 => "BB43.2",
            BB43_3 => "BB43.3",
            BB43_4 => "BB43.4",
            BB43_5 => "BB43.5",
            BB43_6 => "BB43.6",
            BB43_7 => "BB43.7",
            BB43_8 => "BB43.8",
            BB43_9 => "BB43.9",
            BB43_10 => "BB43.10",
            BB43_11 => "BB43.11",
            BB43_12 => "BB43.12",
            BB43_13 => "BB43.13",
            BB43_14 => "BB43.14",
            BB43_15 => "BB43.15",
            BB43_16 => "BB43.16",
            BB43_17 => "BB43.17",
            BB43_18 => "BB43.18",
            BB43_19 => "BB43.19",
            BB43_20 => "BB43.20",
            BB43_21 => "BB43.21",
            BB43_22 => "BB43.22",
        }
    }

    /// Whether the formula takes a `k` argument in addition to `n`.
    pub fn takes_k(self) -> bool {
        use FormulaId::*;
        matches!(self, P | L2 | L3 | B3 | B3F1 | B3F2 | B3F3 | B3F4)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim();
        FormulaId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| format!("unknown formula id {s:?}"))
    }
}

/// Errors raised by [`evaluate`] and [`CountTable::build`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// The formula takes `k` but none was supplied.
    #[error("formula {id} requires a k argument")]
    MissingK {
        /// The formula in question.
        id: FormulaId,
    },
    /// The formula takes no `k` but one was supplied.
    #[error("formula {id} does not take a k argument")]
    UnexpectedK {
        /// The formula in question.
        id: FormulaId,
    },
    /// The partition table does not cover the requested size.
    #[error("argument n = {needed} exceeds the partition table maximum {max_n}")]
    TableTooSmall {
        /// The `n` requested.
        needed: usize,
        /// The table's maximum.
        max_n: usize,
    },
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluates formula `id` at `n` (and `k`, when the formula takes one).
///
/// The partition table must cover `n`; every internal partition count stays
/// at or below it.
pub fn evaluate(
    id: FormulaId,
    pt: &PartitionTable,
    n: i64,
    k: Option<i64>,
) -> Result<BigUint, FormulaError> {
    if id.takes_k() && k.is_none() {
        return Err(FormulaError::MissingK { id });
    }
    if !id.takes_k() && k.is_some() {
        return Err(FormulaError::UnexpectedK { id });
    }
    if n > 0 && n as usize > pt.max_n() {
        return Err(FormulaError::TableTooSmall {
            needed: n as usize,
            max_n: pt.max_n(),
        });
    }
    use FormulaId::*;
    let kv = k.unwrap_or(0);
    Ok(match id {
        P => pt.count(n, kv),
        L2 => l2(pt, n, kv),
        L3 => l3(pt, n, kv),
        L22s => l22s(pt, n),
        B3 => b3(pt, n, kv),
        B3F1 | B3F2 => b3_f1(pt, n, kv),
        B3F3 => b3_f3(pt, n, kv),
        B3F4 => b3_f4(pt, n, kv),
        L42 => l42(pt, n),
        B42 => b42(pt, n),
        B42_3 => b42_3(n),
        B42_4 => b42_4(pt, n),
        B42_5 => b42_5(pt, n),
        L43 => l43(pt, n),
        B43 => b43(pt, n),
        B43_3 => b43_h(pt, n, 3),
        B43_4 => b43_h(pt, n, 4),
        B43_5 => b43_h(pt, n, 5),
        B43_6 => b43_h(pt, n, 6),
        BB43_1 | BB43_2 => bb43_1(pt, n),
        BB43_3 => bb43_3(n),
        BB43_4 => bb43_4(pt, n),
        BB43_5 => bb43_5(pt, n),
        BB43_6 | BB43_7 | BB43_8 | BB43_9 | BB43_10 | BB43_11 | BB43_12 => bb43_6(pt, n),
        BB43_13 | BB43_14 => bb43_13(pt, n),
        BB43_15 | BB43_16 | BB43_17 | BB43_18 => bb43_15(pt, n),
        BB43_19 | BB43_20 => bb43_19(pt, n),
        BB43_21 => bb43_21(pt, n),
        BB43_22 => bb43_22(pt, n),
    })
}

// ---------------------------------------------------------------------------
// Composition helpers
// ---------------------------------------------------------------------------

/// Counts structures assembled by a direct sum: with `s1(p)` and `s2(q)`
/// counting the parts up to isomorphism, the composite count on `n`
/// elements is `Σ_{p=1}^{n−1} s1(p) · s2(n−p)`.
pub fn compose_direct_sum(
    s1: impl Fn(i64) -> BigUint,
    s2: impl Fn(i64) -> BigUint,
    n: i64,
) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 1..=(n - 1) {
        acc += s1(p) * s2(n - p);
    }
    acc
}

/// Counts structures assembled by a vertical sum (top of the first part
/// identified with the bottom of the second): the composite count on `n`
/// elements is `Σ_{p=1}^{n} s1(p) · s2(n−p+1)`.
pub fn compose_vertical(
    s1: impl Fn(i64) -> BigUint,
    s2: impl Fn(i64) -> BigUint,
    n: i64,
) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 1..=n {
        acc += s1(p) * s2(n - p + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// Individual formulas
// ---------------------------------------------------------------------------

fn big(v: i64) -> BigUint {
    debug_assert!(v >= 0);
    BigUint::from(v as u64)
}

/// Exact binomial coefficient `C(m, r)`, zero for `m < r` or `m < 0`.
fn binom(m: i64, r: u32) -> BigUint {
    if m < 0 || m < r as i64 {
        return BigUint::ZERO;
    }
    let mut acc = BigUint::from(1u32);
    for i in 1..=r as i64 {
        // Always exact: the running product of i consecutive integers is
        // divisible by i!.
        acc = acc * big(m - r as i64 + i) / big(i);
    }
    acc
}

/// Lattices with two reducible elements and nullity `k`.
fn l2(pt: &PartitionTable, n: i64, k: i64) -> BigUint {
    if k < 1 {
        // Two reducible elements need at least one cycle.
        return BigUint::ZERO;
    }
    let mut acc = BigUint::ZERO;
    for j in 1..=(n - k - 2) {
        acc += big(j) * pt.count(n - j - 1, k + 1);
    }
    acc
}

/// First (and by duality second) family of `r=3` maximal blocks.
fn b3_f1(pt: &PartitionTable, m: i64, k: i64) -> BigUint {
    if k < 2 {
        // Three reducibles force r <= 2k, so the nullity is at least 2.
        return BigUint::ZERO;
    }
    let mut acc = BigUint::ZERO;
    for l in 1..=(m - 5) {
        for i in 1..=(m - l - 4) {
            acc += pt.count(m - l - i - 2, k);
        }
    }
    for r in 5..=(m - 2) {
        for s in 1..=(k - 2) {
            for i in 1..=(r - 4) {
                acc += pt.count(r - i - 2, s + 1) * pt.count(m - r, k - s);
            }
        }
    }
    acc
}

/// Third family of `r=3` maximal blocks.
fn b3_f3(pt: &PartitionTable, m: i64, k: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for l in 4..=(m - 3) {
        for t in 1..=(k - 1) {
            acc += pt.count(l - 2, t + 1) * pt.count(m - l - 1, k - t + 1);
        }
    }
    acc
}

/// Fourth family of `r=3` maximal blocks.
fn b3_f4(pt: &PartitionTable, m: i64, k: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for r in 1..=(m - 7) {
        for l in 4..=(m - r - 3) {
            for t in 1..=(k - 2) {
                acc += pt.count(l - 2, t + 1) * pt.count(m - r - l - 1, k - t);
            }
        }
    }
    for r in 2..=(m - 7) {
        for s in 2..=(k - 2) {
            for l in 4..=(m - r - 3) {
                for t in 1..=(k - s - 1) {
                    acc += pt.count(l - 2, t + 1)
                        * pt.count(m - r - l - 1, k - s - t + 1)
                        * pt.count(r, s);
                }
            }
        }
    }
    acc
}

/// All `r=3` maximal blocks: the four families, with family 2 counted via
/// family 1 (their counts agree by duality).
fn b3(pt: &PartitionTable, m: i64, k: i64) -> BigUint {
    big(2) * b3_f1(pt, m, k) + b3_f3(pt, m, k) + b3_f4(pt, m, k)
}

/// Lattices with three reducible elements and nullity `k`.
fn l3(pt: &PartitionTable, n: i64, k: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for i in 0..=(n - 6) {
        acc += big(i + 1) * b3(pt, n - i, k);
    }
    acc
}

/// Sandwiched `r=2, k=2` lattices: a block with nonempty chains both below
/// and above.
fn l22s(pt: &PartitionTable, n: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for i in 2..=(n - 5) {
        acc += big(i - 1) * pt.count(n - i - 2, 3);
    }
    acc
}

/// `r=4, k=2` maximal blocks of height 3.
fn b42_3(j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for l in 1..=(j - 5) {
        for s in 1..=(j - l - 4) {
            for r in 1..=(j - s - l - 3) {
                acc += big(j - s - l - r - 2);
            }
        }
    }
    acc
}

/// `r=4, k=2` maximal blocks of height 4.
fn b42_4(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for i in 1..=(j - 6) {
        for l in 2..=(j - i - 4) {
            acc += big(l - 1) * pt.count(j - i - l - 2, 2);
        }
    }
    acc
}

/// `r=4, k=2` maximal blocks of height 5.
///
/// Structure: two 2-strand cells, disjoint along the reducible chain,
/// joined by a bridge chain with `m ≥ 0` interior elements; `s` splits the
/// elements between the cells, and each cell's strand pair is an unordered
/// partition into two parts. The lower/upper cells are ordered (swapping
/// them reverses the order), so no symmetry factor appears.
fn b42_5(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for m in 0..=(j - 8) {
        for s in 4..=(j - m - 4) {
            acc += pt.count(s - 2, 2) * pt.count(j - m - s - 2, 2);
        }
    }
    acc
}

/// All `r=4, k=2` maximal blocks.
fn b42(pt: &PartitionTable, j: i64) -> BigUint {
    b42_3(j) + b42_4(pt, j) + b42_5(pt, j)
}

/// Lattices with four reducible elements and nullity 2.
fn l42(pt: &PartitionTable, n: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for i in 0..=(n - 6) {
        acc += big(i + 1) * b42(pt, n - i);
    }
    acc
}

/// `r=4` comparable, `k=3` blocks with basic block `B1` (and `B2`).
fn bb43_1(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for s in 1..=(j - 6) {
        for r in 1..=(j - s - 5) {
            for l in 2..=(j - s - r - 3) {
                acc += big(j - s - r - l - 2) * pt.count(l, 2);
            }
        }
    }
    acc
}

/// Blocks with basic block `B3`.
fn bb43_3(j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 1..=(j - 6) {
        acc += binom(j - p - 2, 4);
    }
    acc
}

/// Blocks with basic block `B4`.
fn bb43_4(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for t in 1..=(j - 7) {
        for i in 2..=(j - t - 5) {
            acc += big(i - 1) * pt.count(j - t - i - 2, 3);
        }
    }
    acc
}

/// Blocks with basic block `B5`.
fn bb43_5(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 4..=(j - 4) {
        for t in 1..=(j - p - 3) {
            acc += big(t) * pt.count(j - p - t - 1, 2) * pt.count(p - 2, 2);
        }
    }
    acc
}

/// Blocks with basic block `B6` (and, by equal counts, `B7`–`B12`).
fn bb43_6(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for t in 1..=(j - 7) {
        for r in 1..=(j - t - 6) {
            for l in 1..=(j - t - r - 5) {
                for i in 1..=(j - t - r - l - 4) {
                    acc += pt.count(j - t - r - l - i - 2, 2);
                }
            }
        }
    }
    acc
}

/// Blocks with basic block `B13` (and `B14`).
fn bb43_13(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for r in 0..=(j - 9) {
        for p in 5..=(j - r - 4) {
            acc += pt.count(p - 2, 3) * pt.count(j - p - r - 2, 2);
        }
    }
    acc
}

/// Blocks with basic block `B15` (and `B16`–`B18`).
fn bb43_15(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 4..=(j - 5) {
        for l in 1..=(j - p - 4) {
            for i in 1..=(j - p - l - 3) {
                acc += pt.count(p - 2, 2) * pt.count(j - p - l - i - 1, 2);
            }
        }
    }
    acc
}

/// Blocks with basic block `B19` (and `B20`).
fn bb43_19(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for r in 1..=(j - 8) {
        for q in 1..=(j - r - 7) {
            for l in 4..=(j - q - r - 3) {
                acc += pt.count(l - 2, 2) * pt.count(j - q - r - l - 1, 2);
            }
        }
    }
    acc
}

/// Blocks with basic block `B21`.
///
/// Structure: the two disjoint cells and bridge of the height-5 `r=4, k=2`
/// blocks (see [`b42_5`]), plus one outer strand running from bottom to
/// top; `t ≥ 1` is the bridge length in edges and `m ≥ 0` the outer
/// strand's interior elements beyond the one that survives reduction.
fn bb43_21(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for t in 1..=(j - 8) {
        for m in 0..=(j - t - 8) {
            for s in 4..=(j - t - m - 4) {
                acc += pt.count(s - 2, 2) * pt.count(j - t - m - s - 2, 2);
            }
        }
    }
    acc
}

/// Blocks with basic block `B22`.
fn bb43_22(pt: &PartitionTable, j: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for p in 7..=(j - 3) {
        for l in 4..=(p - 3) {
            acc += pt.count(j - p - 1, 2) * pt.count(l - 2, 2) * pt.count(p - l - 1, 2);
        }
    }
    acc
}

/// `r=4` comparable, `k=3` blocks of height `h`, summed over the basic
/// blocks of that height with dual pairs counted twice.
fn b43_h(pt: &PartitionTable, j: i64, h: i64) -> BigUint {
    match h {
        3 => big(2) * bb43_1(pt, j) + bb43_3(j),
        4 => bb43_4(pt, j) + bb43_5(pt, j) + big(7) * bb43_6(pt, j),
        5 => {
            big(2) * bb43_13(pt, j)
                + big(4) * bb43_15(pt, j)
                + big(2) * bb43_19(pt, j)
                + bb43_21(pt, j)
        }
        6 => bb43_22(pt, j),
        _ => BigUint::ZERO,
    }
}

/// All `r=4` comparable, `k=3` maximal blocks.
fn b43(pt: &PartitionTable, j: i64) -> BigUint {
    (3..=6).map(|h| b43_h(pt, j, h)).sum()
}

/// Lattices with four pairwise comparable reducible elements and nullity 3.
fn l43(pt: &PartitionTable, n: i64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for i in 0..=(n - 7) {
        acc += big(i + 1) * b43(pt, n - i);
    }
    acc
}

// ---------------------------------------------------------------------------
// Count tables
// ---------------------------------------------------------------------------

/// One evaluated grid cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    /// The size argument.
    pub n: i64,
    /// The nullity argument, for formulas that take one.
    pub k: Option<i64>,
    /// The exact count.
    pub value: BigUint,
}

/// A formula evaluated over a rectangular argument grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// The formula.
    pub id: FormulaId,
    /// Rows in ascending `(n, k)` order.
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// Evaluates `id` over `n_min..=n_max` (crossed with
    /// `k_min..=k_max` when the formula takes `k`).
    ///
    /// Empty ranges produce an empty table. `k_range` must be present
    /// exactly when the formula takes `k`.
    pub fn build(
        id: FormulaId,
        pt: &PartitionTable,
        n_range: (i64, i64),
        k_range: Option<(i64, i64)>,
    ) -> Result<CountTable, FormulaError> {
        if id.takes_k() && k_range.is_none() {
            return Err(FormulaError::MissingK { id });
        }
        if !id.takes_k() && k_range.is_some() {
            return Err(FormulaError::UnexpectedK { id });
        }
        let mut rows = Vec::new();
        for n in n_range.0..=n_range.1 {
            match k_range {
                Some((k_min, k_max)) => {
                    for k in k_min..=k_max {
                        let value = evaluate(id, pt, n, Some(k))?;
                        rows.push(CountRow {
                            n,
                            k: Some(k),
                            value,
                        });
                    }
                }
                None => {
                    let value = evaluate(id, pt, n, None)?;
                    rows.push(CountRow { n, k: None, value });
                }
            }
        }
        Ok(CountTable { id, rows })
    }

    /// CSV rendering with header `formula_id,n,k,value`; `k` is empty for
    /// formulas without one.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("formula_id,n,k,value\n");
        for row in &self.rows {
            let k = row.k.map(|k| k.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{}\n", self.id, row.n, k, row.value));
        }
        out
    }

    /// JSON rendering: an array of row objects with the count as a decimal
    /// string.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                obj.insert("formula_id".into(), self.id.as_str().into());
                obj.insert("n".into(), row.n.into());
                if let Some(k) = row.k {
                    obj.insert("k".into(), k.into());
                }
                obj.insert("value".into(), row.value.to_string().into());
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows).expect("JSON serialization succeeds");
        out.push('\n');
        out
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
