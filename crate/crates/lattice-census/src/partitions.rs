//! Restricted partition counts `P(n, k)`: partitions of `n` into exactly
//! `k` parts.
//!
//! The counts satisfy the recurrence
//!
//! ```text
//! P(n, k) = P(n − 1, k − 1) + P(n − k, k)
//! ```
//!
//! (split on whether the smallest part equals 1), with `P(0, 0) = 1`,
//! `P(n, k) = 0` for `k > n` or `k ≤ 0 < n`, and `P(n, n) = P(n, 1) = 1`
//! for `n ≥ 1`.
//!
//! [`PartitionTable`] precomputes the triangle up to a chosen `n` with
//! exact [`BigUint`] arithmetic; [`PartitionTable::count`] is total over
//! `i64` arguments, returning zero outside the triangle, which lets the
//! formula code translate summation bounds literally (empty or
//! out-of-range terms contribute nothing).
//!
//! ```
//! use lattice_census::partitions::PartitionTable;
//!
//! let table = PartitionTable::new(10);
//! assert_eq!(table.count(6, 3).to_string(), "3"); // 4+1+1, 3+2+1, 2+2+2
//! assert_eq!(table.count(5, 7).to_string(), "0"); // more parts than units
//! assert_eq!(table.count(-1, 2).to_string(), "0"); // out of domain
//! ```

use num_bigint::BigUint;

/// Precomputed triangle of restricted partition counts.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    max_n: usize,
    /// `rows[n][k]` = `P(n, k)` for `0 ≤ k ≤ n ≤ max_n`.
    rows: Vec<Vec<BigUint>>,
}

impl PartitionTable {
    /// Builds the triangle for all `0 ≤ k ≤ n ≤ max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigUint::ZERO; n + 1];
            if n == 0 {
                row[0] = BigUint::from(1u32);
            } else {
                for k in 1..=n {
                    // P(n, k) = P(n-1, k-1) + P(n-k, k); the second term
                    // vanishes when n-k < k (a partition of n-k cannot have
                    // k parts).
                    let mut v = rows[n - 1][k - 1].clone();
                    if n - k >= k {
                        v += &rows[n - k][k];
                    }
                    row[k] = v;
                }
            }
            rows.push(row);
        }
        PartitionTable { max_n, rows }
    }

    /// The largest `n` the table covers.
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `P(n, k)`, total over `i64` arguments: zero whenever `(n, k)` lies
    /// outside the triangle `0 ≤ k ≤ n` (with the single exception
    /// `P(0, 0) = 1`).
    ///
    /// # Panics
    ///
    /// Panics when `n` exceeds the precomputed `max_n`.
    pub fn count(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::ZERO;
        }
        let (n, k) = (n as usize, k as usize);
        assert!(
            n <= self.max_n,
            "P({n}, {k}) requested beyond table maximum {}",
            self.max_n
        );
        self.rows[n][k].clone()
    }
}
