//! Exact enumeration and closed-form counting of finite lattices classified
//! by their reducible elements.
//!
//! A finite poset is represented by its Hasse diagram (the cover relation).
//! For a lattice `L`, an element is *reducible* when it is join-reducible or
//! meet-reducible; equivalently, when it has at least two lower covers or at
//! least two upper covers. Writing `r` for the number of reducible elements
//! and `k` for the *nullity* of the Hasse diagram (edges − vertices +
//! connected components, i.e. the cycle rank of the underlying undirected
//! graph), finite lattices fall into classes `(n, r, k)` with `n` the number
//! of elements. This crate provides:
//!
//! - [`Poset`]: an immutable validated Hasse-diagram representation with the
//!   order-theoretic toolkit (closure, joins/meets, height, duality,
//!   irreducibles, nullity) — see [`poset`];
//! - canonical forms for isomorphism testing and deduplication — see
//!   [`canon`];
//! - structural constructors: chains, direct (ordinal) sums, vertical sums,
//!   and the *adjunct* operation that glues one lattice into a non-cover
//!   comparable pair of another — see [`construct`], together with the
//!   catalog of the 29 basic blocks `F1`–`F7`, `B1`–`B22`;
//! - the reduction pipeline (retractible elements, basic retracts, basic
//!   blocks, maximal blocks) — see [`reduce`];
//! - restricted partition counting `P(n, k)` — see [`partitions`];
//! - the closed-form counting formulas for the classes with `r ≤ 4`,
//!   `k ≤ 3` — see [`formulas`];
//! - independent brute-force enumeration oracles and the verification
//!   harness that compares formula values against them class by class — see
//!   [`enumerate`].
//!
//! # Exactness and determinism
//!
//! All counts are exact [`num_bigint::BigUint`] values; no floating point is
//! used anywhere. Every public function is deterministic: iteration is over
//! ordered structures (`BTreeMap`/`BTreeSet`/sorted `Vec`), and the
//! parallelized enumerators reduce their shards in a fixed order, so output
//! bytes do not depend on thread count or scheduling.
//!
//! # Example
//!
//! ```
//! use lattice_census::construct::chain;
//! use lattice_census::formulas::{evaluate, FormulaId};
//! use lattice_census::partitions::PartitionTable;
//! use lattice_census::poset::Poset;
//!
//! // The pentagon: 0 < a < b < 1 on one side, 0 < c < 1 on the other.
//! let pentagon = Poset::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
//! assert!(pentagon.is_lattice());
//! assert_eq!(pentagon.nullity(), 1);
//! assert_eq!(pentagon.reducible_elements().unwrap(), vec![0, 4]);
//!
//! // Chains are the lattices with no reducible element.
//! assert_eq!(chain(4).reducible_elements().unwrap(), Vec::<usize>::new());
//!
//! // Closed-form counting: there are exactly 3 lattices on 7 elements with
//! // four pairwise comparable reducible elements and nullity 3.
//! let table = PartitionTable::new(64);
//! let count = evaluate(FormulaId::L43, &table, 7, None).unwrap();
//! assert_eq!(count.to_string(), "3");
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![warn(missing_debug_implementations)]
#![warn(trivial_casts, trivial_numeric_casts)]

pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod formulas;
pub mod partitions;
pub mod poset;
pub mod reduce;

pub use canon::{canonical_form, canonical_poset, is_isomorphic, CanonicalForm};
pub use construct::{adjunct, catalog, chain, direct_sum, vertical_sum, AdjunctRep, BasicBlockId};
pub use poset::{ClassKey, Poset};
