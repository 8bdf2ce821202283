//! Brute-force enumeration oracles and the lattice classifier.
//!
//! Two independent generators provide ground truth for the counting
//! formulas:
//!
//! * [`enumerate_all_lattices`] — exhaustive search over all isomorphism
//!   classes of lattices on `n` elements, grown level by level as
//!   meet-semilattices (each step adds one new maximal element above an
//!   antichain of lower covers, deduplicating by canonical form) and
//!   filtered to those with a greatest element.
//! * [`enumerate_adjunct_lattices`] — every lattice expressible as an
//!   adjunct of chains, generated by exhausting chain-length compositions
//!   and all valid pair placements, again deduplicated canonically. A
//!   lattice built from `l + 1` chains has nullity exactly `l`, so the
//!   search is stratified by nullity.
//!
//! [`classify`] buckets a lattice into its [`ClassKey`], [`maximal_block`]
//! extracts the interval spanned by the reducible elements, [`f_family`]
//! assigns three-reducible lattices to their structural family, and
//! [`is_dismantlable`] decides dismantlability. The [`verify`] harness
//! evaluates every counting formula against these oracles.
//!
//! Both generators are deterministic: results live in maps ordered by
//! canonical form, and parallel fan-out (via rayon) only affects scheduling,
//! never content or order.

mod verify;

pub use verify::{verify, VerifyReport, VerifyRow};

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_poset, CanonicalForm};
use crate::construct::{adjunct, chain};
use crate::poset::{ClassKey, Poset};
use crate::reduce::basic_block;

/// Largest `n` accepted by [`enumerate_all_lattices`].
pub const MAX_EXHAUSTIVE_N: usize = 9;
/// Largest `k_max` accepted by [`enumerate_adjunct_lattices`].
pub const MAX_ADJUNCT_K: usize = 4;
/// Largest `n` accepted by [`enumerate_adjunct_lattices`] for `k_max ≤ 3`.
pub const MAX_ADJUNCT_N: usize = 11;
/// Largest `n` accepted by [`enumerate_adjunct_lattices`] for `k_max = 4`.
pub const MAX_ADJUNCT_N_K4: usize = 10;
/// Largest `n_max` accepted by [`verify`].
pub const MAX_VERIFY_N: usize = 10;

/// Errors from the enumeration oracles and the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    /// The input poset is not a lattice.
    #[error("the poset is not a lattice")]
    NotALattice,
    /// A parameter exceeds the compiled-in search budget.
    #[error("{param} = {value} exceeds the enumeration budget (max {max})")]
    BeyondBudget {
        /// Parameter name.
        param: &'static str,
        /// Requested value.
        value: usize,
        /// Largest accepted value.
        max: usize,
    },
    /// A parameter that must be positive was zero.
    #[error("{param} must be at least 1")]
    Zero {
        /// Parameter name.
        param: &'static str,
    },
    /// Family classification applies only to lattices with three reducibles.
    #[error("family classification requires exactly 3 reducible elements, got {r}")]
    NotThreeReducibles {
        /// Actual reducible count.
        r: usize,
    },
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

/// Enumerates every isomorphism class of lattices on `n` elements.
///
/// Returns one canonical representative per class, keyed and ordered by
/// canonical form. The search grows meet-semilattices one element at a time
/// (every finite meet-semilattice arises by repeatedly adding a new maximal
/// element over an antichain of lower covers) and keeps those with a
/// greatest element, which are exactly the lattices.
pub fn enumerate_all_lattices(n: usize) -> Result<BTreeMap<CanonicalForm, Poset>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::Zero { param: "n" });
    }
    if n > MAX_EXHAUSTIVE_N {
        return Err(EnumerateError::BeyondBudget {
            param: "n",
            value: n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let point = Poset::new(1, &[]).expect("the one-element poset is valid");
    let mut frontier = BTreeMap::from([(canonical_form(&point), point)]);
    for _ in 2..=n {
        let posets: Vec<&Poset> = frontier.values().collect();
        let batches: Vec<Vec<(CanonicalForm, Poset)>> =
            posets.par_iter().map(|p| extend_semilattice(p)).collect();
        let mut next = BTreeMap::new();
        for batch in batches {
            for (form, q) in batch {
                next.entry(form).or_insert(q);
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .filter(|(_, p)| p.is_lattice())
        .collect())
}

/// All one-element extensions of a meet-semilattice that are again
/// meet-semilattices, as canonical (form, representative) pairs.
fn extend_semilattice(p: &Poset) -> Vec<(CanonicalForm, Poset)> {
    let m = p.n();
    let downs: Vec<u64> = (0..m).map(|i| p.down_set_mask(i)).collect();
    let mut out = Vec::new();
    'subsets: for s in 1u64..(1 << m) {
        // The lower covers of the new element must form an antichain.
        let mut bits = s;
        let mut union_down = 0u64;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if downs[y] & s != 1 << y {
                continue 'subsets;
            }
            union_down |= downs[y];
        }
        // Meets with the new element must exist: for every z not below it,
        // the common lower bounds need a greatest element.
        for z in 0..m {
            if union_down >> z & 1 == 1 {
                continue;
            }
            let common = union_down & downs[z];
            let mut bits = common;
            let mut has_greatest = false;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if common & downs[w] == common {
                    has_greatest = true;
                    break;
                }
            }
            if !has_greatest {
                continue 'subsets;
            }
        }
        let mut covers = p.covers().to_vec();
        let mut bits = s;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            covers.push((y, m));
        }
        let q = Poset::new(m + 1, &covers).expect("extension of a valid poset");
        out.push((canonical_form(&q), canonical_poset(&q)));
    }
    out
}

// ---------------------------------------------------------------------------
// Adjunct oracle
// ---------------------------------------------------------------------------

/// Enumerates every isomorphism class of lattices on `n` elements that is an
/// adjunct of chains with nullity at most `k_max`.
///
/// These are exactly the dismantlable lattices with nullity `≤ k_max`. The
/// search runs one job per chain-length composition `(c₀, …, c_l)` with
/// `c₀ ≥ 3` and `l ≤ k_max`; each job attaches the chains in order, trying
/// every valid placement pair `(a, b)` at every stage — including pairs on
/// previously attached chains — and deduplicates per stage by canonical
/// form. Results merge into one map ordered by canonical form.
pub fn enumerate_adjunct_lattices(
    n: usize,
    k_max: usize,
) -> Result<BTreeMap<CanonicalForm, Poset>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::Zero { param: "n" });
    }
    if k_max > MAX_ADJUNCT_K {
        return Err(EnumerateError::BeyondBudget {
            param: "k_max",
            value: k_max,
            max: MAX_ADJUNCT_K,
        });
    }
    let n_cap = if k_max <= 3 {
        MAX_ADJUNCT_N
    } else {
        MAX_ADJUNCT_N_K4
    };
    if n > n_cap {
        return Err(EnumerateError::BeyondBudget {
            param: "n",
            value: n,
            max: n_cap,
        });
    }

    let base = chain(n);
    let mut out = BTreeMap::from([(canonical_form(&base), canonical_poset(&base))]);
    let mut jobs: Vec<Vec<usize>> = Vec::new();
    for l in 1..=k_max {
        push_compositions(n, l, &mut jobs);
    }
    let batches: Vec<Vec<(CanonicalForm, Poset)>> =
        jobs.par_iter().map(|comp| adjunct_closure(comp)).collect();
    for batch in batches {
        for (form, q) in batch {
            out.entry(form).or_insert(q);
        }
    }
    Ok(out)
}

/// Appends all compositions `(c₀, …, c_l)` of `n` with `c₀ ≥ 3` and
/// `cᵢ ≥ 1` for `i ≥ 1`.
fn push_compositions(n: usize, l: usize, out: &mut Vec<Vec<usize>>) {
    fn rest(remaining: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if remaining < parts {
            return;
        }
        for c in 1..=(remaining - parts + 1) {
            acc.push(c);
            rest(remaining - c, parts - 1, acc, out);
            acc.pop();
        }
    }
    for c0 in 3..=n.saturating_sub(l) {
        let mut acc = vec![c0];
        rest(n - c0, l, &mut acc, out);
    }
}

/// Attaches the chains of one composition in every possible way.
fn adjunct_closure(comp: &[usize]) -> Vec<(CanonicalForm, Poset)> {
    let base = chain(comp[0]);
    let mut stage = BTreeMap::from([(canonical_form(&base), base)]);
    for &c in &comp[1..] {
        let attach = chain(c);
        let mut next: BTreeMap<CanonicalForm, Poset> = BTreeMap::new();
        for p in stage.values() {
            for a in 0..p.n() {
                for b in 0..p.n() {
                    if p.lt(a, b) && !p.covers_pair(a, b) {
                        let q = adjunct(p, a, b, &attach)
                            .expect("placement pair is valid by construction");
                        next.entry(canonical_form(&q))
                            .or_insert_with(|| canonical_poset(&q));
                    }
                }
            }
        }
        stage = next;
    }
    stage.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Computes the [`ClassKey`] of a lattice: size, reducible count, nullity,
/// comparability of the reducibles, and basic-block height (`None` for
/// chains, which have no reducibles).
pub fn classify(p: &Poset) -> Result<ClassKey, EnumerateError> {
    if !p.is_lattice() {
        return Err(EnumerateError::NotALattice);
    }
    let red = p.reducible_elements().expect("lattice verified");
    let r = red.len();
    let h = if r == 0 {
        None
    } else {
        Some(basic_block(p).height())
    };
    Ok(ClassKey {
        n: p.n(),
        r,
        k: p.nullity(),
        rc: p.is_rc().expect("lattice verified"),
        h,
    })
}

/// Extracts the maximal block of a lattice: the interval from the meet of
/// all reducible elements to their join, together with the number of
/// elements strictly below and strictly above it.
///
/// Returns `None` for chains. Everything outside the interval lies on a
/// pendant chain under its bottom or over its top: an element incomparable
/// with an interval endpoint would make an extra reducible outside the
/// interval, which is impossible.
pub fn maximal_block(p: &Poset) -> Result<Option<(Poset, usize, usize)>, EnumerateError> {
    if !p.is_lattice() {
        return Err(EnumerateError::NotALattice);
    }
    let red = p.reducible_elements().expect("lattice verified");
    let Some((&first, rest)) = red.split_first() else {
        return Ok(None);
    };
    let mut lo = first;
    let mut hi = first;
    for &x in rest {
        lo = p.meet(lo, x).expect("lattice verified");
        hi = p.join(hi, x).expect("lattice verified");
    }
    let mask = p.up_set_mask(lo) & p.down_set_mask(hi);
    let below = p.down_set_mask(lo).count_ones() as usize - 1;
    let above = p.up_set_mask(hi).count_ones() as usize - 1;
    debug_assert_eq!(below + above + mask.count_ones() as usize, p.n());
    Ok(Some((induced(p, mask), below, above)))
}

/// The subposet induced on `mask`, relabeled by ascending original index.
/// Valid only when `mask` is an interval (or union of components), so that
/// induced covers are exactly the original covers.
fn induced(p: &Poset, mask: u64) -> Poset {
    let mut map = vec![usize::MAX; p.n()];
    let mut count = 0;
    for (i, slot) in map.iter_mut().enumerate() {
        if mask >> i & 1 == 1 {
            *slot = count;
            count += 1;
        }
    }
    let covers: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .filter(|&&(x, y)| mask >> x & 1 == 1 && mask >> y & 1 == 1)
        .map(|&(x, y)| (map[x], map[y]))
        .collect();
    Poset::new(count, &covers).expect("induced interval of a valid poset")
}

// ---------------------------------------------------------------------------
// Family classification (three reducibles)
// ---------------------------------------------------------------------------

/// Assigns a lattice with exactly three reducible elements to its family
/// (1–4).
///
/// Three reducibles are always pairwise comparable, say `ρ₀ < ρ₁ < ρ₂`.
/// Every cover path between two of them whose interior is entirely
/// irreducible is a *strand*; write `m₀₁`, `m₁₂`, `m₀₂` for the strand
/// counts of the three slots. The strands determine the cover degrees of
/// the reducibles, forcing `m₀₁ ≥ 1` and `m₁₂ ≥ 1`, and the slot weights
/// `k₁ = m₀₁ − 1`, `k₂ = m₁₂ − 1`, `k₃ = m₀₂` sum to the nullity. At most
/// one weight can vanish; the family is the index of the vanishing weight,
/// or 4 when all three are positive.
pub fn f_family(p: &Poset) -> Result<u8, EnumerateError> {
    if !p.is_lattice() {
        return Err(EnumerateError::NotALattice);
    }
    let mut rho = p.reducible_elements().expect("lattice verified");
    if rho.len() != 3 {
        return Err(EnumerateError::NotThreeReducibles { r: rho.len() });
    }
    rho.sort_by_key(|&x| p.down_set_mask(x).count_ones());
    debug_assert!(p.lt(rho[0], rho[1]) && p.lt(rho[1], rho[2]));
    let red_mask = 1u64 << rho[0] | 1 << rho[1] | 1 << rho[2];
    let m01 = strand_count(p, rho[0], rho[1], red_mask);
    let m12 = strand_count(p, rho[1], rho[2], red_mask);
    let m02 = strand_count(p, rho[0], rho[2], red_mask);
    debug_assert!(m01 >= 1 && m12 >= 1);
    let (k1, k2, k3) = (m01 - 1, m12 - 1, m02);
    debug_assert_eq!(k1 + k2 + k3, p.nullity());
    Ok(if k1 == 0 {
        1
    } else if k2 == 0 {
        2
    } else if k3 == 0 {
        3
    } else {
        4
    })
}

/// Number of cover paths from `from` to `to` whose interior elements are all
/// irreducible. Interior elements have exactly one upper cover, so each
/// strand is determined by its first step.
fn strand_count(p: &Poset, from: usize, to: usize, red_mask: u64) -> usize {
    let mut count = 0;
    for u in p.upper_covers(from) {
        if u == to {
            count += 1;
            continue;
        }
        if red_mask >> u & 1 == 1 {
            continue;
        }
        let mut x = u;
        while let [next] = p.upper_covers(x)[..] {
            if next == to {
                count += 1;
                break;
            }
            if red_mask >> next & 1 == 1 {
                break;
            }
            x = next;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Dismantlability
// ---------------------------------------------------------------------------

/// Whether the lattice can be reduced to a single element by repeatedly
/// removing doubly irreducible elements.
///
/// Removing any doubly irreducible element of a lattice leaves a lattice and
/// cannot create the obstruction to dismantling, so one greedy pass with an
/// arbitrary choice at each step is exact.
pub fn is_dismantlable(p: &Poset) -> Result<bool, EnumerateError> {
    if !p.is_lattice() {
        return Err(EnumerateError::NotALattice);
    }
    let mut cur = p.clone();
    while cur.n() > 1 {
        match cur.doubly_irreducible().into_iter().next() {
            Some(x) => {
                cur = cur.remove_element(x).expect("more than one element left");
                debug_assert!(cur.is_lattice());
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
