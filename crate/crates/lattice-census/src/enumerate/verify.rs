//! Formula-versus-oracle verification.
//!
//! [`verify`] evaluates each requested counting formula over its full
//! argument grid and compares every value against an independent count
//! obtained by enumerating lattices and bucketing them with the classifier.
//! Counts are exact integers; a report row either matches or it does not.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::construct::{catalog, BasicBlockId};
use crate::formulas::{evaluate, FormulaId};
use crate::partitions::PartitionTable;
use crate::poset::Poset;
use crate::reduce::identify_block;

use super::{
    classify, enumerate_adjunct_lattices, enumerate_all_lattices, f_family, maximal_block,
    EnumerateError, MAX_EXHAUSTIVE_N, MAX_VERIFY_N,
};

/// One verification row: a formula value against the oracle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    /// The formula checked.
    pub id: FormulaId,
    /// Size argument.
    pub n: i64,
    /// Nullity argument, for formulas that take one.
    pub k: Option<i64>,
    /// Basic-block height of the class the formula counts, where one is
    /// fixed by the formula itself.
    pub h: Option<i64>,
    /// The closed-form value.
    pub formula_value: BigUint,
    /// The brute-force count.
    pub oracle_value: BigUint,
    /// Whether the two agree.
    pub matched: bool,
}

/// A complete verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Rows in canonical order: formulas in listing order, then `n`, then `k`.
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    /// Whether every row matched.
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matched)
    }

    /// CSV rendering with header
    /// `formula_id,n,k,h,formula_value,oracle_value,match`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("formula_id,n,k,h,formula_value,oracle_value,match\n");
        for r in &self.rows {
            let k = r.k.map(|k| k.to_string()).unwrap_or_default();
            let h = r.h.map(|h| h.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.id, r.n, k, h, r.formula_value, r.oracle_value, r.matched
            ));
        }
        out
    }

    /// JSON rendering: an array of row objects; counts are decimal strings.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut obj = serde_json::Map::new();
                obj.insert("formula_id".into(), r.id.as_str().into());
                obj.insert("n".into(), r.n.into());
                if let Some(k) = r.k {
                    obj.insert("k".into(), k.into());
                }
                if let Some(h) = r.h {
                    obj.insert("h".into(), h.into());
                }
                obj.insert("formula_value".into(), r.formula_value.to_string().into());
                obj.insert("oracle_value".into(), r.oracle_value.to_string().into());
                obj.insert("match".into(), r.matched.into());
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows).expect("JSON serialization succeeds");
        out.push('\n');
        out
    }
}

/// Classification data for one enumerated lattice.
struct Rec {
    key: crate::poset::ClassKey,
    below: usize,
    above: usize,
    family: Option<u8>,
    bb: Option<BasicBlockId>,
}

impl Rec {
    fn is_block(&self) -> bool {
        self.key.r >= 2 && self.below == 0 && self.above == 0
    }
}

fn build_rec(p: &Poset) -> Result<Rec, EnumerateError> {
    let key = classify(p)?;
    let (below, above) = match maximal_block(p)? {
        Some((_, below, above)) => (below, above),
        None => (0, 0),
    };
    let family = if key.r == 3 { Some(f_family(p)?) } else { None };
    let bb = if key.r == 4 && key.k == 3 && key.rc {
        identify_block(p)
    } else {
        None
    };
    Ok(Rec {
        key,
        below,
        above,
        family,
        bb,
    })
}

/// Enumerates and classifies all lattices on `n` elements relevant to the
/// formulas: exhaustively for `n` within the exhaustive budget, otherwise by
/// adjunct generation with nullity up to 3 (every class the formulas count
/// at that size has nullity at most 3).
fn oracle_recs(n: usize) -> Result<Vec<Rec>, EnumerateError> {
    let map = if n <= MAX_EXHAUSTIVE_N {
        enumerate_all_lattices(n)?
    } else {
        enumerate_adjunct_lattices(n, 3)?
    };
    let posets: Vec<Poset> = map.into_values().collect();
    posets.par_iter().map(build_rec).collect()
}

/// The basic block whose inflations a `BB43.*` formula counts.
fn bb43_target(id: FormulaId) -> Option<BasicBlockId> {
    use BasicBlockId::*;
    use FormulaId as F;
    Some(match id {
        F::BB43_1 => B1,
        F::BB43_2 => B2,
        F::BB43_3 => B3,
        F::BB43_4 => B4,
        F::BB43_5 => B5,
        F::BB43_6 => B6,
        F::BB43_7 => B7,
        F::BB43_8 => B8,
        F::BB43_9 => B9,
        F::BB43_10 => B10,
        F::BB43_11 => B11,
        F::BB43_12 => B12,
        F::BB43_13 => B13,
        F::BB43_14 => B14,
        F::BB43_15 => B15,
        F::BB43_16 => B16,
        F::BB43_17 => B17,
        F::BB43_18 => B18,
        F::BB43_19 => B19,
        F::BB43_20 => B20,
        F::BB43_21 => B21,
        F::BB43_22 => B22,
        _ => return None,
    })
}

/// The fixed basic-block height of the class a formula counts, if any.
fn row_h(id: FormulaId) -> Option<i64> {
    use FormulaId::*;
    match id {
        B42_3 | B43_3 => Some(3),
        B42_4 | B43_4 => Some(4),
        B42_5 | B43_5 => Some(5),
        B43_6 => Some(6),
        _ => bb43_target(id).map(|b| catalog(b).height() as i64),
    }
}

/// Largest `n` whose oracle covers this formula's class: formulas over
/// classes of unbounded nullity need the exhaustive oracle; the rest are
/// covered by adjunct generation one size further.
fn id_cap(id: FormulaId) -> usize {
    use FormulaId::*;
    match id {
        L2 | L3 | L22s | B3 | B3F1 | B3F2 | B3F3 | B3F4 => MAX_EXHAUSTIVE_N,
        _ => MAX_VERIFY_N,
    }
}

/// Smallest `k` in a `k`-taking formula's domain: one part for partitions,
/// nullity 1 for two reducibles, nullity 2 for three (below these the class
/// is empty and the sums do not apply).
fn k_min(id: FormulaId) -> i64 {
    use FormulaId::*;
    match id {
        P | L2 => 1,
        _ => 2,
    }
}

/// Counts enumerated lattices matching formula `id` at `(n, k)`.
fn oracle_count(id: FormulaId, recs: &[Rec], k: Option<i64>) -> BigUint {
    use FormulaId::*;
    let k = k.map(|k| k as usize);
    let matches = |rec: &Rec| -> bool {
        let key = &rec.key;
        match id {
            P => unreachable!("partitions are counted directly"),
            L2 => key.r == 2 && Some(key.k) == k,
            L3 => key.r == 3 && Some(key.k) == k,
            L22s => key.r == 2 && key.k == 2 && rec.below >= 1 && rec.above >= 1,
            B3 => rec.is_block() && key.r == 3 && Some(key.k) == k,
            B3F1 | B3F2 | B3F3 | B3F4 => {
                let family = match id {
                    B3F1 => 1,
                    B3F2 => 2,
                    B3F3 => 3,
                    _ => 4,
                };
                rec.is_block() && key.r == 3 && Some(key.k) == k && rec.family == Some(family)
            }
            L42 => key.r == 4 && key.k == 2,
            B42 => rec.is_block() && key.r == 4 && key.k == 2,
            B42_3 | B42_4 | B42_5 => {
                rec.is_block() && key.r == 4 && key.k == 2 && key.h.map(|h| h as i64) == row_h(id)
            }
            L43 => key.r == 4 && key.k == 3 && key.rc,
            B43 => rec.is_block() && key.r == 4 && key.k == 3 && key.rc,
            B43_3 | B43_4 | B43_5 | B43_6 => {
                rec.is_block()
                    && key.r == 4
                    && key.k == 3
                    && key.rc
                    && key.h.map(|h| h as i64) == row_h(id)
            }
            _ => {
                let target = bb43_target(id).expect("remaining ids are BB43.*");
                rec.is_block() && key.r == 4 && key.k == 3 && key.rc && rec.bb == Some(target)
            }
        }
    };
    BigUint::from(recs.iter().filter(|rec| matches(rec)).count())
}

/// Partitions of `n` into exactly `k` parts, counted by direct recursive
/// enumeration (independent of the table recurrence).
fn brute_partitions(n: i64, k: i64) -> BigUint {
    fn rec(n: i64, parts: i64, max: i64) -> u64 {
        if parts == 0 {
            return u64::from(n == 0);
        }
        if n < parts {
            return 0;
        }
        (1..=max.min(n))
            .map(|first| rec(n - first, parts - 1, first))
            .sum()
    }
    if n < 0 || k < 0 {
        return BigUint::ZERO;
    }
    BigUint::from(rec(n, k, n))
}

/// Checks the requested formulas against the enumeration oracles for all
/// sizes up to `n_max` (each formula is capped by its oracle's budget), over
/// each formula's full argument grid.
///
/// Mismatches become report rows, never errors; an empty `ids` list yields
/// an empty report. Output order is canonical and independent of the worker
/// count.
pub fn verify(n_max: usize, ids: &[FormulaId]) -> Result<VerifyReport, EnumerateError> {
    if n_max > MAX_VERIFY_N {
        return Err(EnumerateError::BeyondBudget {
            param: "n_max",
            value: n_max,
            max: MAX_VERIFY_N,
        });
    }
    let selected: Vec<FormulaId> = FormulaId::ALL
        .into_iter()
        .filter(|id| ids.contains(id))
        .collect();
    let pt = PartitionTable::new(n_max.max(1));
    let mut cache: BTreeMap<usize, Vec<Rec>> = BTreeMap::new();
    let mut rows = Vec::new();
    for id in selected {
        let h = row_h(id);
        for n in 1..=id_cap(id).min(n_max) {
            let ks: Vec<Option<i64>> = if id.takes_k() {
                (k_min(id)..=n as i64).map(Some).collect()
            } else {
                vec![None]
            };
            if ks.is_empty() {
                continue;
            }
            if id != FormulaId::P && !cache.contains_key(&n) {
                cache.insert(n, oracle_recs(n)?);
            }
            for k in ks {
                let formula_value =
                    evaluate(id, &pt, n as i64, k).expect("arguments are within arity and table");
                let oracle_value = if id == FormulaId::P {
                    brute_partitions(n as i64, k.expect("P takes k"))
                } else {
                    oracle_count(id, &cache[&n], k)
                };
                let matched = formula_value == oracle_value;
                rows.push(VerifyRow {
                    id,
                    n: n as i64,
                    k,
                    h,
                    formula_value,
                    oracle_value,
                    matched,
                });
            }
        }
    }
    Ok(VerifyReport { rows })
}
