//! Command-line front end for the `lattice-census` library.
//!
//! Subcommands:
//!
//! - `formula`: evaluate one counting formula at a single point.
//! - `table`: evaluate a formula over an `(n, k)` grid, as CSV or JSON.
//! - `verify`: cross-check formulas against the enumeration oracles.
//! - `catalog`: print the named basic blocks as poset text or DOT.
//! - `enumerate`: summarize the lattice classes of a given size.
//! - `reduce`: reduce a poset file to its basic block.
//!
//! Given identical arguments, every command produces byte-identical output
//! across runs. Configuration is flags-only; the single environment
//! variable `LATTICE_CENSUS_THREADS` sets the worker-pool size, which
//! affects speed but never output.

#![forbid(unsafe_code)]

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use lattice_census::enumerate::{
    classify, enumerate_adjunct_lattices, enumerate_all_lattices, verify,
};
use lattice_census::formulas::{evaluate, CountTable, FormulaId};
use lattice_census::partitions::PartitionTable;
use lattice_census::reduce::{basic_block, identify_block};
use lattice_census::{catalog, BasicBlockId, ClassKey, Poset};
use std::collections::BTreeMap;

/// Largest `n` accepted by `formula` and `table`.
///
/// The formulas are exact at any size, but the deepest ones cost O(n^5)
/// big-integer work, so the CLI draws an explicit line rather than inviting
/// an open-ended computation by typo.
const MAX_FORMULA_N: i64 = 1000;

/// Largest `k` accepted by `formula` and `table`.
const MAX_FORMULA_K: i64 = 1000;

#[derive(Parser)]
#[command(
    name = "lattice-census",
    version,
    about = "Exact counts of finite lattices classified by reducible elements and nullity",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Output encoding for tabular commands.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Comma-separated values with a header row.
    Csv,
    /// A pretty-printed JSON array of row objects.
    Json,
}

/// Argument to `catalog`: one block or the whole catalog.
#[derive(Clone, Copy)]
enum CatalogTarget {
    All,
    One(BasicBlockId),
}

fn parse_catalog_target(s: &str) -> Result<CatalogTarget, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        Ok(CatalogTarget::All)
    } else {
        BasicBlockId::from_str(s).map(CatalogTarget::One)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a counting formula at one point and print the exact value.
    Formula {
        /// Formula identifier, e.g. `P`, `L2`, `B3.F1`, `L43`, `BB43.15` (case-insensitive).
        #[arg(value_parser = FormulaId::from_str)]
        id: FormulaId,
        /// Number of elements.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=MAX_FORMULA_N))]
        n: i64,
        /// Nullity; required by the k-indexed formulas and rejected by the rest.
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..=MAX_FORMULA_K))]
        k: Option<i64>,
    },
    /// Evaluate a formula over an inclusive (n, k) grid.
    Table {
        /// Formula identifier (case-insensitive).
        #[arg(value_parser = FormulaId::from_str)]
        id: FormulaId,
        /// Smallest n.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=MAX_FORMULA_N))]
        n_min: i64,
        /// Largest n; a range with n-min > n-max is empty, not an error.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=MAX_FORMULA_N))]
        n_max: i64,
        /// Smallest k; required by the k-indexed formulas and rejected by the rest.
        #[arg(long, requires = "k_max", value_parser = clap::value_parser!(i64).range(0..=MAX_FORMULA_K))]
        k_min: Option<i64>,
        /// Largest k; a range with k-min > k-max is empty, not an error.
        #[arg(long, requires = "k_min", value_parser = clap::value_parser!(i64).range(0..=MAX_FORMULA_K))]
        k_max: Option<i64>,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Cross-check formulas against the enumeration oracles.
    ///
    /// Prints one row per (formula, n, k) grid cell with both the formula
    /// value and the oracle's class count. Exits 0 exactly when every row
    /// matches; a request beyond the oracle budget is refused up front.
    Verify {
        /// Largest lattice size to enumerate (the oracle budget caps this at 10).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Comma-separated formula identifiers to check (default: all of them).
        #[arg(long, value_delimiter = ',', value_parser = FormulaId::from_str)]
        classes: Vec<FormulaId>,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print a catalog block (or the whole catalog) with a classification header.
    Catalog {
        /// Block identifier `F1`..`F7` or `B1`..`B22`, or `all`.
        #[arg(value_parser = parse_catalog_target)]
        id: CatalogTarget,
        /// Emit Graphviz DOT instead of poset text.
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate the lattices on n elements and summarize their classes.
    Enumerate {
        /// Number of elements (the exhaustive oracle budget caps this at 9).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Use the adjunct-of-chains generator (dismantlable lattices of
        /// bounded nullity) instead of the exhaustive search.
        #[arg(long)]
        adjunct: bool,
        /// Nullity budget for the adjunct generator (at most 4).
        #[arg(long, requires = "adjunct", default_value_t = 3)]
        k_max: u64,
    },
    /// Reduce the lattice in a poset text file to its basic block.
    Reduce {
        /// Input file: first line the element count, then one `x y` line per
        /// cover; `#` comments and blank lines are ignored.
        #[arg(long)]
        input: PathBuf,
        /// Emit Graphviz DOT instead of poset text.
        #[arg(long)]
        dot: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Applies `LATTICE_CENSUS_THREADS` to the global worker pool, if set.
fn init_threads() -> Result<()> {
    let Ok(raw) = std::env::var("LATTICE_CENSUS_THREADS") else {
        return Ok(());
    };
    let threads: usize =
        raw.trim().parse().ok().filter(|&t| t >= 1).ok_or_else(|| {
            anyhow!("LATTICE_CENSUS_THREADS must be a positive integer, got {raw:?}")
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("initializing the worker pool")?;
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Formula { id, n, k } => cmd_formula(id, n, k),
        Command::Table {
            id,
            n_min,
            n_max,
            k_min,
            k_max,
            format,
        } => cmd_table(id, (n_min, n_max), k_min.zip(k_max), format),
        Command::Verify {
            n_max,
            classes,
            format,
        } => cmd_verify(n_max as usize, &classes, format),
        Command::Catalog { id, dot } => cmd_catalog(id, dot),
        Command::Enumerate { n, adjunct, k_max } => {
            cmd_enumerate(n as usize, adjunct, k_max as usize)
        }
        Command::Reduce { input, dot } => cmd_reduce(&input, dot),
    }
}

/// Rejects a `--k` that disagrees with the formula's arity, with usage text.
fn check_arity(id: FormulaId, has_k: bool) {
    let msg = if id.takes_k() && !has_k {
        format!("formula {id} is indexed by nullity and requires --k")
    } else if !id.takes_k() && has_k {
        format!("formula {id} is indexed by n alone and does not take --k")
    } else {
        return;
    };
    let mut cmd = Cli::command();
    cmd.error(ErrorKind::InvalidValue, msg).exit()
}

fn cmd_formula(id: FormulaId, n: i64, k: Option<i64>) -> Result<ExitCode> {
    check_arity(id, k.is_some());
    let pt = PartitionTable::new(n as usize);
    let value = evaluate(id, &pt, n, k).expect("arity checked and table sized to n");
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(
    id: FormulaId,
    n_range: (i64, i64),
    k_range: Option<(i64, i64)>,
    format: Format,
) -> Result<ExitCode> {
    check_arity(id, k_range.is_some());
    let pt = PartitionTable::new(n_range.1.max(1) as usize);
    let table =
        CountTable::build(id, &pt, n_range, k_range).expect("arity checked and table sized");
    match format {
        Format::Csv => print!("{}", table.to_csv()),
        Format::Json => print!("{}", table.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(n_max: usize, classes: &[FormulaId], format: Format) -> Result<ExitCode> {
    let ids: Vec<FormulaId> = if classes.is_empty() {
        FormulaId::ALL.to_vec()
    } else {
        classes.to_vec()
    };
    let report = verify(n_max, &ids)?;
    match format {
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => print!("{}", report.to_json()),
    }
    let mismatches = report.rows.iter().filter(|r| !r.matched).count();
    eprintln!(
        "{} rows checked, {} mismatches",
        report.rows.len(),
        mismatches
    );
    if report.all_match() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

/// Renders one catalog block with its classification header.
fn render_block(b: BasicBlockId, dot: bool) -> String {
    let p = catalog(b);
    let key = classify(&p).expect("catalog blocks are lattices");
    let h = key.h.expect("catalog blocks have reducible elements");
    let header = format!(
        "{}: n={} r={} k={} h={}",
        b.as_str(),
        key.n,
        key.r,
        key.k,
        h
    );
    if dot {
        format!("// {header}\n{}", p.to_dot(b.as_str()))
    } else {
        format!("# {header}\n{}", p.to_text())
    }
}

fn cmd_catalog(id: CatalogTarget, dot: bool) -> Result<ExitCode> {
    match id {
        CatalogTarget::One(b) => print!("{}", render_block(b, dot)),
        CatalogTarget::All => {
            for (i, b) in BasicBlockId::ALL.into_iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{}", render_block(b, dot));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(n: usize, adjunct: bool, k_max: usize) -> Result<ExitCode> {
    let reps = if adjunct {
        enumerate_adjunct_lattices(n, k_max)?
    } else {
        enumerate_all_lattices(n)?
    };
    let mut counts: BTreeMap<ClassKey, usize> = BTreeMap::new();
    for p in reps.values() {
        let key = classify(p).expect("oracles produce lattices");
        *counts.entry(key).or_default() += 1;
    }
    for (key, count) in &counts {
        println!("{key}: {count}");
    }
    println!("total: {}", reps.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(input: &PathBuf, dot: bool) -> Result<ExitCode> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let p = Poset::from_text(&text).map_err(|e| anyhow!("parsing {}: {e}", input.display()))?;
    if !p.is_lattice() {
        bail!("the poset in {} is not a lattice", input.display());
    }
    let block = basic_block(&p);
    let key = classify(&block).expect("the basic block of a lattice is a lattice");
    let ident = identify_block(&p).map_or("none", BasicBlockId::as_str);
    let header = format!("basic block: {key}; catalog={ident}");
    if dot {
        print!("// {header}\n{}", block.to_dot("basic_block"));
    } else {
        print!("# {header}\n{}", block.to_text());
    }
    Ok(ExitCode::SUCCESS)
}
