//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `check` finds no representation or a
//! `verify` sweep fails, 2 on invalid input.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closed_form;
use crate::error::Error;
use crate::gauss::{self, OddPair};
use crate::oracle;
use crate::pair::{CoprimePair, DEFAULT_MAX_PRODUCT};
use crate::verify::{self, CheckKind, SweepOptions};

/// Environment variable that overrides the `a·b` safety cap.
pub const MAX_PRODUCT_ENV: &str = "NUMERUS_MAX_PRODUCT";

const WRAP_COLUMNS: usize = 80;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "numerus", version, about = "Numbers not of the form ax + by")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every nonrepresentable number.
    #[command(allow_negative_numbers = true)]
    Gaps { a: i64, b: i64 },

    /// Find a witness for n = ax + by.
    #[command(allow_negative_numbers = true)]
    Check { a: i64, b: i64, n: i64 },

    /// Print the calculation table for the mirror branch.
    #[command(allow_negative_numbers = true)]
    Table {
        a: i64,
        b: i64,
        /// One row per j with both value sequences.
        #[arg(long)]
        by_row: bool,
        /// Only this j (implies --by-row).
        #[arg(long)]
        row: Option<i64>,
    },

    /// Cross-check every construction over a range of pairs.
    Verify {
        /// Upper limit for both a and b.
        #[arg(long, default_value_t = 40)]
        max: i64,
        #[arg(long)]
        max_a: Option<i64>,
        #[arg(long)]
        max_b: Option<i64>,
        /// Restrict to these checks (repeatable).
        #[arg(long, value_enum)]
        only: Vec<CheckArg>,
        /// Run the floor-sum sweep on odd primes only.
        #[arg(long)]
        odd_primes: bool,
    },

    /// Evaluate the floor-sum identity and lattice count for odd p, q.
    #[command(allow_negative_numbers = true)]
    Gauss {
        p: i64,
        q: i64,
        /// Accept odd coprime composites.
        #[arg(long)]
        experimental: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    ClosedVsSieve,
    Remark,
    GapCount,
    LemmaTail,
    Partition,
    Explicit,
    Phi,
    ASets,
    Combined,
    Gauss,
}

impl From<CheckArg> for CheckKind {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::ClosedVsSieve => CheckKind::ClosedVsSieve,
            CheckArg::Remark => CheckKind::Remark,
            CheckArg::GapCount => CheckKind::GapCount,
            CheckArg::LemmaTail => CheckKind::LemmaTail,
            CheckArg::Partition => CheckKind::Partition,
            CheckArg::Explicit => CheckKind::Explicit,
            CheckArg::Phi => CheckKind::Phi,
            CheckArg::ASets => CheckKind::ASets,
            CheckArg::Combined => CheckKind::Combined,
            CheckArg::Gauss => CheckKind::Gauss,
        }
    }
}

/// Reads the product cap from the environment.
pub fn max_product_from_env() -> Result<i64, String> {
    match std::env::var(MAX_PRODUCT_ENV) {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{MAX_PRODUCT_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_PRODUCT),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, max_product: i64, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, max_product, out) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // A reader that stops early (`numerus gaps 29 23 | head`) is not an error.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn execute(cli: &Cli, max_product: i64, out: &mut dyn Write) -> Result<i32, CliError> {
    let pair = |a, b| CoprimePair::with_max_product(a, b, max_product);
    match cli.command {
        Command::Gaps { a, b } => cmd_gaps(&pair(a, b)?, cli.format, out),
        Command::Check { a, b, n } => cmd_check(&pair(a, b)?, n, cli.format, out),
        Command::Table { a, b, by_row, row } => {
            let p = pair(a, b)?;
            if let Some(j) = row {
                if j < 1 || j > p.half_a() {
                    return Err(CliError::Input(format!(
                        "row {j} out of range 1..={}",
                        p.half_a()
                    )));
                }
            }
            if by_row || row.is_some() {
                cmd_table_by_row(&p, row, cli.format, out)
            } else {
                cmd_table(&p, cli.format, out)
            }
        }
        Command::Verify {
            max,
            max_a,
            max_b,
            ref only,
            odd_primes,
        } => {
            let opts = SweepOptions {
                max_a: max_a.unwrap_or(max),
                max_b: max_b.unwrap_or(max),
                odd_primes_only: odd_primes,
            };
            let largest = opts.max_a.checked_mul(opts.max_b);
            if largest.is_none_or(|p| p > max_product) {
                return Err(CliError::Input(
                    "sweep range exceeds the product cap".into(),
                ));
            }
            let kinds: Vec<CheckKind> = if only.is_empty() {
                CheckKind::ALL.to_vec()
            } else {
                only.iter().map(|&c| c.into()).collect()
            };
            cmd_verify(opts, &kinds, cli.format, out)
        }
        Command::Gauss { p, q, experimental } => {
            let pair = if experimental {
                OddPair::experimental(p, q)?
            } else {
                OddPair::new(p, q)?
            };
            cmd_gauss(&pair, cli.format, out)
        }
    }
}

/// Space-separated tokens, wrapped so no line exceeds 80 columns.
pub fn wrap_tokens<T: ToString>(items: &[T]) -> Vec<String> {
    let mut lines = Vec::new();
    let mut line = String::new();
    for item in items {
        let tok = item.to_string();
        if !line.is_empty() && line.len() + 1 + tok.len() > WRAP_COLUMNS {
            lines.push(std::mem::take(&mut line));
        }
        if !line.is_empty() {
            line.push(' ');
        }
        line.push_str(&tok);
    }
    if !line.is_empty() {
        lines.push(line);
    }
    lines
}

fn opt_text(v: Option<i64>) -> String {
    v.map_or_else(|| "none".to_string(), |n| n.to_string())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct GapsJson<'a> {
    a: i64,
    b: i64,
    bound: i64,
    frobenius: Option<i64>,
    count: usize,
    gaps: &'a [i64],
}

fn cmd_gaps(pair: &CoprimePair, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let gaps = closed_form::gap_set(pair);
    match format {
        Format::Text => {
            for line in wrap_tokens(gaps.gaps()) {
                writeln!(out, "{line}")?;
            }
            writeln!(
                out,
                "count={} frobenius={} bound={}",
                gaps.len(),
                opt_text(pair.frobenius_number()),
                pair.theorem_bound()
            )?;
        }
        Format::Json => write_json(
            out,
            &GapsJson {
                a: pair.a(),
                b: pair.b(),
                bound: pair.theorem_bound(),
                frobenius: pair.frobenius_number(),
                count: gaps.len(),
                gaps: gaps.gaps(),
            },
        )?,
        Format::Csv => {
            writeln!(out, "n")?;
            for g in gaps.iter() {
                writeln!(out, "{g}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct CheckJson {
    a: i64,
    b: i64,
    n: i64,
    representable: bool,
    x: Option<i64>,
    y: Option<i64>,
}

fn cmd_check(
    pair: &CoprimePair,
    n: i64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let witness = oracle::is_representable(pair, n)?;
    match format {
        Format::Text => match witness {
            Some(w) => writeln!(out, "x={} y={}", w.x, w.y)?,
            None => writeln!(out, "nonrepresentable")?,
        },
        Format::Json => write_json(
            out,
            &CheckJson {
                a: pair.a(),
                b: pair.b(),
                n,
                representable: witness.is_some(),
                x: witness.map(|w| w.x),
                y: witness.map(|w| w.y),
            },
        )?,
        Format::Csv => {
            writeln!(out, "n,x,y")?;
            match witness {
                Some(w) => writeln!(out, "{n},{},{}", w.x, w.y)?,
                None => writeln!(out, "{n},,")?,
            }
        }
    }
    Ok(if witness.is_some() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// One line of the per-`(i, j)` calculation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub i: i64,
    pub j: i64,
    pub sum: i64,
    pub diff: i64,
    pub abs_diff: i64,
    pub mirror: i64,
}

/// Rows for `1 ≤ i ≤ ⌊b/2⌋`, `1 ≤ j ≤ ⌊a/2⌋`, `i` outer.
pub fn table_rows(pair: &CoprimePair) -> Vec<TableRow> {
    let bound = pair.theorem_bound();
    let mut rows = Vec::new();
    for i in 1..=pair.half_b() {
        for j in 1..=pair.half_a() {
            let diff = pair.a() * i - pair.b() * j;
            rows.push(TableRow {
                i,
                j,
                sum: pair.combine(i, j),
                diff,
                abs_diff: diff.abs(),
                mirror: bound - diff.abs(),
            });
        }
    }
    rows
}

/// Header for the text table, e.g. `i j 7i+5j 7i-5j |7i-5j| 29-|7i-5j|`.
pub fn table_header(pair: &CoprimePair) -> String {
    let (a, b) = (pair.a(), pair.b());
    format!(
        "i j {a}i+{b}j {a}i-{b}j |{a}i-{b}j| {}-|{a}i-{b}j|",
        pair.theorem_bound()
    )
}

fn cmd_table(pair: &CoprimePair, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = table_rows(pair);
    match format {
        Format::Text => {
            writeln!(out, "{}", table_header(pair))?;
            for r in &rows {
                writeln!(
                    out,
                    "{} {} {} {} {} {}",
                    r.i, r.j, r.sum, r.diff, r.abs_diff, r.mirror
                )?;
            }
        }
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "i,j,sum,diff,abs_diff,mirror")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.i, r.j, r.sum, r.diff, r.abs_diff, r.mirror
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Both value sequences for one `j`, `i` running over `1..=⌊b/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowSeries {
    pub j: i64,
    pub grid: Vec<i64>,
    pub mirror: Vec<i64>,
}

pub fn row_series(pair: &CoprimePair, j: i64) -> RowSeries {
    let bound = pair.theorem_bound();
    let is = 1..=pair.half_b();
    RowSeries {
        j,
        grid: is.clone().map(|i| pair.combine(i, j)).collect(),
        mirror: is
            .map(|i| bound - (pair.a() * i - pair.b() * j).abs())
            .collect(),
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_table_by_row(
    pair: &CoprimePair,
    only: Option<i64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let series: Vec<RowSeries> = match only {
        Some(j) => vec![row_series(pair, j)],
        None => (1..=pair.half_a()).map(|j| row_series(pair, j)).collect(),
    };
    let (a, b) = (pair.a(), pair.b());
    match format {
        Format::Text => {
            writeln!(out, "j | {a}i+{b}j | {}-|{a}i-{b}j|", pair.theorem_bound())?;
            for s in &series {
                writeln!(out, "{} | {} | {}", s.j, join(&s.grid), join(&s.mirror))?;
            }
        }
        Format::Json => write_json(out, &series)?,
        Format::Csv => {
            writeln!(out, "j,grid,mirror")?;
            for s in &series {
                writeln!(out, "{},{},{}", s.j, join(&s.grid), join(&s.mirror))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    opts: SweepOptions,
    kinds: &[CheckKind],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let report = verify::sweep(opts, kinds);
    match format {
        Format::Text => {
            writeln!(out, "verify a<={} b<={}", report.max_a, report.max_b)?;
            writeln!(
                out,
                "{:<16} {:>7} {:>7}  status",
                "check", "pairs", "failed"
            )?;
            for s in &report.summaries {
                let name = if s.check == CheckKind::Gauss && !opts.odd_primes_only {
                    "gauss*"
                } else {
                    s.check.name()
                };
                writeln!(
                    out,
                    "{:<16} {:>7} {:>7}  {}",
                    name,
                    s.pairs,
                    s.failed,
                    if s.passed() { "pass" } else { "FAIL" }
                )?;
            }
            for f in &report.failures {
                writeln!(
                    out,
                    "FAIL {} ({}, {}): {}",
                    f.check.name(),
                    f.a,
                    f.b,
                    f.detail
                )?;
            }
            if kinds.contains(&CheckKind::Gauss) && !opts.odd_primes_only {
                writeln!(out, "* includes odd coprime composites (experimental)")?;
            }
            writeln!(
                out,
                "result: {}",
                if report.passed() { "pass" } else { "FAIL" }
            )?;
        }
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            writeln!(out, "check,pairs,failed,status")?;
            for s in &report.summaries {
                writeln!(
                    out,
                    "{},{},{},{}",
                    s.check.name(),
                    s.pairs,
                    s.failed,
                    if s.passed() { "pass" } else { "fail" }
                )?;
            }
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

#[derive(Debug, Serialize)]
struct GaussJson {
    p: i64,
    q: i64,
    primes: bool,
    identity: gauss::GaussIdentity,
    lattice: gauss::LatticeCount,
}

fn cmd_gauss(pair: &OddPair, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let identity = gauss::gauss_identity(pair);
    let lattice = gauss::lattice_count_check(pair);
    match format {
        Format::Text => {
            writeln!(
                out,
                "lhs={} rhs={} holds={}",
                identity.lhs, identity.rhs, identity.holds
            )?;
            writeln!(
                out,
                "below={} above={} total={} rectangle={} holds={}",
                lattice.below, lattice.above, lattice.total, lattice.rectangle, lattice.holds
            )?;
            if !pair.primality_checked() {
                writeln!(out, "note: composite input, result is an observation")?;
            }
        }
        Format::Json => write_json(
            out,
            &GaussJson {
                p: pair.p(),
                q: pair.q(),
                primes: pair.primality_checked(),
                identity,
                lattice,
            },
        )?,
        Format::Csv => {
            writeln!(out, "p,q,lhs,rhs,holds,below,above")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                pair.p(),
                pair.q(),
                identity.lhs,
                identity.rhs,
                identity.holds,
                lattice.below,
                lattice.above
            )?;
        }
    }
    Ok(if identity.holds && lattice.holds {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}
