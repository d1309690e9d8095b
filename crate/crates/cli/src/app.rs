//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hodgerec_core::conjectures::{scan, Finding, Status};
use hodgerec_core::polybasis::{degree_report, extract};
use hodgerec_core::{Engine, IntegralKey, Kind, MemoStore, MultiIndex};
use serde::Serialize;

use crate::cache;
use crate::error::CliError;
use crate::output::{self, ValueRow};
use crate::suites::{self, Params, Suite};

pub const CACHE_ENV: &str = "HODGEREC_CACHE";

#[derive(Debug, Parser)]
#[command(name = "hodgerec", version, about = "Exact one-point Z2 Hurwitz-Hodge integrals on the hyperelliptic locus")]
pub struct Cli {
    /// JSON-lines memo file, loaded before and saved after the command.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    /// Print memo size and hit rate to stderr.
    #[arg(long, global = true)]
    pub stats: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one integral.
    Compute {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        g: u32,
        /// Comma-separated λ indices in any order, or "-" for none.
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        #[arg(long)]
        json: bool,
    },
    /// All nonzero values of one genus.
    Table {
        #[arg(long)]
        g: u32,
        /// Defaults to 2g - 1.
        #[arg(long)]
        weight_max: Option<u32>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Binomial-basis coefficients of a normalized integral as a polynomial in g.
    Poly {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 on any failed check.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        g_max: Option<u32>,
        #[arg(long)]
        weight_max: Option<u32>,
        #[arg(long)]
        t_order: Option<u32>,
        /// Largest n for the identity suite.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Scan the conjectured properties; exits 1 on any violation.
    Conjectures {
        #[arg(long)]
        g_max: u32,
        #[arg(long)]
        weight_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the embedded reference tables.
    Golden {
        #[arg(long, value_enum, default_value_t = GoldenTable::Values)]
        table: GoldenTable,
        #[command(flatten)]
        sink: Sink,
    },
}

#[derive(Debug, Args)]
pub struct Sink {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "D")]
    Twisted,
    #[value(name = "d")]
    Untwisted,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Twisted => Kind::TwistedD,
            KindArg::Untwisted => Kind::UntwistedD,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GoldenTable {
    Values,
    Polynomials,
}

fn parse_index(text: &str) -> Result<MultiIndex, CliError> {
    text.parse().map_err(|e| CliError::Usage(format!("invalid --index {text:?}: {e}")))
}

/// Runs `cli`, writing command output to `stdout`. Returns the process exit status.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let mut memo = MemoStore::new();
    if let Some(path) = &cli.cache {
        if path.exists() {
            cache::load(path, &mut memo)?;
        }
    }
    let mut engine = Engine::with_memo(memo);
    let status = dispatch(cli.command, &mut engine, stdout)?;
    if cli.stats {
        let m = engine.memo();
        eprintln!(
            "memo: {} entries, {} hits, {} misses, hit rate {:.4}",
            m.len(),
            m.hits(),
            m.misses(),
            m.hit_rate()
        );
    }
    if let Some(path) = &cli.cache {
        cache::save(path, engine.memo())?;
    }
    Ok(status)
}

fn dispatch(command: Command, engine: &mut Engine, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("cannot write output: {e}"));
    match command {
        Command::Compute { kind, g, index, json } => {
            let key = IntegralKey::new(kind.into(), g, parse_index(&index)?);
            let value = engine.eval(&key);
            let row = ValueRow::new(&key, &value);
            if json {
                output::write_json(&row, stdout)?;
            } else {
                writeln!(stdout, "{value}").map_err(io)?;
                writeln!(stdout, "normalized: {}", row.normalized_integer).map_err(io)?;
            }
            Ok(0)
        }
        Command::Table { g, weight_max, sink } => {
            let weight_max = weight_max.unwrap_or((2 * g).saturating_sub(1));
            let rows = output::table_rows(engine, g, weight_max);
            emit(&sink, stdout, |w, format| match format {
                Format::Csv => output::write_csv(&rows, w),
                Format::Json => output::write_json(&rows, w),
            })?;
            Ok(0)
        }
        Command::Poly { kind, index, json } => {
            let index = parse_index(&index)?;
            let p = extract(engine, kind.into(), &index)?;
            let report = degree_report(&p)?;
            let view = PolyView {
                kind: p.kind.symbol().to_string(),
                index: index.to_string(),
                scale_exp: p.scale_exp,
                first_nonzero: p.first_nonzero,
                coefficients: p.coeffs.iter().map(ToString::to_string).collect(),
                observed_degree: report.observed,
                degree_bound: report.bound,
                degree_is_twice_weight: report.matches_conjecture,
            };
            if json {
                output::write_json(&view, stdout)?;
            } else {
                writeln!(stdout, "2^{} {}[{}](g) =", p.scale_exp, p.kind, index).map_err(io)?;
                for (k, c) in p.coeffs.iter().enumerate().filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign) {
                    writeln!(stdout, "  {c} C(g,{k})").map_err(io)?;
                }
                writeln!(
                    stdout,
                    "degree {} (bound {}, 2|i| = {})",
                    report.observed.map_or_else(|| "-".to_string(), |d| d.to_string()),
                    report.bound,
                    2 * index.weight()
                )
                .map_err(io)?;
            }
            Ok(0)
        }
        Command::Verify { suite, g_max, weight_max, t_order, n_max } => {
            let report = suites::run(engine, suite, Params { g_max, weight_max, t_order, n_max })?;
            output::write_json(&report, stdout)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Conjectures { g_max, weight_max, out } => {
            if g_max == 0 {
                return Err(CliError::Usage("--g-max must be at least 1".into()));
            }
            let findings = scan(engine, g_max, weight_max)?;
            let report = ConjectureReport::new(g_max, weight_max, &findings);
            let violated = report.violated;
            let sink = Sink { format: Format::Json, out };
            emit(&sink, stdout, |w, _| output::write_json(&report, w))?;
            Ok(if violated > 0 { 1 } else { 0 })
        }
        Command::Golden { table, sink } => {
            emit(&sink, stdout, |w, format| match (table, format) {
                (GoldenTable::Values, Format::Csv) => output::write_csv(&output::golden_value_rows(), w),
                (GoldenTable::Values, Format::Json) => output::write_json(&output::golden_value_rows(), w),
                (GoldenTable::Polynomials, Format::Csv) => output::write_csv(&output::golden_polynomial_rows(), w),
                (GoldenTable::Polynomials, Format::Json) => output::write_json(&output::golden_polynomial_rows(), w),
            })?;
            Ok(0)
        }
    }
}

/// Writes to `--out` when given, otherwise to `stdout`.
fn emit(
    sink: &Sink,
    stdout: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write, Format) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match &sink.out {
        None => write(stdout, sink.format),
        Some(path) => {
            let mut file = create(path)?;
            write(&mut file, sink.format)
        }
    }
}

fn create(path: &Path) -> Result<fs::File, CliError> {
    fs::File::create(path).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct PolyView {
    kind: String,
    index: String,
    scale_exp: u32,
    first_nonzero: Option<u32>,
    coefficients: Vec<String>,
    observed_degree: Option<usize>,
    degree_bound: usize,
    degree_is_twice_weight: bool,
}

#[derive(Serialize)]
pub struct ConjectureReport {
    pub g_max: u32,
    pub weight_max: u32,
    pub findings: usize,
    pub violated: usize,
    pub vacuous: usize,
    pub results: Vec<FindingView>,
}

#[derive(Serialize)]
pub struct FindingView {
    pub id: String,
    pub kind: Option<String>,
    pub index: String,
    pub g: Option<u32>,
    pub status: String,
    pub witnesses: Vec<WitnessView>,
}

#[derive(Serialize)]
pub struct WitnessView {
    pub label: String,
    pub value: String,
}

impl ConjectureReport {
    pub fn new(g_max: u32, weight_max: u32, findings: &[Finding]) -> Self {
        let count = |s: Status| findings.iter().filter(|f| f.status == s).count();
        ConjectureReport {
            g_max,
            weight_max,
            findings: findings.len(),
            violated: count(Status::Violated),
            vacuous: count(Status::Vacuous),
            results: findings
                .iter()
                .map(|f| FindingView {
                    id: f.id.name().to_string(),
                    kind: f.kind.map(|k| k.symbol().to_string()),
                    index: f.index.to_string(),
                    g: f.genus,
                    status: f.status.name().to_string(),
                    witnesses: f
                        .witnesses
                        .iter()
                        .map(|w| WitnessView { label: w.label.clone(), value: w.value.to_string() })
                        .collect(),
                })
                .collect(),
        }
    }
}
