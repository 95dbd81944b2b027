//! Command-line front end. All machine output is newline-delimited JSON.
//!
//! Exit codes: 0 success, 1 invalid structure, 2 unreadable or malformed
//! input, 3 theorem discrepancy, 64 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::analysis::Analysis;
use crate::enumerate::{self, GenerationConfig, OrderMode};
use crate::error::Error;
use crate::harness::{self, SearchOutcome, SuiteConfig, TheoremId, Verdict};
use crate::predicates::{self, Predicate};
use crate::relations::{GreenKind, Partition, RegularityProfile};
use crate::structure::{OrderedSemigroup, StructureJson, SubsetMask, ValidationReport};
use crate::witness::PredicateResult;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

pub const WORKERS_ENV: &str = "ORDSGP_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "ordsgp", version, about = "Finite ordered semigroup toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure file.
    Validate { file: PathBuf },
    /// Idempotents, Green's relations, regularity, predicates and suites.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a catalog of ordered semigroups of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "all")]
        orders: String,
        #[arg(long)]
        up_to_iso: bool,
        /// Draw random structures from this seed (needs --limit).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run theorem suites over every structure up to an order.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        fail_fast: bool,
        /// Use this order mode at every order instead of the default plan
        /// (all orders up to 3; discrete plus samples at 4).
        #[arg(long)]
        orders: Option<String>,
        #[arg(long, default_value_t = harness::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Find the first structure satisfying and violating given predicates.
    Search {
        #[arg(long, value_delimiter = ',')]
        satisfy: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        violate: Vec<String>,
        #[arg(long)]
        max_order: usize,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn line<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let text = serde_json::to_string(value).expect("reports serialize");
        writeln!(self.out, "{text}")
    }

    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) => EXIT_INVALID,
        e if e.is_parse_error() => EXIT_PARSE,
        _ => EXIT_USAGE,
    }
}

fn workers_from_env() -> Result<Option<usize>, Error> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&w| w > 0)
            .map(Some)
            .ok_or_else(|| Error::Config(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
        _ => Ok(None),
    }
}

fn load(path: &Path) -> Result<OrderedSemigroup, (i32, String)> {
    let text = fs::read_to_string(path).map_err(|e| (EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    OrderedSemigroup::from_json_str(&text).map_err(|e| (error_code(&e), e.to_string()))
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink = if e.use_stderr() { &mut io.err } else { &mut io.out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Validate { file } => cmd_validate(&mut io, &file),
        Command::Analyze { file, json } => cmd_analyze(&mut io, &file, json),
        Command::Enumerate { order, orders, up_to_iso, seed, limit, out } => {
            cmd_enumerate(&mut io, order, &orders, up_to_iso, seed, limit, out.as_deref())
        }
        Command::Verify { theorem, max_order, fail_fast, orders, samples, seed } => {
            cmd_verify(&mut io, &theorem, max_order, fail_fast, orders.as_deref(), samples, seed)
        }
        Command::Search { satisfy, violate, max_order } => cmd_search(&mut io, &satisfy, &violate, max_order),
    };
    match result {
        Ok(code) => code,
        Err(e) => io.fail(EXIT_PARSE, format!("i/o failure: {e}")),
    }
}

fn cmd_validate(io: &mut Io, file: &Path) -> io::Result<i32> {
    match load(file) {
        Ok(_) => {
            io.line(&ValidationReport { ok: true, violations: Vec::new() })?;
            Ok(EXIT_OK)
        }
        Err((EXIT_INVALID, _)) => {
            // reload for the report itself
            let text = fs::read_to_string(file)?;
            match OrderedSemigroup::from_json_str(&text) {
                Err(Error::Invalid(report)) => {
                    io.line(&report)?;
                    write!(io.err, "{report}")?;
                }
                _ => unreachable!("load reported an invalid structure"),
            }
            Ok(EXIT_INVALID)
        }
        Err((code, msg)) => Ok(io.fail(code, msg)),
    }
}

#[derive(Serialize)]
struct SuiteLine {
    theorem: TheoremId,
    verdict: Verdict,
    conditions: Vec<bool>,
}

#[derive(Serialize)]
struct Profile {
    structure: StructureJson,
    key: String,
    idempotents: SubsetMask,
    green: BTreeMap<&'static str, Partition>,
    starred: BTreeMap<&'static str, Partition>,
    regularity: RegularityProfile,
    predicates: BTreeMap<&'static str, PredicateResult>,
    suites: Vec<SuiteLine>,
}

fn kind_name(k: GreenKind, starred: bool) -> &'static str {
    match (k, starred) {
        (GreenKind::L, false) => "L",
        (GreenKind::R, false) => "R",
        (GreenKind::J, false) => "J",
        (GreenKind::H, false) => "H",
        (GreenKind::L, true) => "L*",
        (GreenKind::R, true) => "R*",
        (GreenKind::J, true) => "J*",
        (GreenKind::H, true) => "H*",
    }
}

fn profile(s: &OrderedSemigroup) -> Result<Profile, Error> {
    let an = Analysis::new(s);
    let mut preds = BTreeMap::new();
    for p in Predicate::all() {
        preds.insert(p.name(), predicates::evaluate(&an, p)?);
    }
    let suites = TheoremId::ALL
        .iter()
        .map(|&id| {
            harness::verify_with(&an, id).map(|r| SuiteLine { theorem: id, verdict: r.verdict, conditions: r.condition_values() })
        })
        .collect::<Result<_, _>>()?;
    Ok(Profile {
        structure: s.to_json(),
        key: s.key(),
        idempotents: an.idempotents(),
        green: GreenKind::ALL.iter().map(|&k| (kind_name(k, false), an.green(k).clone())).collect(),
        starred: GreenKind::ALL.iter().map(|&k| (kind_name(k, true), an.starred(k).clone())).collect(),
        regularity: an.regularity().clone(),
        predicates: preds,
        suites,
    })
}

fn cmd_analyze(io: &mut Io, file: &Path, json: bool) -> io::Result<i32> {
    let s = match load(file) {
        Ok(s) => s,
        Err((code, msg)) => return Ok(io.fail(code, msg)),
    };
    let p = match profile(&s) {
        Ok(p) => p,
        Err(e) => return Ok(io.fail(error_code(&e), e)),
    };
    if json {
        io.line(&p)?;
        return Ok(EXIT_OK);
    }
    let mark = |b: bool| if b { "yes" } else { "no" };
    let o = &mut io.out;
    writeln!(o, "{s}")?;
    writeln!(o, "key: {}", p.key)?;
    writeln!(o, "ordered idempotents: {}", p.idempotents)?;
    for (k, part) in p.green.iter().chain(&p.starred) {
        writeln!(o, "{k:<3} {part}")?;
    }
    writeln!(o, "regularity:")?;
    for e in &p.regularity.elements {
        writeln!(
            o,
            "  {}: regular {}, completely regular {}, intra-regular {}, first regular power {}",
            e.element,
            mark(e.regular),
            mark(e.completely_regular),
            mark(e.intra_regular),
            e.smallest_regular_power
        )?;
    }
    writeln!(o, "predicates:")?;
    for (name, r) in &p.predicates {
        let detail = match &r.certificate {
            Some(crate::witness::Certificate::NilExtension(w)) => format!(" (kernel {})", w.kernel),
            Some(crate::witness::Certificate::Subsemigroup(w)) => format!(" (subsemigroup {})", w.subsemigroup),
            _ => match &r.counterexample {
                Some(c) if !r.holds && !c.is_empty() => format!(" (fails at {c:?})"),
                _ => String::new(),
            },
        };
        writeln!(o, "  {name:<26} {}{detail}", mark(r.holds))?;
    }
    writeln!(o, "suites:")?;
    for line in &p.suites {
        let bits: String = line.conditions.iter().map(|&c| if c { '1' } else { '0' }).collect();
        writeln!(o, "  {:<16} {:<19} [{bits}]", line.theorem.id(), line.verdict.as_str())?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Manifest<'a> {
    config: &'a GenerationConfig,
    count: usize,
    discrete: usize,
    catalog: Option<String>,
}

fn cmd_enumerate(
    io: &mut Io,
    order: usize,
    orders: &str,
    up_to_iso: bool,
    seed: Option<u64>,
    limit: Option<usize>,
    out: Option<&Path>,
) -> io::Result<i32> {
    let orders: OrderMode = match orders.parse() {
        Ok(m) => m,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let config = GenerationConfig { order, up_to_iso, orders, seed, limit };
    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let generated = match rayon::ThreadPoolBuilder::new().num_threads(workers.unwrap_or(0)).build() {
        Ok(pool) => pool.install(|| enumerate::enumerate_ordered_semigroups(&config)),
        Err(e) => Err(Error::Config(e.to_string())),
    };
    let all = match generated {
        Ok(v) => v,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let mut catalog = String::new();
    for s in &all {
        catalog += &s.to_json_string();
        catalog.push('\n');
    }
    let manifest = Manifest {
        config: &config,
        count: all.len(),
        discrete: all.iter().filter(|s| s.is_discrete()).count(),
        catalog: out.map(|p| p.display().to_string()),
    };
    match out {
        Some(path) => {
            fs::write(path, catalog)?;
            let mut manifest_path = path.as_os_str().to_owned();
            manifest_path.push(".manifest.json");
            fs::write(&manifest_path, serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n")?;
            io.line(&manifest)?;
        }
        None => {
            io.out.write_all(catalog.as_bytes())?;
            writeln!(io.err, "{}", serde_json::to_string(&manifest).expect("manifest serializes"))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    io: &mut Io,
    theorem: &str,
    max_order: usize,
    fail_fast: bool,
    orders: Option<&str>,
    samples: usize,
    seed: u64,
) -> io::Result<i32> {
    let ids = match TheoremId::parse_list(theorem) {
        Ok(ids) => ids,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    if max_order == 0 || max_order > enumerate::EXHAUSTIVE_MAX {
        return Ok(io.fail(
            EXIT_USAGE,
            Error::SizeCap { what: "theorem verification", order: max_order, max: enumerate::EXHAUSTIVE_MAX },
        ));
    }
    let mut config = match orders {
        Some(mode) => match mode.parse::<OrderMode>() {
            Ok(m) => SuiteConfig::exhaustive(ids, max_order, m),
            Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
        },
        None => SuiteConfig::standard(ids, max_order, samples, seed),
    };
    config.fail_fast = fail_fast;
    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let report = match harness::run_suite(&config, workers) {
        Ok(r) => r,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    io.line(&report)?;
    write!(io.err, "{}", report.table())?;
    writeln!(io.err, "runtime: {:.2}s", report.runtime.as_secs_f64())?;
    if report.discrepancy_count() > 0 {
        for d in &report.discrepancies {
            io.line(&d.structure)?;
            writeln!(io.err, "DISCREPANCY in {}: {}", d.report.theorem, d.report.summary())?;
        }
        return Ok(EXIT_DISCREPANCY);
    }
    Ok(EXIT_OK)
}

fn parse_predicates(names: &[String]) -> Result<Vec<Predicate>, Error> {
    names.iter().filter(|n| !n.trim().is_empty()).map(|n| n.parse()).collect()
}

fn cmd_search(io: &mut Io, satisfy: &[String], violate: &[String], max_order: usize) -> io::Result<i32> {
    let parsed = parse_predicates(satisfy).and_then(|s| Ok((s, parse_predicates(violate)?)));
    let (sat, vio) = match parsed {
        Ok(p) => p,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(e) => return Ok(io.fail(EXIT_USAGE, e)),
    };
    let outcome = match rayon::ThreadPoolBuilder::new().num_threads(workers.unwrap_or(0)).build() {
        Ok(pool) => pool.install(|| harness::search_model(&sat, &vio, max_order)),
        Err(e) => Err(Error::Config(e.to_string())),
    };
    match outcome {
        Ok(o) => {
            io.line(&o)?;
            if let SearchOutcome::Exhausted { examined, .. } = o {
                writeln!(io.err, "no model among {examined} structures")?;
            }
            Ok(EXIT_OK)
        }
        Err(e) => Ok(io.fail(EXIT_USAGE, e)),
    }
}
