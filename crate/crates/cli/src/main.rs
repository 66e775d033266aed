//! `spex1p`: constructions, spectra, 1-planarity checks, brute-force SPEX
//! sets, candidate duels, inequality audits and rewiring replays.
//!
//! Exit codes: 0 success, 1 a check failed, 2 undecided within budget,
//! 3 usage or input error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spex1p_core::constructions::{census, ConstructionError, Family, FamilySpec};
use spex1p_core::extremal::{
    candidate_duel, duel_csv, inequality_audit, inequality_names, inequality_scan, rewiring_replay,
    spex_bruteforce, ExtremalError, InequalityAudit, DUEL_CSV_HEADER,
};
use spex1p_core::graph::{contains_k37, degeneracy, is_kt_free};
use spex1p_core::planarity::DEFAULT_BUDGET;
use spex1p_core::spectral::DEFAULT_TOL;
use spex1p_core::{
    graph6_decode, graph6_encode, is_one_planar, is_planar, spectral_radius, verify_certificate,
    Graph, OnePlanarVerdict, SpectralError,
};
use thiserror::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "spex1p",
    version,
    about = "Spectral extremal problems for 1-planar graphs"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Eigen-residual tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Node budget for each 1-planarity search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family member: graph6, certificate and census.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        variant: Option<usize>,
    },
    /// Spectral radius and Perron vector of each graph6 line.
    Spectral {
        /// graph6 file; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Per-graph verdicts; the exit code summarises them.
    Check {
        #[arg(long, value_enum)]
        which: Which,
        /// Clique size for `k-free`.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Exhaustive SPEX set of K_t-free 1-planar graphs on n vertices.
    Spex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Spectral radii of the extremal candidates over a range of orders.
    Duel {
        #[arg(long)]
        t: usize,
        /// `a:b[:step]`, inclusive.
        #[arg(long)]
        range: RangeSpec,
    },
    /// Evaluate the named spectral inequalities at λ = sqrt(2n - 4).
    Audit {
        /// Inequality name; every inequality when absent.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, conflicts_with = "range")]
        n: Option<u64>,
        #[arg(long)]
        range: Option<RangeSpec>,
        /// Report the smallest n from which the inequality holds.
        #[arg(long, conflicts_with_all = ["n", "range"])]
        scan: bool,
    },
    /// Replay a named edge rewiring and compare spectral radii.
    Replay {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Planar,
    OnePlanar,
    KFree,
    Filters,
}

#[derive(Clone, Debug)]
struct RangeSpec {
    start: u64,
    end: u64,
    step: u64,
}

impl RangeSpec {
    fn values(&self) -> Vec<u64> {
        (self.start..=self.end)
            .step_by(self.step as usize)
            .collect()
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad range `{s}`: {e}"))
        };
        let (start, end, step) = match parts.as_slice() {
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(format!("range must be a:b or a:b:step, got `{s}`")),
        };
        if step == 0 || start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(RangeSpec { start, end, step })
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {msg}")]
    Input { line: usize, msg: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Spectral(SpectralError::NotConverged { .. })
            | CliError::Extremal(ExtremalError::Spectral(SpectralError::NotConverged { .. })) => {
                EXIT_UNKNOWN
            }
            _ => EXIT_USAGE,
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(
            "output format not supported by this command".into(),
        ))
    }
}

fn read_graphs(input: &Option<PathBuf>) -> Result<Vec<(usize, Graph)>, CliError> {
    let mut text = String::new();
    match input {
        Some(p) => text = std::fs::read_to_string(p)?,
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line).map_err(|e| CliError::Input {
            line: i + 1,
            msg: e.to_string(),
        })?;
        out.push((i + 1, g));
    }
    Ok(out)
}

fn cmd_construct(
    c: &Common,
    family: Family,
    n: usize,
    t: Option<usize>,
    variant: Option<usize>,
) -> Result<Output, CliError> {
    let spec = FamilySpec {
        family,
        n,
        variant,
        t,
    };
    let built = spec.build()?;
    let g6 = graph6_encode(&built.graph);
    match pick(c.format, Format::Json, &[Format::Json, Format::Graph6])? {
        Format::Graph6 => Ok(Output::ok(format!("{g6}\n"))),
        _ => {
            let valid = built
                .certificate
                .as_ref()
                .map(|cert| verify_certificate(&built.graph, cert));
            Ok(Output::ok(pretty(&json!({
                "schema": "spex1p.construct/1",
                "spec": spec,
                "graph6": g6,
                "certificate": built.certificate,
                "certificate_valid": valid,
                "census": census(&built.graph),
            }))))
        }
    }
}

fn cmd_spectral(c: &Common, input: &Option<PathBuf>) -> Result<Output, CliError> {
    let graphs = read_graphs(input)?;
    let format = pick(c.format, Format::Json, &[Format::Json, Format::Csv])?;
    let mut rows = Vec::new();
    for (line, g) in &graphs {
        let r = spectral_radius(g, c.tol)?;
        rows.push((*line, g, r));
    }
    if format == Format::Csv {
        let mut s = String::from("line,n,e,lambda,residual,iterations\n");
        for (line, g, r) in &rows {
            s.push_str(&format!(
                "{line},{},{},{:.15e},{:.3e},{}\n",
                g.n(),
                g.edge_count(),
                r.lambda,
                r.residual,
                r.iterations
            ));
        }
        return Ok(Output::ok(s));
    }
    let results: Vec<Value> = rows
        .iter()
        .map(|(line, g, r)| {
            json!({
                "line": line,
                "graph6": graph6_encode(g),
                "n": g.n(),
                "e": g.edge_count(),
                "lambda": r.lambda,
                "residual": r.residual,
                "iterations": r.iterations,
                "perron": r.perron,
            })
        })
        .collect();
    Ok(Output::ok(pretty(&json!({
        "schema": "spex1p.spectral/1",
        "tol": c.tol,
        "results": results,
    }))))
}

fn cmd_check(
    c: &Common,
    which: Which,
    t: Option<usize>,
    input: &Option<PathBuf>,
) -> Result<Output, CliError> {
    pick(c.format, Format::Json, &[Format::Json])?;
    if which == Which::KFree && t.is_none_or(|t| t < 2) {
        return Err(CliError::Usage("k-free needs --t of at least 2".into()));
    }
    let graphs = read_graphs(input)?;
    let mut failed = false;
    let mut unknown = false;
    let mut verdicts = Vec::new();
    for (line, g) in &graphs {
        let (pass, detail): (Option<bool>, Value) = match which {
            Which::Planar => (Some(is_planar(g)), Value::Null),
            Which::KFree => {
                let t = t.expect("checked above");
                (Some(is_kt_free(g, t)), json!({ "t": t }))
            }
            Which::OnePlanar => {
                let v = is_one_planar(g, c.budget);
                let pass = match v {
                    OnePlanarVerdict::Yes { .. } => Some(true),
                    OnePlanarVerdict::No { .. } => Some(false),
                    OnePlanarVerdict::Unknown { .. } => None,
                };
                (pass, serde_json::to_value(&v).expect("verdicts serialize"))
            }
            Which::Filters => {
                let n = g.n();
                let edge_bound = n < 3 || g.edge_count() <= 4 * n - 8;
                let degen = degeneracy(g).value;
                let k37 = contains_k37(g);
                (
                    Some(edge_bound && degen <= 7 && !k37),
                    json!({ "edge_bound": edge_bound, "degeneracy": degen, "k37": k37 }),
                )
            }
        };
        match pass {
            Some(false) => failed = true,
            None => unknown = true,
            Some(true) => {}
        }
        verdicts.push(json!({
            "line": line,
            "graph6": graph6_encode(g),
            "n": g.n(),
            "e": g.edge_count(),
            "status": match pass { Some(true) => "pass", Some(false) => "fail", None => "unknown" },
            "detail": detail,
        }));
    }
    let which_name = which
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let text = pretty(&json!({
        "schema": "spex1p.check/1",
        "which": which_name,
        "verdicts": verdicts,
    }));
    let code = if failed {
        EXIT_FAIL
    } else if unknown {
        EXIT_UNKNOWN
    } else {
        0
    };
    Ok(Output { text, code })
}

fn cmd_spex(c: &Common, n: usize, t: usize) -> Result<Output, CliError> {
    let format = pick(c.format, Format::Csv, &[Format::Csv, Format::Json])?;
    let r = spex_bruteforce(n, t, c.tol, c.budget)?;
    let code = if r.complete { 0 } else { EXIT_UNKNOWN };
    let text = if format == Format::Json {
        pretty(&json!({ "schema": "spex1p.spex/1", "report": r }))
    } else {
        let winner = match r.maximizers.as_slice() {
            [only] => only.graph6.clone(),
            _ => "tie".to_string(),
        };
        let mut s = format!("{DUEL_CSV_HEADER}\n");
        for m in &r.maximizers {
            s.push_str(&format!(
                "{n},{t},{},{:.15e},,{winner},{}\n",
                m.graph6, m.lambda, r.complete
            ));
        }
        s
    };
    Ok(Output { text, code })
}

fn cmd_duel(c: &Common, t: usize, range: &RangeSpec) -> Result<Output, CliError> {
    let format = pick(c.format, Format::Csv, &[Format::Csv, Format::Json])?;
    let ns: Vec<usize> = range.values().into_iter().map(|n| n as usize).collect();
    let rows = candidate_duel(t, &ns, c.tol)?;
    Ok(Output::ok(if format == Format::Json {
        pretty(&json!({ "schema": "spex1p.duel/1", "tol": c.tol, "rows": rows }))
    } else {
        duel_csv(&rows)
    }))
}

fn cmd_audit(
    c: &Common,
    name: &Option<String>,
    n: Option<u64>,
    range: &Option<RangeSpec>,
    scan: bool,
) -> Result<Output, CliError> {
    let format = pick(c.format, Format::Csv, &[Format::Csv, Format::Json])?;
    let names: Vec<String> = match name {
        Some(s) => vec![s.clone()],
        None => inequality_names()
            .into_iter()
            .map(|(s, _)| s.to_string())
            .collect(),
    };
    let mut audits: Vec<InequalityAudit> = Vec::new();
    for name in &names {
        if scan {
            audits.push(inequality_scan(name)?);
        } else {
            let ns = match (n, range) {
                (Some(n), _) => vec![n],
                (None, Some(r)) => r.values(),
                (None, None) => {
                    return Err(CliError::Usage("audit needs --n, --range or --scan".into()))
                }
            };
            for n in ns {
                audits.push(inequality_audit(name, n)?);
            }
        }
    }
    Ok(Output::ok(if format == Format::Json {
        pretty(&json!({ "schema": "spex1p.audit/1", "audits": audits }))
    } else {
        let mut s = String::from("name,n,lambda,lhs,rhs,holds,threshold_n\n");
        for a in &audits {
            s.push_str(&format!(
                "{},{},{:.15e},{:.15e},{:.15e},{},{}\n",
                a.name,
                a.n.map_or(String::new(), |n| n.to_string()),
                a.lambda,
                a.lhs,
                a.rhs,
                a.holds,
                a.threshold_n.map_or(String::new(), |n| n.to_string())
            ));
        }
        s
    }))
}

fn cmd_replay(c: &Common, name: &str, n: usize) -> Result<Output, CliError> {
    pick(c.format, Format::Json, &[Format::Json])?;
    let r = rewiring_replay(name, n, c.tol, c.budget)?;
    let code = if r.confirmed { 0 } else { EXIT_FAIL };
    Ok(Output {
        text: pretty(&json!({ "schema": "spex1p.replay/1", "report": r })),
        code,
    })
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SPEX1P_THREADS") else {
        return Ok(());
    };
    let k: usize = raw.trim().parse().ok().filter(|&k| k > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "SPEX1P_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let c = &cli.common;
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    if c.budget == 0 {
        return Err(CliError::Usage("--budget must be positive".into()));
    }
    configure_threads()?;
    match &cli.command {
        Command::Construct {
            family,
            n,
            t,
            variant,
        } => cmd_construct(c, *family, *n, *t, *variant),
        Command::Spectral { input } => cmd_spectral(c, input),
        Command::Check { which, t, input } => cmd_check(c, *which, *t, input),
        Command::Spex { n, t } => cmd_spex(c, *n, *t),
        Command::Duel { t, range } => cmd_duel(c, *t, range),
        Command::Audit {
            name,
            n,
            range,
            scan,
        } => cmd_audit(c, name, *n, range, *scan),
        Command::Replay { name, n } => cmd_replay(c, name, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out_path = cli.common.out.clone();
    match run(cli) {
        Ok(out) => {
            let written = match &out_path {
                Some(p) => std::fs::write(p, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("spex1p: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("spex1p: {e}");
            ExitCode::from(e.code())
        }
    }
}
