//! `pancyc`: generate fixtures, run the exact oracles and the certificate
//! pipelines, and re-verify reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pancyc::generators::{generate_extremal, generate_power_complement, known_hamilton_cycle_power_complement};
use pancyc::io::{read_cycle, read_graph, write_cycle, write_graph};
use pancyc::oracles::{
    cycle_spectrum, find_cycle_of_length, find_hamilton_cycle, independence_number, vertex_connectivity, CycleSearch,
    OracleBudget,
};
use pancyc::report::verify_report;
use pancyc::theorems::{pancyclic_large_n, pancyclic_min_degree, short_cycle_spectrum, PipelineOutput};
use pancyc::{Cycle, Error, Graph, RandomSource, SpectrumReport};
use serde_json::json;

mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const HYPOTHESIS: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const RANDOMNESS: u8 = 4;
    pub const VERIFY_FAILED: u8 = 5;
    pub const INTERNAL: u8 = 6;
}

#[derive(Parser, Debug)]
#[command(
    name = "pancyc",
    version,
    about = "Certified cycle spectra for graphs with small independence number"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph in the text format.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the family's known Hamilton cycle (powercomp only).
        #[arg(long)]
        cycle_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an exact oracle.
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        #[command(flatten)]
        input: InputArgs,
        /// Cycle length for `cycle`.
        #[arg(long)]
        len: Option<usize>,
        /// Range for `spectrum` (defaults to 3..=n).
        #[arg(long)]
        lo: Option<usize>,
        #[arg(long)]
        hi: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a spectrum pipeline and write its report.
    Run {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Hamilton cycle file (pan-n, pan-mindeg). Generated powercomp
        /// inputs default to their known cycle.
        #[arg(long)]
        cycle: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check every certificate of a report against a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        report: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Independence bound; also the extremal family parameter.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    #[arg(short, long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Extremal,
    Powercomp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OracleKind {
    Alpha,
    Kappa,
    Cycle,
    Hamilton,
    Spectrum,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Theorem {
    ShortCycles,
    PanN,
    PanMindeg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Machine,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: exit::USAGE,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::Parse { .. } => exit::USAGE,
            Error::Precondition(_) | Error::HypothesisViolation { .. } => exit::HYPOTHESIS,
            Error::RandomnessFailure { .. } => exit::RANDOMNESS,
            Error::Internal { .. } => exit::INTERNAL,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Command::Gen {
            family,
            out,
            cycle_out,
            format,
        } => cmd_gen(&family, out.as_deref(), cycle_out.as_deref(), format),
        Command::Oracle {
            which,
            input,
            len,
            lo,
            hi,
            budget,
            format,
        } => cmd_oracle(which, &input, len, (lo, hi), &budget, format),
        Command::Run {
            theorem,
            input,
            seed,
            cycle,
            out,
            trace_out,
            format,
        } => cmd_run(
            theorem,
            &input,
            seed,
            cycle.as_deref(),
            out.as_deref(),
            trace_out.as_deref(),
            format,
        ),
        Command::Verify { input, report, format } => cmd_verify(&input, &report, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

/// Print to `out` if given, else stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(f: &FamilyArgs) -> Result<(Graph, usize, Option<Cycle>), Failure> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Failure::usage(format!("--{name} is required")));
    match f.family {
        Some(Family::Extremal) => {
            let k = need(f.k, "k")?;
            let g = generate_extremal(k).map_err(|e| Failure::usage(e.to_string()))?;
            Ok((g, k, None))
        }
        Some(Family::Powercomp) => {
            let n = need(f.n, "n")?;
            let p = need(f.p, "p")?;
            let g = generate_power_complement(n, p).map_err(|e| Failure::usage(e.to_string()))?;
            Ok((g, p + 1, known_hamilton_cycle_power_complement(n, p).ok()))
        }
        None => Err(Failure::usage("--family is required")),
    }
}

/// The input graph and, for generated powercomp graphs, the known cycle.
fn load(input: &InputArgs) -> Result<(Graph, Option<Cycle>), Failure> {
    match (&input.input, input.family.family) {
        (Some(path), None) => Ok((read_graph(&read_file(path)?)?, None)),
        (None, Some(_)) => {
            let (g, _, c) = generate(&input.family)?;
            Ok((g, c))
        }
        _ => Err(Failure::usage("exactly one of --input or --family is required")),
    }
}

fn cmd_gen(f: &FamilyArgs, out: Option<&Path>, cycle_out: Option<&Path>, format: Format) -> CmdResult {
    let (g, alpha, cycle) = generate(f)?;
    if let Some(path) = cycle_out {
        let c = cycle.ok_or_else(|| Failure::usage("this family has no known Hamilton cycle"))?;
        write_file(path, &write_cycle(&c))?;
    }
    emit(out, &write_graph(&g))?;
    let stats = match format {
        Format::Text => format!(
            "n {} m {} min-degree {} alpha {alpha}",
            g.n(),
            g.edge_count(),
            g.min_degree()
        ),
        Format::Machine => json!({
            "n": g.n(), "m": g.edge_count(), "min_degree": g.min_degree(), "alpha": alpha
        })
        .to_string(),
    };
    // keep stdout clean when it carries the graph
    if out.is_some() {
        println!("{stats}");
    } else {
        eprintln!("{stats}");
    }
    Ok(exit::OK)
}

fn budget_of(b: &BudgetArgs) -> OracleBudget {
    let mut budget = match b.budget_nodes {
        Some(n) => OracleBudget::nodes(n),
        None => OracleBudget::default(),
    };
    if let Some(s) = b.budget_seconds {
        budget = budget.with_time(Duration::from_secs_f64(s));
    }
    budget
}

fn search_outcome(s: &CycleSearch, format: Format) -> u8 {
    let (text, value, code) = match s {
        CycleSearch::Found(c) => (
            format!("found: {}", write_cycle(c).trim_end()),
            json!({"result": "found", "cycle": c.verts}),
            exit::OK,
        ),
        CycleSearch::Absent { nodes } => (
            "absent (search complete)".to_string(),
            json!({"result": "absent", "nodes": nodes}),
            exit::OK,
        ),
        CycleSearch::Aborted { nodes } => (
            format!("aborted after {nodes} nodes (budget exceeded)"),
            json!({"result": "aborted", "nodes": nodes}),
            exit::BUDGET,
        ),
    };
    match format {
        Format::Text => println!("{text}"),
        Format::Machine => println!("{value}"),
    }
    code
}

fn cmd_oracle(
    which: OracleKind,
    input: &InputArgs,
    len: Option<usize>,
    range: (Option<usize>, Option<usize>),
    b: &BudgetArgs,
    format: Format,
) -> CmdResult {
    let (g, _) = load(input)?;
    let budget = budget_of(b);
    let print_value = |name: &str, v: usize| match format {
        Format::Text => println!("{v}"),
        Format::Machine => println!("{}", json!({ name: v })),
    };
    match which {
        OracleKind::Alpha => match independence_number(&g, &budget) {
            Ok(a) => print_value("alpha", a),
            Err(ab) => {
                println!("aborted: {ab}");
                return Ok(exit::BUDGET);
            }
        },
        OracleKind::Kappa => print_value("kappa", vertex_connectivity(&g)),
        OracleKind::Cycle => {
            let len = len.ok_or_else(|| Failure::usage("--len is required for the cycle oracle"))?;
            return Ok(search_outcome(&find_cycle_of_length(&g, len, &budget), format));
        }
        OracleKind::Hamilton => return Ok(search_outcome(&find_hamilton_cycle(&g, &budget), format)),
        OracleKind::Spectrum => {
            let s = cycle_spectrum(&g, range.0.unwrap_or(3), range.1.unwrap_or(g.n()), &budget);
            match format {
                Format::Text => {
                    print!("{}", s.report.to_text());
                    let absent: Vec<String> = s.absent.keys().map(usize::to_string).collect();
                    let aborted: Vec<String> = s.aborted.iter().map(usize::to_string).collect();
                    println!("absent {}", absent.join(" "));
                    println!("aborted {}", aborted.join(" "));
                }
                Format::Machine => println!(
                    "{}",
                    json!({
                        "report": serde_json::from_str::<serde_json::Value>(&s.report.to_json()).expect("valid json"),
                        "absent": s.absent.keys().collect::<Vec<_>>(),
                        "aborted": s.aborted,
                    })
                ),
            }
            if !s.aborted.is_empty() {
                return Ok(exit::BUDGET);
            }
        }
    }
    Ok(exit::OK)
}

fn render(report: &SpectrumReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Machine => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    }
}

fn cmd_run(
    theorem: Theorem,
    input: &InputArgs,
    seed: u64,
    cycle: Option<&Path>,
    out: Option<&Path>,
    trace_out: Option<&Path>,
    format: Format,
) -> CmdResult {
    let (g, known) = load(input)?;
    let k = input.family.k.ok_or_else(|| Failure::usage("--k is required"))?;
    let hamilton = || -> Result<Cycle, Failure> {
        match cycle {
            Some(path) => Ok(read_cycle(&read_file(path)?)?),
            None => known
                .clone()
                .ok_or_else(|| Failure::usage("--cycle is required for this theorem")),
        }
    };
    let mut rng = RandomSource::new(seed);
    eprintln!("pancyc {}", env!("CARGO_PKG_VERSION"));
    let output: PipelineOutput = match theorem {
        Theorem::ShortCycles => {
            eprintln!("seed {seed}");
            short_cycle_spectrum(&g, k, &mut rng)?
        }
        Theorem::PanN => {
            eprintln!("seed none (deterministic pipeline)");
            pancyclic_large_n(&g, &hamilton()?, k)?
        }
        Theorem::PanMindeg => {
            eprintln!("seed {seed}");
            pancyclic_min_degree(&g, &hamilton()?, k, &mut rng)?
        }
    };
    if let Some(path) = trace_out {
        write_file(path, &output.trace.to_json())?;
    }
    emit(out, &render(&output.report, format))?;
    let check = verify_report(&g, &output.report);
    let (lo, hi) = output.report.hypothesis.range;
    eprintln!(
        "certified {} lengths in {lo}..={hi}, {} gaps",
        output.report.certificates.len(),
        output.report.gaps.len()
    );
    if !check.ok() || !output.report.gaps.is_empty() {
        return Ok(exit::VERIFY_FAILED);
    }
    Ok(exit::OK)
}

fn cmd_verify(input: &InputArgs, report: &Path, format: Format) -> CmdResult {
    let (g, _) = load(input)?;
    let report = SpectrumReport::parse(&read_file(report)?)?;
    let check = verify_report(&g, &report);
    match format {
        Format::Text => {
            println!("graph hash {}", if check.hash_matches { "matches" } else { "MISMATCH" });
            for len in &check.passed {
                println!("length {len}: ok");
            }
            for (len, why) in &check.failed {
                println!("length {len}: FAIL {why}");
            }
            println!(
                "{} passed, {} failed, {} gaps",
                check.passed.len(),
                check.failed.len(),
                report.gaps.len()
            );
        }
        Format::Machine => println!(
            "{}",
            json!({
                "hash_matches": check.hash_matches,
                "passed": check.passed,
                "failed": check.failed,
                "gaps": report.gaps,
            })
        ),
    }
    Ok(if check.ok() { exit::OK } else { exit::VERIFY_FAILED })
}
