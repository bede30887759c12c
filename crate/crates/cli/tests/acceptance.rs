//! Acceptance criteria 1-7. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. Runs without the libtest harness so the
//! lines are always visible.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use pancyc::generators::{generate_extremal, generate_power_complement, known_hamilton_cycle_power_complement};
use pancyc::oracles::{
    cycle_spectrum, find_cycle_of_length, find_hamilton_cycle, independence_number, CycleSearch, OracleBudget,
};
use pancyc::report::verify_report;
use pancyc::theorems::PipelineTrace;
use pancyc::{verify_cycle, SpectrumReport};

const BIN: &str = env!("CARGO_BIN_EXE_pancyc");

/// Criterion 5 and 6 trial counts.
const LEMMA_TRIALS: u64 = 500;
const ORACLE_TRIALS: u64 = 500;
/// Seeds for criterion 4.
const MINDEG_SEEDS: [u64; 3] = [11, 12, 13];
/// Node budget for the criterion 1 oracle searches; generous, but finite so
/// a regression shows up as a failure rather than a hang.
const EXTREMAL_NODES: u64 = 20_000_000_000;

type Outcome = Result<String, String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

/// Run the CLI on a whitespace-separated argument line.
fn pancyc(line: &str) -> Result<Output, String> {
    Command::new(BIN)
        .args(line.split_whitespace())
        .output()
        .map_err(|e| format!("cannot run {BIN}: {e}"))
}

/// Run the CLI, require exit 0, and return its stderr.
fn pancyc_ok(line: &str) -> Result<String, String> {
    let out = pancyc(line)?;
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    if !out.status.success() {
        return fail(format!(
            "`pancyc {line}` exited {:?}: {}",
            out.status.code(),
            stderr.trim()
        ));
    }
    Ok(stderr)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

const SHORT: &str = "run short-cycles --family powercomp --n 1001 --p 1 --k 2";
const LARGE: &str = "run pan-n --family powercomp --n 2501 --p 1 --k 2";
const MINDEG: &str = "run pan-mindeg --family powercomp --n 2000 --p 2 --k 3";

fn criterion_1() -> Outcome {
    let budget = OracleBudget::nodes(EXTREMAL_NODES);
    let mut notes = Vec::new();
    for k in [3usize, 4] {
        let start = Instant::now();
        let g = generate_extremal(k).map_err(|e| e.to_string())?;
        let n = g.n();
        if n != k * (2 * k - 2) {
            return fail(format!("k={k}: {n} vertices"));
        }
        let alpha = independence_number(&g, &budget).map_err(|e| format!("k={k}: alpha {e}"))?;
        if alpha != k {
            return fail(format!("k={k}: alpha = {alpha}"));
        }
        match find_hamilton_cycle(&g, &budget) {
            CycleSearch::Found(c) => verify_cycle(&g, &c).map_err(|e| format!("k={k}: Hamilton cycle: {e}"))?,
            other => return fail(format!("k={k}: no Hamilton cycle ({other:?})")),
        }
        let missing = 2 * k - 1;
        let nodes = match find_cycle_of_length(&g, missing, &budget) {
            CycleSearch::Absent { nodes } => nodes,
            other => return fail(format!("k={k}: C_{missing} search gave {other:?}")),
        };
        let spectrum = cycle_spectrum(&g, 3, n, &budget);
        if !spectrum.aborted.is_empty() {
            return fail(format!("k={k}: spectrum aborted at {:?}", spectrum.aborted));
        }
        let absent: Vec<usize> = spectrum.absent.keys().copied().collect();
        if absent != [missing] {
            return fail(format!("k={k}: absent lengths {absent:?}, expected [{missing}]"));
        }
        if !verify_report(&g, &spectrum.report).ok() || spectrum.report.certificates.len() != n - 3 {
            return fail(format!("k={k}: spectrum certificates do not verify"));
        }
        notes.push(format!(
            "k={k}: n={n} alpha={alpha} no C_{missing} ({nodes} nodes) {:.1?}",
            start.elapsed()
        ));
    }
    Ok(notes.join("; "))
}

fn criterion_2(dir: &Path) -> Outcome {
    let report = dir.join("short.txt");
    let stderr = pancyc_ok(&format!("{SHORT} --seed 0 --out {}", report.display()))?;
    if !stderr.contains("seed 0") {
        return fail("run did not print its seed");
    }
    let parsed = SpectrumReport::parse(&read(&report)?).map_err(|e| e.to_string())?;
    if parsed.hypothesis.range != (3, 12) || !parsed.gaps.is_empty() || parsed.certificates.len() != 10 {
        return fail(format!("range {:?}, gaps {:?}", parsed.hypothesis.range, parsed.gaps));
    }
    let out = pancyc(&format!(
        "verify --family powercomp --n 1001 --p 1 --report {}",
        report.display()
    ))?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    if !out.status.success() || !stdout.contains("10 passed, 0 failed, 0 gaps") {
        return fail(format!("verify: {}", stdout.trim()));
    }
    Ok("3..=12 certified, 10 certificates re-verified by `pancyc verify`".into())
}

fn criterion_3() -> Outcome {
    let g = generate_power_complement(2501, 1).map_err(|e| e.to_string())?;
    let c = known_hamilton_cycle_power_complement(2501, 1).map_err(|e| e.to_string())?;
    let out = pancyc::theorems::pancyclic_large_n(&g, &c, 2).map_err(|e| e.to_string())?;
    let r = &out.report;
    if r.hypothesis.range != (3, 2501) || !r.gaps.is_empty() || r.certificates.len() != 2499 {
        return fail(format!("range {:?}, {} gaps", r.hypothesis.range, r.gaps.len()));
    }
    let check = verify_report(&g, r);
    if !check.ok() {
        return fail(format!("{} certificates fail", check.failed.len()));
    }
    Ok("3..=2501 certified, zero gaps".into())
}

fn criterion_4(dir: &Path) -> Outcome {
    let g = generate_power_complement(2000, 2).map_err(|e| e.to_string())?;
    for seed in MINDEG_SEEDS {
        let report = dir.join(format!("mindeg-{seed}.txt"));
        let trace = dir.join(format!("mindeg-{seed}.json"));
        pancyc_ok(&format!(
            "{MINDEG} --seed {seed} --out {} --trace-out {}",
            report.display(),
            trace.display()
        ))?;
        let r = SpectrumReport::parse(&read(&report)?).map_err(|e| e.to_string())?;
        if r.hypothesis.range != (3, 2000) || !r.gaps.is_empty() || !verify_report(&g, &r).ok() {
            return fail(format!(
                "seed {seed}: range {:?}, {} gaps",
                r.hypothesis.range,
                r.gaps.len()
            ));
        }
        let t = PipelineTrace::from_json(&read(&trace)?).map_err(|e| e.to_string())?;
        let branch = t.stage("dispatch").map(|s| s.outcome.clone()).unwrap_or_default();
        if branch != "n < 150k^3: k >= 3 branch" || !t.has_stage("long") || !t.has_stage("minimality") {
            return fail(format!("seed {seed}: trace does not show the k >= 3 branch ({branch})"));
        }
    }
    Ok(format!(
        "3..=2000 certified for seeds {MINDEG_SEEDS:?}, k >= 3 branch traced"
    ))
}

type Suite = (&'static str, fn(u64) -> common::Check);

fn criterion_5() -> Outcome {
    let suites: [Suite; 6] = [
        ("absorb_vertex", common::absorb_trial),
        ("delete_one_vertex", common::delete_trial),
        ("shorten_path", common::shorten_trial),
        ("bipartite_subgraph", common::bipartite_trial),
        ("bfs_layering", common::bfs_trial),
        ("efrs_dichotomy", common::efrs_trial),
    ];
    for (name, check) in suites {
        common::run_trials(LEMMA_TRIALS, check).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("6 suites x {LEMMA_TRIALS} trials"))
}

fn criterion_6() -> Outcome {
    common::run_trials(ORACLE_TRIALS, common::oracle_trial)?;
    Ok(format!("{ORACLE_TRIALS} random graphs, n <= 9, all lengths"))
}

fn criterion_7(dir: &Path) -> Outcome {
    let mut runs = vec![format!("{SHORT} --seed 0"), format!("{LARGE} --seed 0")];
    runs.extend(MINDEG_SEEDS.map(|s| format!("{MINDEG} --seed {s}")));
    for (i, run) in runs.iter().enumerate() {
        let mut bytes = Vec::new();
        for attempt in 0..2 {
            let out = dir.join(format!("det-{i}-{attempt}.json"));
            pancyc_ok(&format!("{run} --format machine --out {}", out.display()))?;
            bytes.push(read(&out)?);
        }
        if bytes[0] != bytes[1] {
            return fail(format!("`{run}`: reports differ between runs"));
        }
    }
    // the text report of criterion 2 must match a rerun too
    let again = dir.join("short-again.txt");
    pancyc_ok(&format!("{SHORT} --seed 0 --out {}", again.display()))?;
    if read(&dir.join("short.txt"))? != read(&again)? {
        return fail("short-cycles text report differs from the criterion 2 run");
    }
    Ok(format!("{} pipeline runs byte-identical on rerun", runs.len() + 1))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: [Criterion; 7] = [
        ("extremal family", Box::new(criterion_1)),
        ("short cycles, powercomp(1001,1)", Box::new(|| criterion_2(dir.path()))),
        ("pan-n, powercomp(2501,1)", Box::new(criterion_3)),
        ("pan-mindeg, powercomp(2000,2)", Box::new(|| criterion_4(dir.path()))),
        ("lemma property suites", Box::new(criterion_5)),
        ("oracle ground truth", Box::new(criterion_6)),
        ("determinism", Box::new(|| criterion_7(dir.path()))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{}]", i + 1, secs(took)),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{}]", i + 1, secs(took));
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}
