//! Batch front-end shared by the `hermitian` binary and the tests.
//!
//! [`run`] executes one [`Command`] inside a thread pool of the requested
//! size and returns a JSON report (top-level `"schema": 1`, keys sorted)
//! plus a short human summary. Exit codes: 0 success, 2 usage, 3 budget
//! exceeded, 4 verification failure.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codes::{binomial, Budget, Distance, DistanceStrategy, DEFAULT_MAX_CODEWORDS, DEFAULT_MAX_SUBSETS};
use crate::cohomology::kernel_and_h1;
use crate::error::{Error, Result};
use crate::geometry::{HermitianCurve, LineClass, ProjPoint};
use crate::improve;
use crate::linalg::parse_numbers;
use crate::minwords;
use crate::onepoint::{self, CodeSpec, Designation};
use crate::smallwords;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hermitian", version, about = "Hermitian one-point codes: construction, duals and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Cap on codewords enumerated by exhaustive distance computations.
    #[arg(long, global = true, env = "HERMITIAN_MAX_CODEWORDS", default_value_t = DEFAULT_MAX_CODEWORDS)]
    pub max_codewords: u64,

    /// Cap on column subsets visited by support searches.
    #[arg(long, global = true, env = "HERMITIAN_MAX_SUBSETS", default_value_t = DEFAULT_MAX_SUBSETS)]
    pub max_subsets: u64,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, env = "HERMITIAN_WORKERS")]
    pub workers: Option<usize>,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Where verification failures dump their counterexamples.
    #[arg(long, global = true, default_value = "counterexample.json")]
    pub counterexample: PathBuf,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Length, dimension, designed distance and dual index of a code.
    Params(SpecArgs),
    /// Export a generator matrix with its point labels.
    Matrix {
        #[command(flatten)]
        spec: SpecArgs,
        /// Export the dual code instead.
        #[arg(long)]
        dual: bool,
        /// File receiving the matrix text; the report embeds it otherwise.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Minimum-weight census of C(d,a)^⊥.
    Minwords {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        a: u32,
        /// Also scan every delta-subset for supports outside the enumeration.
        #[arg(long)]
        exhaustive: bool,
        /// Write one support per line as sorted point indices.
        #[arg(long)]
        emit_supports: Option<PathBuf>,
        /// Compare a claimed A_delta, as `source=value` (repeatable).
        #[arg(long = "claim")]
        claims: Vec<String>,
    },
    /// Improving set and the resulting dual distance.
    Improve {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        a: u32,
        /// File of removed point indices; the minimal lex set otherwise.
        #[arg(long = "H")]
        h: Option<PathBuf>,
    },
    /// Small-weight support classification.
    Smallwords {
        #[command(subcommand)]
        action: SmallwordsAction,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SmallwordsAction {
    /// Classify every genuine dual support of the given weights.
    Sweep {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        w_min: Option<usize>,
        #[arg(long)]
        w_max: Option<usize>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Suite {
    /// Minimum distances of all C_m against the closed table.
    Table1 {
        #[arg(long)]
        q: u32,
    },
    /// Tangent / secant dichotomy of all lines.
    Lines {
        #[arg(long)]
        q: u32,
    },
    /// Parabola intersection census.
    Parabolas {
        #[arg(long)]
        q: u32,
    },
    /// C_m^⊥ = C_{m_perp} for every m.
    Duality {
        #[arg(long)]
        q: u32,
    },
    /// Monomial and plane-form constructions agree.
    Isometry {
        #[arg(long)]
        q: u32,
    },
    /// Kernel dimension equals h1 on random instances.
    Oracle {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// A code designation given either as a spec string or as flags.
#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// e.g. "q=7 m=53" or "q=7 d=7 a=3 H=@removed.txt".
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    /// File of removed point indices.
    #[arg(long = "H")]
    pub h: Option<PathBuf>,
}

impl SpecArgs {
    pub fn resolve(&self) -> Result<CodeSpec> {
        let mut spec: CodeSpec = match &self.spec {
            Some(s) => s.parse()?,
            None => {
                let q = self.q.ok_or_else(|| Error::params("--q or --spec is required"))?;
                let mut s = format!("q={q}");
                match (self.m, self.d, self.a) {
                    (Some(m), None, None) => s.push_str(&format!(" m={m}")),
                    (None, Some(d), Some(a)) => s.push_str(&format!(" d={d} a={a}")),
                    _ => return Err(Error::params("give either --m or both --d and --a")),
                }
                if let Some(h) = &self.h {
                    s.push_str(&format!(" H=@{}", h.display()));
                }
                s.parse()?
            }
        };
        if let Some(path) = spec.h_file.clone() {
            let h = read_index_file(Path::new(&path))?;
            match &mut spec.designation {
                Designation::Da { h: slot, .. } => *slot = h,
                Designation::M(_) => return Err(Error::params("H needs a (d, a) designation")),
            }
        }
        Ok(spec)
    }
}

/// Reads whitespace-separated point indices, returning them sorted.
pub fn read_index_file(path: &Path) -> Result<Vec<usize>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut out: Vec<usize> = Vec::new();
    for line in text.lines() {
        out.extend(parse_numbers(line)?.into_iter().map(|v| v as usize));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub budget: Budget,
    pub workers: Option<usize>,
    pub seed: u64,
    pub counterexample: PathBuf,
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            command: self.command.clone(),
            budget: Budget { max_codewords: self.max_codewords, max_subsets: self.max_subsets },
            workers: self.workers,
            seed: self.seed,
            counterexample: self.counterexample.clone(),
        }
    }
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            budget: Budget::default(),
            workers: None,
            seed: 1,
            counterexample: PathBuf::from("counterexample.json"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub json: String,
    pub human: String,
    pub passed: bool,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }
}

/// Exit code for an error raised by [`run`].
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Io(_) => 1,
        _ => EXIT_USAGE,
    }
}

struct Outcome {
    name: String,
    result: Value,
    human: String,
    passed: bool,
    counterexample: Option<Value>,
}

/// Runs a command; writes auxiliary files (matrix exports, emitted
/// supports, counterexamples) but not the main report.
pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        if w == 0 {
            return Err(Error::params("--workers must be positive"));
        }
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::params(format!("thread pool: {e}")))?;
    let outcome = pool.install(|| dispatch(cfg))?;
    if let Some(ce) = &outcome.counterexample {
        if !outcome.passed {
            let text = serde_json::to_string_pretty(ce).expect("serializable");
            fs::write(&cfg.counterexample, text + "\n")?;
        }
    }
    let report = json!({
        "schema": 1,
        "command": outcome.name,
        "passed": outcome.passed,
        "result": outcome.result,
    });
    Ok(RunOutput {
        json: serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        human: outcome.human,
        passed: outcome.passed,
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Params(args) => params(args),
        Command::Matrix { spec, dual, matrix_out } => matrix(spec, *dual, matrix_out.as_deref()),
        Command::Minwords { q, d, a, exhaustive, emit_supports, claims } => {
            minwords_cmd(*q, *d, *a, *exhaustive, emit_supports.as_deref(), claims, &cfg.budget)
        }
        Command::Improve { q, d, a, h } => improve_cmd(*q, *d, *a, h.as_deref(), &cfg.budget),
        Command::Smallwords { action: SmallwordsAction::Sweep { q, d, a, w_min, w_max } } => {
            sweep_cmd(*q, *d, *a, *w_min, *w_max, &cfg.budget)
        }
        Command::Verify { suite } => match suite {
            Suite::Table1 { q } => verify_table1(*q, &cfg.budget),
            Suite::Lines { q } => verify_lines(*q),
            Suite::Parabolas { q } => verify_parabolas(*q),
            Suite::Duality { q } => verify_duality(*q),
            Suite::Isometry { q } => verify_isometry(*q),
            Suite::Oracle { q, samples } => verify_oracle(*q, *samples, cfg.seed),
        },
    }
}

fn params(args: &SpecArgs) -> Result<Outcome> {
    let spec = args.resolve()?;
    let curve = HermitianCurve::new(spec.q)?;
    let m = spec.m();
    let mut p = to_value(&onepoint::code_params(&curve, m)?);
    let code = spec.build(&curve)?;
    p["spec"] = Value::String(spec.to_string());
    p["n"] = json!(code.length());
    p["k"] = json!(code.dimension());
    p["H_size"] = json!(spec.removed().len());
    let human = format!(
        "{spec}: (d,a)=({},{}), n={}, k={}, d(C_m)={}, m_perp={}, d(C_m^perp)={}",
        p["d"], p["a"], p["n"], p["k"], p["designed_distance"], p["dual_index"], p["dual_designed_distance"]
    );
    Ok(Outcome { name: "params".into(), result: p, human, passed: true, counterexample: None })
}

fn matrix(args: &SpecArgs, dual: bool, out: Option<&Path>) -> Result<Outcome> {
    let spec = args.resolve()?;
    let curve = HermitianCurve::new(spec.q)?;
    let mut code = spec.build(&curve)?;
    if dual {
        code = code.dual();
    }
    let text = code.to_text();
    let mut result = json!({
        "spec": spec.to_string(),
        "dual": dual,
        "n": code.length(),
        "k": code.dimension(),
    });
    match out {
        Some(path) => {
            fs::write(path, &text)?;
            result["written_to"] = json!(path.display().to_string());
        }
        None => result["code_text"] = json!(text),
    }
    let human = format!("{spec}{}: generator {}x{}", if dual { " (dual)" } else { "" }, code.dimension(), code.length());
    Ok(Outcome { name: "matrix".into(), result, human, passed: true, counterexample: None })
}

fn parse_claims(claims: &[String]) -> Result<Vec<(String, u64)>> {
    claims
        .iter()
        .map(|c| {
            let (s, v) = c.rsplit_once('=').ok_or_else(|| Error::params(format!("claim {c:?} is not source=value")))?;
            let v = v.trim().parse::<u64>().map_err(|_| Error::params(format!("claim value {v:?} is not an integer")))?;
            Ok((s.trim().to_string(), v))
        })
        .collect()
}

fn minwords_cmd(
    q: u32,
    d: u32,
    a: u32,
    exhaustive: bool,
    emit: Option<&Path>,
    claims: &[String],
    budget: &Budget,
) -> Result<Outcome> {
    let claims = parse_claims(claims)?;
    let curve = HermitianCurve::new(q)?;
    let census = minwords::verify(&curve, d, a, exhaustive, budget)?;
    let mut result = to_value(&census);
    if !claims.is_empty() {
        let refs: Vec<(&str, u64)> = claims.iter().map(|(s, v)| (s.as_str(), *v)).collect();
        result["adjudication"] = to_value(&minwords::adjudicate(&census, &refs));
    }
    if let Some(path) = emit {
        let supports = minwords::enumerate_supports(&curve, d, a, budget)?;
        let mut text = String::new();
        for s in supports {
            let parts: Vec<String> = s.points.iter().map(|i| i.to_string()).collect();
            text.push_str(&parts.join(" "));
            text.push('\n');
        }
        fs::write(path, text)?;
    }
    let mut human = format!(
        "q={q} (d,a)=({d},{a}): delta={}, supports={}, A_delta={}, closed form {:?}, {}",
        census.delta,
        census.support_count,
        census.a_delta,
        census.closed_form,
        if census.passed { "verified" } else { "FAILED" }
    );
    if let Some(adj) = result.get("adjudication") {
        human.push_str(&format!("; census supports {} and contradicts {}", adj["supported"], adj["flagged"]));
    }
    let counterexample = json!({
        "kernel_failures": census.kernel_failures,
        "extra_supports": census.extra_supports,
        "smaller_support": census.smaller_support,
        "closed_form": census.closed_form,
        "A_delta": census.a_delta,
    });
    Ok(Outcome { name: "minwords".into(), result, human, passed: census.passed, counterexample: Some(counterexample) })
}

fn improve_cmd(q: u32, d: u32, a: u32, h: Option<&Path>, budget: &Budget) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let (h, minimal) = match h {
        Some(path) => (read_index_file(path)?, None),
        None => {
            let set = improve::minimal_improving_set(&curve, d, a)?;
            (set.h.clone(), Some(set))
        }
    };
    let report = improve::improved_report(&curve, d, a, &h, budget)?;
    let mut breaks = true;
    if report.is_improving {
        for i in 0..h.len() {
            let mut smaller = h.clone();
            smaller.remove(i);
            if improve::is_improving(&curve, d, a, &smaller)? {
                breaks = false;
                break;
            }
        }
    }
    let mut result = to_value(&report);
    result["H"] = json!(h);
    result["removing_any_point_breaks"] = json!(report.is_improving && breaks);
    if let Some(set) = minimal {
        result["per_line_removal"] = to_value(&set.per_line_removal);
    }
    let human = format!(
        "q={q} (d,a)=({d},{a}): |H|={}, length {}, improving={}, dual distance >= {} ({:?})",
        report.h_size, report.new_length, report.is_improving, report.dual_distance_bound, report.dual_distance
    );
    let ce = json!({ "H": h, "report": to_value(&report) });
    Ok(Outcome { name: "improve".into(), result, human, passed: report.consistent, counterexample: Some(ce) })
}

fn sweep_cmd(q: u32, d: u32, a: u32, w_min: Option<usize>, w_max: Option<usize>, budget: &Budget) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let top = (3 * d as i64 - 1 - a as i64).max(0) as usize;
    let lo = w_min.unwrap_or(1);
    let hi = w_max.unwrap_or(top);
    let report = smallwords::soundness_sweep(&curve, d, a, lo..=hi, budget)?;
    let hist: BTreeMap<String, u64> = report.histogram.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let mut result = to_value(&report);
    result["histogram"] = to_value(&hist);
    let human = format!(
        "q={q} (d,a)=({d},{a}) w={lo}..={hi}: tags {hist:?}, counterexamples {}, converse {}/{} ok",
        report.counterexamples.len(),
        report.converse_checked - report.converse_failures.len() as u64,
        report.converse_checked
    );
    let ce = json!({ "counterexamples": report.counterexamples, "converse_failures": report.converse_failures });
    Ok(Outcome { name: "smallwords sweep".into(), result, human, passed: report.passed, counterexample: Some(ce) })
}

#[derive(Serialize)]
struct Table1Entry {
    m: i64,
    phase: u8,
    k: usize,
    designed: u64,
    computed: Option<usize>,
    strategy: Option<DistanceStrategy>,
    status: &'static str,
}

fn verify_table1(q: u32, budget: &Budget) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let n = curve.n_affine() as u64;
    let order = curve.field().order() as u128;
    let mut entries = Vec::new();
    for m in 1..=onepoint::max_m(q) {
        let code = onepoint::build_code(&curve, m)?;
        let designed = onepoint::designed_distance(q, m)?;
        let k = code.dimension();
        let codewords = order.checked_pow(k as u32).unwrap_or(u128::MAX);
        let subsets: u128 = (1..=designed).map(|i| binomial(n, i)).sum();
        let strategy = if codewords <= budget.max_codewords as u128 {
            Some(DistanceStrategy::Exhaustive)
        } else if subsets <= budget.max_subsets as u128 {
            Some(DistanceStrategy::SupportSearch)
        } else {
            None
        };
        let computed = match strategy {
            Some(s) => match code.min_distance(s, designed as usize, budget)? {
                Distance::Exact(d) => Some(d),
                Distance::Exceeds(_) => None,
            },
            None => None,
        };
        let status = match (strategy, computed) {
            (None, _) => "skipped",
            (Some(_), Some(d)) if d as u64 == designed => "match",
            _ => "mismatch",
        };
        entries.push(Table1Entry { m, phase: onepoint::phase(q, m)?, k, designed, computed, strategy, status });
    }
    let mismatches: Vec<&Table1Entry> = entries.iter().filter(|e| e.status == "mismatch").collect();
    let mut phases_covered: Vec<u8> = entries.iter().filter(|e| e.status == "match").map(|e| e.phase).collect();
    phases_covered.sort_unstable();
    phases_covered.dedup();
    let checked = entries.iter().filter(|e| e.status == "match").count();
    let skipped: Vec<i64> = entries.iter().filter(|e| e.status == "skipped").map(|e| e.m).collect();
    let passed = mismatches.is_empty();
    let human = format!(
        "table1 q={q}: {checked} of {} codes match, {} mismatches, phases covered {phases_covered:?}, skipped m = {skipped:?}",
        entries.len(),
        mismatches.len()
    );
    let ce = to_value(&mismatches);
    let result = json!({
        "q": q,
        "entries": to_value(&entries),
        "phases_covered": phases_covered,
        "skipped": skipped,
        "checked": checked,
    });
    Ok(Outcome { name: "verify table1".into(), result, human, passed, counterexample: Some(ce) })
}

fn verify_lines(q: u32) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let lc = curve.classify_lines();
    let q64 = q as u64;
    let mut problems: Vec<String> = Vec::new();
    let counts = (lc.tangents().count() as u64, lc.r_inf().count() as u64, lc.r().count() as u64);
    let total = lc.all().len() as u64;
    if total != q64.pow(4) + q64.pow(2) + 1 {
        problems.push(format!("{total} lines in total"));
    }
    if counts != (q64.pow(3) + 1, q64.pow(2), q64.pow(4) - q64.pow(3)) {
        problems.push(format!("class sizes {counts:?}"));
    }
    let mut tangent_of = vec![None; curve.points().len()];
    for li in lc.all() {
        match li.class {
            LineClass::Tangent { at } => {
                let p = curve.point(at);
                let order = curve.contact_order(&li.line, &p)?;
                if order != q as usize + 1 {
                    problems.push(format!("tangent {:?} has contact order {order} at point {at}", li.line));
                }
                if tangent_of[at].replace(li.line).is_some() {
                    problems.push(format!("point {at} has two tangent lines"));
                }
            }
            _ if li.points.len() != q as usize + 1 => {
                problems.push(format!("line {:?} meets the curve in {} points", li.line, li.points.len()));
            }
            _ => {}
        }
    }
    for (i, p) in curve.points().iter().enumerate() {
        let t = curve.tangent_line(p)?;
        if tangent_of[i] != Some(t) {
            problems.push(format!("tangent_line at point {i} disagrees with the classification"));
        }
    }
    let passed = problems.is_empty();
    let result = json!({
        "q": q,
        "lines": total,
        "tangents": counts.0,
        "R_inf": counts.1,
        "R": counts.2,
        "problems": problems,
    });
    let human = format!(
        "lines q={q}: {total} lines = {} tangent + {} R_inf + {} R, {} problems",
        counts.0,
        counts.1,
        counts.2,
        problems.len()
    );
    Ok(Outcome { name: "verify lines".into(), result, human, passed, counterexample: Some(json!(problems)) })
}

fn verify_parabolas(q: u32) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let census = curve.parabola_census();
    let q64 = q as u64;
    let total: u64 = census.values().sum();
    let mut problems = Vec::new();
    if total != (q64 * q64 - 1) * q64.pow(4) {
        problems.push(format!("{total} parabolas counted"));
    }
    let top = census.keys().max().copied().unwrap_or(0) as u64;
    if q % 2 == 1 {
        let expected = q64 * q64 * (q64 + 1) * (q64 - 1) / 2;
        let got = census.get(&(2 * q as usize)).copied().unwrap_or(0);
        if got != expected {
            problems.push(format!("census[{}] = {got}, expected {expected}", 2 * q));
        }
        if top > 2 * q64 {
            problems.push(format!("a parabola meets the curve in {top} affine points"));
        }
    } else if top > 2 * q64 - 1 {
        problems.push(format!("a parabola meets the curve in {top} affine points"));
    }
    let passed = problems.is_empty();
    let as_strings: BTreeMap<String, u64> = census.iter().map(|(h, c)| (h.to_string(), *c)).collect();
    let human = format!("parabolas q={q}: census {census:?}, {} problems", problems.len());
    let result = json!({ "q": q, "census": as_strings, "total": total, "problems": problems });
    Ok(Outcome { name: "verify parabolas".into(), result, human, passed, counterexample: Some(json!(problems)) })
}

fn verify_duality(q: u32) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let mut failures = Vec::new();
    let top = onepoint::max_m(q);
    for m in 0..=top {
        let dual = onepoint::build_code(&curve, m)?.dual();
        let other = onepoint::build_code(&curve, onepoint::dual_index(q, m))?;
        if !dual.same_code(&other)? {
            failures.push(m);
        }
    }
    let passed = failures.is_empty();
    let human = format!("duality q={q}: {} values of m checked, failures {failures:?}", top + 1);
    let result = json!({ "q": q, "checked": top + 1, "failures": failures });
    Ok(Outcome { name: "verify duality".into(), result, human, passed, counterexample: Some(json!(failures)) })
}

fn verify_isometry(q: u32) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let mut failures = Vec::new();
    let top = q as i64 * (q as i64 + 1);
    for m in 1..=top {
        let (d, a) = onepoint::m_to_da(q, m)?;
        let mono = onepoint::build_code(&curve, m)?;
        if !mono.same_code(&onepoint::build_code_projective(&curve, d, a)?)? {
            failures.push(json!({ "m": m, "d": d, "a": a, "builder": "forms" }));
        }
        if a > d && d > 1 {
            let (d2, a2) = onepoint::reduce_da(q, d, a)?;
            if !mono.same_code(&onepoint::build_code_projective(&curve, d2, a2)?)? {
                failures.push(json!({ "m": m, "d": d, "a": a, "builder": "reduced" }));
            }
        }
    }
    let passed = failures.is_empty();
    let human = format!("isometry q={q}: m = 1..={top}, {} failures", failures.len());
    let result = json!({ "q": q, "checked": top, "failures": failures.clone() });
    Ok(Outcome { name: "verify isometry".into(), result, human, passed, counterexample: Some(json!(failures)) })
}

#[derive(Serialize)]
struct OracleCase {
    d: u32,
    a: u32,
    #[serde(rename = "S")]
    s: Vec<usize>,
    kernel_dim: usize,
    h1: usize,
}

/// Random instances `(d, a, S)` with `1 <= d <= q`, `0 <= a <= d`.
pub fn oracle_instances(q: u32, samples: usize, seed: u64) -> Vec<(u32, u32, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (q as u64) << 32);
    let n = (q as usize).pow(3);
    (0..samples)
        .map(|_| {
            let d = rng.gen_range(1..=q);
            let a = rng.gen_range(0..=d);
            let forms = ((d + 1) * (d + 2) / 2) as usize;
            let size = rng.gen_range(0..=(forms + 2).min(n));
            let mut s = sample(&mut rng, n, size).into_vec();
            s.sort_unstable();
            (d, a, s)
        })
        .collect()
}

fn verify_oracle(q: u32, samples: usize, seed: u64) -> Result<Outcome> {
    let curve = HermitianCurve::new(q)?;
    let mut cases = Vec::new();
    for (d, a, s) in oracle_instances(q, samples, seed) {
        let (kernel_dim, h1) = kernel_and_h1(&curve, d, a, &s)?;
        cases.push(OracleCase { d, a, s, kernel_dim, h1 });
    }
    let failures: Vec<&OracleCase> = cases.iter().filter(|c| c.kernel_dim != c.h1).collect();
    let positive = cases.iter().filter(|c| c.h1 > 0).count();
    let passed = failures.is_empty();
    let human = format!(
        "oracle q={q}: {samples} instances (seed {seed}), {positive} with h1 > 0, {} disagreements",
        failures.len()
    );
    let ce = to_value(&failures);
    let result = json!({
        "q": q,
        "seed": seed,
        "samples": samples,
        "h1_positive": positive,
        "failures": ce.clone(),
    });
    Ok(Outcome { name: "verify oracle".into(), result, human, passed, counterexample: Some(ce) })
}

/// Canonical coordinates of every rational point, one triple per line.
pub fn point_list(curve: &HermitianCurve) -> String {
    curve.points().iter().map(|p: &ProjPoint| format!("{} {} {}\n", p.x, p.y, p.z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        let mut full = vec!["hermitian"];
        full.extend_from_slice(args);
        Cli::try_parse_from(full).unwrap().config()
    }

    #[test]
    fn params_q7_m53() {
        let out = run(&cfg(&["params", "--q", "7", "--m", "53"])).unwrap();
        let v: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["result"]["d"], 7);
        assert_eq!(v["result"]["a"], 3);
        assert_eq!(v["result"]["dual_designed_distance"], 14);
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["hermitian", "params", "--bogus"]).is_err());
        let e = run(&cfg(&["params", "--q", "3"])).unwrap_err();
        assert_eq!(error_exit_code(&e), EXIT_USAGE);
    }

    #[test]
    fn budget_exit_code() {
        let e = run(&cfg(&["--max-subsets", "10", "smallwords", "sweep", "--q", "3", "--d", "2", "--a", "0"])).unwrap_err();
        assert_eq!(error_exit_code(&e), EXIT_BUDGET);
    }

    #[test]
    fn oracle_instances_are_seeded() {
        assert_eq!(oracle_instances(3, 5, 7), oracle_instances(3, 5, 7));
        assert_ne!(oracle_instances(3, 5, 7), oracle_instances(3, 5, 8));
    }
}
