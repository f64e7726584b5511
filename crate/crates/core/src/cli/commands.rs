//! Subcommand bodies. Each takes file contents and returns the exit code and
//! output, so they run the same in-process and from the binary.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::cli::corpus::corpus;
use crate::cli::format::{GroupFile, InputError, LoadedGroup};
use crate::cli::render::{
    bounds_json, bounds_text, gen_set_json, gen_set_text, to_pretty, torsion_json, torsion_text,
};
use crate::crystal::{fixed_lattice, is_torsion_free, DEFAULT_CAP};
use crate::error::Error;
use crate::genred::{
    auto_reduce, bound_report, generating_pair, greedy_reduce, naive_generating_set, reduce_cyclic,
    reduce_theorem_a_i, reduce_two_generated, verify_generates, BoundReport, GenSetReport, ReduceOptions,
    EXCEEDS_THEOREM_BOUND,
};
use crate::module_rank::DEFAULT_BUDGET;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Auto,
    A1,
    A2,
    C,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub json: bool,
    pub cap: usize,
    pub budget: u64,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { json: false, cap: DEFAULT_CAP, budget: DEFAULT_BUDGET, seed: 0 }
    }
}

impl RunOptions {
    fn reduce(&self) -> ReduceOptions {
        ReduceOptions { budget: self.budget, seed: self.seed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Self { code, stdout, stderr: String::new() }
    }

    fn failure(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Self { code, stdout: String::new(), stderr }
    }
}

fn input_failure(e: &InputError) -> Outcome {
    let code = if matches!(e, InputError::NotInGroup { .. }) { EXIT_NEGATIVE } else { EXIT_INPUT };
    Outcome::failure(code, format!("error: {e}"))
}

fn load(text: &str, opts: &RunOptions) -> Result<LoadedGroup, Outcome> {
    GroupFile::parse(text).and_then(|f| f.load(opts.cap)).map_err(|e| input_failure(&e))
}

fn emit(opts: &RunOptions, code: i32, value: Value, text: String) -> Outcome {
    Outcome::new(code, if opts.json { to_pretty(&value) } else { text })
}

fn validation_json(g: &LoadedGroup) -> Value {
    let hol = g.group.holonomy();
    json!({
        "name": g.file.name,
        "dimension": g.group.dim(),
        "order": hol.order(),
        "fixed_rank": fixed_lattice(hol.generators(), g.group.dim()).rank(),
        "lattice_rescaled": !g.change.is_identity(),
    })
}

pub fn cmd_validate(text: &str, opts: &RunOptions) -> Outcome {
    let g = match load(text, opts) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let v = validation_json(&g);
    let t = format!(
        "{}: dimension {}, |G| = {}, fixed lattice rank {}{}\n",
        g.file.name,
        v["dimension"],
        v["order"],
        v["fixed_rank"],
        if g.change.is_identity() { "" } else { ", translation lattice rescaled to Z^n" }
    );
    emit(opts, EXIT_OK, v, t)
}

pub fn cmd_check_torsion(text: &str, opts: &RunOptions) -> Outcome {
    let g = match load(text, opts) {
        Ok(g) => g,
        Err(o) => return o,
    };
    match is_torsion_free(&g.group) {
        Ok(v) => {
            let code = if v.torsion_free { EXIT_OK } else { EXIT_NEGATIVE };
            emit(opts, code, torsion_json(&g, &v), torsion_text(&g, &v))
        }
        Err(e) => Outcome::failure(EXIT_NEGATIVE, format!("error: {e}")),
    }
}

fn run_method(g: &LoadedGroup, method: MethodChoice, opts: ReduceOptions) -> crate::Result<GenSetReport> {
    let group = &g.group;
    match method {
        MethodChoice::Auto => auto_reduce(group, opts),
        MethodChoice::A1 => reduce_theorem_a_i(group, opts),
        MethodChoice::A2 => reduce_cyclic(group, opts),
        MethodChoice::C => {
            let (x, y) = generating_pair(group.holonomy()).ok_or(Error::NotAGeneratingPair)?;
            reduce_two_generated(group, x, y, opts)
        }
        MethodChoice::Greedy => greedy_reduce(group, &naive_generating_set(group)?.generators),
    }
}

/// Sizes above `2n` or above the report's own theorem bound.
fn report_violations(r: &GenSetReport, n: usize) -> Vec<String> {
    let mut v = Vec::new();
    if r.size > 2 * n {
        v.push(format!("{}: size {} exceeds 2n = {}", r.method.tag(), r.size, 2 * n));
    }
    if r.has_note(EXCEEDS_THEOREM_BOUND) {
        v.push(format!("{}: size {} exceeds its theorem bound", r.method.tag(), r.size));
    }
    v
}

pub fn cmd_reduce(text: &str, method: MethodChoice, opts: &RunOptions) -> Outcome {
    let g = match load(text, opts) {
        Ok(g) => g,
        Err(o) => return o,
    };
    match run_method(&g, method, opts.reduce()) {
        Ok(r) => {
            let violations = report_violations(&r, g.group.dim());
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
            let mut out = emit(opts, code, gen_set_json(&g, &r), gen_set_text(&g, &r));
            for v in violations {
                let _ = writeln!(out.stderr, "violation: {v}");
            }
            out
        }
        Err(e) => Outcome::failure(EXIT_NEGATIVE, format!("error: {e}")),
    }
}

pub fn cmd_verify(text: &str, set_text: &str, opts: &RunOptions) -> Outcome {
    let g = match load(text, opts) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let set = match g.parse_set(set_text) {
        Ok(s) => s,
        Err(e) => return input_failure(&e),
    };
    match verify_generates(&g.group, &set) {
        Ok(v) => {
            let value = json!({
                "generates": v.generates,
                "holonomy_reached": v.holonomy_reached,
                "translation_rank": v.translation_rank,
            });
            let t = if v.generates { "generates\n".to_string() } else { "does not generate\n".to_string() };
            emit(opts, if v.generates { EXIT_OK } else { EXIT_NEGATIVE }, value, t)
        }
        Err(e @ Error::NotASubset { .. }) => {
            let value = json!({"generates": false, "error": e.to_string()});
            emit(opts, EXIT_NEGATIVE, value, format!("does not generate: {e}\n"))
        }
        Err(e) => Outcome::failure(EXIT_NEGATIVE, format!("error: {e}")),
    }
}

/// Every bound the reports of one group are checked against.
pub fn bound_violations(g: &LoadedGroup, b: &BoundReport) -> Vec<String> {
    let n = b.dim;
    let mut v: Vec<String> = b.reductions.iter().flat_map(|r| report_violations(r, n)).collect();
    if let Some(p) = b.best_predicted() {
        if b.best.size > p {
            v.push(format!("best size {} exceeds the predicted bound {p}", b.best.size));
        }
    }
    if b.torsion_free && b.best.size > n {
        v.push(format!("torsion-free group needs {} > n = {n} generators", b.best.size));
    }
    if b.torsion_free && b.cyclic && b.order > 1 && b.fixed_rank == 0 {
        v.push("torsion-free cyclic holonomy without fixed vectors".into());
    }
    if let Some(exp) = &g.file.expected {
        if let Some(tf) = exp.torsion_free {
            if tf != b.torsion_free {
                v.push(format!("expected torsion_free = {tf}, found {}", b.torsion_free));
            }
        }
        if let Some(m) = exp.max_generators {
            if b.best.size > m {
                v.push(format!("expected at most {m} generators, found {}", b.best.size));
            }
        }
    }
    v
}

pub fn cmd_bounds(text: &str, opts: &RunOptions) -> Outcome {
    let g = match load(text, opts) {
        Ok(g) => g,
        Err(o) => return o,
    };
    match bound_report(&g.group, opts.reduce()) {
        Ok(b) => {
            let violations = bound_violations(&g, &b);
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
            let mut value = bounds_json(&g, &b);
            value["violations"] = json!(violations);
            let mut t = bounds_text(&g, &b);
            for v in &violations {
                let _ = writeln!(t, "violation: {v}");
            }
            emit(opts, code, value, t)
        }
        Err(e) => Outcome::failure(EXIT_NEGATIVE, format!("error: {e}")),
    }
}

fn corpus_entry(file: GroupFile, opts: &RunOptions) -> (Value, String, usize) {
    let name = file.name.clone();
    let failed = |msg: String| {
        let line = format!("{name:<24} FAILED  {msg}\n");
        (json!({"name": name, "violations": [msg]}), line, 1)
    };
    let g = match file.load(opts.cap) {
        Ok(g) => g,
        Err(e) => return failed(format!("load: {e}")),
    };
    let verdict = match is_torsion_free(&g.group) {
        Ok(v) => v,
        Err(e) => return failed(format!("torsion: {e}")),
    };
    let b = match bound_report(&g.group, opts.reduce()) {
        Ok(b) => b,
        Err(e) => return failed(format!("bounds: {e}")),
    };
    let violations = bound_violations(&g, &b);
    let value = json!({
        "name": name,
        "validation": validation_json(&g),
        "torsion": torsion_json(&g, &verdict),
        "expected": g.file.expected,
        "bounds": bounds_json(&g, &b),
        "violations": violations,
    });
    let mut line = format!(
        "{name:<24} n={} |G|={:<3} {:<12} best {} ({}){}\n",
        b.dim,
        b.order,
        if b.torsion_free { "torsion-free" } else { "torsion" },
        b.best.size,
        b.best.method.tag(),
        if violations.is_empty() { "" } else { "  VIOLATION" }
    );
    for v in &violations {
        let _ = writeln!(line, "    {v}");
    }
    (value, line, violations.len())
}

/// Runs validation, torsion test, bound report and every reduction on the
/// bundled groups (`run` is `all` or one entry name).
pub fn cmd_corpus(run: &str, opts: &RunOptions) -> Outcome {
    let files: Vec<GroupFile> = corpus().into_iter().filter(|f| run == "all" || f.name == run).collect();
    if files.is_empty() {
        return Outcome::failure(EXIT_INPUT, format!("error: no corpus entry named {run:?}"));
    }
    let mut entries = Vec::new();
    let mut text = String::new();
    let mut total = 0;
    for f in files {
        let (v, line, count) = corpus_entry(f, opts);
        entries.push(v);
        text.push_str(&line);
        total += count;
    }
    let _ = writeln!(text, "{} entries, {total} violations", entries.len());
    let value = json!({
        "seed": opts.seed,
        "budget": opts.budget,
        "entries": entries,
        "violations": total,
        "ok": total == 0,
    });
    emit(opts, if total == 0 { EXIT_OK } else { EXIT_NEGATIVE }, value, text)
}
