//! JSON and text renderings of reports. JSON object keys come out sorted, so
//! equal reports render to identical bytes.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::cli::format::LoadedGroup;
use crate::crystal::TorsionVerdict;
use crate::genred::{BoundReport, GenSetReport};
use crate::linalg::RatVector;
use crate::module_rank::RankBounds;

pub fn gen_set_json(g: &LoadedGroup, r: &GenSetReport) -> Value {
    json!({
        "method": r.method.tag(),
        "size": r.size,
        "verified": r.verified,
        "theorem_bound": r.theorem_bound,
        "notes": r.notes,
        "generators": r.generators.iter().map(|e| g.to_record(e)).collect::<Vec<_>>(),
    })
}

pub fn torsion_json(g: &LoadedGroup, v: &TorsionVerdict) -> Value {
    json!({
        "torsion_free": v.torsion_free,
        "witness": v.witness.as_ref().map(|w| g.to_record(w)),
    })
}

pub fn rank_json(g: &LoadedGroup, r: &RankBounds) -> Value {
    let witness: Vec<Vec<String>> =
        r.witness.iter().map(|v| g.change.to_old(&RatVector::from_ints(v)).to_strings()).collect();
    json!({
        "lower": r.lower,
        "upper": r.upper,
        "exact": r.is_exact(),
        "witness": witness,
        "formula_bound": r.formula_bound.map(|f| json!({"value": f.value, "kind": f.kind.tag()})),
        "budget_exhausted": r.budget_exhausted,
        "exceeds_formula": r.exceeds_formula,
        "checks": r.checks,
    })
}

pub fn bounds_json(g: &LoadedGroup, b: &BoundReport) -> Value {
    json!({
        "dimension": b.dim,
        "order": b.order,
        "factorization": b.factorization,
        "cyclic": b.cyclic,
        "simple": b.simple,
        "holonomy_min_generators": b.holonomy_min_generators,
        "fixed_rank": b.fixed_rank,
        "torsion_free": b.torsion_free,
        "module_rank": rank_json(g, &b.module_rank),
        "sylow": b.sylow.iter().map(|s| json!({
            "prime": s.prime,
            "order": s.order,
            "min_generators": s.min_generators,
            "fixed_rank": s.fixed_rank,
        })).collect::<Vec<_>>(),
        "theorems": b.theorems.iter().map(|t| json!({
            "name": t.name,
            "applies": t.applies,
            "bound": t.bound,
            "detail": t.detail,
        })).collect::<Vec<_>>(),
        "best_predicted": b.best_predicted(),
        "reductions": b.reductions.iter().map(|r| gen_set_json(g, r)).collect::<Vec<_>>(),
        "best": gen_set_json(g, &b.best),
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn element_text(g: &LoadedGroup, e: &crate::crystal::AffineElement) -> String {
    let r = g.to_record(e);
    let rows: Vec<String> = r.holonomy.iter().map(|row| format!("{row:?}")).collect();
    format!("({}; [{}])", r.translation.join(", "), rows.join(", "))
}

pub fn gen_set_text(g: &LoadedGroup, r: &GenSetReport) -> String {
    let mut out = String::new();
    let bound = r.theorem_bound.map_or("-".to_string(), |b| b.to_string());
    let _ = writeln!(out, "method: {}  size: {}  bound: {}  verified: {}", r.method, r.size, bound, r.verified);
    for e in &r.generators {
        let _ = writeln!(out, "  {}", element_text(g, e));
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

pub fn torsion_text(g: &LoadedGroup, v: &TorsionVerdict) -> String {
    match &v.witness {
        None => "torsion-free\n".to_string(),
        Some(w) => format!("torsion, witness {}\n", element_text(g, w)),
    }
}

pub fn bounds_text(g: &LoadedGroup, b: &BoundReport) -> String {
    let mut out = String::new();
    let fact: Vec<String> = b.factorization.iter().map(|(p, e)| format!("{p}^{e}")).collect();
    let _ = writeln!(out, "dimension {}  |G| = {} = {}", b.dim, b.order, if fact.is_empty() { "1".into() } else { fact.join(" ") });
    let _ = writeln!(
        out,
        "cyclic {}  simple {}  d(G) = {}  fixed rank {}  torsion-free {}",
        b.cyclic, b.simple, b.holonomy_min_generators, b.fixed_rank, b.torsion_free
    );
    let _ = writeln!(out, "module rank in [{}, {}]", b.module_rank.lower, b.module_rank.upper);
    for t in &b.theorems {
        let bound = t.bound.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(out, "  {:<14} applies {:<5}  bound {:<3}  {}", t.name, t.applies, bound, t.detail);
    }
    out.push_str("best: ");
    out.push_str(&gen_set_text(g, &b.best));
    out
}
