//! JSON and text rendering of classifications. JSON objects are key-sorted,
//! so identical inputs give byte-identical reports.

use serde_json::{json, Map, Value};

use crate::classify::{Classification, WitnessPair, WitnessStatus};
use crate::presentation::RelativePresentation;

fn witness_json(w: &WitnessPair) -> Value {
    let (status, depth, counterexample) = match &w.status {
        WitnessStatus::Cited => ("cited", None, None),
        WitnessStatus::BoundedVerified { depth } => ("bounded-verified", Some(*depth), None),
        WitnessStatus::Refuted { counterexample } => ("refuted", None, Some(counterexample.clone())),
    };
    let mut m = Map::new();
    m.insert("u".into(), json!(w.u.to_string()));
    m.insert("v".into(), json!(w.v.to_string()));
    m.insert("status".into(), json!(status));
    m.insert("depth".into(), json!(depth));
    m.insert("d".into(), json!(w.d));
    m.insert("provenance".into(), json!(w.provenance));
    if let Some(c) = counterexample {
        m.insert("counterexample".into(), json!(c));
    }
    Value::Object(m)
}

pub fn report_json(p: &RelativePresentation, c: &Classification, verbose: bool) -> Value {
    let d = &c.diagnostics;
    let mut diagnostics = Map::new();
    diagnostics.insert("exponent_sums".into(), json!(d.exponent_sums));
    diagnostics.insert("unimodularity".into(), json!(d.unimodularity));
    diagnostics.insert("complexity".into(), json!(d.complexity));
    diagnostics.insert("form1".into(), json!(d.form1));
    diagnostics.insert("X1_size".into(), json!(d.x1_size));
    diagnostics.insert("abelianization_divisors".into(), json!(d.abelianization_divisors));
    diagnostics.insert("notes".into(), json!(d.notes));
    if verbose {
        diagnostics.insert("intermediates".into(), json!(d.intermediates));
    }
    json!({
        "input": {
            "coeff": p.coeff.name(),
            "tpart": p.tpart.name(),
            "relator": p.relator.to_string(),
        },
        "verdict": c.verdict,
        "reason": c.reason,
        "trace": c.trace,
        "diagnostics": Value::Object(diagnostics),
        "witnesses": c.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
        "model": c.model.as_ref().map(|m| m.kind()),
    })
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn render_text(p: &RelativePresentation, c: &Classification, verbose: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("presentation: < {} , {} | {} >\n", p.coeff.name(), p.tpart.name(), p.relator));
    match c.reason {
        Some(r) => out.push_str(&format!("verdict: {} ({r})\n", c.verdict)),
        None => out.push_str(&format!("verdict: {}\n", c.verdict)),
    }
    out.push_str("trace:\n");
    for step in &c.trace {
        out.push_str(&format!("  - [{}] {}\n", step.rule, step.citation));
        for (k, v) in &step.evidence {
            out.push_str(&format!("      {k} = {v}\n"));
        }
    }
    if !c.witnesses.is_empty() {
        out.push_str("witnesses:\n");
        for w in &c.witnesses {
            let status = match &w.status {
                WitnessStatus::Cited => "cited".to_string(),
                WitnessStatus::BoundedVerified { depth } => format!("bounded-verified({depth})"),
                WitnessStatus::Refuted { counterexample } => format!("refuted by {counterexample}"),
            };
            let d = w.d.map(|d| format!(", d={d}")).unwrap_or_default();
            out.push_str(&format!("  - u = {}, v = {}  [{status}{d}; {}]\n", w.u, w.v, w.provenance));
        }
    }
    let d = &c.diagnostics;
    out.push_str(&format!("exponent sums: {:?}\n", d.exponent_sums));
    out.push_str(&format!("abelianization divisors: {:?}\n", d.abelianization_divisors));
    if let Some(cl) = d.complexity {
        out.push_str(&format!("complexity: {cl}\n"));
    }
    if let Some(f) = &d.form1 {
        out.push_str(&format!("form: {f}\n"));
    }
    if let Some(n) = d.x1_size {
        out.push_str(&format!("|X1|: {n}\n"));
    }
    for note in &d.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    if verbose {
        for (k, v) in &d.intermediates {
            out.push_str(&format!("{k}: {v}\n"));
        }
    }
    out
}
