//! Text and JSON renderings of command results.

use serde_json::{json, Value};

use crate::catalog::ExtensionBase;
use crate::classify::{Classification, ClaimReport};
use crate::numerics::{round_significant, type_signature, CosTarget, ExactValue, FPData};
use crate::ring::{AxiomReport, FusionRing, Subring};
use crate::structure::{FaithfulReport, Grading, Invertibles};

use super::ringfile::serialize_ring;

/// A finished command: both renderings plus the exit code.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Report {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn number(x: f64, exact: Option<ExactValue>) -> Value {
    json!({
        "value": round_significant(x),
        "exact": exact.map(|e| e.to_string()),
    })
}

fn number_text(x: f64, exact: Option<ExactValue>) -> String {
    match exact {
        Some(e) => format!("{} = {}", round_significant(x), e),
        None => round_significant(x).to_string(),
    }
}

fn labels_of(ring: &FusionRing, members: &[usize]) -> Vec<String> {
    members.iter().map(|&i| ring.label(i)).collect()
}

fn set_text(ring: &FusionRing, members: &[usize]) -> String {
    format!("{{{}}}", labels_of(ring, members).join(", "))
}

pub fn verify(report: &AxiomReport) -> Report {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({"axiom": v.axiom.name(), "indices": v.indices}))
        .collect();
    let valid = report.is_valid();
    let mut text = format!("axioms: {}\n", if valid { "ok" } else { "FAILED" });
    for v in &report.violations {
        text.push_str(&format!("  {v}\n"));
    }
    if report.omitted > 0 {
        text.push_str(&format!("  ... {} more not shown\n", report.omitted));
    }
    Report {
        json: json!({
            "command": "verify",
            "valid": valid,
            "violations": violations,
            "omitted": report.omitted,
        }),
        text,
        code: if valid { 0 } else { 1 },
    }
}

pub struct Analysis<'a> {
    pub ring: &'a FusionRing,
    pub fp: &'a FPData,
    pub invertibles: &'a Invertibles,
    pub adjoint: &'a Subring,
    pub grading: &'a Grading,
    pub nilpotency: Option<usize>,
    pub faithful: &'a FaithfulReport,
}

pub fn analyze(a: &Analysis<'_>) -> Report {
    let ring = a.ring;
    let sig = crate::numerics::TypeSignature::from_dims(&a.fp.dims);
    let total_exact = ExactValue::recognize(a.fp.total);
    let dims: Vec<Value> = (0..ring.rank())
        .map(|i| {
            let mut d = number(a.fp.dims[i], a.fp.recognized[i]);
            d["label"] = json!(ring.label(i));
            d
        })
        .collect();
    let components: Vec<Value> = a
        .grading
        .components
        .iter()
        .enumerate()
        .map(|(g, c)| json!({"element": a.grading.group.element_label(g), "members": c}))
        .collect();
    let json = json!({
        "command": "analyze",
        "rank": ring.rank(),
        "dimensions": dims,
        "global_dimension": number(a.fp.total, total_exact),
        "type": sig.to_string(),
        "invertibles": {
            "group": a.invertibles.group.display_name(),
            "order": a.invertibles.group.order(),
            "members": a.invertibles.embedding,
        },
        "adjoint_subring": a.adjoint.members,
        "universal_grading": {
            "group": a.grading.group.display_name(),
            "order": a.grading.group.order(),
            "cyclic": a.grading.group.is_cyclic(),
            "components": components,
        },
        "nilpotency_class": a.nilpotency,
        "faithful_simples": a.faithful.simples,
    });

    let width = (0..ring.rank()).map(|i| ring.label(i).len()).max().unwrap_or(1);
    let mut text = format!("rank: {}\n", ring.rank());
    text.push_str("dimensions:\n");
    for i in 0..ring.rank() {
        text.push_str(&format!(
            "  {:<width$}  {}\n",
            ring.label(i),
            number_text(a.fp.dims[i], a.fp.recognized[i])
        ));
    }
    text.push_str(&format!("global dimension: {}\n", number_text(a.fp.total, total_exact)));
    text.push_str(&format!("type: {sig}\n"));
    text.push_str(&format!(
        "invertibles: G(C) ≅ {}, |G(C)| = {}, {}\n",
        a.invertibles.group.display_name(),
        a.invertibles.group.order(),
        set_text(ring, &a.invertibles.embedding)
    ));
    text.push_str(&format!("adjoint subring: {}\n", set_text(ring, &a.adjoint.members)));
    text.push_str(&format!(
        "universal grading: U(C) ≅ {}, |U(C)| = {}\n",
        a.grading.group.display_name(),
        a.grading.group.order()
    ));
    for (g, c) in a.grading.components.iter().enumerate() {
        text.push_str(&format!("  {}: {}\n", a.grading.group.element_label(g), set_text(ring, c)));
    }
    text.push_str(&match a.nilpotency {
        Some(k) => format!("nilpotency class: {k}\n"),
        None => "nilpotency class: not nilpotent\n".to_string(),
    });
    text.push_str(&format!(
        "faithful simples: {} (U(C) {})\n",
        set_text(ring, &a.faithful.simples),
        if a.faithful.grading_cyclic { "cyclic" } else { "not cyclic" }
    ));
    Report { json, text, code: 0 }
}

fn claim_json(c: &ClaimReport) -> Value {
    json!({
        "id": c.id,
        "statement": c.statement,
        "status": c.status.as_str(),
        "witness": c.witness,
        "counterexample": c.counterexample,
        "ring_level": c.ring_level,
    })
}

pub fn classify(ring: &FusionRing, c: &Classification, claims: &[ClaimReport]) -> Report {
    let f = &c.flags;
    let e = &c.evidence;
    let refuted = claims.iter().any(|r| r.status == crate::classify::ClaimStatus::Refuted);
    let json = json!({
        "command": "classify",
        "flags": {
            "pointed": f.pointed,
            "yang_lee": f.yang_lee,
            "ising": f.ising,
            "generalized_ty": f.generalized_ty,
            "yl_extension": f.yl_extension,
            "rank2_pointed_extension": f.rank2_pointed_extension,
        },
        "evidence": {
            "type": e.type_signature,
            "grading_group": e.grading_group,
            "grading_order": e.grading_order,
            "invertibles_group": e.invertibles_group,
            "ising_generator": e.ising_generator,
            "yl_isomorphism": e.yl_isomorphism,
        },
        "claims": claims.iter().map(claim_json).collect::<Vec<_>>(),
    });
    let names = f.names();
    let mut text = format!(
        "families: {}\n",
        if names.is_empty() { "none".to_string() } else { names.join(", ") }
    );
    text.push_str(&format!("type: {}\n", e.type_signature));
    text.push_str(&format!("universal grading: U(C) ≅ {}\n", e.grading_group));
    text.push_str(&format!("invertibles: G(C) ≅ {}\n", e.invertibles_group));
    if let Some(g) = e.ising_generator {
        text.push_str(&format!("Ising subring generated by {}\n", ring.label(g)));
    }
    text.push_str("claims:\n");
    let width = claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in claims {
        let tag = if c.ring_level { " [ring-level]" } else { "" };
        text.push_str(&format!("  {:<width$}  {:<12}  {}{tag}\n", c.id, c.status.as_str(), c.witness));
        if let Some(ce) = &c.counterexample {
            text.push_str(&format!("  {:<width$}  counterexample {:?}\n", "", ce));
        }
    }
    Report {
        json,
        text,
        code: if refuted { 1 } else { 0 },
    }
}

pub fn subrings(ring: &FusionRing, subs: &[Subring]) -> Report {
    let list: Vec<Value> = subs
        .iter()
        .map(|s| json!({"members": s.members, "labels": labels_of(ring, &s.members), "pointed": s.pointed}))
        .collect();
    let mut text = format!("{} subrings\n", subs.len());
    for s in subs {
        text.push_str(&format!(
            "  {:<12}  {}\n",
            if s.pointed { "pointed" } else { "non-pointed" },
            set_text(ring, &s.members)
        ));
    }
    Report {
        json: json!({"command": "subrings", "count": subs.len(), "subrings": list}),
        text,
        code: 0,
    }
}

pub fn iso(a: &FusionRing, b: &FusionRing, sigma: Option<&[usize]>) -> Report {
    let text = match sigma {
        Some(s) => {
            let mut t = format!("isomorphic: {s:?}\n");
            for (i, &j) in s.iter().enumerate() {
                t.push_str(&format!("  {} -> {}\n", a.label(i), b.label(j)));
            }
            t
        }
        None => "not isomorphic\n".to_string(),
    };
    Report {
        json: json!({"command": "iso", "isomorphic": sigma.is_some(), "permutation": sigma}),
        text,
        code: if sigma.is_some() { 0 } else { 1 },
    }
}

pub fn catalog(name: &str, ring: &FusionRing, path: Option<&str>) -> Report {
    let text = match path {
        Some(p) => format!("wrote {name} (rank {}) to {p}\n", ring.rank()),
        None => serialize_ring(ring),
    };
    let ring_json: Value = serde_json::from_str(&serialize_ring(ring)).expect("ring file is JSON");
    Report {
        json: json!({"command": "catalog", "name": name, "path": path, "ring": ring_json}),
        text,
        code: 0,
    }
}

pub fn enumerate(base: ExtensionBase, group: &str, rings: &[FusionRing], paths: &[String]) -> Report {
    let entries: Vec<Value> = rings
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let ring_json: Value = serde_json::from_str(&serialize_ring(r)).expect("ring file is JSON");
            json!({
                "index": i,
                "rank": r.rank(),
                "type": type_signature(r).map(|t| t.to_string()).unwrap_or_default(),
                "pointed": r.is_pointed(),
                "path": paths.get(i),
                "ring": ring_json,
            })
        })
        .collect();
    let mut text = format!("{} ring(s) over base {base} graded by {group}\n", rings.len());
    for (i, r) in rings.iter().enumerate() {
        let sig = type_signature(r).map(|t| t.to_string()).unwrap_or_default();
        let kind = if r.is_pointed() { "pointed" } else { "non-pointed" };
        text.push_str(&format!("  [{i}] rank {} {kind} type {sig}", r.rank()));
        if let Some(p) = paths.get(i) {
            text.push_str(&format!(" -> {p}"));
        }
        text.push('\n');
    }
    Report {
        json: json!({
            "command": "enumerate",
            "base": base.to_string(),
            "group": group,
            "count": rings.len(),
            "rings": entries,
        }),
        text,
        code: 0,
    }
}

pub fn solve_cos(terms: usize, bound: u32, target: CosTarget, solutions: &[Vec<u32>]) -> Report {
    const NAMES: [&str; 3] = ["a", "b", "c"];
    let mut text = String::new();
    if solutions.is_empty() {
        text.push_str("no solutions\n");
    }
    for s in solutions {
        let parts: Vec<String> = s.iter().zip(NAMES).map(|(v, n)| format!("{n}={v}")).collect();
        text.push_str(&parts.join(" "));
        text.push('\n');
    }
    Report {
        json: json!({
            "command": "solve-cos",
            "terms": terms,
            "bound": bound,
            "target": {"value": round_significant(target.value()), "exact": target.to_string()},
            "solutions": solutions,
        }),
        text,
        code: 0,
    }
}
