//! JSON and text rendering for CLI results.
//!
//! JSON is the machine contract: every payload here has a fixed key set
//! (see the schemas directory) and deterministic key order. Text output is
//! for humans and always names the statement behind an answer.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use stiefel_core::classify::Verdict;
use stiefel_core::completion::{CompletionDecomposition, ICompleteGroup};
use stiefel_core::fractions::RationalMod1;
use stiefel_core::group::{AbGroupFQ, FinAbGroup, PrimeSet};
use stiefel_core::james::{DivisibilityWitness, JamesFactorization};
use stiefel_core::matrix::Mat;
use stiefel_core::splitting::{ProofTrace, SectionDecision, SectionVerdict};

pub const HYPOTHESIS: &str = "the base ring contains an algebraic closure of the rationals";

pub fn james_json(j: &JamesFactorization) -> Value {
    serde_json::to_value(j).expect("james numbers serialize")
}

pub fn james_text(j: &JamesFactorization) -> String {
    format!("b_{} = {}", j.q, j)
}

pub fn section_json(d: &SectionDecision, trace: Option<Result<&ProofTrace, String>>) -> Value {
    let mut obj = serde_json::to_value(d)
        .expect("decisions serialize")
        .as_object()
        .cloned()
        .expect("decision is an object");
    obj.insert("hypothesis".into(), json!(HYPOTHESIS));
    match trace {
        None => {}
        Some(Ok(t)) => {
            obj.insert("proof_trace".into(), serde_json::to_value(t).expect("traces serialize"));
        }
        Some(Err(note)) => {
            obj.insert("proof_trace".into(), Value::Null);
            obj.insert("proof_trace_note".into(), json!(note));
        }
    }
    Value::Object(obj)
}

pub fn section_text(d: &SectionDecision, trace: Option<Result<&ProofTrace, String>>) -> String {
    let mut out = String::new();
    let headline = match d.verdict {
        SectionVerdict::Yes => format!(
            "Yes: the projection from {r}-frames to 1-frames of affine {n}-space admits a right inverse; \
             equivalently, the universal stably free module of type ({n}, {m}) has a free summand of rank {t}.",
            r = d.r,
            n = d.n,
            m = d.n - 1,
            t = d.r - 1,
        ),
        SectionVerdict::No => format!(
            "No: the projection from {r}-frames to 1-frames of affine {n}-space admits no right inverse.",
            r = d.r,
            n = d.n,
        ),
        SectionVerdict::TriviallyYes => {
            "Yes, trivially: with r = 1 the projection is the identity.".into()
        }
        SectionVerdict::OutOfTheoremRange => format!(
            "Undecided: (n, r) = ({}, {}) lies outside the decided range 2 <= r <= n-2.",
            d.n, d.r
        ),
    };
    out.push_str(&headline);
    out.push('\n');
    out.push_str(&format!("James number: {}\n", james_text(&d.james)));
    match &d.certificate {
        Some(DivisibilityWitness::Quotient { value, .. }) => {
            out.push_str(&format!("Certificate: n / b_{} = {value}\n", d.r));
        }
        Some(DivisibilityWitness::FailingPrime { prime, required, available }) => {
            out.push_str(&format!(
                "Certificate: at p = {prime} the James number needs valuation {required}, n has {available}\n"
            ));
        }
        None => {}
    }
    out.push_str(&format!("By {}.\n", d.citation));
    out.push_str(&format!("Hypothesis: {HYPOTHESIS}.\n"));
    if let Some(trace) = trace {
        match trace {
            Ok(t) => {
                out.push_str(&format!(
                    "Proof trace ({}):\n",
                    if t.passes() { "passes" } else { "FAILS" }
                ));
                for c in &t.checks {
                    out.push_str(&format!(
                        "  [{}] {}: {} ({})\n",
                        if c.holds { "ok" } else { "XX" },
                        c.name,
                        c.instantiated,
                        c.citation
                    ));
                }
            }
            Err(note) => out.push_str(&format!("Proof trace unavailable: {note}\n")),
        }
    }
    out
}

/// Fixed four-key verdict payload: verdict, kernel, citation, failed
/// (plus target_torsion where the verdict carries it).
pub fn verdict_json(v: &Verdict) -> Value {
    let raw = serde_json::to_value(v).expect("verdicts serialize");
    let mut obj = Map::new();
    obj.insert("verdict".into(), raw["verdict"].clone());
    obj.insert("kernel".into(), raw.get("kernel").cloned().unwrap_or(Value::Null));
    obj.insert("citation".into(), raw["citation"].clone());
    obj.insert("failed".into(), raw.get("failed").cloned().unwrap_or_else(|| json!([])));
    if let Some(tt) = raw.get("target_torsion") {
        obj.insert("target_torsion".into(), tt.clone());
    }
    Value::Object(obj)
}

pub fn verdict_text(v: &Verdict) -> String {
    format!("{v}\n")
}

pub fn group_json(g: &AbGroupFQ) -> Value {
    serde_json::to_value(g).expect("groups within u64 serialize")
}

pub fn group_text(g: &AbGroupFQ) -> String {
    format!("{g}\n")
}

fn factors_json(g: &FinAbGroup) -> Value {
    Value::Array(
        g.invariant_factors()
            .iter()
            .map(|d| match d.to_u64() {
                Some(v) => json!(v),
                None => json!(d.to_string()),
            })
            .collect(),
    )
}

pub fn prime_set_json(set: &PrimeSet) -> Value {
    match set {
        PrimeSet::All => json!("all"),
        PrimeSet::Explicit(ps) => json!(ps.iter().collect::<Vec<_>>()),
    }
}

pub fn completion_json(c: &ICompleteGroup) -> Value {
    let mut parts = Map::new();
    for (p, g) in c.finite_parts() {
        parts.insert(p.to_string(), factors_json(g));
    }
    json!({
        "prime_set": prime_set_json(c.prime_set()),
        "padic_rank": c.padic_rank(),
        "finite_parts": Value::Object(parts),
    })
}

pub fn completion_text(c: &ICompleteGroup) -> String {
    format!("{c}\n")
}

pub fn decomposition_json(d: &CompletionDecomposition) -> Value {
    json!({
        "kernel": group_json(&d.kernel),
        "completion": factors_json(&d.completion),
        "section_image": factors_json(&d.section_image),
    })
}

pub fn decomposition_text(d: &CompletionDecomposition) -> String {
    format!(
        "kernel (the I-divisible part): {}\ncompletion: {}\nsection image (the I-torsion part): {}\n",
        d.kernel, d.completion, d.section_image
    )
}

pub fn matrix_json(m: &Mat<BigInt>) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .iter()
        .map(|e| match e.to_i64() {
            Some(v) => json!(v),
            None => json!(e.to_string()),
        })
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn fraction_json(x: &RationalMod1) -> Value {
    json!({ "numerator": x.numerator(), "denominator": x.denominator() })
}

/// A domain outcome that is an error value, not a malformed invocation.
pub fn error_json(kind: &str, message: String) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}
