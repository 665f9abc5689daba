//! JSON encodings of core values.

use gtg_core::algebra::{AbelianGroup, Cyclotomic, Polynomial, Rational};
use gtg_core::certify::{Check, CertifyError, Outcome, SuiteReport, Verdict};
use gtg_core::groups::CosetTable;
use gtg_core::trace::TraceReport;
use gtg_core::words::word_stats;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Eight `num/den` strings in the basis 1, ζ, …, ζ⁷.
pub fn cyclotomic(c: &Cyclotomic) -> Value {
    Value::Array(c.coeffs().iter().map(|r| Value::String(r.to_fraction_string())).collect())
}

/// Coefficients in ascending degree.
pub fn polynomial(p: &Polynomial<Cyclotomic>) -> Value {
    Value::Array(p.coeffs().iter().map(cyclotomic).collect())
}

pub fn rational_polynomial(p: &Polynomial<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(|r| Value::String(r.to_fraction_string())).collect())
}

pub fn trace_report(r: &TraceReport) -> Value {
    let st = word_stats(&r.word);
    json!({
        "word": r.word.to_string(),
        "k": r.word.len(),
        "kappa": st.kappa,
        "variable": r.signature.variable(),
        "coefficients": polynomial(&r.tau),
        "degree": r.degree,
        "leading": cyclotomic(&r.leading),
        "constant": cyclotomic(&r.constant),
        "display": r.tau.to_string(),
    })
}

pub fn outcome(o: &Outcome) -> Value {
    match o {
        Outcome::FreeSubgroup(r) => json!({"kind": "FreeSubgroup", "rule": r.id()}),
        Outcome::VirtuallySoluble(r) => json!({"kind": "VirtuallySoluble", "rule": r.id()}),
        Outcome::WitnessRequired { resolved } => json!({"kind": "WitnessRequired", "resolved": resolved}),
        Outcome::EvenKDelegated => json!({"kind": "EvenKDelegated"}),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "input": v.input.to_string(),
        "word": v.word.to_string(),
        "outcome": outcome(&v.outcome),
        "display": v.outcome.to_string(),
        "trail": v.trail.iter().map(|t| json!({"check": t.check, "evidence": t.evidence})).collect::<Vec<_>>(),
    })
}

pub fn certify_error(e: &CertifyError) -> Value {
    let kind = match e {
        CertifyError::InternalContradiction(_) => "InternalContradiction",
        CertifyError::ProperPower => "ProperPower",
        CertifyError::Precondition(_) => "Precondition",
        CertifyError::Divisibility(_) => "Divisibility",
        CertifyError::Trace(_) => "Trace",
        CertifyError::Group(_) => "Group",
    };
    json!({"error": kind, "message": e.to_string()})
}

pub fn coset_table(t: &CosetTable) -> Value {
    json!(t.rows())
}

pub fn abelian_group(a: &AbelianGroup) -> Value {
    let torsion: Vec<Value> = a
        .torsion
        .iter()
        .map(|d| d.to_u64().map_or_else(|| Value::String(d.to_string()), Value::from))
        .collect();
    json!({"free_rank": a.free_rank, "torsion": torsion, "display": a.to_string()})
}

pub fn check(c: &Check) -> Value {
    json!({"name": c.name, "passed": c.passed, "detail": c.detail})
}

pub fn suite(s: &SuiteReport) -> Value {
    json!({"suite": s.suite, "passed": s.passed(), "checks": s.checks.iter().map(check).collect::<Vec<_>>()})
}
