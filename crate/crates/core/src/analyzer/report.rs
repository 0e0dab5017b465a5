//! Machine-readable reports.

use std::time::Duration;

use serde_json::{json, Value};

use super::bounds::SupOptions;
use super::check::{CheckOptions, FeasibleCert, InfeasibleCert, Verdict};
use super::exists::Existence;
use super::gamma_sup::{GammaSup, GammaSupResult};
use crate::arith::{float::decimal_string, Rational};
use crate::methods::{known_value, Family, KnownValue, Method};

pub const SCHEMA_VERSION: u32 = 1;

fn timing(elapsed: Duration) -> Value {
    json!({ "total_ms": elapsed.as_secs_f64() * 1e3 })
}

fn horizon_of(v: &Verdict) -> usize {
    match v {
        Verdict::Feasible(FeasibleCert::Tail { checked_to, .. })
        | Verdict::Feasible(FeasibleCert::EventuallyZero { checked_to, .. })
        | Verdict::Inconclusive { checked_to, .. } => *checked_to,
        Verdict::Infeasible(InfeasibleCert::Witness { scanned_to, .. }) => *scanned_to,
        Verdict::Infeasible(_) => 0,
    }
}

fn precision_of(v: &Verdict, opts: &CheckOptions) -> u32 {
    match v {
        Verdict::Feasible(FeasibleCert::Tail { precision_digits, .. }) => *precision_digits,
        Verdict::Infeasible(InfeasibleCert::ComplexDominance(c)) => c.precision_digits,
        _ => opts.precision.get(),
    }
}

fn evidence(v: &Verdict) -> Value {
    match v {
        Verdict::Feasible(c) => serde_json::to_value(c).expect("serializable"),
        Verdict::Infeasible(c) => serde_json::to_value(c).expect("serializable"),
        Verdict::Inconclusive { reason, checked_to } => {
            json!({ "type": "inconclusive", "reason": reason, "checked_to": checked_to })
        }
    }
}

pub fn check_report(m: &Method, gamma: &Rational, v: &Verdict, opts: &CheckOptions, elapsed: Duration) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "method": m.name,
        "gamma": gamma.to_string(),
        "status": v.status(),
        "mechanism": v.mechanism(),
        "evidence": evidence(v),
        "precision_used": precision_of(v, opts),
        "horizon_used": horizon_of(v),
        "timings": timing(elapsed),
    })
}

pub fn gamma_sup_report(m: &Method, r: &GammaSupResult, opts: &SupOptions, elapsed: Duration) -> Value {
    let mut out = json!({
        "schema_version": SCHEMA_VERSION,
        "method": m.name,
        "status": r.result.label(),
        "candidates": serde_json::to_value(&r.candidates).expect("serializable"),
        "precision_used": opts.check.precision.get(),
        "horizon_used": opts.check.horizon,
        "timings": timing(elapsed),
    });
    let obj = out.as_object_mut().expect("object");
    match &r.result {
        GammaSup::Enclosure { lo, hi, mechanism, lo_cert, hi_cert } => {
            let mid = (lo + hi) / Rational::from_integer(2.into());
            obj.insert(
                "enclosure".into(),
                json!({
                    "lo": lo.to_string(),
                    "hi": hi.to_string(),
                    "lo_decimal": decimal_string(lo, 15),
                    "hi_decimal": decimal_string(hi, 15),
                    "approx": decimal_string(&mid, 15),
                }),
            );
            obj.insert("mechanism".into(), json!(mechanism.label()));
            obj.insert(
                "evidence".into(),
                json!({
                    "type": "bracket",
                    "lo": serde_json::to_value(lo_cert).expect("serializable"),
                    "hi": serde_json::to_value(hi_cert).expect("serializable"),
                }),
            );
        }
        other => {
            obj.insert("mechanism".into(), json!(other.label()));
            obj.insert("evidence".into(), serde_json::to_value(other).expect("serializable"));
        }
    }
    if let Some(pc) = &r.poly_check {
        obj.insert("poly_check".into(), serde_json::to_value(pc).expect("serializable"));
    }
    obj.insert("reference".into(), reference(m));
    out
}

fn reference(m: &Method) -> Value {
    let known = if m.family == Family::Custom { None } else { known_value(&m.name) };
    match known {
        Some(KnownValue::Exact(q)) => json!(q.to_string()),
        Some(KnownValue::RootOf { approx, .. }) => json!(approx),
        Some(KnownValue::Unbounded) => json!("unbounded"),
        Some(KnownValue::NoneExists) => json!("none"),
        None => json!("no reference value"),
    }
}

pub fn exists_report(m: &Method, e: &Existence, elapsed: Duration) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "method": m.name,
        "status": e.label(),
        "evidence": serde_json::to_value(e).expect("serializable"),
        "timings": timing(elapsed),
    })
}
