//! Recompute the reference tables and compare row by row.

use std::thread;

use clap::ValueEnum;
use serde_json::{json, Value};

use scb_core::analyzer::report::SCHEMA_VERSION;
use scb_core::analyzer::{gamma_sup, scb_exists, CheckOptions, Existence, GammaSup, SupOptions};
use scb_core::arith::float::decimal_string;
use scb_core::arith::{parse_rational, rat, Precision, Rational};
use scb_core::methods::{catalog, known_value, KnownValue};
use scb_core::recursion::{exact_sign_scan, interval_sign_scan};

use crate::output::{CliResult, Report, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// optimal SCB of BDF1..BDF6
    BdfTable,
    /// optimal SCB of AB1..AB4
    AbTable,
    /// positivity of tau_n for EBDF3..EBDF5
    EbdfExistence,
    /// negative terms of BDF4 near its optimal SCB
    Bdf4Witnesses,
}

/// Negative `mu_n`, `n <= 27000`, of BDF4 at `gamma = 0.48625`.
pub const BDF4_GAMMA: &str = "48625/100000";
pub const BDF4_HORIZON: usize = 27_000;
pub const BDF4_NEGATIVES: [usize; 6] = [26814, 26875, 26886, 26936, 26947, 26997];
pub const BDF4_DIGITS_OK: u32 = 16_000;
pub const BDF4_DIGITS_SHORT: u32 = 15_000;

struct Row {
    item: String,
    expected: String,
    computed: String,
    detail: String,
    pass: bool,
}

pub fn run(target: Target) -> CliResult<Report> {
    let rows = match target {
        Target::BdfTable => parallel(&["bdf1", "bdf2", "bdf3", "bdf4", "bdf5", "bdf6"], sup_row)?,
        Target::AbTable => parallel(&["ab1", "ab2", "ab3", "ab4"], sup_row)?,
        Target::EbdfExistence => parallel(&["ebdf3", "ebdf4", "ebdf5"], existence_row)?,
        Target::Bdf4Witnesses => parallel(&["exact", "interval-ok", "interval-short"], witness_row)?,
    };
    let all_pass = rows.iter().all(|r| r.pass);
    let mut table = Table::new(&["item", "expected", "computed", "detail", "pass"]);
    for r in &rows {
        table.push(vec![r.item.clone(), r.expected.clone(), r.computed.clone(), r.detail.clone(), r.pass.to_string()]);
    }
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "target": target.to_possible_value().map(|v| v.get_name().to_string()),
        "status": if all_pass { "Pass" } else { "Fail" },
        "rows": rows.iter().map(|r| json!({
            "item": r.item, "expected": r.expected, "computed": r.computed, "detail": r.detail, "pass": r.pass
        })).collect::<Vec<Value>>(),
    });
    Ok(Report { json, table: Some(table), code: if all_pass { 0 } else { 1 } })
}

/// Run independent rows on their own threads; output keeps input order.
fn parallel(items: &[&str], f: fn(&str) -> CliResult<Row>) -> CliResult<Vec<Row>> {
    thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|it| s.spawn(move || f(it))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// One unit in the last printed place, so rounded and truncated
/// reference digits both match.
fn printed_tolerance(approx: &str) -> Rational {
    let places = approx.split_once('.').map(|(_, f)| f.len()).unwrap_or(0);
    Rational::new(1.into(), num_traits::pow(10.into(), places))
}

fn sup_row(name: &str) -> CliResult<Row> {
    let m = catalog(name)?;
    let r = gamma_sup(&m, &SupOptions::default())?;
    let (expected, pass) = match (known_value(name), &r.result) {
        (Some(KnownValue::Exact(v)), GammaSup::Enclosure { lo, hi, .. }) => (v.to_string(), lo <= &v && &v <= hi),
        (Some(KnownValue::RootOf { approx, .. }), GammaSup::Enclosure { lo, hi, .. }) => {
            let a = parse_rational(approx)?;
            let tol = printed_tolerance(approx);
            let near = &(lo - &tol) <= &a && &a <= &(hi + &tol);
            let confirmed = r.poly_check.as_ref().is_some_and(|p| p.confirmed());
            (approx.to_string(), near && confirmed)
        }
        (Some(KnownValue::Unbounded), GammaSup::Unbounded { .. }) => ("unbounded".into(), true),
        (Some(KnownValue::NoneExists), GammaSup::NonePositive { .. }) => ("none".into(), true),
        (Some(KnownValue::Exact(v)), _) => (v.to_string(), false),
        (Some(KnownValue::RootOf { approx, .. }), _) => (approx.to_string(), false),
        (Some(KnownValue::Unbounded), _) => ("unbounded".into(), false),
        (Some(KnownValue::NoneExists), _) => ("none".into(), false),
        (None, _) => ("?".into(), false),
    };
    let (computed, detail) = match &r.result {
        GammaSup::Enclosure { lo, hi, mechanism, .. } => {
            let poly = match &r.poly_check {
                Some(p) if p.confirmed() => ", poly confirmed",
                Some(_) => ", poly refuted",
                None => "",
            };
            (format!("[{}, {}]", decimal_string(lo, 12), decimal_string(hi, 12)), format!("{}{poly}", mechanism.label()))
        }
        GammaSup::NonePositive { n, tau } => ("none".into(), format!("tau_{n} = {tau}")),
        GammaSup::Unbounded { ladder_top } => ("unbounded".into(), format!("feasible up to 2^{ladder_top}")),
        GammaSup::Inconclusive { reason, .. } => ("inconclusive".into(), reason.clone()),
    };
    Ok(Row { item: name.into(), expected, computed, detail, pass })
}

fn existence_row(name: &str) -> CliResult<Row> {
    let m = catalog(name)?;
    let e = scb_exists(&m, &CheckOptions::default())?;
    let (detail, pass) = match &e {
        Existence::Exists { n0, checked_to, tail, .. } => (
            format!(
                "n0={n0}, tail from n={}, residual {}, checked to {checked_to}",
                tail.n_start,
                decimal_string(&tail.residual, 6)
            ),
            tail.residual <= rat(9, 10),
        ),
        Existence::NotExists { n, tau, .. } => (format!("tau_{n} = {tau}"), false),
        Existence::Inconclusive { reason } => (reason.clone(), false),
    };
    Ok(Row { item: name.into(), expected: "Exists".into(), computed: e.label().into(), detail, pass })
}

fn witness_row(which: &str) -> CliResult<Row> {
    let m = catalog("bdf4")?;
    let g = parse_rational(BDF4_GAMMA)?;
    let expected: Vec<usize> = BDF4_NEGATIVES.to_vec();
    let list = |v: &[usize]| v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" ");
    let row = match which {
        "exact" => {
            let s = exact_sign_scan(&m, &g, 1, BDF4_HORIZON, None)?;
            Row {
                item: "exact arithmetic".into(),
                expected: list(&expected),
                computed: list(&s.negatives),
                detail: format!("n <= {}", s.scanned_to),
                pass: s.negatives == expected,
            }
        }
        "interval-ok" => {
            let s = interval_sign_scan(&m, &g, 1, BDF4_HORIZON, Precision::digits(BDF4_DIGITS_OK)?)?;
            Row {
                item: format!("{BDF4_DIGITS_OK} digits"),
                expected: list(&expected),
                computed: list(&s.negatives),
                detail: format!("{} undecided", s.unknown_count),
                pass: s.complete() && s.negatives == expected,
            }
        }
        _ => {
            let s = interval_sign_scan(&m, &g, 1, BDF4_HORIZON, Precision::digits(BDF4_DIGITS_SHORT)?)?;
            Row {
                item: format!("{BDF4_DIGITS_SHORT} digits"),
                expected: "some signs undecided".into(),
                computed: format!("{} undecided", s.unknown_count),
                detail: s.first_unknown.map(|n| format!("first at n={n}")).unwrap_or_default(),
                pass: s.unknown_count > 0,
            }
        }
    };
    Ok(row)
}
