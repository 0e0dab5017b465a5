use std::time::Instant;

use serde_json::{json, Value};

use scb_core::analyzer::report::{check_report, exists_report, gamma_sup_report, SCHEMA_VERSION};
use scb_core::analyzer::{check_scb, gamma_sup as run_gamma_sup, scb_exists, CheckOptions, Existence, GammaSup, SupOptions, Verdict};
use scb_core::arith::float::decimal_string;
use scb_core::arith::{parse_rational, Precision, Rational};
use scb_core::methods::{catalog as lookup, known_value, KnownValue, Method};
use scb_core::recursion::mu_prefix;

use crate::output::{CliError, CliResult, Report, Table};
use crate::{MethodArg, PrecisionArgs};

const MAX_SAMPLES: usize = 1_000_000;

pub fn load_method(arg: &MethodArg) -> CliResult<Method> {
    match (&arg.method, &arg.custom) {
        (Some(name), _) => Ok(lookup(name)?),
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(Method::from_json(&s)?)
        }
        (None, None) => Err(CliError::Usage("one of --method or --custom is required".into())),
    }
}

pub fn check_options(p: &PrecisionArgs) -> CliResult<CheckOptions> {
    let precision = Precision::digits(p.precision)?;
    let cap = Precision::digits(p.precision_cap)?;
    if cap < precision {
        return Err(CliError::Usage(format!("--precision-cap {} is below --precision {}", cap.get(), precision.get())));
    }
    Ok(CheckOptions { horizon: p.horizon, precision, cap, ..CheckOptions::default() })
}

fn positive(s: &str, what: &str) -> CliResult<Rational> {
    let q = parse_rational(s)?;
    if q <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("{what} must be positive, got {s}")));
    }
    Ok(q)
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Feasible(_) => 0,
        Verdict::Infeasible(_) => 1,
        Verdict::Inconclusive { .. } => 2,
    }
}

fn existence_code(e: &Existence) -> u8 {
    match e {
        Existence::Exists { .. } => 0,
        Existence::NotExists { .. } => 1,
        Existence::Inconclusive { .. } => 2,
    }
}

pub fn sup_code(g: &GammaSup) -> u8 {
    match g {
        GammaSup::Enclosure { .. } | GammaSup::Unbounded { .. } => 0,
        GammaSup::NonePositive { .. } => 1,
        GammaSup::Inconclusive { .. } => 2,
    }
}

fn known_json(name: &str) -> Value {
    match known_value(name) {
        None => Value::Null,
        Some(KnownValue::Exact(q)) => json!({ "kind": "exact", "value": q.to_string() }),
        Some(KnownValue::RootOf { approx, selector, poly }) => {
            json!({ "kind": "root_of", "approx": approx, "selector": selector, "poly": poly.to_string() })
        }
        Some(KnownValue::Unbounded) => json!({ "kind": "unbounded" }),
        Some(KnownValue::NoneExists) => json!({ "kind": "none" }),
    }
}

pub fn catalog() -> CliResult<Report> {
    let methods = scb_core::methods::catalog::all();
    let mut table = Table::new(&["name", "family", "k", "a", "b", "known"]);
    let mut list = Vec::new();
    for m in &methods {
        let a: Vec<String> = m.a.iter().map(|x| x.to_string()).collect();
        let b: Vec<String> = m.b.iter().map(|x| x.to_string()).collect();
        let known = known_json(&m.name);
        let known_str = match &known {
            Value::Object(o) => o
                .get("value")
                .or_else(|| o.get("approx"))
                .or_else(|| o.get("kind"))
                .and_then(|v| v.as_str())
                .unwrap_or("")
                .to_string(),
            _ => String::new(),
        };
        table.push(vec![m.name.clone(), format!("{:?}", m.family), m.k.to_string(), a.join(" "), b.join(" "), known_str]);
        list.push(json!({ "name": m.name, "family": m.family, "k": m.k, "a": a, "b": b, "known_gamma_sup": known }));
    }
    Ok(Report { json: json!({ "schema_version": SCHEMA_VERSION, "methods": list }), table: Some(table), code: 0 })
}

pub fn check(arg: &MethodArg, gamma: &str, p: &PrecisionArgs) -> CliResult<Report> {
    let m = load_method(arg)?;
    let g = positive(gamma, "--gamma")?;
    let opts = check_options(p)?;
    let t = Instant::now();
    let v = check_scb(&m, &g, &opts)?;
    let json = check_report(&m, &g, &v, &opts, t.elapsed());
    Ok(Report { json, table: None, code: verdict_code(&v) })
}

pub fn gamma_sup(arg: &MethodArg, tol: &str, p: &PrecisionArgs) -> CliResult<Report> {
    let m = load_method(arg)?;
    let tol = positive(tol, "--tol")?;
    let opts = SupOptions { tol, check: check_options(p)?, ..SupOptions::default() };
    let t = Instant::now();
    let r = run_gamma_sup(&m, &opts)?;
    let json = gamma_sup_report(&m, &r, &opts, t.elapsed());
    Ok(Report { json, table: None, code: sup_code(&r.result) })
}

pub fn tau(arg: &MethodArg, n: usize, p: &PrecisionArgs) -> CliResult<Report> {
    let m = load_method(arg)?;
    let opts = check_options(p)?;
    let t = Instant::now();
    let tau = m.tau_prefix(n);
    let e = scb_exists(&m, &opts)?;
    let mut json = exists_report(&m, &e, t.elapsed());
    let mut table = Table::new(&["n", "tau", "decimal"]);
    let mut values = Vec::new();
    for (i, q) in tau.iter().enumerate().skip(1) {
        table.push(vec![i.to_string(), q.to_string(), decimal_string(q, 15)]);
        values.push(json!({ "n": i, "tau": q.to_string(), "decimal": decimal_string(q, 15) }));
    }
    let obj = json.as_object_mut().expect("object");
    obj.insert("n0".into(), json!(m.n0()));
    obj.insert("tau".into(), Value::Array(values));
    Ok(Report { json, table: Some(table), code: existence_code(&e) })
}

pub fn exists(arg: &MethodArg, p: &PrecisionArgs) -> CliResult<Report> {
    let m = load_method(arg)?;
    let opts = check_options(p)?;
    let t = Instant::now();
    let e = scb_exists(&m, &opts)?;
    Ok(Report { json: exists_report(&m, &e, t.elapsed()), table: None, code: existence_code(&e) })
}

/// `a..b` inclusive, or a single index.
pub fn parse_index_range(s: &str) -> CliResult<(usize, usize)> {
    let err = || CliError::Usage(format!("bad index range {s:?}, expected a..b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let a: usize = a.parse().map_err(|_| err())?;
    let b: usize = b.parse().map_err(|_| err())?;
    if a > b {
        return Err(CliError::Usage(format!("empty index range {s:?}")));
    }
    Ok((a, b))
}

/// `start:end:step`, endpoints included when hit exactly.
pub fn parse_grid(s: &str) -> CliResult<Vec<Rational>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, h] = parts.as_slice() else {
        return Err(CliError::Usage(format!("bad gamma grid {s:?}, expected start:end:step")));
    };
    let (a, b, h) = (parse_rational(a)?, parse_rational(b)?, parse_rational(h)?);
    if h <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage("grid step must be positive".into()));
    }
    if a < Rational::from_integer(0.into()) {
        return Err(CliError::Usage("grid must start at gamma >= 0".into()));
    }
    if a > b {
        return Err(CliError::Usage(format!("empty gamma grid {s:?}")));
    }
    let count = ((&b - &a) / &h).floor().to_integer();
    let count: usize = count
        .try_into()
        .ok()
        .filter(|c| *c < MAX_SAMPLES)
        .ok_or_else(|| CliError::Usage(format!("gamma grid {s:?} has too many points")))?;
    Ok((0..=count).map(|i| &a + &h * Rational::from_integer(i.into())).collect())
}

pub fn mu_curve(arg: &MethodArg, n: &str, gamma: &str, mark: Option<&str>) -> CliResult<Report> {
    let m = load_method(arg)?;
    let (n_lo, n_hi) = parse_index_range(n)?;
    let grid = parse_grid(gamma)?;
    let mark = mark.map(parse_rational).transpose()?;
    let mut table = Table::new(&["gamma", "n", "value", "decimal", "kind"]);
    let points = grid.iter().map(|g| (g, "sample")).chain(mark.iter().map(|g| (g, "marker")));
    for (g, kind) in points {
        let mu = mu_prefix(&m, g, n_hi)?;
        for (i, v) in mu.iter().enumerate().skip(n_lo) {
            table.push(vec![g.to_string(), i.to_string(), v.to_string(), decimal_string(v, 12), kind.to_string()]);
        }
    }
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "method": m.name,
        "n": [n_lo, n_hi],
        "rows": table.rows.iter().map(|r| json!({
            "gamma": r[0], "n": r[1].parse::<usize>().unwrap_or(0), "value": r[2], "decimal": r[3], "kind": r[4]
        })).collect::<Vec<_>>(),
    });
    Ok(Report { json, table: Some(table), code: 0 })
}
