//! Deciding whether a method has SCB `gamma` for a given `gamma > 0`.
//!
//! Order of work: stability of `rho + gamma sigma`, then an exact scan of
//! `mu_1..mu_H` (cheap, and any negative term settles the question), then
//! the closed form. A positive real dominant root gives a tail certificate
//! and the finite part up to `N0` is checked exactly. A dominant non-real
//! pair with nonzero coefficient makes the signs oscillate, so the method
//! is infeasible. Anything else falls back to a longer witness search.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{Interval, Precision, Rational};
use crate::error::{Error, Result};
use crate::methods::{Membership, Method};
use crate::recursion::{
    closed_form_at, closed_form_escalating, tail_certificate, ClosedForm, Dominance, ExactSeq, GammaPoint,
    TailCertificate,
};

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// exact scan length before the closed form is consulted
    pub horizon: usize,
    pub precision: Precision,
    pub cap: Precision,
    /// last index examined when searching for a witness past the horizon
    pub witness_cap: usize,
    /// the tail bound must fall below `margin` times the lead coefficient
    pub margin: Rational,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions {
            horizon: 1000,
            precision: Precision::default_start(),
            cap: Precision::default_cap(),
            witness_cap: 1 << 16,
            margin: Rational::from_integer(1.into()),
        }
    }
}

/// Ties between root moduli cannot be broken by precision, so the
/// dominance search stops well below the general cap.
const DOMINANCE_CAP_DIGITS: u32 = 2048;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FeasibleCert {
    /// `mu_n >= 0` checked exactly for `n <= checked_to`, and the tail
    /// certificate covers `n >= tail.n_start <= checked_to + 1`
    Tail { checked_to: usize, tail: TailCertificate, precision_digits: u32 },
    /// `mu_n = 0` for `n >= from`, and the terms before are non-negative
    EventuallyZero { from: usize, checked_to: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexDominanceCert {
    pub root: String,
    #[serde(serialize_with = "ser_rat")]
    pub modulus_lo: Rational,
    /// largest modulus bound among the remaining roots
    #[serde(serialize_with = "ser_rat")]
    pub others_hi: Rational,
    pub coefficient: String,
    pub precision_digits: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum InfeasibleCert {
    /// `-gamma` is not in the interior of the stability region
    Stability { detail: String },
    /// `mu_n < 0`, decided in exact arithmetic
    Witness { n: usize, value: String, negatives: Vec<usize>, scanned_to: usize },
    ComplexDominance(ComplexDominanceCert),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Verdict {
    Feasible(FeasibleCert),
    Infeasible(InfeasibleCert),
    Inconclusive { reason: String, checked_to: usize },
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Verdict::Infeasible(_))
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Feasible(_) => "Feasible",
            Verdict::Infeasible(_) => "Infeasible",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn mechanism(&self) -> &'static str {
        match self {
            Verdict::Feasible(FeasibleCert::Tail { .. }) => "tail-certificate",
            Verdict::Feasible(FeasibleCert::EventuallyZero { .. }) => "eventually-zero",
            Verdict::Infeasible(InfeasibleCert::Stability { .. }) => "stability",
            Verdict::Infeasible(InfeasibleCert::Witness { .. }) => "negative-term",
            Verdict::Infeasible(InfeasibleCert::ComplexDominance(_)) => "complex-dominance",
            Verdict::Inconclusive { .. } => "none",
        }
    }
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// 20-digit enclosure of `X / C^(n+1)` for display.
fn approx_value(seq: &ExactSeq, n: usize, x: &num_bigint::BigInt) -> String {
    let p = 96;
    let den = num_traits::pow(seq.base().clone(), n + 1);
    let v = Interval::from_int(x.clone(), p).div(&Interval::from_int(den, p)).expect("positive base");
    crate::arith::float::decimal_string(&v.midpoint().to_rational(), 20)
}

/// Exact scan state shared by the phases of [`check_scb`].
struct Scanner {
    seq: ExactSeq,
    negatives: Vec<usize>,
    first_value: Option<String>,
    scanned_to: usize,
}

const MAX_LISTED: usize = 1000;

impl Scanner {
    fn new(m: &Method, gamma: &Rational) -> Result<Scanner> {
        let mut seq = ExactSeq::new(m, gamma)?;
        seq.next_term(); // mu_0
        Ok(Scanner { seq, negatives: Vec::new(), first_value: None, scanned_to: 0 })
    }

    /// Scan through index `to`; with `stop_first` return at the first
    /// negative term.
    fn scan_to(&mut self, to: usize, stop_first: bool) {
        while self.seq.position() <= to {
            let t = self.seq.next_term();
            self.scanned_to = t.n;
            if t.x.is_negative() {
                if self.first_value.is_none() {
                    self.first_value = Some(approx_value(&self.seq, t.n, &t.x));
                }
                if self.negatives.len() < MAX_LISTED {
                    self.negatives.push(t.n);
                }
                if stop_first {
                    return;
                }
            }
        }
    }

    fn witness(&self) -> Option<Verdict> {
        let n = *self.negatives.first()?;
        Some(Verdict::Infeasible(InfeasibleCert::Witness {
            n,
            value: self.first_value.clone().unwrap_or_default(),
            negatives: self.negatives.clone(),
            scanned_to: self.scanned_to,
        }))
    }
}

pub(crate) fn complex_dominance_cert(cf: &ClosedForm) -> Option<ComplexDominanceCert> {
    let Dominance::ComplexPair(j) = cf.dominance() else { return None };
    if !cf.dominant_coefficient_nonzero(j) {
        return None;
    }
    let term = &cf.terms[j];
    let partner = term.conjugate;
    let others_hi = cf
        .terms
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j && Some(i) != partner)
        .map(|(_, t)| t.modulus().hi().to_rational())
        .max()
        .unwrap_or_else(Rational::zero);
    Some(ComplexDominanceCert {
        root: term.root.enclosure.display_digits(20),
        modulus_lo: term.modulus().lo().to_rational(),
        others_hi,
        coefficient: term.coeffs[0].display_digits(20),
        precision_digits: (cf.prec as f64 / std::f64::consts::LOG2_10).floor() as u32,
    })
}

/// Closed form at a rational `gamma` with precision raised until the
/// dominance class is decided (or the dominance cap is hit).
pub(crate) fn decided_closed_form(m: &Method, gamma: &Rational, opts: &CheckOptions) -> Result<ClosedForm> {
    let g = GammaPoint::Rational(gamma.clone());
    let mut cf = closed_form_escalating(m, &g, opts.precision, opts.cap, true)?;
    let dom_cap = Precision::digits(DOMINANCE_CAP_DIGITS.min(opts.cap.get()).max(opts.precision.get()))?;
    let mut prec = Precision::digits(((cf.prec as f64) / std::f64::consts::LOG2_10).ceil() as u32)?;
    while cf.dominance() == Dominance::Undetermined {
        let Some(p) = prec.escalate(dom_cap) else { break };
        prec = p;
        match closed_form_at(m, &g, prec.bits(), true) {
            Ok(c) => cf = c,
            Err(Error::Inconclusive(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(cf)
}

pub fn check_scb(m: &Method, gamma: &Rational, opts: &CheckOptions) -> Result<Verdict> {
    if !gamma.is_positive() {
        return Err(Error::NonPositiveGamma);
    }
    if m.in_stability_interior(&-gamma) == Membership::No {
        return Ok(Verdict::Infeasible(InfeasibleCert::Stability {
            detail: format!("rho + {gamma} sigma has a root on or outside the unit circle"),
        }));
    }
    let horizon = opts.horizon.max(m.k + 1);
    let mut sc = Scanner::new(m, gamma)?;
    sc.scan_to(horizon, false);
    if let Some(v) = sc.witness() {
        return Ok(v);
    }

    let cf = match decided_closed_form(m, gamma, opts) {
        Ok(cf) => cf,
        Err(e @ (Error::PrecisionExhausted { .. } | Error::ClosedFormUnavailable(_))) => {
            return Ok(Verdict::Inconclusive { reason: e.to_string(), checked_to: sc.scanned_to });
        }
        Err(e) => return Err(e),
    };

    match cf.dominance() {
        Dominance::NoRoots => {
            return Ok(Verdict::Feasible(FeasibleCert::EventuallyZero { from: cf.shift, checked_to: sc.scanned_to }));
        }
        Dominance::PositiveReal(_) => match tail_certificate(&cf, &opts.margin) {
            Ok(tail) => {
                if tail.n_start > sc.scanned_to + 1 {
                    sc.scan_to(tail.n_start - 1, true);
                    if let Some(v) = sc.witness() {
                        return Ok(v);
                    }
                }
                let precision_digits = (cf.prec as f64 / std::f64::consts::LOG2_10).floor() as u32;
                return Ok(Verdict::Feasible(FeasibleCert::Tail { checked_to: sc.scanned_to, tail, precision_digits }));
            }
            // a negative dominant coefficient makes the tail negative; the
            // witness search below finds it
            Err(_) => {}
        },
        Dominance::ComplexPair(_) => {
            if let Some(c) = complex_dominance_cert(&cf) {
                return Ok(Verdict::Infeasible(InfeasibleCert::ComplexDominance(c)));
            }
        }
        Dominance::NegativeReal(_) | Dominance::Undetermined => {}
    }

    let cap = opts.witness_cap.max(sc.scanned_to);
    sc.scan_to(cap, true);
    if let Some(v) = sc.witness() {
        return Ok(v);
    }
    Ok(Verdict::Inconclusive {
        reason: format!("no certificate; mu_n >= 0 for n <= {}", sc.scanned_to),
        checked_to: sc.scanned_to,
    })
}

/// Infeasibility through a dominant complex pair, if that is what the
/// closed form at `gamma` shows.
pub fn infeasible_by_complex_dominance(
    m: &Method,
    gamma: &Rational,
    opts: &CheckOptions,
) -> Result<Option<ComplexDominanceCert>> {
    match decided_closed_form(m, gamma, opts) {
        Ok(cf) => Ok(complex_dominance_cert(&cf)),
        Err(Error::PrecisionExhausted { .. } | Error::ClosedFormUnavailable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::methods::catalog;

    fn check(name: &str, g: Rational) -> Verdict {
        check_scb(&catalog(name).unwrap(), &g, &CheckOptions::default()).unwrap()
    }

    #[test]
    fn bdf2_at_half_feasible() {
        assert!(check("bdf2", rat(1, 2)).is_feasible());
        match check("bdf2", rat(51, 100)) {
            Verdict::Infeasible(InfeasibleCert::ComplexDominance(_)) | Verdict::Infeasible(InfeasibleCert::Witness { .. }) => {}
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn ab2_sides() {
        assert!(check("ab2", rat(4, 9)).is_feasible());
        match check("ab2", rat(1, 2)) {
            Verdict::Infeasible(InfeasibleCert::Witness { n, .. }) => assert_eq!(n, 2),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn ab1_at_one_eventually_zero() {
        assert!(matches!(check("ab1", rat(1, 1)), Verdict::Feasible(FeasibleCert::EventuallyZero { .. })));
    }

    #[test]
    fn bdf3_near_bound() {
        match check("bdf3", rat(83, 100)) {
            Verdict::Feasible(FeasibleCert::Tail { tail, .. }) => assert!(tail.n_start > 20),
            v => panic!("{v:?}"),
        }
        match check("bdf3", rat(832, 1000)) {
            Verdict::Infeasible(InfeasibleCert::Witness { n, .. }) => assert_eq!(n, 6),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn bdf4_past_bound_by_dominance() {
        match check("bdf4", rat(48625, 100000)) {
            Verdict::Infeasible(InfeasibleCert::ComplexDominance(c)) => assert!(c.modulus_lo > c.others_hi),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn unstable_gamma() {
        // AB1 is unstable beyond gamma = 2
        assert!(matches!(check("ab1", rat(3, 1)), Verdict::Infeasible(InfeasibleCert::Stability { .. })));
        assert!(check_scb(&catalog("ab1").unwrap(), &rat(0, 1), &CheckOptions::default()).is_err());
    }
}
