//! Certified enclosure of the optimal SCB `gamma_sup`.
//!
//! Feasibility is monotone: SCB `g0` implies SCB `g` for `0 < g <= g0`. So a
//! feasible `lo` and an infeasible `hi` bracket `gamma_sup`. The upper
//! candidates come from [`super::bounds`]; if the smallest candidate is
//! sharp its lower end is feasible and the enclosure is immediate,
//! otherwise the bracket is closed by bisection on [`check_scb`].

use std::cmp::Ordering;

use num_traits::Signed;
use serde::Serialize;

use super::bounds::{crossover, simple_root_bound, verify_against_poly, Crossover, PolyCheck, SupOptions};
use super::check::{check_scb, infeasible_by_complex_dominance, FeasibleCert, InfeasibleCert, Verdict};
use super::exists::{scb_exists, Existence};
use crate::arith::{rat, rational::pow2, Rational};
use crate::error::Result;
use crate::methods::{known_value, KnownValue, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Mechanism {
    /// a simple root of `mu_n` as a function of `gamma`
    SimpleRoot { n: usize },
    /// switch of the dominant root to a complex pair
    Crossover,
    /// neither candidate is sharp; found by bisection
    Bracketed,
}

impl Mechanism {
    pub fn label(&self) -> String {
        match self {
            Mechanism::SimpleRoot { n } => format!("SimpleRoot(n={n})"),
            Mechanism::Crossover => "Crossover".into(),
            Mechanism::Bracketed => "Bracketed".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum GammaSup {
    Enclosure {
        #[serde(serialize_with = "ser_rat")]
        lo: Rational,
        #[serde(serialize_with = "ser_rat")]
        hi: Rational,
        mechanism: Mechanism,
        lo_cert: FeasibleCert,
        hi_cert: InfeasibleCert,
    },
    /// feasible on the whole ladder `1, 2, ..., 2^20` and no candidate bound
    Unbounded { ladder_top: u32 },
    NonePositive { n: usize, #[serde(serialize_with = "ser_rat")] tau: Rational },
    Inconclusive {
        reason: String,
        #[serde(serialize_with = "ser_rat")]
        lo: Rational,
        #[serde(serialize_with = "ser_rat")]
        hi: Rational,
    },
}

impl GammaSup {
    pub fn label(&self) -> &'static str {
        match self {
            GammaSup::Enclosure { .. } => "Enclosure",
            GammaSup::Unbounded { .. } => "Unbounded",
            GammaSup::NonePositive { .. } => "NonePositive",
            GammaSup::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn bounds(&self) -> Option<(&Rational, &Rational)> {
        match self {
            GammaSup::Enclosure { lo, hi, .. } => Some((lo, hi)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidates {
    /// `(lo, hi, n)`
    pub simple_root: Option<(String, String, usize)>,
    pub crossover: Option<Crossover>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaSupResult {
    pub result: GammaSup,
    pub candidates: Candidates,
    /// check against the known defining polynomial, when the method has one
    pub poly_check: Option<PolyCheck>,
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

const LADDER_TOP: u32 = 20;

pub fn gamma_sup(m: &Method, opts: &SupOptions) -> Result<GammaSupResult> {
    let quarter = &opts.tol * rat(1, 4);
    let mut candidates = Candidates { simple_root: None, crossover: None };

    if let Existence::NotExists { n, tau, .. } = scb_exists(m, &opts.check)? {
        return Ok(GammaSupResult { result: GammaSup::NonePositive { n, tau }, candidates, poly_check: None });
    }

    let sr = simple_root_bound(m, opts.n_scan).map(|b| (b.root.refine(&quarter), b.n));
    let co = crossover(m, &quarter)?;
    if let Some((r, n)) = &sr {
        candidates.simple_root = Some((r.lo.to_string(), r.hi.to_string(), *n));
    }
    candidates.crossover = co.clone();

    // (lo, hi, mechanism) of the smallest candidate
    let pick = match (&sr, &co) {
        (None, None) => None,
        (Some((r, n)), None) => Some((r.lo.clone(), r.hi.clone(), Mechanism::SimpleRoot { n: *n })),
        (None, Some(c)) => Some((c.lo.clone(), c.hi.clone(), Mechanism::Crossover)),
        (Some((r, n)), Some(c)) => {
            if r.cmp_rational(&c.lo) != Ordering::Greater {
                Some((r.lo.clone(), r.hi.clone(), Mechanism::SimpleRoot { n: *n }))
            } else {
                Some((c.lo.clone(), c.hi.clone(), Mechanism::Crossover))
            }
        }
    };

    let result = match pick {
        None => unbounded_or_bracket(m, opts)?,
        Some((lo, hi, mech)) => {
            // an exact rational root: step just above it
            let hi = if lo == hi { &hi + &quarter } else { hi };
            enclose(m, lo, hi, mech, opts)?
        }
    };

    let poly_check = match (known_value(&m.name), result.bounds()) {
        (Some(KnownValue::RootOf { poly, selector, .. }), Some((lo, hi))) => {
            Some(verify_against_poly(lo, hi, &poly, selector))
        }
        _ => None,
    };
    Ok(GammaSupResult { result, candidates, poly_check })
}

fn hi_certificate(m: &Method, hi: &Rational, mech: Mechanism, opts: &SupOptions) -> Result<Option<InfeasibleCert>> {
    if mech == Mechanism::Crossover {
        if let Some(c) = infeasible_by_complex_dominance(m, hi, &opts.check)? {
            return Ok(Some(InfeasibleCert::ComplexDominance(c)));
        }
    }
    Ok(match check_scb(m, hi, &opts.check)? {
        Verdict::Infeasible(c) => Some(c),
        _ => None,
    })
}

fn enclose(m: &Method, lo: Rational, hi: Rational, mech: Mechanism, opts: &SupOptions) -> Result<GammaSup> {
    let Some(hi_cert) = hi_certificate(m, &hi, mech, opts)? else {
        return Ok(GammaSup::Inconclusive { reason: format!("upper candidate {hi} not certified infeasible"), lo, hi });
    };
    match check_scb(m, &lo, &opts.check)? {
        Verdict::Feasible(lo_cert) => Ok(GammaSup::Enclosure { lo, hi, mechanism: mech, lo_cert, hi_cert }),
        _ => bracket_below(m, lo, hi, hi_cert, opts),
    }
}

/// `hi` is infeasible but the candidate was not sharp: find a feasible
/// point below and bisect.
fn bracket_below(
    m: &Method,
    start: Rational,
    hi: Rational,
    hi_cert: InfeasibleCert,
    opts: &SupOptions,
) -> Result<GammaSup> {
    let mut f = start;
    let feasible = loop {
        f = &f * rat(1, 2);
        if f < pow2(-60) {
            return Ok(GammaSup::Inconclusive { reason: "no feasible point found below the candidate".into(), lo: f, hi });
        }
        if let Verdict::Feasible(c) = check_scb(m, &f, &opts.check)? {
            break c;
        }
    };
    bisect(m, f, feasible, hi, hi_cert, opts)
}

fn bisect(
    m: &Method,
    mut lo: Rational,
    mut lo_cert: FeasibleCert,
    mut hi: Rational,
    mut hi_cert: InfeasibleCert,
    opts: &SupOptions,
) -> Result<GammaSup> {
    'outer: while &hi - &lo > opts.tol {
        let w = &hi - &lo;
        let half = &lo + &w * rat(1, 2);
        let tries = std::iter::once(half.clone()).chain((3..8).map(|j| &half + &w * pow2(-j)));
        for g in tries {
            match check_scb(m, &g, &opts.check)? {
                Verdict::Feasible(c) => {
                    lo = g;
                    lo_cert = c;
                    continue 'outer;
                }
                Verdict::Infeasible(c) => {
                    hi = g;
                    hi_cert = c;
                    continue 'outer;
                }
                Verdict::Inconclusive { .. } => {}
            }
        }
        return Ok(GammaSup::Inconclusive { reason: "bisection stalled on inconclusive checks".into(), lo, hi });
    }
    Ok(GammaSup::Enclosure { lo, hi, mechanism: Mechanism::Bracketed, lo_cert, hi_cert })
}

fn unbounded_or_bracket(m: &Method, opts: &SupOptions) -> Result<GammaSup> {
    let mut last_feasible: Option<(Rational, FeasibleCert)> = None;
    for e in 0..=LADDER_TOP {
        let g = pow2(e as i64);
        match check_scb(m, &g, &opts.check)? {
            Verdict::Feasible(c) => last_feasible = Some((g, c)),
            Verdict::Infeasible(c) => {
                let (lo, lo_cert) = match last_feasible {
                    Some(x) => x,
                    None => return bracket_below(m, g.clone(), g, c, opts),
                };
                return bisect(m, lo, lo_cert, g, c, opts);
            }
            Verdict::Inconclusive { reason, .. } => {
                let lo = last_feasible.map(|x| x.0).unwrap_or_else(|| rat(0, 1));
                return Ok(GammaSup::Inconclusive { reason, lo, hi: g });
            }
        }
    }
    Ok(GammaSup::Unbounded { ladder_top: LADDER_TOP })
}

/// Width of an enclosure, for reports.
pub fn enclosure_width(r: &GammaSup) -> Option<Rational> {
    r.bounds().map(|(lo, hi)| (hi - lo).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::methods::catalog;

    fn sup(name: &str) -> GammaSupResult {
        gamma_sup(&catalog(name).unwrap(), &SupOptions::default()).unwrap()
    }

    #[test]
    fn ab2_exact_value() {
        let r = sup("ab2");
        match &r.result {
            GammaSup::Enclosure { lo, hi, mechanism, hi_cert, .. } => {
                assert!(lo <= &rat(4, 9) && &rat(4, 9) <= hi);
                assert!(hi - lo <= rat(1, 1_000_000_000));
                assert_eq!(*mechanism, Mechanism::SimpleRoot { n: 2 });
                assert!(matches!(hi_cert, InfeasibleCert::Witness { n: 2, .. }));
            }
            g => panic!("{g:?}"),
        }
    }

    #[test]
    fn ab4_none_and_bdf1_unbounded() {
        assert_eq!(sup("ab4").result.label(), "NonePositive");
        assert_eq!(sup("bdf1").result.label(), "Unbounded");
    }

    #[test]
    fn bdf2_crossover() {
        let r = sup("bdf2");
        match &r.result {
            GammaSup::Enclosure { lo, hi, mechanism, .. } => {
                assert!(lo <= &rat(1, 2) && &rat(1, 2) <= hi, "{lo} {hi}");
                assert_eq!(*mechanism, Mechanism::Crossover);
            }
            g => panic!("{g:?}"),
        }
    }
}
