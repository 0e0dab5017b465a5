//! Streaming interval evaluation of `mu_n`.
//!
//! At a rational `gamma` the recursion is run as
//! `mu_n = (B_n + sum_j E_j mu_{n-j}) / C` with integers `C`, `E_j`, `B_n`,
//! so each step costs `k` integer multiplications, `k` additions and one
//! integer division. At an interval `gamma` (an algebraic point known only
//! by an enclosure) the coefficients are themselves intervals.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{Interval, Precision, Rational, Sign};
use crate::error::{Error, Result};
use crate::methods::Method;

#[derive(Clone, Debug)]
enum Coeffs {
    Int { c: BigInt, e: Vec<BigInt>, b: Vec<BigInt> },
    Real { lead: Interval, e: Vec<Interval>, b: Vec<Interval> },
}

#[derive(Clone, Debug)]
pub struct IntervalSeq {
    coeffs: Coeffs,
    window: VecDeque<Interval>,
    n: usize,
    prec: u64,
}

impl IntervalSeq {
    pub fn new(m: &Method, gamma: &Rational, prec: u64) -> Result<IntervalSeq> {
        let d = Rational::from_integer(m.denominator() * gamma.denom());
        let c = (Rational::one() + gamma * &m.b[0]) * &d;
        if !c.is_positive() {
            return Err(if c.is_zero() {
                Error::InvalidMethod("1 + gamma b_0 vanishes".into())
            } else {
                Error::NonPositiveGamma
            });
        }
        let e = (1..=m.k).map(|j| ((&m.a[j - 1] - gamma * &m.b[j]) * &d).to_integer()).collect();
        let b = m.b.iter().map(|x| (x * &d).to_integer()).collect();
        Ok(IntervalSeq {
            coeffs: Coeffs::Int { c: c.to_integer(), e, b },
            window: VecDeque::with_capacity(m.k),
            n: 0,
            prec,
        })
    }

    /// `gamma` given by an enclosure; `1 + gamma b_0` must exclude zero.
    pub fn with_interval(m: &Method, gamma: &Interval, prec: u64) -> Result<IntervalSeq> {
        let g = gamma.with_precision(prec);
        let iv = |q: &Rational| Interval::from_rational(q, prec);
        let lead = Interval::one(prec).add(&g.mul(&iv(&m.b[0])));
        if lead.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let e = (1..=m.k).map(|j| iv(&m.a[j - 1]).sub(&g.mul(&iv(&m.b[j])))).collect();
        let b = m.b.iter().map(iv).collect();
        Ok(IntervalSeq { coeffs: Coeffs::Real { lead, e, b }, window: VecDeque::with_capacity(m.k), n: 0, prec })
    }

    pub fn position(&self) -> usize {
        self.n
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn next_term(&mut self) -> Interval {
        let p = self.prec;
        let v = match &self.coeffs {
            Coeffs::Int { c, e, b } => {
                let mut acc = match b.get(self.n) {
                    Some(bn) if !bn.is_zero() => Interval::from_int(bn.clone(), p),
                    _ => Interval::zero(p),
                };
                for (ej, x) in e.iter().zip(self.window.iter()) {
                    if !ej.is_zero() {
                        acc = acc.add(&x.mul_int(ej));
                    }
                }
                acc.div_int(c).expect("C is positive")
            }
            Coeffs::Real { lead, e, b } => {
                let mut acc = b.get(self.n).cloned().unwrap_or_else(|| Interval::zero(p));
                for (ej, x) in e.iter().zip(self.window.iter()) {
                    acc = acc.add(&ej.mul(x));
                }
                acc.div(lead).expect("lead excludes zero")
            }
        };
        let k = match &self.coeffs {
            Coeffs::Int { e, .. } => e.len(),
            Coeffs::Real { e, .. } => e.len(),
        };
        if self.window.len() == k {
            self.window.pop_back();
        }
        self.window.push_front(v.clone());
        self.n += 1;
        v
    }
}

impl Iterator for IntervalSeq {
    type Item = Interval;

    fn next(&mut self) -> Option<Interval> {
        Some(self.next_term())
    }
}

/// Enclosures of `mu_0..=mu_{n_max}` at `gamma`.
pub fn eval_mu_interval(m: &Method, gamma: &Rational, n_max: usize, prec: Precision) -> Result<Vec<Interval>> {
    let s = IntervalSeq::new(m, gamma, prec.bits())?;
    Ok(s.take(n_max + 1).collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalScan {
    pub negatives: Vec<usize>,
    pub unknown_count: usize,
    pub first_unknown: Option<usize>,
    pub scanned_to: usize,
    pub digits: u32,
}

impl IntervalScan {
    pub fn complete(&self) -> bool {
        self.unknown_count == 0
    }
}

/// Certified signs of `mu_n`, `from <= n <= to`, at a fixed precision.
/// Undecided terms are counted, not guessed.
pub fn interval_sign_scan(m: &Method, gamma: &Rational, from: usize, to: usize, prec: Precision) -> Result<IntervalScan> {
    let mut s = IntervalSeq::new(m, gamma, prec.bits())?;
    let mut out = IntervalScan { digits: prec.get(), scanned_to: from.saturating_sub(1), ..Default::default() };
    while s.position() <= to {
        let n = s.position();
        let v = s.next_term();
        if n < from {
            continue;
        }
        match v.certified_sign() {
            Sign::Negative => out.negatives.push(n),
            Sign::Unknown => {
                out.unknown_count += 1;
                out.first_unknown.get_or_insert(n);
            }
            Sign::Positive => {}
        }
        out.scanned_to = n;
    }
    Ok(out)
}

/// Like [`interval_sign_scan`], but a run is abandoned at its first
/// undecided sign and restarted at doubled precision, up to `cap`.
pub fn escalating_sign_scan(
    m: &Method,
    gamma: &Rational,
    from: usize,
    to: usize,
    start: Precision,
    cap: Precision,
) -> Result<IntervalScan> {
    let mut prec = start;
    loop {
        let mut s = IntervalSeq::new(m, gamma, prec.bits())?;
        let mut out = IntervalScan { digits: prec.get(), scanned_to: from.saturating_sub(1), ..Default::default() };
        let mut stuck = None;
        while s.position() <= to {
            let n = s.position();
            let v = s.next_term();
            if n < from {
                continue;
            }
            match v.certified_sign() {
                Sign::Negative => out.negatives.push(n),
                Sign::Unknown => {
                    stuck = Some(n);
                    break;
                }
                Sign::Positive => {}
            }
            out.scanned_to = n;
        }
        match stuck {
            None => return Ok(out),
            Some(n) => match prec.escalate(cap) {
                Some(p) => prec = p,
                None => {
                    return Err(Error::PrecisionExhausted {
                        cap_digits: cap.get(),
                        context: format!("sign of mu_{n} at gamma = {gamma} undecided"),
                    })
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::methods::catalog;
    use crate::recursion::sequence::mu_prefix;

    #[test]
    fn contains_exact_values() {
        let m = catalog("bdf4").unwrap();
        let g = rat(3, 7);
        let exact = mu_prefix(&m, &g, 300).unwrap();
        let iv = eval_mu_interval(&m, &g, 300, Precision::digits(40).unwrap()).unwrap();
        for (e, i) in exact.iter().zip(&iv) {
            assert!(i.contains_rational(e));
        }
    }

    #[test]
    fn interval_gamma_contains_point() {
        let m = catalog("ab3").unwrap();
        let g = rat(1, 7);
        let gi = Interval::from_rational_bounds(&rat(1, 8), &rat(1, 6), 128);
        let exact = mu_prefix(&m, &g, 30).unwrap();
        let s = IntervalSeq::with_interval(&m, &gi, 128).unwrap();
        for (e, i) in exact.iter().zip(s) {
            assert!(i.contains_rational(e));
        }
    }

    #[test]
    fn low_precision_escalates() {
        let m = catalog("bdf3").unwrap();
        let r = escalating_sign_scan(&m, &rat(1, 2), 1, 400, Precision::digits(10).unwrap(), Precision::digits(400).unwrap())
            .unwrap();
        assert!(r.negatives.is_empty());
        assert!(r.digits > 10);
        let e = escalating_sign_scan(&m, &rat(1, 2), 1, 400, Precision::digits(10).unwrap(), Precision::digits(12).unwrap());
        assert!(matches!(e, Err(Error::PrecisionExhausted { .. })));
    }
}
