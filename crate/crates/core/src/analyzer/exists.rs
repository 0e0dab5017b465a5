//! Existence of a positive SCB from the sequence `tau_n`.
//!
//! Let `n0` be the first index in `1..=k` with `tau_n != 0`. If
//! `tau_n > 0` for every `n >= n0` and `1` is the only root of `rho` on the
//! unit circle, some positive SCB exists. If `tau_n <= 0` at a multiple of
//! `n0`, none does.

use num_traits::Signed;
use serde::Serialize;

use super::check::CheckOptions;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::methods::Method;
use crate::poly::unit_circle_roots;
use crate::recursion::{closed_form_tau, tail_certificate, ExactSeq, TailCertificate};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum Existence {
    Exists {
        n0: usize,
        /// `tau_n > 0` checked exactly for `n0 <= n <= checked_to`
        checked_to: usize,
        tail: TailCertificate,
        unit_circle_roots: usize,
    },
    NotExists {
        n0: usize,
        n: usize,
        #[serde(serialize_with = "ser_rat")]
        tau: Rational,
    },
    Inconclusive {
        reason: String,
    },
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl Existence {
    pub fn label(&self) -> &'static str {
        match self {
            Existence::Exists { .. } => "Exists",
            Existence::NotExists { .. } => "NotExists",
            Existence::Inconclusive { .. } => "Inconclusive",
        }
    }
}

pub fn scb_exists(m: &Method, opts: &CheckOptions) -> Result<Existence> {
    let Some(n0) = m.n0() else {
        return Ok(Existence::Inconclusive { reason: "tau_n = 0 for 1 <= n <= k".into() });
    };
    let mut seq = ExactSeq::tau(m);
    seq.advance_to(n0);
    let mut bad_elsewhere = None;
    let horizon = opts.horizon.max(n0);
    let scan = |seq: &mut ExactSeq, to: usize, bad: &mut Option<usize>| -> Option<Existence> {
        while seq.position() <= to {
            let t = seq.next_term();
            if !t.x.is_positive() {
                if t.n % n0 == 0 {
                    return Some(Existence::NotExists { n0, n: t.n, tau: seq.value(&t) });
                }
                bad.get_or_insert(t.n);
            }
        }
        None
    };
    if let Some(e) = scan(&mut seq, horizon, &mut bad_elsewhere) {
        return Ok(e);
    }
    if let Some(n) = bad_elsewhere {
        return Ok(Existence::Inconclusive { reason: format!("tau_{n} <= 0 at an index not divisible by n0 = {n0}") });
    }
    let cf = match closed_form_tau(m, opts.precision) {
        Ok(cf) => cf,
        Err(e @ (Error::PrecisionExhausted { .. } | Error::ClosedFormUnavailable(_))) => {
            return Ok(Existence::Inconclusive { reason: e.to_string() })
        }
        Err(e) => return Err(e),
    };
    let tail = match tail_certificate(&cf, &opts.margin) {
        Ok(t) => t,
        Err(e) => return Ok(Existence::Inconclusive { reason: e.to_string() }),
    };
    if tail.n_start > horizon + 1 {
        if let Some(e) = scan(&mut seq, tail.n_start - 1, &mut bad_elsewhere) {
            return Ok(e);
        }
        if let Some(n) = bad_elsewhere {
            return Ok(Existence::Inconclusive { reason: format!("tau_{n} <= 0 at an index not divisible by n0 = {n0}") });
        }
    }
    let (count, has_one) = unit_circle_roots(&m.generating_polys().rho);
    if count != 1 || !has_one {
        return Ok(Existence::Inconclusive {
            reason: format!("rho has {count} distinct roots on the unit circle"),
        });
    }
    Ok(Existence::Exists { n0, checked_to: seq.position() - 1, tail, unit_circle_roots: count })
}
