//! Exact evaluation of `mu_n(gamma)` and `tau_n = mu_n(0)`.
//!
//! With a common denominator `D` the recursion
//! `(1 + gamma b_0) mu_n = b_n + sum_j (a_j - gamma b_j) mu_{n-j}`
//! becomes `C mu_n = B_n + sum_j E_j mu_{n-j}` with integers `C > 0`,
//! `E_j`, `B_n`. Writing `mu_n = X_n / C^(n+1)` gives the integer recursion
//! `X_n = B_n C^n + sum_j E_j C^(j-1) X_{n-j}`, so the sign of `mu_n` is the
//! sign of `X_n` and no gcd is ever taken.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::methods::Method;

#[derive(Clone, Debug)]
pub struct ExactSeq {
    c: BigInt,
    /// `F_j = E_j C^(j-1)`, `j = 1..k`
    f: Vec<BigInt>,
    /// `B_n C^n` for `n = 0..k`
    forcing: Vec<BigInt>,
    /// `X_{n-1}, X_{n-2}, ...`
    window: VecDeque<BigInt>,
    n: usize,
}

/// One term of the sequence: `value = x / denom_base^(n+1)`.
#[derive(Clone, Debug)]
pub struct Term {
    pub n: usize,
    pub x: BigInt,
}

impl ExactSeq {
    pub fn new(m: &Method, gamma: &Rational) -> Result<ExactSeq> {
        let d = Rational::from_integer(m.denominator() * gamma.denom());
        let c = (Rational::one() + gamma * &m.b[0]) * &d;
        if c.is_zero() {
            return Err(Error::InvalidMethod("1 + gamma b_0 vanishes".into()));
        }
        if c.is_negative() {
            return Err(Error::NonPositiveGamma);
        }
        let c = c.to_integer();
        let k = m.k;
        let mut f = Vec::with_capacity(k);
        let mut cp = BigInt::one();
        for j in 1..=k {
            let e = ((&m.a[j - 1] - gamma * &m.b[j]) * &d).to_integer();
            f.push(e * &cp);
            cp *= &c;
        }
        let mut forcing = Vec::with_capacity(k + 1);
        let mut cp = BigInt::one();
        for n in 0..=k {
            forcing.push((&m.b[n] * &d).to_integer() * &cp);
            cp *= &c;
        }
        Ok(ExactSeq { c, f, forcing, window: VecDeque::with_capacity(k), n: 0 })
    }

    pub fn tau(m: &Method) -> ExactSeq {
        ExactSeq::new(m, &Rational::zero()).expect("gamma = 0 is admissible")
    }

    /// The positive integer `C`; `mu_n = X_n / C^(n+1)`.
    pub fn base(&self) -> &BigInt {
        &self.c
    }

    /// Index of the next term to be produced.
    pub fn position(&self) -> usize {
        self.n
    }

    pub fn next_term(&mut self) -> Term {
        let n = self.n;
        let mut x = self.forcing.get(n).cloned().unwrap_or_else(BigInt::zero);
        for (fj, xj) in self.f.iter().zip(self.window.iter()) {
            if !fj.is_zero() {
                x += fj * xj;
            }
        }
        if !self.f.is_empty() {
            if self.window.len() == self.f.len() {
                self.window.pop_back();
            }
            self.window.push_front(x.clone());
        }
        self.n += 1;
        Term { n, x }
    }

    pub fn value(&self, t: &Term) -> Rational {
        BigRational::new(t.x.clone(), num_traits::pow(self.c.clone(), t.n + 1))
    }

    /// Skip ahead to index `n` (no-op if already past it).
    pub fn advance_to(&mut self, n: usize) {
        while self.n < n {
            self.next_term();
        }
    }
}

/// `mu_n(gamma)` exactly; zero for negative `n`.
pub fn eval_mu(m: &Method, gamma: &Rational, n: i64) -> Result<Rational> {
    if n < 0 {
        return Ok(Rational::zero());
    }
    let mut s = ExactSeq::new(m, gamma)?;
    s.advance_to(n as usize);
    let t = s.next_term();
    Ok(s.value(&t))
}

pub fn eval_tau(m: &Method, n: i64) -> Rational {
    eval_mu(m, &Rational::zero(), n).expect("gamma = 0 is admissible")
}

/// `mu_0..=mu_{n_max}` as exact rationals.
pub fn mu_prefix(m: &Method, gamma: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let mut s = ExactSeq::new(m, gamma)?;
    Ok((0..=n_max)
        .map(|_| {
            let t = s.next_term();
            s.value(&t)
        })
        .collect())
}

/// Outcome of an exact sign scan over `from..=to`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactScan {
    pub negatives: Vec<usize>,
    pub zeros: Vec<usize>,
    pub scanned_to: usize,
}

impl ExactScan {
    pub fn first_negative(&self) -> Option<usize> {
        self.negatives.first().copied()
    }
}

/// Signs of `mu_n` for `from <= n <= to`. Stops after `stop_after`
/// negatives when given.
pub fn exact_sign_scan(
    m: &Method,
    gamma: &Rational,
    from: usize,
    to: usize,
    stop_after: Option<usize>,
) -> Result<ExactScan> {
    let mut s = ExactSeq::new(m, gamma)?;
    let mut out = ExactScan { scanned_to: from.saturating_sub(1), ..Default::default() };
    s.advance_to(from);
    while s.position() <= to {
        let t = s.next_term();
        match t.x.sign() {
            num_bigint::Sign::Minus => out.negatives.push(t.n),
            num_bigint::Sign::NoSign => out.zeros.push(t.n),
            num_bigint::Sign::Plus => {}
        }
        out.scanned_to = t.n;
        if stop_after.is_some_and(|k| out.negatives.len() >= k) {
            break;
        }
    }
    Ok(out)
}

/// `gcd`-reduced denominators of the first terms stay small enough to print.
pub fn reduced(q: &Rational) -> (BigInt, BigInt) {
    let g = q.numer().gcd(q.denom());
    (q.numer() / &g, q.denom() / &g)
}
