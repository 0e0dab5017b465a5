//! Tail certificates: positivity of `mu_n` for all `n >= N0` when a positive
//! real root dominates.
//!
//! With `t = n - shift`, the dominant root `r` of multiplicity `M + 1` and
//! its top coefficient `A` (real, positive), every other contribution
//! `A' C(t, l) p^(t-l)` is bounded relative to `r^(t-M) C(t, M)` by
//! `|A'| r^M / |p|^l * C(t, l) / C(t, M) * (|p| / r)^t`. The sum `R(t)` of
//! these bounds is non-increasing from `monotone_from` on, so
//! `R(t0) < margin * A` gives `mu_n > 0` for every `n >= shift + t0` as
//! long as `margin <= 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::closed_form::{ClosedForm, Dominance};
use crate::arith::{Interval, Rational};
use crate::error::{Error, Result};

const PREC: u64 = 192;
const T_CAP: usize = 1 << 31;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TailTerm {
    #[serde(serialize_with = "ser_rat")]
    pub modulus_lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub modulus_hi: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub coeff_mag: Rational,
    /// binomial order `l` of the term
    pub power: usize,
    /// a lower-order term of the dominant root itself
    pub same_root: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TailCertificate {
    /// `N0`: positivity holds for all `n >= n_start`
    pub n_start: usize,
    pub shift: usize,
    pub monotone_from: usize,
    #[serde(serialize_with = "ser_rat")]
    pub dominant_lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub dominant_hi: Rational,
    pub dominant_multiplicity: usize,
    #[serde(serialize_with = "ser_rat")]
    pub lead_lb: Rational,
    /// upper bound of `R(n_start - shift)`
    #[serde(serialize_with = "ser_rat")]
    pub residual: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub margin: Rational,
    pub terms: Vec<TailTerm>,
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn binomial(t: usize, l: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..l {
        r = r * BigInt::from(t - i) / BigInt::from(i + 1);
    }
    r
}

fn iv(q: &Rational) -> Interval {
    Interval::from_rational(q, PREC)
}

fn upper(x: &Interval) -> Rational {
    x.hi().to_rational()
}

impl TailTerm {
    fn ratio(&self, dom_lo: &Rational) -> Rational {
        if self.same_root {
            Rational::one()
        } else {
            &self.modulus_hi / dom_lo
        }
    }

    /// First `t` from which this term's bound is non-increasing.
    fn monotone_from(&self, big_m: usize, dom_lo: &Rational) -> Option<usize> {
        let l = self.power;
        let base = l.max(big_m);
        if l <= big_m {
            return Some(base);
        }
        let q = self.ratio(dom_lo);
        if q >= Rational::one() {
            return None;
        }
        // q (t + 1 - M) <= t + 1 - l  <=>  t + 1 >= (l - q M) / (1 - q)
        let lm = Rational::from_integer(l.into()) - &q * Rational::from_integer(big_m.into());
        let need = (lm / (Rational::one() - q)).ceil().to_integer();
        let t = need.to_usize()?.saturating_sub(1);
        Some(t.max(base))
    }

    fn bound(&self, t: usize, big_m: usize, dom_lo: &Rational, dom_hi: &Rational) -> Interval {
        let l = self.power;
        let mut v = iv(&self.coeff_mag).mul(&iv(dom_hi).pow(big_m as u32));
        if l > 0 {
            v = v.div(&iv(&self.modulus_lo).pow(l as u32)).expect("modulus bounded away from zero");
        }
        if l != big_m {
            let num = Interval::from_int(binomial(t, l), PREC);
            let den = Interval::from_int(binomial(t, big_m), PREC);
            v = v.mul(&num).div(&den).expect("t >= M");
        }
        if !self.same_root {
            let q = iv(&self.modulus_hi).div(&iv(dom_lo)).expect("positive dominant root");
            v = v.mul(&pow_usize(&q, t));
        }
        v
    }
}

fn pow_usize(x: &Interval, t: usize) -> Interval {
    let mut r = Interval::one(PREC);
    let mut b = x.clone();
    let mut e = t;
    while e > 0 {
        if e & 1 == 1 {
            r = r.mul(&b);
        }
        e >>= 1;
        if e > 0 {
            b = b.sqr();
        }
    }
    r
}

struct Data {
    big_m: usize,
    dom_lo: Rational,
    dom_hi: Rational,
    lead_lb: Rational,
    terms: Vec<TailTerm>,
}

impl Data {
    fn residual(&self, t: usize) -> Rational {
        let mut acc = Interval::zero(PREC);
        for term in &self.terms {
            acc = acc.add(&term.bound(t, self.big_m, &self.dom_lo, &self.dom_hi));
        }
        upper(&acc)
    }

    fn monotone_from(&self) -> Option<usize> {
        let mut t0 = self.big_m;
        for term in &self.terms {
            t0 = t0.max(term.monotone_from(self.big_m, &self.dom_lo)?);
        }
        Some(t0)
    }
}

fn extract(cf: &ClosedForm) -> Result<Data> {
    let j = match cf.dominance() {
        Dominance::PositiveReal(j) => j,
        d => return Err(Error::Inconclusive(format!("no positive real dominant root ({d:?})"))),
    };
    let dom = &cf.terms[j];
    let big_m = dom.multiplicity() - 1;
    let r = &dom.root.enclosure.re;
    let dom_lo = r.lo().to_rational();
    let dom_hi = r.hi().to_rational();
    let lead_lb = dom.coeffs[big_m].re.lo().to_rational();
    if !lead_lb.is_positive() {
        return Err(Error::Inconclusive("dominant coefficient not certified positive".into()));
    }
    let mut terms = Vec::new();
    for (i, term) in cf.terms.iter().enumerate() {
        let modulus = term.modulus();
        for (l, a) in term.coeffs.iter().enumerate() {
            if i == j && l == big_m {
                continue;
            }
            let mag = if a.im.is_point() && a.im.lo().is_zero() { a.re.mag() } else { a.abs().hi().clone() };
            let mag = mag.to_rational();
            if mag.is_zero() {
                continue;
            }
            terms.push(TailTerm {
                modulus_lo: modulus.lo().to_rational(),
                modulus_hi: modulus.hi().to_rational(),
                coeff_mag: mag,
                power: l,
                same_root: i == j,
            });
        }
    }
    Ok(Data { big_m, dom_lo, dom_hi, lead_lb, terms })
}

/// Smallest `N0` (in `n`) with a certified bound `R < margin * lead`.
pub fn tail_certificate(cf: &ClosedForm, margin: &Rational) -> Result<TailCertificate> {
    if !margin.is_positive() || margin > &Rational::one() {
        return Err(Error::Inconclusive("tail margin must lie in (0, 1]".into()));
    }
    let d = extract(cf)?;
    let t0 = d.monotone_from().ok_or_else(|| Error::Inconclusive("dominance not strict".into()))?;
    let target = margin * &d.lead_lb;
    let ok = |t: usize| d.residual(t) < target;
    let t_star = if ok(t0) {
        t0
    } else {
        let mut bad = t0;
        let mut step = 1usize;
        let good = loop {
            let t = t0 + step;
            if t > T_CAP {
                return Err(Error::Inconclusive("tail bound does not fall below the margin".into()));
            }
            if ok(t) {
                break t;
            }
            bad = t;
            step *= 2;
        };
        let (mut lo, mut hi) = (bad, good);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if ok(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    Ok(TailCertificate {
        n_start: cf.shift + t_star,
        shift: cf.shift,
        monotone_from: t0,
        residual: d.residual(t_star),
        dominant_lo: d.dom_lo,
        dominant_hi: d.dom_hi,
        dominant_multiplicity: d.big_m + 1,
        lead_lb: d.lead_lb,
        margin: margin.clone(),
        terms: d.terms,
    })
}

impl TailCertificate {
    /// Recheck the certificate from its stored rational data.
    pub fn verify(&self) -> bool {
        let d = Data {
            big_m: self.dominant_multiplicity - 1,
            dom_lo: self.dominant_lo.clone(),
            dom_hi: self.dominant_hi.clone(),
            lead_lb: self.lead_lb.clone(),
            terms: self.terms.clone(),
        };
        if !self.dominant_lo.is_positive() || self.margin > Rational::one() || !self.lead_lb.is_positive() {
            return false;
        }
        if self.terms.iter().any(|t| !t.same_root && t.modulus_hi >= self.dominant_lo) {
            return false;
        }
        let Some(t0) = d.monotone_from() else { return false };
        let Some(t) = self.n_start.checked_sub(self.shift) else { return false };
        t >= t0 && d.residual(t) < &self.margin * &self.lead_lb
    }

    /// The residual bound in units of the lead coefficient bound.
    pub fn relative_residual(&self) -> Rational {
        &self.residual / &self.lead_lb
    }

    pub fn residual_f64(&self) -> f64 {
        crate::arith::rational::to_f64(&self.residual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Precision};
    use crate::methods::catalog;
    use crate::recursion::closed_form::{closed_form_escalating, closed_form_tau, GammaPoint};

    fn prec() -> Precision {
        Precision::digits(40).unwrap()
    }

    #[test]
    fn ebdf_tails() {
        for (name, n0) in [("ebdf3", 1), ("ebdf4", 2), ("ebdf5", 3)] {
            let cf = closed_form_tau(&catalog(name).unwrap(), prec()).unwrap();
            let tc = tail_certificate(&cf, &rat(1, 1)).unwrap();
            assert_eq!(tc.n_start, n0, "{name}");
            assert!(tc.residual <= rat(9, 10), "{name}: {}", tc.residual_f64());
            assert!(tc.verify());
        }
    }

    #[test]
    fn bdf2_double_root_tail() {
        let m = catalog("bdf2").unwrap();
        let cf = closed_form_escalating(&m, &GammaPoint::Rational(rat(1, 2)), prec(), prec(), true).unwrap();
        let tc = tail_certificate(&cf, &rat(1, 1)).unwrap();
        assert_eq!(tc.dominant_multiplicity, 2);
        assert!(tc.verify());
        assert!(tc.n_start <= 3);
    }

    #[test]
    fn tampered_certificate_fails() {
        let cf = closed_form_tau(&catalog("ebdf4").unwrap(), prec()).unwrap();
        let mut tc = tail_certificate(&cf, &rat(1, 1)).unwrap();
        tc.n_start -= 1;
        assert!(!tc.verify());
    }

    #[test]
    fn bdf3_below_bound_needs_long_tail() {
        let m = catalog("bdf3").unwrap();
        let cf = closed_form_escalating(&m, &GammaPoint::Rational(rat(83, 100)), prec(), prec(), false).unwrap();
        let tc = tail_certificate(&cf, &rat(1, 1)).unwrap();
        assert!(tc.n_start > 20 && tc.n_start < 200, "{}", tc.n_start);
    }
}
