//! Closed intervals with outward-rounded [`Float`] endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::float::{decimal_string, Float, Round};
use super::precision::Precision;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Positive,
    Negative,
    Unknown,
}

/// `[lo, hi]` with `lo <= hi`; `prec` is the working precision in bits used
/// by operations producing new intervals.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Float,
    hi: Float,
    prec: u64,
}

impl Interval {
    pub fn new(lo: Float, hi: Float, prec: u64) -> Interval {
        assert!(lo <= hi, "Interval::new with lo > hi");
        Interval { lo, hi, prec }
    }

    pub fn point(x: Float, prec: u64) -> Interval {
        Interval { lo: x.clone(), hi: x, prec }
    }

    pub fn zero(prec: u64) -> Interval {
        Interval::point(Float::zero(), prec)
    }

    pub fn one(prec: u64) -> Interval {
        Interval::point(Float::one(), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u64) -> Interval {
        if q.is_integer() {
            let f = Float::from_int(q.numer().clone());
            if f.bits() <= prec {
                return Interval::point(f, prec);
            }
        }
        Interval {
            lo: Float::from_rational(q, prec, Round::Down),
            hi: Float::from_rational(q, prec, Round::Up),
            prec,
        }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u64) -> Interval {
        let f = Float::from_int(n);
        Interval { lo: f.round(prec, Round::Down), hi: f.round(prec, Round::Up), prec }
    }

    /// Hull of two rationals (in either order).
    pub fn from_rational_bounds(a: &BigRational, b: &BigRational, prec: u64) -> Interval {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Interval {
            lo: Float::from_rational(a, prec, Round::Down),
            hi: Float::from_rational(b, prec, Round::Up),
            prec,
        }
    }

    pub fn with_precision(&self, prec: u64) -> Interval {
        Interval {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn precision_digits(&self) -> u32 {
        // inverse of Precision::bits, rounded down
        (self.prec as f64 / std::f64::consts::LOG2_10).floor() as u32
    }

    fn p(&self, other: &Interval) -> u64 {
        self.prec.max(other.prec)
    }

    pub fn width(&self) -> Float {
        self.hi.sub(&self.lo, self.prec, Round::Up)
    }

    pub fn width_rational(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn midpoint(&self) -> Float {
        self.lo.add_exact(&self.hi).mul_2exp(-1).round(self.prec + 1, Round::Down)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_float(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        self.lo.cmp_rational(q) != Ordering::Greater && self.hi.cmp_rational(q) != Ordering::Less
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then(|| Interval { lo, hi, prec: self.p(other) })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.p(other),
        }
    }

    /// Strictly below `other` (every point less than every point).
    pub fn lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn gt(&self, other: &Interval) -> bool {
        other.lt(self)
    }

    pub fn certified_sign(&self) -> Sign {
        if self.lo.is_positive() {
            Sign::Positive
        } else if self.hi.is_negative() {
            Sign::Negative
        } else {
            Sign::Unknown
        }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Interval {
                lo: Float::zero(),
                hi: self.lo.abs().max(self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    /// Upper bound of `|x|`.
    pub fn mag(&self) -> Float {
        self.lo.abs().max(self.hi.abs())
    }

    /// Lower bound of `|x|`.
    pub fn mig(&self) -> Float {
        if self.contains_zero() {
            Float::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let p = self.p(other);
        Interval {
            lo: self.lo.add(&other.lo, p, Round::Down),
            hi: self.hi.add(&other.hi, p, Round::Up),
            prec: p,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let p = self.p(other);
        Interval {
            lo: self.lo.sub(&other.hi, p, Round::Down),
            hi: self.hi.sub(&other.lo, p, Round::Up),
            prec: p,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let p = self.p(other);
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        let m = |x: &Float, y: &Float, r| x.mul(y, p, r);
        let (lo, hi) = if !a.is_negative() {
            if !c.is_negative() {
                (m(a, c, Round::Down), m(b, d, Round::Up))
            } else if !d.is_positive() {
                (m(b, c, Round::Down), m(a, d, Round::Up))
            } else {
                (m(b, c, Round::Down), m(b, d, Round::Up))
            }
        } else if !b.is_positive() {
            if !c.is_negative() {
                (m(a, d, Round::Down), m(b, c, Round::Up))
            } else if !d.is_positive() {
                (m(b, d, Round::Down), m(a, c, Round::Up))
            } else {
                (m(a, d, Round::Down), m(a, c, Round::Up))
            }
        } else if !c.is_negative() {
            (m(a, d, Round::Down), m(b, d, Round::Up))
        } else if !d.is_positive() {
            (m(b, c, Round::Down), m(a, c, Round::Up))
        } else {
            let lo = m(a, d, Round::Down).min(m(b, c, Round::Down));
            let hi = m(a, c, Round::Up).max(m(b, d, Round::Up));
            (lo, hi)
        };
        Interval { lo, hi, prec: p }
    }

    /// Product with an exact integer; a single rounding per endpoint.
    pub fn mul_int(&self, k: &BigInt) -> Interval {
        let f = Float::from_int(k.clone());
        let (x, y) = if k.is_negative() { (&self.hi, &self.lo) } else { (&self.lo, &self.hi) };
        Interval {
            lo: x.mul(&f, self.prec, Round::Down),
            hi: y.mul(&f, self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Result<Interval> {
        if k.is_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let f = Float::from_int(k.clone());
        let (x, y) = if k.is_negative() { (&self.hi, &self.lo) } else { (&self.lo, &self.hi) };
        Ok(Interval {
            lo: x.div(&f, self.prec, Round::Down),
            hi: y.div(&f, self.prec, Round::Up),
            prec: self.prec,
        })
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let one = Float::one();
        Ok(Interval {
            lo: one.div(&self.hi, self.prec, Round::Down),
            hi: one.div(&self.lo, self.prec, Round::Up),
            prec: self.prec,
        })
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let p = self.p(other);
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        let q = |x: &Float, y: &Float, r| x.div(y, p, r);
        let (lo, hi) = if c.is_positive() {
            if !a.is_negative() {
                (q(a, d, Round::Down), q(b, c, Round::Up))
            } else if !b.is_positive() {
                (q(a, c, Round::Down), q(b, d, Round::Up))
            } else {
                (q(a, c, Round::Down), q(b, c, Round::Up))
            }
        } else if !a.is_negative() {
            (q(b, d, Round::Down), q(a, c, Round::Up))
        } else if !b.is_positive() {
            (q(b, c, Round::Down), q(a, d, Round::Up))
        } else {
            (q(b, d, Round::Down), q(a, d, Round::Up))
        };
        Ok(Interval { lo, hi, prec: p })
    }

    pub fn sqr(&self) -> Interval {
        let a = self.abs();
        Interval {
            lo: a.lo.mul(&a.lo, self.prec, Round::Down),
            hi: a.hi.mul(&a.hi, self.prec, Round::Up),
            prec: self.prec,
        }
    }

    /// Square root of the non-negative part; `None` if entirely negative.
    pub fn sqrt(&self) -> Option<Interval> {
        if self.hi.is_negative() {
            return None;
        }
        let lo = if self.lo.is_positive() {
            self.lo.sqrt(self.prec, Round::Down)
        } else {
            Float::zero()
        };
        Some(Interval { lo, hi: self.hi.sqrt(self.prec, Round::Up), prec: self.prec })
    }

    pub fn pow(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::one(self.prec);
        }
        let base = if n % 2 == 0 { self.abs() } else { self.clone() };
        let mut result = Interval::one(self.prec);
        let mut b = base;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.sqr();
            }
        }
        result
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.p(other),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }

    pub fn display_digits(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            decimal_string(&self.lo.to_rational(), digits),
            decimal_string(&self.hi.to_rational(), digits)
        )
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::add(self, rhs)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::sub(self, rhs)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        Interval::mul(self, rhs)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_digits(20))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_digits(f.precision().unwrap_or(20)))
    }
}

/// Certified sign of an interval (free-function form).
pub fn certified_sign(x: &Interval) -> Sign {
    x.certified_sign()
}

/// Convenience: bits for a digit count, for callers holding a [`Precision`].
pub fn bits(p: Precision) -> u64 {
    p.bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(Float::from_f64(a).unwrap(), Float::from_f64(b).unwrap(), 64)
    }

    #[test]
    fn signs() {
        assert_eq!(iv(0.1, 0.2).certified_sign(), Sign::Positive);
        assert_eq!(iv(-3.0, -1.0).certified_sign(), Sign::Negative);
        assert_eq!(iv(-1e-9, 1e-9).certified_sign(), Sign::Unknown);
        assert_eq!(iv(0.0, 1.0).certified_sign(), Sign::Unknown);
    }

    #[test]
    fn one_third_is_narrow() {
        let p = Precision::digits(30).unwrap().bits();
        let x = Interval::from_rational(&q(1, 3), p);
        assert!(x.contains_rational(&q(1, 3)));
        assert!(x.width_rational() < q(1, 1) / BigRational::from_integer(BigInt::from(10).pow(28)));
    }

    #[test]
    fn mul_div_sign_cases_contain_products() {
        let cases = [(-2.0, 3.0), (1.0, 4.0), (-5.0, -0.5), (-1.0, 0.0), (0.0, 2.0)];
        for &(a, b) in &cases {
            for &(c, d) in &cases {
                let x = iv(a, b);
                let y = iv(c, d);
                let prod = x.mul(&y);
                for s in [a, b, (a + b) / 2.0] {
                    for t in [c, d, (c + d) / 2.0] {
                        assert!(prod.contains_float(&Float::from_f64(s * t).unwrap()));
                        if !y.contains_zero() {
                            let quo = x.div(&y).unwrap();
                            let exact = q((s * 4.0) as i64, 4) / q((t * 4.0) as i64, 4);
                            assert!(quo.contains_rational(&exact), "{s}/{t}");
                        }
                    }
                }
            }
        }
        assert!(iv(1.0, 2.0).div(&iv(-1.0, 1.0)).is_err());
    }

    #[test]
    fn self_subtraction_contains_zero() {
        let x = Interval::from_rational(&q(7, 13), 100);
        assert!(x.sub(&x).contains_zero());
    }

    #[test]
    fn pow_even_straddling_zero() {
        let x = iv(-2.0, 1.0);
        let y = x.pow(2);
        assert!(y.lo().is_zero());
        assert!(y.contains_float(&Float::from_int(4)));
    }
}
