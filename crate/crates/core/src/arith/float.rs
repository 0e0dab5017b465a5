//! Arbitrary-precision binary floating values with directed rounding.
//!
//! A [`Float`] is `mantissa * 2^exponent` with an arbitrary-size mantissa and
//! a 64-bit exponent. Values are stored in canonical form (odd mantissa or
//! zero), so structural equality is numeric equality. Every rounding
//! operation takes an explicit precision in bits and a [`Round`] direction;
//! nothing rounds to nearest.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Float {
    mant: BigInt,
    exp: i64,
}

impl Float {
    pub fn zero() -> Float {
        Float { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Float {
        Float { mant: BigInt::one(), exp: 0 }
    }

    fn canonical(mant: BigInt, exp: i64) -> Float {
        match mant.trailing_zeros() {
            None => Float::zero(),
            Some(0) => Float { mant, exp },
            Some(tz) => Float { mant: mant >> tz, exp: exp + tz as i64 },
        }
    }

    /// Exact value `mant * 2^exp`.
    pub fn from_parts(mant: BigInt, exp: i64) -> Float {
        Float::canonical(mant, exp)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Float {
        Float::canonical(n.into(), 0)
    }

    /// Exact conversion; `None` for non-finite input.
    pub fn from_f64(x: f64) -> Option<Float> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Float::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & 0x000f_ffff_ffff_ffff;
        let (mant, exp) = if raw_exp == 0 {
            (frac as i64, -1074)
        } else {
            ((frac | (1u64 << 52)) as i64, raw_exp - 1075)
        };
        Some(Float::canonical(BigInt::from(sign * mant), exp))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.sign() == Sign::Minus
    }

    pub fn is_positive(&self) -> bool {
        self.mant.sign() == Sign::Plus
    }

    pub fn signum(&self) -> Ordering {
        match self.mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Smallest `t` with `|self| < 2^t` (meaningless for zero).
    fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn neg(&self) -> Float {
        Float { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Float {
        Float { mant: self.mant.abs(), exp: self.exp }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_2exp(&self, k: i64) -> Float {
        if self.is_zero() {
            return Float::zero();
        }
        Float { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round `mant * 2^exp` to at most `prec` significant bits.
    pub fn round_parts(mant: BigInt, exp: i64, prec: u64, dir: Round) -> Float {
        let bits = mant.bits();
        if bits <= prec {
            return Float::canonical(mant, exp);
        }
        let shift = bits - prec;
        let exact = mant.trailing_zeros().is_none_or(|tz| tz >= shift);
        let mut q = mant >> shift;
        if !exact && dir == Round::Up {
            q += 1;
        }
        Float::canonical(q, exp + shift as i64)
    }

    pub fn round(&self, prec: u64, dir: Round) -> Float {
        Float::round_parts(self.mant.clone(), self.exp, prec, dir)
    }

    /// Exact sum (no rounding). Exponent gaps are materialized, so only use
    /// this for operands of comparable magnitude.
    pub fn add_exact(&self, other: &Float) -> Float {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Float::canonical(a + b, e)
    }

    pub fn mul_exact(&self, other: &Float) -> Float {
        Float::canonical(&self.mant * &other.mant, self.exp + other.exp)
    }

    pub fn add(&self, other: &Float, prec: u64, dir: Round) -> Float {
        if self.is_zero() {
            return other.round(prec, dir);
        }
        if other.is_zero() {
            return self.round(prec, dir);
        }
        let (big, small) = if self.top() >= other.top() { (self, other) } else { (other, self) };
        // `small` lies entirely below the rounding position of `big`: replace it
        // by a sticky quantity that pushes the result the right way.
        if small.top() < big.top() - prec as i64 - 2 {
            let tiny_exp = big.top() - prec as i64 - 2;
            return match (dir, small.is_positive()) {
                (Round::Down, true) | (Round::Up, false) => big.round(prec, dir),
                (Round::Down, false) => {
                    big.add_exact(&Float::from_parts(BigInt::from(-1), tiny_exp)).round(prec, dir)
                }
                (Round::Up, true) => {
                    big.add_exact(&Float::from_parts(BigInt::one(), tiny_exp)).round(prec, dir)
                }
            };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Float::round_parts(a + b, e, prec, dir)
    }

    pub fn sub(&self, other: &Float, prec: u64, dir: Round) -> Float {
        self.add(&other.neg(), prec, dir)
    }

    pub fn mul(&self, other: &Float, prec: u64, dir: Round) -> Float {
        Float::round_parts(&self.mant * &other.mant, self.exp + other.exp, prec, dir)
    }

    /// Directed quotient. Panics on a zero divisor.
    pub fn div(&self, other: &Float, prec: u64, dir: Round) -> Float {
        assert!(!other.is_zero(), "Float::div by zero");
        if self.is_zero() {
            return Float::zero();
        }
        let shift = (prec as i64 + other.bits() as i64 - self.bits() as i64 + 2).max(0) as u64;
        let num = &self.mant << shift;
        let (mut q, r) = num.div_mod_floor(&other.mant);
        if !r.is_zero() && dir == Round::Up {
            q += 1;
        }
        Float::round_parts(q, self.exp - shift as i64 - other.exp, prec, dir)
    }

    /// Directed square root. Panics on negative input.
    pub fn sqrt(&self, prec: u64, dir: Round) -> Float {
        assert!(!self.is_negative(), "Float::sqrt of negative value");
        if self.is_zero() {
            return Float::zero();
        }
        let need = 2 * prec + 2;
        let mut shift = need.saturating_sub(self.bits()) as i64;
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mant << shift as u64;
        let e = self.exp - shift;
        let mut r = m.sqrt();
        if &r * &r != m && dir == Round::Up {
            r += 1;
        }
        Float::round_parts(r, e / 2, prec, dir)
    }

    pub fn from_rational(q: &BigRational, prec: u64, dir: Round) -> Float {
        Float::from_int(q.numer().clone()).div(&Float::from_int(q.denom().clone()), prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        // mant * 2^exp  vs  n / d   (d > 0)
        let (n, d) = (q.numer(), q.denom());
        if self.exp >= 0 {
            ((&self.mant << self.exp as u64) * d).cmp(n)
        } else {
            (&self.mant * d).cmp(&(n << (-self.exp) as u64))
        }
    }

    /// Nearest-ish `f64` for display and seeding numerics. Saturates to
    /// infinity or zero outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 64 {
            (&self.mant >> (bits - 64), self.exp + (bits - 64) as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        if e > 4000 {
            return mf.signum() * f64::INFINITY;
        }
        if e < -4000 {
            return 0.0;
        }
        ldexp(mf, e)
    }

    /// Decimal rendering with `digits` significant digits (truncated toward
    /// zero); for display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let q = self.to_rational();
        decimal_string(&q, digits)
    }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

/// Scientific decimal rendering of a rational, truncated toward zero.
pub fn decimal_string(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let q = q.abs();
    let ten = BigInt::from(10);
    // find e with 10^e <= q < 10^(e+1)
    let approx = (q.numer().bits() as f64 - q.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut e = approx.floor() as i64;
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while pow(e) > q {
        e -= 1;
    }
    while pow(e + 1) <= q {
        e += 1;
    }
    let scaled = &q / pow(e - digits as i64 + 1);
    let int = scaled.to_integer().to_string();
    let (head, tail) = int.split_at(1);
    let tail = tail.trim_end_matches('0');
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(head);
    if !tail.is_empty() {
        s.push('.');
        s.push_str(tail);
    }
    if e != 0 {
        s.push_str(&format!("e{e}"));
    }
    s
}

impl PartialOrd for Float {
    fn partial_cmp(&self, other: &Float) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Float {
    fn cmp(&self, other: &Float) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == Ordering::Equal {
            return Ordering::Equal;
        }
        // same non-zero sign; compare magnitudes, then flip for negatives
        let mag = match self.top().cmp(&other.top()) {
            Ordering::Equal => {
                let e = self.exp.min(other.exp);
                let a = self.mant.abs() << (self.exp - e) as u64;
                let b = other.mant.abs() << (other.exp - e) as u64;
                a.cmp(&b)
            }
            o => o,
        };
        if sa == Ordering::Less {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl fmt::Debug for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(f.precision().unwrap_or(20)))
    }
}
