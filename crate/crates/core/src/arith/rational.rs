use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps itself reduced with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rational_of(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

/// Shorthand for small literals; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    rational_of(num, den).expect("nonzero denominator")
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// Parse `p/q`, an integer, an exact decimal (`0.48625`) or scientific
/// notation (`1e-9`, `2.5E3`). Decimals are converted exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse { what: "rational", input: s.to_string() };
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        return rational_of(n, d);
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(err());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits: BigInt = format!("0{ip}{fp}").parse().map_err(|_| err())?;
    let scale = exp - fp.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(err());
    }
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// Exact `p/q` rendering (`p` alone for integers).
pub fn to_exact_string(q: &Rational) -> String {
    q.to_string()
}

pub fn floor_log2_abs(q: &Rational) -> i64 {
    assert!(!q.is_zero());
    let n = q.numer().abs();
    let d = q.denom();
    let mut e = n.bits() as i64 - d.bits() as i64;
    let a = q.abs();
    while pow2(e) > a {
        e -= 1;
    }
    while pow2(e + 1) <= a {
        e += 1;
    }
    e
}

pub fn pow2(k: i64) -> Rational {
    if k >= 0 {
        BigRational::from_integer(BigInt::one() << k as u64)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-k) as u64)
    }
}

/// Decimal approximation for human-readable output.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let e = floor_log2_abs(q);
        let scaled = q / pow2(e - 60);
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi((e - 60) as i32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(rational_of(126, 121).unwrap().to_string(), "126/121");
        assert_eq!(rational_of(0, 5).unwrap().to_string(), "0");
        assert_eq!(rational_of(4, -6).unwrap(), rat(-2, 3));
        assert!(matches!(rational_of(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn parses_exact_decimals() {
        assert_eq!(parse_rational("0.48625").unwrap(), rat(48625, 100000));
        assert_eq!(parse_rational("48625/100000").unwrap(), rat(389, 800));
        assert_eq!(parse_rational("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse_rational("-2.5E1").unwrap(), rat(-25, 1));
        assert_eq!(parse_rational("1000000").unwrap(), rat(1_000_000, 1));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        for bad in ["", "abc", "1/0", "1.2.3", "e5", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn log2_floor() {
        assert_eq!(floor_log2_abs(&rat(1, 3)), -2);
        assert_eq!(floor_log2_abs(&rat(4, 1)), 2);
        assert_eq!(floor_log2_abs(&rat(-5, 1)), 2);
    }
}
