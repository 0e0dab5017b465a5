//! Built-in methods and their known optimal values.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::{Family, Method};
use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::poly::IntegerPoly;

pub const NAMES: [&str; 13] = [
    "ab1", "ab2", "ab3", "ab4", "bdf1", "bdf2", "bdf3", "bdf4", "bdf5", "bdf6", "ebdf3", "ebdf4", "ebdf5",
];

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn sign(i: usize) -> Rational {
    if i % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Backward differentiation formula of step number `k`.
pub fn bdf(k: usize) -> Method {
    // sum_{j=1}^k (1/j) nabla^j y_{n+k} = h f_{n+k}
    let alpha: Vec<Rational> = (0..=k)
        .map(|i| {
            (i.max(1)..=k).fold(Rational::zero(), |acc, j| acc + rat(1, j as i64) * sign(i) * binom(j, i))
        })
        .collect();
    let a = (1..=k).map(|i| -&alpha[i] / &alpha[0]).collect();
    let mut b = vec![Rational::zero(); k + 1];
    b[0] = Rational::one() / &alpha[0];
    Method::new_unchecked(format!("bdf{k}"), Family::Bdf, a, b)
}

/// Adams-Bashforth method of step number `k`.
pub fn adams_bashforth(k: usize) -> Method {
    let mut g = vec![Rational::one()];
    for j in 1..k {
        let s = (0..j).fold(Rational::zero(), |acc, m| acc + &g[m] / rat((j + 1 - m) as i64, 1));
        g.push(Rational::one() - s);
    }
    let mut b = vec![Rational::zero(); k + 1];
    for i in 0..k {
        b[i + 1] = (i..k).fold(Rational::zero(), |acc, j| acc + &g[j] * sign(i) * binom(j, i));
    }
    let mut a = vec![Rational::zero(); k];
    a[0] = Rational::one();
    Method::new_unchecked(format!("ab{k}"), Family::Ab, a, b)
}

/// Starting values `tau_1..tau_k` of the extrapolated BDF methods.
pub fn ebdf_tau(k: usize) -> Option<Vec<Rational>> {
    Some(match k {
        3 => vec![rat(18, 11), rat(126, 121), rat(1212, 1331)],
        4 => vec![rat(48, 25), rat(504, 625), rat(10992, 15625), rat(366516, 390625)],
        5 => vec![
            rat(300, 137),
            rat(7800, 18769),
            rat(1271400, 2571353),
            rat(415574100, 352275361),
            rat(64978409160, 48261724457),
        ],
        _ => return None,
    })
}

/// Extrapolated BDF: the BDF `rho`, explicit, with `b` solved from the
/// starting values via `b_n = tau_n - sum_{j=1}^n a_j tau_{n-j}`.
pub fn ebdf(k: usize) -> Option<Method> {
    let tau = ebdf_tau(k)?;
    let a = bdf(k).a;
    let t = |n: usize| if n == 0 { Rational::zero() } else { tau[n - 1].clone() };
    let mut b = vec![Rational::zero(); k + 1];
    for n in 1..=k {
        b[n] = (1..=n).fold(t(n), |acc, j| acc - &a[j - 1] * t(n - j));
    }
    Some(Method::new_unchecked(format!("ebdf{k}"), Family::Ebdf, a, b))
}

pub fn catalog(name: &str) -> Result<Method> {
    let lower = name.trim().to_ascii_lowercase();
    let parse_k = |prefix: &str| lower.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    let m = if let Some(k) = parse_k("ebdf").filter(|k| (3..=5).contains(k)) {
        ebdf(k)
    } else if let Some(k) = parse_k("bdf").filter(|k| (1..=6).contains(k)) {
        Some(bdf(k))
    } else if let Some(k) = parse_k("ab").filter(|k| (1..=4).contains(k)) {
        Some(adams_bashforth(k))
    } else {
        None
    };
    m.ok_or_else(|| Error::UnknownMethod {
        name: name.to_string(),
        available: NAMES.iter().map(|s| s.to_string()).collect(),
    })
}

pub fn all() -> Vec<Method> {
    NAMES.iter().map(|n| catalog(n).expect("catalog name")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RootSelector {
    Smallest,
    Unique,
    SmallerOfTwo,
}

/// Known optimal coefficient of a catalog method.
#[derive(Clone, Debug)]
pub enum KnownValue {
    Exact(Rational),
    RootOf { poly: IntegerPoly, selector: RootSelector, approx: &'static str },
    Unbounded,
    NoneExists,
}

pub fn known_value(name: &str) -> Option<KnownValue> {
    let root = |c: &[&str], selector, approx| KnownValue::RootOf {
        poly: IntegerPoly::parse_desc(c).expect("valid literal"),
        selector,
        approx,
    };
    Some(match name {
        "ab1" => KnownValue::Exact(rat(1, 1)),
        "ab2" => KnownValue::Exact(rat(4, 9)),
        "ab3" => KnownValue::Exact(rat(84, 529)),
        "ab4" => KnownValue::NoneExists,
        "bdf1" => KnownValue::Unbounded,
        "bdf2" => KnownValue::Exact(rat(1, 2)),
        "bdf3" => root(&BDF3_POLY, RootSelector::Smallest, "0.831264155297"),
        "bdf4" => root(&BDF4_POLY, RootSelector::Unique, "0.486220284043"),
        "bdf5" => root(&BDF5_POLY, RootSelector::SmallerOfTwo, "0.304213712525"),
        "bdf6" => root(&BDF6_POLY, RootSelector::SmallerOfTwo, "0.131359487166"),
        _ => return None,
    })
}

pub const BDF3_POLY: [&str; 5] = ["5184", "-539352", "4277340", "-7093698", "3248425"];

pub const BDF4_POLY: [&str; 6] = ["147456", "-4065024", "97751296", "-178921248", "146499984", "-39945535"];

pub const BDF5_POLY: [&str; 11] = [
    "9183300480000000000",
    "85812841152000000000",
    "11922800956027200000000",
    "-158236459797931200000000",
    "1300372831455671124000000",
    "-3469598208824475416400000",
    "5222219230639370911710000",
    "-4938342912266137089480000",
    "2829602902356809601352800",
    "-897140360120473365541380",
    "113406532200497326720157",
];

pub const BDF6_POLY: [&str; 19] = [
    "301499153838045275528311603200000000",
    "122639585534504839818945201438720000000",
    "384963168041618344234237602954215424000000",
    "27549570033081885223128023207444584857600000",
    "688321830171904949334479202088109368934400000",
    "-3841469418723966761157769983211793789485056000",
    "114843588487750902323103668249803599786305126400",
    "-1006269459507863531788997342497299304467812843520",
    "5587246198359348966734174906666273788289332150272",
    "-17429944795858965010882996868073155329514839408640",
    "35959114141443095864886240750517884787497897431040",
    "-53357827225132542443145327442029250536098863687680",
    "58779078470720235677143648519968524504336318905600",
    "-48117131040654192740877887801688549303578668712064",
    "28809153195856173726312967696976168633917662024240",
    "-12158530101520566099221248226347019432756062262240",
    "3383327891741061214240426918034255832010259451480",
    "-541370800878125712591610585145194659522378896880",
    "33328092641186254550760247661168148768262937067",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bdf2_coefficients() {
        let m = catalog("bdf2").unwrap();
        assert_eq!(m.a, vec![rat(4, 3), rat(-1, 3)]);
        assert_eq!(m.b, vec![rat(2, 3), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn ab2_coefficients() {
        let m = catalog("ab2").unwrap();
        assert_eq!(m.a, vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(m.b, vec![rat(0, 1), rat(3, 2), rat(-1, 2)]);
    }

    #[test]
    fn ebdf3_matches_binomial_form() {
        let m = catalog("ebdf3").unwrap();
        assert_eq!(m.b, vec![rat(0, 1), rat(18, 11), rat(-18, 11), rat(6, 11)]);
        for k in 3..=5 {
            let e = ebdf(k).unwrap();
            let beta = bdf(k).b[0].clone();
            for j in 1..=k {
                assert_eq!(e.b[j], &beta * sign(j - 1) * binom(k, j), "ebdf{k} b{j}");
            }
        }
    }

    #[test]
    fn unknown_name_lists_available() {
        let err = catalog("rk4").unwrap_err().to_string();
        assert!(err.contains("bdf6") && err.contains("ebdf5"));
    }
}
