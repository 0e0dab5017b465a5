//! Linear multistep methods
//! `y_n = sum_{j=1}^k a_j y_{n-j} + h sum_{j=0}^k b_j f(y_{n-j})`.

pub mod catalog;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::poly::{root_condition, schur_cohn_strict, ParamPoly, RationalPoly, RootCondition};

pub use catalog::{catalog, known_value, KnownValue, RootSelector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "AB")]
    Ab,
    #[serde(rename = "BDF")]
    Bdf,
    #[serde(rename = "EBDF")]
    Ebdf,
    Custom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Method {
    pub name: String,
    pub family: Family,
    pub k: usize,
    /// `a_1..a_k`
    pub a: Vec<Rational>,
    /// `b_0..b_k`
    pub b: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingPolys {
    pub rho: RationalPoly,
    pub sigma: RationalPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssumptionCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub checks: Vec<AssumptionCheck>,
}

impl Validation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AssumptionCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

#[derive(Serialize, Deserialize)]
struct MethodFile {
    k: usize,
    a: Vec<String>,
    b: Vec<String>,
    name: String,
}

impl Method {
    /// Checks field lengths only.
    pub fn new(name: impl Into<String>, family: Family, a: Vec<Rational>, b: Vec<Rational>) -> Result<Method> {
        let k = a.len();
        if k == 0 {
            return Err(Error::MalformedMethod("step number must be positive".into()));
        }
        if b.len() != k + 1 {
            return Err(Error::MalformedMethod(format!("expected {} b coefficients, got {}", k + 1, b.len())));
        }
        Ok(Method { name: name.into(), family, k, a, b })
    }

    pub(crate) fn new_unchecked(name: String, family: Family, a: Vec<Rational>, b: Vec<Rational>) -> Method {
        Method::new(name, family, a, b).expect("generator produces consistent lengths")
    }

    /// Parse the custom-method JSON format and validate the result.
    pub fn from_json(s: &str) -> Result<Method> {
        let f: MethodFile = serde_json::from_str(s)?;
        let parse = |v: &[String]| v.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>();
        let m = Method::new(f.name, Family::Custom, parse(&f.a)?, parse(&f.b)?)?;
        if m.k != f.k {
            return Err(Error::MalformedMethod(format!("k = {} but {} a coefficients", f.k, m.k)));
        }
        let v = m.validate();
        if !v.passed() {
            let names: Vec<_> = v.failures().iter().map(|c| format!("{} ({})", c.name, c.witness)).collect();
            return Err(Error::InvalidMethod(names.join("; ")));
        }
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let f = MethodFile {
            k: self.k,
            a: self.a.iter().map(|x| x.to_string()).collect(),
            b: self.b.iter().map(|x| x.to_string()).collect(),
            name: self.name.clone(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    pub fn is_explicit(&self) -> bool {
        self.b[0].is_zero()
    }

    pub fn generating_polys(&self) -> GeneratingPolys {
        let mut rho = vec![Rational::one()];
        rho.extend(self.a.iter().map(|a| -a));
        GeneratingPolys {
            rho: RationalPoly::from_descending(rho),
            sigma: RationalPoly::from_descending(self.b.clone()),
        }
    }

    /// Positive common denominator of all coefficients.
    pub fn denominator(&self) -> BigInt {
        self.a.iter().chain(&self.b).fold(BigInt::one(), |l, x| l.lcm(x.denom()))
    }

    /// `rho + gamma sigma` as a polynomial in `z` with integer-coefficient
    /// polynomials in `gamma`, scaled by [`Method::denominator`].
    pub fn char_param_poly(&self) -> ParamPoly {
        let d = Rational::from_integer(self.denominator());
        let k = self.k;
        // coefficient of z^(k-j): -(a_j - gamma b_j), and (1 + gamma b_0) for j = 0
        let coeff = |j: usize| {
            let (c0, c1) = if j == 0 {
                (Rational::one(), self.b[0].clone())
            } else {
                (-&self.a[j - 1], self.b[j].clone())
            };
            RationalPoly::from_ascending(vec![c0 * &d, c1 * &d])
        };
        ParamPoly::from_ascending((0..=k).map(|i| coeff(k - i)).collect())
    }

    /// The characteristic polynomial of the `mu` recursion at `gamma`:
    /// a positive multiple of `rho + gamma sigma`.
    pub fn char_poly_mu(&self, gamma: &Rational) -> Result<RationalPoly> {
        let lead = Rational::one() + gamma * &self.b[0];
        if lead.is_zero() {
            return Err(Error::InvalidMethod("1 + gamma b_0 vanishes".into()));
        }
        Ok(self.char_param_poly().at(gamma))
    }

    /// `tau_1..tau_n` by the exact recursion.
    pub fn tau_prefix(&self, n: usize) -> Vec<Rational> {
        let mut t: Vec<Rational> = vec![self.b[0].clone()];
        for m in 1..=n {
            let mut v = if m <= self.k { self.b[m].clone() } else { Rational::zero() };
            for j in 1..=self.k.min(m) {
                v += &self.a[j - 1] * &t[m - j];
            }
            t.push(v);
        }
        t
    }

    /// First `n` in `1..=k` with `tau_n != 0`.
    pub fn n0(&self) -> Option<usize> {
        let t = self.tau_prefix(self.k);
        (1..=self.k).find(|&n| !t[n].is_zero())
    }

    pub fn validate(&self) -> Validation {
        let g = self.generating_polys();
        let mut checks = Vec::new();

        let sum_a: Rational = self.a.iter().sum();
        let moment: Rational = self.a.iter().enumerate().map(|(j, a)| a * Rational::from_integer((j + 1).into())).sum();
        let sum_b: Rational = self.b.iter().sum();
        checks.push(AssumptionCheck {
            name: "consistency",
            passed: sum_a.is_one() && moment == sum_b,
            witness: format!("sum a = {sum_a}, sum j a_j = {moment}, sum b = {sum_b}"),
        });

        let rc = root_condition(&g.rho);
        checks.push(AssumptionCheck {
            name: "zero-stability",
            passed: rc != RootCondition::Violated,
            witness: format!("root condition of rho: {rc:?}"),
        });

        let gcd = g.rho.gcd(&g.sigma);
        checks.push(AssumptionCheck {
            name: "irreducibility",
            passed: !g.sigma.is_zero() && gcd.deg() == 0,
            witness: format!("gcd(rho, sigma) = {gcd:?}"),
        });

        checks.push(AssumptionCheck {
            name: "b0-nonnegative",
            passed: !self.b[0].is_negative(),
            witness: format!("b_0 = {}", self.b[0]),
        });
        Validation { checks }
    }

    /// Interior of the stability region, taken as `1 - lambda b_0 != 0` and
    /// all roots of `rho - lambda sigma` strictly inside the unit disk.
    pub fn in_stability_interior(&self, lambda: &BigRational) -> Membership {
        let lead = Rational::one() - lambda * &self.b[0];
        if lead.is_zero() {
            return Membership::No;
        }
        let g = self.generating_polys();
        let p = g.rho.sub(&g.sigma.scale(lambda));
        if schur_cohn_strict(&p) {
            Membership::Yes
        } else {
            Membership::No
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn generating_polys_match() {
        let g = catalog("bdf2").unwrap().generating_polys();
        assert_eq!(g.rho, RationalPoly::from_rationals_desc(vec![rat(1, 1), rat(-4, 3), rat(1, 3)]));
        assert_eq!(g.sigma, RationalPoly::from_rationals_desc(vec![rat(2, 3), rat(0, 1), rat(0, 1)]));
        let g = catalog("ab1").unwrap().generating_polys();
        assert_eq!(g.rho, RationalPoly::from_i64_desc(&[1, -1]));
        assert_eq!(g.sigma, RationalPoly::from_i64_desc(&[1]));
    }

    #[test]
    fn char_poly_bdf5() {
        let m = catalog("bdf5").unwrap();
        let p = m.char_param_poly();
        let c = p.coeffs();
        assert_eq!(c[5], RationalPoly::from_i64_desc(&[60, 137]));
        assert_eq!(
            (0..5).map(|i| c[i].coeff(0)).collect::<Vec<_>>(),
            vec![rat(-12, 1), rat(75, 1), rat(-200, 1), rat(300, 1), rat(-300, 1)]
        );
    }

    #[test]
    fn validation_catches_each_assumption() {
        assert!(catalog("bdf6").unwrap().validate().passed());
        let m = Method::new("x", Family::Custom, vec![rat(2, 1), rat(-1, 1)], vec![rat(0, 1), rat(1, 1), rat(0, 1)]).unwrap();
        let v = m.validate();
        assert!(!v.checks[1].passed);
        let m = Method::new("y", Family::Custom, vec![rat(1, 1)], vec![rat(-1, 1), rat(2, 1)]).unwrap();
        assert!(!m.validate().checks[3].passed);
    }

    #[test]
    fn n0_values() {
        assert_eq!(catalog("ebdf3").unwrap().n0(), Some(1));
        assert_eq!(catalog("ebdf5").unwrap().n0(), Some(1));
        assert_eq!(catalog("ab1").unwrap().n0(), Some(1));
    }

    #[test]
    fn custom_json_roundtrip() {
        let m = catalog("ab2").unwrap();
        let back = Method::from_json(&m.to_json()).unwrap();
        assert_eq!(back.a, m.a);
        assert_eq!(back.b, m.b);
        assert!(Method::from_json(r#"{"k":1,"a":["2"],"b":["0","1"],"name":"bad"}"#).is_err());
    }

    #[test]
    fn stability_interior_points() {
        let ab1 = catalog("ab1").unwrap();
        assert_eq!(ab1.in_stability_interior(&rat(-1, 1)), Membership::Yes);
        assert_eq!(ab1.in_stability_interior(&rat(-2, 1)), Membership::No);
        assert_eq!(catalog("bdf3").unwrap().in_stability_interior(&rat(-2, 1)), Membership::Yes);
        assert_eq!(catalog("ab3").unwrap().in_stability_interior(&rat(-84, 529)), Membership::Yes);
    }
}
