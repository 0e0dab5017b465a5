//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending order internally. The public
//! constructors and serialization use the descending convention
//! `{a_n, ..., a_0}`.

pub mod complex_roots;
pub mod param;
pub mod real_roots;
pub mod resultant;
pub mod unit_circle;

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{ComplexBox, Interval};
use crate::error::{Error, Result};

pub use complex_roots::{enclose_all_roots, enclose_family_roots, enclose_roots_at, ComplexRootEnclosure, IntervalPoly};
pub use param::ParamPoly;
pub use real_roots::{isolate_real_roots, refine, RealRootEnclosure};
pub use resultant::{discriminant, resultant};
pub use unit_circle::{root_condition, schur_cohn_strict, unit_circle_roots, RootCondition};

pub trait Coeff: Clone + PartialEq + Num + Neg<Output = Self> + fmt::Display {}
impl<T: Clone + PartialEq + Num + Neg<Output = T> + fmt::Display> Coeff for T {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    /// ascending: `c[i]` multiplies `x^i`; no trailing zeros
    c: Vec<T>,
}

pub type IntegerPoly = Poly<BigInt>;
pub type RationalPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![T::one()] }
    }

    pub fn constant(a: T) -> Self {
        Poly::from_ascending(vec![a])
    }

    /// `x`
    pub fn x() -> Self {
        Poly { c: vec![T::zero(), T::one()] }
    }

    pub fn from_ascending(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_descending(mut c: Vec<T>) -> Self {
        c.reverse();
        Poly::from_ascending(c)
    }

    pub fn ascending(&self) -> &[T] {
        &self.c
    }

    pub fn descending(&self) -> Vec<T> {
        self.c.iter().rev().cloned().collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> T {
        self.c.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.c.len().saturating_sub(1));
        let mut k = T::zero();
        for (i, a) in self.c.iter().enumerate() {
            if i > 0 {
                out.push(a.clone() * k.clone());
            }
            k = k + T::one();
        }
        Poly::from_ascending(out)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly::from_ascending((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly::from_ascending((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_ascending(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::from_ascending(self.c.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Poly::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// `x^k * self`
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// `x^deg * p(1/x)`
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Poly::from_ascending(c)
    }

    /// `p(x + a)` (Taylor shift).
    pub fn shift(&self, a: &T) -> Self {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].clone() * a.clone();
                c[j] = c[j].clone() + t;
            }
        }
        Poly::from_ascending(c)
    }

    /// `p(s * x)`
    pub fn scale_arg(&self, s: &T) -> Self {
        let mut pw = T::one();
        let mut out = Vec::with_capacity(self.c.len());
        for a in &self.c {
            out.push(a.clone() * pw.clone());
            pw = pw * s.clone();
        }
        Poly::from_ascending(out)
    }

    /// Number of leading zero coefficients at the low end (multiplicity of
    /// the root `0`).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }

    /// Divide out `x^k` for the largest possible `k`.
    pub fn strip_zero_roots(&self) -> Self {
        let k = self.zero_root_multiplicity();
        Poly { c: self.c[k..].to_vec() }
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_ascending(self.c.iter().map(f).collect())
    }

    /// Sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize
    where
        T: Signed,
    {
        let mut last = 0i8;
        let mut v = 0;
        for a in &self.c {
            let s = if a.is_positive() {
                1
            } else if a.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }
}

impl IntegerPoly {
    pub fn from_i64_desc(c: &[i64]) -> IntegerPoly {
        Poly::from_descending(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn parse_desc(c: &[&str]) -> Result<IntegerPoly> {
        let v = c
            .iter()
            .map(|s| {
                s.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                    what: "integer coefficient",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_descending(v))
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntegerPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Poly { c: self.c.iter().map(|a| a / &g).collect() }
    }

    pub fn to_rational(&self) -> RationalPoly {
        self.map(|a| BigRational::from_integer(a.clone()))
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of(&self.eval_rational(x))
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Horner on numerator/denominator: sum a_i n^i d^(deg-i) / d^deg
        let (n, d) = (x.numer(), x.denom());
        let deg = self.deg();
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for a in self.c.iter().rev() {
            acc = acc * n + a * &dpow;
            dpow *= d;
        }
        let _ = deg;
        // dpow is now d^(deg+1); divide by d^deg
        BigRational::new(acc, dpow / d)
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let p = x.prec();
        let mut acc = Interval::zero(p);
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&Interval::from_int(a.clone(), p));
        }
        acc
    }

    pub fn eval_box(&self, z: &ComplexBox) -> ComplexBox {
        let p = z.prec();
        let mut acc = ComplexBox::zero(p);
        for a in self.c.iter().rev() {
            acc = acc.mul(z).add(&ComplexBox::real(Interval::from_int(a.clone(), p)));
        }
        acc
    }
}

impl RationalPoly {
    pub fn from_rationals_desc(c: Vec<BigRational>) -> RationalPoly {
        Poly::from_descending(c)
    }

    pub fn from_i64_desc(c: &[i64]) -> RationalPoly {
        IntegerPoly::from_i64_desc(c).to_rational()
    }

    /// Clear denominators and take the primitive part.
    pub fn to_integer_primitive(&self) -> IntegerPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
        let ip: IntegerPoly =
            Poly::from_ascending(self.c.iter().map(|a| (a * BigRational::from_integer(l.clone())).to_integer()).collect());
        ip.primitive_part()
    }

    pub fn monic(&self) -> RationalPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.lc();
        self.scale(&(BigRational::one() / l))
    }

    /// Euclidean division: `self = q * d + r`, `deg r < deg d`.
    pub fn divrem(&self, d: &RationalPoly) -> (RationalPoly, RationalPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        let lc_inv = BigRational::one() / d.lc();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] * &lc_inv;
            if !t.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[i + j] -= &t * dj;
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Poly::from_ascending(q), Poly::from_ascending(r))
    }

    pub fn rem(&self, d: &RationalPoly) -> RationalPoly {
        self.divrem(d).1
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, d: &RationalPoly) -> RationalPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &RationalPoly) -> RationalPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            // keep sizes in check
            b = if r.is_zero() { r } else { r.to_integer_primitive().to_rational() };
        }
        a.monic()
    }

    /// Yun's square-free decomposition: returns `(f_i, i)` with
    /// `self = lc * prod f_i^i`, each `f_i` square-free, monic, non-constant
    /// and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(RationalPoly, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0);
        let mut c = fp.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            if b.deg() == 0 {
                break;
            }
            c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> RationalPoly {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of(&self.eval(x))
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let p = x.prec();
        let mut acc = Interval::zero(p);
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&Interval::from_rational(a, p));
        }
        acc
    }

    pub fn eval_box(&self, z: &ComplexBox) -> ComplexBox {
        let p = z.prec();
        let mut acc = ComplexBox::zero(p);
        for a in self.c.iter().rev() {
            acc = acc.mul(z).add(&ComplexBox::from_rational(a, p));
        }
        acc
    }

    pub fn to_f64_desc(&self) -> Vec<f64> {
        self.c.iter().rev().map(crate::arith::rational::to_f64).collect()
    }

    /// Sturm sequence: `p, p'`, then negated remainders made primitive.
    pub fn sturm_sequence(&self) -> Vec<RationalPoly> {
        let mut seq = vec![self.clone()];
        if self.deg() == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the signs
            let r = r.neg();
            let ip = r.to_integer_primitive().to_rational();
            let ip = if r.lc().is_negative() != ip.lc().is_negative() { ip.neg() } else { ip };
            seq.push(ip);
        }
        seq
    }

    /// Number of distinct real roots in `(a, b]` via Sturm's theorem.
    /// `None` endpoints stand for `-inf` / `+inf`.
    pub fn sturm_count(&self, a: Option<&BigRational>, b: Option<&BigRational>) -> usize {
        let seq = self.sturm_sequence();
        let var = |x: Option<&BigRational>, neg_inf: bool| -> usize {
            let signs: Vec<i8> = seq
                .iter()
                .map(|p| match x {
                    Some(x) => p.sign_at(x),
                    None => {
                        let s = sign_of(&p.lc());
                        if neg_inf && p.deg() % 2 == 1 {
                            -s
                        } else {
                            s
                        }
                    }
                })
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let va = var(a, true);
        let vb = var(b, false);
        va.saturating_sub(vb)
    }
}

pub fn sign_of<T: Signed>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.c.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.c.iter().rev().map(|a| a.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let refs: Vec<&str> = v.iter().map(String::as_str).collect();
        IntegerPoly::parse_desc(&refs).map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let c = v
            .iter()
            .map(|s| crate::arith::parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Poly::from_descending(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn rp(c: &[i64]) -> RationalPoly {
        RationalPoly::from_i64_desc(c)
    }

    #[test]
    fn descending_roundtrip_and_json() {
        let p = IntegerPoly::from_i64_desc(&[5184, -539352, 4277340, -7093698, 3248425]);
        assert_eq!(p.deg(), 4);
        assert_eq!(p.coeff(0), BigInt::from(3248425));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["5184","-539352","4277340","-7093698","3248425"]"#);
        let back: IntegerPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn divrem_and_gcd() {
        let a = rp(&[1, 0, -1]); // x^2 - 1
        let b = rp(&[1, -1]); // x - 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, rp(&[1, 1]));
        assert!(r.is_zero());
        let g = rp(&[1, -3, 2]).gcd(&rp(&[1, 0, -1]));
        assert_eq!(g, rp(&[1, -1]));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x+2)^3 x
        let p = rp(&[1, -1]).pow(2).mul(&rp(&[1, 2]).pow(3)).mul(&rp(&[1, 0]));
        let d = p.squarefree_decomposition();
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], (rp(&[1, 0]), 1));
        assert_eq!(d[1], (rp(&[1, -1]), 2));
        assert_eq!(d[2], (rp(&[1, 2]), 3));
    }

    #[test]
    fn taylor_shift_and_rational_eval() {
        let p = IntegerPoly::from_i64_desc(&[1, 0, -4]);
        let s = p.shift(&BigInt::from(2)); // (x+2)^2 - 4 = x^2 + 4x
        assert_eq!(s, IntegerPoly::from_i64_desc(&[1, 4, 0]));
        assert_eq!(p.eval_rational(&rat(1, 2)), rat(-15, 4));
        assert_eq!(p.to_rational().eval(&rat(1, 2)), rat(-15, 4));
    }

    #[test]
    fn sturm_counts() {
        let p = rp(&[1, 0, -4]);
        assert_eq!(p.sturm_count(None, None), 2);
        assert_eq!(p.sturm_count(Some(&rat(0, 1)), None), 1);
        let q = rp(&[1, 0, 1]);
        assert_eq!(q.sturm_count(None, None), 0);
    }
}
