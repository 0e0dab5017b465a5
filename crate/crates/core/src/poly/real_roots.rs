//! Real-root isolation by Descartes' rule of signs with dyadic bisection.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntegerPoly, RationalPoly};
use crate::arith::{rat, Interval};

/// One real root of `poly`, isolated in `[lo, hi]`.
///
/// Either `lo == hi` (the root is that rational) or `lo < hi`, neither
/// endpoint is a root, and `poly` changes sign across the interval.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRootEnclosure {
    /// square-free, primitive, positive leading coefficient
    pub poly: IntegerPoly,
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RealRootEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn to_interval(&self, prec: u64) -> Interval {
        Interval::from_rational_bounds(&self.lo, &self.hi, prec)
    }

    pub fn approx(&self) -> f64 {
        crate::arith::rational::to_f64(&self.midpoint())
    }

    /// Exact comparison of the root with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(q);
        }
        if q < &self.lo {
            return Ordering::Greater;
        }
        if q > &self.hi {
            return Ordering::Less;
        }
        let sq = self.poly.sign_at(q);
        if sq == 0 {
            return Ordering::Equal;
        }
        if sq == self.poly.sign_at(&self.lo) {
            // q lies on the lo side of the root
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Bisect once; keeps the invariants.
    pub fn bisect(&self) -> RealRootEnclosure {
        if self.is_exact() {
            return self.clone();
        }
        let m = self.midpoint();
        let sm = self.poly.sign_at(&m);
        let mut out = self.clone();
        if sm == 0 {
            out.lo = m.clone();
            out.hi = m;
        } else if sm == self.poly.sign_at(&self.lo) {
            out.lo = m;
        } else {
            out.hi = m;
        }
        out
    }

    pub fn refine(&self, width: &BigRational) -> RealRootEnclosure {
        refine(self, width)
    }

    /// Exact test `q(root) == 0`. Assumes the enclosure isolates the root.
    pub fn is_root_of(&self, q: &RationalPoly) -> bool {
        if q.is_zero() {
            return true;
        }
        if self.is_exact() {
            return q.eval(&self.lo).is_zero();
        }
        let h = self.poly.to_rational().gcd(q);
        // h divides the square-free poly, so it has at most this one root here
        h.deg() > 0 && h.sign_at(&self.lo) != h.sign_at(&self.hi)
    }
}

/// Shrink `enc` by bisection until its width is at most `width`.
pub fn refine(enc: &RealRootEnclosure, width: &BigRational) -> RealRootEnclosure {
    assert!(width.is_positive(), "refine width must be positive");
    let mut e = enc.clone();
    if e.is_exact() {
        return e;
    }
    let slo = e.poly.sign_at(&e.lo);
    while &e.width() > width {
        let m = e.midpoint();
        let sm = e.poly.sign_at(&m);
        if sm == 0 {
            e.lo = m.clone();
            e.hi = m;
            break;
        } else if sm == slo {
            e.lo = m;
        } else {
            e.hi = m;
        }
    }
    e
}

/// Power of two strictly exceeding every root modulus (Cauchy bound).
fn root_bound_exp(p: &IntegerPoly) -> i64 {
    let lc_bits = p.lc().bits() as i64;
    let max_bits = p.ascending().iter().map(|a| a.bits() as i64).max().unwrap_or(0);
    (max_bits - lc_bits + 2).max(1)
}

/// Descartes bound for the roots of `p` in the open interval `(a, b)`.
fn descartes(p: &IntegerPoly, a: &BigRational, b: &BigRational) -> usize {
    let r = p.to_rational().shift(a).scale_arg(&(b - a));
    let s = r.reversed().to_integer_primitive();
    s.shift(&BigInt::one()).sign_variations()
}

/// Isolating intervals for the distinct real roots of a square-free
/// integer polynomial, sorted ascending.
fn isolate_squarefree(p: &IntegerPoly) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let e = root_bound_exp(p);
    let b = BigRational::from_integer(BigInt::one() << e as u64);
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match descartes(p, &lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let w = &hi - &lo;
                // split near the middle at a point that is not a root
                let half = &lo + &w * rat(1, 2);
                let m = std::iter::once(half.clone())
                    .chain((2..).map(|j| &half + &w * crate::arith::rational::pow2(-j)))
                    .find(|m| p.sign_at(m) != 0)
                    .expect("infinite candidate sequence");
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// All real roots of `p` with multiplicities, as pairwise disjoint
/// isolating intervals sorted ascending.
pub fn isolate_real_roots(p: &IntegerPoly) -> Vec<RealRootEnclosure> {
    assert!(!p.is_zero(), "isolate_real_roots of the zero polynomial");
    let mut encs = Vec::new();
    for (f, mult) in p.to_rational().squarefree_decomposition() {
        let fi = f.to_integer_primitive();
        for (lo, hi) in isolate_squarefree(&fi) {
            encs.push(RealRootEnclosure { poly: fi.clone(), lo, hi, multiplicity: mult });
        }
    }
    separate(&mut encs);
    encs
}

/// Real roots of a rational polynomial.
pub fn isolate_real_roots_rational(p: &RationalPoly) -> Vec<RealRootEnclosure> {
    isolate_real_roots(&p.to_integer_primitive())
}

/// Bisect overlapping neighbours (roots of different square-free factors)
/// until all intervals are disjoint.
fn separate(encs: &mut Vec<RealRootEnclosure>) {
    loop {
        encs.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
        let mut clash = None;
        for i in 1..encs.len() {
            if encs[i].lo <= encs[i - 1].hi {
                clash = Some(i);
                break;
            }
        }
        match clash {
            None => return,
            Some(i) => {
                encs[i] = encs[i].bisect();
                encs[i - 1] = encs[i - 1].bisect();
            }
        }
    }
}

/// Smallest positive real root of `p`, if any.
pub fn smallest_positive_root(p: &IntegerPoly) -> Option<RealRootEnclosure> {
    let zero = BigRational::zero();
    for mut e in isolate_real_roots(p) {
        if e.cmp_rational(&zero) != Ordering::Greater {
            continue;
        }
        if e.lo < zero {
            // zero is not a root of this factor, so it is a valid endpoint
            e.lo = zero.clone();
        }
        return Some(e);
    }
    None
}
