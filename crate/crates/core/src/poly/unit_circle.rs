//! Exact location of roots relative to the unit circle.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RationalPoly;
use crate::arith::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum RootCondition {
    /// every root has modulus below one
    SatisfiedStrictly,
    /// moduli at most one, unit-modulus roots simple
    Satisfied,
    Violated,
}

/// Schur-Cohn reduction: `true` iff every root lies in the open unit disk.
pub fn schur_cohn_strict(p: &RationalPoly) -> bool {
    let mut c: Vec<BigRational> = p.ascending().to_vec();
    loop {
        let n = c.len() - 1;
        if n == 0 {
            return true;
        }
        let a0 = c[0].clone();
        let an = c[n].clone();
        if a0.abs() >= an.abs() {
            return false;
        }
        // (a_n p(z) - a_0 p*(z)) / z
        let next: Vec<BigRational> = (1..=n).map(|i| &an * &c[i] - &a0 * &c[n - i]).collect();
        let q = RationalPoly::from_ascending(next).to_integer_primitive().to_rational();
        c = q.ascending().to_vec();
    }
}

/// Number of distinct roots of `p` on the unit circle, and whether `1` is
/// one of them.
pub fn unit_circle_roots(p: &RationalPoly) -> (usize, bool) {
    let sf = p.squarefree_part();
    let g = sf.gcd(&sf.reversed());
    (on_circle_count(&g), p.eval(&BigRational::one()).is_zero())
}

/// Roots on the unit circle of a real, square-free polynomial whose root
/// set is closed under `z -> 1/z`.
fn on_circle_count(g: &RationalPoly) -> usize {
    let mut g = g.clone();
    let mut count = 0;
    for r in [1i64, -1] {
        let x = rat(r, 1);
        if g.deg() > 0 && g.eval(&x).is_zero() {
            count += 1;
            g = g.exact_div(&RationalPoly::from_ascending(vec![-x, BigRational::one()]));
        }
    }
    let d = g.deg();
    if d == 0 {
        return count;
    }
    debug_assert!(d % 2 == 0, "self-inversive part without +-1 roots has even degree");
    // g(z) = z^m T(z + 1/z), using z^k + z^-k = P_k(z + 1/z)
    let m = d / 2;
    let x = RationalPoly::x();
    let mut p_prev = RationalPoly::constant(rat(2, 1));
    let mut p_cur = x.clone();
    let mut t = RationalPoly::constant(g.coeff(m));
    for k in 1..=m {
        if k > 1 {
            let next = x.mul(&p_cur).sub(&p_prev);
            p_prev = p_cur;
            p_cur = next;
        }
        t = t.add(&p_cur.scale(&g.coeff(m + k)));
    }
    // roots on the circle (other than +-1) <-> real roots of T in (-2, 2)
    count + 2 * t.sturm_count(Some(&rat(-2, 1)), Some(&rat(2, 1)))
}

/// Exact root condition for `p`.
pub fn root_condition(p: &RationalPoly) -> RootCondition {
    let mut on_circle = false;
    for (f, mult) in p.squarefree_decomposition() {
        let g = f.gcd(&f.reversed());
        let h = f.exact_div(&g);
        if h.deg() > 0 && !schur_cohn_strict(&h) {
            return RootCondition::Violated;
        }
        if g.deg() > 0 {
            // roots of g come in pairs z, 1/z unless on the circle
            if on_circle_count(&g) < g.deg() || mult > 1 {
                return RootCondition::Violated;
            }
            on_circle = true;
        }
    }
    if on_circle {
        RootCondition::Satisfied
    } else {
        RootCondition::SatisfiedStrictly
    }
}
