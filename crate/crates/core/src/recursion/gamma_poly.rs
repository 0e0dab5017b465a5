//! `mu_n` as a rational function of `gamma`.
//!
//! With `D = 1 + b_0 gamma`, `mu_n(gamma) = Num_n(gamma) / D^(n+1)` where
//! `Num_n = b_n D^n + sum_j (a_j - b_j gamma) D^(j-1) Num_{n-j}`.
//! `D` has no positive root when `b_0 >= 0`, so on `gamma > 0` the sign and
//! the roots of `mu_n` are those of `Num_n`.

use num_traits::Zero;

use crate::arith::Rational;
use crate::methods::Method;
use crate::poly::RationalPoly;

/// `Num_0..=Num_{n_max}`.
pub fn mu_numerators(m: &Method, n_max: usize) -> Vec<RationalPoly> {
    let k = m.k;
    let d = RationalPoly::from_ascending(vec![Rational::from_integer(1.into()), m.b[0].clone()]);
    let mut dpow = vec![RationalPoly::one()];
    for i in 1..=n_max.max(k) {
        dpow.push(dpow[i - 1].mul(&d));
    }
    let e: Vec<RationalPoly> = (1..=k)
        .map(|j| RationalPoly::from_ascending(vec![m.a[j - 1].clone(), -&m.b[j]]))
        .collect();
    let mut out: Vec<RationalPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = if n <= k && !m.b[n].is_zero() { dpow[n].scale(&m.b[n]) } else { RationalPoly::zero() };
        for j in 1..=k.min(n) {
            let prev = &out[n - j];
            if prev.is_zero() || e[j - 1].is_zero() {
                continue;
            }
            acc = acc.add(&e[j - 1].mul(&dpow[j - 1]).mul(prev));
        }
        out.push(acc);
    }
    out
}

pub fn mu_numerator(m: &Method, n: usize) -> RationalPoly {
    mu_numerators(m, n).pop().expect("n + 1 numerators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::methods::catalog;
    use crate::recursion::sequence::eval_mu;

    #[test]
    fn numerator_matches_exact_values() {
        for name in ["bdf3", "ab3", "ebdf4"] {
            let m = catalog(name).unwrap();
            let nums = mu_numerators(&m, 12);
            for g in [rat(1, 3), rat(7, 5)] {
                let d = Rational::from_integer(1.into()) + &g * &m.b[0];
                for (n, p) in nums.iter().enumerate() {
                    let v = p.eval(&g) / num_traits::pow(d.clone(), n + 1);
                    assert_eq!(v, eval_mu(&m, &g, n as i64).unwrap(), "{name} n={n}");
                }
            }
        }
    }

    #[test]
    fn ab2_second_numerator_root() {
        let p = mu_numerator(&catalog("ab2").unwrap(), 2);
        assert!(p.eval(&rat(4, 9)).is_zero());
    }
}
