use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RationalPoly;

/// Resultant over Q by the Euclidean remainder sequence.
pub fn resultant(a: &RationalPoly, b: &RationalPoly) -> BigRational {
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = BigRational::one();
    if a.deg() < b.deg() {
        if a.deg() * b.deg() % 2 == 1 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let (m, n) = (a.deg(), b.deg());
        if n == 0 {
            return acc * num_traits::pow(b.lc(), m);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return BigRational::zero();
        }
        let rd = r.deg();
        if m * n % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.lc(), m - rd);
        a = b;
        b = r;
    }
}

/// `(-1)^(n(n-1)/2) res(p, p') / lc(p)`; zero iff `p` has a multiple root.
pub fn discriminant(p: &RationalPoly) -> BigRational {
    let n = p.deg();
    assert!(n >= 1, "discriminant needs degree >= 1");
    if n == 1 {
        return BigRational::one();
    }
    let r = resultant(p, &p.derivative()) / p.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn quadratic_discriminant() {
        for (b, c) in [(3i64, 2i64), (-5, 7), (0, 1), (4, 4)] {
            let p = RationalPoly::from_i64_desc(&[1, b, c]);
            assert_eq!(discriminant(&p), rat(b * b - 4 * c, 1));
        }
        let sq = RationalPoly::from_i64_desc(&[1, -2, 1]);
        assert!(discriminant(&sq).is_zero());
    }

    #[test]
    fn resultant_of_linear_factors() {
        // res(x-1, x-3) = (1-3) with sign convention prod(a_i - b_j)
        let a = RationalPoly::from_i64_desc(&[1, -1]);
        let b = RationalPoly::from_i64_desc(&[1, -3]);
        assert_eq!(resultant(&a, &b), rat(-2, 1));
        // res((x-1)(x-2), x-3) = (1-3)(2-3) = 2
        let c = RationalPoly::from_i64_desc(&[1, -3, 2]);
        assert_eq!(resultant(&c, &b), rat(2, 1));
        assert_eq!(resultant(&b, &c), rat(2, 1));
    }

    #[test]
    fn cubic_discriminant() {
        // x^3 + p x + q  ->  -4p^3 - 27q^2
        let p = RationalPoly::from_i64_desc(&[1, 0, -3, 1]);
        assert_eq!(discriminant(&p), rat(-4 * -27 - 27, 1));
    }
}
