//! Polynomials in `z` whose coefficients are polynomials in a parameter.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::complex_roots::IntervalPoly;
use super::resultant::discriminant;
use super::RationalPoly;
use crate::arith::{rat, Interval};

#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoly {
    /// ascending in `z`; entry `i` is the coefficient of `z^i` as a
    /// polynomial in the parameter
    c: Vec<RationalPoly>,
}

impl ParamPoly {
    pub fn from_ascending(mut c: Vec<RationalPoly>) -> ParamPoly {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        ParamPoly { c }
    }

    pub fn coeffs(&self) -> &[RationalPoly] {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Largest parameter degree among the coefficients.
    pub fn param_degree(&self) -> usize {
        self.c.iter().map(|p| p.deg()).max().unwrap_or(0)
    }

    pub fn at(&self, g: &BigRational) -> RationalPoly {
        RationalPoly::from_ascending(self.c.iter().map(|p| p.eval(g)).collect())
    }

    pub fn at_interval(&self, g: &Interval) -> IntervalPoly {
        IntervalPoly::from_ascending(self.c.iter().map(|p| p.eval_interval(g)).collect())
    }

    /// Discriminant in `z` as a polynomial in the parameter, by evaluation
    /// at rational nodes (avoiding zeros of the leading coefficient) and
    /// Lagrange interpolation.
    pub fn discriminant(&self) -> RationalPoly {
        let n = self.degree();
        assert!(n >= 1, "discriminant of a parameter-constant polynomial");
        let bound = (2 * n - 2) * self.param_degree();
        let lead = self.c.last().unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let mut t = 0i64;
        while xs.len() <= bound {
            let g = rat(t, 1);
            t += 1;
            if lead.eval(&g).is_zero() {
                continue;
            }
            ys.push(discriminant(&self.at(&g)));
            xs.push(g);
        }
        lagrange(&xs, &ys)
    }
}

/// Interpolating polynomial through `(xs[i], ys[i])`.
pub fn lagrange(xs: &[BigRational], ys: &[BigRational]) -> RationalPoly {
    let mut out = RationalPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RationalPoly::one();
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&RationalPoly::from_ascending(vec![-xj.clone(), BigRational::one()]));
                denom *= xi - xj;
            }
        }
        out = out.add(&basis.scale(&(yi / denom)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_of_parametric_quadratic() {
        // (2g+3) z^2 - 4 z + 1: disc = 16 - 4(2g+3) = 4 - 8g
        let p = ParamPoly::from_ascending(vec![
            RationalPoly::from_i64_desc(&[1]),
            RationalPoly::from_i64_desc(&[-4]),
            RationalPoly::from_i64_desc(&[2, 3]),
        ]);
        assert_eq!(p.discriminant(), RationalPoly::from_i64_desc(&[-8, 4]));
    }
}
