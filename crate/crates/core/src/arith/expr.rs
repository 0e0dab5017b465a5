//! Small arithmetic expression trees, evaluated either exactly or in
//! interval arithmetic.

use num_rational::BigRational;
use num_traits::Zero;

use super::interval::Interval;
use super::precision::Precision;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Expr {
    Const(BigRational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Sqrt(Box<Expr>),
}

impl Expr {
    pub fn c(q: BigRational) -> Expr {
        Expr::Const(q)
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn sqrt(a: Expr) -> Expr {
        Expr::Sqrt(Box::new(a))
    }

    pub fn eval_interval(&self, prec: u64) -> Result<Interval> {
        Ok(match self {
            Expr::Const(q) => Interval::from_rational(q, prec),
            Expr::Add(a, b) => a.eval_interval(prec)?.add(&b.eval_interval(prec)?),
            Expr::Sub(a, b) => a.eval_interval(prec)?.sub(&b.eval_interval(prec)?),
            Expr::Mul(a, b) => a.eval_interval(prec)?.mul(&b.eval_interval(prec)?),
            Expr::Div(a, b) => a.eval_interval(prec)?.div(&b.eval_interval(prec)?)?,
            Expr::Neg(a) => -a.eval_interval(prec)?,
            Expr::Sqrt(a) => a
                .eval_interval(prec)?
                .sqrt()
                .ok_or_else(|| Error::Inconclusive("square root of a negative interval".into()))?,
        })
    }

    /// Exact value; `None` if the tree contains a square root or divides by
    /// zero.
    pub fn eval_exact(&self) -> Option<BigRational> {
        Some(match self {
            Expr::Const(q) => q.clone(),
            Expr::Add(a, b) => a.eval_exact()? + b.eval_exact()?,
            Expr::Sub(a, b) => a.eval_exact()? - b.eval_exact()?,
            Expr::Mul(a, b) => a.eval_exact()? * b.eval_exact()?,
            Expr::Div(a, b) => {
                let d = b.eval_exact()?;
                if d.is_zero() {
                    return None;
                }
                a.eval_exact()? / d
            }
            Expr::Neg(a) => -a.eval_exact()?,
            Expr::Sqrt(_) => return None,
        })
    }
}

pub fn interval_eval(expr: &Expr, precision: Precision) -> Result<Interval> {
    expr.eval_interval(precision.bits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn residual_constant_for_three_step_bound() {
        // 2 * sqrt(2/11)
        let e = Expr::mul(Expr::c(rat(2, 1)), Expr::sqrt(Expr::c(rat(2, 11))));
        let v = interval_eval(&e, Precision::digits(50).unwrap()).unwrap();
        assert!(v.lo_rational() > rat(85, 100) && v.hi_rational() < rat(86, 100));
    }

    #[test]
    fn division_by_zero_interval_is_an_error() {
        let x = Expr::c(rat(1, 3));
        let e = Expr::div(Expr::c(rat(1, 1)), Expr::sub(x.clone(), x));
        assert!(interval_eval(&e, Precision::digits(20).unwrap()).is_err());
    }
}
