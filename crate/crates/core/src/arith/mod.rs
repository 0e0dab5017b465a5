//! Exact rationals and outward-rounded interval arithmetic.

pub mod complex;
pub mod expr;
pub mod float;
pub mod interval;
pub mod precision;
pub mod rational;

pub use complex::ComplexBox;
pub use expr::{interval_eval, Expr};
pub use float::{Float, Round};
pub use interval::{certified_sign, Interval, Sign};
pub use precision::Precision;
pub use rational::{parse_rational, rat, rational_of, Rational};
