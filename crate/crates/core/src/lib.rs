//! Certified step-size coefficients for boundedness of linear multistep
//! methods.

pub mod analyzer;
pub mod arith;
pub mod error;
pub mod methods;
pub mod poly;
pub mod recursion;

pub use error::{Error, Result};
