use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Working precision, stated in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Precision(u32);

pub const MIN_DIGITS: u32 = 10;
pub const DEFAULT_START_DIGITS: u32 = 64;
pub const DEFAULT_CAP_DIGITS: u32 = 20_000;

/// Environment override for the escalation cap.
pub const CAP_ENV: &str = "SCB_PRECISION_CAP";

impl Precision {
    pub fn digits(d: u32) -> Result<Precision> {
        if d < MIN_DIGITS {
            return Err(Error::PrecisionTooLow { min: MIN_DIGITS, got: d });
        }
        Ok(Precision(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `ceil(d * log2(10))`, using a rational upper bound of log2(10).
    pub fn bits(self) -> u64 {
        // 3.32192809489 > log2(10) = 3.321928094887...
        let num = self.0 as u64 * 332_192_809_489;
        num.div_ceil(100_000_000_000)
    }

    /// Next rung of the escalation ladder, or `None` once `cap` is reached.
    pub fn escalate(self, cap: Precision) -> Option<Precision> {
        if self >= cap {
            None
        } else {
            Some(Precision((self.0.saturating_mul(2)).min(cap.0)))
        }
    }

    pub fn default_start() -> Precision {
        Precision(DEFAULT_START_DIGITS)
    }

    /// Cap from the environment if set and valid, else the built-in default.
    pub fn default_cap() -> Precision {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u32>().ok())
            .and_then(|d| Precision::digits(d).ok())
            .unwrap_or(Precision(DEFAULT_CAP_DIGITS))
    }
}

impl Default for Precision {
    fn default() -> Precision {
        Precision::default_start()
    }
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} digits", self.0)
    }
}
