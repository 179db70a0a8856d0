//! Certified numeric evaluation of single and multiple zeta values.
//!
//! All arithmetic is ball arithmetic on binary fixed-point numbers
//! ([`ApproxReal`]), so every reported error bound covers truncation and
//! rounding together.

mod ball;
mod compositions;
pub mod fixed;
mod mzv;
pub mod tail;

use std::str::FromStr;

pub use ball::ApproxReal;
pub use compositions::{composition_count, compositions, Compositions};
pub use fixed::Fixed;
pub use mzv::{mzv_eval, pi_value, q_bruteforce, zeta_single, MzvIndex, MAX_CUTOFF};

use crate::error::{Error, Result};
use crate::exact::BigRational;

/// Digits carried beyond the target's magnitude.
pub const GUARD_DIGITS: u32 = 10;

/// Extra digits absorbing rounding growth over `N·d` accumulation steps.
const HEADROOM_DIGITS: u32 = 8;

pub const DEFAULT_TARGET: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionConfig {
    pub target_abs_error: f64,
    pub working_digits: u32,
}

impl PrecisionConfig {
    pub fn new(target_abs_error: f64) -> Result<Self> {
        if !(target_abs_error.is_finite() && target_abs_error > 0.0) {
            return Err(Error::Domain(format!(
                "target error must be a positive finite number, got {target_abs_error}"
            )));
        }
        let working_digits = digits_for(target_abs_error) + GUARD_DIGITS + HEADROOM_DIGITS;
        Ok(Self {
            target_abs_error,
            working_digits,
        })
    }

    /// Explicit working precision; must leave at least [`GUARD_DIGITS`]
    /// beyond the target.
    pub fn with_digits(target_abs_error: f64, working_digits: u32) -> Result<Self> {
        let base = Self::new(target_abs_error)?;
        let floor = base.target_digits() + GUARD_DIGITS;
        if working_digits < floor {
            return Err(Error::Domain(format!(
                "working precision {working_digits} digits leaves fewer than {GUARD_DIGITS} guard digits (need {floor})"
            )));
        }
        Ok(Self {
            working_digits,
            ..base
        })
    }

    /// Decimal digits the target asks for, `⌈−log₁₀ target⌉` (at least 1).
    pub fn target_digits(&self) -> u32 {
        digits_for(self.target_abs_error)
    }

    pub fn bits(&self) -> u32 {
        (self.working_digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    pub fn target_rational(&self) -> BigRational {
        BigRational::from_float(self.target_abs_error).expect("validated finite")
    }

    /// Same configuration with a tighter target, keeping at least the current
    /// working precision.
    pub fn tightened(&self, target_abs_error: f64) -> Result<Self> {
        let next = Self::new(target_abs_error)?;
        Ok(Self {
            working_digits: next.working_digits.max(self.working_digits),
            ..next
        })
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self::new(DEFAULT_TARGET).expect("default target is valid")
    }
}

impl FromStr for PrecisionConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let target: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("cannot parse precision '{s}'")))?;
        Self::new(target)
    }
}

fn digits_for(target: f64) -> u32 {
    (-target.log10()).ceil().max(1.0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_digits_enforced() {
        let cfg = PrecisionConfig::new(1e-12).unwrap();
        assert_eq!(cfg.target_digits(), 12);
        assert!(cfg.working_digits >= 12 + GUARD_DIGITS);
        assert!(PrecisionConfig::with_digits(1e-12, 21).is_err());
        assert!(PrecisionConfig::with_digits(1e-12, 22).is_ok());
        assert!(PrecisionConfig::new(0.0).is_err());
        assert!(PrecisionConfig::new(f64::NAN).is_err());
        assert!("1e-20".parse::<PrecisionConfig>().is_ok());
        assert!("abc".parse::<PrecisionConfig>().is_err());
    }
}
