use std::fmt;

use crate::exact::PiRational;
use crate::numeric::ApproxReal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Exact difference of the two sides; a pass requires it to be zero.
    Exact(PiRational),
    /// Exact symbolic residual that has no π-power form (a polynomial
    /// identity). `None` means identically zero.
    Symbolic(Option<String>),
    /// Certified enclosure of the difference plus the pass tolerance.
    Numeric { diff: ApproxReal, tolerance: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub instance: Vec<i64>,
    pub mode: Mode,
    pub residual: Residual,
    pub passed: bool,
}

impl VerificationReport {
    pub fn exact(name: &str, instance: Vec<i64>, residual: PiRational) -> Self {
        let passed = residual.is_zero();
        Self {
            name: name.to_string(),
            instance,
            mode: Mode::Exact,
            residual: Residual::Exact(residual),
            passed,
        }
    }

    pub fn symbolic(name: &str, instance: Vec<i64>, failure: Option<String>) -> Self {
        Self {
            name: name.to_string(),
            instance,
            mode: Mode::Exact,
            passed: failure.is_none(),
            residual: Residual::Symbolic(failure),
        }
    }

    /// Passes iff `|diff.value| ≤ diff.err + tolerance`.
    pub fn numeric(name: &str, instance: Vec<i64>, diff: ApproxReal, tolerance: f64) -> Self {
        let passed = diff.within(tolerance);
        Self {
            name: name.to_string(),
            instance,
            mode: Mode::Numeric,
            residual: Residual::Numeric { diff, tolerance },
            passed,
        }
    }

    pub fn instance_label(&self) -> String {
        self.instance
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({}) {} residual=",
            self.name,
            self.instance_label(),
            self.mode.as_str()
        )?;
        match &self.residual {
            Residual::Exact(r) => write!(f, "{r}"),
            Residual::Symbolic(None) => write!(f, "0"),
            Residual::Symbolic(Some(msg)) => write!(f, "{msg}"),
            Residual::Numeric { diff, tolerance } => write!(
                f,
                "{} ± {} (tol {tolerance:e})",
                diff.to_sci_string(3),
                diff.err_sci_string()
            ),
        }
    }
}

/// True iff every report passed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
