use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Adding `a·π^m` to `b·π^k` with `m ≠ k`.
    #[error("mixed pi powers: pi^{left} + pi^{right}")]
    MixedPiPower { left: u32, right: u32 },

    #[error("zeta({0}) has no rational multiple-of-pi-power form (odd argument)")]
    OddZeta(u32),

    #[error("divergent: s1 must be ≥ 2")]
    Divergent,

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("precision unreachable: target {target:e} needs cutoff beyond {limit}")]
    PrecisionUnreachable { target: f64, limit: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("wrong base: expected {expected}, found {found}")]
    WrongBase {
        expected: &'static str,
        found: &'static str,
    },

    /// A ball-arithmetic division or root whose operand interval touches zero.
    #[error("interval contains zero: {0}")]
    NotSeparatedFromZero(&'static str),
}
