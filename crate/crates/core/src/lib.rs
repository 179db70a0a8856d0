//! Restricted sums of multiple zeta values.
//!
//! `Q(4n, d)` is the sum of `ζ(4j₁, …, 4j_d)` over all compositions
//! `j₁ + ⋯ + j_d = n` into positive parts. This crate computes it three
//! independent ways:
//!
//! - [`identities::q_theorem`]: a closed double sum in even zeta values and
//!   `Q(·, 2)`, exact in `ℚ·π^{4n}`;
//! - [`series::q_rational_table`]: exact coefficient extraction from the
//!   generating function `g(s(1−t))/g(s)`;
//! - [`numeric::q_bruteforce`]: certified numeric summation of every
//!   multiple zeta value in the composition set.
//!
//! Supporting modules verify the identities the closed form rests on:
//! [`ode`] checks the recursive differential systems and their closed-form
//! solutions symbolically, and [`identities`] checks the classical double
//! zeta relations exactly or numerically.

pub mod error;
pub mod exact;
pub mod identities;
pub mod numeric;
pub mod ode;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use exact::{bernoulli, gen_binomial, zeta_even, BigRational, PiRational};
pub use numeric::{ApproxReal, MzvIndex, PrecisionConfig};
pub use report::{Mode, Residual, VerificationReport};
