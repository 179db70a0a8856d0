//! Exact rational scalars, Bernoulli numbers and even zeta values.
//!
//! Even zeta values are rational multiples of powers of π, so they are kept
//! as [`PiRational`] and never touch floating point.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Ordinary binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Shorthand for the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(-1)^k` as a rational sign.
pub(crate) fn sign(k: i64) -> BigRational {
    if k.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

static BERNOULLI: LazyLock<Mutex<Vec<BigRational>>> =
    LazyLock::new(|| Mutex::new(vec![BigRational::one()]));

/// Bernoulli number `B_m` with `B_1 = -1/2`.
///
/// Computed from `Σ_{k=0}^{m} C(m+1, k) B_k = 0` and memoized process-wide.
pub fn bernoulli(m: u32) -> BigRational {
    if m >= 3 && m % 2 == 1 {
        return BigRational::zero();
    }
    let mut table = BERNOULLI.lock().expect("bernoulli table poisoned");
    while table.len() <= m as usize {
        let next = table.len() as u32;
        let value = if next >= 3 && next % 2 == 1 {
            BigRational::zero()
        } else {
            let acc = table
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_zero())
                .fold(BigRational::zero(), |acc, (k, b)| {
                    acc + b * BigRational::from_integer(binomial(next + 1, k as u32))
                });
            -acc / int(next + 1)
        };
        table.push(value);
    }
    table[m as usize].clone()
}

/// A value `coeff · π^pi_power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    pub coeff: BigRational,
    pub pi_power: u32,
}

impl PiRational {
    pub fn new(coeff: BigRational, pi_power: u32) -> Self {
        Self { coeff, pi_power }
    }

    pub fn zero(pi_power: u32) -> Self {
        Self::new(BigRational::zero(), pi_power)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Sum of two values of the same π-degree. Mixed degrees are rejected.
    pub fn checked_add(&self, other: &PiRational) -> Result<PiRational> {
        if self.pi_power != other.pi_power {
            return Err(Error::MixedPiPower {
                left: self.pi_power,
                right: other.pi_power,
            });
        }
        Ok(PiRational::new(&self.coeff + &other.coeff, self.pi_power))
    }

    pub fn checked_sub(&self, other: &PiRational) -> Result<PiRational> {
        self.checked_add(&-other.clone())
    }

    pub fn scale(&self, factor: &BigRational) -> PiRational {
        PiRational::new(&self.coeff * factor, self.pi_power)
    }

    /// Multiply by `π^k`.
    pub fn times_pi_power(&self, k: u32) -> PiRational {
        PiRational::new(self.coeff.clone(), self.pi_power + k)
    }
}

impl Mul for &PiRational {
    type Output = PiRational;

    fn mul(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Mul for PiRational {
    type Output = PiRational;

    fn mul(self, rhs: PiRational) -> PiRational {
        &self * &rhs
    }
}

impl Neg for PiRational {
    type Output = PiRational;

    fn neg(self) -> PiRational {
        PiRational::new(-self.coeff, self.pi_power)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · π^{}", self.coeff, self.pi_power)
    }
}

/// `ζ(m)` for even `m ≥ 0` as `q·π^m`, with `ζ(0) = -1/2`.
pub fn zeta_even(m: u32) -> Result<PiRational> {
    if m % 2 == 1 {
        return Err(Error::OddZeta(m));
    }
    if m == 0 {
        return Ok(PiRational::new(ratio(-1, 2), 0));
    }
    let n = (m / 2) as i64;
    // ζ(2n) = (-1)^{n+1} B_{2n} (2π)^{2n} / (2·(2n)!)
    let two_pow = BigInt::one() << m;
    let coeff = sign(n + 1) * bernoulli(m) * BigRational::new(two_pow, 2 * factorial(m));
    Ok(PiRational::new(coeff, m))
}

/// Generalized binomial coefficient `a(a−1)⋯(a−d+1)/d!` for rational `a`.
pub fn gen_binomial(a: &BigRational, d: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..d {
        acc *= &term;
        term -= BigRational::one();
    }
    acc / BigRational::from_integer(factorial(d))
}

/// Rising factorial `p(p+1)⋯(p+k−1)`.
pub(crate) fn rising(p: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (p + i))
}

/// `⌊a/b⌋` for signed integers.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Lossless decimal rendering of the numerator and denominator.
pub fn rational_parts(q: &BigRational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn zeta_even_values() {
        assert_eq!(zeta_even(0).unwrap(), PiRational::new(ratio(-1, 2), 0));
        assert_eq!(zeta_even(2).unwrap(), PiRational::new(ratio(1, 6), 2));
        assert_eq!(zeta_even(4).unwrap(), PiRational::new(ratio(1, 90), 4));
        assert_eq!(zeta_even(8).unwrap(), PiRational::new(ratio(1, 9450), 8));
        assert_eq!(zeta_even(3), Err(Error::OddZeta(3)));
    }

    #[test]
    fn gen_binomial_cases() {
        assert_eq!(gen_binomial(&int(0), 3), int(0));
        assert_eq!(gen_binomial(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(gen_binomial(&int(5), 2), int(10));
        assert_eq!(gen_binomial(&ratio(7, 3), 0), int(1));
    }

    #[test]
    fn mixed_pi_power_rejected() {
        let a = zeta_even(2).unwrap();
        let b = zeta_even(4).unwrap();
        assert_eq!(
            a.checked_add(&b),
            Err(Error::MixedPiPower { left: 2, right: 4 })
        );
        let sum = b.checked_add(&b).unwrap();
        assert_eq!(sum, PiRational::new(ratio(1, 45), 4));
    }

    #[test]
    fn display_form() {
        assert_eq!(zeta_even(4).unwrap().to_string(), "1/90 · π^4");
    }
}
