//! Ball arithmetic: a midpoint with a rigorous error radius.
//!
//! Every operation returns a ball guaranteed to contain the exact result of
//! applying the operation to any points of the input balls. Radii are always
//! rounded up.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::fixed::{sci_string_ceil, sci_string_nearest, Fixed};
use crate::error::{Error, Result};
use crate::exact::BigRational;

/// A real number known to lie in `[value − err, value + err]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReal {
    pub value: Fixed,
    pub err: Fixed,
}

fn f64_to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite tolerance")
}

impl ApproxReal {
    pub fn new(value: Fixed, err: Fixed) -> Self {
        assert!(!err.is_negative(), "error radius must be nonnegative");
        Self { value, err }
    }

    pub fn zero(bits: u32) -> Self {
        Self::new(Fixed::zero(bits), Fixed::zero(bits))
    }

    pub fn from_int(n: impl Into<BigInt>, bits: u32) -> Self {
        Self::new(Fixed::from_int(n, bits), Fixed::zero(bits))
    }

    /// Ball around a rational; the radius is zero when the rational is
    /// representable.
    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        let (value, exact) = Fixed::from_rational_nearest(q, bits);
        let err = if exact {
            Fixed::zero(bits)
        } else {
            Fixed::ulp(bits)
        };
        Self::new(value, err)
    }

    /// Ball around a rational midpoint with an extra rational radius.
    pub fn from_rational_with_err(q: &BigRational, err: &BigRational, bits: u32) -> Self {
        let mut ball = Self::from_rational(q, bits);
        ball.err = &ball.err + &Fixed::from_rational_ceil(err, bits);
        ball
    }

    pub fn bits(&self) -> u32 {
        self.value.bits().max(self.err.bits())
    }

    /// `|value| + err`, an upper bound on the magnitude of every point.
    pub fn abs_upper(&self) -> Fixed {
        &self.value.abs() + &self.err
    }

    /// `|value| − err`, possibly negative.
    pub fn abs_lower(&self) -> Fixed {
        &self.value.abs() - &self.err
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        let dist = (self.value.to_rational() - q).abs();
        dist <= self.err.to_rational()
    }

    /// `|value| ≤ err + tolerance`, i.e. zero is consistent with the ball
    /// widened by `tolerance`.
    pub fn within(&self, tolerance: f64) -> bool {
        let lhs = self.value.to_rational().abs();
        lhs <= self.err.to_rational() + f64_to_rational(tolerance)
    }

    /// Whether the enclosures are consistent with `|self − other| ≤ tolerance`.
    pub fn agrees_with(&self, other: &ApproxReal, tolerance: f64) -> bool {
        self.sub(other).within(tolerance)
    }

    pub fn err_f64(&self) -> f64 {
        self.err.to_f64()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        self.value.to_decimal_string(frac_digits)
    }

    pub fn to_sci_string(&self, sig: u32) -> String {
        sci_string_nearest(&self.value.to_rational(), sig)
    }

    pub fn err_sci_string(&self) -> String {
        sci_string_ceil(&self.err.to_rational(), 3)
    }

    pub fn neg(&self) -> ApproxReal {
        ApproxReal::new(-&self.value, self.err.clone())
    }

    pub fn add(&self, other: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.value + &other.value, &self.err + &other.err)
    }

    pub fn sub(&self, other: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.value - &other.value, &self.err + &other.err)
    }

    pub fn mul(&self, other: &ApproxReal) -> ApproxReal {
        let value = self.value.mul_floor(&other.value);
        let bits = value.bits();
        let err = [
            self.value.abs().mul_ceil(&other.err),
            other.value.abs().mul_ceil(&self.err),
            self.err.mul_ceil(&other.err),
            Fixed::ulp(bits),
        ]
        .iter()
        .fold(Fixed::zero(bits), |acc, e| &acc + e);
        ApproxReal::new(value, err)
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> ApproxReal {
        let k = k.into();
        ApproxReal::new(self.value.mul_int(&k), self.err.mul_int(&k.abs()))
    }

    pub fn mul_rational(&self, q: &BigRational) -> ApproxReal {
        self.mul(&ApproxReal::from_rational(q, self.bits()))
    }

    pub fn div_int(&self, k: impl Into<BigInt>) -> ApproxReal {
        let k = k.into();
        assert!(!k.is_zero(), "division by zero");
        let bits = self.bits();
        let err = &self.err.div_int_ceil(&k.abs()) + &Fixed::ulp(bits);
        ApproxReal::new(self.value.div_int_floor(&k), err)
    }

    pub fn div(&self, other: &ApproxReal) -> Result<ApproxReal> {
        let denom_low = other.abs_lower();
        if denom_low.is_negative() || denom_low.is_zero() {
            return Err(Error::NotSeparatedFromZero("divisor"));
        }
        let value = self.value.div_floor(&other.value);
        let bits = value.bits();
        // |a/b − am/bm| ≤ (ea + |am/bm|·eb) / (|bm| − eb)
        let quot = self.value.abs().div_ceil(&other.value.abs());
        let num = &self.err + &quot.mul_ceil(&other.err);
        let err = &num.div_ceil(&denom_low) + &Fixed::ulp(bits);
        Ok(ApproxReal::new(value, err))
    }

    pub fn sqrt(&self) -> Result<ApproxReal> {
        let low = &self.value - &self.err;
        if low.is_negative() || low.is_zero() {
            return Err(Error::NotSeparatedFromZero("sqrt argument"));
        }
        let value = self
            .value
            .sqrt_floor()
            .ok_or(Error::NotSeparatedFromZero("sqrt argument"))?;
        let bits = value.bits();
        let root_low = low.sqrt_floor().expect("positive");
        let prop = if self.err.is_zero() {
            Fixed::zero(bits)
        } else if root_low.is_zero() {
            return Err(Error::NotSeparatedFromZero("sqrt argument"));
        } else {
            // |√x − √m| ≤ r / √(m − r)
            self.err.div_ceil(&root_low)
        };
        Ok(ApproxReal::new(value, &prop + &Fixed::ulp(bits)))
    }

    /// `k^{-s}` for a positive integer `k`, correct to one ulp.
    pub fn recip_pow(k: u64, s: u32, bits: u32) -> ApproxReal {
        let denom = BigInt::from(k).pow(s);
        let q = BigRational::new(BigInt::one(), denom);
        ApproxReal::from_rational(&q, bits)
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a ApproxReal>, bits: u32) -> ApproxReal {
        items
            .into_iter()
            .fold(ApproxReal::zero(bits), |acc, x| acc.add(x))
    }

    fn widen_err(&self, extra: &Fixed) -> ApproxReal {
        ApproxReal::new(self.value.clone(), &self.err + extra)
    }

    /// Sums `Σ_k t_k` with `t_0 = first` and `t_k = ±t_{k−1}·step/divisor(k)`.
    /// Stops at the first term whose enclosure is within a few ulps of zero
    /// and whose ratio bound `|step|/divisor(k)` is at most 1/2; the omitted
    /// tail, that term included, is then at most twice its upper bound.
    /// `divisor` must be increasing.
    fn taylor(
        first: ApproxReal,
        step: &ApproxReal,
        divisor: impl Fn(u64) -> u64,
        alternating: bool,
    ) -> ApproxReal {
        let bits = first.bits();
        let step_upper = step.abs_upper().to_rational();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let stop = Fixed::ulp(bits).to_rational() * BigRational::from_integer(16.into());
        let mut total = first.clone();
        let mut term = first;
        let mut k = 0u64;
        loop {
            k += 1;
            let d = divisor(k);
            let ratio = &step_upper / BigRational::from_integer(BigInt::from(d));
            let mut next = term.mul(step).div_int(d);
            if alternating {
                next = next.neg();
            }
            let next_upper = next.abs_upper().to_rational();
            if ratio <= half && next_upper < stop {
                let tail = Fixed::from_rational_ceil(
                    &(next_upper * BigRational::from_integer(2.into())),
                    bits,
                );
                return total.widen_err(&tail);
            }
            total = total.add(&next);
            term = next;
        }
    }

    /// `e^x`.
    pub fn exp(&self) -> ApproxReal {
        let bits = self.bits();
        Self::taylor(ApproxReal::from_int(1, bits), self, |k| k, false)
    }

    pub fn sin(&self) -> ApproxReal {
        let sq = self.mul(self);
        Self::taylor(self.clone(), &sq, |k| (2 * k) * (2 * k + 1), true)
    }

    pub fn cos(&self) -> ApproxReal {
        let bits = self.bits();
        let sq = self.mul(self);
        Self::taylor(
            ApproxReal::from_int(1, bits),
            &sq,
            |k| (2 * k - 1) * (2 * k),
            true,
        )
    }

    pub fn sinh(&self) -> ApproxReal {
        let sq = self.mul(self);
        Self::taylor(self.clone(), &sq, |k| (2 * k) * (2 * k + 1), false)
    }

    pub fn cosh(&self) -> ApproxReal {
        let bits = self.bits();
        let sq = self.mul(self);
        Self::taylor(
            ApproxReal::from_int(1, bits),
            &sq,
            |k| (2 * k - 1) * (2 * k),
            false,
        )
    }

    /// π by Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
    pub fn pi(bits: u32) -> ApproxReal {
        let work = bits + 16;
        let a5 = atan_inv(5, work);
        let a239 = atan_inv(239, work);
        let pi = a5.mul_int(16).sub(&a239.mul_int(4));
        pi.round_to(bits)
    }

    /// Re-round to a lower precision, folding the rounding into the radius.
    pub fn round_to(&self, bits: u32) -> ApproxReal {
        if bits >= self.bits() {
            return ApproxReal::new(self.value.widen(bits), self.err.widen(bits));
        }
        let value = Fixed::from_rational_floor(&self.value.to_rational(), bits);
        let err = &Fixed::from_rational_ceil(&self.err.to_rational(), bits) + &Fixed::ulp(bits);
        ApproxReal::new(value, err)
    }

    /// `self^n` for a small nonnegative integer exponent.
    pub fn powi(&self, n: u32) -> ApproxReal {
        let mut acc = ApproxReal::from_int(1, self.bits());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `atan(1/n) = Σ (−1)^k / ((2k+1)·n^{2k+1})`, each term rounded once.
fn atan_inv(n: u64, bits: u32) -> ApproxReal {
    let one = BigInt::one() << bits;
    let n2 = BigInt::from(n * n);
    let mut power = BigInt::from(n);
    let mut total = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    loop {
        let term = &one / (&power * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        terms += 1;
        power *= &n2;
        k += 1;
    }
    // one ulp of truncation per term, plus the alternating tail (< 1 ulp)
    let err = Fixed::from_mantissa(BigInt::from(terms + 1), bits);
    ApproxReal::new(Fixed::from_mantissa(total, bits), err)
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.to_sci_string(20), self.err_sci_string())
    }
}
