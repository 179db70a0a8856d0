//! Binary fixed-point numbers `mant / 2^bits` over big integers.
//!
//! Addition and subtraction are exact. Every other operation names its
//! rounding direction, which is what lets [`super::ApproxReal`] keep a
//! rigorous error radius.

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fixed {
    mant: BigInt,
    bits: u32,
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Fixed {
    pub fn from_mantissa(mant: BigInt, bits: u32) -> Self {
        Self { mant, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Self::from_mantissa(BigInt::zero(), bits)
    }

    pub fn ulp(bits: u32) -> Self {
        Self::from_mantissa(BigInt::one(), bits)
    }

    pub fn from_int(n: impl Into<BigInt>, bits: u32) -> Self {
        Self::from_mantissa(n.into() << bits, bits)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    fn scaled_numer(q: &BigRational, bits: u32) -> BigInt {
        q.numer() << bits
    }

    pub fn from_rational_floor(q: &BigRational, bits: u32) -> Self {
        Self::from_mantissa(Self::scaled_numer(q, bits).div_floor(q.denom()), bits)
    }

    pub fn from_rational_ceil(q: &BigRational, bits: u32) -> Self {
        Self::from_mantissa(div_ceil(&Self::scaled_numer(q, bits), q.denom()), bits)
    }

    /// Rounds to nearest; reports whether the conversion was exact.
    pub fn from_rational_nearest(q: &BigRational, bits: u32) -> (Self, bool) {
        let num = Self::scaled_numer(q, bits);
        let (quot, rem) = num.div_mod_floor(q.denom());
        let exact = rem.is_zero();
        let mant = if (&rem << 1u32) >= *q.denom() {
            quot + 1
        } else {
            quot
        };
        (Self::from_mantissa(mant, bits), exact)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Fixed {
        Self::from_mantissa(self.mant.abs(), self.bits)
    }

    /// Re-express at a higher precision (exact).
    pub fn widen(&self, bits: u32) -> Fixed {
        assert!(bits >= self.bits, "widen cannot reduce precision");
        Self::from_mantissa(&self.mant << (bits - self.bits), bits)
    }

    fn aligned(a: &Fixed, b: &Fixed) -> (BigInt, BigInt, u32) {
        let bits = a.bits.max(b.bits);
        (&a.mant << (bits - a.bits), &b.mant << (bits - b.bits), bits)
    }

    pub fn mul_floor(&self, other: &Fixed) -> Fixed {
        let (a, b, bits) = Self::aligned(self, other);
        Self::from_mantissa((a * b) >> bits, bits)
    }

    pub fn mul_ceil(&self, other: &Fixed) -> Fixed {
        let (a, b, bits) = Self::aligned(self, other);
        let denom = BigInt::one() << bits;
        Self::from_mantissa(div_ceil(&(a * b), &denom), bits)
    }

    pub fn div_floor(&self, other: &Fixed) -> Fixed {
        let (a, b, bits) = Self::aligned(self, other);
        Self::from_mantissa((a << bits).div_floor(&b), bits)
    }

    pub fn div_ceil(&self, other: &Fixed) -> Fixed {
        let (a, b, bits) = Self::aligned(self, other);
        Self::from_mantissa(div_ceil(&(a << bits), &b), bits)
    }

    pub fn div_int_floor(&self, k: &BigInt) -> Fixed {
        Self::from_mantissa(self.mant.div_floor(k), self.bits)
    }

    pub fn div_int_ceil(&self, k: &BigInt) -> Fixed {
        Self::from_mantissa(div_ceil(&self.mant, k), self.bits)
    }

    pub fn mul_int(&self, k: &BigInt) -> Fixed {
        Self::from_mantissa(&self.mant * k, self.bits)
    }

    /// `⌊√self⌋` at the same precision; `None` for negative input.
    pub fn sqrt_floor(&self) -> Option<Fixed> {
        if self.is_negative() {
            return None;
        }
        Some(Self::from_mantissa(
            (&self.mant << self.bits).sqrt(),
            self.bits,
        ))
    }

    /// Plain decimal rendering with `frac_digits` digits after the point,
    /// rounded to nearest.
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        decimal_string(&self.to_rational(), frac_digits)
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fixed {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Self::aligned(self, other);
        a.cmp(&b)
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        let (a, b, bits) = Fixed::aligned(self, rhs);
        Fixed::from_mantissa(a + b, bits)
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        let (a, b, bits) = Fixed::aligned(self, rhs);
        Fixed::from_mantissa(a - b, bits)
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed::from_mantissa(-&self.mant, self.bits)
    }
}

/// Decimal string of a rational with `frac_digits` fractional digits,
/// rounded half away from zero.
pub fn decimal_string(q: &BigRational, frac_digits: u32) -> String {
    let scale = num_traits::pow(BigInt::from(10), frac_digits as usize);
    let scaled = q.abs() * BigRational::from_integer(scale);
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor();
    let digits = rounded.to_integer().to_string();
    let neg = q.is_negative() && digits.chars().any(|c| c != '0');
    let width = frac_digits as usize + 1;
    let padded = format!("{digits:0>width$}");
    let split = padded.len() - frac_digits as usize;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&padded[..split]);
    if frac_digits > 0 {
        out.push('.');
        out.push_str(&padded[split..]);
    }
    out
}

/// Scientific notation with `sig` significant digits, rounded toward
/// `+∞` in magnitude. Used for error bounds, which must never print low.
pub fn sci_string_ceil(q: &BigRational, sig: u32) -> String {
    sci_string(q, sig, true)
}

/// Scientific notation with `sig` significant digits, rounded to nearest.
pub fn sci_string_nearest(q: &BigRational, sig: u32) -> String {
    sci_string(q, sig, false)
}

fn sci_string(q: &BigRational, sig: u32, ceil: bool) -> String {
    use num_traits::ToPrimitive;
    if q.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let neg = q.is_negative();
    let mag = q.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    let approx = mag.to_f64().unwrap_or(f64::MIN_POSITIVE);
    let mut exp = if approx > 0.0 && approx.is_finite() {
        approx.log10().floor() as i32
    } else {
        0
    };
    let pow10 = |e: i32| -> BigRational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            BigRational::one() / num_traits::pow(ten.clone(), (-e) as usize)
        }
    };
    // settle exp so that 10^exp ≤ mag < 10^(exp+1)
    while mag < pow10(exp) {
        exp -= 1;
    }
    while mag >= pow10(exp + 1) {
        exp += 1;
    }
    let scaled = &mag / pow10(exp - (sig as i32 - 1));
    let mut m = if ceil {
        scaled.ceil().to_integer()
    } else {
        (scaled + BigRational::new(BigInt::one(), BigInt::from(2)))
            .floor()
            .to_integer()
    };
    if m >= num_traits::pow(BigInt::from(10), sig as usize) {
        m /= 10;
        exp += 1;
    }
    let digits = m.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..1]);
    if digits.len() > 1 {
        out.push('.');
        out.push_str(&digits[1..]);
    }
    out.push_str(&format!("e{exp}"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rational_rounding_directions() {
        let third = ratio(1, 3);
        let lo = Fixed::from_rational_floor(&third, 10);
        let hi = Fixed::from_rational_ceil(&third, 10);
        assert_eq!(hi.mantissa() - lo.mantissa(), BigInt::one());
        assert!(lo.to_rational() <= third && third <= hi.to_rational());
        let neg = Fixed::from_rational_floor(&-third.clone(), 10);
        assert!(neg.to_rational() <= -third);
    }

    #[test]
    fn mul_and_div_bracket_truth() {
        let a = Fixed::from_rational_floor(&ratio(7, 5), 40);
        let b = Fixed::from_rational_floor(&ratio(-3, 11), 40);
        let exact = a.to_rational() * b.to_rational();
        assert!(a.mul_floor(&b).to_rational() <= exact);
        assert!(a.mul_ceil(&b).to_rational() >= exact);
        let q = a.to_rational() / b.to_rational();
        assert!(a.div_floor(&b).to_rational() <= q);
        assert!(a.div_ceil(&b).to_rational() >= q);
    }

    #[test]
    fn sqrt_of_two() {
        let two = Fixed::from_int(2, 64);
        let r = two.sqrt_floor().unwrap();
        let sq = r.to_rational() * r.to_rational();
        assert!(sq <= ratio(2, 1));
        let next = &r + &Fixed::ulp(64);
        assert!(next.to_rational() * next.to_rational() > ratio(2, 1));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(decimal_string(&ratio(1, 8), 3), "0.125");
        assert_eq!(decimal_string(&ratio(-1, 3), 4), "-0.3333");
        assert_eq!(decimal_string(&ratio(2, 3), 2), "0.67");
        assert_eq!(decimal_string(&ratio(31, 10), 0), "3");
    }

    #[test]
    fn scientific_formatting() {
        assert_eq!(sci_string_ceil(&ratio(1, 3), 3), "3.34e-1");
        assert_eq!(sci_string_nearest(&ratio(1, 3), 3), "3.33e-1");
        assert_eq!(sci_string_ceil(&ratio(1, 1000), 2), "1.0e-3");
        assert_eq!(sci_string_ceil(&ratio(999_999, 1000), 2), "1.0e3");
        assert_eq!(sci_string_nearest(&ratio(-25, 1), 2), "-2.5e1");
    }
}
