//! Exact truncated power series and the generating-function oracle for
//! `Q(4n, d)`.
//!
//! With `g(t) = f(t^{1/4})` and `f(x) = sin x · sinh x / (2x²)`,
//!
//! ```text
//! g(s(1−t)) / g(s) = Σ_{n,d} Q(4n, d) / π^{4n} · t^d s^n,
//! ```
//!
//! so exact division of rational power series yields every `Q(4n, d)` as a
//! rational multiple of `π^{4n}` without any closed formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, sign, BigRational, PiRational};

/// `Σ_{k=0}^{order} c_k t^k + O(t^{order+1})`. Coefficients past `order` are
/// unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs order >= 0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|k| {
                    (0..=k).fold(BigRational::zero(), |acc, i| {
                        acc + &self.coeffs[i] * &other.coeffs[k - i]
                    })
                })
                .collect(),
        )
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..=self.order() {
            let acc = (1..=k).fold(BigRational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[k - i]
            });
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// `d/dt`; the result has one order less, so `None` at order 0.
    pub fn derivative(&self) -> Option<Self> {
        if self.order() == 0 {
            return None;
        }
        Some(Self::new(
            (1..=self.order())
                .map(|k| &self.coeffs[k] * int(k as u64))
                .collect(),
        ))
    }

    /// `f(t^k)`, known up to degree `k·order + k − 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = k * self.order() + k - 1;
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[k * i] = c.clone();
        }
        Self::new(out)
    }

    /// Divide by `t^k`, dropping the first `k` coefficients (which must be 0).
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "shift exceeds known coefficients");
        assert!(
            self.coeffs[..k].iter().all(Zero::is_zero),
            "dividing out t^k needs vanishing low coefficients"
        );
        Self::new(self.coeffs[k..].to_vec())
    }

    /// The truncated polynomial evaluated at `x` (no tail term).
    pub fn eval_polynomial(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

/// `g(t) = Σ_{k=0}^{order} (−1)^k 4^k / (4k+2)! · t^k`.
pub fn g_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                let k32 = k as u32;
                sign(k as i64)
                    * BigRational::new(BigInt::one() << (2 * k32), factorial(4 * k32 + 2))
            })
            .collect(),
    )
}

/// `sin x` up to and including degree `order`.
pub fn sin_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                if k % 2 == 1 {
                    sign(((k - 1) / 2) as i64) / int(factorial(k as u32))
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    )
}

/// `sinh x` up to and including degree `order`.
pub fn sinh_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                if k % 2 == 1 {
                    BigRational::one() / int(factorial(k as u32))
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    )
}

/// Checks `sin x · sinh x / (2x²) = g(x⁴)` coefficientwise through
/// `x^{4·order}`, from the real factorial series of `sin` and `sinh`.
pub fn verify_f_product(order: usize) -> bool {
    let degree = 4 * order + 3;
    let product = sin_series(degree).mul(&sinh_series(degree));
    let f = product
        .shift_down(2)
        .scale(&BigRational::new(1.into(), 2.into()));
    let g4 = g_series(order).substitute_power(4);
    (0..=4 * order).all(|k| f.coeff(k) == g4.coeff(k))
}

/// Bivariate series `Σ c[n][d] s^n t^d`, `0 ≤ n ≤ order_s`, `0 ≤ d ≤ order_t`,
/// with `s` as the outer variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn new(coeffs: Vec<Vec<BigRational>>) -> Self {
        assert!(!coeffs.is_empty(), "need order_s >= 0");
        let width = coeffs[0].len();
        assert!(width > 0, "need order_t >= 0");
        assert!(
            coeffs.iter().all(|row| row.len() == width),
            "rows must share order_t"
        );
        Self { coeffs }
    }

    pub fn order_s(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_t(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn get(&self, n: usize, d: usize) -> &BigRational {
        &self.coeffs[n][d]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.coeffs
    }

    /// `g(s(1−t))`: the `s^n t^d` coefficient is `g_n·C(n,d)·(−1)^d`.
    pub fn g_shifted(order_s: usize, order_t: usize) -> Self {
        let g = g_series(order_s);
        Self::new(
            (0..=order_s)
                .map(|n| {
                    (0..=order_t)
                        .map(|d| g.coeff(n) * int(binomial(n as u32, d as u32)) * sign(d as i64))
                        .collect()
                })
                .collect(),
        )
    }

    /// Multiply by a series in `s` alone.
    pub fn mul_series_in_s(&self, series: &TruncatedSeries) -> Self {
        let order = self.order_s().min(series.order());
        let width = self.order_t() + 1;
        Self::new(
            (0..=order)
                .into_par_iter()
                .map(|n| {
                    (0..width)
                        .map(|d| {
                            (0..=n).fold(BigRational::zero(), |acc, k| {
                                acc + series.coeff(k) * &self.coeffs[n - k][d]
                            })
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Divide by a series in `s` alone.
    pub fn div_series_in_s(&self, series: &TruncatedSeries) -> Result<Self> {
        Ok(self.mul_series_in_s(&series.inverse()?))
    }

    /// The coefficient of `t^d` as a series in `s`.
    pub fn t_coefficient(&self, d: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|row| row[d].clone()).collect())
    }
}

/// Exact table `c[n][d] = Q(4n, d) / π^{4n}` for `0 ≤ n ≤ max_n`,
/// `0 ≤ d ≤ max_d`, read off `g(s(1−t)) / g(s)`.
pub fn q_rational_table(max_n: usize, max_d: usize) -> Result<BivariateSeries> {
    if max_n < 1 || max_d < 1 {
        return Err(Error::Domain(format!(
            "table bounds must be >= 1, got max_n={max_n}, max_d={max_d}"
        )));
    }
    BivariateSeries::g_shifted(max_n, max_d).div_series_in_s(&g_series(max_n))
}

/// `ζ(4,…,4)` with `d` fours, `2·4^d·π^{4d}/(4d+2)!`: the `t^d` coefficient
/// of `ε(E(t)) = 2·g(−π⁴ t)`.
pub fn zeta_four_power(d: u32) -> PiRational {
    if d == 0 {
        return PiRational::new(BigRational::one(), 0);
    }
    let g = g_series(d as usize);
    PiRational::new(int(2) * sign(d as i64) * g.coeff(d as usize), 4 * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, zeta_even};

    #[test]
    fn g_series_first_terms() {
        assert_eq!(g_series(0).coeffs(), &[ratio(1, 2)]);
        assert_eq!(g_series(1).coeffs(), &[ratio(1, 2), ratio(-1, 180)]);
        assert_eq!(*g_series(2).coeff(2), ratio(1, 226800));
    }

    #[test]
    fn f_product_small_orders() {
        assert!(verify_f_product(0));
        assert!(verify_f_product(5));
    }

    #[test]
    fn table_entries() {
        let c = q_rational_table(3, 4).unwrap();
        assert_eq!(*c.get(0, 0), ratio(1, 1));
        assert_eq!(*c.get(1, 1), ratio(1, 90));
        assert_eq!(*c.get(2, 1), ratio(1, 9450));
        assert_eq!(*c.get(2, 2), ratio(1, 113400));
        assert_eq!(*c.get(3, 3), ratio(1, 681080400));
        for n in 1..=3 {
            assert!(c.get(n, 0).is_zero());
            for d in n + 1..=4 {
                assert!(c.get(n, d).is_zero(), "c[{n}][{d}]");
            }
        }
        assert!(q_rational_table(0, 3).is_err());
    }

    #[test]
    fn zeta_four_power_values() {
        assert_eq!(zeta_four_power(0), PiRational::new(ratio(1, 1), 0));
        assert_eq!(zeta_four_power(1), zeta_even(4).unwrap());
        assert_eq!(zeta_four_power(2), PiRational::new(ratio(1, 113400), 8));
        // ζ(4,4) = ζ(4)²/2 − ζ(8)/2
        let z4 = zeta_even(4).unwrap();
        let z8 = zeta_even(8).unwrap();
        let stuffle = (&z4 * &z4).checked_sub(&z8).unwrap().scale(&ratio(1, 2));
        assert_eq!(zeta_four_power(2), stuffle);
    }

    #[test]
    fn series_ops() {
        let g = g_series(6);
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv), TruncatedSeries::one(6));
        let zero_head = TruncatedSeries::new(vec![ratio(0, 1), ratio(1, 1)]);
        assert_eq!(g.div(&zero_head), Err(Error::ZeroConstantTerm));
        assert_eq!(g.mul(&g_series(2)).order(), 2);
        let d = g.derivative().unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(*d.coeff(0), ratio(-1, 180));
        assert!(TruncatedSeries::one(0).derivative().is_none());
    }
}
