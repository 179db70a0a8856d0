//! Symbolic checks of the recursive differential systems behind the closed
//! formula.
//!
//! All objects are finite rational combinations of quarter powers of a base
//! variable, stored in quarter units: exponent `e` means `base^{e/4}`.
//!
//! - `x̃ₙ, ỹₙ, z̃ₙ, w̃ₙ` live over the base `1 − v`;
//! - `x_d, y_d, z_d, w_d` are polynomials in `u` (exponents multiple of 4);
//! - `X_d, Y_d, Z_d, W_d` are the same data over `s = u²`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, floor_div, gen_binomial, int, ratio, sign, BigRational};
use crate::numeric::ApproxReal;
use crate::report::VerificationReport;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `1 − v`
    OneMinusV,
    S,
    U,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::OneMinusV => "(1-v)",
            Base::S => "s",
            Base::U => "u",
        }
    }
}

/// One of the four coefficient families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    X,
    Y,
    Z,
    W,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::X, Family::Y, Family::Z, Family::W];

    pub fn letter(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::W => "w",
        }
    }
}

/// `Σ c_e · base^{e/4}` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarterPowerPoly {
    base: Base,
    terms: BTreeMap<i64, BigRational>,
}

impl QuarterPowerPoly {
    pub fn zero(base: Base) -> Self {
        Self {
            base,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(base: Base, c: BigRational) -> Self {
        Self::from_terms(base, [(0, c)])
    }

    pub fn from_terms(base: Base, terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut out = Self::zero(base);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigRational> {
        &self.terms
    }

    pub fn term(&self, e: i64) -> BigRational {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent (in quarter units), `None` for the zero polynomial.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn same_base(&self, other: &Self) {
        assert_eq!(self.base, other.base, "mixing quarter-power bases");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_base(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_terms(self.base, self.terms.iter().map(|(e, c)| (*e, c * factor)))
    }

    /// Multiply by `base^{e/4}`.
    pub fn shift(&self, e: i64) -> Self {
        Self::from_terms(
            self.base,
            self.terms.iter().map(|(k, c)| (k + e, c.clone())),
        )
    }

    /// Same coefficients over another base with exponents multiplied by
    /// `num/den` (must stay integral).
    pub fn rebase(&self, base: Base, num: i64, den: i64) -> Self {
        Self::from_terms(
            base,
            self.terms.iter().map(|(e, c)| {
                assert_eq!((e * num) % den, 0, "rebase must keep integral exponents");
                (e * num / den, c.clone())
            }),
        )
    }

    /// `d/dv` over the base `1 − v`: `c·(1−v)^{e/4} ↦ −c·(e/4)·(1−v)^{(e−4)/4}`.
    pub fn ddv(&self) -> Result<Self> {
        if self.base != Base::OneMinusV {
            return Err(Error::WrongBase {
                expected: Base::OneMinusV.name(),
                found: self.base.name(),
            });
        }
        Ok(Self::from_terms(
            self.base,
            self.terms.iter().map(|(e, c)| (e - 4, -c * ratio(*e, 4))),
        ))
    }

    /// `d/du` over the base `u`: `c·u^k ↦ k·c·u^{k−1}`.
    pub fn ddu(&self) -> Result<Self> {
        if self.base != Base::U {
            return Err(Error::WrongBase {
                expected: Base::U.name(),
                found: self.base.name(),
            });
        }
        Ok(Self::from_terms(
            self.base,
            self.terms.iter().map(|(e, c)| (e - 4, c * ratio(*e, 4))),
        ))
    }

    /// Value at `base = 1`, i.e. at `v = 0` for the base `1 − v`.
    pub fn eval_at_base_one(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Maclaurin coefficients in `v` of a `(1−v)`-based object:
    /// `(1−v)^a = Σ_d (−1)^d C(a, d) v^d`.
    pub fn v_expansion(&self, order: usize) -> Result<TruncatedSeries> {
        if self.base != Base::OneMinusV {
            return Err(Error::WrongBase {
                expected: Base::OneMinusV.name(),
                found: self.base.name(),
            });
        }
        Ok(TruncatedSeries::new(
            (0..=order as u32)
                .map(|d| {
                    self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
                        acc + c * sign(d as i64) * gen_binomial(&ratio(*e, 4), d)
                    })
                })
                .collect(),
        ))
    }

    /// Numeric value at a base point. Quarter roots are taken only when some
    /// exponent is not a multiple of 4.
    pub fn eval(&self, base_value: &ApproxReal) -> Result<ApproxReal> {
        let bits = base_value.bits();
        let integral = self.terms.keys().all(|e| e % 4 == 0);
        let (point, step) = if integral {
            (base_value.clone(), 4)
        } else {
            (base_value.sqrt()?.sqrt()?, 1)
        };
        let mut total = ApproxReal::zero(bits);
        for (e, c) in &self.terms {
            let k = e / step;
            let power = point.powi(k.unsigned_abs() as u32);
            let power = if k < 0 {
                ApproxReal::from_int(1, bits).div(&power)?
            } else {
                power
            };
            total = total.add(&power.mul_rational(c));
        }
        Ok(total)
    }
}

impl fmt::Display for QuarterPowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let base = self.base.name();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})·{base}^({e}/4)"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `x̃ₙ, ỹₙ, z̃ₙ, w̃ₙ` as finite sums over `(1−v)^{(j−2)/4}`.
pub fn tilde_closed_form(n: u32, family: Family) -> QuarterPowerPoly {
    let n_i = n as i64;
    let two_n = int(num_bigint::BigInt::one() << n);
    // (sign shift, number of j terms − 1); z and w carry (1 ∓ (−1)ⁿ), which is
    // 0 or 2 and turns 2^{n−1} into 2^n.
    let (shift, top) = match family {
        Family::X => (floor_div(n_i + 2, 2), 2 * n + 1),
        Family::Y => (floor_div(n_i + 3, 2), 2 * n + 1),
        Family::Z if n % 2 == 1 => ((n_i - 1) / 2, 2 * n),
        Family::W if n.is_multiple_of(2) => (n_i / 2, 2 * n),
        _ => return QuarterPowerPoly::zero(Base::OneMinusV),
    };
    QuarterPowerPoly::from_terms(
        Base::OneMinusV,
        (0..=top).map(|j| {
            let c = &two_n * sign(shift + j as i64) / int(factorial(j) * factorial(top - j));
            (j as i64 - 2, c)
        }),
    )
}

/// Polynomial `x_d(u), y_d(u), z_d(u), w_d(u)` (base `u`).
pub fn closed_form_xyzw(d: u32, family: Family) -> QuarterPowerPoly {
    let d_i = d as i64;
    let mut out = QuarterPowerPoly::zero(Base::U);
    // u^n coefficient: 2^n·(−1)^{shift(n)+j+d}/top! · C(top, j) · binom((j−2)/4, d)
    let mut push = |n: i64, shift: i64, top: u32| {
        let two_n = int(num_bigint::BigInt::one() << n as u32);
        let c = (0..=top).fold(BigRational::zero(), |acc, j| {
            acc + sign(shift + j as i64 + d_i)
                * int(binomial(top, j))
                * gen_binomial(&ratio(j as i64 - 2, 4), d)
        }) * two_n
            / int(factorial(top));
        out.add_term(4 * n, c);
    };
    match family {
        Family::X | Family::Y => {
            let offset = if family == Family::X { 2 } else { 3 };
            for n in 0..=floor_div(d_i - 1, 2) {
                push(n, floor_div(n + offset, 2), (2 * n + 1) as u32);
            }
        }
        Family::Z => {
            for n in 0..=2 * floor_div(d_i - 2, 4) + 1 {
                if n % 2 == 1 {
                    push(n, (n - 1) / 2, (2 * n) as u32);
                }
            }
        }
        Family::W => {
            for n in 0..=2 * floor_div(d_i, 4) {
                if n % 2 == 0 {
                    push(n, n / 2, (2 * n) as u32);
                }
            }
        }
    }
    out
}

/// `X_d(s), Y_d(s), Z_d(s), W_d(s)`: the polynomial in `u` read over
/// `s = u²` (quarter exponents halved).
pub fn closed_form_capital(d: u32, family: Family) -> QuarterPowerPoly {
    closed_form_xyzw(d, family).rebase(Base::S, 1, 2)
}

fn describe_failure(residual: &QuarterPowerPoly, initial: Option<BigRational>) -> Option<String> {
    match (residual.is_zero(), initial) {
        (true, None) => None,
        (false, _) => Some(format!("residual {residual}")),
        (true, Some(v)) => Some(format!("initial value {v} != expected")),
    }
}

/// Checks the `u^n`-coefficient system for `1 ≤ n ≤ n_max` against the
/// closed forms, four reports per `n`.
pub fn verify_tilde_system(n_max: u32) -> Vec<VerificationReport> {
    verify_tilde_system_with(n_max, tilde_closed_form)
}

/// As [`verify_tilde_system`] with caller-supplied families, e.g. to check
/// that a perturbed solution is rejected.
///
/// Each identity is rearranged as
/// `(1−v)·F′ − (c − n/2)·F ± ⋯ = 0` with `c = 1/4` for `x̃, ỹ` and `1/2` for
/// `z̃, w̃`; the report also requires `F(0) = 0`.
pub fn verify_tilde_system_with(
    n_max: u32,
    source: impl Fn(u32, Family) -> QuarterPowerPoly,
) -> Vec<VerificationReport> {
    let quarter = ratio(1, 4);
    let mut reports = Vec::new();
    for n in 1..=n_max {
        let [x, y, z, w] = Family::ALL.map(|f| source(n, f));
        let [xp, yp] = [Family::X, Family::Y].map(|f| source(n - 1, f));
        let lead = |f: &QuarterPowerPoly, c: BigRational| -> QuarterPowerPoly {
            let deriv = f.ddv().expect("(1-v) base").shift(4);
            deriv.sub(&f.scale(&(c - ratio(n as i64, 2))))
        };
        let residuals = [
            lead(&x, ratio(1, 4))
                .add(&z.scale(&quarter))
                .add(&w.scale(&quarter)),
            lead(&y, ratio(1, 4))
                .sub(&z.scale(&quarter))
                .add(&w.scale(&quarter)),
            lead(&z, ratio(1, 2))
                .add(&xp.scale(&quarter))
                .add(&yp.scale(&quarter)),
            lead(&w, ratio(1, 2))
                .sub(&xp.scale(&quarter))
                .add(&yp.scale(&quarter)),
        ];
        for ((family, residual), f) in Family::ALL.iter().zip(residuals).zip([&x, &y, &z, &w]) {
            let at_zero = f.eval_at_base_one();
            let initial = (!at_zero.is_zero()).then_some(at_zero);
            reports.push(VerificationReport::symbolic(
                &format!("ode-tilde:{}", family.letter()),
                vec![n as i64],
                describe_failure(&residual, initial),
            ));
        }
    }
    reports
}

/// Checks the recursion in `d` for `0 ≤ d < d_max` against the closed forms,
/// four reports per `d`.
pub fn verify_u_system(d_max: u32) -> Vec<VerificationReport> {
    verify_u_system_with(d_max, closed_form_xyzw)
}

/// As [`verify_u_system`] with caller-supplied families. The `d = 0` reports
/// also check the initial quadruple `x₀ = y₀ = z₀ = 0`, `w₀ = 1`.
pub fn verify_u_system_with(
    d_max: u32,
    source: impl Fn(u32, Family) -> QuarterPowerPoly,
) -> Vec<VerificationReport> {
    let quarter = ratio(1, 4);
    let half = ratio(1, 2);
    let mut reports = Vec::new();
    for d in 0..d_max {
        let [x, y, z, w] = Family::ALL.map(|f| source(d, f));
        let [x1, y1, z1, w1] = Family::ALL.map(|f| source(d + 1, f));
        let next_scale = int(d + 1);
        // (u/2)·F′ − (d + c)·F
        let drift = |f: &QuarterPowerPoly, c: BigRational| -> QuarterPowerPoly {
            let deriv = f.ddu().expect("u base").shift(4).scale(&half);
            deriv.sub(&f.scale(&(int(d) + c)))
        };
        let residuals = [
            x1.scale(&next_scale)
                .add(&drift(&x, ratio(1, 4)))
                .add(&z.scale(&quarter))
                .add(&w.scale(&quarter)),
            y1.scale(&next_scale)
                .add(&drift(&y, ratio(1, 4)))
                .sub(&z.scale(&quarter))
                .add(&w.scale(&quarter)),
            z1.scale(&next_scale)
                .add(&x.shift(4).scale(&quarter))
                .add(&y.shift(4).scale(&quarter))
                .add(&drift(&z, ratio(1, 2))),
            w1.scale(&next_scale)
                .sub(&x.shift(4).scale(&quarter))
                .add(&y.shift(4).scale(&quarter))
                .add(&drift(&w, ratio(1, 2))),
        ];
        let expected_initial = [
            QuarterPowerPoly::zero(Base::U),
            QuarterPowerPoly::zero(Base::U),
            QuarterPowerPoly::zero(Base::U),
            QuarterPowerPoly::constant(Base::U, BigRational::one()),
        ];
        for (i, residual) in residuals.into_iter().enumerate() {
            let family = Family::ALL[i];
            let current = [&x, &y, &z, &w][i];
            let failure = if !residual.is_zero() {
                Some(format!("residual {residual}"))
            } else if d == 0 && *current != expected_initial[i] {
                Some(format!("initial {}₀ = {current}", family.letter()))
            } else {
                None
            };
            reports.push(VerificationReport::symbolic(
                &format!("ode-u:{}", family.letter()),
                vec![d as i64],
                failure,
            ));
        }
    }
    reports
}

/// Checks that `w̃₀ = (1−v)^{−1/2}` expands to `w_d(0) = C(2d,d)/2^{2d}` for
/// `d ≤ d_max`, and that this agrees with the constant term of the closed
/// form `w_d(u)`.
pub fn verify_w0_binomial(d_max: u32) -> Vec<VerificationReport> {
    let series = tilde_closed_form(0, Family::W)
        .v_expansion(d_max as usize)
        .expect("(1-v) base");
    (0..=d_max)
        .map(|d| {
            let central = int(binomial(2 * d, d)) / int(num_bigint::BigInt::one() << (2 * d));
            let from_series = series.coeff(d as usize);
            let from_closed = closed_form_xyzw(d, Family::W).term(0);
            let failure = if *from_series != central {
                Some(format!("expansion gives {from_series}, expected {central}"))
            } else if from_closed != central {
                Some(format!("w_{d}(0) = {from_closed}, expected {central}"))
            } else {
                None
            };
            VerificationReport::symbolic("w0-binomial", vec![d as i64], failure)
        })
        .collect()
}

/// Exact partial sum of `Σ_{k≥start} a_k·x^{k−start}` and a rigorous bound on
/// the omitted tail, given `ratio_bound(k) ≥ |a_{k+1}·x / a_k|` nonincreasing
/// in `k`. Stops once the ratio is ≤ 1/2 and the next term is below `eps`.
fn series_with_tail(
    coeff: impl Fn(u32) -> BigRational,
    ratio_bound: impl Fn(u32) -> BigRational,
    start: u32,
    x: &BigRational,
    eps: &BigRational,
) -> (BigRational, BigRational) {
    let half = ratio(1, 2);
    let mut total = BigRational::zero();
    let mut power = BigRational::one();
    let mut k = start;
    loop {
        let term = coeff(k) * &power;
        if ratio_bound(k) <= half && k > start && term.abs() < *eps {
            return (total, term.abs() * int(2));
        }
        total += term;
        power *= x;
        k += 1;
    }
}

/// Numeric check of
/// `G_d(s) = X_d·s^{1/4}cot s^{1/4} + Y_d·s^{1/4}coth s^{1/4} + Z_d·cot s^{1/4}·coth s^{1/4} + W_d`
/// where `G_d(s) = (−s)^d / (g(s)·d!) · D^d g(s)`.
///
/// Returns the enclosure of left side minus right side at `digits` decimal
/// digits of working precision; `0 < s < π⁴` is required.
pub fn verify_gd_decomposition(d: u32, s: &BigRational, digits: u32) -> Result<ApproxReal> {
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 24;
    let pi4 = ApproxReal::pi(bits).powi(4);
    let s_ball = ApproxReal::from_rational(s, bits);
    let below_pi4 = pi4.sub(&s_ball);
    if !s.is_positive() || below_pi4.value.is_negative() || below_pi4.abs_lower().is_zero() {
        return Err(Error::Domain(format!("s must satisfy 0 < s < π⁴, got {s}")));
    }

    let eps = BigRational::new(1.into(), num_bigint::BigInt::one() << (bits + 8));
    let g_coeff = g_coeff;
    // |g_{k+1}/g_k|·s = 4s / ((4k+3)(4k+4)(4k+5)(4k+6))
    let g_ratio = |k: u32| {
        let k = k as i64;
        int(4) * s / int((4 * k + 3) * (4 * k + 4) * (4 * k + 5) * (4 * k + 6))
    };
    let (g_val, g_tail) = series_with_tail(g_coeff, g_ratio, 0, s, &eps);
    let falling = |k: u32| -> BigRational {
        int((k - d + 1..=k).fold(num_bigint::BigInt::one(), |acc, i| acc * i))
    };
    let dg_coeff = |k: u32| g_coeff(k) * falling(k);
    let dg_ratio = |k: u32| g_ratio(k) * ratio(k as i64 + 1, (k - d) as i64 + 1);
    let (dg_val, dg_tail) = series_with_tail(dg_coeff, dg_ratio, d, s, &eps);

    let g_ball = ApproxReal::from_rational_with_err(&g_val, &g_tail, bits);
    let dg_ball = ApproxReal::from_rational_with_err(&dg_val, &dg_tail, bits);
    let prefactor = sign(d as i64) * num_traits::pow(s.clone(), d as usize) / int(factorial(d));
    let lhs = dg_ball.mul_rational(&prefactor).div(&g_ball)?;

    let u = s_ball.sqrt()?;
    let r = u.sqrt()?;
    let cot = r.cos().div(&r.sin())?;
    let coth = r.cosh().div(&r.sinh())?;
    let [x, y, z, w] = Family::ALL.map(|f| closed_form_xyzw(d, f));
    let rhs = x
        .eval(&u)?
        .mul(&r)
        .mul(&cot)
        .add(&y.eval(&u)?.mul(&r).mul(&coth))
        .add(&z.eval(&u)?.mul(&cot).mul(&coth))
        .add(&w.eval(&u)?);
    Ok(lhs.sub(&rhs))
}

/// `g_k = (−1)^k 4^k / (4k+2)!`
fn g_coeff(k: u32) -> BigRational {
    sign(k as i64) * BigRational::new(num_bigint::BigInt::one() << (2 * k), factorial(4 * k + 2))
}

/// [`verify_gd_decomposition`] as a report passing iff the residual
/// enclosure is consistent with `|residual| ≤ tolerance`.
pub fn gd_decomposition_report(
    d: u32,
    s: &BigRational,
    digits: u32,
    tolerance: f64,
) -> Result<VerificationReport> {
    let diff = verify_gd_decomposition(d, s, digits)?;
    let mut instance = vec![d as i64, 0, 0];
    instance[1] = s.numer().try_into().unwrap_or(i64::MAX);
    instance[2] = s.denom().try_into().unwrap_or(i64::MAX);
    Ok(VerificationReport::numeric(
        "gd-decomposition",
        instance,
        diff,
        tolerance,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_examples() {
        let w0 = tilde_closed_form(0, Family::W);
        assert_eq!(w0.terms().len(), 1);
        assert_eq!(w0.term(-2), ratio(1, 1));
        assert!(tilde_closed_form(0, Family::Z).is_zero());
        let x1 = tilde_closed_form(1, Family::X);
        let expected = QuarterPowerPoly::from_terms(
            Base::OneMinusV,
            [
                (-2, ratio(-1, 3)),
                (-1, ratio(1, 1)),
                (0, ratio(-1, 1)),
                (1, ratio(1, 3)),
            ],
        );
        assert_eq!(x1, expected);
    }

    #[test]
    fn ddv_examples() {
        let one = QuarterPowerPoly::constant(Base::OneMinusV, ratio(1, 1));
        assert!(one.ddv().unwrap().is_zero());
        let lin = QuarterPowerPoly::from_terms(Base::OneMinusV, [(4, ratio(1, 1))]);
        assert_eq!(
            lin.ddv().unwrap(),
            QuarterPowerPoly::constant(Base::OneMinusV, ratio(-1, 1))
        );
        let inv_sqrt = QuarterPowerPoly::from_terms(Base::OneMinusV, [(-2, ratio(1, 1))]);
        assert_eq!(
            inv_sqrt.ddv().unwrap(),
            QuarterPowerPoly::from_terms(Base::OneMinusV, [(-6, ratio(1, 2))])
        );
        let in_u = QuarterPowerPoly::constant(Base::U, ratio(1, 1));
        assert!(matches!(in_u.ddv(), Err(Error::WrongBase { .. })));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form_xyzw(0, Family::W),
            QuarterPowerPoly::constant(Base::U, ratio(1, 1))
        );
        assert!(closed_form_xyzw(0, Family::X).is_zero());
        assert_eq!(
            closed_form_xyzw(1, Family::X),
            QuarterPowerPoly::constant(Base::U, ratio(-1, 4))
        );
        // d = 3: only n = 1 survives for z
        assert_eq!(
            closed_form_xyzw(3, Family::Z),
            QuarterPowerPoly::from_terms(Base::U, [(4, ratio(5, 64))])
        );
        assert_eq!(
            closed_form_capital(3, Family::Z),
            QuarterPowerPoly::from_terms(Base::S, [(2, ratio(5, 64))])
        );
    }

    #[test]
    fn small_systems_pass() {
        assert!(verify_tilde_system(1).iter().all(|r| r.passed));
        let u = verify_u_system(1);
        assert_eq!(u.len(), 4);
        assert!(u.iter().all(|r| r.passed));
    }

    #[test]
    fn perturbed_w0_fails() {
        let reports = verify_u_system_with(1, |d, f| {
            if d == 0 && f == Family::W {
                QuarterPowerPoly::constant(Base::U, ratio(2, 1))
            } else {
                closed_form_xyzw(d, f)
            }
        });
        assert!(reports.iter().any(|r| !r.passed));
    }

    #[test]
    fn gd_trivial_case() {
        let diff = verify_gd_decomposition(0, &ratio(1, 1), 40).unwrap();
        assert!(diff.abs_upper().to_f64() < 1e-30);
        assert!(verify_gd_decomposition(1, &ratio(0, 1), 40).is_err());
        assert!(verify_gd_decomposition(1, &ratio(98, 1), 40).is_err());
    }
}
