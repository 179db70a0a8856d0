//! Closed evaluators for `Q(4n, d)` and checks of the classical depth-2
//! relations between even zeta values.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, gen_binomial, int, ratio, sign, zeta_even, BigRational, PiRational,
};
use crate::numeric::{mzv_eval, pi_value, ApproxReal, MzvIndex, PrecisionConfig};
use crate::report::VerificationReport;

/// Pass tolerance for numeric identity checks.
pub const NUMERIC_TOLERANCE: f64 = 1e-10;

/// Exact `ζ(m)` for even `m`; only ever called with even arguments here.
fn zeta(m: u32) -> PiRational {
    zeta_even(m).expect("even argument")
}

/// `Q(4n, 2) = ½ Σ_{k=1}^{n−1} ζ(4k)ζ(4n−4k) − ((n−1)/2) ζ(4n)`, with
/// `Q(4, 2) = 0`.
pub fn q_depth2(n: u32) -> Result<PiRational> {
    if n < 1 {
        return Err(Error::Domain(format!("q_depth2 requires n ≥ 1, got {n}")));
    }
    let mut acc = PiRational::zero(4 * n);
    for k in 1..n {
        acc = acc.checked_add(&(&zeta(4 * k) * &zeta(4 * n - 4 * k)).scale(&ratio(1, 2)))?;
    }
    acc.checked_sub(&zeta(4 * n).scale(&ratio(n as i64 - 1, 2)))
}

/// `Σ_{j=0}^{top} C(top, j) (−1)^j binom((j−2)/4, d)`.
fn binomial_sum(top: u32, d: u32) -> BigRational {
    (0..=top).fold(BigRational::zero(), |acc, j| {
        acc + sign(j as i64) * int(binomial(top, j)) * gen_binomial(&ratio(j as i64 - 2, 4), d)
    })
}

/// `Q(4n, d)` for `n ≥ d ≥ 3` from the closed double sum in `ζ(4n − 2k)π^{2k}`
/// and `(Q(4n−4k, 2) − (7/8)ζ(4n−4k))π^{4k}`.
pub fn q_theorem(n: u32, d: u32) -> Result<PiRational> {
    if d < 3 || n < d {
        return Err(Error::Domain(format!(
            "closed formula needs n ≥ d ≥ 3, got n={n}, d={d}"
        )));
    }
    let d_sign = sign(d as i64);
    let mut total = PiRational::zero(4 * n);

    for k in 0..=(d - 1) / 2 {
        let c = int(num_bigint::BigInt::one() << (k + 2)) * sign((k / 2) as i64) * &d_sign
            / int(factorial(2 * k + 1))
            * binomial_sum(2 * k + 1, d);
        let term = zeta(4 * n - 2 * k).times_pi_power(2 * k).scale(&c);
        total = total.checked_add(&term)?;
    }

    for k in 0..=(d - 2) / 4 {
        let c = int(num_bigint::BigInt::one() << (2 * k + 5)) * sign(k as i64) * &d_sign
            / int(factorial(4 * k + 2))
            * binomial_sum(4 * k + 2, d);
        let m = n - k;
        let inner = q_depth2(m)?.checked_sub(&zeta(4 * m).scale(&ratio(7, 8)))?;
        total = total.checked_add(&inner.times_pi_power(4 * k).scale(&c))?;
    }
    Ok(total)
}

/// Numeric enclosure of `q·π^m`.
pub fn pi_rational_value(x: &PiRational, cfg: &PrecisionConfig) -> ApproxReal {
    pi_value(cfg).powi(x.pi_power).mul_rational(&x.coeff)
}

fn double_zeta_sum(
    pairs: impl Iterator<Item = (u32, u32, i64)>,
    cfg: &PrecisionConfig,
) -> Result<ApproxReal> {
    let pairs: Vec<_> = pairs.collect();
    let term_cfg = cfg.tightened(cfg.target_abs_error / pairs.len().max(1) as f64)?;
    let mut acc = ApproxReal::zero(term_cfg.bits());
    for (a, b, s) in pairs {
        let v = mzv_eval(&MzvIndex::new(vec![a, b])?, &term_cfg)?;
        acc = acc.add(&v.mul_int(s));
    }
    Ok(acc)
}

fn numeric_report(
    name: &str,
    n: u32,
    lhs: Result<ApproxReal>,
    rhs: PiRational,
    cfg: &PrecisionConfig,
) -> VerificationReport {
    match lhs {
        Ok(lhs) => {
            let diff = lhs.sub(&pi_rational_value(&rhs, cfg));
            VerificationReport::numeric(name, vec![n as i64], diff, NUMERIC_TOLERANCE)
        }
        Err(e) => VerificationReport::symbolic(name, vec![n as i64], Some(e.to_string())),
    }
}

fn require_n(n: u32) -> Option<VerificationReport> {
    (n < 2).then(|| {
        VerificationReport::symbolic(
            "invalid",
            vec![n as i64],
            Some(format!("n must be ≥ 2, got {n}")),
        )
    })
}

/// `Σ_{k=2}^{2n−1} (−1)^k ζ(k, 2n−k) = ½ ζ(2n)`.
pub fn euler_alternating(n: u32, cfg: &PrecisionConfig) -> VerificationReport {
    if let Some(r) = require_n(n) {
        return r;
    }
    let lhs = double_zeta_sum(
        (2..2 * n).map(|k| (k, 2 * n - k, if k % 2 == 0 { 1 } else { -1 })),
        cfg,
    );
    numeric_report(
        "euler-alternating",
        n,
        lhs,
        zeta(2 * n).scale(&ratio(1, 2)),
        cfg,
    )
}

/// `Σ_{k=2}^{2n−1} ζ(k, 2n−k) = ζ(2n)`.
pub fn euler_full(n: u32, cfg: &PrecisionConfig) -> VerificationReport {
    if let Some(r) = require_n(n) {
        return r;
    }
    let lhs = double_zeta_sum((2..2 * n).map(|k| (k, 2 * n - k, 1)), cfg);
    numeric_report("euler-full", n, lhs, zeta(2 * n), cfg)
}

/// `Σ_{k=1}^{n−1} ζ(2k, 2n−2k) = ¾ ζ(2n)`.
pub fn gkz_even(n: u32, cfg: &PrecisionConfig) -> VerificationReport {
    if let Some(r) = require_n(n) {
        return r;
    }
    let lhs = double_zeta_sum((1..n).map(|k| (2 * k, 2 * n - 2 * k, 1)), cfg);
    numeric_report("gkz-even", n, lhs, zeta(2 * n).scale(&ratio(3, 4)), cfg)
}

/// `Σ_{k=1}^{n−1} ζ(2k)ζ(2n−2k) = ((2n+1)/2) ζ(2n)`, exactly.
pub fn euler_product(n: u32) -> VerificationReport {
    if let Some(r) = require_n(n) {
        return r;
    }
    let residual = (1..n)
        .try_fold(PiRational::zero(2 * n), |acc, k| {
            acc.checked_add(&(&zeta(2 * k) * &zeta(2 * n - 2 * k)))
        })
        .and_then(|lhs| lhs.checked_sub(&zeta(2 * n).scale(&ratio(2 * n as i64 + 1, 2))));
    match residual {
        Ok(r) => VerificationReport::exact("euler-product", vec![n as i64], r),
        Err(e) => {
            VerificationReport::symbolic("euler-product", vec![n as i64], Some(e.to_string()))
        }
    }
}

/// `Σ_{m+l=2w} (−1)^m ζ(2m)ζ(2l) = 4Q(4w, 2) − (7/2)ζ(4w)` with `ζ(0) = −½`,
/// exactly.
pub fn alternating_even_sum(w: u32) -> VerificationReport {
    alternating_even_sum_with_zeta0(w, ratio(-1, 2))
}

/// [`alternating_even_sum`] with a caller-chosen value for `ζ(0)`.
pub fn alternating_even_sum_with_zeta0(w: u32, zeta0: BigRational) -> VerificationReport {
    let name = "alternating-even";
    if w < 2 {
        return VerificationReport::symbolic(
            name,
            vec![w as i64],
            Some(format!("w must be ≥ 2, got {w}")),
        );
    }
    let z = |m: u32| -> PiRational {
        if m == 0 {
            PiRational::new(zeta0.clone(), 0)
        } else {
            zeta(2 * m)
        }
    };
    let residual = (0..=2 * w)
        .try_fold(PiRational::zero(4 * w), |acc, m| {
            acc.checked_add(&(&z(m) * &z(2 * w - m)).scale(&sign(m as i64)))
        })
        .and_then(|lhs| {
            let rhs = q_depth2(w)?
                .scale(&int(4))
                .checked_sub(&zeta(4 * w).scale(&ratio(7, 2)))?;
            lhs.checked_sub(&rhs)
        });
    match residual {
        Ok(r) => VerificationReport::exact(name, vec![w as i64], r),
        Err(e) => VerificationReport::symbolic(name, vec![w as i64], Some(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth2_examples() {
        assert_eq!(q_depth2(1).unwrap(), PiRational::zero(4));
        assert_eq!(q_depth2(2).unwrap(), PiRational::new(ratio(1, 113400), 8));
        assert!(q_depth2(0).is_err());
    }

    #[test]
    fn theorem_smallest_case() {
        assert_eq!(
            q_theorem(3, 3).unwrap(),
            PiRational::new(ratio(1, 681080400), 12)
        );
        assert!(matches!(q_theorem(3, 2), Err(Error::Domain(_))));
        assert!(matches!(q_theorem(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_identities() {
        assert!(euler_product(2).passed);
        assert!(alternating_even_sum(2).passed);
        assert!(!alternating_even_sum_with_zeta0(2, ratio(1, 2)).passed);
        assert!(!euler_product(1).passed);
    }
}
