use mzvq_core::exact::{bernoulli, binomial, gen_binomial, int, ratio, zeta_even};
use mzvq_core::numeric::{mzv_eval, MzvIndex};
use mzvq_core::series::TruncatedSeries;
use mzvq_core::{BigRational, PrecisionConfig};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Akiyama–Tanigawa, giving `B_m` with `B_1 = +1/2`.
fn akiyama_tanigawa(m: usize) -> BigRational {
    let mut a: Vec<BigRational> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        a.push(ratio(1, k as i64 + 1));
        for j in (1..=k).rev() {
            a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

#[test]
fn bernoulli_matches_independent_algorithm() {
    for m in 2..=40 {
        assert_eq!(bernoulli(m), akiyama_tanigawa(m as usize), "B_{m}");
    }
}

#[test]
fn bernoulli_recurrence_holds() {
    for m in 1..=60u32 {
        let sum = (0..=m).fold(BigRational::zero(), |acc, k| {
            acc + int(binomial(m + 1, k)) * bernoulli(k)
        });
        assert!(sum.is_zero(), "m={m}");
    }
}

#[test]
fn even_zeta_coefficients_are_positive() {
    for m in (2..=40).step_by(2) {
        assert!(zeta_even(m).unwrap().coeff.is_positive(), "ζ({m})");
    }
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn gen_binomial_pascal(a in small_rational(), d in 1u32..12) {
        let lhs = gen_binomial(&(&a + ratio(1, 1)), d);
        let rhs = gen_binomial(&a, d) + gen_binomial(&a, d - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_division_round_trip(
        num in prop::collection::vec(small_rational(), 1..8),
        den_rest in prop::collection::vec(small_rational(), 0..7),
        c0 in 1i64..9,
    ) {
        let order = num.len() - 1;
        let mut den = vec![ratio(c0, 1)];
        den.extend(den_rest);
        den.resize(order + 1, BigRational::zero());
        let a = TruncatedSeries::new(num);
        let b = TruncatedSeries::new(den);
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.mul(&b), a);
    }
}

#[test]
fn mzv_decreases_in_first_argument() {
    let cfg = PrecisionConfig::new(1e-10).unwrap();
    let eval = |p: Vec<u32>| mzv_eval(&MzvIndex::new(p).unwrap(), &cfg).unwrap();
    for tail in [vec![], vec![1], vec![2, 1]] {
        let mut prev = None;
        for s in 2..7 {
            let mut parts = vec![s];
            parts.extend(tail.iter().copied());
            let v = eval(parts);
            if let Some(p) = prev {
                let diff = v.sub(&p);
                assert!(diff.value.is_negative() && diff.abs_lower().to_f64() > 0.0);
            }
            prev = Some(v);
        }
    }
}
