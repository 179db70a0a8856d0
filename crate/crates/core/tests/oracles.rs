use mzvq_core::exact::{bernoulli, gen_binomial, int, ratio, zeta_even};
use mzvq_core::identities::{
    alternating_even_sum, alternating_even_sum_with_zeta0, euler_alternating, euler_full,
    euler_product, gkz_even, pi_rational_value, q_depth2, q_theorem,
};
use mzvq_core::numeric::{
    composition_count, compositions, mzv_eval, pi_value, q_bruteforce, zeta_single,
};
use mzvq_core::ode::{
    closed_form_xyzw, tilde_closed_form, verify_gd_decomposition, verify_tilde_system,
    verify_u_system, verify_u_system_with, Base, Family, QuarterPowerPoly,
};
use mzvq_core::report::all_passed;
use mzvq_core::series::{g_series, q_rational_table, verify_f_product, zeta_four_power};
use mzvq_core::{Error, MzvIndex, PiRational, PrecisionConfig};

fn pi_q(num: i64, den: i64, m: u32) -> PiRational {
    PiRational::new(ratio(num, den), m)
}

#[test]
fn bernoulli_examples() {
    assert_eq!(bernoulli(0), ratio(1, 1));
    assert_eq!(bernoulli(3), ratio(0, 1));
    assert_eq!(bernoulli(4), ratio(-1, 30));
}

#[test]
fn zeta_even_examples() {
    assert_eq!(zeta_even(0).unwrap(), pi_q(-1, 2, 0));
    assert_eq!(zeta_even(2).unwrap(), pi_q(1, 6, 2));
    assert_eq!(zeta_even(4).unwrap(), pi_q(1, 90, 4));
    assert_eq!(zeta_even(3), Err(Error::OddZeta(3)));
}

#[test]
fn gen_binomial_examples() {
    assert_eq!(gen_binomial(&ratio(0, 1), 3), ratio(0, 1));
    assert_eq!(gen_binomial(&ratio(1, 2), 2), ratio(-1, 8));
    assert_eq!(gen_binomial(&ratio(5, 1), 2), ratio(10, 1));
}

#[test]
fn g_series_examples() {
    assert_eq!(g_series(0).coeffs(), &[ratio(1, 2)]);
    assert_eq!(g_series(1).coeffs(), &[ratio(1, 2), ratio(-1, 180)]);
    assert_eq!(*g_series(2).coeff(2), ratio(1, 226800));
}

#[test]
fn f_product_examples() {
    assert!(verify_f_product(0));
    assert!(verify_f_product(5));
    assert!(verify_f_product(20));
}

#[test]
fn q_table_examples() {
    let table = q_rational_table(4, 6).unwrap();
    assert_eq!(*table.get(1, 1), ratio(1, 90));
    assert_eq!(*table.get(3, 3), ratio(1, 681080400));
    assert_eq!(*table.get(2, 1), ratio(1, 9450));
    assert_eq!(*table.get(2, 2), ratio(1, 113400));
    for n in 1..=4 {
        for d in n + 1..=6 {
            assert_eq!(*table.get(n, d), ratio(0, 1), "c[{n}][{d}]");
        }
    }
}

#[test]
fn zeta_four_power_examples() {
    assert_eq!(zeta_four_power(0), pi_q(1, 1, 0));
    assert_eq!(zeta_four_power(1), pi_q(1, 90, 4));
    assert_eq!(zeta_four_power(2), pi_q(1, 113400, 8));
    let stuffle = (&zeta_even(4).unwrap() * &zeta_even(4).unwrap())
        .scale(&ratio(1, 2))
        .checked_sub(&zeta_even(8).unwrap().scale(&ratio(1, 2)))
        .unwrap();
    assert_eq!(zeta_four_power(2), stuffle);
}

#[test]
fn tilde_examples() {
    let w0 = tilde_closed_form(0, Family::W);
    assert_eq!(
        w0,
        QuarterPowerPoly::from_terms(Base::OneMinusV, [(-2, ratio(1, 1))])
    );
    assert!(tilde_closed_form(0, Family::Z).is_zero());
    let x1 = tilde_closed_form(1, Family::X);
    assert_eq!(
        x1,
        QuarterPowerPoly::from_terms(
            Base::OneMinusV,
            [
                (-2, ratio(-1, 3)),
                (-1, ratio(1, 1)),
                (0, ratio(-1, 1)),
                (1, ratio(1, 3))
            ]
        )
    );
}

#[test]
fn ddv_examples() {
    let p = |e: i64, c: (i64, i64)| {
        QuarterPowerPoly::from_terms(Base::OneMinusV, [(e, ratio(c.0, c.1))])
    };
    assert!(p(0, (1, 1)).ddv().unwrap().is_zero());
    assert_eq!(p(4, (1, 1)).ddv().unwrap(), p(0, (-1, 1)));
    assert_eq!(p(-2, (1, 1)).ddv().unwrap(), p(-6, (1, 2)));
}

#[test]
fn tilde_system_examples() {
    let one = verify_tilde_system(1);
    assert_eq!(one.len(), 4);
    assert!(all_passed(&one));
    let eight = verify_tilde_system(8);
    assert_eq!(eight.len(), 32);
    assert!(all_passed(&eight));
}

#[test]
fn closed_form_xyzw_examples() {
    assert_eq!(
        closed_form_xyzw(0, Family::W),
        QuarterPowerPoly::constant(Base::U, ratio(1, 1))
    );
    assert!(closed_form_xyzw(0, Family::X).is_zero());
    // only odd n ≤ 1 contributes for d = 3
    let z3 = closed_form_xyzw(3, Family::Z);
    assert_eq!(z3.terms().keys().copied().collect::<Vec<_>>(), vec![4]);
}

#[test]
fn u_system_examples() {
    let one = verify_u_system(1);
    assert_eq!(one.len(), 4);
    assert!(all_passed(&one));
    let eight = verify_u_system(8);
    assert_eq!(eight.len(), 32);
    assert!(all_passed(&eight));
    let perturbed = verify_u_system_with(1, |d, f| {
        if d == 0 && f == Family::W {
            QuarterPowerPoly::constant(Base::U, ratio(2, 1))
        } else {
            closed_form_xyzw(d, f)
        }
    });
    assert!(!all_passed(&perturbed));
}

#[test]
fn gd_decomposition_examples() {
    let tiny = |d: u32, s: (i64, i64), tol: f64| {
        let diff = verify_gd_decomposition(d, &ratio(s.0, s.1), 40).unwrap();
        assert!(diff.within(tol), "d={d} s={s:?} diff={diff}");
        assert!(diff.abs_upper().to_f64() < tol);
    };
    tiny(0, (1, 1), 1e-30);
    tiny(1, (1, 2), 1e-30);
    tiny(4, (2, 1), 1e-25);
}

#[test]
fn pi_example() {
    let cfg = PrecisionConfig::new(1e-15).unwrap();
    let pi = pi_value(&cfg);
    assert!(pi.to_decimal_string(14).starts_with("3.14159265358979"));
    assert!(pi.err_f64() <= 1e-15);
}

#[test]
fn zeta_single_examples() {
    let cfg = PrecisionConfig::default();
    for (s, exact) in [(4, zeta_even(4).unwrap()), (2, zeta_even(2).unwrap())] {
        let z = zeta_single(s, &cfg).unwrap();
        assert!(
            z.agrees_with(&pi_rational_value(&exact, &cfg), 0.0),
            "ζ({s})"
        );
        assert!(z.err_f64() <= 1e-12);
    }
    let z3 = zeta_single(3, &cfg).unwrap();
    assert!((z3.to_f64() - 1.2020569031595942).abs() < 1e-12);
}

#[test]
fn mzv_eval_examples() {
    let cfg = PrecisionConfig::default();
    let eval = |s: &str| mzv_eval(&s.parse::<MzvIndex>().unwrap(), &cfg).unwrap();
    assert!(eval("4").agrees_with(&pi_rational_value(&pi_q(1, 90, 4), &cfg), 0.0));
    assert!(eval("4,4").agrees_with(&pi_rational_value(&pi_q(1, 113400, 8), &cfg), 0.0));
    assert!(eval("2,1").agrees_with(&zeta_single(3, &cfg).unwrap(), 0.0));
    assert_eq!("1,2".parse::<MzvIndex>(), Err(Error::Divergent));
}

#[test]
fn composition_examples() {
    assert_eq!(
        compositions(3, 2).collect::<Vec<_>>(),
        vec![vec![1, 2], vec![2, 1]]
    );
    assert_eq!(
        compositions(4, 4).collect::<Vec<_>>(),
        vec![vec![1, 1, 1, 1]]
    );
    assert_eq!(composition_count(10, 3), 36.into());
}

#[test]
fn bruteforce_examples() {
    let cfg = PrecisionConfig::default();
    let q11 = q_bruteforce(1, 1, &cfg).unwrap();
    assert!((q11.to_f64() - 1.0823232337111382).abs() < 1e-12);
    let q22 = q_bruteforce(2, 2, &cfg).unwrap();
    assert!(q22.agrees_with(&pi_rational_value(&pi_q(1, 113400, 8), &cfg), 0.0));
}

#[test]
fn q_depth2_examples() {
    assert_eq!(q_depth2(2).unwrap(), pi_q(1, 113400, 8));
    let table = q_rational_table(10, 2).unwrap();
    assert_eq!(
        q_depth2(3).unwrap(),
        PiRational::new(table.get(3, 2).clone(), 12)
    );
    assert_eq!(q_depth2(1).unwrap(), PiRational::zero(4));
    for n in 2..=10 {
        assert_eq!(
            q_depth2(n).unwrap(),
            PiRational::new(table.get(n as usize, 2).clone(), 4 * n)
        );
    }
}

#[test]
fn q_theorem_examples() {
    let table = q_rational_table(5, 5).unwrap();
    assert_eq!(q_theorem(3, 3).unwrap(), pi_q(1, 681080400, 12));
    assert_eq!(
        q_theorem(4, 3).unwrap(),
        PiRational::new(table.get(4, 3).clone(), 16)
    );
    assert_eq!(
        q_theorem(5, 4).unwrap(),
        PiRational::new(table.get(5, 4).clone(), 20)
    );
    assert!(matches!(q_theorem(5, 2), Err(Error::Domain(_))));
    assert!(matches!(q_theorem(3, 4), Err(Error::Domain(_))));
}

#[test]
fn theorem_matches_bruteforce_on_small_pair() {
    let cfg = PrecisionConfig::new(1e-11).unwrap();
    let exact = pi_rational_value(&q_theorem(5, 3).unwrap(), &cfg);
    assert!(exact.agrees_with(&q_bruteforce(5, 3, &cfg).unwrap(), 1e-10));
}

#[test]
fn numeric_identity_examples() {
    let cfg = PrecisionConfig::default();
    for n in [2, 3, 4] {
        assert!(euler_alternating(n, &cfg).passed, "alternating n={n}");
    }
    for n in [2, 3, 5] {
        assert!(euler_full(n, &cfg).passed, "full n={n}");
    }
    for n in [2, 3, 6] {
        assert!(gkz_even(n, &cfg).passed, "gkz n={n}");
    }
}

#[test]
fn gkz_two_is_pi4_over_120() {
    let cfg = PrecisionConfig::default();
    let z22 = mzv_eval(&MzvIndex::new(vec![2, 2]).unwrap(), &cfg).unwrap();
    assert!(z22.agrees_with(&pi_rational_value(&pi_q(1, 120, 4), &cfg), 0.0));
}

#[test]
fn exact_identity_examples() {
    for n in [2, 10, 20] {
        assert!(euler_product(n).passed, "product n={n}");
    }
    let two = (&zeta_even(2).unwrap() * &zeta_even(2).unwrap()).coeff;
    assert_eq!(two, ratio(1, 36));
    assert_eq!(two, ratio(5, 2) * ratio(1, 90));
    assert!(alternating_even_sum(2).passed);
    assert!(alternating_even_sum(3).passed);
    assert!(!alternating_even_sum_with_zeta0(2, int(1) / int(2)).passed);
}
