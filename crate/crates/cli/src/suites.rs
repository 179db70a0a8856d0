use std::str::FromStr;

use mzvq_core::exact::ratio;
use mzvq_core::identities::{
    alternating_even_sum, euler_alternating, euler_full, euler_product, gkz_even,
    pi_rational_value, q_theorem, NUMERIC_TOLERANCE,
};
use mzvq_core::numeric::q_bruteforce;
use mzvq_core::ode::{
    gd_decomposition_report, verify_tilde_system, verify_u_system, verify_w0_binomial,
};
use mzvq_core::series::{q_rational_table, verify_f_product};
use mzvq_core::{Error, PiRational, PrecisionConfig, Result, VerificationReport};
use rayon::prelude::*;

pub const GD_DIGITS: u32 = 40;
pub const GD_TOLERANCE: f64 = 1e-25;
pub const BRUTEFORCE_PAIRS: [(u32, u32); 7] =
    [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4), (6, 5), (6, 6)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Euler,
    Gkz,
    Product,
    AlternatingEven,
    TheoremVsSeries,
    TheoremVsBruteforce,
    OdeU,
    OdeTilde,
    GdDecomposition,
    FProduct,
    W0Binomial,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Euler,
        Suite::Gkz,
        Suite::Product,
        Suite::AlternatingEven,
        Suite::TheoremVsSeries,
        Suite::TheoremVsBruteforce,
        Suite::OdeU,
        Suite::OdeTilde,
        Suite::GdDecomposition,
        Suite::FProduct,
        Suite::W0Binomial,
    ];

    pub const ODE: [Suite; 4] = [
        Suite::OdeU,
        Suite::OdeTilde,
        Suite::GdDecomposition,
        Suite::W0Binomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::Gkz => "gkz",
            Suite::Product => "product",
            Suite::AlternatingEven => "alternating-even",
            Suite::TheoremVsSeries => "theorem-vs-series",
            Suite::TheoremVsBruteforce => "theorem-vs-bruteforce",
            Suite::OdeU => "ode-u",
            Suite::OdeTilde => "ode-tilde",
            Suite::GdDecomposition => "gd-decomposition",
            Suite::FProduct => "f-product",
            Suite::W0Binomial => "w0-binomial",
        }
    }

    /// Default `(max_n, max_d)`; the entry a suite does not use is ignored.
    fn default_range(self) -> (u32, u32) {
        match self {
            Suite::Euler | Suite::Gkz => (6, 0),
            Suite::Product => (20, 0),
            Suite::AlternatingEven => (10, 0),
            Suite::TheoremVsSeries => (10, 10),
            Suite::TheoremVsBruteforce => (6, 6),
            Suite::OdeU => (0, 8),
            Suite::OdeTilde => (8, 0),
            Suite::GdDecomposition => (0, 4),
            Suite::FProduct => (20, 0),
            Suite::W0Binomial => (0, 30),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim())
            .ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite '{s}' (known: {})", known.join(", "))
            })
    }
}

pub struct Ranges {
    pub max_n: Option<u32>,
    pub max_d: Option<u32>,
}

fn exact_or_error(name: &str, instance: Vec<i64>, r: Result<PiRational>) -> VerificationReport {
    match r {
        Ok(x) => VerificationReport::exact(name, instance, x),
        Err(e) => VerificationReport::symbolic(name, instance, Some(e.to_string())),
    }
}

pub fn run(
    suite: Suite,
    ranges: &Ranges,
    cfg: &PrecisionConfig,
) -> Result<Vec<VerificationReport>> {
    let (dn, dd) = suite.default_range();
    let max_n = ranges.max_n.unwrap_or(dn);
    let max_d = ranges.max_d.unwrap_or(dd);
    let reports = match suite {
        Suite::Euler => (2..=max_n)
            .into_par_iter()
            .flat_map_iter(|n| [euler_alternating(n, cfg), euler_full(n, cfg)])
            .collect(),
        Suite::Gkz => (2..=max_n)
            .into_par_iter()
            .map(|n| gkz_even(n, cfg))
            .collect(),
        Suite::Product => (2..=max_n).map(euler_product).collect(),
        Suite::AlternatingEven => (2..=max_n).map(alternating_even_sum).collect(),
        Suite::TheoremVsSeries => {
            if max_n < 3 {
                Vec::new()
            } else {
                let table = q_rational_table(max_n as usize, max_d.max(1) as usize)?;
                let mut out = Vec::new();
                for n in 3..=max_n {
                    for d in 3..=n.min(max_d) {
                        let series =
                            PiRational::new(table.get(n as usize, d as usize).clone(), 4 * n);
                        let residual = q_theorem(n, d).and_then(|q| q.checked_sub(&series));
                        out.push(exact_or_error(
                            "theorem-vs-series",
                            vec![n as i64, d as i64],
                            residual,
                        ));
                    }
                }
                out
            }
        }
        Suite::TheoremVsBruteforce => {
            let pairs: Vec<_> = BRUTEFORCE_PAIRS
                .into_iter()
                .filter(|&(n, d)| n <= max_n && d <= max_d)
                .collect();
            pairs
                .into_par_iter()
                .map(|(n, d)| {
                    let instance = vec![n as i64, d as i64];
                    let diff = q_theorem(n, d).and_then(|q| {
                        let exact = pi_rational_value(&q, cfg);
                        Ok(exact.sub(&q_bruteforce(n, d, cfg)?))
                    });
                    match diff {
                        Ok(diff) => VerificationReport::numeric(
                            "theorem-vs-bruteforce",
                            instance,
                            diff,
                            NUMERIC_TOLERANCE,
                        ),
                        Err(e) => VerificationReport::symbolic(
                            "theorem-vs-bruteforce",
                            instance,
                            Some(e.to_string()),
                        ),
                    }
                })
                .collect()
        }
        Suite::OdeU => verify_u_system(max_d),
        Suite::OdeTilde => verify_tilde_system(max_n),
        Suite::GdDecomposition => {
            let mut out = Vec::new();
            for s in [ratio(1, 2), ratio(1, 1), ratio(2, 1)] {
                for d in 0..=max_d {
                    out.push(gd_decomposition_report(d, &s, GD_DIGITS, GD_TOLERANCE)?);
                }
            }
            out
        }
        Suite::FProduct => {
            let ok = verify_f_product(max_n as usize);
            vec![VerificationReport::symbolic(
                "f-product",
                vec![max_n as i64],
                (!ok).then(|| "sin·sinh expansion differs from g(x⁴)".to_string()),
            )]
        }
        Suite::W0Binomial => verify_w0_binomial(max_d),
    };
    Ok(reports)
}

pub fn parse_list(list: &str) -> std::result::Result<Vec<Suite>, Error> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Suite>().map_err(Error::Domain))
        .collect()
}
