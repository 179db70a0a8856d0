use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::ball::ApproxReal;
use super::compositions::{composition_count, compositions};
use super::tail::TailExpansion;
use super::PrecisionConfig;
use crate::error::{Error, Result};
use crate::exact::{int, BigRational};

/// Largest outer cutoff tried before giving up on a target.
pub const MAX_CUTOFF: u64 = 1 << 20;

/// Index `(s₁, …, s_d)` of a convergent multiple zeta value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MzvIndex {
    parts: Vec<u32>,
}

impl MzvIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidIndex("empty index".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidIndex("parts must be positive".into()));
        }
        if parts[0] < 2 {
            return Err(Error::Divergent);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl FromStr for MzvIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidIndex(format!("cannot parse '{p}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        MzvIndex::new(parts)
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "ζ({})", parts.join(","))
    }
}

/// π to within the configured target.
pub fn pi_value(cfg: &PrecisionConfig) -> ApproxReal {
    ApproxReal::pi(cfg.bits())
}

pub fn zeta_single(s: u32, cfg: &PrecisionConfig) -> Result<ApproxReal> {
    if s < 2 {
        return Err(Error::Divergent);
    }
    mzv_eval(&MzvIndex::new(vec![s])?, cfg)
}

/// Number of `m^{−e}` terms needed so that `n^{−e_max}` sits three digits
/// below the target.
fn exponent_cutoff(n: u64, digits: u32) -> u64 {
    let e = ((digits + 3) as f64 * std::f64::consts::LN_10 / (n as f64).ln()).ceil();
    e as u64 + 1
}

/// Upper bound on `Σ_{N ≥ k_j > ⋯ > k_d ≥ 1} Π k_i^{−s_i}` without computing it:
/// each factor sums to at most `s/(s−1)` for `s ≥ 2`, or `1 + log₂ N` for `s = 1`.
fn partial_sum_bound(parts: &[u32], n: u64) -> BigRational {
    parts.iter().fold(BigRational::one(), |acc, &s| {
        let factor = if s >= 2 {
            BigRational::new(BigInt::from(s), BigInt::from(s - 1))
        } else {
            int(1 + (64 - n.leading_zeros()) as u64)
        };
        acc * factor
    })
}

/// `ζ(s₁,…,s_d)` with a certified error bound.
///
/// The index range is split at a cutoff `N` into
/// `Σ_{j=0}^{d} ζ_{>N}(s₁,…,s_j) · P_{j+1}(N)`, where `P_{j+1}(N)` is the
/// finite nested sum over `N ≥ k_{j+1} > ⋯ > k_d ≥ 1` (computed directly)
/// and `ζ_{>N}` is the all-indices-above-`N` tail, taken from its
/// asymptotic expansion with explicit remainder.
pub fn mzv_eval(idx: &MzvIndex, cfg: &PrecisionConfig) -> Result<ApproxReal> {
    let parts = idx.parts();
    let depth = parts.len();
    let bits = cfg.bits();
    let target = cfg.target_rational();
    let budget = &target / int(2);
    let digits = cfg.target_digits();

    let mut cutoff = 32u64.max(2 * digits as u64);
    let tails = loop {
        if cutoff > MAX_CUTOFF {
            return Err(Error::PrecisionUnreachable {
                target: cfg.target_abs_error,
                limit: MAX_CUTOFF,
            });
        }
        let e_max = exponent_cutoff(cutoff, digits);
        let mut tails = Vec::with_capacity(depth);
        let mut expansion = TailExpansion::hurwitz(parts[0] as u64, e_max, cutoff);
        tails.push(expansion.eval(cutoff));
        for &s in &parts[1..] {
            expansion = expansion.nest(s as u64, e_max, cutoff);
            tails.push(expansion.eval(cutoff));
        }
        let truncation = tails.iter().enumerate().fold(
            BigRational::from_integer(0.into()),
            |acc, (j, (_, bound))| acc + bound * partial_sum_bound(&parts[j + 1..], cutoff),
        );
        if truncation <= budget {
            break tails;
        }
        cutoff *= 2;
    };

    // partial[j] = Σ_{k ≥ k_j > ⋯ > k_d ≥ 1} after processing k; partial[d] = 1
    let mut partial: Vec<ApproxReal> = (0..depth).map(|_| ApproxReal::zero(bits)).collect();
    partial.push(ApproxReal::from_int(1, bits));
    for k in 1..=cutoff {
        for j in 0..depth {
            let w = ApproxReal::recip_pow(k, parts[j], bits);
            let contribution = w.mul(&partial[j + 1]);
            partial[j] = partial[j].add(&contribution);
        }
    }

    let mut total = partial[0].clone();
    for (j, (value, bound)) in tails.iter().enumerate() {
        let tail = ApproxReal::from_rational_with_err(value, bound, bits);
        total = total.add(&tail.mul(&partial[j + 1]));
    }
    if total.err.to_rational() > target {
        return Err(Error::PrecisionUnreachable {
            target: cfg.target_abs_error,
            limit: cutoff,
        });
    }
    Ok(total)
}

/// `Q(4n, d)` by summing every `ζ(4j₁,…,4j_d)` over compositions of `n`.
///
/// Each term gets `target / C(n−1, d−1)` of the error budget. Terms may be
/// evaluated concurrently but are added in lexicographic order.
pub fn q_bruteforce(n: u32, d: u32, cfg: &PrecisionConfig) -> Result<ApproxReal> {
    if d < 1 || d > n {
        return Err(Error::Domain(format!(
            "q_bruteforce requires 1 ≤ d ≤ n, got n={n}, d={d}"
        )));
    }
    let count = composition_count(n, d)
        .to_f64()
        .expect("composition count fits in f64");
    let term_cfg = cfg.tightened(cfg.target_abs_error / count)?;
    let comps: Vec<Vec<u32>> = compositions(n, d).collect();
    let terms = comps
        .par_iter()
        .map(|c| {
            let idx = MzvIndex::new(c.iter().map(|j| 4 * j).collect())?;
            mzv_eval(&idx, &term_cfg)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ApproxReal::sum(&terms, term_cfg.bits()))
}
