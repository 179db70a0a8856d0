//! Certified asymptotic expansions of nested tail sums.
//!
//! `ζ_{>m}(s₁,…,s_j) = Σ_{k₁>⋯>k_j>m} k₁^{−s₁}⋯k_j^{−s_j}` is expanded as a
//! finite sum `Σ c_e m^{−e}` with exact rational coefficients plus a remainder
//! bounded by `K·m^{−E}` for every `m ≥ m0`. Depth one is the Euler–Maclaurin
//! expansion of the Hurwitz tail; each further level sums the previous
//! expansion termwise against `k^{−s}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::exact::{bernoulli, factorial, int, rising, BigRational};

#[derive(Clone, Debug, PartialEq)]
pub struct TailExpansion {
    /// exponent `e` ↦ coefficient of `m^{−e}`
    pub terms: BTreeMap<u64, BigRational>,
    /// `|remainder(m)| ≤ rem_coeff · m^{−rem_exp}` for `m ≥ m0`
    pub rem_coeff: BigRational,
    pub rem_exp: u64,
}

fn pow_u(m: u64, e: u64) -> BigRational {
    int(BigInt::from(m).pow(e as u32))
}

impl TailExpansion {
    /// `Σ_{k>m} k^{−p}` for `p ≥ 2`:
    /// `m^{1−p}/(p−1) − m^{−p}/2 + Σ_{r≥1} B_{2r}/(2r)!·(p)_{2r−1}·m^{−p−2r+1}`.
    ///
    /// For `x^{−p}` the Euler–Maclaurin remainder is bounded by the first
    /// omitted term, so stopping at `r = R` leaves
    /// `|B_{2R+2}|/(2R+2)!·(p)_{2R+1}·m^{−p−2R−1}`.
    pub fn hurwitz(p: u64, e_max: u64, m0: u64) -> TailExpansion {
        assert!(p >= 2, "Hurwitz tail needs p >= 2");
        let mut terms = BTreeMap::new();
        terms.insert(p - 1, BigRational::new(BigInt::one(), BigInt::from(p - 1)));
        terms.insert(p, BigRational::new(-BigInt::one(), BigInt::from(2)));
        let mut r = 1u64;
        while p + 2 * r - 1 < e_max {
            let c = bernoulli((2 * r) as u32) * int(rising(p, 2 * r - 1))
                / int(factorial((2 * r) as u32));
            terms.insert(p + 2 * r - 1, c);
            r += 1;
        }
        // first omitted term corresponds to index r
        let rem_coeff = bernoulli((2 * r) as u32).abs() * int(rising(p, 2 * r - 1))
            / int(factorial((2 * r) as u32));
        let mut out = TailExpansion {
            terms,
            rem_coeff,
            rem_exp: p + 2 * r - 1,
        };
        out.fold(e_max, m0);
        out
    }

    /// Move every term with exponent `≥ e_max` (and the remainder itself) to
    /// exponent `min(e_max, rem_exp)`, using `m^{−e} ≤ m0^{−(e−E)}·m^{−E}`.
    pub fn fold(&mut self, e_max: u64, m0: u64) {
        let target = e_max.min(self.rem_exp);
        let mut rem = &self.rem_coeff / pow_u(m0, self.rem_exp - target);
        let high: Vec<u64> = self.terms.range(target..).map(|(e, _)| *e).collect();
        for e in high {
            let c = self.terms.remove(&e).expect("present");
            rem += c.abs() / pow_u(m0, e - target);
        }
        self.terms.retain(|_, c| !c.is_zero());
        self.rem_coeff = rem;
        self.rem_exp = target;
    }

    /// `B(m) = Σ_{k>m} k^{−s}·A(k)` where `A` is `self`.
    pub fn nest(&self, s: u64, e_max: u64, m0: u64) -> TailExpansion {
        let mut terms: BTreeMap<u64, BigRational> = BTreeMap::new();
        let mut rems: Vec<(BigRational, u64)> = Vec::new();
        for (e, c) in &self.terms {
            let inner = TailExpansion::hurwitz(s + e, e_max, m0);
            for (e2, c2) in inner.terms {
                *terms.entry(e2).or_insert_with(BigRational::zero) += c * c2;
            }
            rems.push((c.abs() * inner.rem_coeff, inner.rem_exp));
        }
        // Σ_{k>m} k^{−s}·K·k^{−E} ≤ K·m^{1−s−E}/(s+E−1)
        let exp = s + self.rem_exp - 1;
        rems.push((&self.rem_coeff / int(exp), exp));
        let floor = rems.iter().map(|(_, e)| *e).min().expect("nonempty");
        let rem_coeff = rems.into_iter().fold(BigRational::zero(), |acc, (k, e)| {
            acc + k / pow_u(m0, e - floor)
        });
        let mut out = TailExpansion {
            terms,
            rem_coeff,
            rem_exp: floor,
        };
        out.fold(e_max, m0);
        out
    }

    /// Exact value of the truncated expansion at `m`, and the remainder bound.
    pub fn eval(&self, m: u64) -> (BigRational, BigRational) {
        let value = self
            .terms
            .iter()
            .fold(BigRational::zero(), |acc, (e, c)| acc + c / pow_u(m, *e));
        let bound = &self.rem_coeff / pow_u(m, self.rem_exp);
        (value, bound)
    }

    /// Expansion of `ζ_{>m}(parts)`.
    pub fn nested(parts: &[u32], e_max: u64, m0: u64) -> TailExpansion {
        let (first, rest) = parts.split_first().expect("nonempty index");
        let mut acc = TailExpansion::hurwitz(*first as u64, e_max, m0);
        for s in rest {
            acc = acc.nest(*s as u64, e_max, m0);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn brute_tail(p: u32, m: u64, upto: u64) -> f64 {
        (m + 1..=upto).map(|k| (k as f64).powi(-(p as i32))).sum()
    }

    #[test]
    fn hurwitz_leading_terms() {
        let t = TailExpansion::hurwitz(2, 8, 10);
        assert_eq!(t.terms[&1], ratio(1, 1));
        assert_eq!(t.terms[&2], ratio(-1, 2));
        assert_eq!(t.terms[&3], ratio(1, 6));
        assert_eq!(t.terms[&5], ratio(-1, 30));
        assert_eq!(t.terms[&7], ratio(1, 42));
        assert_eq!(t.rem_exp, 8);
    }

    #[test]
    fn hurwitz_tail_encloses_brute_force() {
        for p in [2u32, 3, 4, 7] {
            let m = 20;
            let t = TailExpansion::hurwitz(p as u64, 14, m);
            let (v, b) = t.eval(m);
            use num_traits::ToPrimitive;
            // the brute-force sum leaves out k > 10^6, below 1e-12 for p ≥ 3
            let brute = brute_tail(p, m, 1_000_000) + if p == 2 { 1.0 / 1_000_000.0 } else { 0.0 };
            let diff = (v.to_f64().unwrap() - brute).abs();
            assert!(diff <= b.to_f64().unwrap() + 1e-12, "p={p} diff={diff}");
        }
    }

    #[test]
    fn double_tail_bound_shrinks_with_order() {
        let lo = TailExpansion::nested(&[2, 1], 6, 30);
        let hi = TailExpansion::nested(&[2, 1], 16, 30);
        let (_, b_lo) = lo.eval(30);
        let (_, b_hi) = hi.eval(30);
        assert!(b_hi < b_lo);
        assert_eq!(lo.terms.keys().next(), Some(&1));
    }
}
