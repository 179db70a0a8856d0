use num_bigint::BigInt;

use crate::exact::binomial;

/// Compositions of `n` into exactly `d` positive parts, in lexicographic
/// order.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: u32,
    current: Option<Vec<u32>>,
}

pub fn compositions(n: u32, d: u32) -> Compositions {
    let current = if d == 0 || d > n {
        None
    } else {
        let mut first = vec![1; d as usize];
        first[d as usize - 1] = n - d + 1;
        Some(first)
    };
    Compositions { n, current }
}

/// `C(n−1, d−1)`, the number of compositions of `n` into `d` parts.
pub fn composition_count(n: u32, d: u32) -> BigInt {
    if d == 0 || d > n {
        return BigInt::from(0);
    }
    binomial(n - 1, d - 1)
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        // Lex successor: bump the part just before the last part that is > 1,
        // reset everything after it to 1 and push the slack into the last part.
        let d = out.len();
        if let Some(j) = (1..d).rev().find(|&j| out[j] > 1) {
            let mut next = out.clone();
            next[j - 1] += 1;
            for part in next.iter_mut().take(d - 1).skip(j) {
                *part = 1;
            }
            let head: u32 = next[..d - 1].iter().sum();
            next[d - 1] = self.n - head;
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(
            compositions(3, 2).collect::<Vec<_>>(),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(
            compositions(4, 4).collect::<Vec<_>>(),
            vec![vec![1, 1, 1, 1]]
        );
        assert_eq!(compositions(5, 1).collect::<Vec<_>>(), vec![vec![5]]);
        assert_eq!(compositions(2, 3).count(), 0);
        assert_eq!(compositions(10, 3).count(), 36);
    }

    #[test]
    fn lexicographic_and_complete() {
        let all: Vec<_> = compositions(7, 3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all
            .iter()
            .all(|c| c.iter().sum::<u32>() == 7 && c.iter().all(|&p| p > 0)));
        // brute force: every triple in 1..=5 summing to 7
        let mut brute = Vec::new();
        for a in 1..=5 {
            for b in 1..=5 {
                for c in 1..=5 {
                    if a + b + c == 7 {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(all, brute);
    }
}
