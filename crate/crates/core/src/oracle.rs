//! Ground truth that never consults the closed-form description.
//!
//! Two unrelated algorithms live here: a residue scan that finds a witness
//! for a single target, and an additive sieve over the whole theorem
//! interval. The cross-checks elsewhere compare both against each other and
//! against the closed form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pair::{CoprimePair, GapSet, Representation};

/// Finds a witness for `n = a·x + b·y` with `x, y ≥ 0`.
///
/// Among all witnesses the one with the smallest `x` is returned. The scan
/// walks the residues of the smaller generator, so the cost is
/// `O(min(a, b))`.
pub fn is_representable(pair: &CoprimePair, n: i64) -> Result<Option<Representation>> {
    if n < 0 {
        return Err(Error::NegativeTarget(n));
    }
    let (a, b) = (pair.a(), pair.b());
    if a <= b {
        // b·y ≡ n (mod a); the largest admissible y gives the smallest x.
        let Some(y0) = residue_scan(b, n, a) else {
            return Ok(None);
        };
        if b * y0 > n {
            return Ok(None);
        }
        let y = y0 + a * ((n - b * y0) / (a * b));
        let x = (n - b * y) / a;
        Ok(Some(Representation { x, y }))
    } else {
        // a·x ≡ n (mod b); the least residue is already the smallest x.
        let Some(x) = residue_scan(a, n, b) else {
            return Ok(None);
        };
        if a * x > n {
            return Ok(None);
        }
        Ok(Some(Representation {
            x,
            y: (n - a * x) / b,
        }))
    }
}

/// Smallest `k` in `[0, modulus)` with `step·k ≡ target (mod modulus)`.
fn residue_scan(step: i64, target: i64, modulus: i64) -> Option<i64> {
    let want = target % modulus;
    let step = step % modulus;
    let mut acc = 0;
    for k in 0..modulus {
        if acc == want {
            return Some(k);
        }
        acc += step;
        if acc >= modulus {
            acc -= modulus;
        }
    }
    None
}

/// Marks every representable number in `[0, bound]` by propagating `+a` and
/// `+b` from zero.
pub fn representable_sieve(pair: &CoprimePair) -> Vec<bool> {
    let bound = pair.theorem_bound() as usize;
    let (a, b) = (pair.a() as usize, pair.b() as usize);
    let mut marked = vec![false; bound + 1];
    marked[0] = true;
    for n in 0..=bound {
        if !marked[n] {
            continue;
        }
        if n + a <= bound {
            marked[n + a] = true;
        }
        if n + b <= bound {
            marked[n + b] = true;
        }
    }
    marked
}

/// Gap set computed with [`representable_sieve`].
pub fn gaps_bruteforce(pair: &CoprimePair) -> GapSet {
    let gaps = representable_sieve(pair)
        .iter()
        .enumerate()
        .filter(|(_, &m)| !m)
        .map(|(n, _)| n as i64)
        .collect();
    GapSet::from_sorted(*pair, gaps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapStatistics {
    pub count: usize,
    pub max: Option<i64>,
    pub sum: i64,
}

pub fn gap_statistics(gaps: &GapSet) -> GapStatistics {
    let sum = gaps
        .iter()
        .try_fold(0i64, |acc, g| acc.checked_add(g))
        .expect("gap sum is bounded by the product cap");
    GapStatistics {
        count: gaps.len(),
        max: gaps.max(),
        sum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    #[test]
    fn witnesses() {
        let p = pair(7, 5);
        assert_eq!(is_representable(&p, 23).unwrap(), None);
        assert_eq!(
            is_representable(&p, 24).unwrap(),
            Some(Representation { x: 2, y: 2 })
        );
        assert_eq!(
            is_representable(&p, 0).unwrap(),
            Some(Representation { x: 0, y: 0 })
        );
        assert_eq!(is_representable(&p, -1), Err(Error::NegativeTarget(-1)));
    }

    #[test]
    fn minimal_x_in_both_scan_directions() {
        // 70 = 7·10 = 5·14 = 7·5 + 5·7: minimal x is 0 whichever order.
        assert_eq!(
            is_representable(&pair(7, 5), 70).unwrap(),
            Some(Representation { x: 0, y: 14 })
        );
        assert_eq!(
            is_representable(&pair(5, 7), 70).unwrap(),
            Some(Representation { x: 0, y: 10 })
        );
    }

    #[test]
    fn minimal_x_matches_exhaustive_search() {
        for (a, b) in [(3, 7), (7, 3), (1, 4), (4, 1), (11, 13), (13, 11)] {
            let p = pair(a, b);
            for n in 0..=3 * a * b {
                let expected = (0..=n / a)
                    .find(|x| (n - a * x) % b == 0)
                    .map(|x| Representation {
                        x,
                        y: (n - a * x) / b,
                    });
                assert_eq!(
                    is_representable(&p, n).unwrap(),
                    expected,
                    "({a},{b}) n={n}"
                );
            }
        }
    }

    #[test]
    fn sieve_examples() {
        assert_eq!(
            gaps_bruteforce(&pair(7, 5)).gaps(),
            &[1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]
        );
        let big = gaps_bruteforce(&pair(29, 23));
        assert_eq!(big.len(), 308);
        assert_eq!(big.max(), Some(615));
        assert!(gaps_bruteforce(&pair(1, 7)).is_empty());
    }

    #[test]
    fn statistics() {
        // 1+2+3+4+6+8+9+11+13+16+18+23
        assert_eq!(
            gap_statistics(&gaps_bruteforce(&pair(7, 5))),
            GapStatistics {
                count: 12,
                max: Some(23),
                sum: 114
            }
        );
        assert_eq!(
            gap_statistics(&gaps_bruteforce(&pair(1, 9))),
            GapStatistics {
                count: 0,
                max: None,
                sum: 0
            }
        );
        assert_eq!(
            gap_statistics(&gaps_bruteforce(&pair(2, 3))),
            GapStatistics {
                count: 1,
                max: Some(1),
                sum: 1
            }
        );
    }
}
