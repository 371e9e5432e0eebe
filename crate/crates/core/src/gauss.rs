//! The floor-sum identity for two distinct odd primes
//!
//! ```text
//! Σ_{i=1}^{(p−1)/2} ⌊iq/p⌋ + Σ_{i=1}^{(q−1)/2} ⌊ip/q⌋ = (p−1)(q−1)/4
//! ```
//!
//! together with a lattice count that splits the half-rectangle
//! `[1, (p−1)/2] × [1, (q−1)/2]` along the line `p·j = q·i`.
//!
//! Only primes are accepted by default. [`OddPair::experimental`] admits
//! odd coprime composites; results for those are observations, since the
//! identity above is only asserted for primes.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Trial division; inputs here are small.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn check_odd_coprime(p: i64, q: i64) -> Result<()> {
    let invalid = |reason| Err(Error::InvalidPair { p, q, reason });
    if p < 3 || q < 3 {
        return invalid("both values must be at least 3");
    }
    if p % 2 == 0 || q % 2 == 0 {
        return invalid("both values must be odd");
    }
    if p == q {
        return invalid("values must be distinct");
    }
    if p.gcd(&q) != 1 {
        return invalid("values must be coprime");
    }
    // Keeps p·q/2-sized sums and the products in the lattice test in range.
    if p.checked_mul(q).is_none_or(|pq| pq > 1 << 40) {
        return invalid("product too large");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OddPair {
    p: i64,
    q: i64,
    primality_checked: bool,
}

impl OddPair {
    /// Distinct odd primes.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        check_odd_coprime(p, q)?;
        if !is_prime(p) || !is_prime(q) {
            return Err(Error::InvalidPair {
                p,
                q,
                reason: "values must be prime (use experimental mode for composites)",
            });
        }
        Ok(OddPair {
            p,
            q,
            primality_checked: true,
        })
    }

    /// Distinct odd coprime values, prime or not.
    pub fn experimental(p: i64, q: i64) -> Result<Self> {
        check_odd_coprime(p, q)?;
        Ok(OddPair {
            p,
            q,
            primality_checked: is_prime(p) && is_prime(q),
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// True when both values were verified prime.
    pub fn primality_checked(&self) -> bool {
        self.primality_checked
    }

    pub fn swapped(&self) -> Self {
        OddPair {
            p: self.q,
            q: self.p,
            primality_checked: self.primality_checked,
        }
    }

    /// `(p−1)(q−1)/4`.
    pub fn rectangle(&self) -> i64 {
        (self.p - 1) / 2 * ((self.q - 1) / 2)
    }
}

/// `Σ_{i=1}^{(p−1)/2} ⌊iq/p⌋`, summed directly.
pub fn half_floor_sum(p: i64, q: i64) -> Result<i64> {
    check_odd_coprime(p, q)?;
    Ok(half_floor_sum_unchecked(p, q))
}

fn half_floor_sum_unchecked(p: i64, q: i64) -> i64 {
    (1..=(p - 1) / 2).map(|i| i * q / p).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GaussIdentity {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn gauss_identity(pair: &OddPair) -> GaussIdentity {
    let lhs = half_floor_sum_unchecked(pair.p, pair.q) + half_floor_sum_unchecked(pair.q, pair.p);
    let rhs = pair.rectangle();
    GaussIdentity {
        lhs,
        rhs,
        holds: lhs == rhs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticeCount {
    /// Points with `p·j < q·i`.
    pub below: i64,
    /// Points with `p·j > q·i`.
    pub above: i64,
    pub total: i64,
    pub rectangle: i64,
    /// Totals agree, no point sits on the line, and each side matches its
    /// floor sum.
    pub holds: bool,
}

/// Counts lattice points `(i, j)`, `1 ≤ i ≤ (p−1)/2`, `1 ≤ j ≤ (q−1)/2`, on
/// either side of the line `p·j = q·i`.
pub fn lattice_count_check(pair: &OddPair) -> LatticeCount {
    let (p, q) = (pair.p, pair.q);
    let (mut below, mut above, mut on_line) = (0, 0, 0);
    for i in 1..=(p - 1) / 2 {
        for j in 1..=(q - 1) / 2 {
            match (p * j).cmp(&(q * i)) {
                std::cmp::Ordering::Less => below += 1,
                std::cmp::Ordering::Greater => above += 1,
                std::cmp::Ordering::Equal => on_line += 1,
            }
        }
    }
    let rectangle = pair.rectangle();
    let total = below + above;
    let holds = on_line == 0
        && total == rectangle
        && below == half_floor_sum_unchecked(p, q)
        && above == half_floor_sum_unchecked(q, p);
    LatticeCount {
        below,
        above,
        total,
        rectangle,
        holds,
    }
}
