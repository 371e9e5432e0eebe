//! Problem instance types and the two classical facts about them: the
//! largest gap (Frobenius number) and the number of gaps.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default ceiling on `a * b`. Every quantity derived from a pair is bounded
/// by a small multiple of the product, and the sieve allocates one byte per
/// integer up to the theorem bound.
pub const DEFAULT_MAX_PRODUCT: i64 = 100_000_000;

/// Largest cap a caller may request. Leaves room for sums like
/// `bound + a * b` without overflowing `i64`.
pub const HARD_MAX_PRODUCT: i64 = i64::MAX / 8;

/// A validated pair of coprime positive integers.
///
/// The pair is stored in the order given; `(a, b)` and `(b, a)` are distinct
/// values that describe the same semigroup.
///
/// Either generator may be 1. In that case every nonnegative integer is
/// representable, the gap set is empty and [`CoprimePair::frobenius_number`]
/// returns `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoprimePair {
    a: i64,
    b: i64,
}

impl CoprimePair {
    /// Validates `(a, b)` against [`DEFAULT_MAX_PRODUCT`].
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Self::with_max_product(a, b, DEFAULT_MAX_PRODUCT)
    }

    /// Validates `(a, b)` against a caller-chosen product cap. The cap is
    /// clamped to [`HARD_MAX_PRODUCT`].
    pub fn with_max_product(a: i64, b: i64, cap: i64) -> Result<Self> {
        if a <= 0 || b <= 0 {
            return Err(Error::NonPositive { a, b });
        }
        let g = a.gcd(&b);
        if g != 1 {
            return Err(Error::NotCoprime { a, b, gcd: g });
        }
        let cap = cap.clamp(1, HARD_MAX_PRODUCT);
        match a.checked_mul(b) {
            Some(p) if p <= cap => Ok(CoprimePair { a, b }),
            _ => Err(Error::Overflow { a, b, cap }),
        }
    }

    #[inline]
    pub fn a(&self) -> i64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> i64 {
        self.b
    }

    /// The same pair with the generators exchanged.
    pub fn swapped(&self) -> Self {
        CoprimePair {
            a: self.b,
            b: self.a,
        }
    }

    /// `⌊a/2⌋`, the upper index of `j` in the grid description.
    #[inline]
    pub fn half_a(&self) -> i64 {
        self.a / 2
    }

    /// `⌊b/2⌋`, the upper index of `i` in the grid description.
    #[inline]
    pub fn half_b(&self) -> i64 {
        self.b / 2
    }

    /// True when both generators are at least 2, i.e. gaps exist.
    pub fn has_gaps(&self) -> bool {
        self.a >= 2 && self.b >= 2
    }

    /// `a·b − a − b`, or `None` when `a = 1` or `b = 1`.
    pub fn frobenius_number(&self) -> Option<i64> {
        self.has_gaps().then(|| self.a * self.b - self.a - self.b)
    }

    /// `(a−1)(b−1)/2`.
    pub fn gap_count(&self) -> i64 {
        let twice = (self.a - 1) * (self.b - 1);
        debug_assert_eq!(twice % 2, 0, "(a-1)(b-1) is even for coprime a, b");
        twice / 2
    }

    /// `a⌊b/2⌋ + b⌊a/2⌋`, the top of the interval in which all gaps lie.
    pub fn theorem_bound(&self) -> i64 {
        self.a * self.half_b() + self.b * self.half_a()
    }

    /// Value of `a·x + b·y`.
    #[inline]
    pub fn combine(&self, x: i64, y: i64) -> i64 {
        self.a * x + self.b * y
    }
}

/// Free-function forms of the pair queries.
pub fn frobenius_number(pair: &CoprimePair) -> Option<i64> {
    pair.frobenius_number()
}

pub fn gap_count(pair: &CoprimePair) -> i64 {
    pair.gap_count()
}

pub fn theorem_bound(pair: &CoprimePair) -> i64 {
    pair.theorem_bound()
}

/// A witness `(x, y)`, both nonnegative, for `a·x + b·y = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Representation {
    pub x: i64,
    pub y: i64,
}

impl Representation {
    pub fn value(&self, pair: &CoprimePair) -> i64 {
        pair.combine(self.x, self.y)
    }

    pub fn is_valid_for(&self, pair: &CoprimePair, n: i64) -> bool {
        self.x >= 0 && self.y >= 0 && self.value(pair) == n
    }
}

/// Sorted, duplicate-free list of the nonrepresentable numbers of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSet {
    pair: CoprimePair,
    gaps: Vec<i64>,
    bound: i64,
}

impl GapSet {
    /// `gaps` must be strictly increasing and lie in `(0, bound]`.
    pub(crate) fn from_sorted(pair: CoprimePair, gaps: Vec<i64>) -> Self {
        let bound = pair.theorem_bound();
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(gaps.iter().all(|&g| 0 < g && g <= bound));
        GapSet { pair, gaps, bound }
    }

    pub fn pair(&self) -> &CoprimePair {
        &self.pair
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn max(&self) -> Option<i64> {
        self.gaps.last().copied()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.gaps.iter().copied()
    }
}
