//! Explicit description of the representable numbers up to the theorem
//! bound `a⌊b/2⌋ + b⌊a/2⌋`.
//!
//! Every representable `n` in `[0, bound]` is either a grid value
//! `a·i + b·j` with `0 ≤ i ≤ ⌊b/2⌋, 0 ≤ j ≤ ⌊a/2⌋`, or a mirror value
//! `bound − |a·i − b·j|` with `1 ≤ i ≤ ⌊b/2⌋, 1 ≤ j ≤ ⌊a/2⌋`. The two
//! families never collide, so `|R| = (⌊a/2⌋+1)(⌊b/2⌋+1) + ⌊a/2⌋⌊b/2⌋`.
//! The gaps are whatever is left of `[0, bound]`.

use serde::Serialize;

use crate::pair::{CoprimePair, GapSet};

/// Which formula produced a [`CandidateTerm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// `a·i + b·j`
    Grid,
    /// `bound − |a·i − b·j|`
    Mirror,
    /// `a(⌊b/2⌋ − i) + b·j`, `0 ≤ j ≤ ⌊a/2⌋`, `0 ≤ i ≤ ⌊bj/a⌋`
    A1,
    /// `a(⌊b/2⌋ + i) + b(⌊a/2⌋ − j)`, `0 ≤ j ≤ ⌊a/2⌋`, `0 < i ≤ ⌊bj/a⌋`
    A2,
    /// `a(⌊b/2⌋ − i) + b·j`, `0 < i ≤ ⌊b/2⌋`, `0 ≤ j ≤ ⌊ai/b⌋`
    A3,
    /// `a(⌊b/2⌋ − i) + b(⌊a/2⌋ + j)`, `0 ≤ i ≤ ⌊b/2⌋`, `0 < j ≤ ⌊ai/b⌋`
    A4,
}

impl Branch {
    /// Evaluates this branch's formula at `(i, j)`.
    pub fn evaluate(self, pair: &CoprimePair, i: i64, j: i64) -> i64 {
        let (a, b) = (pair.a(), pair.b());
        let (ha, hb) = (pair.half_a(), pair.half_b());
        match self {
            Branch::Grid => a * i + b * j,
            Branch::Mirror => pair.theorem_bound() - (a * i - b * j).abs(),
            Branch::A1 | Branch::A3 => a * (hb - i) + b * j,
            Branch::A2 => a * (hb + i) + b * (ha - j),
            Branch::A4 => a * (hb - i) + b * (ha + j),
        }
    }
}

/// One indexed element of an explicit description, before deduplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CandidateTerm {
    pub value: i64,
    pub i: i64,
    pub j: i64,
    pub branch: Branch,
}

impl CandidateTerm {
    pub(crate) fn new(pair: &CoprimePair, branch: Branch, i: i64, j: i64) -> Self {
        CandidateTerm {
            value: branch.evaluate(pair, i, j),
            i,
            j,
            branch,
        }
    }
}

/// Grid branch, `j` outer and `i` inner.
pub fn grid_terms(pair: &CoprimePair) -> Vec<CandidateTerm> {
    let mut out = Vec::with_capacity(((pair.half_a() + 1) * (pair.half_b() + 1)) as usize);
    for j in 0..=pair.half_a() {
        for i in 0..=pair.half_b() {
            out.push(CandidateTerm::new(pair, Branch::Grid, i, j));
        }
    }
    out
}

/// Mirror branch, `j` outer and `i` inner.
pub fn mirror_terms(pair: &CoprimePair) -> Vec<CandidateTerm> {
    let mut out = Vec::with_capacity((pair.half_a() * pair.half_b()) as usize);
    for j in 1..=pair.half_a() {
        for i in 1..=pair.half_b() {
            out.push(CandidateTerm::new(pair, Branch::Mirror, i, j));
        }
    }
    out
}

/// Expected `|R|` for a coprime pair.
pub fn representable_count(pair: &CoprimePair) -> i64 {
    let (ha, hb) = (pair.half_a(), pair.half_b());
    (ha + 1) * (hb + 1) + ha * hb
}

/// Sorted representable numbers in `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentableSet {
    pair: CoprimePair,
    members: Vec<i64>,
}

impl RepresentableSet {
    pub fn pair(&self) -> &CoprimePair {
        &self.pair
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    /// Complement within `[0, bound]`.
    pub fn complement(&self) -> GapSet {
        let bound = self.pair.theorem_bound();
        let mut gaps = Vec::with_capacity(self.pair.gap_count() as usize);
        let mut next = 0;
        for &m in &self.members {
            gaps.extend(next..m);
            next = m + 1;
        }
        gaps.extend(next..=bound);
        GapSet::from_sorted(self.pair, gaps)
    }
}

pub fn representable_set(pair: &CoprimePair) -> RepresentableSet {
    let mut members: Vec<i64> = grid_terms(pair)
        .into_iter()
        .chain(mirror_terms(pair))
        .map(|t| t.value)
        .collect();
    members.sort_unstable();
    members.dedup();
    RepresentableSet {
        pair: *pair,
        members,
    }
}

/// The nonrepresentable numbers, as the complement of [`representable_set`].
pub fn gap_set(pair: &CoprimePair) -> GapSet {
    representable_set(pair).complement()
}

/// A value from the three-way split of `R(a, b)` along with the witness the
/// split constructs for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseTerm {
    pub value: i64,
    pub x: i64,
    pub y: i64,
}

/// `R(a, b)` split by where the witness `(x, y)` sits relative to
/// `(⌊b/2⌋, ⌊a/2⌋)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseContributions {
    /// `x ≤ ⌊b/2⌋` and `y ≤ ⌊a/2⌋`.
    pub within_box: Vec<CaseTerm>,
    /// `x > ⌊b/2⌋`, `y < ⌊a/2⌋`: `bound + (aX − bY)` with `aX ≤ bY`.
    pub x_excess: Vec<CaseTerm>,
    /// `y > ⌊a/2⌋`, `x < ⌊b/2⌋`: `bound − (aX − bY)` with `aX ≥ bY`.
    pub y_excess: Vec<CaseTerm>,
}

impl CaseContributions {
    pub fn values(terms: &[CaseTerm]) -> Vec<i64> {
        terms.iter().map(|t| t.value).collect()
    }
}

pub fn case_contributions(pair: &CoprimePair) -> CaseContributions {
    let (a, b) = (pair.a(), pair.b());
    let (ha, hb) = (pair.half_a(), pair.half_b());
    let bound = pair.theorem_bound();

    let mut within_box = Vec::new();
    for y in 0..=ha {
        for x in 0..=hb {
            within_box.push(CaseTerm {
                value: pair.combine(x, y),
                x,
                y,
            });
        }
    }

    let mut x_excess = Vec::new();
    let mut y_excess = Vec::new();
    for big_y in 1..=ha {
        for big_x in 1..=hb {
            let diff = a * big_x - b * big_y;
            // a·X = b·Y would need b | X with 1 ≤ X ≤ ⌊b/2⌋.
            assert_ne!(diff, 0, "aX = bY is impossible for coprime a, b");
            if diff < 0 {
                x_excess.push(CaseTerm {
                    value: bound + diff,
                    x: hb + big_x,
                    y: ha - big_y,
                });
            } else {
                y_excess.push(CaseTerm {
                    value: bound - diff,
                    x: hb - big_x,
                    y: ha + big_y,
                });
            }
        }
    }

    CaseContributions {
        within_box,
        x_excess,
        y_excess,
    }
}
