//! A second, independent construction of `R(a, b)` through the solutions of
//! `a·x + b·y + z = a⌊b/2⌋ + b⌊a/2⌋`.
//!
//! The solution set `T` is split by the signs of
//! `X = ⌊b/2⌋ − x`, `Y = ⌊a/2⌋ − y`, `Z = b⌊a/2⌋ − z` into four cases. Four
//! sign-flip maps carry the cases onto the solution sets `T₁` (right side
//! `b⌊a/2⌋`) and `T₂` (right side `a⌊b/2⌋`) minus small boundary sets
//! `U`, `V`, `W`. Reading those images back gives four index families
//! whose values `a·x + b·y` make up `R(a, b)`.
//!
//! Everything here is an audit: each explicit parameterization is checked
//! against a brute-force enumeration of its defining equation, and failures
//! come back as data so a caller can print the full picture.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::closed_form::{self, Branch, CandidateTerm};
use crate::error::{Error, Result};
use crate::pair::CoprimePair;

/// Which three-variable equation a triple solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Equation {
    /// `ax + by + z = a⌊b/2⌋ + b⌊a/2⌋` (the set `T`)
    Full,
    /// `ax + by + z = b⌊a/2⌋` (the set `T₁`)
    BHalfA,
    /// `ax + by + z = a⌊b/2⌋` (the set `T₂`)
    AHalfB,
}

impl Equation {
    pub fn rhs(self, pair: &CoprimePair) -> i64 {
        match self {
            Equation::Full => pair.theorem_bound(),
            Equation::BHalfA => pair.b() * pair.half_a(),
            Equation::AHalfB => pair.a() * pair.half_b(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SolutionTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub equation: Equation,
}

impl SolutionTriple {
    fn new(x: i64, y: i64, z: i64, equation: Equation) -> Self {
        SolutionTriple { x, y, z, equation }
    }

    pub fn is_solution(&self, pair: &CoprimePair) -> bool {
        self.x >= 0
            && self.y >= 0
            && self.z >= 0
            && pair.combine(self.x, self.y) + self.z == self.equation.rhs(pair)
    }

    /// `a·x + b·y`.
    pub fn value(&self, pair: &CoprimePair) -> i64 {
        pair.combine(self.x, self.y)
    }

    pub fn coords(&self) -> (i64, i64, i64) {
        (self.x, self.y, self.z)
    }
}

impl fmt::Display for SolutionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Sign case of a solution of the full equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseLabel {
    /// `X ≥ 0, Y ≥ 0, Z ≥ 0`
    S1,
    /// `X ≥ 0, Y ≥ 0, Z < 0`
    S2,
    /// `X ≥ 0, Y < 0`
    S3,
    /// `X < 0`
    S4,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [CaseLabel::S1, CaseLabel::S2, CaseLabel::S3, CaseLabel::S4];

    /// `(X, Y, Z)` for a triple of the full equation.
    pub fn shifted(pair: &CoprimePair, t: &SolutionTriple) -> (i64, i64, i64) {
        (
            pair.half_b() - t.x,
            pair.half_a() - t.y,
            pair.b() * pair.half_a() - t.z,
        )
    }

    /// The four sign predicates evaluated separately, in label order.
    pub fn predicates(big_x: i64, big_y: i64, big_z: i64) -> [bool; 4] {
        [
            big_x >= 0 && big_y >= 0 && big_z >= 0,
            big_x >= 0 && big_y >= 0 && big_z < 0,
            big_x >= 0 && big_y < 0,
            big_x < 0,
        ]
    }

    pub fn classify(pair: &CoprimePair, t: &SolutionTriple) -> CaseLabel {
        let (big_x, big_y, big_z) = Self::shifted(pair, t);
        if big_x < 0 {
            CaseLabel::S4
        } else if big_y < 0 {
            CaseLabel::S3
        } else if big_z < 0 {
            CaseLabel::S2
        } else {
            CaseLabel::S1
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Every nonnegative solution of `equation`, by scanning `x` then `y`.
pub fn enumerate_solutions(pair: &CoprimePair, equation: Equation) -> Vec<SolutionTriple> {
    let rhs = equation.rhs(pair);
    let (a, b) = (pair.a(), pair.b());
    let mut out = Vec::new();
    for x in 0..=rhs / a {
        let rest = rhs - a * x;
        for y in 0..=rest / b {
            out.push(SolutionTriple::new(x, y, rest - b * y, equation));
        }
    }
    out
}

/// `T`, each triple tagged with its sign case.
pub fn enumerate_t(pair: &CoprimePair) -> Vec<(SolutionTriple, CaseLabel)> {
    enumerate_solutions(pair, Equation::Full)
        .into_iter()
        .map(|t| (t, CaseLabel::classify(pair, &t)))
        .collect()
}

pub fn enumerate_t1(pair: &CoprimePair) -> Vec<SolutionTriple> {
    enumerate_solutions(pair, Equation::BHalfA)
}

pub fn enumerate_t2(pair: &CoprimePair) -> Vec<SolutionTriple> {
    enumerate_solutions(pair, Equation::AHalfB)
}

/// Members of `T` in one sign case.
pub fn case_set(pair: &CoprimePair, label: CaseLabel) -> Vec<SolutionTriple> {
    enumerate_t(pair)
        .into_iter()
        .filter(|&(_, l)| l == label)
        .map(|(t, _)| t)
        .collect()
}

/// The floor-bounded parameterizations of `T₁`, `T₂`, `U`, `V`, `W` and the
/// image sets, written out directly rather than derived from the equations.
pub mod explicit {
    use super::*;

    fn t1_rows(pair: &CoprimePair, x_from: i64) -> Vec<SolutionTriple> {
        let (a, b, ha) = (pair.a(), pair.b(), pair.half_a());
        let mut out = Vec::new();
        for y in 0..=ha {
            for x in x_from..=b * (ha - y) / a {
                out.push(SolutionTriple::new(
                    x,
                    y,
                    b * ha - a * x - b * y,
                    Equation::BHalfA,
                ));
            }
        }
        out
    }

    fn t2_rows(pair: &CoprimePair, x_end: i64, y_from: i64) -> Vec<SolutionTriple> {
        let (a, b, hb) = (pair.a(), pair.b(), pair.half_b());
        let mut out = Vec::new();
        for x in 0..=x_end {
            for y in y_from..=a * (hb - x) / b {
                out.push(SolutionTriple::new(
                    x,
                    y,
                    a * hb - a * x - b * y,
                    Equation::AHalfB,
                ));
            }
        }
        out
    }

    /// `0 ≤ y ≤ ⌊a/2⌋`, `0 ≤ x ≤ ⌊(b/a)(⌊a/2⌋ − y)⌋`
    pub fn t1(pair: &CoprimePair) -> Vec<SolutionTriple> {
        t1_rows(pair, 0)
    }

    /// `0 ≤ x ≤ ⌊b/2⌋`, `0 ≤ y ≤ ⌊(a/b)(⌊b/2⌋ − x)⌋`
    pub fn t2(pair: &CoprimePair) -> Vec<SolutionTriple> {
        t2_rows(pair, pair.half_b(), 0)
    }

    pub fn u(pair: &CoprimePair) -> Vec<SolutionTriple> {
        vec![SolutionTriple::new(pair.half_b(), 0, 0, Equation::AHalfB)]
    }

    pub fn v(pair: &CoprimePair) -> Vec<SolutionTriple> {
        let hb = pair.half_b();
        (0..=hb)
            .map(|x| SolutionTriple::new(x, 0, pair.a() * (hb - x), Equation::AHalfB))
            .collect()
    }

    pub fn w(pair: &CoprimePair) -> Vec<SolutionTriple> {
        let ha = pair.half_a();
        (0..=ha)
            .map(|y| SolutionTriple::new(0, y, pair.b() * (ha - y), Equation::BHalfA))
            .collect()
    }

    /// `0 ≤ x < ⌊b/2⌋`
    pub fn t2_minus_u(pair: &CoprimePair) -> Vec<SolutionTriple> {
        t2_rows(pair, pair.half_b() - 1, 0)
    }

    /// `0 < y`
    pub fn t2_minus_v(pair: &CoprimePair) -> Vec<SolutionTriple> {
        t2_rows(pair, pair.half_b(), 1)
    }

    /// `0 < x`
    pub fn t1_minus_w(pair: &CoprimePair) -> Vec<SolutionTriple> {
        t1_rows(pair, 1)
    }
}

/// One of the four explicit index families for the case sets, in the order
/// they are conventionally printed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexedFamily {
    /// Position in the printed order, 1 through 4.
    pub printed_index: usize,
    /// The sign case whose solutions this family actually enumerates.
    pub case: CaseLabel,
    pub triples: Vec<SolutionTriple>,
}

/// The four index families, each obtained by pulling a `T₁`/`T₂`
/// parameterization back through its sign-flip map:
///
/// 1. `(⌊b/2⌋−i, j, b⌊a/2⌋+ai−bj)`, `0 ≤ j ≤ ⌊a/2⌋`, `0 ≤ i ≤ ⌊bj/a⌋`
/// 2. `(⌊b/2⌋+i, ⌊a/2⌋−j, bj−ai)`, `0 ≤ j ≤ ⌊a/2⌋`, `0 < i ≤ ⌊bj/a⌋`
/// 3. `(⌊b/2⌋−i, j, b⌊a/2⌋+ai−bj)`, `0 < i ≤ ⌊b/2⌋`, `0 ≤ j ≤ ⌊ai/b⌋`
/// 4. `(⌊b/2⌋−i, ⌊a/2⌋+j, ai−bj)`, `0 ≤ i ≤ ⌊b/2⌋`, `0 < j ≤ ⌊ai/b⌋`
///
/// Family 1 is case `S1`. Families 2, 3 and 4 land in cases `S4`, `S2` and
/// `S3` respectively: family 2 has `x > ⌊b/2⌋`, family 3 has
/// `Z = bj − ai < 0`, family 4 has `y > ⌊a/2⌋`.
pub fn indexed_families(pair: &CoprimePair) -> [IndexedFamily; 4] {
    let (a, b) = (pair.a(), pair.b());
    let (ha, hb) = (pair.half_a(), pair.half_b());
    let full = Equation::Full;

    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    for j in 0..=ha {
        for i in 0..=b * j / a {
            f1.push(SolutionTriple::new(hb - i, j, b * ha + a * i - b * j, full));
            if i > 0 {
                f2.push(SolutionTriple::new(hb + i, ha - j, b * j - a * i, full));
            }
        }
    }
    let mut f3 = Vec::new();
    let mut f4 = Vec::new();
    for i in 0..=hb {
        for j in 0..=a * i / b {
            if i > 0 {
                f3.push(SolutionTriple::new(hb - i, j, b * ha + a * i - b * j, full));
            }
            if j > 0 {
                f4.push(SolutionTriple::new(hb - i, ha + j, a * i - b * j, full));
            }
        }
    }

    [
        IndexedFamily {
            printed_index: 1,
            case: CaseLabel::S1,
            triples: f1,
        },
        IndexedFamily {
            printed_index: 2,
            case: CaseLabel::S4,
            triples: f2,
        },
        IndexedFamily {
            printed_index: 3,
            case: CaseLabel::S2,
            triples: f3,
        },
        IndexedFamily {
            printed_index: 4,
            case: CaseLabel::S3,
            triples: f4,
        },
    ]
}

/// Applies the sign-flip map attached to `label`:
/// `S1: (X, Y, Z)`, `S2: (x, y, −Z)`, `S3: (x, −Y, z)`, `S4: (−X, y, z)`.
pub fn apply_phi(pair: &CoprimePair, label: CaseLabel, t: &SolutionTriple) -> SolutionTriple {
    let (big_x, big_y, big_z) = CaseLabel::shifted(pair, t);
    match label {
        CaseLabel::S1 => SolutionTriple::new(big_x, big_y, big_z, Equation::BHalfA),
        CaseLabel::S2 => SolutionTriple::new(t.x, t.y, -big_z, Equation::AHalfB),
        CaseLabel::S3 => SolutionTriple::new(t.x, -big_y, t.z, Equation::AHalfB),
        CaseLabel::S4 => SolutionTriple::new(-big_x, t.y, t.z, Equation::BHalfA),
    }
}

/// The set each map is claimed to hit, built from the defining equations:
/// `T₁`, `T₂ ∖ U`, `T₂ ∖ V`, `T₁ ∖ W`.
pub fn claimed_image(pair: &CoprimePair, label: CaseLabel) -> Vec<SolutionTriple> {
    match label {
        CaseLabel::S1 => enumerate_t1(pair),
        CaseLabel::S2 => enumerate_t2(pair)
            .into_iter()
            .filter(|t| t.z != 0)
            .collect(),
        CaseLabel::S3 => enumerate_t2(pair)
            .into_iter()
            .filter(|t| t.y != 0)
            .collect(),
        CaseLabel::S4 => enumerate_t1(pair)
            .into_iter()
            .filter(|t| t.x != 0)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiCheck {
    pub case: CaseLabel,
    pub domain_size: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub image_equal: bool,
    pub failures: Vec<String>,
}

impl PhiCheck {
    pub fn passed(&self) -> bool {
        self.well_defined && self.injective && self.image_equal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub checks: Vec<PhiCheck>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PhiCheck::passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().flat_map(|c| c.failures.first()).next() {
            Some(msg) => Err(Error::VerificationFailure(msg.clone())),
            None => Ok(self),
        }
    }
}

/// Checks each sign-flip map for well-definedness, injectivity and image
/// equality against the brute-force claimed image.
pub fn phi_maps(pair: &CoprimePair) -> PhiReport {
    let labelled = enumerate_t(pair);
    let checks = CaseLabel::ALL
        .iter()
        .map(|&label| {
            let domain: Vec<SolutionTriple> = labelled
                .iter()
                .filter(|&&(_, l)| l == label)
                .map(|&(t, _)| t)
                .collect();
            let claimed: BTreeSet<SolutionTriple> =
                claimed_image(pair, label).into_iter().collect();
            let mut failures = Vec::new();

            let mut well_defined = true;
            let mut image = BTreeSet::new();
            let mut injective = true;
            for t in &domain {
                let img = apply_phi(pair, label, t);
                if !img.is_solution(pair) || !claimed.contains(&img) {
                    well_defined = false;
                    failures.push(format!(
                        "phi_{label:?}: {t} maps to {img} outside the codomain"
                    ));
                }
                if !image.insert(img) {
                    injective = false;
                    failures.push(format!("phi_{label:?}: {t} collides at {img}"));
                }
            }
            let image_equal = image == claimed;
            if !image_equal {
                let missed = claimed.difference(&image).next();
                failures.push(format!(
                    "phi_{label:?}: image has {} triples, claimed set has {} (first missed: {})",
                    image.len(),
                    claimed.len(),
                    missed.map_or_else(|| "none".to_string(), |t| t.to_string())
                ));
            }
            PhiCheck {
                case: label,
                domain_size: domain.len(),
                well_defined,
                injective,
                image_equal,
                failures,
            }
        })
        .collect();
    PhiReport { checks }
}

/// The four value families; their union is `R(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ASets {
    pub a1: Vec<CandidateTerm>,
    pub a2: Vec<CandidateTerm>,
    pub a3: Vec<CandidateTerm>,
    pub a4: Vec<CandidateTerm>,
}

impl ASets {
    pub fn all(&self) -> impl Iterator<Item = &CandidateTerm> {
        self.a1
            .iter()
            .chain(&self.a2)
            .chain(&self.a3)
            .chain(&self.a4)
    }

    /// Sorted, deduplicated union of the four families.
    pub fn union(&self) -> Vec<i64> {
        sorted_values(self.all().map(|t| t.value))
    }
}

pub fn a_sets(pair: &CoprimePair) -> ASets {
    let (a, b) = (pair.a(), pair.b());
    let (ha, hb) = (pair.half_a(), pair.half_b());
    let term = |branch, i, j| CandidateTerm::new(pair, branch, i, j);

    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    for j in 0..=ha {
        for i in 0..=b * j / a {
            a1.push(term(Branch::A1, i, j));
            if i > 0 {
                a2.push(term(Branch::A2, i, j));
            }
        }
    }
    let mut a3 = Vec::new();
    let mut a4 = Vec::new();
    for i in 0..=hb {
        for j in 0..=a * i / b {
            if i > 0 {
                a3.push(term(Branch::A3, i, j));
            }
            if j > 0 {
                a4.push(term(Branch::A4, i, j));
            }
        }
    }
    ASets { a1, a2, a3, a4 }
}

fn sorted_values(it: impl Iterator<Item = i64>) -> Vec<i64> {
    let mut v: Vec<i64> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// The merged descriptions of `A₁ ∪ A₃` and `A₂ ∪ A₄`, plus the
/// intermediate set that the merge rewrites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinedSets {
    /// `a⌊b/2⌋ − (ai − bj)`, `0 ≤ i ≤ ⌊b/2⌋`, `0 ≤ j ≤ ⌊a/2⌋`
    pub first: Vec<i64>,
    /// `a⌊b/2⌋ + b⌊a/2⌋ − |ai − bj|`, `1 ≤ i ≤ ⌊b/2⌋`, `1 ≤ j ≤ ⌊a/2⌋`
    pub second: Vec<i64>,
    /// `a⌊b/2⌋ − (ai − bj)`, `1 ≤ i ≤ ⌊b/2⌋`, `1 ≤ j ≤ ⌊a/2⌋`
    pub inner_raw: Vec<i64>,
    /// `ai + bj`, `0 ≤ i < ⌊b/2⌋`, `1 ≤ j ≤ ⌊a/2⌋`
    pub inner_rewritten: Vec<i64>,
}

pub fn combined_sets(pair: &CoprimePair) -> CombinedSets {
    let (a, b) = (pair.a(), pair.b());
    let (ha, hb) = (pair.half_a(), pair.half_b());
    let bound = pair.theorem_bound();
    let grid =
        |i_lo: i64, j_lo: i64| (j_lo..=ha).flat_map(move |j| (i_lo..=hb).map(move |i| (i, j)));
    CombinedSets {
        first: sorted_values(grid(0, 0).map(|(i, j)| a * hb - (a * i - b * j))),
        second: sorted_values(grid(1, 1).map(|(i, j)| bound - (a * i - b * j).abs())),
        inner_raw: sorted_values(grid(1, 1).map(|(i, j)| a * hb - (a * i - b * j))),
        inner_rewritten: sorted_values((1..=ha).flat_map(|j| (0..hb).map(move |i| a * i + b * j))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinedReport {
    pub a1_a3_matches: bool,
    pub a2_a4_matches: bool,
    pub inner_rewrite_matches: bool,
    /// Index pairs `(i, j)` whose raw value `a⌊b/2⌋ − (ai − bj)` is missing
    /// from the rewritten form or negative.
    pub disagreements: Vec<(i64, i64)>,
}

impl CombinedReport {
    pub fn passed(&self) -> bool {
        self.a1_a3_matches
            && self.a2_a4_matches
            && self.inner_rewrite_matches
            && self.disagreements.is_empty()
    }
}

pub fn combined_audit(pair: &CoprimePair) -> CombinedReport {
    let sets = a_sets(pair);
    let combined = combined_sets(pair);
    let a1_a3 = sorted_values(sets.a1.iter().chain(&sets.a3).map(|t| t.value));
    let a2_a4 = sorted_values(sets.a2.iter().chain(&sets.a4).map(|t| t.value));

    let (a, b) = (pair.a(), pair.b());
    let hb = pair.half_b();
    let mut disagreements = Vec::new();
    for j in 1..=pair.half_a() {
        for i in 1..=hb {
            let raw = a * hb - (a * i - b * j);
            if raw < 0 || combined.inner_rewritten.binary_search(&raw).is_err() {
                disagreements.push((i, j));
            }
        }
    }

    CombinedReport {
        a1_a3_matches: a1_a3 == combined.first,
        a2_a4_matches: a2_a4 == combined.second,
        inner_rewrite_matches: combined.inner_raw == combined.inner_rewritten,
        disagreements,
    }
}

/// Outcome of one named audit step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        CheckOutcome {
            name,
            passed,
            detail: (!passed).then(detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub pair: CoprimePair,
    pub outcomes: Vec<CheckOutcome>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

fn as_set(v: Vec<SolutionTriple>) -> BTreeSet<SolutionTriple> {
    v.into_iter().collect()
}

/// Compares an explicit list against the brute-force one and also rejects
/// duplicates in the explicit list.
fn same_set(explicit: Vec<SolutionTriple>, defining: Vec<SolutionTriple>) -> bool {
    let n = explicit.len();
    let e = as_set(explicit);
    e.len() == n && e == as_set(defining)
}

/// Runs every check in this module for one pair.
pub fn audit(pair: &CoprimePair) -> AuditReport {
    let mut outcomes = Vec::new();
    let labelled = enumerate_t(pair);

    // Each solution satisfies exactly one sign predicate.
    let bad_partition = labelled.iter().find(|(t, label)| {
        let (x, y, z) = CaseLabel::shifted(pair, t);
        let hits = CaseLabel::predicates(x, y, z);
        hits.iter().filter(|&&h| h).count() != 1 || !hits[label.index()] || !t.is_solution(pair)
    });
    outcomes.push(CheckOutcome::new(
        "partition",
        bad_partition.is_none(),
        || {
            format!(
                "triple {} is not in exactly one case",
                bad_partition.unwrap().0
            )
        },
    ));

    let families = indexed_families(pair);
    let mut family_ok = true;
    let mut family_detail = String::new();
    let mut union = BTreeSet::new();
    for fam in &families {
        let by_label: Vec<SolutionTriple> = labelled
            .iter()
            .filter(|&&(_, l)| l == fam.case)
            .map(|&(t, _)| t)
            .collect();
        union.extend(fam.triples.iter().copied());
        if !same_set(fam.triples.clone(), by_label) {
            family_ok = false;
            family_detail = format!(
                "family {} does not enumerate case {:?}",
                fam.printed_index, fam.case
            );
        }
    }
    let all_t: BTreeSet<SolutionTriple> = labelled.iter().map(|&(t, _)| t).collect();
    family_ok &= union == all_t;
    outcomes.push(CheckOutcome::new("case_families", family_ok, || {
        if family_detail.is_empty() {
            "families do not cover T".to_string()
        } else {
            family_detail
        }
    }));

    let t1 = enumerate_t1(pair);
    let t2 = enumerate_t2(pair);
    let u: Vec<_> = t2.iter().copied().filter(|t| t.z == 0).collect();
    let v: Vec<_> = t2.iter().copied().filter(|t| t.y == 0).collect();
    let w: Vec<_> = t1.iter().copied().filter(|t| t.x == 0).collect();
    let explicit_checks = [
        ("explicit_t1", same_set(explicit::t1(pair), t1.clone())),
        ("explicit_t2", same_set(explicit::t2(pair), t2.clone())),
        ("explicit_u", same_set(explicit::u(pair), u)),
        ("explicit_v", same_set(explicit::v(pair), v)),
        ("explicit_w", same_set(explicit::w(pair), w)),
        (
            "explicit_t2_minus_u",
            same_set(
                explicit::t2_minus_u(pair),
                claimed_image(pair, CaseLabel::S2),
            ),
        ),
        (
            "explicit_t2_minus_v",
            same_set(
                explicit::t2_minus_v(pair),
                claimed_image(pair, CaseLabel::S3),
            ),
        ),
        (
            "explicit_t1_minus_w",
            same_set(
                explicit::t1_minus_w(pair),
                claimed_image(pair, CaseLabel::S4),
            ),
        ),
    ];
    for (name, ok) in explicit_checks {
        outcomes.push(CheckOutcome::new(name, ok, || {
            format!("{name} differs from the defining equation")
        }));
    }

    let phi = phi_maps(pair);
    let phi_ok = phi.passed();
    outcomes.push(CheckOutcome::new("phi_maps", phi_ok, || {
        phi.checks
            .iter()
            .flat_map(|c| c.failures.iter())
            .next()
            .cloned()
            .unwrap_or_default()
    }));

    let r = closed_form::representable_set(pair);
    let from_t = sorted_values(labelled.iter().map(|(t, _)| t.value(pair)));
    let sets = a_sets(pair);
    let union_a = sets.union();
    let a_terms_valid = sets
        .all()
        .all(|t| t.branch.evaluate(pair, t.i, t.j) == t.value);
    // Each A-set is the value image of the matching index family.
    let family_values = |k: usize| sorted_values(families[k].triples.iter().map(|t| t.value(pair)));
    let a_match_families = sorted_values(sets.a1.iter().map(|t| t.value)) == family_values(0)
        && sorted_values(sets.a2.iter().map(|t| t.value)) == family_values(1)
        && sorted_values(sets.a3.iter().map(|t| t.value)) == family_values(2)
        && sorted_values(sets.a4.iter().map(|t| t.value)) == family_values(3);
    outcomes.push(CheckOutcome::new(
        "t_values_equal_r",
        from_t == r.members(),
        || format!("values of T: {} elements, R: {}", from_t.len(), r.len()),
    ));
    outcomes.push(CheckOutcome::new(
        "a_sets_union_equal_r",
        union_a == r.members() && a_terms_valid && a_match_families,
        || {
            format!(
                "union of A-sets: {} elements, R: {}",
                union_a.len(),
                r.len()
            )
        },
    ));

    let combined = combined_audit(pair);
    let combined_ok = combined.passed();
    outcomes.push(CheckOutcome::new("combined_sets", combined_ok, || {
        format!("{combined:?}")
    }));

    AuditReport {
        pair: *pair,
        outcomes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn label_of(p: &CoprimePair, x: i64, y: i64) -> CaseLabel {
        let z = Equation::Full.rhs(p) - p.combine(x, y);
        let t = SolutionTriple::new(x, y, z, Equation::Full);
        assert!(t.is_solution(p));
        CaseLabel::classify(p, &t)
    }

    #[test]
    fn labels_for_7_5() {
        let p = pair(7, 5);
        // X=2, Y=3, Z=15−29
        assert_eq!(label_of(&p, 0, 0), CaseLabel::S2);
        // X=0, Y=0, Z=15
        assert_eq!(label_of(&p, 2, 3), CaseLabel::S1);
    }

    #[test]
    fn t_for_2_3_has_five_triples() {
        // 2x + 3y ≤ 5: (0,0) (0,1) (1,0) (1,1) (2,0)
        assert_eq!(enumerate_t(&pair(2, 3)).len(), 5);
    }

    #[test]
    fn t1_and_w_for_7_5() {
        let p = pair(7, 5);
        let t1 = enumerate_t1(&p);
        for (x, y, z) in [(0, 3, 0), (2, 0, 1), (1, 1, 3)] {
            assert!(t1.contains(&SolutionTriple::new(x, y, z, Equation::BHalfA)));
        }
        assert_eq!(
            explicit::u(&p),
            vec![SolutionTriple::new(2, 0, 0, Equation::AHalfB)]
        );
        let w: Vec<(i64, i64, i64)> = explicit::w(&p).iter().map(|t| t.coords()).collect();
        assert_eq!(w, vec![(0, 0, 15), (0, 1, 10), (0, 2, 5), (0, 3, 0)]);
        assert!(explicit::w(&p).iter().all(|t| t1.contains(t)));
    }

    #[test]
    fn phi_checks_pass() {
        for (a, b) in [(7, 5), (2, 3), (1, 1), (1, 6), (9, 4)] {
            let report = phi_maps(&pair(a, b));
            assert!(report.passed(), "({a},{b}): {report:?}");
            assert!(report.into_result().is_ok());
        }
    }

    #[test]
    fn phi_domains_for_1_1() {
        // Only (0,0,0) solves x + y + z = 0; it is case S1.
        let report = phi_maps(&pair(1, 1));
        let sizes: Vec<usize> = report.checks.iter().map(|c| c.domain_size).collect();
        assert_eq!(sizes, vec![1, 0, 0, 0]);
    }

    #[test]
    fn broken_map_is_reported() {
        let p = pair(7, 5);
        let t = SolutionTriple::new(0, 0, 29, Equation::Full);
        // Sending an S2 triple through the S1 map leaves the codomain.
        let img = apply_phi(&p, CaseLabel::S1, &t);
        assert!(!img.is_solution(&p));
        let report = PhiReport {
            checks: vec![PhiCheck {
                case: CaseLabel::S1,
                domain_size: 1,
                well_defined: false,
                injective: true,
                image_equal: true,
                failures: vec!["phi_S1: bad".into()],
            }],
        };
        assert!(matches!(
            report.into_result(),
            Err(Error::VerificationFailure(_))
        ));
    }

    #[test]
    fn a1_example_for_7_5() {
        let sets = a_sets(&pair(7, 5));
        let t = sets.a1.iter().find(|t| t.i == 2 && t.j == 3).unwrap();
        assert_eq!(t.value, 15);
        assert_eq!(
            sets.union(),
            vec![0, 5, 7, 10, 12, 14, 15, 17, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29]
        );
    }

    #[test]
    fn a_sets_for_1_1() {
        let sets = a_sets(&pair(1, 1));
        assert_eq!(sets.a1.iter().map(|t| t.value).collect::<Vec<_>>(), vec![0]);
        assert!(sets.a2.is_empty() && sets.a3.is_empty() && sets.a4.is_empty());
    }

    #[test]
    fn combined_examples() {
        let c = combined_sets(&pair(7, 5));
        assert_eq!(c.second, vec![20, 21, 25, 26, 27, 28]);
        // i = 0, j = 0 gives 7·2 = 14; i = 2, j = 3 gives 15.
        assert!(c.first.contains(&14) && c.first.contains(&15));
        assert_eq!(combined_sets(&pair(2, 3)).second, vec![4]);
        assert!(combined_audit(&pair(7, 5)).passed());
    }

    #[test]
    fn family_labels() {
        let p = pair(7, 5);
        for fam in indexed_families(&p) {
            for t in &fam.triples {
                assert!(t.is_solution(&p));
                assert_eq!(
                    CaseLabel::classify(&p, t),
                    fam.case,
                    "family {}",
                    fam.printed_index
                );
            }
        }
    }

    #[test]
    fn full_audit_small_pairs() {
        for (a, b) in [(7, 5), (5, 7), (2, 3), (1, 1), (1, 4), (29, 23), (13, 8)] {
            let report = audit(&pair(a, b));
            assert!(
                report.passed(),
                "({a},{b}): {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}
