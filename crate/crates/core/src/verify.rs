//! Range sweeps that cross-check every construction against the others.
//!
//! Pairs are evaluated in parallel; results come back in `(a, b)` order.

use std::collections::HashSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form;
use crate::gauss::{self, OddPair};
use crate::oracle;
use crate::pair::CoprimePair;
use crate::proof_machinery;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Closed-form gaps equal sieve gaps; the largest gap is `ab − a − b`.
    ClosedVsSieve,
    /// Both branches duplicate-free and disjoint; `|R|` matches its formula.
    Remark,
    /// `|gaps| = (a−1)(b−1)/2`.
    GapCount,
    /// A full period above `(a−1)(b−1)` is representable.
    LemmaTail,
    /// Sign cases partition `T` and the index families enumerate them.
    Partition,
    /// Explicit `T₁, T₂, U, V, W` and image sets match their equations.
    Explicit,
    /// The four sign-flip maps are well defined, injective and onto.
    Phi,
    /// Values of `T` and the union of the A-sets both equal `R`.
    ASets,
    /// Merged A-set descriptions and the inner rewrite.
    Combined,
    /// Floor-sum identity and lattice count on odd pairs.
    Gauss,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::ClosedVsSieve,
        CheckKind::Remark,
        CheckKind::GapCount,
        CheckKind::LemmaTail,
        CheckKind::Partition,
        CheckKind::Explicit,
        CheckKind::Phi,
        CheckKind::ASets,
        CheckKind::Combined,
        CheckKind::Gauss,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::ClosedVsSieve => "closed_vs_sieve",
            CheckKind::Remark => "remark",
            CheckKind::GapCount => "gap_count",
            CheckKind::LemmaTail => "lemma_tail",
            CheckKind::Partition => "partition",
            CheckKind::Explicit => "explicit",
            CheckKind::Phi => "phi",
            CheckKind::ASets => "a_sets",
            CheckKind::Combined => "combined",
            CheckKind::Gauss => "gauss",
        }
    }

    fn uses_audit(self) -> bool {
        matches!(
            self,
            CheckKind::Partition
                | CheckKind::Explicit
                | CheckKind::Phi
                | CheckKind::ASets
                | CheckKind::Combined
        )
    }

    fn audit_kind(outcome: &str) -> CheckKind {
        match outcome {
            "partition" | "case_families" => CheckKind::Partition,
            "phi_maps" => CheckKind::Phi,
            "t_values_equal_r" | "a_sets_union_equal_r" => CheckKind::ASets,
            "combined_sets" => CheckKind::Combined,
            _ => CheckKind::Explicit,
        }
    }
}

pub fn check_closed_vs_sieve(pair: &CoprimePair) -> Option<String> {
    let closed = closed_form::gap_set(pair);
    let sieve = oracle::gaps_bruteforce(pair);
    if closed != sieve {
        return Some(format!(
            "closed form has {} gaps, sieve has {}",
            closed.len(),
            sieve.len()
        ));
    }
    if closed.max() != pair.frobenius_number() {
        return Some(format!(
            "max gap {:?} != frobenius {:?}",
            closed.max(),
            pair.frobenius_number()
        ));
    }
    None
}

pub fn check_remark(pair: &CoprimePair) -> Option<String> {
    let grid: Vec<i64> = closed_form::grid_terms(pair)
        .iter()
        .map(|t| t.value)
        .collect();
    let mirror: Vec<i64> = closed_form::mirror_terms(pair)
        .iter()
        .map(|t| t.value)
        .collect();
    let grid_set: HashSet<i64> = grid.iter().copied().collect();
    let mirror_set: HashSet<i64> = mirror.iter().copied().collect();
    if grid_set.len() != grid.len() {
        return Some("grid branch repeats a value".into());
    }
    if mirror_set.len() != mirror.len() {
        return Some("mirror branch repeats a value".into());
    }
    if let Some(v) = grid_set.intersection(&mirror_set).next() {
        return Some(format!("{v} appears in both branches"));
    }
    let r = closed_form::representable_set(pair);
    let expected = closed_form::representable_count(pair);
    if r.len() as i64 != expected {
        return Some(format!("|R| = {} but formula gives {expected}", r.len()));
    }
    let gaps = pair.theorem_bound() + 1 - r.len() as i64;
    if gaps != pair.gap_count() {
        return Some(format!(
            "bound + 1 − |R| = {gaps}, expected {}",
            pair.gap_count()
        ));
    }
    None
}

pub fn check_gap_count(pair: &CoprimePair) -> Option<String> {
    let closed = closed_form::gap_set(pair).len() as i64;
    let stats = oracle::gap_statistics(&oracle::gaps_bruteforce(pair));
    if closed != pair.gap_count() || stats.count as i64 != pair.gap_count() {
        return Some(format!(
            "closed {closed}, sieve {}, formula {}",
            stats.count,
            pair.gap_count()
        ));
    }
    None
}

pub fn check_lemma_tail(pair: &CoprimePair) -> Option<String> {
    let start = (pair.a() - 1) * (pair.b() - 1);
    let end = start + pair.a() * pair.b();
    for n in start..end {
        match oracle::is_representable(pair, n) {
            Ok(Some(w)) if w.is_valid_for(pair, n) => {}
            Ok(Some(w)) => return Some(format!("invalid witness {w:?} for {n}")),
            Ok(None) => return Some(format!("{n} has no representation")),
            Err(e) => return Some(e.to_string()),
        }
    }
    None
}

type PairResults = Vec<(CheckKind, Option<String>)>;

/// Runs the selected per-pair checks. Returns `(kind, failure)` for each
/// selected kind, in [`CheckKind::ALL`] order.
pub fn check_pair(pair: &CoprimePair, kinds: &[CheckKind]) -> PairResults {
    let audit = kinds
        .iter()
        .any(|k| k.uses_audit())
        .then(|| proof_machinery::audit(pair));
    CheckKind::ALL
        .iter()
        .filter(|k| kinds.contains(k) && **k != CheckKind::Gauss)
        .map(|&kind| {
            let failure = match kind {
                CheckKind::ClosedVsSieve => check_closed_vs_sieve(pair),
                CheckKind::Remark => check_remark(pair),
                CheckKind::GapCount => check_gap_count(pair),
                CheckKind::LemmaTail => check_lemma_tail(pair),
                _ => audit.as_ref().and_then(|report| {
                    report
                        .failures()
                        .find(|o| CheckKind::audit_kind(o.name) == kind)
                        .map(|o| format!("{}: {}", o.name, o.detail.clone().unwrap_or_default()))
                }),
            };
            (kind, failure)
        })
        .collect()
}

pub fn check_odd_pair(pair: &OddPair) -> Option<String> {
    let id = gauss::gauss_identity(pair);
    let lattice = gauss::lattice_count_check(pair);
    if !id.holds {
        return Some(format!("lhs {} != rhs {}", id.lhs, id.rhs));
    }
    if !lattice.holds {
        return Some(format!("lattice count mismatch: {lattice:?}"));
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub a: i64,
    pub b: i64,
    pub check: CheckKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: CheckKind,
    pub pairs: usize,
    pub failed: usize,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_a: i64,
    pub max_b: i64,
    pub summaries: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_a: i64,
    pub max_b: i64,
    /// Restrict the floor-sum sweep to primes; otherwise every odd coprime
    /// pair is evaluated in experimental mode.
    pub odd_primes_only: bool,
}

/// Coprime pairs with `2 ≤ a ≤ max_a`, `2 ≤ b ≤ max_b`, in lexicographic
/// order.
pub fn coprime_pairs(max_a: i64, max_b: i64) -> Vec<CoprimePair> {
    (2..=max_a)
        .flat_map(|a| (2..=max_b).map(move |b| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1)
        .filter_map(|(a, b)| CoprimePair::new(a, b).ok())
        .collect()
}

/// Distinct odd pairs `3 ≤ p ≤ max_a`, `3 ≤ q ≤ max_b` accepted by the
/// chosen mode.
pub fn odd_pairs(max_a: i64, max_b: i64, primes_only: bool) -> Vec<OddPair> {
    (3..=max_a)
        .flat_map(|p| (3..=max_b).map(move |q| (p, q)))
        .filter_map(|(p, q)| {
            if primes_only {
                OddPair::new(p, q).ok()
            } else {
                OddPair::experimental(p, q).ok()
            }
        })
        .collect()
}

pub fn sweep(opts: SweepOptions, kinds: &[CheckKind]) -> SweepReport {
    let pairs = coprime_pairs(opts.max_a, opts.max_b);
    let per_pair: Vec<(CoprimePair, PairResults)> = pairs
        .par_iter()
        .map(|p| (*p, check_pair(p, kinds)))
        .collect();

    let mut summaries = Vec::new();
    let mut failures = Vec::new();
    for &kind in CheckKind::ALL.iter().filter(|k| kinds.contains(k)) {
        if kind == CheckKind::Gauss {
            let odd = odd_pairs(opts.max_a, opts.max_b, opts.odd_primes_only);
            let results: Vec<(OddPair, Option<String>)> =
                odd.par_iter().map(|p| (*p, check_odd_pair(p))).collect();
            let mut failed = 0;
            for (p, f) in results {
                if let Some(detail) = f {
                    failed += 1;
                    failures.push(Failure {
                        a: p.p(),
                        b: p.q(),
                        check: kind,
                        detail,
                    });
                }
            }
            summaries.push(CheckSummary {
                check: kind,
                pairs: odd.len(),
                failed,
            });
            continue;
        }
        let mut failed = 0;
        for (p, results) in &per_pair {
            for (k, f) in results {
                if *k != kind {
                    continue;
                }
                if let Some(detail) = f {
                    failed += 1;
                    failures.push(Failure {
                        a: p.a(),
                        b: p.b(),
                        check: kind,
                        detail: detail.clone(),
                    });
                }
            }
        }
        summaries.push(CheckSummary {
            check: kind,
            pairs: pairs.len(),
            failed,
        });
    }

    SweepReport {
        max_a: opts.max_a,
        max_b: opts.max_b,
        summaries,
        failures,
    }
}
