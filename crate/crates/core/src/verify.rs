//! Checks that tie the closed forms to the oracle: the identity suite, the
//! formula-versus-oracle grid and the ternary discrepancy report.

use std::collections::BTreeSet;

use crate::counting::{self, Identity, IdentitySides, Scope};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, BigCount};
use crate::oracle::{self, census, count_classes, enumerate_with, Engine, Query};

/// Closed-form answer to `q`.
///
/// Ternary queries have only the composition formulas, which are known to
/// disagree with the true counts; they are returned only with `allow_approx`.
/// Axis filters have no closed form.
pub fn formula_count(q: &Query, allow_approx: bool) -> Result<BigCount> {
    q.validate()?;
    if q.axis_filter.is_some() {
        return Err(Error::NoFormula("axis filters are answered by the oracle only".into()));
    }
    let (n, m) = (q.n as u64, q.min_gap as u64);
    if q.alphabet == 3 {
        let supported = q.require_rotsym && q.min_gap == 1 && q.k.is_none();
        if !supported {
            return Err(Error::NoFormula(
                "the only ternary closed forms are rotation-symmetric, gap 1, all k".into(),
            ));
        }
        if !allow_approx {
            return Err(Error::NoFormula(
                "the ternary composition formulas disagree with exhaustive counts; \
                 pass allow_approx to evaluate them anyway"
                    .into(),
            ));
        }
        return if q.require_reflective {
            counting::ternary_rotsym_refl_formula(n)
        } else {
            counting::ternary_rotsym_formula(n)
        };
    }
    match (q.k.map(|k| k as u64), q.require_rotsym, q.require_reflective) {
        (None, false, false) if m == 0 => counting::lambda_total(n),
        (None, false, true) if m == 0 => {
            (&counting::beta_refl(n)? - &counting::DyadicRational::from(1)).to_count("reflective total")
        }
        (None, false, false) => counting::count_gap_total(n, m),
        (None, false, true) => counting::gap_refl_total(n, m),
        (None, true, false) => counting::count_rotsym_gap(n, m),
        (None, true, true) => counting::count_rotsym_refl_gap(n, m),
        (Some(k), false, false) if m == 0 => counting::gupta_r(n, k),
        (Some(k), false, true) if m == 0 => counting::reflective_r1(n, k),
        (Some(k), false, false) => counting::count_gap_k(n, m, k),
        (Some(k), false, true) => counting::count_gap_refl_k(n, m, k),
        (Some(k), true, false) => counting::count_rotsym_gap_k(n, m, k),
        (Some(k), true, true) => counting::count_rotsym_refl_gap_k(n, m, k),
    }
}

/// One identity over its parameter range.
#[derive(Clone, Debug)]
pub struct IdentityRun {
    pub identity: Identity,
    pub scope: Scope,
    pub checked: usize,
    pub failures: usize,
    /// Up to five failing parameter tuples with their sides.
    pub examples: Vec<(Vec<u64>, IdentitySides)>,
    /// Failures at parameters inside the documented scope.
    pub unexpected: Vec<Vec<u64>>,
}

impl IdentityRun {
    /// No failure inside the scope, and at least one outside it unless the
    /// scope is everything.
    pub fn consistent(&self) -> bool {
        self.unexpected.is_empty() && (self.scope == Scope::Everywhere || self.failures > 0)
    }
}

/// Ranges for [`identity_suite`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteRanges {
    /// Upper `n` for the one-parameter identities.
    pub n_single: u64,
    /// Upper `n` for the `(n, m)` identities.
    pub n_gap: u64,
    pub m_max: u64,
    /// Upper index for the Fibonacci identities.
    pub fib_index: u64,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        Self { n_single: 300, n_gap: 120, m_max: 8, fib_index: 200 }
    }
}

fn parameter_grid(id: Identity, r: SuiteRanges) -> Vec<Vec<u64>> {
    match id.params() {
        ["n"] => (1..=r.n_single).map(|n| vec![n]).collect(),
        ["m", "index"] => (1..=r.m_max)
            .filter(|m| id != Identity::Fib2OddShift || m % 2 == 1)
            .flat_map(|m| (0..=r.fib_index).map(move |i| vec![m, i]))
            .collect(),
        ["n", "m"] => (1..=r.n_gap).flat_map(|n| (1..=r.m_max).map(move |m| vec![n, m])).collect(),
        // lengths 2j + 1 and 2j + 2 share floor((n - 1)/2) = j
        _ => (1..=r.n_single.saturating_sub(1) / 2).map(|j| vec![2 * j + 1, 2 * j + 2]).collect(),
    }
}

pub fn run_identity(id: Identity, ranges: SuiteRanges) -> Result<IdentityRun> {
    let mut run = IdentityRun {
        identity: id,
        scope: id.scope(),
        checked: 0,
        failures: 0,
        examples: Vec::new(),
        unexpected: Vec::new(),
    };
    for params in parameter_grid(id, ranges) {
        let sides = id.sides(&params)?;
        run.checked += 1;
        if sides.holds() {
            continue;
        }
        run.failures += 1;
        if id.scope().expects(&params) {
            run.unexpected.push(params.clone());
        }
        if run.examples.len() < 5 {
            run.examples.push((params, sides));
        }
    }
    Ok(run)
}

pub fn identity_suite(ranges: SuiteRanges) -> Result<Vec<IdentityRun>> {
    Identity::ALL.into_iter().map(|id| run_identity(id, ranges)).collect()
}

/// A grid cell where the two paths disagree or the formula failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridMismatch {
    pub query: Query,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Default)]
pub struct GridReport {
    pub cells: usize,
    pub mismatches: Vec<GridMismatch>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn flag_combinations() -> [(bool, bool); 4] {
    [(false, false), (false, true), (true, false), (true, true)]
}

/// Every binary closed form against one exhaustive census per length, for
/// `n <= n_max`, gaps `0..=gap_max`, every `k` the gap allows, with and
/// without each symmetry requirement.
pub fn binary_grid(n_max: usize, gap_max: usize) -> Result<GridReport> {
    let mut report = GridReport::default();
    for n in 1..=n_max {
        let tally = census(n, 2, gap_max as u32)?;
        for m in 0..=gap_max {
            let k_max = n / (m + 1);
            for k in std::iter::once(None).chain((1..=k_max).map(Some)) {
                for (rotsym, reflective) in flag_combinations() {
                    let q = Query {
                        min_gap: m,
                        k,
                        require_rotsym: rotsym,
                        require_reflective: reflective,
                        ..Query::new(n)
                    };
                    report.cells += 1;
                    let oracle = tally.count(&q)?;
                    match formula_count(&q, false) {
                        Ok(v) if v == BigCount::from(oracle) => {}
                        Ok(v) => report.mismatches.push(GridMismatch {
                            query: q,
                            left: v.to_string(),
                            right: oracle.to_string(),
                        }),
                        Err(e) => report.mismatches.push(GridMismatch {
                            query: q,
                            left: e.to_string(),
                            right: oracle.to_string(),
                        }),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Ternary queries have no trustworthy closed form, so for `n <= n_max` the
/// grid compares the engines instead: the packed census, the periodic-seed
/// engine on rotation-symmetric queries, and the plain-vector naive engine.
pub fn ternary_grid(n_max: usize, gap_max: usize) -> Result<GridReport> {
    let mut report = GridReport::default();
    for n in 1..=n_max {
        let tally = census(n, 3, gap_max as u32)?;
        let all = Query { alphabet: 3, ..Query::new(n) };
        let naive = enumerate_with(&all, Engine::Naive)?;
        for m in 0..=gap_max {
            for (rotsym, reflective) in flag_combinations() {
                let q = Query { min_gap: m, require_rotsym: rotsym, require_reflective: reflective, ..all.clone() };
                report.cells += 1;
                let scanned = tally.count(&q)?;
                let reference = naive.iter().filter(|c| q.matches(c.canonical())).count() as u64;
                let seeded = if rotsym {
                    enumerate_with(&q, Engine::PeriodicSeed)?.len() as u64
                } else {
                    scanned
                };
                if scanned != reference || seeded != reference {
                    report.mismatches.push(GridMismatch {
                        query: q,
                        left: format!("census {scanned}, seeds {seeded}"),
                        right: format!("naive {reference}"),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Exhaustive and formula values for ternary rotation-symmetric words with
/// isolated nonzero symbols at one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryRow {
    pub n: u64,
    pub oracle_rotsym: BigCount,
    pub oracle_rotsym_refl: BigCount,
    pub literal_rotsym: BigCount,
    pub literal_rotsym_refl: BigCount,
    /// `2 N_{n,1} + sum_k N^(k)_{n,1} (N_k - 1)`.
    pub heuristic_rotsym: BigCount,
    /// The same shape with the reflective counts.
    pub heuristic_rotsym_refl: BigCount,
}

fn heuristic(
    n: u64,
    base: fn(u64, u64) -> Result<BigCount>,
    by_k: fn(u64, u64, u64) -> Result<BigCount>,
    inner: fn(u64) -> Result<BigCount>,
) -> Result<BigCount> {
    let mut acc = base(n, 1)? * 2u32;
    for k in (4..=n / 2).filter(|&k| gcd(k, n) > 1) {
        let inner = inner(k)?;
        if inner > BigCount::default() {
            acc += by_k(n, 1, k)? * (inner - 1u32);
        }
    }
    Ok(acc)
}

pub fn ternary_row(n: u64) -> Result<TernaryRow> {
    let q = Query { alphabet: 3, min_gap: 1, require_rotsym: true, ..Query::new(n as usize) };
    let q_refl = Query { require_reflective: true, ..q.clone() };
    Ok(TernaryRow {
        n,
        oracle_rotsym: count_classes(&q)?,
        oracle_rotsym_refl: count_classes(&q_refl)?,
        literal_rotsym: counting::ternary_rotsym_formula(n)?,
        literal_rotsym_refl: counting::ternary_rotsym_refl_formula(n)?,
        heuristic_rotsym: heuristic(n, counting::count_rotsym_gap, counting::count_rotsym_gap_k, counting::count_rotsym)?,
        heuristic_rotsym_refl: heuristic(
            n,
            counting::count_rotsym_refl_gap,
            counting::count_rotsym_refl_gap_k,
            counting::count_rotsym_refl,
        )?,
    })
}

pub fn ternary_report(n_max: u64) -> Result<Vec<TernaryRow>> {
    (2..=n_max).map(ternary_row).collect()
}

/// Lengths at which the literal ternary formulas disagree with the oracle.
pub fn ternary_divergent_lengths(rows: &[TernaryRow]) -> BTreeSet<u64> {
    rows.iter()
        .filter(|r| r.literal_rotsym != r.oracle_rotsym || r.literal_rotsym_refl != r.oracle_rotsym_refl)
        .map(|r| r.n)
        .collect()
}

/// The canonical set the oracle produces for a fixture's query, against the
/// fixture's canonical set. Returns `(missing from fixture, extra in fixture)`.
pub fn fixture_diff(
    fixture: &oracle::Fixture,
    q: &Query,
) -> Result<(Vec<oracle::DihedralClass>, Vec<oracle::DihedralClass>)> {
    let produced: BTreeSet<_> = oracle::enumerate_classes(q)?.into_iter().collect();
    let golden = fixture.classes();
    Ok((
        produced.difference(&golden).cloned().collect(),
        golden.difference(&produced).cloned().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_rules() {
        let q = Query::builder(12).alphabet(3).min_gap(1).rotsym().build().unwrap();
        assert!(matches!(formula_count(&q, false), Err(Error::NoFormula(_))));
        assert_eq!(formula_count(&q, true).unwrap(), BigCount::from(13u32));
        let q = Query::builder(12).axis(oracle::AxisFilter::NoAxis).build().unwrap();
        assert!(matches!(formula_count(&q, true), Err(Error::NoFormula(_))));
        let q = Query::builder(6).reflective().build().unwrap();
        // 13 classes with the zero word, one of them chiral
        assert_eq!(formula_count(&q, false).unwrap(), BigCount::from(11u32));
    }

    #[test]
    fn small_grids_pass() {
        let r = binary_grid(12, 3).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        let r = ternary_grid(7, 2).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn suite_is_consistent_on_small_ranges() {
        let ranges = SuiteRanges { n_single: 40, n_gap: 30, m_max: 4, fib_index: 40 };
        for run in identity_suite(ranges).unwrap() {
            assert!(run.consistent(), "{} {:?}", run.identity, run.unexpected);
        }
    }

    #[test]
    fn ternary_twelve() {
        let row = ternary_row(12).unwrap();
        let v = |x: u32| BigCount::from(x);
        assert_eq!((row.oracle_rotsym.clone(), row.oracle_rotsym_refl.clone()), (v(15), v(14)));
        assert_eq!((row.literal_rotsym.clone(), row.literal_rotsym_refl.clone()), (v(13), v(13)));
        assert_eq!((row.heuristic_rotsym, row.heuristic_rotsym_refl), (v(15), v(15)));
    }
}
