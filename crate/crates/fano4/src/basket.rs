//! The basket of quotient singularities of a general member: intersect the
//! member with every singular toric stratum of the ambient space, attribute
//! points to their exact stabilizer, and read off local transverse
//! residues.
//!
//! Two routes exist. [`compute_basket`] builds explicit equations and works
//! through zero-dimensional chart algebras; it is the authoritative path
//! and the only one used for matrix formats. [`ci_basket_fastpath`] is a
//! purely combinatorial equivalent for general complete intersections that
//! counts stratum points through eventually-periodic Hilbert functions;
//! when its degree-to-weight matching is not forced it falls back to the
//! equation route.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cas::{
    analyze_support_cell, build_equations, CasError, CellOutcome, FormOptions, GroebnerBudget,
};
use crate::formats::{FormatDescriptor, FormatFamily, MonomialTable, WeightSystem};
use crate::orbifold::{Basket, QuotientSingularity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasketError {
    #[error("stratum r={r} meets the member in positive dimension")]
    NotZeroDimensional { r: u64 },
    #[error("general member is singular on stratum r={r}: rank {rank} < codimension {codim}")]
    RankDeficient { r: u64, rank: usize, codim: usize },
    #[error("point on stratum r={r} is not an isolated quotient point (residues {residues:?})")]
    NonIsolated { r: u64, residues: Vec<u64> },
    #[error("cell analysis stayed ambiguous after {attempts} seeds")]
    Ambiguous { attempts: u32 },
    #[error("computation budget exceeded")]
    Budget,
    #[error("invalid family: {0}")]
    Invalid(String),
}

impl BasketError {
    fn from_cas(e: CasError, r: u64) -> Self {
        match e {
            CasError::NotZeroDimensional { .. } | CasError::QuotientTooLarge { .. } => {
                BasketError::NotZeroDimensional { r }
            }
            CasError::RankDeficient { rank, codim, .. } => {
                BasketError::RankDeficient { r, rank, codim }
            }
            CasError::NonIsolatedPoint { residues, .. } => {
                BasketError::NonIsolated { r, residues }
            }
            CasError::BudgetExceeded { .. } => BasketError::Budget,
            CasError::AmbiguousCell { .. } => BasketError::Ambiguous { attempts: 1 },
            CasError::InvalidFamily(s) => BasketError::Invalid(s),
        }
    }
}

/// One singular toric stratum: the locus where only coordinates with
/// weight divisible by r survive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub r: u64,
    pub vars: Vec<usize>,
    pub weights: Vec<u64>,
}

/// One stratum for every integer r >= 2 dividing at least one weight.
pub fn enumerate_strata(ambient: &WeightSystem) -> Vec<Stratum> {
    let mut divisors: Vec<u64> = Vec::new();
    for &w in ambient.weights() {
        let mut d = 1;
        while d * d <= w {
            if w % d == 0 {
                if d >= 2 {
                    divisors.push(d);
                }
                if w / d >= 2 {
                    divisors.push(w / d);
                }
            }
            d += 1;
        }
    }
    divisors.sort_unstable();
    divisors.dedup();
    divisors
        .into_iter()
        .map(|r| {
            let vars: Vec<usize> = ambient
                .weights()
                .iter()
                .enumerate()
                .filter(|(_, &w)| w % r == 0)
                .map(|(i, _)| i)
                .collect();
            let weights = vars.iter().map(|&i| ambient.weights()[i]).collect();
            Stratum { r, vars, weights }
        })
        .collect()
}

/// Wellformedness of the ambient space: omitting any weight leaves gcd 1.
pub fn wellformed_ambient(ambient: &WeightSystem) -> bool {
    ambient.is_wellformed()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDetail {
    pub r: u64,
    pub points: u64,
    /// Projective dimension of the intersection with the stratum: -1 when
    /// empty, 0 when finite.
    pub dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasketReport {
    pub basket: Basket,
    pub strata: Vec<StratumDetail>,
    pub wellformed: bool,
    pub all_isolated: bool,
    pub all_terminal: bool,
    /// Some cell algebra was non-reduced: a point was counted with
    /// multiplicity above one.
    pub multiplicity_warning: bool,
}

impl BasketReport {
    fn assemble(
        ambient: &WeightSystem,
        outcomes: &[CellOutcome],
        strata: &[Stratum],
    ) -> BasketReport {
        let mut basket = Basket::new();
        let mut warn = false;
        for cell in outcomes {
            basket.add(
                QuotientSingularity::new(cell.stabilizer, cell.transverse_residues),
                cell.count,
            );
            warn |= !cell.reduced;
        }
        let details = strata
            .iter()
            .map(|s| {
                let points: u64 = outcomes
                    .iter()
                    .filter(|c| c.stabilizer == s.r)
                    .map(|c| c.count)
                    .sum();
                StratumDetail {
                    r: s.r,
                    points,
                    dimension: if points > 0 { 0 } else { -1 },
                }
            })
            .collect();
        let all_isolated = basket.all_isolated();
        let all_terminal = basket.all_terminal().unwrap_or(false);
        BasketReport {
            basket,
            strata: details,
            wellformed: wellformed_ambient(ambient) && all_isolated,
            all_isolated,
            all_terminal,
            multiplicity_warning: warn,
        }
    }
}

/// Settings shared by the basket and quasismoothness engines.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub seed: u64,
    pub prime: u64,
    pub budget: GroebnerBudget,
    pub form_options: FormOptions,
    pub quotient_cap: usize,
    pub retries: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            seed: 42,
            prime: 32003,
            budget: GroebnerBudget::default(),
            form_options: FormOptions::default(),
            quotient_cap: 4096,
            retries: 3,
        }
    }
}

/// Authoritative basket computation through explicit equations: every
/// support cell with a stabilizer is solved in its chart algebra.
pub fn compute_basket(
    family: &FormatFamily,
    config: &EngineConfig,
) -> Result<BasketReport, BasketError> {
    let mut last = None;
    for attempt in 0..config.retries.max(1) {
        let seed = config
            .seed
            .wrapping_add((attempt as u64).wrapping_mul(0x9e3779b97f4a7c15));
        match compute_basket_once(family, seed, config) {
            Err(BasketError::Ambiguous { .. }) => {
                last = Some(BasketError::Ambiguous {
                    attempts: attempt + 1,
                });
            }
            other => return other,
        }
    }
    Err(last.unwrap_or(BasketError::Ambiguous { attempts: 0 }))
}

fn compute_basket_once(
    family: &FormatFamily,
    seed: u64,
    config: &EngineConfig,
) -> Result<BasketReport, BasketError> {
    let sys = build_equations(family, seed, config.prime, &config.form_options)
        .map_err(|e| BasketError::Invalid(e.to_string()))?;
    let supports = crate::cas::stratum_supports(sys.ring.weights.as_slice());
    let strata = enumerate_strata(&family.ambient);
    let mut outcomes = Vec::new();
    for (support, g) in &supports {
        match analyze_support_cell(&sys, support, *g, &config.budget, config.quotient_cap) {
            Ok(Some(cell)) => outcomes.push(cell),
            Ok(None) => {}
            Err(e) => return Err(BasketError::from_cas(e, *g)),
        }
    }
    outcomes.sort_by(|a, b| (a.stabilizer, &a.support).cmp(&(b.stabilizer, &b.support)));
    Ok(BasketReport::assemble(&family.ambient, &outcomes, &strata))
}

/// Cache for the eventually-periodic Hilbert function evaluations used by
/// the fastpath; shared across families during a census run.
#[derive(Default)]
pub struct FastpathCache {
    hf: HashMap<(Vec<u64>, Vec<u64>, u64), u64>,
}

/// Hilbert function of k[y (weights u)] / (general forms of the given
/// degrees) at degree n, computed by exact series expansion.
fn hilbert_function_at(
    weights: &[u64],
    degrees: &[u64],
    n: u64,
    cache: &mut FastpathCache,
) -> u64 {
    if weights.is_empty() {
        return 0;
    }
    let key = (weights.to_vec(), degrees.to_vec(), n);
    if let Some(&v) = cache.hf.get(&key) {
        return v;
    }
    let n = n as usize;
    let mut coeffs: Vec<i64> = vec![0; n + 1];
    coeffs[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d <= n {
            for k in (d..=n).rev() {
                coeffs[k] -= coeffs[k - d];
            }
        }
    }
    for &u in weights {
        let u = u as usize;
        for k in u..=n {
            coeffs[k] += coeffs[k - u];
        }
    }
    let v = coeffs[n].max(0) as u64;
    cache.hf.insert(key, v);
    v
}

/// Combinatorial basket for general complete intersections.
///
/// Falls back to [`compute_basket`] when the Jacobian matching on some
/// populated support is not forced or the stratum series is unreliable.
pub fn ci_basket_fastpath(
    family: &FormatFamily,
    config: &EngineConfig,
    cache: &mut FastpathCache,
) -> Result<BasketReport, BasketError> {
    match ci_basket_combinatorial(family, cache) {
        Ok(report) => Ok(report),
        Err(FastpathOutcome::Reject(e)) => Err(e),
        Err(FastpathOutcome::Fallback(_reason)) => compute_basket(family, config),
    }
}

/// As [`ci_basket_fastpath`], but without the equation fallback: `None`
/// when the combinatorial route declines to answer (used by the
/// cross-validation suite).
pub fn ci_basket_combinatorial_only(
    family: &FormatFamily,
    cache: &mut FastpathCache,
) -> Option<Result<BasketReport, BasketError>> {
    match ci_basket_combinatorial(family, cache) {
        Ok(report) => Some(Ok(report)),
        Err(FastpathOutcome::Reject(e)) => Some(Err(e)),
        Err(FastpathOutcome::Fallback(_)) => None,
    }
}

enum FastpathOutcome {
    Reject(BasketError),
    Fallback(String),
}

fn ci_basket_combinatorial(
    family: &FormatFamily,
    cache: &mut FastpathCache,
) -> Result<BasketReport, FastpathOutcome> {
    let FormatDescriptor::Ci { degrees } = &family.descriptor else {
        return Err(FastpathOutcome::Fallback(
            "not a complete intersection".into(),
        ));
    };
    let weights = family.ambient.weights();
    let c = degrees.len();
    let strata = enumerate_strata(&family.ambient);
    let max_weight = *weights.iter().max().unwrap();
    let q_prime = crate::cas::field::next_prime(max_weight);

    let mut outcomes: Vec<CellOutcome> = Vec::new();

    for stratum in &strata {
        let r = stratum.r;
        let s = stratum.vars.len();
        let mut populated: Vec<(Vec<usize>, u64)> = Vec::new();
        for mask in 1u32..(1 << s) {
            let t_vars: Vec<usize> = (0..s)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| stratum.vars[b])
                .collect();
            let t_weights: Vec<u64> = t_vars.iter().map(|&i| weights[i]).collect();
            let g = t_weights.iter().fold(0u64, |a, &w| a.gcd(&w));
            if g != r {
                continue; // belongs to a deeper stratum
            }
            let max_d = *degrees.iter().max().unwrap();
            let table = MonomialTable::new(&t_weights, max_d);
            let restricting: Vec<u64> =
                degrees.iter().copied().filter(|&d| table.has(d)).collect();
            let single_mono = restricting
                .iter()
                .any(|&d| crate::cas::equations::count_monomials(&t_weights, d) == 1);
            if single_mono && t_vars.len() > 1 {
                // a monomial equation kills the open cell; the series model
                // below would miss that, so decide through equations
                return Err(FastpathOutcome::Fallback(format!(
                    "monomial equation on stratum r={r}"
                )));
            }
            let torus_dim = t_vars.len() as i64 - restricting.len() as i64;
            if torus_dim >= 2 {
                return Err(FastpathOutcome::Reject(BasketError::NotZeroDimensional {
                    r,
                }));
            }
            if torus_dim <= 0 {
                continue; // cell generically empty
            }
            let count = exact_support_count(weights, degrees, &t_vars, r, q_prime, cache)
                .map_err(FastpathOutcome::Fallback)?;
            if count > 0 {
                populated.push((t_vars, count));
            }
        }
        if populated.is_empty() {
            continue;
        }
        // forced residue attribution: the zero class must be consumed by
        // exactly the stratum dimension, every other class needs enough
        // variable columns
        let zero_class_eqs = degrees.iter().filter(|&&d| d % r == 0).count();
        if zero_class_eqs != s - 1 {
            return Err(FastpathOutcome::Reject(BasketError::RankDeficient {
                r,
                rank: 0,
                codim: c,
            }));
        }
        for rho in 1..r {
            let eqs = degrees.iter().filter(|&&d| d % r == rho).count();
            let cols = weights.iter().filter(|&&w| w % r == rho).count();
            if eqs > cols {
                return Err(FastpathOutcome::Reject(BasketError::RankDeficient {
                    r,
                    rank: 0,
                    codim: c,
                }));
            }
        }
        let mut residues: Vec<u64> = weights.iter().map(|&w| w % r).collect();
        remove_one(&mut residues, 0).expect("stratum has a zero residue");
        for &d in degrees.iter() {
            if remove_one(&mut residues, d % r).is_none() {
                return Err(FastpathOutcome::Reject(BasketError::RankDeficient {
                    r,
                    rank: 0,
                    codim: c,
                }));
            }
        }
        if residues.len() != 4 || residues.iter().any(|&x| x == 0) {
            return Err(FastpathOutcome::Reject(BasketError::NonIsolated {
                r,
                residues,
            }));
        }
        let transverse = [residues[0], residues[1], residues[2], residues[3]];
        for (t_vars, count) in populated {
            if !matching_exists(weights, degrees, &t_vars, r) {
                return Err(FastpathOutcome::Fallback(format!(
                    "degree-to-weight matching not forced on stratum r={r}"
                )));
            }
            let mut consumed: Vec<u64> = degrees.iter().map(|&d| d % r).collect();
            consumed.sort_unstable();
            outcomes.push(CellOutcome {
                support: t_vars.clone(),
                stabilizer: r,
                chart_var: t_vars[0],
                slice_dim: count as usize,
                count,
                reduced: true,
                consumed_residues: consumed,
                transverse_residues: transverse,
            });
        }
    }
    outcomes.sort_by(|a, b| (a.stabilizer, &a.support).cmp(&(b.stabilizer, &b.support)));
    Ok(BasketReport::assemble(&family.ambient, &outcomes, &strata))
}

fn remove_one(values: &mut Vec<u64>, v: u64) -> Option<()> {
    let pos = values.iter().position(|&x| x == v)?;
    values.remove(pos);
    Some(())
}

/// Points with support exactly `t_vars` (counted with multiplicity),
/// extracted from eventually-periodic Hilbert functions at degrees that
/// isolate the stabilizer r.
fn exact_support_count(
    weights: &[u64],
    degrees: &[u64],
    t_vars: &[usize],
    r: u64,
    q_prime: u64,
    cache: &mut FastpathCache,
) -> Result<u64, String> {
    let k = t_vars.len();
    let mut total: i64 = 0;
    for mask in 1u32..(1 << k) {
        let sub: Vec<usize> = (0..k)
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| t_vars[b])
            .collect();
        let sign = if (k - sub.len()) % 2 == 0 { 1i64 } else { -1 };
        let sub_weights: Vec<u64> = sub.iter().map(|&i| weights[i]).collect();
        let max_d = *degrees.iter().max().unwrap();
        let table = MonomialTable::new(&sub_weights, max_d);
        let restricting: Vec<u64> = degrees.iter().copied().filter(|&d| table.has(d)).collect();
        // evaluation point: a multiple of r * q_prime past the transient
        // regime; q_prime exceeds every possible stabilizer, so only
        // stabilizer-r points survive the divisibility filter
        let transient: u64 =
            restricting.iter().sum::<u64>() + sub_weights.iter().sum::<u64>() + 1;
        let step = r * q_prime;
        let m = transient / step + 1;
        let n1 = step * m;
        let n2 = step * (m + 1);
        let v1 = hilbert_function_at(&sub_weights, &restricting, n1, cache);
        let v2 = hilbert_function_at(&sub_weights, &restricting, n2, cache);
        if v1 != v2 {
            return Err(format!("Hilbert function not periodic on support {:?}", sub));
        }
        total += sign * v1 as i64;
    }
    if total < 0 {
        return Err("negative exact-support count".into());
    }
    Ok(total as u64)
}

/// A system of distinct representatives: every equation matched to its own
/// variable column with a structurally nonzero Jacobian entry on the
/// support (d_j - w_i representable in the supported weights), for some
/// chart variable inside the support.
fn matching_exists(weights: &[u64], degrees: &[u64], support: &[usize], r: u64) -> bool {
    let t_weights: Vec<u64> = support.iter().map(|&i| weights[i]).collect();
    let max_d = *degrees.iter().max().unwrap();
    let table = MonomialTable::new(&t_weights, max_d);
    'charts: for &chart in support {
        let cols: Vec<usize> = (0..weights.len()).filter(|&i| i != chart).collect();
        let edge = |j: usize, i: usize| -> bool {
            let d = degrees[j];
            let w = weights[i];
            d >= w && (d - w) % r == 0 && table.has(d - w)
        };
        let mut match_of_col: Vec<Option<usize>> = vec![None; cols.len()];
        for j in 0..degrees.len() {
            let mut seen = vec![false; cols.len()];
            if !augment(j, &cols, &edge, &mut match_of_col, &mut seen) {
                continue 'charts;
            }
        }
        return true;
    }
    false
}

fn augment(
    j: usize,
    cols: &[usize],
    edge: &dyn Fn(usize, usize) -> bool,
    match_of_col: &mut Vec<Option<usize>>,
    seen: &mut Vec<bool>,
) -> bool {
    for (ci, &col) in cols.iter().enumerate() {
        if seen[ci] || !edge(j, col) {
            continue;
        }
        seen[ci] = true;
        if match_of_col[ci].is_none()
            || augment(match_of_col[ci].unwrap(), cols, edge, match_of_col, seen)
        {
            match_of_col[ci] = Some(j);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> FormatFamily {
        s.parse().unwrap()
    }

    fn q(r: u64, a: [u64; 4]) -> QuotientSingularity {
        QuotientSingularity::new(r, a)
    }

    #[test]
    fn strata_of_the_w77_space() {
        let ws = WeightSystem::new(vec![5, 5, 7, 8, 9, 12, 31]);
        let strata = enumerate_strata(&ws);
        let rs: Vec<u64> = strata.iter().map(|s| s.r).collect();
        assert_eq!(rs, vec![2, 3, 4, 5, 6, 7, 8, 9, 12, 31]);
        let s5 = strata.iter().find(|s| s.r == 5).unwrap();
        assert_eq!(s5.vars, vec![0, 1]);
        let s3 = strata.iter().find(|s| s.r == 3).unwrap();
        assert_eq!(s3.weights, vec![9, 12]);
        let s31 = strata.iter().find(|s| s.r == 31).unwrap();
        assert_eq!(s31.vars, vec![6]);
    }

    #[test]
    fn no_strata_over_unit_weights() {
        assert!(enumerate_strata(&WeightSystem::new(vec![1; 9])).is_empty());
    }

    #[test]
    fn strata_of_the_segre_ambient() {
        let ws = WeightSystem::new(vec![2, 3, 3, 3, 4, 5, 5, 7, 11]);
        let strata = enumerate_strata(&ws);
        let s3 = strata.iter().find(|s| s.r == 3).unwrap();
        assert_eq!(s3.vars.len(), 3);
    }

    #[test]
    fn wellformed_examples() {
        assert!(wellformed_ambient(&WeightSystem::new(vec![1, 1, 2, 3])));
        assert!(!wellformed_ambient(&WeightSystem::new(vec![2, 2, 2, 3])));
        assert!(wellformed_ambient(&WeightSystem::new(vec![
            5, 5, 7, 8, 9, 12, 31
        ])));
    }

    #[test]
    fn fastpath_basket_of_x36_40() {
        let family = fam("CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]");
        let mut cache = FastpathCache::default();
        let report = ci_basket_fastpath(&family, &EngineConfig::default(), &mut cache).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 1),
            (q(5, [2, 2, 3, 4]), 8),
            (q(7, [2, 3, 5, 5]), 1),
            (q(31, [5, 7, 8, 12]), 1),
        ]);
        assert_eq!(report.basket, expected);
        assert!(report.wellformed && report.all_isolated && report.all_terminal);
        assert!(!report.multiplicity_warning);
    }

    #[test]
    fn fastpath_basket_of_x16_18_20() {
        let family = fam("CI c=3 d=[16,18,20] w=[4,5,5,6,7,8,9,11]");
        let mut cache = FastpathCache::default();
        let report = ci_basket_fastpath(&family, &EngineConfig::default(), &mut cache).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 1),
            (q(5, [1, 2, 4, 4]), 4),
            (q(7, [1, 4, 5, 5]), 1),
            (q(11, [4, 5, 6, 8]), 1),
        ]);
        assert_eq!(report.basket, expected);
        assert!(report.all_terminal);
    }

    #[test]
    fn cas_basket_matches_fastpath_on_x36_40() {
        let family = fam("CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]");
        let config = EngineConfig::default();
        let mut cache = FastpathCache::default();
        let fast = ci_basket_fastpath(&family, &config, &mut cache).unwrap();
        let cas = compute_basket(&family, &config).unwrap();
        assert_eq!(fast.basket, cas.basket);
        assert_eq!(fast.strata, cas.strata);
    }

    #[test]
    fn cas_basket_of_the_w43_segre_family() {
        let family = fam("P2P2 a=[0,2,7] b=[3,4,5] w=[2,3,3,3,4,5,5,7,11]");
        let report = compute_basket(&family, &EngineConfig::default()).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 14),
            (q(5, [2, 3, 3, 3]), 1),
            (q(7, [2, 3, 5, 5]), 1),
            (q(11, [2, 3, 3, 4]), 1),
        ]);
        assert_eq!(report.basket, expected);
        assert!(report.all_terminal);
    }

    #[test]
    fn cas_basket_of_the_w72_gr_family() {
        let family = fam("GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]");
        let report = compute_basket(&family, &EngineConfig::default()).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 3),
            (q(5, [1, 3, 3, 4]), 1),
            (q(7, [2, 2, 5, 6]), 1),
            (q(11, [2, 5, 7, 9]), 1),
            (q(27, [2, 7, 8, 11]), 1),
        ]);
        assert_eq!(report.basket, expected);
    }

    #[test]
    fn cas_baskets_of_the_w46_and_w47_families() {
        let gr = fam("GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]");
        let report = compute_basket(&gr, &EngineConfig::default()).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 1),
            (q(7, [3, 4, 4, 4]), 1),
            (q(11, [1, 1, 3, 7]), 3),
        ]);
        assert_eq!(report.basket, expected);

        let segre = fam("P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]");
        let report = compute_basket(&segre, &EngineConfig::default()).unwrap();
        let expected = Basket::from_entries([
            (q(3, [1, 2, 2, 2]), 1),
            (q(7, [3, 4, 4, 4]), 1),
            (q(11, [1, 1, 3, 7]), 2),
        ]);
        assert_eq!(report.basket, expected);
        assert!(report.basket.has_k2_point());
    }

    #[test]
    fn empty_basket_of_the_smooth_intersection() {
        let family = fam("CI c=4 d=[2,2,2,2] w=[1,1,1,1,1,1,1,1,1]");
        let mut cache = FastpathCache::default();
        let report = ci_basket_fastpath(&family, &EngineConfig::default(), &mut cache).unwrap();
        assert!(report.basket.is_empty());
        assert!(report.all_terminal && report.wellformed);
    }

    #[test]
    fn positive_dimensional_stratum_rejected() {
        // two weight-2 variables, no even equation degree restricts
        let family = fam("CI c=2 d=[3,5] w=[1,1,1,1,1,2,2]");
        let mut cache = FastpathCache::default();
        let err = ci_basket_fastpath(&family, &EngineConfig::default(), &mut cache).unwrap_err();
        assert_eq!(err, BasketError::NotZeroDimensional { r: 2 });
    }
}
