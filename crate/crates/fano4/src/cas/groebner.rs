//! Buchberger's algorithm with normal pair selection, the product and chain
//! criteria, and a hard budget on pair reductions.

use std::collections::BinaryHeap;
use std::time::Instant;

use super::poly::{Monomial, PolyRing, SparsePoly};
use super::CasError;

#[derive(Debug, Clone, Copy)]
pub struct GroebnerBudget {
    pub max_pair_reductions: u64,
    pub max_seconds: Option<f64>,
    /// Optional cap on the weighted degree of pairs processed. Sound for
    /// truncated computations on homogeneous ideals: everything produced is
    /// in the ideal, and all S-pairs up to the cap are treated.
    pub max_degree: Option<u64>,
    /// Stop as soon as every variable has a pure power among the leading
    /// monomials. Every element produced lies in the ideal, so this
    /// certifies zero-dimensionality of the cone without a complete basis.
    pub stop_when_zero_dimensional: bool,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_pair_reductions: 1_000_000,
            max_seconds: None,
            max_degree: None,
            stop_when_zero_dimensional: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub gens: Vec<SparsePoly>,
    pub pair_reductions: u64,
    /// Set when a degree cap was hit: the basis is only complete below the
    /// cap.
    pub truncated_at: Option<u64>,
    /// The zero-dimensional early exit fired: the gens are a generating set
    /// whose leading monomials include a pure power of every variable, but
    /// not necessarily a complete basis.
    pub early_zero_dim: bool,
}

fn covers_all_variables(basis: &[SparsePoly], nvars: usize) -> bool {
    let mut covered = vec![false; nvars];
    for g in basis {
        if let Some(m) = g.leading_monomial() {
            let mut support = m.exps.iter().enumerate().filter(|(_, &e)| e > 0);
            if let Some((v, _)) = support.next() {
                if support.next().is_none() {
                    covered[v] = true;
                }
            }
        }
    }
    covered.iter().all(|&c| c)
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.gens
            .iter()
            .filter_map(|g| g.leading_monomial())
            .collect()
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|g| {
            g.leading_monomial()
                .map(|m| m.is_one())
                .unwrap_or(false)
        })
    }
}

/// Full normal form of `f` modulo `basis`: every term is reduced.
pub fn normal_form(f: &SparsePoly, basis: &[SparsePoly], ring: &PolyRing) -> SparsePoly {
    let mut work = f.clone();
    let mut out: Vec<(Monomial, u64)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading().cloned() {
        for g in basis {
            let Some((gm, gc)) = g.leading() else { continue };
            if gm.divides(&lm) {
                let shift = lm.div(gm);
                let c = ring.field.div(lc, *gc);
                work = work.sub_scaled_shift(g, c, &shift, ring);
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the output
        out.push((lm, lc));
        work.terms.remove(0);
    }
    SparsePoly { terms: out }
}

#[derive(PartialEq, Eq)]
struct PairKey {
    wdeg: u64,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; we want the smallest degree first
        other
            .wdeg
            .cmp(&self.wdeg)
            .then_with(|| other.lcm.cmp(&self.lcm))
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Computes a reduced Groebner basis. Deterministic given the input order.
pub fn groebner(
    generators: &[SparsePoly],
    ring: &PolyRing,
    budget: &GroebnerBudget,
) -> Result<GroebnerBasis, CasError> {
    let start = Instant::now();
    let unit_basis = |reductions: u64| GroebnerBasis {
        gens: vec![SparsePoly::constant(ring, 1)],
        pair_reductions: reductions,
        truncated_at: None,
        early_zero_dim: true,
    };
    let mut basis: Vec<SparsePoly> = Vec::new();
    for g in generators {
        let g = normal_form(g, &basis, ring);
        if !g.is_zero() {
            if g.leading_monomial().map(|m| m.is_one()).unwrap_or(false) {
                return Ok(unit_basis(0));
            }
            basis.push(g.monic(ring));
        }
    }
    let mut pairs: BinaryHeap<PairKey> = BinaryHeap::new();
    let push_pairs = |basis: &[SparsePoly], pairs: &mut BinaryHeap<PairKey>, j: usize| {
        let Some(lmj) = basis[j].leading_monomial() else {
            return;
        };
        for i in 0..j {
            let Some(lmi) = basis[i].leading_monomial() else {
                continue;
            };
            if lmi.coprime(lmj) {
                continue; // product criterion
            }
            let lcm = lmi.lcm(lmj);
            pairs.push(PairKey {
                wdeg: lcm.weighted_degree(&ring.weights),
                lcm,
                i,
                j,
            });
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pairs, j);
    }

    let mut reductions: u64 = 0;
    let mut truncated_at = None;
    let mut early_zero_dim = false;
    if budget.stop_when_zero_dimensional && covers_all_variables(&basis, ring.nvars()) {
        early_zero_dim = true;
    }
    while !early_zero_dim {
        let Some(pair) = pairs.pop() else { break };
        if let Some(cap) = budget.max_degree {
            if pair.wdeg > cap {
                truncated_at = Some(cap);
                break;
            }
        }
        if reductions >= budget.max_pair_reductions {
            return Err(CasError::BudgetExceeded {
                pair_reductions: reductions,
            });
        }
        if let Some(max_s) = budget.max_seconds {
            if reductions % 64 == 0 && start.elapsed().as_secs_f64() > max_s {
                return Err(CasError::BudgetExceeded {
                    pair_reductions: reductions,
                });
            }
        }
        let (lmi, lmj) = (
            basis[pair.i].leading_monomial().unwrap().clone(),
            basis[pair.j].leading_monomial().unwrap().clone(),
        );
        // stale pair (a generator was replaced during inter-reduction)
        if lmi.lcm(&lmj) != pair.lcm {
            continue;
        }
        // chain criterion: some other leading monomial strictly divides the
        // lcm and splits the pair into two with smaller lcms
        let chained = basis.iter().enumerate().any(|(k, g)| {
            if k == pair.i || k == pair.j {
                return false;
            }
            match g.leading_monomial() {
                Some(lmk) => {
                    lmk.divides(&pair.lcm)
                        && lmk.lcm(&lmi) != pair.lcm
                        && lmk.lcm(&lmj) != pair.lcm
                }
                None => false,
            }
        });
        if chained {
            continue;
        }
        // S-polynomial
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let ci = fi.leading().unwrap().1;
        let cj = fj.leading().unwrap().1;
        let mi = pair.lcm.div(&lmi);
        let mj = pair.lcm.div(&lmj);
        let mut s = SparsePoly::zero();
        // s = (1/ci) * mi * fi - (1/cj) * mj * fj
        s = s.sub_scaled_shift(fi, ring.field.neg(ring.field.inv(ci)), &mi, ring);
        s = s.sub_scaled_shift(fj, ring.field.inv(cj), &mj, ring);
        reductions += 1;
        let r = normal_form(&s, &basis, ring);
        if !r.is_zero() {
            if r.leading_monomial().map(|m| m.is_one()).unwrap_or(false) {
                return Ok(unit_basis(reductions));
            }
            basis.push(r.monic(ring));
            push_pairs(&basis, &mut pairs, basis.len() - 1);
            if budget.stop_when_zero_dimensional && covers_all_variables(&basis, ring.nvars()) {
                early_zero_dim = true;
            }
        }
    }

    // inter-reduce to the unique reduced basis (within the truncation)
    let mut reduced: Vec<SparsePoly> = Vec::new();
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        let lmi = basis[i].leading_monomial().unwrap();
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let lmj = basis[j].leading_monomial().unwrap();
                if lmj.divides(lmi) && (lmj != lmi || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let survivors: Vec<SparsePoly> = basis
        .into_iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(g, _)| g)
        .collect();
    for i in 0..survivors.len() {
        let others: Vec<SparsePoly> = survivors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = normal_form(&survivors[i], &others, ring);
        if !g.is_zero() {
            reduced.push(g.monic(ring));
        }
    }
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    Ok(GroebnerBasis {
        gens: reduced,
        pair_reductions: reductions,
        truncated_at,
        early_zero_dim,
    })
}

/// Krull dimension of the affine cone cut out by the basis: the maximum
/// size of a variable subset meeting the support of no leading monomial.
/// Returns -1 for the unit ideal.
pub fn ideal_dimension(gb: &GroebnerBasis, ring: &PolyRing) -> i64 {
    if gb.contains_one() {
        return -1;
    }
    let n = ring.nvars();
    let supports: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| {
            m.exps
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &e)| if e > 0 { acc | 1 << i } else { acc })
        })
        .collect();
    // a subset is independent iff no leading-monomial support lies inside it
    let mut best = 0usize;
    for subset in 0u32..(1 << n) {
        let size = subset.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cas::field::PrimeField;
    use crate::cas::poly::parse_poly;

    fn ring(names: &[&str], weights: &[u64]) -> PolyRing {
        PolyRing::new(
            PrimeField::new(32003),
            weights.to_vec(),
            names.iter().map(|s| s.to_string()).collect(),
        )
    }

    #[test]
    fn already_a_basis() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gens = vec![
            parse_poly(&r, "x^2").unwrap(),
            parse_poly(&r, "x*y").unwrap(),
        ];
        let gb = groebner(&gens, &r, &GroebnerBudget::default()).unwrap();
        let lms: Vec<String> = gb
            .gens
            .iter()
            .map(|g| g.display(&r).to_string())
            .collect();
        // reduced basis sorted by leading monomial ascending
        assert_eq!(lms, vec!["x*y", "x^2"]);
    }

    #[test]
    fn linear_elimination() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gens = vec![
            parse_poly(&r, "x - y").unwrap(),
            parse_poly(&r, "x + y").unwrap(),
        ];
        let gb = groebner(&gens, &r, &GroebnerBudget::default()).unwrap();
        let printed: Vec<String> = gb
            .gens
            .iter()
            .map(|g| g.display(&r).to_string())
            .collect();
        assert_eq!(printed, vec!["y", "x"]);
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y", "z"], &[1, 1, 1]);
        let gens = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()];
        let gb = groebner(&gens, &r, &GroebnerBudget::default()).unwrap();
        assert_eq!(ideal_dimension(&gb, &r), 1);

        let unit = groebner(&[parse_poly(&r, "5").unwrap()], &r, &GroebnerBudget::default())
            .unwrap();
        assert_eq!(ideal_dimension(&unit, &r), -1);
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(&["x", "y", "z"], &[1, 1, 1]);
        let gens = vec![
            parse_poly(&r, "x^4 + x*y*z^2 + y^3*z").unwrap(),
            parse_poly(&r, "y^4 + x^2*y*z + x*z^3").unwrap(),
            parse_poly(&r, "z^4 + x^3*y + y^2*z^2").unwrap(),
        ];
        let budget = GroebnerBudget {
            max_pair_reductions: 1,
            ..Default::default()
        };
        assert!(matches!(
            groebner(&gens, &r, &budget),
            Err(CasError::BudgetExceeded { .. })
        ));
    }
}
