//! Analysis of the intersection of a family member with one support cell
//! of a singular stratum: the locus where a fixed set of coordinates (all
//! sharing a common weight factor) is nonzero and every other coordinate
//! vanishes.
//!
//! Points are never solved for individually: the cell is handled through
//! the zero-dimensional chart quotient ring, localized to exact support,
//! and Jacobian data is read off through linear algebra over that algebra.

use super::equations::EquationSystem;
use super::groebner::{groebner, GroebnerBasis, GroebnerBudget};
use super::poly::{PolyRing, SparsePoly};
use super::quotient::{CellAlgebra, QuotientRing};
use super::CasError;

/// Everything the basket engine needs to know about one support cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellOutcome {
    /// Ambient variable indices that are nonzero on the cell.
    pub support: Vec<usize>,
    /// Exact stabilizer order: the gcd of the supported weights.
    pub stabilizer: u64,
    pub chart_var: usize,
    /// Dimension of the localized chart algebra (slice count).
    pub slice_dim: usize,
    /// Number of geometric points with this exact support.
    pub count: u64,
    /// False when the localized algebra is non-reduced (points counted
    /// with multiplicity above one).
    pub reduced: bool,
    /// Residues mod the stabilizer consumed by the Jacobian pivots, sorted.
    pub consumed_residues: Vec<u64>,
    /// The four transverse residues defining the quotient singularity.
    pub transverse_residues: [u64; 4],
}

/// Restriction of the system to the chart `support`, with `chart_var`
/// set to 1: polynomials in the remaining supported variables.
fn restrict_to_chart(
    sys: &EquationSystem,
    support: &[usize],
    chart_var: usize,
) -> (PolyRing, Vec<usize>, Vec<SparsePoly>) {
    let n = sys.ring.nvars();
    let mut zero_vars = vec![true; n];
    for &i in support {
        zero_vars[i] = false;
    }
    let chart_vars: Vec<usize> = support.iter().copied().filter(|&i| i != chart_var).collect();
    let chart_ring = PolyRing::new(
        sys.ring.field,
        chart_vars.iter().map(|&i| sys.ring.weights[i]).collect(),
        chart_vars.iter().map(|&i| sys.ring.names[i].clone()).collect(),
    );
    let mut positions = vec![usize::MAX; n];
    for (k, &i) in chart_vars.iter().enumerate() {
        positions[i] = k;
    }
    let project = |p: &SparsePoly| -> SparsePoly {
        let restricted = p.substitute_zero_one(&zero_vars, Some(chart_var), &sys.ring);
        let terms = restricted
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; chart_vars.len()];
                for (i, &e) in m.exps.iter().enumerate() {
                    if e > 0 {
                        exps[positions[i]] = e;
                    }
                }
                (super::poly::Monomial::from_exps(exps), *c)
            })
            .collect();
        SparsePoly::from_terms(&chart_ring, terms)
    };
    let polys = sys.polys.iter().map(project).collect();
    (chart_ring, chart_vars, polys)
}

/// Groebner basis of the cell chart ideal; `Ok(None)` when the ideal is the
/// unit ideal (no points with support inside the chart).
fn chart_basis(
    ring: &PolyRing,
    polys: &[SparsePoly],
    budget: &GroebnerBudget,
) -> Result<Option<GroebnerBasis>, CasError> {
    let gens: Vec<SparsePoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let gb = groebner(&gens, ring, budget)?;
    if gb.contains_one() {
        return Ok(None);
    }
    Ok(Some(gb))
}

/// Full analysis of one support cell. Returns `Ok(None)` when the member
/// misses the cell. `NotZeroDimensional` signals a positive-dimensional
/// intersection; `RankDeficient` a singular point of the member;
/// `AmbiguousCell` non-uniform Jacobian behavior across the cell's points.
pub fn analyze_support_cell(
    sys: &EquationSystem,
    support: &[usize],
    stabilizer: u64,
    budget: &GroebnerBudget,
    quotient_cap: usize,
) -> Result<Option<CellOutcome>, CasError> {
    let chart_var = support[0];
    let (chart_ring, chart_vars, polys) = restrict_to_chart(sys, support, chart_var);
    let Some(gb) = chart_basis(&chart_ring, &polys, budget)? else {
        return Ok(None);
    };
    let q = QuotientRing::new(chart_ring, gb, quotient_cap)?;
    if q.dim() == 0 {
        return Ok(None);
    }
    let invert: Vec<usize> = (0..chart_vars.len()).collect();
    let Some(cell) = CellAlgebra::localize(&q, &invert) else {
        return Ok(None);
    };
    let slice_dim = cell.dim;
    let u_chart = sys.ring.weights[chart_var];
    let numer = slice_dim as u64 * stabilizer;
    if numer % u_chart != 0 {
        return Err(CasError::AmbiguousCell {
            detail: format!(
                "slice count {} times stabilizer {} is not divisible by chart weight {}",
                slice_dim, stabilizer, u_chart
            ),
        });
    }
    let count = numer / u_chart;
    if count == 0 {
        return Ok(None);
    }
    let reduced = cell.is_reduced();

    // Jacobian of the full system, evaluated on the cell, organized by
    // residue class mod the stabilizer.
    let r = stabilizer;
    let n = sys.ring.nvars();
    let col_class: Vec<u64> = (0..n).map(|i| sys.ring.weights[i] % r).collect();
    let row_class: Vec<u64> = sys.degrees.iter().map(|&d| d % r).collect();
    let jac = sys.jacobian();

    let mut zero_vars = vec![true; n];
    for &i in support {
        zero_vars[i] = false;
    }
    let mut positions = vec![usize::MAX; n];
    for (k, &i) in chart_vars.iter().enumerate() {
        positions[i] = k;
    }
    let to_cell_element = |p: &SparsePoly| -> Vec<u64> {
        let restricted = p.substitute_zero_one(&zero_vars, Some(chart_var), &sys.ring);
        let terms = restricted
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; chart_vars.len()];
                for (i, &e) in m.exps.iter().enumerate() {
                    if e > 0 {
                        exps[positions[i]] = e;
                    }
                }
                (super::poly::Monomial::from_exps(exps), *c)
            })
            .collect();
        let poly = SparsePoly::from_terms(&q.ring, terms);
        cell.element(&q, &poly)
    };

    let mut classes: Vec<u64> = col_class
        .iter()
        .copied()
        .chain(row_class.iter().copied())
        .collect();
    classes.sort_unstable();
    classes.dedup();

    let mut consumed: Vec<u64> = Vec::new();
    let mut total_rank = 0usize;
    for &rho in &classes {
        let rows: Vec<usize> = (0..sys.polys.len())
            .filter(|&j| row_class[j] == rho)
            .collect();
        let cols: Vec<usize> = (0..n)
            .filter(|&i| i != chart_var && col_class[i] == rho)
            .collect();
        if rows.is_empty() {
            continue;
        }
        // equivariance: entries of these rows in other-class columns must
        // vanish at every mu_r-fixed point of the cell
        #[cfg(debug_assertions)]
        for &j in &rows {
            for i in 0..n {
                if i != chart_var && col_class[i] != rho {
                    let e = to_cell_element(&jac[j][i]);
                    debug_assert!(
                        cell.is_zero(&e) || cell.is_nilpotent(&e),
                        "non-equivariant Jacobian entry ({j},{i}) on cell {:?}",
                        support
                    );
                }
            }
        }
        if cols.is_empty() {
            continue;
        }
        let mut block: Vec<Vec<Vec<u64>>> = rows
            .iter()
            .map(|&j| cols.iter().map(|&i| to_cell_element(&jac[j][i])).collect())
            .collect();
        let rank = class_rank(&cell, &mut block)?;
        total_rank += rank;
        for _ in 0..rank {
            consumed.push(rho);
        }
    }

    if total_rank != sys.codim {
        return Err(CasError::RankDeficient {
            support: support.to_vec(),
            stabilizer,
            rank: total_rank,
            codim: sys.codim,
        });
    }

    // transverse residues: all non-chart weights mod r, minus consumed
    let mut residues: Vec<u64> = (0..n)
        .filter(|&i| i != chart_var)
        .map(|i| col_class[i])
        .collect();
    let mut consumed_sorted = consumed.clone();
    consumed_sorted.sort_unstable();
    for c in &consumed_sorted {
        let pos = residues
            .iter()
            .position(|x| x == c)
            .expect("consumed residue not available among transverse directions");
        residues.remove(pos);
    }
    residues.sort_unstable();
    if residues.len() != 4 || residues.iter().any(|&x| x == 0) {
        return Err(CasError::NonIsolatedPoint {
            support: support.to_vec(),
            stabilizer,
            residues,
        });
    }
    let transverse: [u64; 4] = [residues[0], residues[1], residues[2], residues[3]];

    Ok(Some(CellOutcome {
        support: support.to_vec(),
        stabilizer,
        chart_var,
        slice_dim,
        count,
        reduced,
        consumed_residues: consumed_sorted,
        transverse_residues: transverse,
    }))
}

/// Rank of a matrix over the cell algebra, certified uniform across the
/// cell's points.
///
/// Phase 1 is Gaussian elimination on unit entries (entries nonzero at
/// every point). When no unit entry remains the rank can still be uniform
/// with different points supported by different entries, so phase 2
/// certifies through determinantal ideals: the leftover block has uniform
/// rank r iff all (r+1)-minors vanish at every point (are nilpotent) and
/// the r-minors generate the unit ideal.
fn class_rank(cell: &CellAlgebra, block: &mut Vec<Vec<Vec<u64>>>) -> Result<usize, CasError> {
    let mut rank = 0usize;
    loop {
        let nrows = block.len();
        let ncols = if nrows == 0 { 0 } else { block[0].len() };
        if nrows == 0 || ncols == 0 {
            return Ok(rank);
        }
        let mut pivot: Option<(usize, usize)> = None;
        'search: for r in 0..nrows {
            for c in 0..ncols {
                if cell.is_unit(&block[r][c]) {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            return Ok(rank + leftover_rank(cell, block)?);
        };
        rank += 1;
        let pivot_inv = cell
            .inverse(&block[pr][pc])
            .expect("unit pivot must be invertible");
        let pivot_row: Vec<Vec<u64>> = block[pr].clone();
        let pivot_col: Vec<Vec<u64>> = block.iter().map(|row| row[pc].clone()).collect();
        let mut next: Vec<Vec<Vec<u64>>> = Vec::with_capacity(nrows - 1);
        for r in 0..nrows {
            if r == pr {
                continue;
            }
            let factor = cell.mul_elements(&pivot_col[r], &pivot_inv);
            let mut new_row = Vec::with_capacity(ncols - 1);
            for c in 0..ncols {
                if c == pc {
                    continue;
                }
                let sub = cell.mul_elements(&factor, &pivot_row[c]);
                let e: Vec<u64> = block[r][c]
                    .iter()
                    .zip(&sub)
                    .map(|(&a, &b)| cell.field.sub(a, b))
                    .collect();
                new_row.push(e);
            }
            next.push(new_row);
        }
        *block = next;
    }
}

/// Uniform rank of a block with no unit entries, via determinantal ideals.
fn leftover_rank(cell: &CellAlgebra, block: &[Vec<Vec<u64>>]) -> Result<usize, CasError> {
    // drop rows and columns that vanish at every point
    let nrows = block.len();
    let ncols = block[0].len();
    let live = |e: &Vec<u64>| !cell.is_zero(e) && !cell.is_nilpotent(e);
    let rows: Vec<usize> = (0..nrows)
        .filter(|&r| block[r].iter().any(live))
        .collect();
    let cols: Vec<usize> = (0..ncols)
        .filter(|&c| rows.iter().any(|&r| live(&block[r][c])))
        .collect();
    if rows.is_empty() || cols.is_empty() {
        return Ok(0);
    }
    let max_r = rows.len().min(cols.len());
    for r in (1..=max_r).rev() {
        let minors = all_minors(cell, block, &rows, &cols, r);
        let survivors: Vec<Vec<u64>> = minors
            .into_iter()
            .filter(|m| !cell.is_zero(m) && !cell.is_nilpotent(m))
            .collect();
        if survivors.is_empty() {
            continue; // rank below r at every point
        }
        if cell.ideal_is_unit(&survivors) {
            return Ok(r);
        }
        return Err(CasError::AmbiguousCell {
            detail: format!("Jacobian rank varies across the points of one cell (size-{r} minors)"),
        });
    }
    Ok(0)
}

fn all_minors(
    cell: &CellAlgebra,
    block: &[Vec<Vec<u64>>],
    rows: &[usize],
    cols: &[usize],
    r: usize,
) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let row_sets = combinations(rows.len(), r);
    let col_sets = combinations(cols.len(), r);
    for rs in &row_sets {
        for cs in &col_sets {
            let det = minor_det(cell, block, rows, cols, rs, cs);
            out.push(det);
        }
    }
    out
}

fn minor_det(
    cell: &CellAlgebra,
    block: &[Vec<Vec<u64>>],
    rows: &[usize],
    cols: &[usize],
    rs: &[usize],
    cs: &[usize],
) -> Vec<u64> {
    // cofactor expansion along the first row of the selection
    if rs.len() == 1 {
        return block[rows[rs[0]]][cols[cs[0]]].clone();
    }
    let f = cell.field;
    let mut acc = vec![0u64; cell.dim];
    for (k, &c0) in cs.iter().enumerate() {
        let entry = &block[rows[rs[0]]][cols[c0]];
        if cell.is_zero(entry) {
            continue;
        }
        let sub_rs: Vec<usize> = rs[1..].to_vec();
        let sub_cs: Vec<usize> = cs
            .iter()
            .copied()
            .filter(|&c| c != c0)
            .collect();
        let sub = minor_det(cell, block, rows, cols, &sub_rs, &sub_cs);
        let term = cell.mul_elements(entry, &sub);
        if k % 2 == 0 {
            for i in 0..cell.dim {
                acc[i] = f.add(acc[i], term[i]);
            }
        } else {
            for i in 0..cell.dim {
                acc[i] = f.sub(acc[i], term[i]);
            }
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Grouped points of the intersection of the member with one stratum:
/// one entry per support cell that carries points.
#[derive(Debug, Clone)]
pub struct StratumPoints {
    pub r: u64,
    pub cells: Vec<CellOutcome>,
}

/// Solves the restricted system on every support cell of the stratum with
/// the given variable set. Cells whose stabilizer exceeds `r` belong to a
/// deeper stratum and are skipped here.
pub fn zero_dim_points(
    sys: &EquationSystem,
    r: u64,
    stratum_vars: &[usize],
    budget: &GroebnerBudget,
    quotient_cap: usize,
) -> Result<StratumPoints, CasError> {
    let mut cells = Vec::new();
    for mask in 1u32..(1 << stratum_vars.len()) {
        let support: Vec<usize> = stratum_vars
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let g = support
            .iter()
            .fold(0u64, |acc, &i| num_integer::gcd(acc, sys.ring.weights[i]));
        if g != r {
            continue;
        }
        if let Some(outcome) = analyze_support_cell(sys, &support, g, budget, quotient_cap)? {
            cells.push(outcome);
        }
    }
    Ok(StratumPoints { r, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cas::equations::{build_equations, FormOptions};
    use crate::formats::FormatFamily;

    fn budget() -> GroebnerBudget {
        GroebnerBudget::default()
    }

    #[test]
    fn weight5_stratum_of_x36_40_has_eight_points() {
        let family: FormatFamily = "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]".parse().unwrap();
        let sys = build_equations(&family, 11, 32003, &FormOptions::default()).unwrap();
        let pts = zero_dim_points(&sys, 5, &[0, 1], &budget(), 4096).unwrap();
        let total: u64 = pts.cells.iter().map(|c| c.count).sum();
        assert_eq!(total, 8);
        for c in &pts.cells {
            assert_eq!(c.transverse_residues, [2, 2, 3, 4]);
            assert!(c.reduced);
        }
    }

    #[test]
    fn weight31_stratum_of_x36_40_is_a_coordinate_point() {
        let family: FormatFamily = "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]".parse().unwrap();
        let sys = build_equations(&family, 11, 32003, &FormOptions::default()).unwrap();
        let pts = zero_dim_points(&sys, 31, &[6], &budget(), 4096).unwrap();
        assert_eq!(pts.cells.len(), 1);
        assert_eq!(pts.cells[0].count, 1);
        assert_eq!(pts.cells[0].transverse_residues, [5, 7, 8, 12]);
        // consumed residues are the equation degrees mod 31
        assert_eq!(pts.cells[0].consumed_residues, vec![5, 9]);
    }

    #[test]
    fn segre_weight3_stratum_has_fourteen_points() {
        let family: FormatFamily = "P2P2 a=[0,2,7] b=[3,4,5] w=[2,3,3,3,4,5,5,7,11]"
            .parse()
            .unwrap();
        let sys = build_equations(&family, 11, 32003, &FormOptions::default()).unwrap();
        let pts = zero_dim_points(&sys, 3, &[1, 2, 3], &budget(), 4096).unwrap();
        let total: u64 = pts.cells.iter().map(|c| c.count).sum();
        assert_eq!(total, 14);
        for c in &pts.cells {
            assert_eq!(c.transverse_residues, [1, 2, 2, 2]);
        }
    }

    #[test]
    fn gr_weight27_point_consumes_the_right_residues() {
        let family: FormatFamily =
            "GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]".parse().unwrap();
        let sys = build_equations(&family, 11, 32003, &FormOptions::default()).unwrap();
        let pts = zero_dim_points(&sys, 27, &[7], &budget(), 4096).unwrap();
        assert_eq!(pts.cells.len(), 1);
        let cell = &pts.cells[0];
        assert_eq!(cell.count, 1);
        assert_eq!(cell.consumed_residues, vec![3, 5, 9]);
        assert_eq!(cell.transverse_residues, [2, 7, 8, 11]);
    }

    #[test]
    fn gr_weight7_point_of_the_w46_family() {
        let family: FormatFamily =
            "GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]".parse().unwrap();
        let sys = build_equations(&family, 11, 32003, &FormOptions::default()).unwrap();
        let pts = zero_dim_points(&sys, 7, &[4], &budget(), 4096).unwrap();
        assert_eq!(pts.cells.len(), 1);
        let cell = &pts.cells[0];
        assert_eq!(cell.consumed_residues, vec![1, 1, 1]);
        assert_eq!(cell.transverse_residues, [3, 4, 4, 4]);
    }
}
