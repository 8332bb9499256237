//! Zero-dimensional quotient rings as finite F_p-algebras: normal monomial
//! bases, multiplication operators, localization away from coordinate
//! hyperplanes, unit and nilpotency tests, and the trace form.

use std::collections::HashMap;

use super::field::PrimeField;
use super::groebner::{normal_form, GroebnerBasis};
use super::linalg::{Matrix, SpanSolver};
use super::poly::{Monomial, PolyRing, SparsePoly};
use super::CasError;

/// A finite-dimensional quotient ring k[vars]/I with its normal-monomial
/// basis, sorted ascending in the term order (so parents precede products).
pub struct QuotientRing {
    pub ring: PolyRing,
    pub gb: GroebnerBasis,
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientRing {
    /// Fails with `NotZeroDimensional` when some variable has no pure power
    /// among the leading monomials (infinite staircase) or the monomial
    /// count exceeds `cap`.
    pub fn new(ring: PolyRing, gb: GroebnerBasis, cap: usize) -> Result<Self, CasError> {
        if gb.contains_one() {
            return Ok(QuotientRing {
                ring,
                gb,
                basis: Vec::new(),
                index: HashMap::new(),
            });
        }
        let lms: Vec<Monomial> = gb.leading_monomials().into_iter().cloned().collect();
        let n = ring.nvars();
        for v in 0..n {
            let has_pure = lms
                .iter()
                .any(|m| m.exps[v] > 0 && m.exps.iter().enumerate().all(|(i, &e)| i == v || e == 0));
            if !has_pure {
                return Err(CasError::NotZeroDimensional { variable: v });
            }
        }
        let mut basis = vec![Monomial::one(n)];
        let mut seen: HashMap<Monomial, usize> = HashMap::new();
        seen.insert(basis[0].clone(), 0);
        let mut head = 0;
        while head < basis.len() {
            let m = basis[head].clone();
            head += 1;
            for v in 0..n {
                let mut next = m.clone();
                next.exps[v] += 1;
                if seen.contains_key(&next) {
                    continue;
                }
                if lms.iter().any(|lm| lm.divides(&next)) {
                    continue;
                }
                if basis.len() >= cap {
                    return Err(CasError::QuotientTooLarge { cap });
                }
                seen.insert(next.clone(), basis.len());
                basis.push(next);
            }
        }
        basis.sort_by(|a, b| ring.cmp_monomials(a, b));
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(QuotientRing {
            ring,
            gb,
            basis,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the normal form of `f` in the monomial basis.
    pub fn reduce_vec(&self, f: &SparsePoly) -> Vec<u64> {
        let nf = normal_form(f, &self.gb.gens, &self.ring);
        let mut v = vec![0u64; self.dim()];
        for (m, c) in &nf.terms {
            let i = *self
                .index
                .get(m)
                .expect("normal form landed outside the monomial basis");
            v[i] = *c;
        }
        v
    }

    /// Multiplication operator of `f` on the quotient.
    pub fn mul_matrix(&self, f: &SparsePoly) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for (j, b) in self.basis.iter().enumerate() {
            let shifted = SparsePoly {
                terms: f.terms.iter().map(|(mm, c)| (mm.mul(b), *c)).collect(),
            };
            let col = self.reduce_vec(&shifted);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// For each basis monomial beyond 1, a variable and the index of the
    /// smaller basis monomial it extends. The basis is sorted, so parents
    /// always precede children.
    fn parent_links(&self) -> Vec<Option<(usize, usize)>> {
        self.basis
            .iter()
            .map(|m| {
                let v = m.exps.iter().position(|&e| e > 0)?;
                let mut parent = m.clone();
                parent.exps[v] -= 1;
                Some((v, self.index[&parent]))
            })
            .collect()
    }
}

/// The factor of a zero-dimensional quotient supported on the points where
/// every listed variable is nonzero (the localization inverting their
/// product). Elements live in component coordinates.
pub struct CellAlgebra {
    pub field: PrimeField,
    /// Dimension over F_p: the exact-support slice count.
    pub dim: usize,
    /// Multiplication operators of the component basis elements.
    basis_ops: Vec<Matrix>,
    /// Component coordinates of the images of the ambient normal monomials
    /// (i.e. b_k * e where e is the component identity).
    monomial_images: Vec<Vec<u64>>,
    /// The component identity in component coordinates.
    pub one: Vec<u64>,
}

impl CellAlgebra {
    /// Builds the localization of `q` inverting the product of the listed
    /// variables. Returns `None` when no point of the cell survives.
    pub fn localize(q: &QuotientRing, invert_vars: &[usize]) -> Option<CellAlgebra> {
        let f = q.ring.field;
        let n = q.dim();
        if n == 0 {
            return None;
        }
        let mut prod = SparsePoly::constant(&q.ring, 1);
        for &v in invert_vars {
            prod = prod.mul(&SparsePoly::variable(&q.ring, v), &q.ring);
        }
        let m_y = q.mul_matrix(&prod);
        let stable = m_y.pow(n as u64, &f);
        let cols = stable.column_space(&f);
        if cols.is_empty() {
            return None;
        }
        let solver = SpanSolver::new(&cols, &f);
        let dim = solver.dim();
        let mut var_ops = Vec::with_capacity(q.ring.nvars());
        for v in 0..q.ring.nvars() {
            let mv = q.mul_matrix(&SparsePoly::variable(&q.ring, v));
            var_ops.push(restrict(&mv, &cols, &solver, &f));
        }
        let one_amb = q.reduce_vec(&SparsePoly::constant(&q.ring, 1));
        let one = project_onto_image(&stable, &one_amb, &cols, &solver, &f);

        // images of all ambient normal monomials applied to the identity,
        // by walking the monomial tree with the restricted operators
        let links = q.parent_links();
        let mut monomial_images: Vec<Vec<u64>> = Vec::with_capacity(n);
        for k in 0..n {
            let img = match links[k] {
                None => one.clone(),
                Some((v, parent)) => var_ops[v].mul_vec(&monomial_images[parent], &f),
            };
            monomial_images.push(img);
        }

        // multiplication operators of the component basis: column c of
        // basis_ops[b] is s_b * s_c, computed through the monomial images
        // applied to e_c
        let mut basis_ops = vec![Matrix::zero(dim, dim); dim];
        for c in 0..dim {
            let mut unit = vec![0u64; dim];
            unit[c] = 1;
            let mut images_c: Vec<Vec<u64>> = Vec::with_capacity(n);
            for k in 0..n {
                let img = match links[k] {
                    None => unit.clone(),
                    Some((v, parent)) => var_ops[v].mul_vec(&images_c[parent], &f),
                };
                images_c.push(img);
            }
            for (b, vec_b) in cols.iter().enumerate() {
                let mut col = vec![0u64; dim];
                for (k, &coeff) in vec_b.iter().enumerate() {
                    if coeff != 0 {
                        for i in 0..dim {
                            col[i] = f.add(col[i], f.mul(coeff, images_c[k][i]));
                        }
                    }
                }
                for i in 0..dim {
                    basis_ops[b].set(i, c, col[i]);
                }
            }
        }

        Some(CellAlgebra {
            field: f,
            dim,
            basis_ops,
            monomial_images,
            one,
        })
    }

    /// Component coordinates of the image of a chart-ring polynomial.
    pub fn element(&self, q: &QuotientRing, p: &SparsePoly) -> Vec<u64> {
        let f = self.field;
        let nf = q.reduce_vec(p);
        let mut out = vec![0u64; self.dim];
        for (k, &c) in nf.iter().enumerate() {
            if c != 0 {
                for i in 0..self.dim {
                    out[i] = f.add(out[i], f.mul(c, self.monomial_images[k][i]));
                }
            }
        }
        out
    }

    /// Multiplication operator of an element given in component coordinates.
    pub fn operator_of_element(&self, v: &[u64]) -> Matrix {
        let f = self.field;
        let mut op = Matrix::zero(self.dim, self.dim);
        for (b, &c) in v.iter().enumerate() {
            if c != 0 {
                op.add_scaled(&self.basis_ops[b], c, &f);
            }
        }
        op
    }

    pub fn is_zero(&self, v: &[u64]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    pub fn is_unit(&self, v: &[u64]) -> bool {
        if self.is_zero(v) {
            return false;
        }
        self.operator_of_element(v).is_invertible(&self.field)
    }

    pub fn is_nilpotent(&self, v: &[u64]) -> bool {
        let op = self.operator_of_element(v);
        let powered = op.pow(self.dim as u64, &self.field);
        powered
            .mul_vec(&self.one, &self.field)
            .iter()
            .all(|&x| x == 0)
    }

    pub fn mul_elements(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.operator_of_element(a).mul_vec(b, &self.field)
    }

    /// Multiplicative inverse of a unit; `None` for non-units.
    pub fn inverse(&self, v: &[u64]) -> Option<Vec<u64>> {
        let f = self.field;
        let op = self.operator_of_element(v);
        let k = self.dim;
        let mut aug = Matrix::zero(k, k + 1);
        for i in 0..k {
            for j in 0..k {
                aug.set(i, j, op.at(i, j));
            }
            aug.set(i, k, self.one[i]);
        }
        let pivots = aug.row_reduce(&f);
        if pivots.len() != k || pivots.iter().any(|&c| c >= k) {
            return None;
        }
        Some((0..k).map(|i| aug.at(i, k)).collect())
    }

    /// The ideal generated by the given elements is the whole component
    /// algebra, i.e. at every point of the cell some generator is nonzero.
    pub fn ideal_is_unit(&self, elems: &[Vec<u64>]) -> bool {
        let f = self.field;
        let k = self.dim;
        let mut stacked = Matrix::zero(k, k * elems.len().max(1));
        for (e, v) in elems.iter().enumerate() {
            let op = self.operator_of_element(v);
            for i in 0..k {
                for j in 0..k {
                    stacked.set(i, e * k + j, op.at(i, j));
                }
            }
        }
        stacked.rank(&f) == k
    }

    /// The algebra is reduced (all points geometrically simple) iff the
    /// trace form is nondegenerate.
    pub fn is_reduced(&self) -> bool {
        let f = self.field;
        let mut g = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                // trace(M_i * M_j) without forming the product
                let mut t = 0u64;
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        t = f.add(t, f.mul(self.basis_ops[i].at(a, b), self.basis_ops[j].at(b, a)));
                    }
                }
                g.set(i, j, t);
                g.set(j, i, t);
            }
        }
        g.is_invertible(&f)
    }
}

fn restrict(op: &Matrix, basis: &[Vec<u64>], solver: &SpanSolver, f: &PrimeField) -> Matrix {
    let k = basis.len();
    let mut out = Matrix::zero(k, k);
    for (j, b) in basis.iter().enumerate() {
        let img = op.mul_vec(b, f);
        let coords = solver
            .coords(&img, f)
            .expect("subspace is not invariant under multiplication");
        for (i, &v) in coords.iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

/// Projection of `v` onto im(M) along ker(M), where M is the stable power
/// of a multiplication operator (image and kernel are complementary and M
/// is invertible on its image).
fn project_onto_image(
    stable: &Matrix,
    v: &[u64],
    cols: &[Vec<u64>],
    solver: &SpanSolver,
    f: &PrimeField,
) -> Vec<u64> {
    let m_restricted = restrict(stable, cols, solver, f);
    let mv = stable.mul_vec(v, f);
    let rhs = solver
        .coords(&mv, f)
        .expect("image vector not in column space");
    let k = cols.len();
    let mut aug = Matrix::zero(k, k + 1);
    for i in 0..k {
        for j in 0..k {
            aug.set(i, j, m_restricted.at(i, j));
        }
        aug.set(i, k, rhs[i]);
    }
    let pivots = aug.row_reduce(f);
    assert_eq!(
        pivots.len(),
        k,
        "stable operator must be invertible on its image"
    );
    (0..k).map(|i| aug.at(i, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cas::groebner::{groebner, GroebnerBudget};
    use crate::cas::poly::parse_poly;

    fn ring(names: &[&str], weights: &[u64]) -> PolyRing {
        PolyRing::new(
            PrimeField::new(32003),
            weights.to_vec(),
            names.iter().map(|s| s.to_string()).collect(),
        )
    }

    #[test]
    fn quotient_dimension_counts_points() {
        // y^3 - y = y(y-1)(y+1): three points on the line
        let r = ring(&["y"], &[1]);
        let gb = groebner(
            &[parse_poly(&r, "y^3 - y").unwrap()],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        let q = QuotientRing::new(r, gb, 1000).unwrap();
        assert_eq!(q.dim(), 3);
        // localize away from y = 0: two points remain
        let cell = CellAlgebra::localize(&q, &[0]).unwrap();
        assert_eq!(cell.dim, 2);
        assert!(cell.is_reduced());
    }

    #[test]
    fn localization_drops_points_off_the_torus() {
        // y^2(y - 1): a double point at 0 and a simple one at 1
        let r = ring(&["y"], &[1]);
        let gb = groebner(
            &[parse_poly(&r, "y^3 - y^2").unwrap()],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        let q = QuotientRing::new(r, gb, 1000).unwrap();
        assert_eq!(q.dim(), 3);
        let cell = CellAlgebra::localize(&q, &[0]).unwrap();
        assert_eq!(cell.dim, 1);
        let rr = &q.ring;
        let y = cell.element(&q, &parse_poly(rr, "y").unwrap());
        assert!(cell.is_unit(&y));
        // y - 1 vanishes at the surviving point
        let y_minus_1 = cell.element(&q, &parse_poly(rr, "y - 1").unwrap());
        assert!(cell.is_zero(&y_minus_1));
    }

    #[test]
    fn non_reduced_component_detected() {
        let r = ring(&["y"], &[1]);
        let gb = groebner(
            &[parse_poly(&r, "y^3 - 2*y^2 + y").unwrap()],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        // y(y-1)^2: simple at 0, double at 1
        let q = QuotientRing::new(r, gb, 1000).unwrap();
        let cell = CellAlgebra::localize(&q, &[0]).unwrap();
        assert_eq!(cell.dim, 2);
        assert!(!cell.is_reduced());
        let rr = &q.ring;
        let nil = cell.element(&q, &parse_poly(rr, "y - 1").unwrap());
        assert!(cell.is_nilpotent(&nil));
        assert!(!cell.is_unit(&nil));
        assert!(!cell.is_zero(&nil));
    }

    #[test]
    fn two_variable_cell() {
        // V(x^2 - 1, y^2 - 4) = 4 points, all with nonzero coordinates
        let r = ring(&["x", "y"], &[1, 1]);
        let gb = groebner(
            &[
                parse_poly(&r, "x^2 - 1").unwrap(),
                parse_poly(&r, "y^2 - 4").unwrap(),
            ],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        let q = QuotientRing::new(r, gb, 1000).unwrap();
        assert_eq!(q.dim(), 4);
        let cell = CellAlgebra::localize(&q, &[0, 1]).unwrap();
        assert_eq!(cell.dim, 4);
        assert!(cell.is_reduced());
        let rr = &q.ring;
        // x*y - 2 vanishes at two of the four points: neither unit nor zero
        let e = cell.element(&q, &parse_poly(rr, "x*y - 2").unwrap());
        assert!(!cell.is_unit(&e));
        assert!(!cell.is_zero(&e));
        assert!(!cell.is_nilpotent(&e));
        // x*y - 5 vanishes nowhere: a unit
        let u = cell.element(&q, &parse_poly(rr, "x*y - 5").unwrap());
        assert!(cell.is_unit(&u));
        // the pair (x*y - 2, x*y + 2) vanishes nowhere simultaneously
        let e2 = cell.element(&q, &parse_poly(rr, "x*y + 2").unwrap());
        assert!(cell.ideal_is_unit(&[e.clone(), e2]));
        assert!(!cell.ideal_is_unit(&[e]));
    }

    #[test]
    fn inverse_roundtrip() {
        let r = ring(&["x"], &[1]);
        let gb = groebner(
            &[parse_poly(&r, "x^4 - 2").unwrap()],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        let q = QuotientRing::new(r, gb, 1000).unwrap();
        let cell = CellAlgebra::localize(&q, &[0]).unwrap();
        assert_eq!(cell.dim, 4);
        let x = cell.element(&q, &parse_poly(&q.ring, "x + 3").unwrap());
        let inv = cell.inverse(&x).unwrap();
        let prod = cell.mul_elements(&x, &inv);
        assert_eq!(prod, cell.one);
    }

    #[test]
    fn not_zero_dimensional_detected() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gb = groebner(
            &[parse_poly(&r, "x*y").unwrap()],
            &r,
            &GroebnerBudget::default(),
        )
        .unwrap();
        assert!(matches!(
            QuotientRing::new(r, gb, 1000),
            Err(CasError::NotZeroDimensional { .. })
        ));
    }
}
