//! Dense matrices over a prime field, sized for the small quotient-ring
//! computations done here (dimensions rarely above a hundred).

use super::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>, // row-major
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                let row = k * other.cols;
                let orow = i * other.cols;
                for j in 0..other.cols {
                    let v = out.data[orow + j] + a * other.data[row + j] % f.p;
                    out.data[orow + j] = if v >= f.p { v - f.p } else { v };
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64], f: &PrimeField) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.at(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64, f: &PrimeField) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn add_scaled(&mut self, other: &Matrix, scale: u64, f: &PrimeField) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        for (a, &b) in self.data.iter_mut().zip(other.data.iter()) {
            *a = f.add(*a, f.mul(scale, b));
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    pub fn trace(&self, f: &PrimeField) -> u64 {
        let mut acc = 0;
        for i in 0..self.rows.min(self.cols) {
            acc = f.add(acc, self.at(i, i));
        }
        acc
    }

    /// In-place row reduction to row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = f.inv(self.at(r, c));
            for j in c..self.cols {
                let v = f.mul(self.at(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.at(i, c) != 0 {
                    let factor = self.at(i, c);
                    for j in c..self.cols {
                        let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        let mut m = self.clone();
        m.row_reduce(f).len()
    }

    pub fn is_invertible(&self, f: &PrimeField) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Basis of the column space, as a list of independent column vectors.
    pub fn column_space(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        let mut t = self.transpose();
        t.row_reduce(f);
        (0..t.rows)
            .map(|i| t.data[i * t.cols..(i + 1) * t.cols].to_vec())
            .filter(|row| row.iter().any(|&v| v != 0))
            .collect()
    }
}

/// Coordinate solver for a fixed independent spanning set: expresses vectors
/// in the span of `basis` (each of length `n`).
pub struct SpanSolver {
    n: usize,
    k: usize,
    rref: Matrix,       // k x n, row-reduced basis
    pivots: Vec<usize>, // pivot column per row
    change: Matrix,     // k x k: rref = change * basis
}

impl SpanSolver {
    pub fn new(basis: &[Vec<u64>], f: &PrimeField) -> Self {
        let k = basis.len();
        let n = if k == 0 { 0 } else { basis[0].len() };
        // augment with identity to track the change of basis
        let mut aug = Matrix::zero(k, n + k);
        for (i, b) in basis.iter().enumerate() {
            for (j, &v) in b.iter().enumerate() {
                aug.set(i, j, v);
            }
            aug.set(i, n + i, 1);
        }
        let piv_all = aug.row_reduce(f);
        let pivots: Vec<usize> = piv_all.into_iter().filter(|&c| c < n).collect();
        assert_eq!(pivots.len(), k, "spanning set is not independent");
        let mut rref = Matrix::zero(k, n);
        let mut change = Matrix::zero(k, k);
        for i in 0..k {
            for j in 0..n {
                rref.set(i, j, aug.at(i, j));
            }
            for j in 0..k {
                change.set(i, j, aug.at(i, n + j));
            }
        }
        SpanSolver {
            n,
            k,
            rref,
            pivots,
            change,
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Coordinates of `v` w.r.t. the original basis; `None` if outside the
    /// span.
    pub fn coords(&self, v: &[u64], f: &PrimeField) -> Option<Vec<u64>> {
        assert_eq!(v.len(), self.n);
        let mut residual = v.to_vec();
        let mut c_rref = vec![0u64; self.k];
        for (row, &pc) in self.pivots.iter().enumerate() {
            let coeff = residual[pc];
            if coeff != 0 {
                c_rref[row] = coeff;
                for j in 0..self.n {
                    residual[j] = f.sub(residual[j], f.mul(coeff, self.rref.at(row, j)));
                }
            }
        }
        if residual.iter().any(|&x| x != 0) {
            return None;
        }
        // v = c_rref * rref = c_rref * change * basis
        let mut out = vec![0u64; self.k];
        for i in 0..self.k {
            if c_rref[i] == 0 {
                continue;
            }
            for j in 0..self.k {
                out[j] = f.add(out[j], f.mul(c_rref[i], self.change.at(i, j)));
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_reduce() {
        let f = PrimeField::new(101);
        let mut m = Matrix::zero(3, 3);
        m.data = vec![1, 2, 3, 2, 4, 6, 0, 1, 1];
        assert_eq!(m.rank(&f), 2);
        assert!(!m.is_invertible(&f));
        assert!(Matrix::identity(4).is_invertible(&f));
    }

    #[test]
    fn span_solver_roundtrip() {
        let f = PrimeField::new(101);
        let basis = vec![vec![1, 2, 0, 5], vec![0, 1, 1, 7]];
        let solver = SpanSolver::new(&basis, &f);
        // 3*b0 + 10*b1
        let mut v = vec![0u64; 4];
        for j in 0..4 {
            v[j] = f.add(f.mul(3, basis[0][j]), f.mul(10, basis[1][j]));
        }
        assert_eq!(solver.coords(&v, &f), Some(vec![3, 10]));
        assert_eq!(solver.coords(&[1, 0, 0, 0], &f), None);
    }

    #[test]
    fn matrix_power() {
        let f = PrimeField::new(101);
        let mut m = Matrix::zero(2, 2);
        m.data = vec![1, 1, 0, 1];
        let m5 = m.pow(5, &f);
        assert_eq!(m5.data, vec![1, 5, 0, 1]);
    }
}
