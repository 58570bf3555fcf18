//! Dense complex matrices: just enough for transition matrices and their inverses.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::{Error, Result};

/// Inverses are refused when the 1-norm condition number exceeds this.
pub const MAX_CONDITION: f64 = 1e12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major dense complex matrix. `m[(j, k)]` is row `j`, column `k`, zero-based.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for j in 0..n {
            m[(j, j)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for k in 0..cols {
                data.push(f(j, k));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; ragged input is rejected.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((j, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Parse(format!("ragged matrix: row {} has {} entries, row 1 has {c}", j + 1, row.len())));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        &self.data[j * self.cols..(j + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows).map(|j| self.row(j).to_vec()).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |j, k| self[(k, j)].conj())
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|j| self.row(j).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// `selfᴴ x`.
    pub fn adjoint_mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.rows, "matrix-vector dimension mismatch");
        let mut out = vec![ZERO; self.cols];
        for (j, &xj) in x.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(self.row(j)) {
                *o += a.conj() * xj;
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matrix-matrix dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for j in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(j, l)];
                if a == ZERO {
                    continue;
                }
                for k in 0..other.cols {
                    out[(j, k)] += a * other[(l, k)];
                }
            }
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max_{j,k} |self[j][k] − I[j][k]|`.
    pub fn max_deviation_from_identity(&self) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.rows {
            for k in 0..self.cols {
                let target = if j == k { ONE } else { ZERO };
                worst = worst.max((self[(j, k)] - target).norm());
            }
        }
        worst
    }

    /// Induced 1-norm (max column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.cols).map(|k| (0..self.rows).map(|j| self[(j, k)].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Inverse via LU with partial pivoting. Returns the inverse and the
    /// 1-norm condition number `‖A‖₁‖A⁻¹‖₁`.
    pub fn inverse(&self) -> Result<(CMatrix, f64)> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let lu = Lu::factor(self)?;
        let inv = lu.inverse();
        let condition = self.norm_one() * inv.norm_one();
        if !condition.is_finite() || condition > MAX_CONDITION {
            return Err(Error::Singular { condition });
        }
        Ok((inv, condition))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (j, k): (usize, usize)) -> &Complex64 {
        &self.data[j * self.cols + k]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut Complex64 {
        &mut self.data[j * self.cols + k]
    }
}

/// Packed `PA = LU` factorization.
struct Lu {
    factors: CMatrix,
    perm: Vec<usize>,
}

impl Lu {
    fn factor(a: &CMatrix) -> Result<Self> {
        let n = a.rows;
        let mut f = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let pivot_row =
                (k..n).max_by(|&i, &j| f[(i, k)].norm().total_cmp(&f[(j, k)].norm())).expect("non-empty pivot range");
            if f[(pivot_row, k)].norm() == 0.0 {
                return Err(Error::Singular { condition: f64::INFINITY });
            }
            if pivot_row != k {
                for c in 0..n {
                    f.data.swap(k * n + c, pivot_row * n + c);
                }
                perm.swap(k, pivot_row);
            }
            let pivot = f[(k, k)];
            for i in k + 1..n {
                let l = f[(i, k)] / pivot;
                f[(i, k)] = l;
                if l == ZERO {
                    continue;
                }
                for c in k + 1..n {
                    let u = f[(k, c)];
                    f[(i, c)] -= l * u;
                }
            }
        }
        Ok(Self { factors: f, perm })
    }

    fn solve_into(&self, rhs: &mut [Complex64]) {
        let n = self.perm.len();
        let f = &self.factors;
        for i in 0..n {
            let mut s = rhs[i];
            for c in 0..i {
                s -= f[(i, c)] * rhs[c];
            }
            rhs[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = rhs[i];
            for c in i + 1..n {
                s -= f[(i, c)] * rhs[c];
            }
            rhs[i] = s / f[(i, i)];
        }
    }

    fn inverse(&self) -> CMatrix {
        let n = self.perm.len();
        let mut inv = CMatrix::zeros(n, n);
        let mut col = vec![ZERO; n];
        for k in 0..n {
            // Column k of P·I.
            for (i, c) in col.iter_mut().enumerate() {
                *c = if self.perm[i] == k { ONE } else { ZERO };
            }
            self.solve_into(&mut col);
            for i in 0..n {
                inv[(i, k)] = col[i];
            }
        }
        inv
    }
}
