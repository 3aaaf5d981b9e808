//! Dense matrices over [`Scalar`] with exact Gauss-Jordan elimination.
//!
//! Vectors are column vectors and matrices act on the left, so the j-th
//! column of a map is the image of the j-th basis vector. Everything here is
//! exact; there are no tolerances anywhere.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form with zero rows dropped.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub mat: Matrix,
    /// Pivot column of each remaining row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Integer literal matrix, handy in tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }

    /// Matrix-vector product, column convention.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                let t = a * x;
                out[i] += &t;
            }
        }
        out
    }

    /// Kronecker product; index order puts the left factor most significant,
    /// matching the lexicographic tensor basis.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * other.rows + k, j * other.cols + l)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    /// Gauss-Jordan elimination to reduced row-echelon form. Zero rows are
    /// dropped, pivot entries are 1 and pivot columns are otherwise zero.
    pub fn echelon(&self) -> Echelon {
        let mut work = self.row_vecs();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (row..work.len()).find(|&r| !work[r][col].is_zero()) else {
                continue;
            };
            work.swap(row, pivot_row);
            let inv = work[row][col].inv();
            for x in &mut work[row] {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for r in 0..work.len() {
                if r == row || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for c in 0..self.cols {
                    if work[row][c].is_zero() {
                        continue;
                    }
                    let t = &factor * &work[row][c];
                    work[r][c] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
            if row == work.len() {
                break;
            }
        }
        work.truncate(row);
        Echelon {
            mat: Matrix::from_rows_with_cols(work, self.cols),
            pivots,
        }
    }

    fn from_rows_with_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        if rows.is_empty() {
            Matrix::zero(0, cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Reduced row-echelon form; the row space is preserved.
    pub fn rref(&self) -> Matrix {
        self.echelon().mat
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space `{v | self * v = 0}`; one vector per free
    /// column of the echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let ech = self.echelon();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &ech.pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -&ech.mat[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.rows)).echelon();
        if aug.pivots.len() < self.rows || aug.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        Some(Matrix::from_fn(self.rows, self.cols, |i, j| {
            aug.mat[(i, self.cols + j)].clone()
        }))
    }

    /// Canonical particular solution of `self * x = b` (free variables zero),
    /// or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Matrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect());
        let aug = self.hstack(&rhs).echelon();
        if aug.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in aug.pivots.iter().enumerate() {
            x[p] = aug.mat[(r, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_text).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| -a).collect()
}

pub fn vec_scale(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| c * a).collect()
}

/// Standard basis vector `e_i` of the given length.
pub fn unit_vec(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_invertible_diagonal() {
        let m = Matrix::from_ints(&[&[2, 0], &[0, 4]]);
        assert_eq!(m.rref(), Matrix::identity(2));
    }

    #[test]
    fn rref_zero_matrix_has_no_rows() {
        let m = Matrix::zero(2, 2);
        let r = m.rref();
        assert_eq!(r.rows(), 0);
        assert_eq!(r.cols(), 2);
    }

    #[test]
    fn rref_dependent_rows_over_q_sqrt2() {
        // second row = sqrt(2) * first row
        let r2 = Scalar::surd(1, 1, 2);
        let m = Matrix::from_rows(vec![
            vec![Scalar::one(), r2.clone()],
            vec![r2.clone(), Scalar::from_int(2)],
        ]);
        let reduced = m.rref();
        assert_eq!(reduced.rows(), 1);
        assert_eq!(reduced.row(0), &[Scalar::one(), r2][..]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 7], &[0, 1, 1]]);
        let r = m.rref();
        assert_eq!(r.rref(), r);
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::zero(2, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            assert!(vec_is_zero(&m.apply(&v)));
        }
    }

    #[test]
    fn solve_particular() {
        let m = Matrix::from_ints(&[&[1, 1, 0], &[0, 0, 1]]);
        let b = [Scalar::from_int(3), Scalar::from_int(5)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b.to_vec());
        // free variable pinned to zero for determinism
        assert_eq!(x[1], Scalar::zero());
        let inconsistent = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(inconsistent
            .solve(&[Scalar::zero(), Scalar::one()])
            .is_none());
    }

    #[test]
    fn kron_matches_tensor_order() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        // entry ((i,k),(j,l)) = a[i,j] b[k,l]
        assert_eq!(k[(0, 1)], Scalar::from_int(1));
        assert_eq!(k[(1, 0)], Scalar::from_int(1));
        assert_eq!(k[(2, 3)], Scalar::from_int(4));
        assert_eq!(k[(3, 2)], Scalar::from_int(4));
    }
}
