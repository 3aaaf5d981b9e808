//! Linear subspaces in canonical (RREF) form and quotient spaces.
//!
//! A subspace is stored as the reduced row-echelon basis of its span, so two
//! subspaces are equal exactly when their stored bases are equal. This is
//! what makes ideals, centers, kernels and homology bases directly
//! comparable in tests.

use crate::matrix::{unit_vec, vec_is_zero, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(ambient, Matrix::identity(ambient).row_vecs())
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient), "ambient mismatch");
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let ech = Matrix::from_rows(rows).echelon();
        Subspace {
            ambient,
            basis: ech.mat,
            pivots: ech.pivots,
        }
    }

    /// Span of the columns of a matrix, i.e. the image of the map it
    /// represents.
    pub fn image(m: &Matrix) -> Self {
        Subspace::from_rows(m.rows(), m.transpose().row_vecs())
    }

    /// Null space of the map the matrix represents.
    pub fn kernel(m: &Matrix) -> Self {
        Subspace::from_rows(m.cols(), m.kernel_basis())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result is zero iff `v` lies in
    /// the subspace, and depends only on the class of `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for c in 0..self.ambient {
                let b = &self.basis[(row, c)];
                if b.is_zero() {
                    continue;
                }
                let t = &factor * b;
                out[c] -= &t;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // v = B1^T u = B2^T w; kernel of [B1^T | -B2^T] yields all (u, w).
        let b1t = self.basis.transpose();
        let b2t = other.basis.transpose();
        let stacked = b1t.hstack(&b2t.neg());
        let rows = stacked
            .kernel_basis()
            .into_iter()
            .map(|uw| b1t.apply(&uw[..self.dim()]))
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.basis.transpose().apply(&coords);
        if rebuilt == v { Some(coords) } else { None }
    }
}

/// Quotient of a coordinate space by a subspace, with a fixed linear section.
///
/// `project . embed = id` on the quotient and `project(v) = 0` iff `v` lies
/// in the subspace. The section maps the class basis to the unit vectors of
/// the non-pivot coordinates of the subspace basis.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    sub: Subspace,
    project: Matrix,
    embed: Matrix,
    kept: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(ambient: usize, sub: &Subspace) -> Self {
        assert_eq!(sub.ambient_dim(), ambient, "ambient mismatch");
        let kept: Vec<usize> = (0..ambient).filter(|i| !sub.pivots.contains(i)).collect();
        let dim = kept.len();
        let mut project = Matrix::zero(dim, ambient);
        for (t, &c) in kept.iter().enumerate() {
            let reduced = sub.reduce(&unit_vec(ambient, c));
            debug_assert_eq!(reduced, unit_vec(ambient, c));
            project[(t, c)] = Scalar::one();
        }
        for &p in &sub.pivots {
            let reduced = sub.reduce(&unit_vec(ambient, p));
            for (t, &c) in kept.iter().enumerate() {
                project[(t, p)] = reduced[c].clone();
            }
        }
        let mut embed = Matrix::zero(ambient, dim);
        for (t, &c) in kept.iter().enumerate() {
            embed[(c, t)] = Scalar::one();
        }
        QuotientSpace {
            sub: sub.clone(),
            project,
            embed,
            kept,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn projection(&self) -> &Matrix {
        &self.project
    }

    pub fn section(&self) -> &Matrix {
        &self.embed
    }

    /// Ambient coordinate indices whose classes form the quotient basis.
    pub fn kept_coordinates(&self) -> &[usize] {
        &self.kept
    }

    pub fn project_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project.apply(v)
    }

    pub fn embed_vec(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.embed.apply(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_add;

    #[test]
    fn subspace_equality_is_canonical() {
        let a = Subspace::from_rows(
            3,
            vec![
                vec![Scalar::from_int(2), Scalar::from_int(2), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(5)],
            ],
        );
        let b = Subspace::from_rows(
            3,
            vec![
                vec![Scalar::one(), Scalar::one(), Scalar::one()],
                vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let q = QuotientSpace::new(3, &Subspace::zero(3));
        assert_eq!(q.dim(), 3);
        assert!(q.projection().is_identity());
    }

    #[test]
    fn quotient_by_full_is_zero() {
        let q = QuotientSpace::new(3, &Subspace::full(3));
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn quotient_kills_exactly_the_subspace() {
        // span{e1 + e2} inside 3 dims
        let sub = Subspace::from_rows(
            3,
            vec![vec![Scalar::one(), Scalar::one(), Scalar::zero()]],
        );
        let q = QuotientSpace::new(3, &sub);
        assert_eq!(q.dim(), 2);
        let e1 = unit_vec(3, 0);
        let e2 = unit_vec(3, 1);
        let p1 = q.project_vec(&e1);
        let p2 = q.project_vec(&e2);
        // project(e1) = -project(e2) because e1 + e2 = 0 in the quotient
        assert_eq!(p1, p2.iter().map(|x| -x).collect::<Vec<_>>());
        assert!(vec_is_zero(&q.project_vec(&vec_add(&e1, &e2))));
        // project . embed = id
        assert!(q.projection().mul(q.section()).is_identity());
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_rows(3, vec![unit_vec(3, 0), unit_vec(3, 1)]);
        let b = Subspace::from_rows(3, vec![unit_vec(3, 1), unit_vec(3, 2)]);
        let meet = a.intersect(&b);
        assert_eq!(meet, Subspace::from_rows(3, vec![unit_vec(3, 1)]));
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = Subspace::from_rows(3, vec![unit_vec(3, 0), unit_vec(3, 2)]);
        let v = vec![Scalar::from_int(4), Scalar::zero(), Scalar::from_int(-1)];
        assert_eq!(
            a.coordinates(&v),
            Some(vec![Scalar::from_int(4), Scalar::from_int(-1)])
        );
        assert_eq!(a.coordinates(&unit_vec(3, 1)), None);
    }
}
