//! Homomorphisms of Hom-Leibniz algebras: linear maps that preserve the
//! bracket and intertwine the twisting maps. Construction validates both
//! conditions on all basis pairs.

use thiserror::Error;

use crate::algebra::HomAlgebra;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum MorphismError {
    #[error("matrix shape {got_rows}x{got_cols} does not map dim {src} into dim {dst}")]
    ShapeMismatch {
        got_rows: usize,
        got_cols: usize,
        src: usize,
        dst: usize,
    },
    #[error("bracket not preserved on basis pair ({0}, {1})")]
    BracketNotPreserved(usize, usize),
    #[error("twisting maps not intertwined on basis vector {0}")]
    AlphaNotIntertwined(usize),
    #[error("codomain of inner map differs from domain of outer map")]
    ComposeMismatch,
}

/// A validated homomorphism `src -> dst`; the matrix columns are the images
/// of the source basis vectors in destination coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Hom {
    src: HomAlgebra,
    dst: HomAlgebra,
    matrix: Matrix,
}

impl Hom {
    pub fn new(src: &HomAlgebra, dst: &HomAlgebra, matrix: Matrix) -> Result<Hom, MorphismError> {
        if matrix.rows() != dst.dim() || matrix.cols() != src.dim() {
            return Err(MorphismError::ShapeMismatch {
                got_rows: matrix.rows(),
                got_cols: matrix.cols(),
                src: src.dim(),
                dst: dst.dim(),
            });
        }
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = matrix.apply(src.bracket_basis(i, j));
                let rhs = dst.bracket(&matrix.column(i), &matrix.column(j));
                if lhs != rhs {
                    return Err(MorphismError::BracketNotPreserved(i, j));
                }
            }
        }
        let f_alpha = matrix.mul(src.alpha());
        let alpha_f = dst.alpha().mul(&matrix);
        for j in 0..src.dim() {
            if f_alpha.column(j) != alpha_f.column(j) {
                return Err(MorphismError::AlphaNotIntertwined(j));
            }
        }
        Ok(Hom {
            src: src.clone(),
            dst: dst.clone(),
            matrix,
        })
    }

    pub fn identity(alg: &HomAlgebra) -> Hom {
        Hom {
            src: alg.clone(),
            dst: alg.clone(),
            matrix: Matrix::identity(alg.dim()),
        }
    }

    pub fn src(&self) -> &HomAlgebra {
        &self.src
    }

    pub fn dst(&self) -> &HomAlgebra {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[crate::scalar::Scalar]) -> Vec<crate::scalar::Scalar> {
        self.matrix.apply(v)
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.dst.dim()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::kernel(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.matrix)
    }

    /// `self . inner`, defined when the codomain of `inner` is the domain of
    /// `self`.
    pub fn compose(&self, inner: &Hom) -> Result<Hom, MorphismError> {
        if inner.dst != self.src {
            return Err(MorphismError::ComposeMismatch);
        }
        Ok(Hom {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pi_and_rho_are_homomorphisms() {
        let l = catalog::counterexample_l();
        let k = catalog::counterexample_k();
        let f = catalog::counterexample_f_literal();
        let pi = Hom::new(&k, &l, catalog::pi_matrix()).unwrap();
        assert!(pi.is_surjective());
        assert_eq!(pi.kernel().dim(), 1);
        let rho = Hom::new(&f, &k, catalog::rho_matrix()).unwrap();
        assert!(rho.is_surjective());
        // rho stays a homomorphism after the repair bracket is added
        let fr = catalog::counterexample_f_repaired();
        assert!(Hom::new(&fr, &k, catalog::rho_matrix()).is_ok());
    }

    #[test]
    fn composition_matches_matrix_product() {
        let l = catalog::counterexample_l();
        let k = catalog::counterexample_k();
        let f = catalog::counterexample_f_literal();
        let pi = Hom::new(&k, &l, catalog::pi_matrix()).unwrap();
        let rho = Hom::new(&f, &k, catalog::rho_matrix()).unwrap();
        let comp = pi.compose(&rho).unwrap();
        assert_eq!(comp.matrix(), &catalog::pi_matrix().mul(&catalog::rho_matrix()));
        assert!(pi.compose(&pi).is_err());
    }

    #[test]
    fn bracket_violations_are_rejected() {
        let l = catalog::counterexample_l();
        let k = catalog::counterexample_k();
        // swap the images: a2 -> b2, a3 -> b1 breaks the bracket
        let bad = Matrix::from_ints(&[&[0, 0, 1], &[0, 1, 0]]);
        assert!(matches!(
            Hom::new(&k, &l, bad),
            Err(MorphismError::BracketNotPreserved(..))
        ));
    }

    #[test]
    fn alpha_intertwining_is_checked() {
        let a = crate::algebra::HomAlgebra::abelian(1, Matrix::identity(1), crate::algebra::Flavor::Leibniz);
        let b = crate::algebra::HomAlgebra::abelian(1, Matrix::zero(1, 1), crate::algebra::Flavor::Leibniz);
        assert!(matches!(
            Hom::new(&a, &b, Matrix::identity(1)),
            Err(MorphismError::AlphaNotIntertwined(0))
        ));
    }
}
