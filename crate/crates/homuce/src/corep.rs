//! Hom-co-representations: the coefficient modules `(M, lambda, rho, alpha_M)`
//! for the homology of a Hom-Leibniz algebra.
//!
//! The left action is stored as one `mdim x mdim` matrix per algebra basis
//! vector: `lam[i]` sends `m` to `e_i . m`, and `rho[i]` sends `m` to
//! `m . e_i`. Construction validates the five compatibility axioms plus the
//! derived anticommutation identity on all basis tuples.

use thiserror::Error;

use crate::algebra::HomAlgebra;
use crate::matrix::{vec_add, vec_sub, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct HomCoRep {
    algebra: HomAlgebra,
    mdim: usize,
    lam: Vec<Matrix>,
    rho: Vec<Matrix>,
    alpha_m: Matrix,
}

/// Which corepresentation axiom failed, on which basis tuple.
#[derive(Clone, Debug)]
pub struct AxiomWitness {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Error)]
pub enum CorepError {
    #[error("corepresentation axiom {} fails on basis tuple {:?}", .0.axiom, .0.indices)]
    AxiomViolation(AxiomWitness),
    #[error("action matrix shapes do not match the algebra and module dimensions")]
    ShapeMismatch,
}

impl HomCoRep {
    /// Validating constructor from raw action data.
    pub fn new(
        algebra: HomAlgebra,
        lam: Vec<Matrix>,
        rho: Vec<Matrix>,
        alpha_m: Matrix,
    ) -> Result<HomCoRep, CorepError> {
        let dim = algebra.dim();
        let mdim = alpha_m.rows();
        if alpha_m.cols() != mdim
            || lam.len() != dim
            || rho.len() != dim
            || lam.iter().any(|m| m.rows() != mdim || m.cols() != mdim)
            || rho.iter().any(|m| m.rows() != mdim || m.cols() != mdim)
        {
            return Err(CorepError::ShapeMismatch);
        }
        let corep = HomCoRep {
            algebra,
            mdim,
            lam,
            rho,
            alpha_m,
        };
        match corep.validate().into_iter().next() {
            None => Ok(corep),
            Some(w) => Err(CorepError::AxiomViolation(w)),
        }
    }

    /// Trivial coefficients: both actions zero. Every choice of `alpha_m`
    /// satisfies the axioms vacuously.
    pub fn trivial(algebra: &HomAlgebra, alpha_m: Matrix) -> HomCoRep {
        let mdim = alpha_m.rows();
        assert_eq!(alpha_m.cols(), mdim);
        HomCoRep {
            algebra: algebra.clone(),
            mdim,
            lam: vec![Matrix::zero(mdim, mdim); algebra.dim()],
            rho: vec![Matrix::zero(mdim, mdim); algebra.dim()],
            alpha_m,
        }
    }

    /// The one-dimensional trivial coefficients with identity twist — the
    /// ground field as a coefficient module.
    pub fn ground_field(algebra: &HomAlgebra) -> HomCoRep {
        HomCoRep::trivial(algebra, Matrix::identity(1))
    }

    /// The algebra acting on itself: `x . m = -[m, x]` and `m . x = [m, x]`,
    /// with the module twist equal to the algebra twist.
    pub fn self_corep(algebra: &HomAlgebra) -> Result<HomCoRep, CorepError> {
        let dim = algebra.dim();
        let mut lam = Vec::with_capacity(dim);
        let mut rho = Vec::with_capacity(dim);
        for i in 0..dim {
            // column j of rho[i] is [e_j, e_i]; lam[i] is its negative
            let mut r = Matrix::zero(dim, dim);
            for j in 0..dim {
                r.set_column(j, algebra.bracket_basis(j, i));
            }
            lam.push(r.neg());
            rho.push(r);
        }
        HomCoRep::new(algebra.clone(), lam, rho, algebra.alpha().clone())
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn alpha_m(&self) -> &Matrix {
        &self.alpha_m
    }

    pub fn lam(&self) -> &[Matrix] {
        &self.lam
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn is_trivial(&self) -> bool {
        self.lam.iter().all(Matrix::is_zero) && self.rho.iter().all(Matrix::is_zero)
    }

    /// `x . m` for coefficient vectors.
    pub fn act_left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.act(&self.lam, x, m)
    }

    /// `m . x` for coefficient vectors.
    pub fn act_right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.act(&self.rho, x, m)
    }

    fn act(&self, table: &[Matrix], x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.algebra.dim());
        assert_eq!(m.len(), self.mdim);
        let mut out = vec![Scalar::zero(); self.mdim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let part = table[i].apply(m);
            for (o, p) in out.iter_mut().zip(part) {
                let t = xi * &p;
                *o += &t;
            }
        }
        out
    }

    /// Checks the five axioms and the derived anticommutation identity on all
    /// basis tuples; returns every violation found.
    pub fn validate(&self) -> Vec<AxiomWitness> {
        let dim = self.algebra.dim();
        let mut failures = Vec::new();
        let mut record = |axiom, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
            if lhs != rhs {
                failures.push(AxiomWitness {
                    axiom,
                    indices,
                    lhs,
                    rhs,
                });
            }
        };
        let alg = &self.algebra;
        for x in 0..dim {
            let ax = alg.alpha_column(x);
            let ex = crate::matrix::unit_vec(dim, x);
            for m in 0..self.mdim {
                let em = crate::matrix::unit_vec(self.mdim, m);
                let am = self.alpha_m.column(m);
                // axiom 4: alpha_M(x.m) = alpha_L(x) . alpha_M(m)
                record(
                    "axiom-4",
                    vec![x, m],
                    self.alpha_m.apply(&self.act_left(&ex, &em)),
                    self.act_left(&ax, &am),
                );
                // axiom 5: alpha_M(m.x) = alpha_M(m) . alpha_L(x)
                record(
                    "axiom-5",
                    vec![x, m],
                    self.alpha_m.apply(&self.act_right(&em, &ex)),
                    self.act_right(&am, &ax),
                );
                for y in 0..dim {
                    let ay = alg.alpha_column(y);
                    let ey = crate::matrix::unit_vec(dim, y);
                    let bxy = alg.bracket_basis(x, y);
                    // axiom 1: [x,y].alpha_M(m) = alpha(x).(y.m) - alpha(y).(x.m)
                    record(
                        "axiom-1",
                        vec![x, y, m],
                        self.act_left(bxy, &am),
                        vec_sub(
                            &self.act_left(&ax, &self.act_left(&ey, &em)),
                            &self.act_left(&ay, &self.act_left(&ex, &em)),
                        ),
                    );
                    // axiom 2: alpha(y).(m.x) = (y.m).alpha(x) - alpha_M(m).[x,y]
                    record(
                        "axiom-2",
                        vec![x, y, m],
                        self.act_left(&ay, &self.act_right(&em, &ex)),
                        vec_sub(
                            &self.act_right(&self.act_left(&ey, &em), &ax),
                            &self.act_right(&am, bxy),
                        ),
                    );
                    // axiom 3: (m.x).alpha(y) = alpha_M(m).[x,y] - (y.m).alpha(x)
                    record(
                        "axiom-3",
                        vec![x, y, m],
                        self.act_right(&self.act_right(&em, &ex), &ay),
                        vec_sub(
                            &self.act_right(&am, bxy),
                            &self.act_right(&self.act_left(&ey, &em), &ax),
                        ),
                    );
                    // derived identity: alpha(y).(m.x) + (m.x).alpha(y) = 0
                    let mx = self.act_right(&em, &ex);
                    record(
                        "anticommutation",
                        vec![x, y, m],
                        vec_add(&self.act_left(&ay, &mx), &self.act_right(&mx, &ay)),
                        vec![Scalar::zero(); self.mdim],
                    );
                }
            }
        }
        failures
    }

    /// `M_L = span{ m . l }`, the defect space of the zeroth homology.
    pub fn action_image(&self) -> crate::subspace::Subspace {
        let mut rows = Vec::new();
        for r in &self.rho {
            rows.extend(r.transpose().row_vecs());
        }
        crate::subspace::Subspace::from_rows(self.mdim, rows)
    }

    /// Corrupts one left-action entry; used to demonstrate that the operator
    /// identity checks actually detect invalid coefficients.
    pub fn corrupted(&self, i: usize, row: usize, col: usize, delta: Scalar) -> HomCoRep {
        let mut lam = self.lam.clone();
        let cur = lam[i][(row, col)].clone();
        lam[i][(row, col)] = &cur + &delta;
        HomCoRep {
            algebra: self.algebra.clone(),
            mdim: self.mdim,
            lam,
            rho: self.rho.clone(),
            alpha_m: self.alpha_m.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::matrix::{unit_vec, vec_is_zero};

    #[test]
    fn trivial_corep_always_validates() {
        let k = catalog::counterexample_k();
        for alpha_m in [Matrix::identity(2), Matrix::zero(2, 2), Matrix::from_ints(&[&[1, 2], &[0, 1]])] {
            let c = HomCoRep::trivial(&k, alpha_m);
            assert!(c.validate().is_empty());
        }
        // zero-dimensional coefficients are legal and give an empty complex
        let c = HomCoRep::trivial(&k, Matrix::zero(0, 0));
        assert_eq!(c.mdim(), 0);
        assert!(c.validate().is_empty());
    }

    #[test]
    fn self_corep_of_counterexample_k() {
        let k = catalog::counterexample_k();
        let c = HomCoRep::self_corep(&k).unwrap();
        assert!(c.validate().is_empty());
        // a1 is central, so it acts and is acted on by zero
        let a1 = unit_vec(3, 0);
        for j in 0..3 {
            let ej = unit_vec(3, j);
            assert!(vec_is_zero(&c.act_left(&a1, &ej)));
            assert!(vec_is_zero(&c.act_right(&a1, &ej)));
            assert!(vec_is_zero(&c.act_left(&ej, &a1)));
        }
        // m . x = [m, x]: check one nonzero instance, [a3, a2] = a3
        assert_eq!(c.act_right(&unit_vec(3, 2), &unit_vec(3, 1)), unit_vec(3, 2));
        // x . m = -[m, x]
        assert_eq!(
            c.act_left(&unit_vec(3, 1), &unit_vec(3, 2)),
            crate::matrix::vec_neg(&unit_vec(3, 2))
        );
    }

    #[test]
    fn self_corep_of_abelian_is_trivial() {
        let a = crate::algebra::HomAlgebra::abelian(2, Matrix::identity(2), crate::algebra::Flavor::Leibniz);
        let c = HomCoRep::self_corep(&a).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn self_corep_of_sqrt2_example_validates() {
        let c = HomCoRep::self_corep(&catalog::sqrt2_example()).unwrap();
        assert!(c.validate().is_empty());
    }

    #[test]
    fn corrupted_corep_fails_validation() {
        // needs a nonzero twist: alpha = 0 satisfies every axiom vacuously
        let l = catalog::sqrt2_example();
        let c = HomCoRep::self_corep(&l).unwrap();
        let bad = c.corrupted(1, 0, 0, Scalar::one());
        assert!(bad.validate().iter().any(|w| w.axiom == "axiom-1"));
    }

    #[test]
    fn action_image_of_self_corep_is_derived_subalgebra() {
        let k = catalog::counterexample_k();
        let c = HomCoRep::self_corep(&k).unwrap();
        assert_eq!(c.action_image(), k.derived());
    }
}
