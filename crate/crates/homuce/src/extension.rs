//! Extensions of Hom-Leibniz algebras: surjective homomorphisms with their
//! kernel and centrality classification, composition, pullbacks, and a
//! decision procedure for split sections.
//!
//! An extension is central when its kernel brackets to zero with the whole
//! source on both sides, and alpha-central when only the twist image of the
//! kernel has to. Central always implies alpha-central; the two notions
//! coincide for an identity twist.

use thiserror::Error;

use crate::algebra::HomAlgebra;
use crate::matrix::{unit_vec, vec_is_zero, Matrix};
use crate::morphism::{Hom, MorphismError};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Centrality {
    Central,
    AlphaCentralOnly,
    Neither,
}

impl Centrality {
    pub fn is_central(self) -> bool {
        self == Centrality::Central
    }

    pub fn is_alpha_central(self) -> bool {
        self != Centrality::Neither
    }
}

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error("projection is not surjective (rank {rank} < dim {dim})")]
    NotSurjective { rank: usize, dim: usize },
    #[error("underlying map is not a homomorphism: {0}")]
    NotAHomomorphism(#[from] MorphismError),
    #[error("outer source and inner destination differ")]
    CompositionMismatch,
}

/// A surjective homomorphism with its kernel and centrality class.
#[derive(Clone, Debug)]
pub struct Extension {
    pi: Hom,
    kernel: Subspace,
    classification: Centrality,
}

impl Extension {
    pub fn new(pi: Hom) -> Result<Extension, ExtensionError> {
        let rank = pi.matrix().rank();
        if rank != pi.dst().dim() {
            return Err(ExtensionError::NotSurjective {
                rank,
                dim: pi.dst().dim(),
            });
        }
        let kernel = pi.kernel();
        let classification = classify(pi.src(), &kernel);
        Ok(Extension {
            pi,
            kernel,
            classification,
        })
    }

    pub fn from_matrix(
        src: &HomAlgebra,
        dst: &HomAlgebra,
        matrix: Matrix,
    ) -> Result<Extension, ExtensionError> {
        Ok(Extension::new(Hom::new(src, dst, matrix)?)?)
    }

    pub fn identity(alg: &HomAlgebra) -> Extension {
        Extension::new(Hom::identity(alg)).expect("identity is surjective")
    }

    pub fn pi(&self) -> &Hom {
        &self.pi
    }

    pub fn src(&self) -> &HomAlgebra {
        self.pi.src()
    }

    pub fn dst(&self) -> &HomAlgebra {
        self.pi.dst()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn classification(&self) -> Centrality {
        self.classification
    }

    /// Extension of the composed projection `outer . inner`.
    pub fn compose(outer: &Extension, inner: &Extension) -> Result<Extension, ExtensionError> {
        let composed = outer
            .pi
            .compose(&inner.pi)
            .map_err(|_| ExtensionError::CompositionMismatch)?;
        Extension::new(composed)
    }
}

/// Kernel-based classification, checked on kernel basis against all algebra
/// basis vectors.
fn classify(src: &HomAlgebra, kernel: &Subspace) -> Centrality {
    if brackets_vanish(src, &kernel.basis_rows()) {
        return Centrality::Central;
    }
    let twisted: Vec<Vec<Scalar>> = kernel
        .basis_rows()
        .into_iter()
        .map(|v| src.apply_alpha(&v))
        .collect();
    if brackets_vanish(src, &twisted) {
        Centrality::AlphaCentralOnly
    } else {
        Centrality::Neither
    }
}

fn brackets_vanish(alg: &HomAlgebra, vectors: &[Vec<Scalar>]) -> bool {
    let dim = alg.dim();
    vectors.iter().all(|v| {
        (0..dim).all(|j| {
            let ej = unit_vec(dim, j);
            vec_is_zero(&alg.bracket(v, &ej)) && vec_is_zero(&alg.bracket(&ej, v))
        })
    })
}

/// The fibre product of two maps onto the same base, as an algebra, together
/// with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub algebra: HomAlgebra,
    /// Projection onto the source of the first map.
    pub onto_first: Hom,
    /// Projection onto the source of the second map.
    pub onto_second: Hom,
}

#[derive(Debug, Error)]
pub enum PullbackError {
    #[error("the two maps do not share a codomain")]
    BaseMismatch,
    #[error("fibre product is not closed under the bracket")]
    NotClosed,
    #[error("projection failed validation: {0}")]
    BadProjection(#[from] MorphismError),
}

/// `P = {(a, k) | tau(a) = pi(k)}` inside the direct product, with
/// componentwise twist.
pub fn pullback(tau: &Hom, pi: &Hom) -> Result<Pullback, PullbackError> {
    if tau.dst() != pi.dst() {
        return Err(PullbackError::BaseMismatch);
    }
    let a = tau.src();
    let k = pi.src();
    let prod = a.direct_product(k);
    let condition = tau.matrix().hstack(&pi.matrix().neg());
    let fibre = Subspace::kernel(&condition);
    let pdim = fibre.dim();

    // restrict the product bracket and twist to the fibre subspace
    let basis = fibre.basis_rows();
    let labels = (1..=pdim).map(|i| format!("p{i}")).collect();
    let mut alpha = Matrix::zero(pdim, pdim);
    for (s, w) in basis.iter().enumerate() {
        let img = prod.apply_alpha(w);
        let coords = fibre.coordinates(&img).ok_or(PullbackError::NotClosed)?;
        alpha.set_column(s, &coords);
    }
    let mut algebra = HomAlgebra::zero_bracket(labels, alpha, prod.flavor());
    for (s, ws) in basis.iter().enumerate() {
        for (t, wt) in basis.iter().enumerate() {
            let img = prod.bracket(ws, wt);
            let coords = fibre.coordinates(&img).ok_or(PullbackError::NotClosed)?;
            algebra.set_bracket(s, t, coords);
        }
    }

    let adim = a.dim();
    let first = Matrix::from_fn(adim, pdim, |i, s| basis[s][i].clone());
    let second = Matrix::from_fn(k.dim(), pdim, |i, s| basis[s][adim + i].clone());
    Ok(Pullback {
        onto_first: Hom::new(&algebra, a, first)?,
        onto_second: Hom::new(&algebra, k, second)?,
        algebra,
    })
}

/// Result of searching for a homomorphism section of a surjection.
#[derive(Clone, Debug)]
pub enum SectionSearch {
    Found(Hom),
    NotSplit,
    /// The bracket constraints stay quadratic in the remaining degrees of
    /// freedom; the linear decision procedure does not apply.
    Undetermined,
}

/// Searches for a homomorphism `sigma` with `rho . sigma = id` by solving
/// the linear constraints (section condition and twist compatibility) and
/// then deciding the bracket constraints on the affine solution set. When
/// the bracket constraints remain genuinely quadratic in the free
/// parameters, reports `Undetermined` instead of guessing.
pub fn find_section(rho: &Hom) -> SectionSearch {
    let src = rho.src(); // F
    let dst = rho.dst(); // K
    let (fd, kd) = (src.dim(), dst.dim());
    let unknowns = fd * kd; // sigma: K -> F, column-major entries s[(i, j)]
    let entry = |i: usize, j: usize| i * kd + j;

    // linear system rows over the unknowns
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // rho . sigma = id
    for r in 0..kd {
        for j in 0..kd {
            let mut row = vec![Scalar::zero(); unknowns];
            for i in 0..fd {
                row[entry(i, j)] = rho.matrix()[(r, i)].clone();
            }
            rows.push(row);
            rhs.push(if r == j { Scalar::one() } else { Scalar::zero() });
        }
    }
    // sigma . alpha_K = alpha_F . sigma
    for r in 0..fd {
        for j in 0..kd {
            let mut row = vec![Scalar::zero(); unknowns];
            for i in 0..kd {
                row[entry(r, i)] += &dst.alpha()[(i, j)];
            }
            for i in 0..fd {
                row[entry(i, j)] -= &src.alpha()[(r, i)];
            }
            rows.push(row);
            rhs.push(Scalar::zero());
        }
    }
    let system = Matrix::from_rows(rows);
    let Some(particular) = system.solve(&rhs) else {
        return SectionSearch::NotSplit;
    };
    let freedom = system.kernel_basis();

    let as_matrix = |flat: &[Scalar]| Matrix::from_fn(fd, kd, |i, j| flat[entry(i, j)].clone());
    let bracket_defect = |m: &Matrix| -> Vec<Vec<Scalar>> {
        let mut defects = Vec::new();
        for i in 0..kd {
            for j in 0..kd {
                let lhs = m.apply(dst.bracket_basis(i, j));
                let rhs = src.bracket(&m.column(i), &m.column(j));
                defects.push(crate::matrix::vec_sub(&lhs, &rhs));
            }
        }
        defects
    };

    let sigma0 = as_matrix(&particular);
    if bracket_defect(&sigma0).iter().all(|d| vec_is_zero(d)) {
        return match Hom::new(dst, src, sigma0) {
            Ok(h) => SectionSearch::Found(h),
            Err(_) => SectionSearch::Undetermined,
        };
    }
    if freedom.is_empty() {
        return SectionSearch::NotSplit;
    }

    // The defect of sigma0 + sum t_a N_a is affine in t exactly when all the
    // cross terms [N_a x, N_b y] vanish.
    let nullmats: Vec<Matrix> = freedom.iter().map(|f| as_matrix(f)).collect();
    for na in &nullmats {
        for nb in &nullmats {
            for i in 0..kd {
                for j in 0..kd {
                    if !vec_is_zero(&src.bracket(&na.column(i), &nb.column(j))) {
                        return SectionSearch::Undetermined;
                    }
                }
            }
        }
    }
    // solve the now-linear bracket constraints in the free parameters
    let base_defect = bracket_defect(&sigma0);
    let mut lin_rows: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); nullmats.len()]; base_defect.len() * fd];
    let mut lin_rhs: Vec<Scalar> = Vec::with_capacity(base_defect.len() * fd);
    for d in &base_defect {
        for c in d {
            lin_rhs.push(-c);
        }
    }
    for (a, na) in nullmats.iter().enumerate() {
        let mut pair_idx = 0;
        for i in 0..kd {
            for j in 0..kd {
                // contribution of t_a to the (i,j) defect:
                // N_a [e_i,e_j] - [N_a e_i, sigma0 e_j] - [sigma0 e_i, N_a e_j]
                let mut contrib = na.apply(dst.bracket_basis(i, j));
                let c1 = src.bracket(&na.column(i), &sigma0.column(j));
                let c2 = src.bracket(&sigma0.column(i), &na.column(j));
                for ((x, y), z) in contrib.iter_mut().zip(&c1).zip(&c2) {
                    *x -= y;
                    *x -= z;
                }
                for (r, v) in contrib.into_iter().enumerate() {
                    lin_rows[pair_idx * fd + r][a] = v;
                }
                pair_idx += 1;
            }
        }
    }
    match Matrix::from_rows(lin_rows).solve(&lin_rhs) {
        None => SectionSearch::NotSplit,
        Some(t) => {
            let mut flat = particular;
            for (ta, f) in t.iter().zip(&freedom) {
                for (x, y) in flat.iter_mut().zip(f) {
                    let add = ta * y;
                    *x += &add;
                }
            }
            match Hom::new(dst, src, as_matrix(&flat)) {
                Ok(h) => SectionSearch::Found(h),
                Err(_) => SectionSearch::Undetermined,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pi() -> Hom {
        Hom::new(
            &catalog::counterexample_k(),
            &catalog::counterexample_l(),
            catalog::pi_matrix(),
        )
        .unwrap()
    }

    fn rho_literal() -> Hom {
        Hom::new(
            &catalog::counterexample_f_literal(),
            &catalog::counterexample_k(),
            catalog::rho_matrix(),
        )
        .unwrap()
    }

    fn rho_repaired() -> Hom {
        Hom::new(
            &catalog::counterexample_f_repaired(),
            &catalog::counterexample_k(),
            catalog::rho_matrix(),
        )
        .unwrap()
    }

    #[test]
    fn pi_and_rho_are_central() {
        let e = Extension::new(pi()).unwrap();
        assert_eq!(e.classification(), Centrality::Central);
        assert_eq!(e.kernel().dim(), 1);
        let e = Extension::new(rho_literal()).unwrap();
        assert_eq!(e.classification(), Centrality::Central);
        let e = Extension::new(rho_repaired()).unwrap();
        assert_eq!(e.classification(), Centrality::Central);
    }

    #[test]
    fn identity_extension_is_central_with_zero_kernel() {
        let l = catalog::counterexample_l();
        let e = Extension::identity(&l);
        assert_eq!(e.classification(), Centrality::Central);
        assert_eq!(e.kernel().dim(), 0);
    }

    #[test]
    fn non_surjective_is_rejected() {
        let l = catalog::counterexample_l();
        let zero2 = HomAlgebra::abelian(2, Matrix::zero(2, 2), crate::algebra::Flavor::Leibniz);
        let incl = Hom::new(&zero2, &l, Matrix::from_ints(&[&[1, 0], &[0, 0]])).unwrap();
        assert!(matches!(
            Extension::new(incl),
            Err(ExtensionError::NotSurjective { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn literal_composition_is_central_because_the_center_is_larger() {
        // the kernel is span{e1, e2}, and with the brackets as literally
        // stated that entire plane is central
        let outer = Extension::new(pi()).unwrap();
        let inner = Extension::new(rho_literal()).unwrap();
        let comp = Extension::compose(&outer, &inner).unwrap();
        assert_eq!(comp.kernel().dim(), 2);
        assert!(comp.kernel().contains(&unit_vec(4, 0)));
        assert!(comp.kernel().contains(&unit_vec(4, 1)));
        assert_eq!(comp.classification(), Centrality::Central);
    }

    #[test]
    fn repaired_composition_is_alpha_central_only() {
        let outer = Extension::new(pi()).unwrap();
        let inner = Extension::new(rho_repaired()).unwrap();
        let comp = Extension::compose(&outer, &inner).unwrap();
        assert_eq!(comp.kernel().dim(), 2);
        assert_eq!(comp.classification(), Centrality::AlphaCentralOnly);
    }

    #[test]
    fn compose_identity_is_identity() {
        let l = catalog::counterexample_l();
        let id = Extension::identity(&l);
        let comp = Extension::compose(&id, &id).unwrap();
        assert_eq!(comp.classification(), Centrality::Central);
        assert!(comp.pi().matrix().is_identity());
    }

    #[test]
    fn centrality_implies_alpha_centrality_on_fixtures() {
        for ext in [
            Extension::new(pi()).unwrap(),
            Extension::new(rho_literal()).unwrap(),
            Extension::new(rho_repaired()).unwrap(),
        ] {
            if ext.classification().is_central() {
                assert!(ext.classification().is_alpha_central());
                let twisted: Vec<_> = ext
                    .kernel()
                    .basis_rows()
                    .into_iter()
                    .map(|v| ext.src().apply_alpha(&v))
                    .collect();
                assert!(brackets_vanish(ext.src(), &twisted));
            }
        }
    }

    #[test]
    fn pullback_of_identity_pair_is_diagonal() {
        let l = catalog::counterexample_l();
        let id = Hom::identity(&l);
        let p = pullback(&id, &id).unwrap();
        assert_eq!(p.algebra.dim(), 2);
        assert_eq!(p.onto_first.matrix(), p.onto_second.matrix());
    }

    #[test]
    fn pullback_along_identity_is_the_graph() {
        let p = pullback(&pi(), &Hom::identity(&catalog::counterexample_l())).unwrap();
        assert_eq!(p.algebra.dim(), 3);
        assert!(p.onto_first.is_surjective());
        assert!(p.algebra.validate().is_valid());
    }

    #[test]
    fn pullback_of_pi_with_itself() {
        let p = pullback(&pi(), &pi()).unwrap();
        assert_eq!(p.algebra.dim(), 4, "2 dim K - dim L");
        assert!(p.algebra.validate().is_valid());
        // pulling back the central tau = pi along pi gives a central
        // extension over K
        let ext = Extension::new(p.onto_second).unwrap();
        assert_eq!(ext.classification(), Centrality::Central);
    }

    #[test]
    fn rho_splits_with_the_obvious_section() {
        // sigma(a_i) = e_(i+1) is a homomorphism section of rho
        match find_section(&rho_literal()) {
            SectionSearch::Found(sigma) => {
                let composed = rho_literal().compose(&sigma).unwrap();
                assert!(composed.matrix().is_identity());
            }
            other => panic!("expected a section, got {other:?}"),
        }
    }

    #[test]
    fn direct_product_projection_splits() {
        let l = catalog::counterexample_l();
        let a = HomAlgebra::abelian(1, Matrix::zero(1, 1), crate::algebra::Flavor::Leibniz);
        let prod = a.direct_product(&l);
        let proj = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1]]);
        let rho = Hom::new(&prod, &l, proj).unwrap();
        assert!(matches!(find_section(&rho), SectionSearch::Found(_)));
    }

    use crate::algebra::HomAlgebra;
    use crate::matrix::unit_vec;
}
