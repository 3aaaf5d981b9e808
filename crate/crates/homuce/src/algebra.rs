//! Hom-Leibniz and Hom-Lie algebras given by structure constants and a
//! twisting endomorphism.
//!
//! The bracket is stored as constants `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`, and the twisting map `alpha` is a
//! matrix whose j-th column is the image of `e_j`. Nothing is assumed about
//! the constants: [`HomAlgebra::validate`] checks the twisted Leibniz
//! identity, multiplicativity of the twist, and (for the lie flavor) the
//! alternating property, reporting every violated instance.

use serde::Serialize;
use thiserror::Error;

use crate::matrix::{unit_vec, vec_add, vec_is_zero, vec_scale, Matrix};
use crate::scalar::Scalar;
use crate::subspace::{QuotientSpace, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    Leibniz,
    Lie,
}

#[derive(Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    labels: Vec<String>,
    /// Structure constants, layout `((i * dim) + j) * dim + k`.
    constants: Vec<Scalar>,
    alpha: Matrix,
    flavor: Flavor,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("map is not a bracket endomorphism: fails on basis pair ({0}, {1})")]
    NotEndomorphism(usize, usize),
    #[error("twist requires the base algebra to carry the identity twisting map")]
    TwistBaseNotClassical,
    #[error("subspace is not a two-sided Hom-ideal")]
    NotAnIdeal,
}

/// One violated identity instance, with the two sides that disagree.
#[derive(Clone, Debug)]
pub struct Violation {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of checking the defining identities on all basis tuples.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub is_hom_leibniz: bool,
    pub is_multiplicative: bool,
    pub is_hom_lie: bool,
    pub failures: Vec<Violation>,
}

impl ValidationReport {
    /// All checks demanded by the algebra's flavor hold.
    pub fn is_valid(&self) -> bool {
        self.is_hom_leibniz && self.is_multiplicative && self.is_hom_lie
    }
}

/// Result of [`HomAlgebra::quotient_algebra`]: the quotient algebra together
/// with the linear data of the projection.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: HomAlgebra,
    pub space: QuotientSpace,
}

impl std::fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "HomAlgebra(dim {}, {:?})", self.dim(), self.flavor)?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let v = self.bracket_basis(i, j);
                if !vec_is_zero(v) {
                    writeln!(
                        f,
                        "  [{},{}] = {}",
                        self.labels[i],
                        self.labels[j],
                        self.format_vector(v)
                    )?;
                }
            }
        }
        write!(f, "  alpha: {:?}", self.alpha)
    }
}

impl HomAlgebra {
    /// Builds an algebra with all brackets zero; fill them in with
    /// [`HomAlgebra::set_bracket`].
    pub fn zero_bracket(labels: Vec<String>, alpha: Matrix, flavor: Flavor) -> Self {
        let dim = labels.len();
        assert_eq!(alpha.rows(), dim);
        assert_eq!(alpha.cols(), dim);
        HomAlgebra {
            labels,
            constants: vec![Scalar::zero(); dim * dim * dim],
            alpha,
            flavor,
        }
    }

    pub fn abelian(dim: usize, alpha: Matrix, flavor: Flavor) -> Self {
        let labels = (1..=dim).map(|i| format!("a{i}")).collect();
        HomAlgebra::zero_bracket(labels, alpha, flavor)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        let dim = self.dim();
        assert_eq!(value.len(), dim);
        self.constants[(i * dim + j) * dim..(i * dim + j + 1) * dim].clone_from_slice(&value);
    }

    /// Convenience: `[e_i, e_j] = e_k`.
    pub fn set_bracket_unit(&mut self, i: usize, j: usize, k: usize) {
        let v = unit_vec(self.dim(), k);
        self.set_bracket(i, j, v);
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn alpha_is_identity(&self) -> bool {
        self.alpha.is_identity()
    }

    pub fn apply_alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply(v)
    }

    pub fn alpha_column(&self, j: usize) -> Vec<Scalar> {
        self.alpha.column(j)
    }

    /// `[e_i, e_j]` as a coefficient slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let dim = self.dim();
        &self.constants[(i * dim + j) * dim..(i * dim + j + 1) * dim]
    }

    /// Bilinear bracket of coefficient vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        assert!(x.len() == dim && y.len() == dim);
        let mut out = vec![Scalar::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let t = &coeff * c;
                    out[k] += &t;
                }
            }
        }
        out
    }

    /// Renders a coefficient vector as a readable combination of labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("({})*{}", c.to_text(), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Checks the Hom-Leibniz identity on all basis triples, multiplicativity
    /// of the twist on all pairs, and the alternating property when the
    /// flavor is lie. Violations are data, not errors.
    pub fn validate(&self) -> ValidationReport {
        let dim = self.dim();
        let mut failures = Vec::new();
        let mut is_hom_leibniz = true;
        for i in 0..dim {
            let ai = self.alpha_column(i);
            for j in 0..dim {
                for k in 0..dim {
                    // [alpha(e_i), [e_j, e_k]] = [[e_i,e_j], alpha(e_k)] - [[e_i,e_k], alpha(e_j)]
                    let lhs = self.bracket(&ai, self.bracket_basis(j, k));
                    let t1 = self.bracket(self.bracket_basis(i, j), &self.alpha_column(k));
                    let t2 = self.bracket(self.bracket_basis(i, k), &self.alpha_column(j));
                    let rhs = vec_add(&t1, &vec_scale(&-Scalar::one(), &t2));
                    if lhs != rhs {
                        is_hom_leibniz = false;
                        failures.push(Violation {
                            identity: "hom-leibniz",
                            indices: vec![i, j, k],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        let mut is_multiplicative = true;
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.apply_alpha(self.bracket_basis(i, j));
                let rhs = self.bracket(&self.alpha_column(i), &self.alpha_column(j));
                if lhs != rhs {
                    is_multiplicative = false;
                    failures.push(Violation {
                        identity: "multiplicative",
                        indices: vec![i, j],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        let mut is_hom_lie = true;
        if self.flavor == Flavor::Lie {
            // [x,x] = 0 for all x; by polarization in characteristic zero this
            // is c_ii = 0 together with c_ij + c_ji = 0.
            for i in 0..dim {
                if !vec_is_zero(self.bracket_basis(i, i)) {
                    is_hom_lie = false;
                    failures.push(Violation {
                        identity: "alternating",
                        indices: vec![i, i],
                        lhs: self.bracket_basis(i, i).to_vec(),
                        rhs: vec![Scalar::zero(); dim],
                    });
                }
                for j in (i + 1)..dim {
                    let sym = vec_add(self.bracket_basis(i, j), self.bracket_basis(j, i));
                    if !vec_is_zero(&sym) {
                        is_hom_lie = false;
                        failures.push(Violation {
                            identity: "alternating",
                            indices: vec![i, j],
                            lhs: sym,
                            rhs: vec![Scalar::zero(); dim],
                        });
                    }
                }
            }
        }
        ValidationReport {
            is_hom_leibniz,
            is_multiplicative,
            is_hom_lie,
            failures,
        }
    }

    /// The twist construction: given a classical algebra (identity twisting
    /// map) and a bracket endomorphism `f`, forms `[x,y]' = [f(x), f(y)]`
    /// with twisting map `f`. The result is multiplicative by construction.
    pub fn twist(&self, f: &Matrix) -> Result<HomAlgebra, AlgebraError> {
        if !self.alpha_is_identity() {
            return Err(AlgebraError::TwistBaseNotClassical);
        }
        let dim = self.dim();
        assert!(f.rows() == dim && f.cols() == dim);
        for i in 0..dim {
            for j in 0..dim {
                let lhs = f.apply(self.bracket_basis(i, j));
                let rhs = self.bracket(&f.column(i), &f.column(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotEndomorphism(i, j));
                }
            }
        }
        let mut out = HomAlgebra::zero_bracket(self.labels.clone(), f.clone(), self.flavor);
        for i in 0..dim {
            for j in 0..dim {
                out.set_bracket(i, j, self.bracket(&f.column(i), &f.column(j)));
            }
        }
        Ok(out)
    }

    /// Span of `{[h, k]}` over basis vectors of the two subspaces;
    /// bilinearity makes basis pairs sufficient.
    pub fn commutator(&self, h: &Subspace, k: &Subspace) -> Subspace {
        assert_eq!(h.ambient_dim(), self.dim());
        assert_eq!(k.ambient_dim(), self.dim());
        let mut rows = Vec::new();
        for hb in h.basis_rows() {
            for kb in k.basis_rows() {
                rows.push(self.bracket(&hb, &kb));
            }
        }
        Subspace::from_rows(self.dim(), rows)
    }

    /// The derived subalgebra `[L, L]`.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.commutator(&full, &full)
    }

    /// Image of the twisting map as a subspace.
    pub fn alpha_image(&self) -> Subspace {
        Subspace::image(&self.alpha)
    }

    /// Smallest subspace containing `seed` that is closed under bracketing
    /// with the whole algebra on both sides and under the twisting map.
    /// The dimension strictly increases each round, so this terminates.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let dim = self.dim();
        let mut current = seed.clone();
        loop {
            let mut rows = current.basis_rows();
            for v in current.basis_rows() {
                for j in 0..dim {
                    let ej = unit_vec(dim, j);
                    rows.push(self.bracket(&v, &ej));
                    rows.push(self.bracket(&ej, &v));
                }
                rows.push(self.apply_alpha(&v));
            }
            let next = Subspace::from_rows(dim, rows);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// Solution space of `[x, e_j] = 0 = [e_j, x]` for all j.
    pub fn center(&self) -> Subspace {
        let dim = self.dim();
        if dim == 0 {
            return Subspace::zero(0);
        }
        // rows: for each (j, k), sum_i x_i c_ijk = 0 and sum_i x_i c_jik = 0
        let mut rows = Vec::with_capacity(2 * dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                let mut right = Vec::with_capacity(dim);
                let mut left = Vec::with_capacity(dim);
                for i in 0..dim {
                    right.push(self.bracket_basis(i, j)[k].clone());
                    left.push(self.bracket_basis(j, i)[k].clone());
                }
                rows.push(right);
                rows.push(left);
            }
        }
        Subspace::kernel(&Matrix::from_rows(rows))
    }

    /// `(perfect, alpha-perfect)`: whether `[L,L] = L` and
    /// `[alpha(L), alpha(L)] = L`.
    pub fn perfectness(&self) -> (bool, bool) {
        let full = Subspace::full(self.dim());
        let im = self.alpha_image();
        (
            self.commutator(&full, &full).is_full(),
            self.commutator(&im, &im).is_full(),
        )
    }

    /// Quotient by a two-sided Hom-ideal, with the induced bracket and twist.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<QuotientAlgebra, AlgebraError> {
        if self.ideal_closure(ideal) != *ideal {
            return Err(AlgebraError::NotAnIdeal);
        }
        Ok(self.quotient_unchecked(ideal))
    }

    fn quotient_unchecked(&self, ideal: &Subspace) -> QuotientAlgebra {
        let space = QuotientSpace::new(self.dim(), ideal);
        let qdim = space.dim();
        let labels: Vec<String> = space
            .kept_coordinates()
            .iter()
            .map(|&c| self.labels[c].clone())
            .collect();
        let alpha = space.projection().mul(&self.alpha.mul(space.section()));
        let mut algebra = HomAlgebra::zero_bracket(labels, alpha, self.flavor);
        for s in 0..qdim {
            let rs = space.section().column(s);
            for t in 0..qdim {
                let rt = space.section().column(t);
                algebra.set_bracket(s, t, space.project_vec(&self.bracket(&rs, &rt)));
            }
        }
        QuotientAlgebra { algebra, space }
    }

    /// Span of all squares `[x, x]`, generated by polarization:
    /// `[e_i, e_i]` together with `[e_i, e_j] + [e_j, e_i]`.
    pub fn square_span(&self) -> Subspace {
        let dim = self.dim();
        let mut rows = Vec::new();
        for i in 0..dim {
            rows.push(self.bracket_basis(i, i).to_vec());
            for j in (i + 1)..dim {
                rows.push(vec_add(self.bracket_basis(i, j), self.bracket_basis(j, i)));
            }
        }
        Subspace::from_rows(dim, rows)
    }

    /// Quotient by the Hom-ideal generated by all squares; the result is a
    /// Hom-Lie algebra.
    pub fn liezation(&self) -> QuotientAlgebra {
        let ann = self.ideal_closure(&self.square_span());
        let mut q = self.quotient_unchecked(&ann);
        q.algebra.flavor = Flavor::Lie;
        q
    }

    /// Quotient by the Hom-ideal generated by the multiplicativity defects
    /// `alpha[x,y] - [alpha(x), alpha(y)]`; the result is multiplicative.
    pub fn multiplicative_hull(&self) -> QuotientAlgebra {
        let dim = self.dim();
        let mut rows = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let defect = vec_add(
                    &self.apply_alpha(self.bracket_basis(i, j)),
                    &vec_scale(
                        &-Scalar::one(),
                        &self.bracket(&self.alpha_column(i), &self.alpha_column(j)),
                    ),
                );
                rows.push(defect);
            }
        }
        let ideal = self.ideal_closure(&Subspace::from_rows(dim, rows));
        self.quotient_unchecked(&ideal)
    }

    /// Componentwise bracket and block-diagonal twist on the direct sum.
    pub fn direct_product(&self, other: &HomAlgebra) -> HomAlgebra {
        let (da, db) = (self.dim(), other.dim());
        let dim = da + db;
        let mut labels: Vec<String> = self.labels.clone();
        for l in &other.labels {
            if labels.contains(l) {
                labels.push(format!("{l}'"));
            } else {
                labels.push(l.clone());
            }
        }
        let alpha = Matrix::from_fn(dim, dim, |i, j| {
            if i < da && j < da {
                self.alpha[(i, j)].clone()
            } else if i >= da && j >= da {
                other.alpha[(i - da, j - da)].clone()
            } else {
                Scalar::zero()
            }
        });
        let flavor = if self.flavor == Flavor::Lie && other.flavor == Flavor::Lie {
            Flavor::Lie
        } else {
            Flavor::Leibniz
        };
        let mut out = HomAlgebra::zero_bracket(labels, alpha, flavor);
        for i in 0..da {
            for j in 0..da {
                let mut v = self.bracket_basis(i, j).to_vec();
                v.extend(vec![Scalar::zero(); db]);
                out.set_bracket(i, j, v);
            }
        }
        for i in 0..db {
            for j in 0..db {
                let mut v = vec![Scalar::zero(); da];
                v.extend(other.bracket_basis(i, j).to_vec());
                out.set_bracket(da + i, da + j, v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn counterexample_k_validates() {
        // alpha = 0 trivializes both the twisted Leibniz identity and
        // multiplicativity
        let k = catalog::counterexample_k();
        let report = k.validate();
        assert!(report.is_valid(), "{:?}", report.failures);
    }

    #[test]
    fn sqrt2_example_validates_as_hom_lie() {
        let l = catalog::sqrt2_example();
        let report = l.validate();
        assert!(report.is_hom_leibniz);
        assert!(report.is_multiplicative);
        assert!(report.is_hom_lie);
    }

    #[test]
    fn square_bracket_fails_lie_check() {
        let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Lie);
        l.set_bracket_unit(0, 0, 1); // [b1,b1] = b2
        let report = l.validate();
        assert!(!report.is_hom_lie);
        assert!(report
            .failures
            .iter()
            .any(|v| v.identity == "alternating" && v.indices == vec![0, 0]));
    }

    #[test]
    fn twist_by_identity_and_zero() {
        let k = catalog::classical_base_for_twist();
        let id = Matrix::identity(2);
        assert_eq!(k.twist(&id).unwrap(), k);
        let zero = Matrix::zero(2, 2);
        let twisted = k.twist(&zero).unwrap();
        // zero twist of the stated brackets gives the zero bracket
        assert!(twisted.derived().is_zero());
        assert!(twisted.alpha().is_zero());
        assert!(twisted.validate().is_valid());
    }

    #[test]
    fn twist_rejects_non_endomorphism() {
        let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        l.set_bracket_unit(0, 0, 1);
        // f(e1) = e1 + ... does not commute with [e1,e1] = e2
        let f = Matrix::from_ints(&[&[1, 1], &[0, 0]]);
        assert!(matches!(
            l.twist(&f),
            Err(AlgebraError::NotEndomorphism(0, 0))
        ));
    }

    #[test]
    fn commutator_of_counterexample_k_is_full() {
        let k = catalog::counterexample_k();
        assert!(k.derived().is_full());
        let zero = Subspace::zero(3);
        assert!(k.commutator(&zero, &Subspace::full(3)).is_zero());
    }

    #[test]
    fn commutator_of_alpha_image_remark_c() {
        let l = catalog::remark_c_diag();
        let im = l.alpha_image();
        let c = l.commutator(&im, &im);
        assert_eq!(c, Subspace::from_rows(2, vec![unit_vec(2, 1)]));
    }

    #[test]
    fn center_of_counterexample_k() {
        let k = catalog::counterexample_k();
        assert_eq!(k.center(), Subspace::from_rows(3, vec![unit_vec(3, 0)]));
    }

    #[test]
    fn center_of_abelian_is_full() {
        let a = HomAlgebra::abelian(3, Matrix::identity(3), Flavor::Lie);
        assert!(a.center().is_full());
    }

    #[test]
    fn center_of_literal_f_is_two_dimensional() {
        // e2 never occurs as a bracket argument, so it is central as stated
        let f = catalog::counterexample_f_literal();
        assert_eq!(
            f.center(),
            Subspace::from_rows(4, vec![unit_vec(4, 0), unit_vec(4, 1)])
        );
    }

    #[test]
    fn center_of_repaired_f_is_one_dimensional() {
        let f = catalog::counterexample_f_repaired();
        assert_eq!(f.center(), Subspace::from_rows(4, vec![unit_vec(4, 0)]));
    }

    #[test]
    fn ideal_closure_fixpoints() {
        let k = catalog::counterexample_k();
        let z = k.center();
        assert_eq!(k.ideal_closure(&z), z, "center of K is already an ideal");
        assert!(k.ideal_closure(&Subspace::zero(3)).is_zero());
        // [a3,a2] = a3, [a3,a3] = a2, [a2,a2] = a1 pulls in everything
        let a3 = Subspace::from_rows(3, vec![unit_vec(3, 2)]);
        assert!(k.ideal_closure(&a3).is_full());
    }

    #[test]
    fn perfectness_flags() {
        let (p, ap) = catalog::sqrt2_example().perfectness();
        assert!(p && ap);
        let (p, ap) = catalog::remark_b_cross_alpha_zero().perfectness();
        assert!(p && !ap);
        let remark_c = catalog::remark_c_diag();
        let (p, ap) = remark_c.perfectness();
        assert!(!p && !ap);
        assert_eq!(remark_c.alpha().rank(), 2, "alpha is surjective");
    }

    #[test]
    fn quotient_by_zero_and_full() {
        let k = catalog::counterexample_k();
        let q0 = k.quotient_algebra(&Subspace::zero(3)).unwrap();
        assert_eq!(q0.algebra, k);
        let qf = k.quotient_algebra(&Subspace::full(3)).unwrap();
        assert_eq!(qf.algebra.dim(), 0);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let k = catalog::counterexample_k();
        let a3 = Subspace::from_rows(3, vec![unit_vec(3, 2)]);
        assert!(matches!(
            k.quotient_algebra(&a3),
            Err(AlgebraError::NotAnIdeal)
        ));
    }

    #[test]
    fn quotient_k_by_center_is_the_base_algebra() {
        let k = catalog::counterexample_k();
        let q = k.quotient_algebra(&k.center()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.validate().is_valid());
        // induced brackets: [a3,a2] = a3, [a3,a3] = a2 in the kept labels
        assert_eq!(q.algebra.bracket_basis(1, 0), &unit_vec(2, 1)[..]);
        assert_eq!(q.algebra.bracket_basis(1, 1), &unit_vec(2, 0)[..]);
        // explicit isomorphism onto the counterexample base algebra:
        // kept a2 -> b1, kept a3 -> b2 is the identity matrix here
        let l = catalog::counterexample_l();
        let iso = crate::morphism::Hom::new(&q.algebra, &l, Matrix::identity(2));
        assert!(iso.is_ok());
    }

    #[test]
    fn liezation_cases() {
        // a Hom-Lie algebra is its own liezation
        let lie = catalog::sqrt2_example();
        let q = lie.liezation();
        assert_eq!(q.algebra, lie.clone().with_flavor(Flavor::Lie));
        // the counterexample base algebra collapses to zero
        let l = catalog::counterexample_l();
        assert_eq!(l.liezation().algebra.dim(), 0);
        // abelian is untouched
        let a = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        assert_eq!(a.liezation().algebra.dim(), 2);
    }

    #[test]
    fn multiplicative_hull_cases() {
        let k = catalog::counterexample_k();
        assert_eq!(k.multiplicative_hull().algebra, k);
        // alpha = id is always multiplicative
        let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        l.set_bracket_unit(0, 0, 1);
        assert_eq!(l.multiplicative_hull().algebra, l);
        // [b1,b1] = b2 with alpha swapping b1 and b2 collapses completely
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let mut m = HomAlgebra::abelian(2, swap, Flavor::Leibniz);
        m.set_bracket_unit(0, 0, 1);
        assert!(m.validate().is_hom_leibniz);
        let hull = m.multiplicative_hull();
        assert!(hull.algebra.dim() <= 1);
        assert!(hull.algebra.validate().is_multiplicative);
    }

    #[test]
    fn direct_product_shapes() {
        let k = catalog::counterexample_k();
        let zero = HomAlgebra::abelian(0, Matrix::zero(0, 0), Flavor::Leibniz);
        assert_eq!(k.direct_product(&zero), k);
        let a = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        let p = a.direct_product(&a);
        assert_eq!(p.dim(), 4);
        assert!(p.derived().is_zero());
    }
}
