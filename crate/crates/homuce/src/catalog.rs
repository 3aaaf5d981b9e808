//! The fixture algebras and homomorphism matrices used throughout the test
//! and verification suites: the two/three/four-dimensional composition
//! counterexample family, the sqrt(2)-twisted cross-product algebra, and the
//! perfection remarks.

use crate::algebra::{Flavor, HomAlgebra};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

fn labeled(labels: &[&str], alpha: Matrix, flavor: Flavor) -> HomAlgebra {
    HomAlgebra::zero_bracket(labels.iter().map(|s| s.to_string()).collect(), alpha, flavor)
}

/// Two-dimensional algebra with `[b2,b1] = b2`, `[b2,b2] = b1` and zero
/// twisting map. Base of the composition counterexample.
pub fn counterexample_l() -> HomAlgebra {
    let mut l = labeled(&["b1", "b2"], Matrix::zero(2, 2), Flavor::Leibniz);
    l.set_bracket_unit(1, 0, 1);
    l.set_bracket_unit(1, 1, 0);
    l
}

/// Three-dimensional perfect algebra with `[a2,a2] = a1`, `[a3,a2] = a3`,
/// `[a3,a3] = a2` and zero twisting map.
pub fn counterexample_k() -> HomAlgebra {
    let mut k = labeled(&["a1", "a2", "a3"], Matrix::zero(3, 3), Flavor::Leibniz);
    k.set_bracket_unit(1, 1, 0);
    k.set_bracket_unit(2, 1, 2);
    k.set_bracket_unit(2, 2, 1);
    k
}

/// Four-dimensional algebra with `[e3,e3] = e2`, `[e4,e3] = e4`,
/// `[e4,e4] = e3`, zero twisting map, exactly as stated in the source; its
/// computed center is two-dimensional.
pub fn counterexample_f_literal() -> HomAlgebra {
    let mut f = labeled(&["e1", "e2", "e3", "e4"], Matrix::zero(4, 4), Flavor::Leibniz);
    f.set_bracket_unit(2, 2, 1);
    f.set_bracket_unit(3, 2, 3);
    f.set_bracket_unit(3, 3, 2);
    f
}

/// The literal algebra plus one repair bracket `[e4,e2] = e1`. This restores
/// a one-dimensional center and makes the composed projection genuinely
/// non-central. Shipped as a clearly separate fixture, never as ground truth.
pub fn counterexample_f_repaired() -> HomAlgebra {
    let mut f = counterexample_f_literal();
    f.set_bracket_unit(3, 1, 0);
    f
}

/// Projection matrix for `pi : K -> L`, `a1 -> 0`, `a2 -> b1`, `a3 -> b2`.
pub fn pi_matrix() -> Matrix {
    Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1]])
}

/// Projection matrix for `rho : F -> K`, `e1 -> 0`, `e2 -> a1`, `e3 -> a2`,
/// `e4 -> a3`.
pub fn rho_matrix() -> Matrix {
    Matrix::from_ints(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
}

/// Cross-product brackets `[a1,a2] = a3`, `[a2,a3] = a1`, `[a3,a1] = a2`
/// (antisymmetric), with a caller-chosen twisting map.
pub fn cross_product(alpha: Matrix, flavor: Flavor) -> HomAlgebra {
    let mut l = labeled(&["a1", "a2", "a3"], alpha, flavor);
    l.set_bracket_unit(0, 1, 2);
    l.set_bracket(1, 0, vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-1)]);
    l.set_bracket_unit(1, 2, 0);
    l.set_bracket(2, 1, vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero()]);
    l.set_bracket_unit(2, 0, 1);
    l.set_bracket(0, 2, vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()]);
    l
}

/// The alpha-perfect Hom-Lie algebra: cross-product brackets twisted by the
/// matrix with sqrt(2)/2 entries.
pub fn sqrt2_example() -> HomAlgebra {
    let h = Scalar::surd(1, 2, 2); // sqrt(2)/2
    let alpha = Matrix::from_rows(vec![
        vec![h.clone(), Scalar::zero(), h.clone()],
        vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()],
        vec![h.clone(), Scalar::zero(), -&h],
    ]);
    cross_product(alpha, Flavor::Lie)
}

/// Perfect but not alpha-perfect: antisymmetric brackets
/// `[a1,a2] = a3`, `[a1,a3] = a2`, `[a2,a3] = a1` with zero twisting map.
pub fn remark_b_cross_alpha_zero() -> HomAlgebra {
    let mut l = labeled(&["a1", "a2", "a3"], Matrix::zero(3, 3), Flavor::Lie);
    l.set_bracket_unit(0, 1, 2);
    l.set_bracket(1, 0, vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-1)]);
    l.set_bracket_unit(0, 2, 1);
    l.set_bracket(2, 0, vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()]);
    l.set_bracket_unit(1, 2, 0);
    l.set_bracket(2, 1, vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero()]);
    l
}

/// Surjective twist but not alpha-perfect: `[a1,a2] = a2 = -[a2,a1]` with
/// twisting map diag(1, 2).
pub fn remark_c_diag() -> HomAlgebra {
    let mut l = labeled(
        &["a1", "a2"],
        Matrix::from_ints(&[&[1, 0], &[0, 2]]),
        Flavor::Lie,
    );
    l.set_bracket_unit(0, 1, 1);
    l.set_bracket(1, 0, vec![Scalar::zero(), Scalar::from_int(-1)]);
    l
}

/// The brackets of the counterexample base algebra carried by an identity
/// twist; not a Leibniz algebra, but a legal input for the twist
/// construction (only bracket-compatibility of the twisting map matters).
pub fn classical_base_for_twist() -> HomAlgebra {
    let mut l = labeled(&["b1", "b2"], Matrix::identity(2), Flavor::Leibniz);
    l.set_bracket_unit(1, 0, 1);
    l.set_bracket_unit(1, 1, 0);
    l
}

/// Every named algebra above, with a stable display name. Used by the
/// verification suite to sweep "all catalog algebras".
pub fn all() -> Vec<(&'static str, HomAlgebra)> {
    vec![
        ("L", counterexample_l()),
        ("K", counterexample_k()),
        ("F-literal", counterexample_f_literal()),
        ("F-repaired", counterexample_f_repaired()),
        ("sqrt2", sqrt2_example()),
        ("cross-alpha0", remark_b_cross_alpha_zero()),
        ("diag12", remark_c_diag()),
        ("abelian2", HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Lie)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_catalog_algebras_validate() {
        for (name, alg) in all() {
            let report = alg.validate();
            assert!(report.is_valid(), "{name}: {:?}", report.failures);
        }
    }

    #[test]
    fn sqrt2_alpha_is_invertible() {
        assert_eq!(sqrt2_example().alpha().rank(), 3);
    }
}
