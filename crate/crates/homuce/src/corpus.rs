//! Deterministic randomized corpus of twisted Leibniz algebras.
//!
//! Random structure constants almost never satisfy the Leibniz identity, so
//! the corpus starts from a handful of classical seed algebras whose bracket
//! endomorphism families are known in closed form, conjugates them by a
//! random invertible basis change, and then twists by a random member of the
//! endomorphism family. Every emitted algebra is a valid multiplicative
//! Hom-Leibniz algebra by construction, and the generator re-validates each
//! one anyway.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Flavor, HomAlgebra};
use crate::corep::HomCoRep;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// One corpus entry: a twisted algebra and coefficient modules for it.
pub struct CorpusEntry {
    pub name: String,
    pub algebra: HomAlgebra,
    pub coreps: Vec<HomCoRep>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    match rng.gen_range(0..8) {
        0 => Scalar::from_int(-2),
        1 => Scalar::from_int(-1),
        2 | 3 => Scalar::zero(),
        4 | 5 => Scalar::one(),
        6 => Scalar::from_int(2),
        _ => Scalar::from_ratio(1, 2),
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(dim, dim, |_, _| small_scalar(rng));
        if m.rank() == dim {
            return m;
        }
    }
}

enum Seed {
    Abelian(usize),
    /// dim 2, `[e1,e1] = e2` (nilpotent, not Lie)
    Square,
    /// dim 2, `[e1,e2] = e1` (solvable, not Lie)
    Affine,
    /// dim 3, `[e1,e2] = e3 = -[e2,e1]`
    Heisenberg,
    /// dim 2, `[e1,e2] = e2 = -[e2,e1]`
    Solvable2,
    /// dim 3 cross product
    Cross,
}

impl Seed {
    fn pick(rng: &mut ChaCha8Rng) -> Seed {
        match rng.gen_range(0..10) {
            0 => Seed::Abelian(rng.gen_range(1..=3)),
            1 | 2 => Seed::Square,
            3 | 4 => Seed::Affine,
            5 | 6 => Seed::Heisenberg,
            7 | 8 => Seed::Solvable2,
            _ => Seed::Cross,
        }
    }

    fn algebra(&self) -> HomAlgebra {
        match self {
            Seed::Abelian(d) => HomAlgebra::abelian(*d, Matrix::identity(*d), Flavor::Leibniz),
            Seed::Square => {
                let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
                l.set_bracket_unit(0, 0, 1);
                l
            }
            Seed::Affine => {
                let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
                l.set_bracket_unit(0, 1, 0);
                l
            }
            Seed::Heisenberg => {
                let mut l = HomAlgebra::abelian(3, Matrix::identity(3), Flavor::Leibniz);
                l.set_bracket_unit(0, 1, 2);
                l.set_bracket(1, 0, crate::matrix::vec_neg(&crate::matrix::unit_vec(3, 2)));
                l
            }
            Seed::Solvable2 => {
                let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
                l.set_bracket_unit(0, 1, 1);
                l.set_bracket(1, 0, crate::matrix::vec_neg(&crate::matrix::unit_vec(2, 1)));
                l
            }
            Seed::Cross => crate::catalog::cross_product(Matrix::identity(3), Flavor::Leibniz),
        }
    }

    /// A random member of the seed's bracket endomorphism family.
    fn endomorphism(&self, rng: &mut ChaCha8Rng) -> Matrix {
        match self {
            Seed::Abelian(d) => Matrix::from_fn(*d, *d, |_, _| small_scalar(rng)),
            Seed::Square => {
                // f(e1) = a e1 + b e2 forces f(e2) = a^2 e2
                let a = small_scalar(rng);
                let b = small_scalar(rng);
                Matrix::from_rows(vec![
                    vec![a.clone(), Scalar::zero()],
                    vec![b, &a * &a],
                ])
            }
            Seed::Affine => match rng.gen_range(0..3) {
                0 => {
                    let a = small_scalar(rng);
                    Matrix::from_rows(vec![
                        vec![a, Scalar::zero()],
                        vec![Scalar::zero(), Scalar::one()],
                    ])
                }
                1 => {
                    let c = small_scalar(rng);
                    Matrix::from_rows(vec![
                        vec![Scalar::zero(), c],
                        vec![Scalar::zero(), Scalar::zero()],
                    ])
                }
                _ => {
                    let d = small_scalar(rng);
                    Matrix::from_rows(vec![
                        vec![Scalar::zero(), Scalar::zero()],
                        vec![Scalar::zero(), d],
                    ])
                }
            },
            Seed::Heisenberg => {
                // images of e1, e2 are free modulo the center; f(e3) is their
                // bracket determinant
                let a = small_scalar(rng);
                let b = small_scalar(rng);
                let c = small_scalar(rng);
                let p = small_scalar(rng);
                let q = small_scalar(rng);
                let r = small_scalar(rng);
                let det = &(&a * &q) - &(&b * &p);
                Matrix::from_rows(vec![
                    vec![a, p, Scalar::zero()],
                    vec![b, q, Scalar::zero()],
                    vec![c, r, det],
                ])
            }
            Seed::Solvable2 => {
                if rng.gen_bool(0.5) {
                    let b = small_scalar(rng);
                    let d = small_scalar(rng);
                    Matrix::from_rows(vec![
                        vec![Scalar::one(), Scalar::zero()],
                        vec![b, d],
                    ])
                } else {
                    let a = small_scalar(rng);
                    let b = small_scalar(rng);
                    Matrix::from_rows(vec![
                        vec![a, Scalar::zero()],
                        vec![b, Scalar::zero()],
                    ])
                }
            }
            Seed::Cross => match rng.gen_range(0..3) {
                0 => Matrix::zero(3, 3),
                1 => Matrix::identity(3),
                // quarter turn around the third axis
                _ => Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]),
            },
        }
    }
}

/// A random classical Leibniz algebra (identity twist): a conjugated seed.
pub fn random_classical(rng: &mut ChaCha8Rng) -> HomAlgebra {
    let seed = Seed::pick(rng);
    let base = seed.algebra();
    conjugate_classical(&base, &random_invertible(rng, base.dim()))
}

/// A random multiplicative twisted Leibniz algebra together with its
/// twisting endomorphism expressed in the new basis.
pub fn random_twisted(rng: &mut ChaCha8Rng) -> HomAlgebra {
    let seed = Seed::pick(rng);
    let base = seed.algebra();
    let s = random_invertible(rng, base.dim());
    let conj = conjugate_classical(&base, &s);
    let f = s
        .inverse()
        .expect("invertible by construction")
        .mul(&seed.endomorphism(rng))
        .mul(&s);
    let twisted = conj.twist(&f).expect("conjugated endomorphism stays one");
    debug_assert!(twisted.validate().is_valid());
    twisted
}

/// Basis change of a classical algebra: bracket'(x, y) =
/// S^-1 [S x, S y]; the identity twist is preserved.
fn conjugate_classical(base: &HomAlgebra, s: &Matrix) -> HomAlgebra {
    let dim = base.dim();
    let sinv = s.inverse().expect("basis change must be invertible");
    let mut out = HomAlgebra::zero_bracket(
        base.labels().to_vec(),
        Matrix::identity(dim),
        base.flavor(),
    );
    for i in 0..dim {
        for j in 0..dim {
            out.set_bracket(i, j, sinv.apply(&base.bracket(&s.column(i), &s.column(j))));
        }
    }
    out
}

/// Coefficient modules for one corpus algebra: a trivial module with a
/// random small twist, plus the self module when it is small enough.
pub fn coreps_for(algebra: &HomAlgebra, rng: &mut ChaCha8Rng, max_mdim: usize) -> Vec<HomCoRep> {
    let mut out = Vec::new();
    let mdim = rng.gen_range(1..=max_mdim);
    out.push(HomCoRep::trivial(
        algebra,
        Matrix::from_fn(mdim, mdim, |_, _| small_scalar(rng)),
    ));
    if algebra.dim() <= max_mdim {
        out.push(HomCoRep::self_corep(algebra).expect("validated algebra carries itself"));
    }
    out
}

/// The deterministic corpus used by the verification suite.
pub fn twisted_corpus(count: usize, seed: u64, max_mdim: usize) -> Vec<CorpusEntry> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let algebra = random_twisted(&mut r);
            let coreps = coreps_for(&algebra, &mut r, max_mdim);
            CorpusEntry {
                name: format!("corpus-{i:03}"),
                algebra,
                coreps,
            }
        })
        .collect()
}

/// Deterministic classical (identity-twist) corpus.
pub fn classical_corpus(count: usize, seed: u64) -> Vec<HomAlgebra> {
    let mut r = rng(seed);
    (0..count).map(|_| random_classical(&mut r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_algebras_validate() {
        for entry in twisted_corpus(25, 7, 2) {
            let report = entry.algebra.validate();
            assert!(report.is_valid(), "{}: {:?}", entry.name, report.failures);
            for c in &entry.coreps {
                assert!(c.validate().is_empty(), "{}", entry.name);
            }
        }
    }

    #[test]
    fn classical_corpus_satisfies_leibniz_identity() {
        for (i, alg) in classical_corpus(20, 11).into_iter().enumerate() {
            assert!(alg.alpha_is_identity());
            let report = alg.validate();
            assert!(report.is_valid(), "classical {i}: {:?}", report.failures);
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = twisted_corpus(5, 42, 2);
        let b = twisted_corpus(5, 42, 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.algebra, y.algebra);
        }
    }
}
