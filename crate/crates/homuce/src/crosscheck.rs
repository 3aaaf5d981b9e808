//! Independent brute-force oracle for classical Leibniz homology.
//!
//! This module deliberately re-derives everything from first principles for
//! the identity-twist case: its own basis enumeration, its own boundary
//! formula without any twist bookkeeping, and its own fraction-based
//! Gaussian elimination. It shares no code path with the chain-complex
//! engine it cross-checks, so agreement between the two is meaningful.

use num::rational::BigRational;
use num::traits::Zero;

use crate::algebra::HomAlgebra;
use crate::corep::HomCoRep;

/// Action data for the oracle: plain rational matrices, extracted once from
/// a co-representation with rational entries.
pub struct ClassicalInput {
    dim: usize,
    mdim: usize,
    /// bracket[i][j] = coefficients of [e_i, e_j]
    bracket: Vec<Vec<Vec<BigRational>>>,
    /// left[i] maps m to e_i . m (column convention)
    left: Vec<Vec<Vec<BigRational>>>,
    /// right[i] maps m to m . e_i
    right: Vec<Vec<Vec<BigRational>>>,
}

fn to_rational_matrix(m: &crate::matrix::Matrix) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|s| {
                    assert!(s.is_rational(), "oracle handles rational entries only");
                    s.rational_part().clone()
                })
                .collect()
        })
        .collect()
}

impl ClassicalInput {
    /// Extracts the classical data; the co-representation must have rational
    /// entries and the algebra an identity twist.
    pub fn from_corep(corep: &HomCoRep) -> ClassicalInput {
        let alg: &HomAlgebra = corep.algebra();
        assert!(alg.alpha_is_identity(), "oracle is for the identity twist");
        let dim = alg.dim();
        let bracket = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        alg.bracket_basis(i, j)
                            .iter()
                            .map(|s| {
                                assert!(s.is_rational());
                                s.rational_part().clone()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ClassicalInput {
            dim,
            mdim: corep.mdim(),
            bracket,
            left: corep.lam().iter().map(to_rational_matrix).collect(),
            right: corep.rho().iter().map(to_rational_matrix).collect(),
        }
    }

    fn chain_len(&self, n: usize) -> usize {
        self.mdim * self.dim.pow(n as u32)
    }

    /// Unpacks a flat index of `M (x) L^(x)n` into `(m, [x_1..x_n])`,
    /// first factor most significant.
    fn unpack(&self, mut flat: usize, n: usize) -> (usize, Vec<usize>) {
        let mut xs = vec![0usize; n];
        for slot in (0..n).rev() {
            xs[slot] = flat % self.dim;
            flat /= self.dim;
        }
        (flat, xs)
    }

    fn pack(&self, m: usize, xs: &[usize]) -> usize {
        let mut flat = m;
        for &x in xs {
            flat = flat * self.dim + x;
        }
        flat
    }

    /// The classical Leibniz boundary on `M (x) L^(x)n`, columns enumerated
    /// directly from the formula.
    pub fn boundary(&self, n: usize) -> Vec<Vec<BigRational>> {
        assert!(n >= 1);
        let rows = self.chain_len(n - 1);
        let cols = self.chain_len(n);
        let mut out = vec![vec![BigRational::zero(); cols]; rows];
        for col in 0..cols {
            let (m, xs) = self.unpack(col, n);

            // m . x_1 (x) x_2 ... x_n
            for (mm, c) in self.right[xs[0]].iter().map(|row| &row[m]).enumerate() {
                if c.is_zero() {
                    continue;
                }
                let target = self.pack(mm, &xs[1..]);
                out[target][col] += c;
            }
            // (-1)^i x_i . m (x) x_1 ... omit i ... x_n
            for i in 2..=n {
                let mut rest: Vec<usize> = xs.clone();
                rest.remove(i - 1);
                for (mm, c) in self.left[xs[i - 1]].iter().map(|row| &row[m]).enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let target = self.pack(mm, &rest);
                    if i % 2 == 0 {
                        out[target][col] += c;
                    } else {
                        out[target][col] -= c;
                    }
                }
            }
            // (-1)^(j+1) m (x) x_1 ... [x_i, x_j] at i ... omit j ... x_n
            for j in 2..=n {
                for i in 1..j {
                    let coeffs = &self.bracket[xs[i - 1]][xs[j - 1]];
                    for (k, c) in coeffs.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut slots = xs.clone();
                        slots[i - 1] = k;
                        slots.remove(j - 1);
                        let target = self.pack(m, &slots);
                        if (j + 1) % 2 == 0 {
                            out[target][col] += c;
                        } else {
                            out[target][col] -= c;
                        }
                    }
                }
            }
        }
        out
    }

    /// Homology dimension `dim Ker d_n - rank d_(n+1)` using the oracle's
    /// own elimination.
    pub fn homology_dim(&self, n: usize) -> usize {
        let nullity = if n == 0 {
            self.chain_len(0)
        } else {
            let d = self.boundary(n);
            self.chain_len(n) - rank(d)
        };
        nullity - rank(self.boundary(n + 1))
    }

    /// The classical universal-central-extension kernel dimension for a
    /// perfect input: nullity of the bracket map minus the rank of the span
    /// of the relation elements in the tensor square.
    pub fn classical_uce_kernel_dim(&self) -> usize {
        let dim = self.dim;
        // bracket map L（x)L -> L
        let mut b = vec![vec![BigRational::zero(); dim * dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    b[k][i * dim + j] = c.clone();
                }
            }
        }
        let nullity = dim * dim - rank(b);
        // relation span: -[x1,x2](x)x3 + [x1,x3](x)x2 + x1(x)[x2,x3]
        let mut rel = Vec::new();
        for x1 in 0..dim {
            for x2 in 0..dim {
                for x3 in 0..dim {
                    let mut row = vec![BigRational::zero(); dim * dim];
                    for (k, c) in self.bracket[x1][x2].iter().enumerate() {
                        row[k * dim + x3] -= c;
                    }
                    for (k, c) in self.bracket[x1][x3].iter().enumerate() {
                        row[k * dim + x2] += c;
                    }
                    for (k, c) in self.bracket[x2][x3].iter().enumerate() {
                        row[x1 * dim + k] += c;
                    }
                    rel.push(row);
                }
            }
        }
        nullity - rank(rel)
    }
}

/// Plain fraction Gaussian elimination, written independently of the main
/// matrix code.
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in &mut m[r] {
            *x = &*x / &pivot;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for cc in c..cols {
                let sub = &f * &m[r][cc];
                m[i][cc] = &m[i][cc] - &sub;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Flavor, HomAlgebra};
    use crate::matrix::Matrix;

    #[test]
    fn oracle_rank_agrees_with_matrix_rank() {
        let m = vec![
            vec![BigRational::from_integer(1.into()), BigRational::from_integer(2.into())],
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(4.into())],
        ];
        assert_eq!(rank(m), 1);
    }

    #[test]
    fn oracle_matches_engine_on_a_classical_leibniz_algebra() {
        // [e1, e2] = e1 is Leibniz but not Lie
        let mut l = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        l.set_bracket_unit(0, 1, 0);
        assert!(l.validate().is_valid());
        let ground = crate::corep::HomCoRep::ground_field(&l);
        let oracle = ClassicalInput::from_corep(&ground);
        for n in 0..=2 {
            let engine = crate::homology::homology(&ground, n, 4).unwrap().dim;
            assert_eq!(oracle.homology_dim(n), engine, "degree {n}");
        }
    }

    #[test]
    fn oracle_uce_kernel_matches_engine() {
        let l = crate::catalog::cross_product(Matrix::identity(3), Flavor::Lie);
        let ground = crate::corep::HomCoRep::ground_field(&l);
        let oracle = ClassicalInput::from_corep(&ground);
        let engine = crate::uce::uce_leibniz(&l).unwrap();
        assert_eq!(oracle.classical_uce_kernel_dim(), engine.kernel_dim());
    }
}
