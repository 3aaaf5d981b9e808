//! Flat coordinates for tensor-power and exterior-power bases.

use crate::scalar::Scalar;

/// Lexicographic bijection between multi-indices `(i_1, ..., i_n)` and flat
/// coordinates; the first slot is most significant, matching the Kronecker
/// product order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorIndex { dims }
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flatten(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.dims.len());
        let mut flat = 0;
        for (i, d) in multi.iter().zip(&self.dims) {
            debug_assert!(i < d);
            flat = flat * d + i;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        debug_assert!(flat < self.len());
        let mut multi = vec![0; self.dims.len()];
        for slot in (0..self.dims.len()).rev() {
            multi[slot] = flat % self.dims[slot];
            flat /= self.dims[slot];
        }
        multi
    }

    /// Expands a pure tensor of vectors into flat coordinates, adding
    /// `coeff * (v_1 tensor ... tensor v_n)` into `out`.
    pub fn accumulate_tensor(&self, factors: &[&[Scalar]], coeff: &Scalar, out: &mut [Scalar]) {
        assert_eq!(factors.len(), self.dims.len());
        assert_eq!(out.len(), self.len());
        if coeff.is_zero() {
            return;
        }
        self.accumulate_rec(factors, 0, 0, coeff.clone(), out);
    }

    fn accumulate_rec(
        &self,
        factors: &[&[Scalar]],
        slot: usize,
        flat: usize,
        partial: Scalar,
        out: &mut [Scalar],
    ) {
        if slot == factors.len() {
            out[flat] += &partial;
            return;
        }
        debug_assert_eq!(factors[slot].len(), self.dims[slot]);
        for (i, x) in factors[slot].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            self.accumulate_rec(factors, slot + 1, flat * self.dims[slot] + i, &partial * x, out);
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bijection between strictly increasing tuples `i_1 < ... < i_n` drawn from
/// `0..dim` and flat coordinates in lexicographic order, plus the sign
/// normalizer for arbitrary tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeIndex {
    arity: usize,
    dim: usize,
}

impl WedgeIndex {
    pub fn new(arity: usize, dim: usize) -> Self {
        WedgeIndex { arity, dim }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        binomial(self.dim, self.arity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lexicographic rank of a strictly increasing tuple.
    pub fn flatten(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.arity);
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(tuple.iter().all(|&i| i < self.dim));
        let mut rank = 0;
        let mut prev: isize = -1;
        for (slot, &c) in tuple.iter().enumerate() {
            for j in (prev + 1) as usize..c {
                rank += binomial(self.dim - 1 - j, self.arity - 1 - slot);
            }
            prev = c as isize;
        }
        rank
    }

    pub fn unflatten(&self, mut rank: usize) -> Vec<usize> {
        let mut tuple = Vec::with_capacity(self.arity);
        let mut next = 0;
        for slot in 0..self.arity {
            let mut c = next;
            loop {
                let below = binomial(self.dim - 1 - c, self.arity - 1 - slot);
                if rank < below {
                    break;
                }
                rank -= below;
                c += 1;
            }
            tuple.push(c);
            next = c + 1;
        }
        tuple
    }

    /// Sorts an arbitrary tuple, returning the permutation sign, or `None`
    /// when an index repeats (the wedge is then zero).
    pub fn normalize(&self, tuple: &[usize]) -> Option<(i8, Vec<usize>)> {
        let mut sorted = tuple.to_vec();
        let mut sign = 1i8;
        // insertion sort, counting swaps
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, sorted))
    }

    /// Adds `coeff * (v_1 ^ ... ^ v_n)` into flat wedge coordinates.
    pub fn accumulate_wedge(&self, factors: &[&[Scalar]], coeff: &Scalar, out: &mut [Scalar]) {
        assert_eq!(factors.len(), self.arity);
        assert_eq!(out.len(), self.len());
        if coeff.is_zero() {
            return;
        }
        let mut tuple = vec![0usize; self.arity];
        self.wedge_rec(factors, 0, &mut tuple, coeff.clone(), out);
    }

    fn wedge_rec(
        &self,
        factors: &[&[Scalar]],
        slot: usize,
        tuple: &mut [usize],
        partial: Scalar,
        out: &mut [Scalar],
    ) {
        if slot == factors.len() {
            if let Some((sign, sorted)) = self.normalize(tuple) {
                let flat = self.flatten(&sorted);
                let term = if sign < 0 { -&partial } else { partial.clone() };
                out[flat] += &term;
            }
            return;
        }
        for (i, x) in factors[slot].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            tuple[slot] = i;
            self.wedge_rec(factors, slot + 1, tuple, &partial * x, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn tensor_flatten_roundtrip() {
        let idx = TensorIndex::new(vec![2, 3, 4]);
        assert_eq!(idx.len(), 24);
        for flat in 0..idx.len() {
            assert_eq!(idx.flatten(&idx.unflatten(flat)), flat);
        }
        assert_eq!(idx.flatten(&[1, 2, 3]), 23);
    }

    #[test]
    fn wedge_flatten_roundtrip() {
        let idx = WedgeIndex::new(3, 5);
        assert_eq!(idx.len(), 10);
        for flat in 0..idx.len() {
            let t = idx.unflatten(flat);
            assert!(t.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(idx.flatten(&t), flat);
        }
        // lexicographically first and last
        assert_eq!(idx.unflatten(0), vec![0, 1, 2]);
        assert_eq!(idx.unflatten(9), vec![2, 3, 4]);
    }

    #[test]
    fn normalizer_signs() {
        let idx = WedgeIndex::new(2, 4);
        assert_eq!(idx.normalize(&[0, 1]), Some((1, vec![0, 1])));
        assert_eq!(idx.normalize(&[1, 0]), Some((-1, vec![0, 1])));
        assert_eq!(idx.normalize(&[2, 2]), None);
        let idx3 = WedgeIndex::new(3, 4);
        assert_eq!(idx3.normalize(&[2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(idx3.normalize(&[2, 1, 0]), Some((-1, vec![0, 1, 2])));
    }

    #[test]
    fn wedge_expansion_antisymmetry() {
        let idx = WedgeIndex::new(2, 3);
        let u = [Scalar::from_int(1), Scalar::from_int(2), Scalar::zero()];
        let v = [Scalar::zero(), Scalar::from_int(1), Scalar::from_int(3)];
        let mut uv = vec![Scalar::zero(); idx.len()];
        let mut vu = vec![Scalar::zero(); idx.len()];
        idx.accumulate_wedge(&[&u, &v], &Scalar::one(), &mut uv);
        idx.accumulate_wedge(&[&v, &u], &Scalar::one(), &mut vu);
        assert_eq!(uv, vu.iter().map(|x| -x).collect::<Vec<_>>());
        let mut uu = vec![Scalar::zero(); idx.len()];
        idx.accumulate_wedge(&[&u, &u], &Scalar::one(), &mut uu);
        assert!(uu.iter().all(Scalar::is_zero));
    }
}
