use super::FrobeniusAlgebra;
use crate::exactnum::{Scalar, SparseAccumulator, SparseVec, Vector};

/// Mixed-radix index scheme for `A^{⊗m}`: basis tuples `(i_1, …, i_m)` in
/// lexicographic order, the first factor most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub base_dim: usize,
    pub factors: usize,
}

impl TensorSpace {
    pub fn new(base_dim: usize, factors: usize) -> Self {
        TensorSpace { base_dim, factors }
    }

    pub fn dim(&self) -> usize {
        self.base_dim.pow(self.factors as u32)
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.factors);
        digits.iter().fold(0, |acc, &d| acc * self.base_dim + d)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors];
        for slot in out.iter_mut().rev() {
            *slot = index % self.base_dim;
            index /= self.base_dim;
        }
        out
    }
}

/// Tensor product of sparse factor vectors over a common base dimension.
pub fn tensor_of(factors: &[SparseVec], base_dim: usize) -> SparseVec {
    let mut cur: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
    for f in factors {
        let mut next = Vec::with_capacity(cur.len() * f.nnz());
        for (i, x) in &cur {
            for (j, y) in f.iter() {
                next.push((i * base_dim + j, x * y));
            }
        }
        cur = next;
    }
    // Mixed-radix expansion of sorted inputs stays sorted and duplicate free.
    SparseVec::from_pairs(cur)
}

impl FrobeniusAlgebra {
    pub fn tensor_power_space(&self, m: usize) -> TensorSpace {
        TensorSpace::new(self.dim(), m)
    }

    /// `1^{⊗m}`.
    pub fn tensor_unit(&self, m: usize) -> SparseVec {
        tensor_of(&vec![self.unit_sparse(); m], self.dim())
    }

    /// Product of two basis monomials of `A^{⊗m}`.
    pub fn tensor_basis_product(&self, m: usize, u: usize, v: usize) -> SparseVec {
        let space = self.tensor_power_space(m);
        let (du, dv) = (space.decode(u), space.decode(v));
        let factors: Vec<SparseVec> = du
            .iter()
            .zip(&dv)
            .map(|(&a, &b)| self.basis_product(a, b).clone())
            .collect();
        tensor_of(&factors, self.dim())
    }

    /// Factorwise product in `A^{⊗m}`.
    pub fn tensor_multiply(&self, m: usize, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseAccumulator::new();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                acc.add_scaled(&self.tensor_basis_product(m, i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// Dense form of [`tensor_multiply`](Self::tensor_multiply).
    pub fn factorwise_multiply(&self, m: usize, u: &[Scalar], v: &[Scalar]) -> Vector {
        let dim = self.tensor_power_space(m).dim();
        self.tensor_multiply(m, &SparseVec::from_dense(u), &SparseVec::from_dense(v))
            .to_dense(dim)
    }

    /// `η^{⊗m}(e_u, e_v)`.
    pub fn tensor_metric_entry(&self, m: usize, u: usize, v: usize) -> Scalar {
        let space = self.tensor_power_space(m);
        let mut s = Scalar::one();
        for (a, b) in space.decode(u).into_iter().zip(space.decode(v)) {
            let e = &self.metric()[(a, b)];
            if e.is_zero() {
                return Scalar::zero();
            }
            s *= e;
        }
        s
    }

    pub fn tensor_pair(&self, m: usize, u: &SparseVec, v: &SparseVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                let e = self.tensor_metric_entry(m, i, j);
                if !e.is_zero() {
                    s += &(x * y) * &e;
                }
            }
        }
        s
    }

    pub fn tensor_degree(&self, m: usize, u: usize) -> i64 {
        self.tensor_power_space(m)
            .decode(u)
            .iter()
            .map(|&i| self.degree(i))
            .sum()
    }

    pub fn tensor_parity(&self, m: usize, u: usize) -> u8 {
        (self
            .tensor_power_space(m)
            .decode(u)
            .iter()
            .map(|&i| self.parity(i) as usize)
            .sum::<usize>()
            % 2) as u8
    }

    /// `"1⊗x"`; the empty tensor is `"1"`.
    pub fn tensor_label(&self, m: usize, u: usize) -> String {
        if m == 0 {
            return "1".to_string();
        }
        let digits = self.tensor_power_space(m).decode(u);
        digits
            .iter()
            .map(|&i| self.label(i))
            .collect::<Vec<_>>()
            .join("⊗")
    }
}
