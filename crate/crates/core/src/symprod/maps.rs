use super::SymmetricProduct;
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseAccumulator, SparseVec};
use crate::frobenius::{tensor_of, TensorSpace};
use crate::groups::OrbitPartition;

/// For a refinement `fine ≤ coarse`, the fine blocks inside each coarse
/// block, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    pub fine_len: usize,
    pub groups: Vec<Vec<usize>>,
}

impl Merge {
    pub fn new(fine: &OrbitPartition, coarse: &OrbitPartition) -> Result<Self> {
        if !fine.refines(coarse) {
            return Err(Error::NotNested(format!(
                "{:?} does not refine {:?}",
                fine.blocks(),
                coarse.blocks()
            )));
        }
        let owner = coarse.block_of();
        let mut groups = vec![Vec::new(); coarse.len()];
        for (i, b) in fine.blocks().iter().enumerate() {
            groups[owner[b[0]]].push(i);
        }
        Ok(Merge {
            fine_len: fine.len(),
            groups,
        })
    }

    pub fn coarse_len(&self) -> usize {
        self.groups.len()
    }
}

impl SymmetricProduct {
    /// `r`: multiply the fine factors inside each coarse block.
    pub fn restrict_with(&self, merge: &Merge, v: &SparseVec) -> SparseVec {
        let d = self.base.dim();
        let fine = TensorSpace::new(d, merge.fine_len);
        let mut acc = SparseAccumulator::new();
        for (u, c) in v.iter() {
            let digits = fine.decode(u);
            let mut factors = Vec::with_capacity(merge.coarse_len());
            for grp in &merge.groups {
                let mut p = SparseVec::unit(digits[grp[0]]);
                for &i in &grp[1..] {
                    p = self.base.multiply_sparse(&p, &SparseVec::unit(digits[i]));
                }
                factors.push(p);
            }
            acc.add_scaled(&tensor_of(&factors, d), c);
        }
        acc.finish()
    }

    pub fn restrict(
        &self,
        fine: &OrbitPartition,
        coarse: &OrbitPartition,
        v: &SparseVec,
    ) -> Result<SparseVec> {
        Ok(self.restrict_with(&Merge::new(fine, coarse)?, v))
    }

    /// `ř`: the metric adjoint of [`restrict_with`](Self::restrict_with),
    /// from the coarse tensor power back to the fine one.
    pub fn pushforward_with(&self, merge: &Merge, y: &SparseVec) -> SparseVec {
        let d = self.base.dim();
        let coarse = TensorSpace::new(d, merge.coarse_len());
        let fine = TensorSpace::new(d, merge.fine_len);
        let mut acc = SparseAccumulator::new();
        for (u, c) in y.iter() {
            let digits = coarse.decode(u);
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(vec![0; merge.fine_len], c.clone())];
            for (b, grp) in merge.groups.iter().enumerate() {
                let k = grp.len();
                let table = self.copush(k);
                let local = TensorSpace::new(d, k);
                let piece = &table[digits[b]];
                let mut next = Vec::with_capacity(partial.len() * piece.nnz());
                for (ds, x) in &partial {
                    for (w, y) in piece.iter() {
                        let mut ds = ds.clone();
                        for (slot, digit) in grp.iter().zip(local.decode(w)) {
                            ds[*slot] = digit;
                        }
                        next.push((ds, x * y));
                    }
                }
                partial = next;
            }
            for (ds, x) in partial {
                acc.add(fine.encode(&ds), &x);
            }
        }
        acc.finish()
    }

    pub fn pushforward(
        &self,
        fine: &OrbitPartition,
        coarse: &OrbitPartition,
        y: &SparseVec,
    ) -> Result<SparseVec> {
        Ok(self.pushforward_with(&Merge::new(fine, coarse)?, y))
    }

    /// `ř_k(e_a) ∈ A^{⊗k}`, the adjoint of `k`-fold multiplication, for
    /// every basis vector `e_a`.
    pub(crate) fn compute_copush(&self, k: usize) -> Vec<SparseVec> {
        let base = &self.base;
        let d = base.dim();
        let dual = base
            .dual_basis()
            .expect("verified base has a nondegenerate metric");
        let space = TensorSpace::new(d, k);
        let mut out = vec![SparseAccumulator::new(); d];
        for t in 0..space.dim() {
            let digits = space.decode(t);
            let mut p = SparseVec::unit(digits[0]);
            for &i in &digits[1..] {
                p = base.multiply_sparse(&p, &SparseVec::unit(i));
            }
            if p.is_zero() {
                continue;
            }
            let dual_tensor = tensor_of(
                &digits.iter().map(|&i| dual[i].clone()).collect::<Vec<_>>(),
                d,
            );
            for (a, slot) in out.iter_mut().enumerate() {
                let w = base.pair(&SparseVec::unit(a), &p);
                if !w.is_zero() {
                    slot.add_scaled(&dual_tensor, &w);
                }
            }
        }
        out.into_iter().map(SparseAccumulator::finish).collect()
    }
}
