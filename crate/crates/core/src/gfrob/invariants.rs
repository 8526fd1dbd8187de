use super::GFrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar, SparseAccumulator, SparseEchelon, SparseVec};

/// The invariant subspace `A^G ⊂ ⊕_g A_g` with its conjugacy-class grading.
///
/// Vectors use the global index of [`GFrobeniusAlgebra::offsets`]. The basis
/// is in reduced echelon form, so coordinates are entries at the pivots.
#[derive(Clone, Debug)]
pub struct InvariantAlgebra {
    offsets: Vec<usize>,
    classes: Vec<Vec<usize>>,
    basis: Vec<SparseVec>,
    class_of: Vec<usize>,
    sector_of: Vec<usize>,
    degrees: Vec<i64>,
    echelon: SparseEchelon,
}

impl GFrobeniusAlgebra {
    fn split_global(&self, offsets: &[usize], v: &SparseVec) -> Vec<(usize, SparseVec)> {
        let mut out: Vec<(usize, Vec<(usize, Scalar)>)> = Vec::new();
        for (i, x) in v.iter() {
            let g = offsets.partition_point(|&o| o <= i) - 1;
            match out.last_mut() {
                Some((h, entries)) if *h == g => entries.push((i - offsets[g], x.clone())),
                _ => out.push((g, vec![(i - offsets[g], x.clone())])),
            }
        }
        out.into_iter()
            .map(|(g, e)| (g, SparseVec::from_pairs(e)))
            .collect()
    }

    /// Product of two elements of `⊕_g A_g` in global coordinates.
    pub fn multiply_global(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let off = self.offsets();
        let mut acc = SparseAccumulator::new();
        for (g, ug) in self.split_global(&off, u) {
            for (h, vh) in self.split_global(&off, v) {
                let gh = self.group.mul(g, h);
                for (i, x) in self.multiply(g, &ug, h, &vh).iter() {
                    acc.add(off[gh] + i, x);
                }
            }
        }
        acc.finish()
    }

    /// `η` extended to `⊕_g A_g`.
    pub fn pair_global(&self, u: &SparseVec, v: &SparseVec) -> Scalar {
        let off = self.offsets();
        let vs = self.split_global(&off, v);
        let mut s = Scalar::zero();
        for (g, ug) in self.split_global(&off, u) {
            let gi = self.group.inv(g);
            if let Some((_, vg)) = vs.iter().find(|(h, _)| *h == gi) {
                s += self.pair(g, &ug, vg);
            }
        }
        s
    }

    /// Image of the projector `P = (1/|G|) Σ_g φ_g`, graded by conjugacy
    /// class. Fails when `φ` is not a representation, since `P` is then not
    /// idempotent.
    pub fn invariants(&self) -> Result<InvariantAlgebra> {
        let grp = &self.group;
        let ord = grp.order();
        for g in 0..ord {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                for k in 0..ord {
                    let hk = grp.conj(h, k);
                    for b in 0..self.sector_dim(k) {
                        if self.act(g, hk, self.basis_action(h, k, b))
                            != *self.basis_action(gh, k, b)
                        {
                            return Err(Error::InvalidAlgebra(
                                "projector onto invariants is not idempotent: φ is not a representation".into(),
                            ));
                        }
                    }
                }
            }
        }
        let offsets = self.offsets();
        let classes = grp.conjugacy_classes();
        let scale = Scalar::frac(1, ord as i64);
        let mut echelon = SparseEchelon::new();
        for class in &classes {
            // P φ_k = P, so P(A_{g₀}) is the whole class component.
            let g0 = class[0];
            for a in 0..self.sector_dim(g0) {
                let mut acc = SparseAccumulator::new();
                for k in 0..ord {
                    let target = grp.conj(k, g0);
                    for (i, x) in self.basis_action(k, g0, a).iter() {
                        acc.add(offsets[target] + i, &(x * &scale));
                    }
                }
                echelon.insert(&acc.finish());
            }
        }
        // Rows come back sorted by pivot; rebuild class and degree data.
        let basis: Vec<SparseVec> = echelon.rows().cloned().collect();
        let pivots = echelon.pivots();
        let sector_of: Vec<usize> = pivots
            .iter()
            .map(|&p| offsets.partition_point(|&o| o <= p) - 1)
            .collect();
        let class_index = {
            let mut m = vec![0; ord];
            for (ci, c) in classes.iter().enumerate() {
                for &g in c {
                    m[g] = ci;
                }
            }
            m
        };
        let class_of = sector_of.iter().map(|&g| class_index[g]).collect();
        let degrees = pivots
            .iter()
            .zip(&sector_of)
            .map(|(&p, &g)| self.sectors[g].degrees[p - offsets[g]])
            .collect();
        Ok(InvariantAlgebra {
            offsets,
            classes,
            basis,
            class_of,
            sector_of,
            degrees,
            echelon,
        })
    }
}

impl InvariantAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Conjugacy classes as lists of group elements, in the order used by
    /// [`class_dims`](Self::class_dims).
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.classes.len()];
        for &c in &self.class_of {
            out[c] += 1;
        }
        out
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// A sector carrying the pivot of basis vector `i`.
    pub fn sector_of(&self, i: usize) -> usize {
        self.sector_of[i]
    }

    /// Degree of basis vector `i` (all components share it when `φ`
    /// preserves degrees).
    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        self.echelon.coordinates(v)
    }

    /// Structure constants `b_i b_j = Σ_k c_{ij}^k b_k`; fails if a product
    /// leaves the invariant subspace.
    pub fn structure_constants(&self, x: &GFrobeniusAlgebra) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let n = self.dim();
        let mut out = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = x.multiply_global(&self.basis[i], &self.basis[j]);
                out[i][j] = self.coordinates(&p).ok_or_else(|| {
                    Error::InvalidAlgebra(format!(
                        "product of invariants {i}, {j} is not invariant"
                    ))
                })?;
            }
        }
        Ok(out)
    }

    pub fn is_commutative(&self, x: &GFrobeniusAlgebra) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                x.multiply_global(&self.basis[i], &self.basis[j])
                    == x.multiply_global(&self.basis[j], &self.basis[i])
            })
        })
    }

    /// Restriction of `η` to the invariant basis.
    pub fn restricted_metric(&self, x: &GFrobeniusAlgebra) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = x.pair_global(&self.basis[i], &self.basis[j]);
            }
        }
        m
    }

    pub fn metric_is_degenerate(&self, x: &GFrobeniusAlgebra) -> bool {
        self.restricted_metric(x).rank() < self.dim()
    }
}
