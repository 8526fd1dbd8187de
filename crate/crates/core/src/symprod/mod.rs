//! Second quantization of a commutative, even Frobenius algebra `A` for
//! `S_n`: sectors `A_σ = A^{⊗l(σ)}` over the cycles of `σ`, with the
//! product computed along two independent paths, the factor-permuting
//! action, and the Hilbert and λ twists.

mod checks;
mod maps;
mod product;
#[cfg(test)]
mod tests;

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::cocycles::{normalized_sn_cocycle_on, Cocycle2, SuperTwist};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseVec};
use crate::frobenius::{tensor_of, FrobeniusAlgebra, TensorSpace};
use crate::gfrob::{GFrobeniusAlgebra, GFrobeniusParts, Sector};
use crate::groups::{
    group_orbits, FiniteGroup, OrbitPartition, Permutation, DEFAULT_ENUMERATION_BOUND,
};

pub use checks::GammaData;
pub use maps::Merge;
pub use product::{obstruction_exponent, ChainPlan, PushforwardPlan};

/// Default cap on the number of basis pairs in the product table.
pub const DEFAULT_BUILD_BUDGET: u128 = 1_000_000;

/// Which path fills the product table in [`SymmetricProduct::build`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProductPath {
    #[default]
    Pushforward,
    Chain,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub budget: u128,
    pub path: ProductPath,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            budget: DEFAULT_BUILD_BUDGET,
            path: ProductPath::Pushforward,
        }
    }
}

/// Configuration and cached data of the second quantization of `base`.
#[derive(Debug)]
pub struct SymmetricProduct {
    base: FrobeniusAlgebra,
    n: usize,
    group: Arc<FiniteGroup>,
    cycles: Vec<OrbitPartition>,
    euler_powers: Vec<SparseVec>,
    copush: Vec<OnceLock<Vec<SparseVec>>>,
}

impl SymmetricProduct {
    pub fn new(base: FrobeniusAlgebra, n: usize) -> Result<Self> {
        Self::with_bound(base, n, DEFAULT_ENUMERATION_BOUND)
    }

    /// Rejects odd or noncommutative bases and bases failing any law.
    pub fn with_bound(base: FrobeniusAlgebra, n: usize, bound: usize) -> Result<Self> {
        if !base.is_even() {
            return Err(Error::Unsupported(
                "second quantization of a base with odd classes".into(),
            ));
        }
        if !base.is_commutative() {
            return Err(Error::Unsupported(
                "second quantization of a noncommutative base".into(),
            ));
        }
        let report = base.verify();
        if !report.passed() {
            return Err(Error::InvalidAlgebra(format!(
                "base fails {}",
                report.failed_codes().join(", ")
            )));
        }
        let group = Arc::new(FiniteGroup::symmetric_with_bound(n, bound)?);
        let cycles = group
            .permutations()
            .expect("symmetric group")
            .iter()
            .map(Permutation::cycles)
            .collect();
        let e = base.euler_class()?;
        let mut euler_powers = vec![base.unit_sparse()];
        for k in 1..=n {
            let next = base.multiply_sparse(&euler_powers[k - 1], &e);
            euler_powers.push(next);
        }
        let copush = (0..=n).map(|_| OnceLock::new()).collect();
        Ok(SymmetricProduct {
            base,
            n,
            group,
            cycles,
            euler_powers,
            copush,
        })
    }

    pub fn base(&self) -> &FrobeniusAlgebra {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn perm(&self, g: usize) -> &Permutation {
        self.group.permutation(g).expect("symmetric group")
    }

    pub fn index_of(&self, p: &Permutation) -> Result<usize> {
        self.group
            .index_of_permutation(p)
            .ok_or_else(|| Error::Unknown {
                kind: "permutation",
                name: p.to_string(),
            })
    }

    pub fn cycles(&self, g: usize) -> &OrbitPartition {
        &self.cycles[g]
    }

    pub fn sector_space(&self, g: usize) -> TensorSpace {
        TensorSpace::new(self.base.dim(), self.cycles[g].len())
    }

    pub fn sector_dim(&self, g: usize) -> usize {
        self.sector_space(g).dim()
    }

    /// `1_σ = 1^{⊗l(σ)}`.
    pub fn sector_unit(&self, g: usize) -> SparseVec {
        self.base.tensor_unit(self.cycles[g].len())
    }

    /// `e^k` for `k ≤ n`.
    pub fn euler_power(&self, k: u32) -> SparseVec {
        match self.euler_powers.get(k as usize) {
            Some(p) => p.clone(),
            None => {
                let e = self.base.euler_class().expect("nondegenerate base");
                (0..k).fold(self.base.unit_sparse(), |acc, _| {
                    self.base.multiply_sparse(&acc, &e)
                })
            }
        }
    }

    pub(crate) fn copush(&self, k: usize) -> &[SparseVec] {
        self.copush[k].get_or_init(|| self.compute_copush(k))
    }

    /// The partition into singletons, i.e. the cycles of the identity.
    pub fn discrete(&self) -> OrbitPartition {
        self.cycles[self.group.identity()].clone()
    }

    /// `r` from the orbits of `⟨from⟩` to the orbits of `⟨to_gens⟩`.
    pub fn restriction(
        &self,
        from: &[Permutation],
        to_gens: &[Permutation],
        v: &SparseVec,
    ) -> Result<SparseVec> {
        let fine = group_orbits(from, Some(self.n))?;
        let coarse = group_orbits(to_gens, Some(self.n))?;
        self.restrict(&fine, &coarse, v)
    }

    /// Estimated product-table size `(Σ_σ dim A_σ)²`.
    pub fn build_cost(&self) -> u128 {
        let total: u128 = (0..self.group.order())
            .map(|g| self.sector_dim(g) as u128)
            .sum();
        total * total
    }

    pub fn build(&self) -> Result<GFrobeniusAlgebra> {
        self.build_with(BuildOptions::default())
    }

    /// The full G-Frobenius algebra: product from the chosen path, `φ`
    /// permuting tensor factors with coefficient 1, metric `η^{⊗l(σ)}`,
    /// unit `1^{⊗n}` and `χ ≡ 1`.
    pub fn build_with(&self, opts: BuildOptions) -> Result<GFrobeniusAlgebra> {
        let cost = self.build_cost();
        if cost > opts.budget {
            return Err(Error::Budget {
                estimate: cost,
                limit: opts.budget,
            });
        }
        let grp = &self.group;
        let ord = grp.order();
        let d = self.base.dim();
        let sectors = (0..ord)
            .map(|g| {
                let l = self.cycles[g].len();
                let dim = self.sector_dim(g);
                let labels = (0..dim)
                    .map(|u| {
                        if d == 1 {
                            self.base.label(0).to_string()
                        } else {
                            self.base.tensor_label(l, u)
                        }
                    })
                    .collect();
                let degrees = (0..dim).map(|u| self.base.tensor_degree(l, u)).collect();
                Sector {
                    labels,
                    degrees,
                    parity: vec![0; dim],
                }
            })
            .collect();
        let product = (0..ord * ord)
            .into_par_iter()
            .map(|gh| {
                let (g, h) = (gh / ord, gh % ord);
                let (dg, dh) = (self.sector_dim(g), self.sector_dim(h));
                let mut table = Vec::with_capacity(dg * dh);
                match opts.path {
                    ProductPath::Pushforward => {
                        let plan = self.pushforward_plan(g, h)?;
                        for a in 0..dg {
                            for b in 0..dh {
                                table.push(self.apply_pushforward(
                                    &plan,
                                    &SparseVec::unit(a),
                                    &SparseVec::unit(b),
                                ));
                            }
                        }
                    }
                    ProductPath::Chain => {
                        let plan = self.chain_plan(g, h, None)?;
                        for a in 0..dg {
                            for b in 0..dh {
                                table.push(self.apply_chain(
                                    &plan,
                                    &SparseVec::unit(a),
                                    &SparseVec::unit(b),
                                ));
                            }
                        }
                    }
                }
                Ok(table)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut action = Vec::with_capacity(ord * ord);
        for g in 0..ord {
            for h in 0..ord {
                action.push(self.action_matrix(g, h));
            }
        }
        let metric = (0..ord).map(|g| self.metric_rows(g)).collect();
        GFrobeniusAlgebra::from_parts(GFrobeniusParts {
            name: format!("Sym^{}({})", self.n, self.base.name()),
            group: grp.clone(),
            sectors,
            product,
            action,
            metric,
            unit: self.base.tensor_unit(self.n),
            character: vec![Scalar::one(); ord],
        })
    }

    /// `φ_g: A_h → A_{ghg⁻¹}` sends the factor on the cycle `C` of `h` to
    /// the factor on the cycle `g(C)` of `ghg⁻¹`.
    pub fn action_matrix(&self, g: usize, h: usize) -> Vec<SparseVec> {
        let target = self.group.conj(g, h);
        let p = self.perm(g);
        let owner = self.cycles[target].block_of();
        let slots: Vec<usize> = self.cycles[h]
            .blocks()
            .iter()
            .map(|c| owner[p.apply(c[0])])
            .collect();
        let space = self.sector_space(h);
        (0..space.dim())
            .map(|u| {
                let digits = space.decode(u);
                let mut moved = vec![0; digits.len()];
                for (i, &s) in slots.iter().enumerate() {
                    moved[s] = digits[i];
                }
                SparseVec::unit(space.encode(&moved))
            })
            .collect()
    }

    /// Rows of `η^{⊗l(σ)}` pairing `A_σ` with `A_{σ⁻¹}` (same cycles, same
    /// factor order).
    pub fn metric_rows(&self, g: usize) -> Vec<SparseVec> {
        let d = self.base.dim();
        let rows: Vec<SparseVec> = (0..d)
            .map(|i| SparseVec::from_dense(self.base.metric().row(i)))
            .collect();
        let space = self.sector_space(g);
        (0..space.dim())
            .map(|u| {
                tensor_of(
                    &space
                        .decode(u)
                        .iter()
                        .map(|&i| rows[i].clone())
                        .collect::<Vec<_>>(),
                    d,
                )
            })
            .collect()
    }
}

/// Twist by `normalized_sn_cocycle(n, λ)` with no super part.
pub fn qw_twist(x: &GFrobeniusAlgebra, lambda: &Scalar) -> Result<GFrobeniusAlgebra> {
    if lambda.is_zero() {
        return Err(Error::InvalidCocycle("λ must be nonzero".into()));
    }
    let alpha: Cocycle2 = normalized_sn_cocycle_on(x.group_arc(), lambda)?;
    let out = x.twist(&alpha, &SuperTwist::trivial(x.group_arc().clone()))?;
    Ok(out.with_name(format!("{}^(λ={lambda})", x.name())))
}

/// The sign twist `λ = −1`: product sign `(−1)^{½(|σ|+|σ′|−|σσ′|)}` and
/// metric sign `(−1)^{|σ|}`.
pub fn hilbert_twist(x: &GFrobeniusAlgebra) -> Result<GFrobeniusAlgebra> {
    qw_twist(x, &Scalar::from_int(-1))
}
