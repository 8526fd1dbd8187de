use super::maps::Merge;
use super::SymmetricProduct;
use crate::error::Result;
use crate::exactnum::{metric_adjoint, Matrix, Scalar, SparseVec};
use crate::frobenius::TensorSpace;
use crate::groups::OrbitPartition;
use crate::report::{Check, Report, Witness};

/// The pieces of the cocycle for a pair `(σ, σ′)`.
#[derive(Clone, Debug)]
pub struct GammaData {
    /// `Π_{i∈I} Δ_{τ′_i} ∈ A_e`, a representative of `γ_{σ,σ′}`.
    pub gamma: SparseVec,
    /// Orbits of `⟨σ, σ′⟩`.
    pub joint: OrbitPartition,
    pub exponents: Vec<u32>,
    /// `γ̃ = Π_B e^{g(B)} ∈ A_{σ,σ′}`.
    pub gamma_tilde: SparseVec,
    /// `γ⊥ = ř(1_{σ,σ′}) ∈ A_{σσ′}`.
    pub gamma_perp: SparseVec,
    /// `r_{σσ′}(γ) = ř(γ̃) = 1_σ ∘ 1_σ′`.
    pub restricted: SparseVec,
}

impl SymmetricProduct {
    pub fn gamma_data(&self, g: usize, h: usize) -> Result<GammaData> {
        let push = self.pushforward_plan(g, h)?;
        let chain = self.chain_plan(g, h, None)?;
        let gh = push.product;
        let down = Merge::new(&self.cycles[gh], &push.joint)?;
        let one = self.base.tensor_unit(push.joint.len());
        Ok(GammaData {
            gamma_perp: self.pushforward_with(&down, &one),
            restricted: self.pushforward_with(&down, &push.gamma_tilde),
            gamma: chain.gamma,
            joint: push.joint,
            exponents: push.exponents,
            gamma_tilde: push.gamma_tilde,
        })
    }

    /// `r_σ: A_e → A_σ` as a dense `dim A_σ × dim A_e` matrix.
    pub fn restriction_matrix(&self, g: usize) -> Result<Matrix> {
        let merge = Merge::new(&self.discrete(), &self.cycles[g])?;
        let cols: Vec<SparseVec> = (0..self.sector_dim(self.group.identity()))
            .map(|u| self.restrict_with(&merge, &SparseVec::unit(u)))
            .collect();
        Ok(Matrix::from_sparse_columns(self.sector_dim(g), &cols))
    }

    /// `η^{⊗l(σ)}` on `A_σ × A_{σ⁻¹}` as a dense matrix.
    pub fn metric_matrix(&self, g: usize) -> Matrix {
        Matrix::from_sparse_columns(self.sector_dim(g), &self.metric_rows(g)).transpose()
    }

    /// Basis of `I_σ = ker(r_σ) ⊂ A_e`.
    pub fn kernel_basis(&self, g: usize) -> Result<Vec<SparseVec>> {
        Ok(self
            .restriction_matrix(g)?
            .nullspace()
            .iter()
            .map(|v| SparseVec::from_dense(v))
            .collect())
    }

    /// `(I_σ + I_σ′) γ⊥_{σ,σ′} ⊂ I_{σσ′}`: each kernel vector, acting on
    /// `γ⊥` through `r_{σσ′}`, gives zero.
    pub fn kernel_lemma(&self, g: usize, h: usize) -> Result<Option<Witness>> {
        let data = self.gamma_data(g, h)?;
        let gh = self.group.mul(g, h);
        let l = self.cycles[gh].len();
        let down = Merge::new(&self.discrete(), &self.cycles[gh])?;
        for (side, k) in [("I_σ", g), ("I_σ′", h)] {
            for x in self.kernel_basis(k)? {
                let y =
                    self.base
                        .tensor_multiply(l, &self.restrict_with(&down, &x), &data.gamma_perp);
                if !y.is_zero() {
                    return Ok(Some(Witness::new(
                        format!("{side} for σ={}, σ′={}", self.perm(g), self.perm(h)),
                        self.base.tensor_label(l, y.entries()[0].0),
                        0,
                    )));
                }
            }
        }
        Ok(None)
    }

    /// `γ_{σ,σ⁻¹} = 1_σ ∘ 1_{σ⁻¹}` against `ř_σ(1_σ)` computed densely as
    /// `η_e⁻¹ r_σᵀ η_σ`.
    pub fn metric_compatibility(&self, g: usize) -> Result<Option<Witness>> {
        let gi = self.group.inv(g);
        let e = self.group.identity();
        let lhs = self.multiply_pushforward(g, &self.sector_unit(g), gi, &self.sector_unit(gi))?;
        let adj = metric_adjoint(
            &self.restriction_matrix(g)?,
            &self.metric_matrix(e),
            &self.metric_matrix(g),
        )?;
        let one = self.sector_unit(g).to_dense(self.sector_dim(g));
        let rhs = SparseVec::from_dense(&adj.mul_vec(&one)?);
        Ok((lhs != rhs).then(|| {
            Witness::new(
                format!("σ={}", self.perm(g)),
                self.format_sector(e, &lhs),
                self.format_sector(e, &rhs),
            )
        }))
    }

    /// Degree of `γ̃` against `½(d − d_σ − d_σ′ − d_σσ′) + d_{σ,σ′}` with
    /// unshifted top degrees `d_X = D·l(X)`. `None` when `γ̃ = 0`.
    pub fn degree_identity(&self, g: usize, h: usize) -> Result<Option<(i64, i64)>> {
        let data = self.gamma_data(g, h)?;
        let top = self.base.top_degree().unwrap_or(0);
        let dl = |l: usize| top * l as i64;
        let gh = self.group.mul(g, h);
        let twice = dl(self.n)
            - dl(self.cycles[g].len())
            - dl(self.cycles[h].len())
            - dl(self.cycles[gh].len());
        let expected = twice / 2 + dl(data.joint.len());
        let l = data.joint.len();
        let degs: Vec<i64> = data
            .gamma_tilde
            .iter()
            .map(|(u, _)| self.base.tensor_degree(l, u))
            .collect();
        match degs.first() {
            None => Ok(None),
            Some(&d0) if degs.iter().all(|&d| d == d0) => Ok(Some((d0, expected))),
            Some(_) => Ok(Some((i64::MIN, expected))),
        }
    }

    /// `φ_k` on `A_e`: the factor at position `i` moves to position `k(i)`.
    pub fn act_untwisted(&self, k: usize, v: &SparseVec) -> SparseVec {
        let table = self.action_matrix(k, self.group.identity());
        let mut out = SparseVec::new();
        for (u, c) in v.iter() {
            out = out.add_scaled(&table[u], c);
        }
        out
    }

    /// Checks the compatibility equations of a scalar non-abelian cocycle
    /// `φ_{g,h}` with the constructed `γ`, modulo `I_{gh} = ker r_{gh}`:
    ///
    /// `φ_{g,h} γ_{ghg⁻¹,g} ≡ (−1)^{p|g||h|} γ_{g,h}` and
    /// `φ_{k,g} φ_{k,h} γ_{kgk⁻¹,khk⁻¹} ≡ φ_k(γ_{g,h}) φ_{k,gh}`.
    ///
    /// The sign in the first equation is the super-commutativity sign of
    /// generators of parity `p|g|`.
    pub fn compatibility_pair(
        &self,
        p: u32,
        phi: impl Fn(usize, usize) -> Scalar,
    ) -> Result<Report> {
        let grp = self.group.clone();
        let ord = grp.order();
        let mut gamma = Vec::with_capacity(ord * ord);
        for g in 0..ord {
            for h in 0..ord {
                gamma.push(self.chain_plan(g, h, None)?.gamma);
            }
        }
        let gam = |g: usize, h: usize| &gamma[g * ord + h];
        let downs: Vec<Merge> = (0..ord)
            .map(|g| Merge::new(&self.discrete(), &self.cycles[g]))
            .collect::<Result<_>>()?;
        let vanishes = |g: usize, v: &SparseVec| self.restrict_with(&downs[g], v).is_zero();
        let deg = |g: usize| self.perm(g).degree() as i64;

        let mut report = Report::new(format!("compatibility pair on S_{} (p = {p})", self.n));
        let mut w = None;
        'grp: for g in 0..ord {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                let sign = Scalar::sign_power(p as i64 * deg(g) * deg(h));
                let diff = gam(grp.conj(g, h), g)
                    .scale(&phi(g, h))
                    .sub(&gam(g, h).scale(&sign));
                if !vanishes(gh, &diff) {
                    w = Some(Witness::new(
                        format!("g={}, h={}", grp.label(g), grp.label(h)),
                        format!("φ_{{g,h}} = {}", phi(g, h)),
                        "≢ 0 mod I_gh",
                    ));
                    break 'grp;
                }
            }
        }
        report.push(Check::new(
            "grpcompat",
            "φ_{g,h} γ_{ghg⁻¹,g} ≡ ±γ_{g,h} mod I_{gh}",
            (ord * ord) as u64,
            w,
        ));

        let mut w = None;
        'alg: for k in 0..ord {
            for g in 0..ord {
                for h in 0..ord {
                    let (kg, kh) = (grp.conj(k, g), grp.conj(k, h));
                    let gh = grp.mul(g, h);
                    let lhs = gam(kg, kh).scale(&(phi(k, g) * phi(k, h)));
                    let rhs = self.act_untwisted(k, gam(g, h)).scale(&phi(k, gh));
                    if !vanishes(grp.conj(k, gh), &lhs.sub(&rhs)) {
                        w = Some(Witness::new(
                            format!("k={}, g={}, h={}", grp.label(k), grp.label(g), grp.label(h)),
                            "lhs",
                            "rhs",
                        ));
                        break 'alg;
                    }
                }
            }
        }
        report.push(Check::new(
            "algaut",
            "φ_{k,g}φ_{k,h}γ ≡ φ_k(γ)φ_{k,gh} mod I",
            (ord * ord * ord) as u64,
            w,
        ));
        Ok(report)
    }

    pub fn format_sector(&self, g: usize, v: &SparseVec) -> String {
        let l = self.cycles[g].len();
        crate::frobenius::format_linear(v, |u| {
            if self.base.dim() == 1 {
                self.base.label(0).to_string()
            } else {
                self.base.tensor_label(l, u)
            }
        })
    }

    /// Mixed-radix scheme of `A^{⊗n}`.
    pub fn untwisted_space(&self) -> TensorSpace {
        self.sector_space(self.group.identity())
    }
}
