use super::maps::Merge;
use super::SymmetricProduct;
use crate::error::{Error, Result};
use crate::exactnum::SparseVec;
use crate::frobenius::{tensor_of, TensorSpace};
use crate::groups::{group_orbits, OrbitPartition, Permutation};

/// `g(B) = ½(|B| + 2 − #σ-orbits − #σ′-orbits − #σσ′-orbits)`, counting
/// orbits inside the `⟨σ, σ′⟩`-orbit `B`.
pub fn obstruction_exponent(
    sigma: &Permutation,
    tau: &Permutation,
    block: &[usize],
) -> Result<u32> {
    let prod = sigma.compose(tau)?;
    let inside = |p: &Permutation| {
        p.cycles()
            .blocks()
            .iter()
            .filter(|c| block.contains(&c[0]))
            .count() as i64
    };
    let twice = block.len() as i64 + 2 - inside(sigma) - inside(tau) - inside(&prod);
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Convention(format!(
            "obstruction exponent 2g = {twice} on block {block:?} for σ={sigma}, σ′={tau}"
        )));
    }
    Ok((twice / 2) as u32)
}

/// Precomputed data for `A_σ ⊗ A_σ′ → A_{σσ′}` along the intersection path
/// `ř(r(a) r(b) γ̃)`.
#[derive(Clone, Debug)]
pub struct PushforwardPlan {
    pub sigma: usize,
    pub tau: usize,
    pub product: usize,
    pub joint: OrbitPartition,
    pub exponents: Vec<u32>,
    pub gamma_tilde: SparseVec,
    left: Merge,
    right: Merge,
    down: Merge,
}

/// Precomputed data for the chain path `r_{σσ′}(i_σ(a) i_σ′(b) Π_{i∈I} Δ_{τ′_i})`.
#[derive(Clone, Debug)]
pub struct ChainPlan {
    pub sigma: usize,
    pub tau: usize,
    pub product: usize,
    pub word: Vec<Permutation>,
    /// Letters of the word at which `|σ τ′_1 ⋯ τ′_i|` drops.
    pub contractions: Vec<Permutation>,
    /// `Π_{i∈I} Δ_{τ′_i} ∈ A^{⊗n}`.
    pub gamma: SparseVec,
    down: Merge,
}

impl SymmetricProduct {
    pub fn pushforward_plan(&self, g: usize, h: usize) -> Result<PushforwardPlan> {
        let (s, t) = (self.perm(g), self.perm(h));
        let joint = group_orbits(&[s.clone(), t.clone()], Some(self.n))?;
        let gh = self.group.mul(g, h);
        let mut exponents = Vec::with_capacity(joint.len());
        let mut factors = Vec::with_capacity(joint.len());
        for b in joint.blocks() {
            let e = obstruction_exponent(s, t, b)?;
            factors.push(self.euler_power(e));
            exponents.push(e);
        }
        let gamma_tilde = tensor_of(&factors, self.base.dim());
        Ok(PushforwardPlan {
            sigma: g,
            tau: h,
            product: gh,
            left: Merge::new(&self.cycles[g], &joint)?,
            right: Merge::new(&self.cycles[h], &joint)?,
            down: Merge::new(&self.cycles[gh], &joint)?,
            joint,
            exponents,
            gamma_tilde,
        })
    }

    pub fn apply_pushforward(
        &self,
        plan: &PushforwardPlan,
        a: &SparseVec,
        b: &SparseVec,
    ) -> SparseVec {
        let l = plan.joint.len();
        let ra = self.restrict_with(&plan.left, a);
        let rb = self.restrict_with(&plan.right, b);
        let prod = self.base.tensor_multiply(
            l,
            &self.base.tensor_multiply(l, &ra, &rb),
            &plan.gamma_tilde,
        );
        self.pushforward_with(&plan.down, &prod)
    }

    /// `a ∘ b = ř^{σσ′}_{⟨σ,σ′⟩}(r(a) r(b) Π_B e^{g(B)})`.
    pub fn multiply_pushforward(
        &self,
        g: usize,
        a: &SparseVec,
        h: usize,
        b: &SparseVec,
    ) -> Result<SparseVec> {
        Ok(self.apply_pushforward(&self.pushforward_plan(g, h)?, a, b))
    }

    /// Chain plan using `word` for `σ′`, or its greedy minimal word.
    pub fn chain_plan(
        &self,
        g: usize,
        h: usize,
        word: Option<&[Permutation]>,
    ) -> Result<ChainPlan> {
        let (s, t) = (self.perm(g), self.perm(h));
        let word = match word {
            Some(w) => w.to_vec(),
            None => t.minimal_word(),
        };
        let mut check = Permutation::identity(self.n);
        for letter in &word {
            if letter.n() != self.n || letter.degree() != 1 {
                return Err(Error::InvalidPermutation(format!(
                    "{letter} is not a transposition of degree {}",
                    self.n
                )));
            }
            check = check.compose(letter)?;
        }
        if check != *t || word.len() != t.degree() {
            return Err(Error::InvalidPermutation(format!(
                "word is not a minimal factorization of {t}"
            )));
        }
        let copair = self.base.copairing()?;
        let mut x = s.clone();
        let mut contractions = Vec::new();
        let mut gamma = self.base.tensor_unit(self.n);
        for letter in &word {
            let next = x.compose(letter)?;
            if next.degree() + 1 == x.degree() {
                contractions.push(letter.clone());
                let moved: Vec<usize> = (0..self.n).filter(|&i| letter.apply(i) != i).collect();
                let delta = self.place_pair(&copair, moved[0], moved[1]);
                gamma = self.base.tensor_multiply(self.n, &gamma, &delta);
            }
            x = next;
        }
        let gh = self.group.mul(g, h);
        debug_assert_eq!(self.perm(gh), &x);
        Ok(ChainPlan {
            sigma: g,
            tau: h,
            product: gh,
            word,
            contractions,
            gamma,
            down: Merge::new(&self.discrete(), &self.cycles[gh])?,
        })
    }

    /// `Σ c_{ij} e_i ⊗ e_j` placed on positions `p < q` of `A^{⊗n}`, units elsewhere.
    fn place_pair(&self, pair: &SparseVec, p: usize, q: usize) -> SparseVec {
        let d = self.base.dim();
        let unit = self.base.unit_sparse();
        let mut out = SparseVec::new();
        for (idx, c) in pair.iter() {
            let (i, j) = (idx / d, idx % d);
            let factors: Vec<SparseVec> = (0..self.n)
                .map(|k| {
                    if k == p {
                        SparseVec::unit(i)
                    } else if k == q {
                        SparseVec::unit(j)
                    } else {
                        unit.clone()
                    }
                })
                .collect();
            out = out.add_scaled(&tensor_of(&factors, d), c);
        }
        out
    }

    /// The unit-tensor section `i_σ: A_σ → A^{⊗n}`, placing each cycle's
    /// factor at its smallest point.
    pub fn section(&self, g: usize, v: &SparseVec) -> SparseVec {
        let d = self.base.dim();
        let blocks = self.cycles[g].blocks();
        let space = TensorSpace::new(d, blocks.len());
        let unit = self.base.unit_sparse();
        let mut out = SparseVec::new();
        for (u, c) in v.iter() {
            let digits = space.decode(u);
            let mut factors = vec![unit.clone(); self.n];
            for (b, &dg) in blocks.iter().zip(&digits) {
                factors[b[0]] = SparseVec::unit(dg);
            }
            out = out.add_scaled(&tensor_of(&factors, d), c);
        }
        out
    }

    pub fn apply_chain(&self, plan: &ChainPlan, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let ia = self.section(plan.sigma, a);
        let ib = self.section(plan.tau, b);
        let n = self.n;
        let prod =
            self.base
                .tensor_multiply(n, &self.base.tensor_multiply(n, &ia, &ib), &plan.gamma);
        self.restrict_with(&plan.down, &prod)
    }

    /// `a ∘ b` via the explicit cocycle `Π_{i∈I} Δ_{τ′_i}` over a minimal
    /// transposition word of `σ′`.
    pub fn multiply_chain(
        &self,
        g: usize,
        a: &SparseVec,
        h: usize,
        b: &SparseVec,
        word: Option<&[Permutation]>,
    ) -> Result<SparseVec> {
        Ok(self.apply_chain(&self.chain_plan(g, h, word)?, a, b))
    }
}
