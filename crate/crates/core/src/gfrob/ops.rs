use super::{GFrobeniusAlgebra, GFrobeniusParts, Sector};
use crate::cocycles::{Cocycle2, SuperTwist};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseVec};

/// `x ⊗ y` with the second factor's index running fastest.
fn kron2(x: &SparseVec, y: &SparseVec, dim_y: usize) -> SparseVec {
    SparseVec::from_pairs(
        x.iter()
            .flat_map(|(i, a)| y.iter().map(move |(j, b)| (i * dim_y + j, a * b))),
    )
}

fn pair_label(x: &str, y: &str, dx: usize, dy: usize) -> String {
    if dy == 1 {
        x.to_string()
    } else if dx == 1 {
        y.to_string()
    } else {
        format!("{x}⊗{y}")
    }
}

impl GFrobeniusAlgebra {
    /// `X ⊗̂ Y`: sectors `X_g ⊗ Y_g` with product `∘ ⊗ ∘′`, metric
    /// `η ⊗ η′`, action `φ ⊗ φ′`, character `χχ′` and added parities.
    /// No Koszul signs are inserted.
    pub fn tensor_hat(&self, other: &GFrobeniusAlgebra) -> Result<GFrobeniusAlgebra> {
        if *self.group != *other.group {
            return Err(Error::GroupMismatch(
                "tensor product over different groups".into(),
            ));
        }
        let grp = &self.group;
        let ord = grp.order();
        let dy = |g: usize| other.sector_dim(g);
        let sectors = (0..ord)
            .map(|g| {
                let (sx, sy) = (&self.sectors[g], &other.sectors[g]);
                let mut s = Sector {
                    labels: Vec::new(),
                    degrees: Vec::new(),
                    parity: Vec::new(),
                };
                for a in 0..sx.dim() {
                    for b in 0..sy.dim() {
                        s.labels
                            .push(pair_label(&sx.labels[a], &sy.labels[b], sx.dim(), sy.dim()));
                        s.degrees.push(sx.degrees[a] + sy.degrees[b]);
                        s.parity.push(sx.parity[a] ^ sy.parity[b]);
                    }
                }
                s
            })
            .collect();
        let mut product = Vec::with_capacity(ord * ord);
        let mut action = Vec::with_capacity(ord * ord);
        for g in 0..ord {
            for h in 0..ord {
                let (gh, ghg) = (grp.mul(g, h), grp.conj(g, h));
                let mut p =
                    Vec::with_capacity(self.sector_dim(g) * dy(g) * self.sector_dim(h) * dy(h));
                for a in 0..self.sector_dim(g) {
                    for a2 in 0..dy(g) {
                        for b in 0..self.sector_dim(h) {
                            for b2 in 0..dy(h) {
                                p.push(kron2(
                                    self.basis_product(g, h, a, b),
                                    other.basis_product(g, h, a2, b2),
                                    dy(gh),
                                ));
                            }
                        }
                    }
                }
                product.push(p);
                let mut act = Vec::with_capacity(self.sector_dim(h) * dy(h));
                for b in 0..self.sector_dim(h) {
                    for b2 in 0..dy(h) {
                        act.push(kron2(
                            self.basis_action(g, h, b),
                            other.basis_action(g, h, b2),
                            dy(ghg),
                        ));
                    }
                }
                action.push(act);
            }
        }
        let metric = (0..ord)
            .map(|g| {
                let gi = grp.inv(g);
                let mut rows = Vec::with_capacity(self.sector_dim(g) * dy(g));
                for a in 0..self.sector_dim(g) {
                    for a2 in 0..dy(g) {
                        rows.push(kron2(&self.metric[g][a], &other.metric[g][a2], dy(gi)));
                    }
                }
                rows
            })
            .collect();
        let e = grp.identity();
        GFrobeniusAlgebra::from_parts(GFrobeniusParts {
            name: format!("{} ⊗̂ {}", self.name, other.name),
            group: self.group.clone(),
            sectors,
            product,
            action,
            metric,
            unit: kron2(&self.unit, &other.unit, dy(e)),
            character: self
                .character
                .iter()
                .zip(&other.character)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `X ⊗̂ k^{α,σ}[G]` realized on the sector spaces of `X`: the product on
    /// `A_g ⊗ A_h` is scaled by `α(g,h)`, `φ_g|_{A_h}` by
    /// `(−1)^{σ(g)σ(h)} ε(g,h)`, `η` on `A_g ⊗ A_{g⁻¹}` by `α(g,g⁻¹)`, `χ_g`
    /// by `(−1)^{σ(g)}`, and parities on `A_g` shift by `σ(g)`.
    pub fn twist(&self, alpha: &Cocycle2, sigma: &SuperTwist) -> Result<GFrobeniusAlgebra> {
        let report = alpha.validate();
        if !report.passed() {
            return Err(Error::InvalidCocycle(format!(
                "failed {}",
                report.failed_codes().join(", ")
            )));
        }
        if **alpha.group() != *self.group || **sigma.group() != *self.group {
            return Err(Error::GroupMismatch(
                "twist data over a different group".into(),
            ));
        }
        let grp = &self.group;
        let ord = grp.order();
        let mut parts = self.clone().into_parts();
        for g in 0..ord {
            for h in 0..ord {
                let a = alpha.value(g, h);
                if !a.is_one() {
                    for v in parts.product[g * ord + h].iter_mut() {
                        *v = v.scale(a);
                    }
                }
                let f = Scalar::sign_power((sigma.value(g) * sigma.value(h)) as i64)
                    * alpha.epsilon(g, h);
                if !f.is_one() {
                    for v in parts.action[g * ord + h].iter_mut() {
                        *v = v.scale(&f);
                    }
                }
            }
            let m = alpha.value(g, grp.inv(g));
            if !m.is_one() {
                for v in parts.metric[g].iter_mut() {
                    *v = v.scale(m);
                }
            }
            if sigma.value(g) == 1 {
                parts.character[g] = -&parts.character[g];
                for p in parts.sectors[g].parity.iter_mut() {
                    *p ^= 1;
                }
            }
        }
        parts.name = format!("{}^twisted", self.name);
        GFrobeniusAlgebra::from_parts(parts)
    }
}
