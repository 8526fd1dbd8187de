//! G-Frobenius algebras: a G-graded family of sectors `A_g` with product,
//! sector-pairing metric, G-action and character, together with the
//! exhaustive axiom verifier, graded tensor product, twisting and
//! invariants.

mod invariants;
mod ops;
mod verify;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar, SparseAccumulator, SparseVec};
use crate::frobenius::format_linear;
use crate::groups::FiniteGroup;

pub use invariants::InvariantAlgebra;
pub use verify::{axiom_cost, VerifyOptions, DEFAULT_VERIFY_BUDGET};

/// Basis data of one sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    pub parity: Vec<u8>,
}

impl Sector {
    pub fn new(labels: Vec<String>, degrees: Vec<i64>, parity: Vec<u8>) -> Result<Self> {
        if labels.len() != degrees.len() || labels.len() != parity.len() {
            return Err(Error::Shape(
                "sector labels, degrees and parity differ in length".into(),
            ));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::Shape("parity must be 0 or 1".into()));
        }
        Ok(Sector {
            labels,
            degrees,
            parity,
        })
    }

    /// `dim` even basis vectors of degree 0 labelled by `label`.
    pub fn trivial(dim: usize, label: impl Fn(usize) -> String) -> Self {
        Sector {
            labels: (0..dim).map(label).collect(),
            degrees: vec![0; dim],
            parity: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// A G-twisted Frobenius algebra `⟨G, A, ∘, 1, η, φ, χ⟩`.
///
/// Tables are indexed by group elements of `group`:
/// `product[g·|G| + h][a·dim_h + b] = a_g ∘ b_h ∈ A_{gh}`,
/// `action[g·|G| + h][b] = φ_g(b_h) ∈ A_{ghg⁻¹}`, and
/// `metric[g][a]` is the row of `η(a_g, ·)` on `A_{g⁻¹}`.
#[derive(Clone, Debug)]
pub struct GFrobeniusAlgebra {
    name: String,
    group: Arc<FiniteGroup>,
    sectors: Vec<Sector>,
    product: Vec<Vec<SparseVec>>,
    action: Vec<Vec<SparseVec>>,
    metric: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    character: Vec<Scalar>,
}

/// Raw tables for [`GFrobeniusAlgebra::from_parts`].
#[derive(Clone, Debug)]
pub struct GFrobeniusParts {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub sectors: Vec<Sector>,
    pub product: Vec<Vec<SparseVec>>,
    pub action: Vec<Vec<SparseVec>>,
    pub metric: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    pub character: Vec<Scalar>,
}

impl PartialEq for GFrobeniusAlgebra {
    /// Equality of all structure tables; the name is ignored.
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group
            && self.sectors == other.sectors
            && self.product == other.product
            && self.action == other.action
            && self.metric == other.metric
            && self.unit == other.unit
            && self.character == other.character
    }
}

fn check_range(v: &[SparseVec], bound: usize, what: &str) -> Result<()> {
    if v.iter().any(|x| x.max_index().is_some_and(|m| m >= bound)) {
        return Err(Error::Shape(format!("{what} entry outside target sector")));
    }
    Ok(())
}

impl GFrobeniusAlgebra {
    /// Shape-checked construction; axioms are checked by
    /// [`verify_axioms`](Self::verify_axioms).
    pub fn from_parts(parts: GFrobeniusParts) -> Result<Self> {
        let GFrobeniusParts {
            name,
            group,
            sectors,
            product,
            action,
            metric,
            unit,
            character,
        } = parts;
        let ord = group.order();
        if sectors.len() != ord || character.len() != ord || metric.len() != ord {
            return Err(Error::Shape(
                "sector, metric and character tables need one entry per element".into(),
            ));
        }
        if product.len() != ord * ord || action.len() != ord * ord {
            return Err(Error::Shape(
                "product and action tables need |G|² entries".into(),
            ));
        }
        for g in 0..ord {
            let dg = sectors[g].dim();
            if metric[g].len() != dg {
                return Err(Error::Shape(format!(
                    "metric of sector {} has wrong row count",
                    group.label(g)
                )));
            }
            check_range(&metric[g], sectors[group.inv(g)].dim(), "metric")?;
            for h in 0..ord {
                let dh = sectors[h].dim();
                let p = &product[g * ord + h];
                if p.len() != dg * dh {
                    return Err(Error::Shape(format!(
                        "product {}·{} has {} entries, expected {}",
                        group.label(g),
                        group.label(h),
                        p.len(),
                        dg * dh
                    )));
                }
                check_range(p, sectors[group.mul(g, h)].dim(), "product")?;
                let a = &action[g * ord + h];
                if a.len() != dh {
                    return Err(Error::Shape(format!(
                        "action of {} on {} has wrong size",
                        group.label(g),
                        group.label(h)
                    )));
                }
                check_range(a, sectors[group.conj(g, h)].dim(), "action")?;
            }
        }
        check_range(
            std::slice::from_ref(&unit),
            sectors[group.identity()].dim(),
            "unit",
        )?;
        if character.iter().any(Scalar::is_zero) {
            return Err(Error::Shape("character takes a zero value".into()));
        }
        Ok(GFrobeniusAlgebra {
            name,
            group,
            sectors,
            product,
            action,
            metric,
            unit,
            character,
        })
    }

    pub fn into_parts(self) -> GFrobeniusParts {
        GFrobeniusParts {
            name: self.name,
            group: self.group,
            sectors: self.sectors,
            product: self.product,
            action: self.action,
            metric: self.metric,
            unit: self.unit,
            character: self.character,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn sector(&self, g: usize) -> &Sector {
        &self.sectors[g]
    }

    pub fn sector_dim(&self, g: usize) -> usize {
        self.sectors[g].dim()
    }

    pub fn total_dim(&self) -> usize {
        self.sectors.iter().map(Sector::dim).sum()
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn character(&self) -> &[Scalar] {
        &self.character
    }

    pub fn is_super(&self) -> bool {
        self.sectors
            .iter()
            .any(|s| s.parity.contains(&1))
    }

    /// `e_a ∘ e_b` for `e_a ∈ A_g`, `e_b ∈ A_h`.
    pub fn basis_product(&self, g: usize, h: usize, a: usize, b: usize) -> &SparseVec {
        &self.product[g * self.order() + h][a * self.sector_dim(h) + b]
    }

    pub fn product_table(&self, g: usize, h: usize) -> &[SparseVec] {
        &self.product[g * self.order() + h]
    }

    /// `φ_g(e_b)` for `e_b ∈ A_h`.
    pub fn basis_action(&self, g: usize, h: usize, b: usize) -> &SparseVec {
        &self.action[g * self.order() + h][b]
    }

    pub fn action_table(&self, g: usize, h: usize) -> &[SparseVec] {
        &self.action[g * self.order() + h]
    }

    pub fn metric_rows(&self, g: usize) -> &[SparseVec] {
        &self.metric[g]
    }

    /// `η|_{A_g ⊗ A_{g⁻¹}}` as a dense `dim_g × dim_{g⁻¹}` matrix.
    pub fn metric_matrix(&self, g: usize) -> Matrix {
        let cols = self.sector_dim(self.group.inv(g));
        let mut m = Matrix::zeros(self.sector_dim(g), cols);
        for (i, row) in self.metric[g].iter().enumerate() {
            for (j, v) in row.iter() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// `a_g ∘ b_h ∈ A_{gh}`.
    pub fn multiply(&self, g: usize, a: &SparseVec, h: usize, b: &SparseVec) -> SparseVec {
        let table = self.product_table(g, h);
        let dh = self.sector_dim(h);
        let mut acc = SparseAccumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&table[i * dh + j], &(x * y));
            }
        }
        acc.finish()
    }

    /// `φ_g(v)` for `v ∈ A_h`, landing in `A_{ghg⁻¹}`.
    pub fn act(&self, g: usize, h: usize, v: &SparseVec) -> SparseVec {
        let table = self.action_table(g, h);
        let mut acc = SparseAccumulator::new();
        for (i, x) in v.iter() {
            acc.add_scaled(&table[i], x);
        }
        acc.finish()
    }

    /// `η(a, b)` for `a ∈ A_g`, `b ∈ A_{g⁻¹}`.
    pub fn pair(&self, g: usize, a: &SparseVec, b: &SparseVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in a.iter() {
            let row = &self.metric[g][i];
            for (j, y) in b.iter() {
                let m = row.get(j);
                if !m.is_zero() {
                    s += &(x * y) * &m;
                }
            }
        }
        s
    }

    /// `deg a + deg b` over nonzero `η(a, b)`, `a ∈ A_g`; the top degree `d_g`.
    pub fn sector_top_degree(&self, g: usize) -> Option<i64> {
        let gi = self.group.inv(g);
        self.metric[g].iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .next()
                .map(|(j, _)| self.sectors[g].degrees[i] + self.sectors[gi].degrees[j])
        })
    }

    /// Offset of sector `g` in the global basis of `⊕_g A_g`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order() + 1);
        let mut acc = 0;
        for s in &self.sectors {
            out.push(acc);
            acc += s.dim();
        }
        out.push(acc);
        out
    }

    pub fn format_element(&self, g: usize, v: &SparseVec) -> String {
        let labels = &self.sectors[g].labels;
        format_linear(v, |i| labels[i].clone())
    }

    pub fn sector_of_label(&self, label: &str) -> Result<usize> {
        self.group
            .index_of_label(label)
            .ok_or_else(|| Error::Unknown {
                kind: "sector",
                name: label.to_string(),
            })
    }
}
