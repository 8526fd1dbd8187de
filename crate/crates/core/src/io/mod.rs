//! JSON documents for algebras, G-algebras and cocycles, and the element
//! syntax of the command line.
//!
//! Rationals are strings `"p/q"` or `"p"`. Indices are 0-based; group
//! elements are referenced by label. Output is deterministic: fields in
//! declaration order, entries sorted.

mod element;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cocycles::Cocycle2;
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar, SparseTensor3, SparseVec};
use crate::frobenius::{BasisElement, FrobeniusAlgebra};
use crate::gfrob::{GFrobeniusAlgebra, GFrobeniusParts, Sector};
use crate::groups::FiniteGroup;

pub use element::{format_element, parse_element, Element};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<BasisElement>,
    pub unit: Vec<Scalar>,
    #[serde(default)]
    pub metric: Vec<(usize, usize, Scalar)>,
    #[serde(default)]
    pub structure: Vec<(usize, usize, usize, Scalar)>,
}

/// `"S_n"`, or an explicit multiplication table over labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Symmetric(String),
    Table {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorDoc {
    pub element: String,
    pub basis: Vec<BasisElement>,
}

/// Sparse tables: `product` rows are `[g, h, a, b, c, x]` for
/// `a_g · b_h ∋ x c_{gh}`, `action` rows `[g, h, b, c, x]` for
/// `φ_g(b_h) ∋ x c_{ghg⁻¹}`, `metric` rows `[g, a, b, x]` for
/// `η(a_g, b_{g⁻¹}) = x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GAlgebraDoc {
    pub name: String,
    pub group: GroupDoc,
    pub sectors: Vec<SectorDoc>,
    pub unit: Vec<(usize, Scalar)>,
    pub character: Vec<Scalar>,
    #[serde(default)]
    pub product: Vec<(String, String, usize, usize, usize, Scalar)>,
    #[serde(default)]
    pub action: Vec<(String, String, usize, usize, Scalar)>,
    #[serde(default)]
    pub metric: Vec<(String, usize, usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDoc {
    pub group: GroupDoc,
    #[serde(default)]
    pub values: Vec<(String, String, Scalar)>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty objects, with arrays of scalars kept on one line so table rows
/// read as `[0, 1, "1"]`.
fn to_json<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

impl AlgebraDoc {
    pub fn from_algebra(a: &FrobeniusAlgebra) -> Self {
        let d = a.dim();
        let mut metric = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let x = &a.metric()[(i, j)];
                if !x.is_zero() {
                    metric.push((i, j, x.clone()));
                }
            }
        }
        AlgebraDoc {
            name: a.name().to_string(),
            dim: d,
            basis: a.basis().to_vec(),
            unit: a.unit().to_vec(),
            metric,
            structure: a.structure().entries().to_vec(),
        }
    }

    /// Shape-checked only; laws are left to `verify`.
    pub fn to_algebra_unchecked(&self) -> Result<FrobeniusAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!(
                "dim is {} but basis has {} entries",
                self.dim,
                self.basis.len()
            )));
        }
        let d = self.dim;
        let mut metric = Matrix::zeros(d, d);
        for (i, j, x) in &self.metric {
            if *i >= d || *j >= d {
                return Err(Error::Parse(format!(
                    "metric index ({i}, {j}) out of range"
                )));
            }
            metric[(*i, *j)] = x.clone();
        }
        if let Some(e) = self
            .structure
            .iter()
            .find(|e| e.0 >= d || e.1 >= d || e.2 >= d)
        {
            return Err(Error::Parse(format!(
                "structure index ({}, {}, {}) out of range",
                e.0, e.1, e.2
            )));
        }
        let structure =
            SparseTensor3::new(self.structure.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        FrobeniusAlgebra::from_parts(
            &self.name,
            self.basis.clone(),
            self.unit.clone(),
            metric,
            structure,
        )
    }

    /// Rejects algebras failing any law.
    pub fn to_algebra(&self) -> Result<FrobeniusAlgebra> {
        let a = self.to_algebra_unchecked()?;
        let report = a.verify();
        if !report.passed() {
            return Err(Error::InvalidAlgebra(format!(
                "{} fails {}",
                a.name(),
                report.failed_codes().join(", ")
            )));
        }
        Ok(a)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        match g.symmetric_degree() {
            Some(n) => GroupDoc::Symmetric(format!("S_{n}")),
            None => GroupDoc::Table {
                labels: g.labels().to_vec(),
                table: g.table_rows(),
            },
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        match self {
            GroupDoc::Symmetric(s) => {
                let n = s
                    .strip_prefix("S_")
                    .and_then(|n| n.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("group {s:?} is not of the form S_n")))?;
                FiniteGroup::symmetric(n)
            }
            GroupDoc::Table { labels, table } => {
                FiniteGroup::from_table(labels.clone(), table.clone())
            }
        }
    }
}

fn element(group: &FiniteGroup, label: &str) -> Result<usize> {
    group.index_of_label(label).ok_or_else(|| Error::Unknown {
        kind: "group element",
        name: label.to_string(),
    })
}

fn in_range(i: usize, bound: usize, what: &str) -> Result<usize> {
    if i < bound {
        Ok(i)
    } else {
        Err(Error::Parse(format!(
            "{what} index {i} out of range (dimension {bound})"
        )))
    }
}

impl GAlgebraDoc {
    pub fn from_algebra(x: &GFrobeniusAlgebra) -> Self {
        let grp = x.group();
        let ord = grp.order();
        let lab = |g: usize| grp.label(g).to_string();
        let sectors = (0..ord)
            .map(|g| {
                let s = x.sector(g);
                let basis = (0..s.dim())
                    .map(|i| BasisElement {
                        label: s.labels[i].clone(),
                        degree: s.degrees[i],
                        parity: s.parity[i],
                    })
                    .collect();
                SectorDoc {
                    element: lab(g),
                    basis,
                }
            })
            .collect();
        let mut product = Vec::new();
        let mut action = Vec::new();
        for g in 0..ord {
            for h in 0..ord {
                let dh = x.sector_dim(h);
                for (ab, v) in x.product_table(g, h).iter().enumerate() {
                    for (c, y) in v.iter() {
                        product.push((lab(g), lab(h), ab / dh, ab % dh, c, y.clone()));
                    }
                }
                for (b, v) in x.action_table(g, h).iter().enumerate() {
                    for (c, y) in v.iter() {
                        action.push((lab(g), lab(h), b, c, y.clone()));
                    }
                }
            }
        }
        let mut metric = Vec::new();
        for g in 0..ord {
            for (a, row) in x.metric_rows(g).iter().enumerate() {
                for (b, y) in row.iter() {
                    metric.push((lab(g), a, b, y.clone()));
                }
            }
        }
        GAlgebraDoc {
            name: x.name().to_string(),
            group: GroupDoc::from_group(grp),
            sectors,
            unit: x.unit().iter().map(|(i, c)| (i, c.clone())).collect(),
            character: x.character().to_vec(),
            product,
            action,
            metric,
        }
    }

    /// Shape-checked only; axioms are left to `verify_axioms`.
    pub fn to_algebra(&self) -> Result<GFrobeniusAlgebra> {
        let group = Arc::new(self.group.to_group()?);
        let ord = group.order();
        if self.sectors.len() != ord {
            return Err(Error::Parse(format!(
                "{} sectors for a group of order {ord}",
                self.sectors.len()
            )));
        }
        let mut sectors: Vec<Option<Sector>> = vec![None; ord];
        for s in &self.sectors {
            let g = element(&group, &s.element)?;
            if sectors[g].is_some() {
                return Err(Error::Parse(format!("sector {} listed twice", s.element)));
            }
            sectors[g] = Some(Sector::new(
                s.basis.iter().map(|b| b.label.clone()).collect(),
                s.basis.iter().map(|b| b.degree).collect(),
                s.basis.iter().map(|b| b.parity).collect(),
            )?);
        }
        let sectors: Vec<Sector> = sectors
            .into_iter()
            .map(|s| s.expect("all sectors assigned"))
            .collect();
        let dims: Vec<usize> = sectors.iter().map(Sector::dim).collect();

        let mut product: Vec<Vec<Vec<(usize, Scalar)>>> = (0..ord * ord)
            .map(|gh| vec![Vec::new(); dims[gh / ord] * dims[gh % ord]])
            .collect();
        for (gl, hl, a, b, c, x) in &self.product {
            let (g, h) = (element(&group, gl)?, element(&group, hl)?);
            let (a, b) = (
                in_range(*a, dims[g], "product")?,
                in_range(*b, dims[h], "product")?,
            );
            let c = in_range(*c, dims[group.mul(g, h)], "product")?;
            product[g * ord + h][a * dims[h] + b].push((c, x.clone()));
        }
        let mut action: Vec<Vec<Vec<(usize, Scalar)>>> = (0..ord * ord)
            .map(|gh| vec![Vec::new(); dims[gh % ord]])
            .collect();
        for (gl, hl, b, c, x) in &self.action {
            let (g, h) = (element(&group, gl)?, element(&group, hl)?);
            let b = in_range(*b, dims[h], "action")?;
            let c = in_range(*c, dims[group.conj(g, h)], "action")?;
            action[g * ord + h][b].push((c, x.clone()));
        }
        let mut metric: Vec<Vec<Vec<(usize, Scalar)>>> =
            dims.iter().map(|&d| vec![Vec::new(); d]).collect();
        for (gl, a, b, x) in &self.metric {
            let g = element(&group, gl)?;
            let a = in_range(*a, dims[g], "metric")?;
            let b = in_range(*b, dims[group.inv(g)], "metric")?;
            metric[g][a].push((b, x.clone()));
        }
        let unit_dim = dims[group.identity()];
        for (i, _) in &self.unit {
            in_range(*i, unit_dim, "unit")?;
        }
        let sparse = |rows: Vec<Vec<(usize, Scalar)>>| -> Result<Vec<SparseVec>> {
            rows.into_iter().map(checked_sparse).collect()
        };
        GFrobeniusAlgebra::from_parts(GFrobeniusParts {
            name: self.name.clone(),
            group,
            sectors,
            product: product.into_iter().map(sparse).collect::<Result<_>>()?,
            action: action.into_iter().map(sparse).collect::<Result<_>>()?,
            metric: metric.into_iter().map(sparse).collect::<Result<_>>()?,
            unit: checked_sparse(self.unit.clone())?,
            character: self.character.clone(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Duplicate indices are a parse error rather than silently summed.
fn checked_sparse(mut pairs: Vec<(usize, Scalar)>) -> Result<SparseVec> {
    pairs.sort_by_key(|p| p.0);
    if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Parse(format!(
            "duplicate entry for index {}",
            w[0].0
        )));
    }
    Ok(SparseVec::from_pairs(pairs))
}

impl CocycleDoc {
    pub fn from_cocycle(a: &Cocycle2) -> Self {
        let grp = a.group();
        let ord = grp.order();
        let mut values = Vec::new();
        for g in 0..ord {
            for h in 0..ord {
                let x = a.value(g, h);
                if !x.is_one() {
                    values.push((
                        grp.label(g).to_string(),
                        grp.label(h).to_string(),
                        x.clone(),
                    ));
                }
            }
        }
        CocycleDoc {
            group: GroupDoc::from_group(grp),
            values,
        }
    }

    /// Builds the table (omitted entries are 1) and validates it.
    pub fn to_cocycle(&self) -> Result<Cocycle2> {
        self.to_cocycle_on(Arc::new(self.group.to_group()?))
    }

    /// As [`to_cocycle`](Self::to_cocycle), over an existing group that must
    /// equal the document's.
    pub fn to_cocycle_on(&self, group: Arc<FiniteGroup>) -> Result<Cocycle2> {
        if *group != self.group.to_group()? {
            return Err(Error::GroupMismatch(
                "cocycle document group differs from the algebra's".into(),
            ));
        }
        let ord = group.order();
        let mut values = vec![Scalar::one(); ord * ord];
        let mut seen = vec![false; ord * ord];
        for (gl, hl, x) in &self.values {
            let i = element(&group, gl)? * ord + element(&group, hl)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!(
                    "duplicate cocycle value for ({gl}, {hl})"
                )));
            }
            values[i] = x.clone();
        }
        let alpha = Cocycle2::new(group, values)?;
        let report = alpha.validate();
        if !report.passed() {
            return Err(Error::InvalidCocycle(format!(
                "fails {}",
                report.failed_codes().join(", ")
            )));
        }
        Ok(alpha)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}
