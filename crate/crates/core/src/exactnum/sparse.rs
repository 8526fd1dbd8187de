use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, Scalar::one())],
        }
    }

    pub fn single(index: usize, value: Scalar) -> Self {
        if value.is_zero() {
            SparseVec::new()
        } else {
            SparseVec {
                entries: vec![(index, value)],
            }
        }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_default() += v;
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(dense: &[Scalar]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &-Scalar::one())
    }

    /// `self + c * other`, merged in one pass.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb * c));
                        b.next();
                    } else {
                        let s = va + &(vb * c);
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn dot_dense(&self, dense: &[Scalar]) -> Scalar {
        self.entries.iter().map(|(i, v)| v * &dense[*i]).sum()
    }
}

/// Accumulator for building sparse vectors from many scaled contributions.
#[derive(Default, Debug, Clone)]
pub struct SparseAccumulator {
    acc: BTreeMap<usize, Scalar>,
}

impl SparseAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, index: usize, value: &Scalar) {
        *self.acc.entry(index).or_default() += value;
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &Scalar) {
        for (i, x) in v.iter() {
            *self.acc.entry(i).or_default() += x * c;
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

/// Sparse order-3 tensor of structure constants `c_{ij}^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseTensor3 {
    entries: Vec<(usize, usize, usize, Scalar)>,
}

impl SparseTensor3 {
    /// Builds from entries; duplicate keys are rejected and zeros dropped.
    pub fn new(mut entries: Vec<(usize, usize, usize, Scalar)>) -> Result<Self> {
        entries.retain(|e| !e.3.is_zero());
        entries.sort_by_key(|e| (e.0, e.1, e.2));
        for w in entries.windows(2) {
            if (w[0].0, w[0].1, w[0].2) == (w[1].0, w[1].1, w[1].2) {
                return Err(Error::Shape(format!(
                    "duplicate structure constant key ({}, {}, {})",
                    w[0].0, w[0].1, w[0].2
                )));
            }
        }
        Ok(SparseTensor3 { entries })
    }

    pub fn entries(&self) -> &[(usize, usize, usize, Scalar)] {
        &self.entries
    }

    /// Table `t[i * dim + j] = e_i e_j` as sparse vectors.
    pub fn to_product_table(&self, dim: usize) -> Vec<SparseVec> {
        let mut acc: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, v) in &self.entries {
            acc[i * dim + j].push((*k, v.clone()));
        }
        acc.into_iter().map(SparseVec::from_pairs).collect()
    }
}

/// Incrementally built reduced row echelon basis of a subspace of sparse
/// vectors. Each row has a 1 at its pivot and 0 at every other pivot, so the
/// coordinates of a vector in the span are its entries at the pivots.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<(usize, SparseVec)>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, r) in &self.rows {
            let c = v.get(*p);
            if !c.is_zero() {
                v = v.add_scaled(r, &-c);
            }
        }
        v
    }

    /// Inserts `v`; returns false when it already lies in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let v = self.reduce(v);
        let Some(&(p, ref lead)) = v.entries().first() else {
            return false;
        };
        let v = v.scale(&lead.inv().expect("nonzero lead"));
        for (_, r) in self.rows.iter_mut() {
            let c = r.get(p);
            if !c.is_zero() {
                *r = r.add_scaled(&v, &-c);
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, v));
        true
    }

    /// Rows sorted by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Coordinates of `v` in the row basis, or `None` when `v` is outside
    /// the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.rows.iter().map(|(p, _)| v.get(*p)).collect();
        let mut rest = v.clone();
        for ((_, r), c) in self.rows.iter().zip(&coords) {
            if !c.is_zero() {
                rest = rest.add_scaled(r, &-c);
            }
        }
        rest.is_zero().then_some(coords)
    }
}
