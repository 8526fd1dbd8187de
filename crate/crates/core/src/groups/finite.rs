use std::collections::HashMap;

use super::Permutation;
use crate::error::{Error, Result};

/// Default largest `n` for which `S_n` may be enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Largest group order for which a full multiplication table is stored.
pub const MAX_TABLE_ORDER: usize = 5040;

/// A finite group given by its multiplication table.
///
/// Elements are indices `0..order`. For symmetric groups the underlying
/// permutations are kept alongside, in lexicographic order of their one-line
/// notation, so the identity is element 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
    perms: Option<SymmetricData>,
}

#[derive(Clone, Debug)]
struct SymmetricData {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table (`table[g][h]` is the index of `gh`).
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = labels.len();
        if order == 0 || table.len() != order || table.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidGroup("table must be order x order".into()));
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {order} exceeds {MAX_TABLE_ORDER}"
            )));
        }
        if table.iter().flatten().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let at = |g: usize, h: usize| flat[g * order + h] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| {
                    Error::InvalidGroup(format!("element {} has no inverse", labels[g]))
                })?;
            inverse.push(inv);
        }
        for g in 0..order {
            for h in 0..order {
                for k in 0..order {
                    if at(at(g, h), k) != at(g, at(h, k)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            labels[g], labels[h], labels[k]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table: flat,
            inverse,
            identity,
            perms: None,
        })
    }

    /// The symmetric group `S_n` with the default enumeration bound.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::symmetric_with_bound(n, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn symmetric_with_bound(n: usize, bound: usize) -> Result<Self> {
        let elements = enumerate_with_bound(n, bound)?;
        let order = elements.len();
        if order > MAX_TABLE_ORDER {
            return Err(Error::GroupTooLarge {
                n,
                bound: max_table_degree(),
            });
        }
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for p in &elements {
            for q in &elements {
                table.push(index[&p.compose(q)?] as u32);
            }
        }
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let labels = elements.iter().map(Permutation::to_cycle_string).collect();
        Ok(FiniteGroup {
            labels,
            table,
            inverse,
            identity: 0,
            perms: Some(SymmetricData { n, elements, index }),
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        if let Some(sym) = &self.perms {
            if let Ok(p) = Permutation::parse(label, sym.n) {
                return sym.index.get(&p).copied();
            }
        }
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order() + h] as usize
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `g h g⁻¹`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `[g, h] = g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.conj(g, h), self.inv(h))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|g| (0..self.order()).map(|h| self.mul(g, h)).collect())
            .collect()
    }

    /// Degree `n` when this is a symmetric group.
    pub fn symmetric_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|s| s.n)
    }

    pub fn permutation(&self, g: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|s| &s.elements[g])
    }

    pub fn index_of_permutation(&self, p: &Permutation) -> Option<usize> {
        self.perms.as_ref().and_then(|s| s.index.get(p).copied())
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_ref().map(|s| s.elements.as_slice())
    }

    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&h| self.commute(g, h)).collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order() {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order()).map(|k| self.conj(k, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                class_of[c] = classes.len();
            }
            classes.push(class);
        }
        classes
    }

    /// Exhaustive group-law check over all triples.
    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| {
            (0..n)
                .all(|h| (0..n).all(|k| self.mul(self.mul(g, h), k) == self.mul(g, self.mul(h, k))))
        })
    }
}

fn max_table_degree() -> usize {
    let (mut n, mut f) = (1, 1);
    while f * (n + 1) <= MAX_TABLE_ORDER {
        n += 1;
        f *= n;
    }
    n
}

/// All `n!` permutations in lexicographic order of one-line notation.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    enumerate_with_bound(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_with_bound(n: usize, bound: usize) -> Result<Vec<Permutation>> {
    if n > bound {
        return Err(Error::GroupTooLarge { n, bound });
    }
    if n == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(current.clone())?);
        // Next permutation in lexicographic order.
        let Some(i) = (0..n - 1).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("successor exists");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    Ok(out)
}

/// The `n(n−1)/2` transpositions of `S_n`, ordered by (a, b).
pub fn transpositions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(Permutation::transposition(n, a, b));
        }
    }
    out
}

/// Conjugacy classes of `S_n` keyed by cycle type (longest cycle first).
pub fn conjugacy_classes(n: usize) -> Result<Vec<(Vec<usize>, Vec<Permutation>)>> {
    let mut classes: Vec<(Vec<usize>, Vec<Permutation>)> = Vec::new();
    for p in enumerate(n)? {
        let t = p.cycle_type();
        match classes.iter_mut().find(|(ct, _)| *ct == t) {
            Some((_, members)) => members.push(p),
            None => classes.push((t, vec![p])),
        }
    }
    Ok(classes)
}
