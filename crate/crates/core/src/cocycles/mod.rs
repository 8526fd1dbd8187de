//! 2-cocycles `α: G × G → k*`, super twists `σ: G → Z/2`, the twisted
//! group rings `k^{α,σ}[G]` and the normalized cocycle family on `S_n`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseVec};
use crate::gfrob::{GFrobeniusAlgebra, GFrobeniusParts, Sector};
use crate::groups::FiniteGroup;
use crate::report::{Check, Report, Witness};

/// A table `α(g, h)` of nonzero scalars.
#[derive(Clone, Debug)]
pub struct Cocycle2 {
    group: Arc<FiniteGroup>,
    values: Vec<Scalar>,
}

impl PartialEq for Cocycle2 {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.values == other.values
    }
}

impl Cocycle2 {
    /// Shape and nonvanishing checks only; see [`validate`](Self::validate).
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Scalar>) -> Result<Self> {
        let ord = group.order();
        if values.len() != ord * ord {
            return Err(Error::Shape(format!(
                "cocycle needs {} values, got {}",
                ord * ord,
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(Scalar::is_zero) {
            return Err(Error::InvalidCocycle(format!(
                "α({}, {}) = 0",
                group.label(i / ord),
                group.label(i % ord)
            )));
        }
        Ok(Cocycle2 { group, values })
    }

    pub fn from_fn(group: Arc<FiniteGroup>, f: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        let ord = group.order();
        let values = (0..ord * ord).map(|i| f(i / ord, i % ord)).collect();
        Self::new(group, values)
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let ord = group.order();
        Cocycle2 {
            group,
            values: vec![Scalar::one(); ord * ord],
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn value(&self, g: usize, h: usize) -> &Scalar {
        &self.values[g * self.group.order() + h]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Exhaustive check of the cocycle law, normalization and
    /// `α(g, g⁻¹) = α(g⁻¹, g)`.
    pub fn validate(&self) -> Report {
        let grp = &self.group;
        let ord = grp.order();
        let mut r = Report::new(format!("2-cocycle on a group of order {ord}"));
        let mut w = None;
        'law: for g in 0..ord {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                for k in 0..ord {
                    let lhs = self.value(g, h) * self.value(gh, k);
                    let rhs = self.value(g, grp.mul(h, k)) * self.value(h, k);
                    if lhs != rhs {
                        w = Some(Witness::new(
                            format!("({}, {}, {})", grp.label(g), grp.label(h), grp.label(k)),
                            lhs,
                            rhs,
                        ));
                        break 'law;
                    }
                }
            }
        }
        r.push(Check::new(
            "cocycle",
            "α(g,h)α(gh,k) = α(g,hk)α(h,k)",
            (ord * ord * ord) as u64,
            w,
        ));
        let e = grp.identity();
        let w = (0..ord).find_map(|g| {
            [(g, e), (e, g)]
                .into_iter()
                .find(|&(a, b)| !self.value(a, b).is_one())
                .map(|(a, b)| {
                    Witness::new(
                        format!("α({}, {})", grp.label(a), grp.label(b)),
                        self.value(a, b),
                        1,
                    )
                })
        });
        r.push(Check::new(
            "normalized",
            "α(g,e) = α(e,g) = 1",
            2 * ord as u64,
            w,
        ));
        let w = (0..ord).find_map(|g| {
            let gi = grp.inv(g);
            (self.value(g, gi) != self.value(gi, g)).then(|| {
                Witness::new(
                    format!("α({0}, {0}⁻¹)", grp.label(g)),
                    self.value(g, gi),
                    self.value(gi, g),
                )
            })
        });
        r.push(Check::new(
            "symmetric",
            "α(g,g⁻¹) = α(g⁻¹,g)",
            ord as u64,
            w,
        ));
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    fn require_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.passed() {
            Ok(())
        } else {
            Err(Error::InvalidCocycle(format!(
                "failed {}",
                r.failed_codes().join(", ")
            )))
        }
    }

    /// `ε(g, h) = α(g, h) / α(ghg⁻¹, g)`.
    pub fn epsilon(&self, g: usize, h: usize) -> Scalar {
        let c = self.group.conj(g, h);
        self.value(g, h) / self.value(c, g)
    }

    /// The full `ε` table, indexed `g·|G| + h`.
    pub fn epsilon_table(&self) -> Vec<Scalar> {
        let ord = self.group.order();
        (0..ord * ord)
            .map(|i| self.epsilon(i / ord, i % ord))
            .collect()
    }

    /// Pointwise product `αβ`.
    pub fn multiply(&self, other: &Cocycle2) -> Result<Cocycle2> {
        if *self.group != *other.group {
            return Err(Error::GroupMismatch(
                "cocycles over different groups".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(Cocycle2 {
            group: self.group.clone(),
            values,
        })
    }

    /// Pointwise inverse `α⁻¹`.
    pub fn inverse(&self) -> Cocycle2 {
        let values = self
            .values
            .iter()
            .map(|a| a.inv().expect("nonzero cocycle value"))
            .collect();
        Cocycle2 {
            group: self.group.clone(),
            values,
        }
    }
}

/// A homomorphism `σ: G → Z/2`.
#[derive(Clone, Debug)]
pub struct SuperTwist {
    group: Arc<FiniteGroup>,
    parity: Vec<u8>,
}

impl PartialEq for SuperTwist {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.parity == other.parity
    }
}

impl SuperTwist {
    pub fn new(group: Arc<FiniteGroup>, parity: Vec<u8>) -> Result<Self> {
        let ord = group.order();
        if parity.len() != ord || parity.iter().any(|&p| p > 1) {
            return Err(Error::InvalidSuperTwist(
                "need one value in {0, 1} per element".into(),
            ));
        }
        for g in 0..ord {
            for h in 0..ord {
                if parity[group.mul(g, h)] != parity[g] ^ parity[h] {
                    return Err(Error::InvalidSuperTwist(format!(
                        "not a homomorphism at ({}, {})",
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(SuperTwist { group, parity })
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let ord = group.order();
        SuperTwist {
            group,
            parity: vec![0; ord],
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn value(&self, g: usize) -> u8 {
        self.parity[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }
}

/// `k^{α,σ}[G]`: one-dimensional sectors `k ĝ` with `ĝ ĥ = α(g,h) (gh)^`,
/// `η(ĝ, ĝ⁻¹) = α(g, g⁻¹)`, `φ_g(ĥ) = (−1)^{σ(g)σ(h)} ε(g,h) (ghg⁻¹)^`,
/// `χ_g = (−1)^{σ(g)}` and parity `σ(g)`.
pub fn twisted_group_ring(alpha: &Cocycle2, sigma: &SuperTwist) -> Result<GFrobeniusAlgebra> {
    alpha.require_valid()?;
    if *alpha.group != *sigma.group {
        return Err(Error::GroupMismatch(
            "cocycle and super twist over different groups".into(),
        ));
    }
    let group = alpha.group.clone();
    let ord = group.order();
    let sectors = (0..ord)
        .map(|g| Sector::new(vec!["1".into()], vec![0], vec![sigma.value(g)]))
        .collect::<Result<Vec<_>>>()?;
    let mut product = Vec::with_capacity(ord * ord);
    let mut action = Vec::with_capacity(ord * ord);
    for g in 0..ord {
        for h in 0..ord {
            product.push(vec![SparseVec::single(0, alpha.value(g, h).clone())]);
            let sign = Scalar::sign_power((sigma.value(g) * sigma.value(h)) as i64);
            action.push(vec![SparseVec::single(0, sign * alpha.epsilon(g, h))]);
        }
    }
    let metric = (0..ord)
        .map(|g| vec![SparseVec::single(0, alpha.value(g, group.inv(g)).clone())])
        .collect();
    let character = (0..ord)
        .map(|g| Scalar::sign_power(sigma.value(g) as i64))
        .collect();
    let name = match (alpha.values.iter().all(Scalar::is_one), sigma.is_trivial()) {
        (true, true) => "k[G]",
        (false, true) => "k^α[G]",
        (true, false) => "k^σ[G]",
        (false, false) => "k^{α,σ}[G]",
    };
    GFrobeniusAlgebra::from_parts(GFrobeniusParts {
        name: name.into(),
        group,
        sectors,
        product,
        action,
        metric,
        unit: SparseVec::unit(0),
        character,
    })
}

/// `½(|σ| + |σ′| − |σσ′|)`, the number of contractions in `σσ′`.
pub fn contraction_exponent(group: &FiniteGroup, g: usize, h: usize) -> Result<i64> {
    let perm = |x: usize| {
        group.permutation(x).ok_or_else(|| {
            Error::Unsupported("contraction exponent needs a symmetric group".into())
        })
    };
    let (p, q) = (perm(g)?, perm(h)?);
    let pq = perm(group.mul(g, h))?;
    let twice = p.degree() as i64 + q.degree() as i64 - pq.degree() as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Convention(format!(
            "|σ|+|σ′|−|σσ′| = {twice} for σ={p}, σ′={q}"
        )));
    }
    Ok(twice / 2)
}

/// `α(σ, σ′) = λ^{½(|σ| + |σ′| − |σσ′|)}` on a symmetric group.
pub fn normalized_sn_cocycle_on(group: &Arc<FiniteGroup>, lambda: &Scalar) -> Result<Cocycle2> {
    if lambda.is_zero() {
        return Err(Error::InvalidCocycle("λ must be nonzero".into()));
    }
    let ord = group.order();
    let mut values = Vec::with_capacity(ord * ord);
    for g in 0..ord {
        for h in 0..ord {
            values.push(lambda.pow(contraction_exponent(group, g, h)?));
        }
    }
    Cocycle2::new(group.clone(), values)
}

pub fn normalized_sn_cocycle(n: usize, lambda: &Scalar) -> Result<Cocycle2> {
    normalized_sn_cocycle_on(&Arc::new(FiniteGroup::symmetric(n)?), lambda)
}

/// `Σ: σ ↦ |σ| mod 2`.
pub fn sign_supertwist_on(group: &Arc<FiniteGroup>) -> Result<SuperTwist> {
    let perms = group
        .permutations()
        .ok_or_else(|| Error::Unsupported("sign twist needs a symmetric group".into()))?;
    SuperTwist::new(
        group.clone(),
        perms.iter().map(|p| (p.degree() % 2) as u8).collect(),
    )
}

pub fn sign_supertwist(n: usize) -> Result<SuperTwist> {
    sign_supertwist_on(&Arc::new(FiniteGroup::symmetric(n)?))
}
