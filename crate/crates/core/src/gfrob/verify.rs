use rayon::prelude::*;

use super::GFrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseEchelon, SparseVec};
use crate::report::{Check, Report, Witness};

/// Default cap on [`axiom_cost`] for exhaustive verification.
pub const DEFAULT_VERIFY_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub budget: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DEFAULT_VERIFY_BUDGET,
        }
    }
}

/// Number of basis triples in the associativity check, `(Σ_g dim A_g)³`,
/// which dominates the verifier's running time.
pub fn axiom_cost(x: &GFrobeniusAlgebra) -> u128 {
    (x.total_dim() as u128).pow(3)
}

/// First witness over `0..n`, evaluated in parallel but chosen in order.
fn first<F>(n: usize, f: F) -> Option<Witness>
where
    F: Fn(usize) -> Option<Witness> + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

impl GFrobeniusAlgebra {
    fn lab(&self, g: usize, a: usize) -> String {
        format!("{}@{}", self.sectors[g].labels[a], self.group.label(g))
    }

    fn fmt(&self, g: usize, v: &SparseVec) -> String {
        format!("({})@{}", self.format_element(g, v), self.group.label(g))
    }

    fn parity_of(&self, g: usize, a: usize) -> u8 {
        self.sectors[g].parity[a]
    }

    pub fn verify_axioms(&self) -> Result<Report> {
        self.verify_axioms_with(VerifyOptions::default())
    }

    /// Exhaustive check of axioms a–d and i–iv over all basis and group
    /// element tuples, plus the structural conditions they presuppose. Super
    /// algebras use the signed variants `b^σ` and `iv^σ`.
    pub fn verify_axioms_with(&self, opts: VerifyOptions) -> Result<Report> {
        let cost = axiom_cost(self);
        if cost > opts.budget {
            return Err(Error::Budget {
                estimate: cost,
                limit: opts.budget,
            });
        }
        let sup = self.is_super();
        let ord = self.order();
        let n = self.total_dim() as u64;
        let mut r = Report::new(format!(
            "{}-Frobenius algebra {} (total dim {n})",
            self.group_name(),
            self.name
        ));
        r.push(Check::new(
            "a",
            "associativity",
            n * n * n,
            self.check_assoc(),
        ));
        let (b_code, b_name) = if sup {
            ("b^σ", "twisted super-commutativity")
        } else {
            ("b", "twisted commutativity")
        };
        r.push(Check::new(b_code, b_name, n * n, self.check_twisted_comm()));
        r.push(Check::new(
            "c",
            "G-invariant unit",
            n + ord as u64,
            self.check_unit(),
        ));
        r.push(Check::new(
            "d",
            "invariance of the metric",
            n * n,
            self.check_metric_invariance(),
        ));
        r.push(Check::new(
            "i",
            "projective self-invariance of twisted sectors",
            n,
            self.check_self_invariance(),
        ));
        r.push(Check::new(
            "ii",
            "G-invariance of the multiplication",
            n * n * ord as u64,
            self.check_mult_invariance(),
        ));
        r.push(Check::new(
            "iii",
            "projective G-invariance of the metric",
            n * ord as u64,
            self.check_metric_projective(),
        ));
        let (iv_code, iv_name) = if sup {
            ("iv^σ", "projective super-trace axiom")
        } else {
            ("iv", "projective trace axiom")
        };
        r.push(Check::new(
            iv_code,
            iv_name,
            (ord * ord) as u64,
            self.check_trace(),
        ));
        r.push(Check::new(
            "rep",
            "action is a representation",
            n * (ord * ord) as u64,
            self.check_representation(),
        ));
        r.push(Check::new(
            "char",
            "character is a homomorphism",
            (ord * ord) as u64,
            self.check_character(),
        ));
        r.push(Check::new(
            "nondeg",
            "metric nondegenerate and symmetric",
            ord as u64,
            self.check_nondegenerate(),
        ));
        r.push(Check::new(
            "parity",
            "even unit, action and untwisted sector",
            n * n,
            self.check_parity(),
        ));
        Ok(r)
    }

    fn group_name(&self) -> String {
        match self.group.symmetric_degree() {
            Some(n) => format!("S_{n}"),
            None => format!("G(order {})", self.order()),
        }
    }

    fn check_assoc(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |g| {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                for a in 0..self.sector_dim(g) {
                    for b in 0..self.sector_dim(h) {
                        let ab = self.basis_product(g, h, a, b);
                        for k in 0..ord {
                            let hk = grp.mul(h, k);
                            for c in 0..self.sector_dim(k) {
                                let lhs = self.multiply(gh, ab, k, &SparseVec::unit(c));
                                let rhs = self.multiply(
                                    g,
                                    &SparseVec::unit(a),
                                    hk,
                                    self.basis_product(h, k, b, c),
                                );
                                if lhs != rhs {
                                    let ghk = grp.mul(gh, k);
                                    return Some(Witness::new(
                                        format!(
                                            "({} ∘ {}) ∘ {}",
                                            self.lab(g, a),
                                            self.lab(h, b),
                                            self.lab(k, c)
                                        ),
                                        self.fmt(ghk, &lhs),
                                        self.fmt(ghk, &rhs),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            None
        })
    }

    fn check_twisted_comm(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |g| {
            for h in 0..ord {
                let ghg = grp.conj(g, h);
                let gh = grp.mul(g, h);
                for a in 0..self.sector_dim(g) {
                    for b in 0..self.sector_dim(h) {
                        let lhs = self.basis_product(g, h, a, b);
                        let moved = self.basis_action(g, h, b);
                        let mut rhs = self.multiply(ghg, moved, g, &SparseVec::unit(a));
                        if self.parity_of(g, a) * self.parity_of(h, b) == 1 {
                            rhs = rhs.scale(&-Scalar::one());
                        }
                        if *lhs != rhs {
                            return Some(Witness::new(
                                format!("{} ∘ {} vs φ_g(b) ∘ a", self.lab(g, a), self.lab(h, b)),
                                self.fmt(gh, lhs),
                                self.fmt(gh, &rhs),
                            ));
                        }
                    }
                }
            }
            None
        })
    }

    fn check_unit(&self) -> Option<Witness> {
        let e = self.group.identity();
        for g in 0..self.order() {
            for a in 0..self.sector_dim(g) {
                let ea = SparseVec::unit(a);
                let left = self.multiply(e, &self.unit, g, &ea);
                let right = self.multiply(g, &ea, e, &self.unit);
                for (side, v) in [("1 ∘ ", &left), ("∘ 1 ", &right)] {
                    if *v != ea {
                        return Some(Witness::new(
                            format!("{side}{}", self.lab(g, a)),
                            self.fmt(g, v),
                            self.lab(g, a),
                        ));
                    }
                }
            }
            let moved = self.act(g, e, &self.unit);
            if moved != self.unit {
                return Some(Witness::new(
                    format!("φ_{}(1)", self.group.label(g)),
                    self.fmt(e, &moved),
                    self.fmt(e, &self.unit),
                ));
            }
        }
        None
    }

    fn check_metric_invariance(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |g| {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                let k = grp.inv(gh);
                for a in 0..self.sector_dim(g) {
                    let ea = SparseVec::unit(a);
                    for b in 0..self.sector_dim(h) {
                        let ab = self.basis_product(g, h, a, b);
                        for c in 0..self.sector_dim(k) {
                            let lhs = self.pair(g, &ea, self.basis_product(h, k, b, c));
                            let rhs = self.pair(gh, ab, &SparseVec::unit(c));
                            if lhs != rhs {
                                return Some(Witness::new(
                                    format!(
                                        "η({}, {} ∘ {})",
                                        self.lab(g, a),
                                        self.lab(h, b),
                                        self.lab(k, c)
                                    ),
                                    lhs,
                                    rhs,
                                ));
                            }
                        }
                    }
                }
            }
            None
        })
    }

    fn check_self_invariance(&self) -> Option<Witness> {
        for g in 0..self.order() {
            let inv = self.character[g].inv().expect("nonzero character");
            for a in 0..self.sector_dim(g) {
                let got = self.basis_action(g, g, a);
                let want = SparseVec::single(a, inv.clone());
                if *got != want {
                    return Some(Witness::new(
                        format!("φ_g({})", self.lab(g, a)),
                        self.fmt(g, got),
                        self.fmt(g, &want),
                    ));
                }
            }
        }
        None
    }

    fn check_mult_invariance(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |k| {
            for g in 0..ord {
                let kg = grp.conj(k, g);
                for h in 0..ord {
                    let gh = grp.mul(g, h);
                    let kh = grp.conj(k, h);
                    for a in 0..self.sector_dim(g) {
                        let pa = self.basis_action(k, g, a);
                        for b in 0..self.sector_dim(h) {
                            let lhs = self.act(k, gh, self.basis_product(g, h, a, b));
                            let rhs = self.multiply(kg, pa, kh, self.basis_action(k, h, b));
                            if lhs != rhs {
                                let target = grp.conj(k, gh);
                                return Some(Witness::new(
                                    format!(
                                        "φ_{}({} ∘ {})",
                                        grp.label(k),
                                        self.lab(g, a),
                                        self.lab(h, b)
                                    ),
                                    self.fmt(target, &lhs),
                                    self.fmt(target, &rhs),
                                ));
                            }
                        }
                    }
                }
            }
            None
        })
    }

    fn check_metric_projective(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |g| {
            let chi = &self.character[g];
            let factor = (chi * chi).inv().expect("nonzero character");
            for h in 0..ord {
                let hi = grp.inv(h);
                let ghg = grp.conj(g, h);
                for a in 0..self.sector_dim(h) {
                    let pa = self.basis_action(g, h, a);
                    for b in 0..self.sector_dim(hi) {
                        let lhs = self.pair(ghg, pa, self.basis_action(g, hi, b));
                        let rhs = &factor * &self.metric[h][a].get(b);
                        if lhs != rhs {
                            return Some(Witness::new(
                                format!(
                                    "η(φ_{} {}, φ_{} {})",
                                    grp.label(g),
                                    self.lab(h, a),
                                    grp.label(g),
                                    self.lab(hi, b)
                                ),
                                lhs,
                                rhs,
                            ));
                        }
                    }
                }
            }
            None
        })
    }

    /// `Σ_a (−1)^{ã} ⟨coefficient of e_a in f(e_a)⟩` over `A_g`.
    fn supertrace(&self, g: usize, f: impl Fn(usize) -> SparseVec) -> Scalar {
        let mut s = Scalar::zero();
        for a in 0..self.sector_dim(g) {
            let c = f(a).get(a);
            if self.parity_of(g, a) == 1 {
                s -= &c;
            } else {
                s += &c;
            }
        }
        s
    }

    fn check_trace(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        first(ord, |g| {
            let gi = grp.inv(g);
            for h in 0..ord {
                let comm = grp.commutator(g, h);
                let hgh = grp.conj(h, g);
                let ghg = grp.conj(g, h);
                for c in 0..self.sector_dim(comm) {
                    let ec = SparseVec::unit(c);
                    let lhs = &self.character[h]
                        * &self.supertrace(g, |a| {
                            self.multiply(comm, &ec, hgh, self.basis_action(h, g, a))
                        });
                    let rhs = &self.character[gi]
                        * &self.supertrace(h, |b| {
                            self.act(gi, ghg, self.basis_product(comm, h, c, b))
                        });
                    if lhs != rhs {
                        return Some(Witness::new(
                            format!(
                                "g={}, h={}, c={}",
                                grp.label(g),
                                grp.label(h),
                                self.lab(comm, c)
                            ),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
            None
        })
    }

    fn check_representation(&self) -> Option<Witness> {
        let ord = self.order();
        let grp = &self.group;
        let e = grp.identity();
        for k in 0..ord {
            for b in 0..self.sector_dim(k) {
                if *self.basis_action(e, k, b) != SparseVec::unit(b) {
                    return Some(Witness::new(
                        format!("φ_e({})", self.lab(k, b)),
                        self.fmt(k, self.basis_action(e, k, b)),
                        self.lab(k, b),
                    ));
                }
            }
        }
        first(ord, |g| {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                for k in 0..ord {
                    let hk = grp.conj(h, k);
                    let target = grp.conj(gh, k);
                    for b in 0..self.sector_dim(k) {
                        let lhs = self.act(g, hk, self.basis_action(h, k, b));
                        let rhs = self.basis_action(gh, k, b);
                        if lhs != *rhs {
                            return Some(Witness::new(
                                format!(
                                    "φ_{} φ_{} ({})",
                                    grp.label(g),
                                    grp.label(h),
                                    self.lab(k, b)
                                ),
                                self.fmt(target, &lhs),
                                self.fmt(target, rhs),
                            ));
                        }
                    }
                }
            }
            None
        })
    }

    fn check_character(&self) -> Option<Witness> {
        let ord = self.order();
        for g in 0..ord {
            for h in 0..ord {
                let lhs = &self.character[self.group.mul(g, h)];
                let rhs = &self.character[g] * &self.character[h];
                if *lhs != rhs {
                    return Some(Witness::new(
                        format!("χ({}·{})", self.group.label(g), self.group.label(h)),
                        lhs,
                        rhs,
                    ));
                }
            }
        }
        None
    }

    fn check_nondegenerate(&self) -> Option<Witness> {
        let grp = &self.group;
        for g in 0..self.order() {
            let gi = grp.inv(g);
            let (dg, dgi) = (self.sector_dim(g), self.sector_dim(gi));
            if dg != dgi {
                return Some(Witness::new(
                    format!("dim A_{} vs dim A_{}", grp.label(g), grp.label(gi)),
                    dg,
                    dgi,
                ));
            }
            let mut ech = SparseEchelon::new();
            for row in &self.metric[g] {
                ech.insert(row);
            }
            if ech.len() < dg {
                return Some(Witness::new(
                    format!("rank η on A_{}", grp.label(g)),
                    ech.len(),
                    dg,
                ));
            }
            for a in 0..dg {
                for (b, v) in self.metric[g][a].iter() {
                    let back = self.metric[gi][b].get(a);
                    if back != *v {
                        return Some(Witness::new(
                            format!(
                                "η({}, {}) vs η({}, {})",
                                self.lab(g, a),
                                self.lab(gi, b),
                                self.lab(gi, b),
                                self.lab(g, a)
                            ),
                            v,
                            back,
                        ));
                    }
                }
            }
        }
        None
    }

    fn check_parity(&self) -> Option<Witness> {
        let grp = &self.group;
        let e = grp.identity();
        let ord = self.order();
        if let Some(a) = (0..self.sector_dim(e)).find(|&a| self.parity_of(e, a) == 1) {
            return Some(Witness::new(format!("parity of {}", self.lab(e, a)), 1, 0));
        }
        for g in 0..ord {
            for h in 0..ord {
                let gh = grp.mul(g, h);
                for a in 0..self.sector_dim(g) {
                    for b in 0..self.sector_dim(h) {
                        let want = self.parity_of(g, a) ^ self.parity_of(h, b);
                        if let Some((k, _)) = self
                            .basis_product(g, h, a, b)
                            .iter()
                            .find(|(k, _)| self.parity_of(gh, *k) != want)
                        {
                            return Some(Witness::new(
                                format!(
                                    "parity of {} in {} ∘ {}",
                                    self.lab(gh, k),
                                    self.lab(g, a),
                                    self.lab(h, b)
                                ),
                                self.parity_of(gh, k),
                                want,
                            ));
                        }
                    }
                    let ghg = grp.conj(h, g);
                    if let Some((k, _)) = self
                        .basis_action(h, g, a)
                        .iter()
                        .find(|(k, _)| self.parity_of(ghg, *k) != self.parity_of(g, a))
                    {
                        return Some(Witness::new(
                            format!(
                                "parity of φ_{}({}) at {}",
                                grp.label(h),
                                self.lab(g, a),
                                self.lab(ghg, k)
                            ),
                            self.parity_of(ghg, k),
                            self.parity_of(g, a),
                        ));
                    }
                }
            }
            let gi = grp.inv(g);
            for a in 0..self.sector_dim(g) {
                if let Some((b, _)) = self.metric[g][a]
                    .iter()
                    .find(|(b, _)| self.parity_of(gi, *b) != self.parity_of(g, a))
                {
                    return Some(Witness::new(
                        format!(
                            "η({}, {}) pairs opposite parities",
                            self.lab(g, a),
                            self.lab(gi, b)
                        ),
                        self.parity_of(gi, b),
                        self.parity_of(g, a),
                    ));
                }
            }
        }
        None
    }
}
