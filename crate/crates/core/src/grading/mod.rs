//! Sector degree bookkeeping: top degrees `d_g`, the shifts `s_g^±` and the
//! standard shift, and Poincaré polynomials over `t^{1/2}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::gfrob::GFrobeniusAlgebra;
use crate::groups::Permutation;

/// Shifts of one group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub d_g: Scalar,
    pub s_plus: Scalar,
    pub s_minus: Scalar,
    pub s: Scalar,
}

/// Per-element shifts, indexed like the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftData {
    pub d: Scalar,
    pub shifts: Vec<Shift>,
}

impl ShiftData {
    /// All shifts zero.
    pub fn zero(order: usize, d: i64) -> Self {
        let d = Scalar::from_int(d);
        let z = Shift {
            d_g: d.clone(),
            s_plus: Scalar::zero(),
            s_minus: Scalar::zero(),
            s: Scalar::zero(),
        };
        ShiftData {
            d,
            shifts: vec![z; order],
        }
    }

    pub fn get(&self, g: usize) -> &Shift {
        &self.shifts[g]
    }

    pub fn s(&self, g: usize) -> &Scalar {
        &self.shifts[g].s
    }
}

/// `s_g^+ = d − d_g`, `s_g^− = Σ_{θ≠0} (2θ − 1)` over the eigenangles of
/// `g` (eigenvalue `e^{2πiθ}`), `s_g = ½(s_g^+ + s_g^−)`.
pub fn shifts_from_eigenvalues(d: i64, d_g: &[i64], angles: &[Vec<Scalar>]) -> Result<ShiftData> {
    if d_g.len() != angles.len() {
        return Err(Error::Shape(format!(
            "{} top degrees vs {} eigenangle sets",
            d_g.len(),
            angles.len()
        )));
    }
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let half = Scalar::frac(1, 2);
    let mut shifts = Vec::with_capacity(d_g.len());
    for (&dg, thetas) in d_g.iter().zip(angles) {
        let mut s_minus = Scalar::zero();
        for t in thetas {
            if t.is_negative() || *t >= one {
                return Err(Error::Convention(format!("eigenangle {t} outside [0, 1)")));
            }
            if !t.is_zero() {
                s_minus += &two * t - &one;
            }
        }
        let s_plus = Scalar::from_int(d - dg);
        let s = &half * &(&s_plus + &s_minus);
        shifts.push(Shift {
            d_g: Scalar::from_int(dg),
            s_plus,
            s_minus,
            s,
        });
    }
    Ok(ShiftData {
        d: Scalar::from_int(d),
        shifts,
    })
}

/// Angles `{j/k : 0 ≤ j < k}` for each `k`-cycle (fixed points included),
/// each repeated `copies` times.
pub fn permutation_eigenangles(sigma: &Permutation, copies: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(sigma.n() * copies);
    for _ in 0..copies {
        for c in sigma.cycles().blocks() {
            let k = c.len() as i64;
            out.extend((0..k).map(|j| Scalar::frac(j, k)));
        }
    }
    out
}

/// The standard shift of a permutation-group algebra: eigenangles of the
/// permutation representation with multiplicity `copies`, top degrees read
/// off the sector metrics.
pub fn standard_shifts(x: &GFrobeniusAlgebra, copies: usize) -> Result<ShiftData> {
    let grp = x.group();
    let perms = grp.permutations().ok_or_else(|| {
        Error::Unsupported("standard shift of a group without a permutation representation".into())
    })?;
    let top = |g: usize| {
        x.sector_top_degree(g).ok_or_else(|| {
            Error::DegenerateMetric(format!("sector {} has no nonzero pairing", grp.label(g)))
        })
    };
    let d = top(grp.identity())?;
    let d_g = (0..grp.order()).map(top).collect::<Result<Vec<_>>>()?;
    let angles: Vec<Vec<Scalar>> = perms
        .iter()
        .map(|p| permutation_eigenangles(p, copies))
        .collect();
    shifts_from_eigenvalues(d, &d_g, &angles)
}

/// A polynomial in `t^{1/2}` with integer coefficients, keyed by twice the
/// exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HalfPoly(pub BTreeMap<i64, i64>);

impl HalfPoly {
    pub fn add_term(&mut self, twice_exp: i64, c: i64) {
        let e = self.0.entry(twice_exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&twice_exp);
        }
    }

    pub fn add(&mut self, other: &HalfPoly) {
        for (&e, &c) in &other.0 {
            self.add_term(e, c);
        }
    }

    /// Value at `t = 1`.
    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    /// Coefficient of `t^{k/2}`.
    pub fn coefficient(&self, twice_exp: i64) -> i64 {
        self.0.get(&twice_exp).copied().unwrap_or(0)
    }
}

impl fmt::Display for HalfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.0.iter().enumerate() {
            let (neg, a) = (c < 0, c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = match (e, e % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => "t".to_string(),
                (_, true) => format!("t^{}", e / 2),
                (_, false) => format!("t^({e}/2)"),
            };
            match (a, mono.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{a}{mono}")?,
            }
        }
        Ok(())
    }
}

/// Shifted Poincaré polynomial with its breakdown by conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poincare {
    pub total: HalfPoly,
    /// Indexed like `group().conjugacy_classes()`.
    pub by_class: Vec<HalfPoly>,
}

fn twice_shift(shifts: &ShiftData, g: usize) -> Result<i64> {
    shifts
        .s(g)
        .twice_to_i64()
        .ok_or_else(|| Error::Unsupported(format!("shift {} is not a half-integer", shifts.s(g))))
}

/// `Σ t^{deg + s_g}` over the sector bases, or over the invariant basis.
pub fn shifted_poincare(
    x: &GFrobeniusAlgebra,
    shifts: &ShiftData,
    invariants_only: bool,
) -> Result<Poincare> {
    let grp = x.group();
    if shifts.shifts.len() != grp.order() {
        return Err(Error::Shape(format!(
            "{} shifts for a group of order {}",
            shifts.shifts.len(),
            grp.order()
        )));
    }
    let classes = grp.conjugacy_classes();
    let mut by_class = vec![HalfPoly::default(); classes.len()];
    if invariants_only {
        let inv = x.invariants()?;
        for i in 0..inv.dim() {
            let g = inv.sector_of(i);
            by_class[inv.class_of(i)].add_term(2 * inv.degree(i) + twice_shift(shifts, g)?, 1);
        }
    } else {
        for (ci, class) in classes.iter().enumerate() {
            for &g in class {
                let s2 = twice_shift(shifts, g)?;
                for &deg in &x.sector(g).degrees {
                    by_class[ci].add_term(2 * deg + s2, 1);
                }
            }
        }
    }
    let mut total = HalfPoly::default();
    for p in &by_class {
        total.add(p);
    }
    Ok(Poincare { total, by_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::{twisted_group_ring, Cocycle2, SuperTwist};
    use crate::frobenius::models;
    use crate::groups::FiniteGroup;
    use crate::symprod::SymmetricProduct;
    use std::sync::Arc;

    #[test]
    fn eigenangles() {
        let tau = Permutation::parse("(1 2)", 2).unwrap();
        assert_eq!(
            permutation_eigenangles(&tau, 1),
            vec![Scalar::zero(), Scalar::frac(1, 2)]
        );
        let c = Permutation::parse("(1 2 3)", 3).unwrap();
        let third = vec![Scalar::zero(), Scalar::frac(1, 3), Scalar::frac(2, 3)];
        assert_eq!(
            permutation_eigenangles(&c, 2),
            [third.clone(), third].concat()
        );
        assert!(permutation_eigenangles(&Permutation::identity(4), 3)
            .iter()
            .all(Scalar::is_zero));
    }

    #[test]
    fn trivial_rep_and_bad_angle() {
        let s = shifts_from_eigenvalues(4, &[4, 2], &[vec![], vec![Scalar::zero(); 3]]).unwrap();
        assert_eq!(s.s(1), &Scalar::one());
        assert!(s.get(1).s_minus.is_zero());
        assert!(shifts_from_eigenvalues(4, &[4], &[vec![Scalar::one()]]).is_err());
        assert!(shifts_from_eigenvalues(4, &[4], &[vec![Scalar::frac(-1, 2)]]).is_err());
    }

    #[test]
    fn k3_transposition_shift() {
        let x = SymmetricProduct::new(models::k3(), 2)
            .unwrap()
            .build()
            .unwrap();
        let s = standard_shifts(&x, 2).unwrap();
        let tau = (0..2).find(|&g| g != x.group().identity()).unwrap();
        assert_eq!(s.s(tau), &Scalar::from_int(2));
    }

    #[test]
    fn group_ring_poincare() {
        let g = Arc::new(FiniteGroup::symmetric(2).unwrap());
        let x = twisted_group_ring(&Cocycle2::trivial(g.clone()), &SuperTwist::trivial(g)).unwrap();
        let p = shifted_poincare(&x, &ShiftData::zero(2, 0), false).unwrap();
        assert_eq!(p.total.to_string(), "2");
    }

    #[test]
    fn dual_numbers_invariant_poincare() {
        let x = SymmetricProduct::new(models::dual_numbers(), 2)
            .unwrap()
            .build()
            .unwrap();
        let s = standard_shifts(&x, 1).unwrap();
        let p = shifted_poincare(&x, &s, true).unwrap();
        assert_eq!(p.total.to_string(), "1 + t + t^2 + t^3 + t^4");
        let all = shifted_poincare(&x, &s, false).unwrap();
        assert_eq!(all.total.total(), 6);
    }

    #[test]
    fn half_exponents_print() {
        let mut p = HalfPoly::default();
        p.add_term(1, 2);
        p.add_term(0, -1);
        p.add_term(3, 1);
        assert_eq!(p.to_string(), "-1 + 2t^(1/2) + t^(3/2)");
    }
}
