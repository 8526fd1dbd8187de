//! Randomized checks of the structural invariants.

use std::sync::Arc;

use orbifrob::cocycles::{
    normalized_sn_cocycle, normalized_sn_cocycle_on, sign_supertwist_on, twisted_group_ring,
    SuperTwist,
};
use orbifrob::exactnum::{metric_adjoint, Matrix, Scalar, SparseVec};
use orbifrob::frobenius::models;
use orbifrob::gfrob::GFrobeniusAlgebra;
use orbifrob::grading::{permutation_eigenangles, shifts_from_eigenvalues, standard_shifts};
use orbifrob::groups::{group_orbits, FiniteGroup, Permutation};
use orbifrob::io::CocycleDoc;
use orbifrob::symprod::{hilbert_twist, SymmetricProduct};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perm_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..=5).prop_flat_map(|n| (perm(n), perm(n)))
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=30).prop_map(|(p, q)| Scalar::frac(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(rational(), c), r)
        .prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

/// Symmetric with a nonzero diagonal of an invertible triangular factor.
fn metric(d: usize) -> impl Strategy<Value = Matrix> {
    (
        matrix(d, d),
        proptest::collection::vec(nonzero_rational(), d),
    )
        .prop_map(move |(m, diag)| {
            let mut l = Matrix::zeros(d, d);
            for i in 0..d {
                for j in 0..i {
                    l[(i, j)] = m[(i, j)].clone();
                }
                l[(i, i)] = Scalar::one();
            }
            let mut dm = Matrix::zeros(d, d);
            for (i, x) in diag.into_iter().enumerate() {
                dm[(i, i)] = x;
            }
            l.mul(&dm).unwrap().mul(&l.transpose()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_lemma((s, t) in perm_pair()) {
        let st = s.compose(&t).unwrap();
        let k = s.degree() as i64 + t.degree() as i64 - st.degree() as i64;
        prop_assert!(k >= 0 && k % 2 == 0);
    }

    #[test]
    fn length_symmetries((s, t) in perm_pair()) {
        prop_assert_eq!(s.degree(), s.inverse().degree());
        prop_assert_eq!(s.conjugate(&t).unwrap().cycle_count(), t.cycle_count());
        prop_assert_eq!(group_orbits(std::slice::from_ref(&s), Some(s.n())).unwrap(), s.cycles());
    }

    #[test]
    fn rational_inverse(x in nonzero_rational()) {
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn adjoint_involutive_and_contravariant(
        (eu, ev, ew) in (metric(2), metric(3), metric(2)),
        (n, m) in (matrix(3, 2), matrix(2, 3)),
    ) {
        // n: U → V, m: V → W
        let na = metric_adjoint(&n, &eu, &ev).unwrap();
        prop_assert_eq!(metric_adjoint(&na, &ev, &eu).unwrap(), n.clone());
        let mn = m.mul(&n).unwrap();
        let lhs = metric_adjoint(&mn, &eu, &ew).unwrap();
        let rhs = na.mul(&metric_adjoint(&m, &ev, &ew).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cocycle_multiplicative(n in 2usize..=4, l in nonzero_rational(), m in nonzero_rational()) {
        let a = normalized_sn_cocycle(n, &l).unwrap();
        let b = normalized_sn_cocycle_on(a.group(), &m).unwrap();
        let ab = normalized_sn_cocycle_on(a.group(), &(&l * &m)).unwrap();
        let prod = a.multiply(&b).unwrap();
        prop_assert_eq!(prod.values(), ab.values());
    }

    #[test]
    fn epsilon_antisymmetric_on_commuting_pairs(n in 3usize..=4, l in nonzero_rational()) {
        let a = normalized_sn_cocycle(n, &l).unwrap();
        let g = a.group().clone();
        for x in 0..g.order() {
            for y in 0..g.order() {
                if g.commute(x, y) {
                    prop_assert!((&a.epsilon(x, y) * &a.epsilon(y, x)).is_one());
                }
            }
        }
    }

    #[test]
    fn cocycle_document_round_trip(n in 2usize..=4, l in nonzero_rational()) {
        let a = normalized_sn_cocycle(n, &l).unwrap();
        let doc = CocycleDoc::from_cocycle(&a).to_json();
        let b = CocycleDoc::parse(&doc).unwrap().to_cocycle().unwrap();
        prop_assert_eq!(a.values(), b.values());
    }

    #[test]
    fn eigenangle_shifts(s in (1usize..=5).prop_flat_map(perm), copies in 1usize..=3, d in 0i64..=12) {
        let angles = permutation_eigenangles(&s, copies);
        let data = shifts_from_eigenvalues(d, &[d], &[angles]).unwrap();
        prop_assert!(data.get(0).s_minus.is_zero());
    }

    #[test]
    fn inverse_shifts_sum_to_s_plus(
        thetas in proptest::collection::vec((0i64..12, 1i64..=12).prop_map(|(p, q)| Scalar::frac(p % q, q)), 0..6),
        d in 0i64..=8,
        dg in 0i64..=8,
    ) {
        let inverse: Vec<Scalar> =
            thetas.iter().map(|t| if t.is_zero() { t.clone() } else { &Scalar::one() - t }).collect();
        let s = shifts_from_eigenvalues(d, &[dg, dg], &[thetas, inverse]).unwrap();
        prop_assert_eq!(s.s(0) + s.s(1), Scalar::from_int(d - dg));
    }
}

fn random_vec(dim: usize, seed: &[i64]) -> SparseVec {
    SparseVec::from_pairs(
        (0..dim)
            .map(|i| (i, Scalar::from_int(seed[i % seed.len()] + i as i64 % 3)))
            .collect::<Vec<_>>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pushforward_is_metric_adjoint(
        i in 0usize..6, j in 0usize..6,
        seed in proptest::collection::vec(-3i64..=3, 1..5),
        surface in any::<bool>(),
    ) {
        let base = if surface { models::surface4() } else { models::dual_numbers() };
        let s = SymmetricProduct::new(base, 3).unwrap();
        let (p, q) = (s.perm(i).clone(), s.perm(j).clone());
        let fine = p.cycles();
        let coarse = group_orbits(&[p, q], Some(3)).unwrap();
        let d = s.base().dim();
        let x = random_vec(d.pow(fine.len() as u32), &seed);
        let y = random_vec(d.pow(coarse.len() as u32), &seed[1..].iter().chain([&5]).copied().collect::<Vec<_>>());
        let ry = s.pushforward(&fine, &coarse, &y).unwrap();
        let rx = s.restrict(&fine, &coarse, &x).unwrap();
        prop_assert_eq!(s.base().tensor_pair(fine.len(), &ry, &x), s.base().tensor_pair(coarse.len(), &y, &rx));
    }

    #[test]
    fn restriction_is_unital_algebra_map(
        i in 0usize..6, j in 0usize..6,
        a in proptest::collection::vec(-3i64..=3, 1..5),
        b in proptest::collection::vec(-3i64..=3, 1..5),
    ) {
        let s = SymmetricProduct::new(models::surface4(), 3).unwrap();
        let fine = s.perm(i).cycles();
        let coarse = group_orbits(&[s.perm(i).clone(), s.perm(j).clone()], Some(3)).unwrap();
        let (lf, lc) = (fine.len(), coarse.len());
        let dim = 4usize.pow(lf as u32);
        let (u, v) = (random_vec(dim, &a), random_vec(dim, &b));
        let r = |w: &SparseVec| s.restrict(&fine, &coarse, w).unwrap();
        prop_assert_eq!(r(&s.base().tensor_multiply(lf, &u, &v)), s.base().tensor_multiply(lc, &r(&u), &r(&v)));
        prop_assert_eq!(r(&s.base().tensor_unit(lf)), s.base().tensor_unit(lc));
    }

    #[test]
    fn twists_preserve_axioms(n in 2usize..=3, l in nonzero_rational(), sup in any::<bool>()) {
        let x = SymmetricProduct::new(models::dual_numbers(), n).unwrap().build().unwrap();
        let g = x.group_arc().clone();
        let sigma = if sup { sign_supertwist_on(&g).unwrap() } else { SuperTwist::trivial(g.clone()) };
        let y = x.twist(&normalized_sn_cocycle_on(&g, &l).unwrap(), &sigma).unwrap();
        let r = y.verify_axioms().unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_codes());
    }

    #[test]
    fn tensor_hat_associative(l in nonzero_rational(), m in nonzero_rational(), sup in any::<bool>()) {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let ring = |a: &Scalar, s: bool| -> GFrobeniusAlgebra {
            let sigma = if s { sign_supertwist_on(&g).unwrap() } else { SuperTwist::trivial(g.clone()) };
            twisted_group_ring(&normalized_sn_cocycle_on(&g, a).unwrap(), &sigma).unwrap()
        };
        let (x, y) = (ring(&l, sup), ring(&m, false));
        let z = SymmetricProduct::new(models::dual_numbers(), 3).unwrap().build().unwrap();
        let left = x.tensor_hat(&y).unwrap().tensor_hat(&z).unwrap();
        let right = x.tensor_hat(&y.tensor_hat(&z).unwrap()).unwrap();
        prop_assert!(left == right);
    }

    #[test]
    fn invariant_product_commutative(n in 2usize..=3, l in nonzero_rational()) {
        let x = SymmetricProduct::new(models::dual_numbers(), n).unwrap().build().unwrap();
        let g = x.group_arc().clone();
        let y = x.twist(&normalized_sn_cocycle_on(&g, &l).unwrap(), &SuperTwist::trivial(g)).unwrap();
        let inv = y.invariants().unwrap();
        prop_assert!(inv.is_commutative(&y));
    }
}

#[test]
fn euler_class_central_top_degree_and_snake() {
    for a in [
        models::point(),
        models::dual_numbers(),
        models::surface4(),
        models::k3(),
    ] {
        let e = a.euler_class().unwrap();
        let d = a.top_degree().unwrap_or(0);
        for (i, _) in e.iter() {
            assert_eq!(a.degree(i), d, "{}", a.name());
        }
        let dual = a.dual_basis().unwrap();
        for i in 0..a.dim() {
            let u = SparseVec::unit(i);
            assert_eq!(a.multiply_sparse(&u, &e), a.multiply_sparse(&e, &u));
            let mut back = SparseVec::new();
            for (j, ej) in dual.iter().enumerate() {
                back = back.add_scaled(ej, &a.pair(&u, &SparseVec::unit(j)));
            }
            assert_eq!(back, u, "{}", a.name());
        }
    }
}

#[test]
fn symmetric_product_shift_is_half_top_degree_times_length() {
    for (base, top) in [(models::dual_numbers(), 2), (models::surface4(), 4)] {
        for n in 1..=4 {
            let x = SymmetricProduct::new(base.clone(), n)
                .unwrap()
                .build()
                .unwrap();
            let s = standard_shifts(&x, top as usize / 2).unwrap();
            for g in 0..x.order() {
                let deg = x.group().permutation(g).unwrap().degree() as i64;
                assert_eq!(s.s(g), &Scalar::frac(top * deg, 2));
                let gi = x.group().inv(g);
                assert_eq!(s.s(g) + s.s(gi), &s.d - &s.get(g).d_g);
            }
        }
    }
}

#[test]
fn hilbert_twist_keeps_invariants_commutative() {
    let x = SymmetricProduct::new(models::surface4(), 3)
        .unwrap()
        .build()
        .unwrap();
    let h = hilbert_twist(&x).unwrap();
    let inv = h.invariants().unwrap();
    assert!(inv.is_commutative(&h));
    assert_eq!(inv.dim(), x.invariants().unwrap().dim());
}
