use super::*;
use crate::cocycles::twisted_group_ring;
use crate::frobenius::models;

fn sp(base: FrobeniusAlgebra, n: usize) -> SymmetricProduct {
    SymmetricProduct::new(base, n).unwrap()
}

fn idx(s: &SymmetricProduct, cyc: &str) -> usize {
    s.index_of(&Permutation::parse(cyc, s.n()).unwrap())
        .unwrap()
}

// dual numbers: basis 1 = e_0, x = e_1
fn x() -> SparseVec {
    SparseVec::unit(1)
}

#[test]
fn transposition_square_is_copairing() {
    let s = sp(models::dual_numbers(), 2);
    let t = idx(&s, "(1 2)");
    let e = s.group().identity();
    let one = s.sector_unit(t);
    let expect = SparseVec::from_pairs(vec![(1, Scalar::one()), (2, Scalar::one())]);
    assert_eq!(s.multiply_pushforward(t, &one, t, &one).unwrap(), expect);
    assert_eq!(s.multiply_chain(t, &one, t, &one, None).unwrap(), expect);
    assert_eq!(s.format_sector(e, &expect), "1⊗x + x⊗1");
}

#[test]
fn three_cycle_square_and_transposition_product() {
    let s = sp(models::dual_numbers(), 3);
    let c = idx(&s, "(1 2 3)");
    let ci = idx(&s, "(1 3 2)");
    let one = s.sector_unit(c);
    let two_x = x().scale(&Scalar::from_int(2));
    assert_eq!(s.multiply_pushforward(c, &one, c, &one).unwrap(), two_x);
    assert_eq!(s.multiply_chain(c, &one, c, &one, None).unwrap(), two_x);

    let (a, b) = (idx(&s, "(1 2)"), idx(&s, "(1 3)"));
    assert_eq!(s.group().mul(a, b), ci);
    let (ua, ub) = (s.sector_unit(a), s.sector_unit(b));
    assert_eq!(
        s.multiply_pushforward(a, &ua, b, &ub).unwrap(),
        s.sector_unit(ci)
    );
    assert_eq!(
        s.multiply_chain(a, &ua, b, &ub, None).unwrap(),
        s.sector_unit(ci)
    );
}

#[test]
fn obstruction_exponents() {
    let p = |c: &str| Permutation::parse(c, 3).unwrap();
    let all = [0, 1, 2];
    assert_eq!(
        obstruction_exponent(&p("(1 2)"), &p("(1 2)"), &[0, 1]).unwrap(),
        0
    );
    assert_eq!(
        obstruction_exponent(&p("(1 2 3)"), &p("(1 2 3)"), &all).unwrap(),
        1
    );
    assert_eq!(
        obstruction_exponent(&p("(1 2)"), &p("(1 3)"), &all).unwrap(),
        0
    );
}

#[test]
fn point_base_is_group_ring() {
    for n in 1..=4 {
        let s = sp(models::point(), n);
        let g = s.group().clone();
        let ring =
            twisted_group_ring(&Cocycle2::trivial(g.clone()), &SuperTwist::trivial(g)).unwrap();
        assert_eq!(s.build().unwrap(), ring, "n = {n}");
    }
}

#[test]
fn action_moves_units() {
    let s = sp(models::dual_numbers(), 3);
    let (g, h) = (idx(&s, "(1 2)"), idx(&s, "(1 3)"));
    let x = s.build().unwrap();
    assert_eq!(s.group().conj(g, h), idx(&s, "(2 3)"));
    assert_eq!(
        x.act(g, h, &s.sector_unit(h)),
        s.sector_unit(idx(&s, "(2 3)"))
    );
}

#[test]
fn sector_dimensions() {
    let s = sp(models::dual_numbers(), 2);
    let t = idx(&s, "(1 2)");
    assert_eq!(
        (s.sector_dim(s.group().identity()), s.sector_dim(t)),
        (4, 2)
    );
}

#[test]
fn lambda_and_hilbert_twists() {
    let s = sp(models::dual_numbers(), 3);
    let x3 = s.build().unwrap();
    let c = idx(&s, "(1 2 3)");
    let ci = idx(&s, "(1 3 2)");
    let one = s.sector_unit(c);
    let lam = qw_twist(&x3, &Scalar::from_int(2)).unwrap();
    assert_eq!(
        lam.multiply(c, &one, c, &one),
        x().scale(&Scalar::from_int(4))
    );
    let hil = hilbert_twist(&x3).unwrap();
    assert_eq!(
        hil.multiply(c, &one, c, &one),
        x().scale(&Scalar::from_int(-2))
    );
    assert_eq!(
        hil.pair(c, &one, &s.sector_unit(ci).add(&x())),
        Scalar::one()
    );
    assert!(qw_twist(&x3, &Scalar::zero()).is_err());
}

#[test]
fn both_paths_agree_and_pass_axioms() {
    for (base, n) in [
        (models::dual_numbers(), 2),
        (models::dual_numbers(), 3),
        (models::surface4(), 2),
        (models::dual_numbers(), 4),
    ] {
        let s = sp(base, n);
        let a = s.build().unwrap();
        let b = s
            .build_with(BuildOptions {
                path: ProductPath::Chain,
                ..Default::default()
            })
            .unwrap();
        assert_eq!(a, b, "n = {n}");
        let r = a.verify_axioms().unwrap();
        assert!(r.passed(), "{:?}", r.failed_codes());
        let h = hilbert_twist(&a).unwrap();
        assert!(h.verify_axioms().unwrap().passed());
    }
}

#[test]
fn kernel_lemma_and_metric_compatibility() {
    let s = sp(models::dual_numbers(), 3);
    let ord = s.group().order();
    for g in 0..ord {
        assert!(s.metric_compatibility(g).unwrap().is_none());
        for h in 0..ord {
            assert!(s.kernel_lemma(g, h).unwrap().is_none());
        }
    }
}

#[test]
fn degree_identity_when_nonzero() {
    let s = sp(models::surface4(), 3);
    let ord = s.group().order();
    let mut seen = 0;
    for g in 0..ord {
        for h in 0..ord {
            if let Some((d, e)) = s.degree_identity(g, h).unwrap() {
                assert_eq!(d, e);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn compatibility_pairs() {
    let s = sp(models::dual_numbers(), 3);
    let deg = |h: usize| s.perm(h).degree() as i64;
    for p in [0, 1, 2] {
        let r = s
            .compatibility_pair(p, |g, h| Scalar::sign_power(p as i64 * deg(g) * deg(h)))
            .unwrap();
        assert!(r.passed(), "p = {p}: {:?}", r.failed_codes());
    }
    let bad = s
        .compatibility_pair(0, |_, h| Scalar::sign_power(deg(h)))
        .unwrap();
    assert!(!bad.passed());
}

#[test]
fn rejects_bad_bases_and_words() {
    let s = sp(models::dual_numbers(), 3);
    let c = idx(&s, "(1 2 3)");
    let bad = vec![Permutation::parse("(1 2)", 3).unwrap()];
    assert!(s.chain_plan(c, c, Some(&bad)).is_err());
    assert!(matches!(
        s.build_with(BuildOptions {
            budget: 10,
            ..Default::default()
        }),
        Err(Error::Budget { .. })
    ));
}
