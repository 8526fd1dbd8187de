//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Exits nonzero when any criterion fails.

use std::sync::Arc;
use std::time::Instant;

use orbifrob::cocycles::{
    contraction_exponent, normalized_sn_cocycle, normalized_sn_cocycle_on, sign_supertwist_on,
    twisted_group_ring, Cocycle2, SuperTwist,
};
use orbifrob::exactnum::{Scalar, SparseVec};
use orbifrob::frobenius::{models, FrobeniusAlgebra};
use orbifrob::gfrob::GFrobeniusAlgebra;
use orbifrob::grading::{permutation_eigenangles, shifted_poincare, standard_shifts};
use orbifrob::groups::{FiniteGroup, Permutation};
use orbifrob::symprod::{hilbert_twist, qw_twist, BuildOptions, ProductPath, SymmetricProduct};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sp(base: FrobeniusAlgebra, n: usize) -> Result<SymmetricProduct, String> {
    ok(SymmetricProduct::new(base, n))
}

fn build(
    base: FrobeniusAlgebra,
    n: usize,
) -> Result<(SymmetricProduct, GFrobeniusAlgebra), String> {
    let s = sp(base, n)?;
    let x = ok(s.build())?;
    Ok((s, x))
}

fn perm(x: &GFrobeniusAlgebra, g: usize) -> &Permutation {
    x.group().permutation(g).expect("symmetric group")
}

/// `|σ| = n − #cycles`, counted from the image array.
fn length(p: &Permutation) -> i64 {
    let n = p.n();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for i in 0..n {
        if !seen[i] {
            cycles += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = p.images()[j];
            }
        }
    }
    (n - cycles) as i64
}

fn half_defect(p: &Permutation, q: &Permutation) -> i64 {
    let pq =
        Permutation::from_images((0..p.n()).map(|i| p.images()[q.images()[i]]).collect()).unwrap();
    let twice = length(p) + length(q) - length(&pq);
    assert!(twice >= 0 && twice % 2 == 0);
    twice / 2
}

fn axioms_pass(x: &GFrobeniusAlgebra) -> Result<(), String> {
    let r = ok(x.verify_axioms())?;
    let (b, iv) = if x.is_super() {
        ("b^σ", "iv^σ")
    } else {
        ("b", "iv")
    };
    for code in ["a", b, "c", "d", "i", "ii", "iii", iv] {
        ensure!(r.get(code).is_some(), "{}: check {code} missing", x.name());
    }
    ensure!(r.passed(), "{}: failed {:?}", x.name(), r.failed_codes());
    Ok(())
}

// 1. Base k gives the group ring.
fn group_ring_degeneration() -> Outcome {
    for n in 2..=5 {
        let (_, x) = build(models::point(), n)?;
        let g = x.group_arc().clone();
        let ring = ok(twisted_group_ring(
            &Cocycle2::trivial(g.clone()),
            &SuperTwist::trivial(g.clone()),
        ))?;
        ensure!(x == ring, "n={n}: differs from twisted_group_ring");
        // Hand-built k[S_n]: e_g e_h = e_{gh}, trivial action, unit metric.
        let ord = g.order();
        let one = SparseVec::unit(0);
        ensure!(x.unit() == &one, "n={n}: unit");
        for a in 0..ord {
            ensure!(x.sector_dim(a) == 1, "n={n}: sector dim");
            ensure!(x.character()[a].is_one(), "n={n}: character");
            ensure!(
                x.metric_rows(a) == [one.clone()],
                "n={n}: metric at {}",
                g.label(a)
            );
            for b in 0..ord {
                let ab = g.mul(a, b);
                let composed = Permutation::from_images(
                    (0..n)
                        .map(|i| perm(&x, a).images()[perm(&x, b).images()[i]])
                        .collect(),
                )
                .unwrap();
                ensure!(perm(&x, ab) == &composed, "n={n}: group law");
                ensure!(x.product_table(a, b) == [one.clone()], "n={n}: product");
                ensure!(x.action_table(a, b) == [one.clone()], "n={n}: action");
            }
        }
        axioms_pass(&x)?;
    }
    Ok("n = 2..5".into())
}

// 2. Axioms on second quantizations.
fn axiom_suite() -> Outcome {
    for (base, ns) in [(models::dual_numbers(), 2..=4), (models::surface4(), 2..=3)] {
        for n in ns {
            let (_, x) = build(base.clone(), n)?;
            axioms_pass(&x)?;
        }
    }
    Ok("dual n=2..4, surface4 n=2..3".into())
}

// 3. Chain path against pushforward path; word independence.
fn cross_oracle() -> Outcome {
    let mut pairs = 0usize;
    for base in [models::point(), models::dual_numbers(), models::surface4()] {
        for n in 1..=4 {
            let s = sp(base.clone(), n)?;
            let push = ok(s.build_with(BuildOptions {
                path: ProductPath::Pushforward,
                ..Default::default()
            }))?;
            let chain = ok(s.build_with(BuildOptions {
                path: ProductPath::Chain,
                ..Default::default()
            }))?;
            let ord = s.group().order();
            for g in 0..ord {
                for h in 0..ord {
                    ensure!(
                        push.product_table(g, h) == chain.product_table(g, h),
                        "{} n={n}: paths differ at ({}, {})",
                        base.name(),
                        s.perm(g),
                        s.perm(h)
                    );
                    pairs += push.product_table(g, h).len();
                }
            }
        }
    }
    let mut words_checked = 0usize;
    for (base, all_words) in [(models::dual_numbers(), true), (models::surface4(), false)] {
        let s = sp(base.clone(), 4)?;
        let ord = s.group().order();
        for h in 0..ord {
            if length(s.perm(h)) < 2 {
                continue;
            }
            let mut words = s.perm(h).all_minimal_words();
            ensure!(words.len() >= 2, "{} has a single minimal word", s.perm(h));
            if !all_words {
                words = vec![words[0].clone(), words[words.len() - 1].clone()];
            }
            for g in 0..ord {
                let reference = ok(s.pushforward_plan(g, h))?;
                let (dg, dh) = (s.sector_dim(g), s.sector_dim(h));
                for w in &words {
                    let plan = ok(s.chain_plan(g, h, Some(w)))?;
                    for a in 0..dg {
                        for b in 0..dh {
                            let (u, v) = (SparseVec::unit(a), SparseVec::unit(b));
                            ensure!(
                                s.apply_chain(&plan, &u, &v)
                                    == s.apply_pushforward(&reference, &u, &v),
                                "{} word {:?} for ({}, {})",
                                base.name(),
                                w,
                                s.perm(g),
                                s.perm(h)
                            );
                        }
                    }
                    words_checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{pairs} basis pairs, {words_checked} (σ, word) plans"
    ))
}

// 4. Hilbert twist identities.
fn hilbert_identities() -> Outcome {
    for (base, ns) in [(models::dual_numbers(), 2..=4), (models::surface4(), 2..=3)] {
        for n in ns {
            let (_, x) = build(base.clone(), n)?;
            let y = ok(hilbert_twist(&x))?;
            let eps = ok(normalized_sn_cocycle(n, &Scalar::from_int(-1)))?.epsilon_table();
            ensure!(eps.iter().all(Scalar::is_one), "n={n}: ε not identically 1");
            ensure!(x.character() == y.character(), "n={n}: χ changed");
            let ord = x.order();
            for g in 0..ord {
                let msign = Scalar::sign_power(length(perm(&x, g)));
                let scaled: Vec<SparseVec> =
                    x.metric_rows(g).iter().map(|r| r.scale(&msign)).collect();
                ensure!(
                    y.metric_rows(g) == scaled.as_slice(),
                    "n={n}: η sign at {}",
                    perm(&x, g)
                );
                for h in 0..ord {
                    ensure!(
                        x.action_table(g, h) == y.action_table(g, h),
                        "n={n}: φ changed"
                    );
                    let sign = Scalar::sign_power(half_defect(perm(&x, g), perm(&x, h)));
                    let expect: Vec<SparseVec> = x
                        .product_table(g, h)
                        .iter()
                        .map(|v| v.scale(&sign))
                        .collect();
                    ensure!(
                        y.product_table(g, h) == expect.as_slice(),
                        "n={n}: product sign at ({}, {})",
                        perm(&x, g),
                        perm(&x, h)
                    );
                }
            }
            axioms_pass(&y)?;
        }
    }
    Ok("dual n=2..4, surface4 n=2..3".into())
}

// 5. The normalized cocycle family.
fn cocycle_family() -> Outcome {
    let lambdas = [
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::frac(1, 3),
    ];
    for n in 2..=5 {
        let grp = Arc::new(ok(FiniteGroup::symmetric(n))?);
        let ord = grp.order();
        let family: Vec<Cocycle2> = lambdas
            .iter()
            .map(|l| ok(normalized_sn_cocycle_on(&grp, l)))
            .collect::<Result<_, _>>()?;
        for (l, c) in lambdas.iter().zip(&family) {
            let r = c.validate();
            ensure!(r.passed(), "n={n} λ={l}: {:?}", r.failed_codes());
            for g in 0..ord {
                for h in 0..ord {
                    let e = ok(contraction_exponent(&grp, g, h))?;
                    let (p, q) = (grp.permutation(g).unwrap(), grp.permutation(h).unwrap());
                    ensure!(
                        e >= 0 && e == half_defect(p, q),
                        "n={n}: exponent at ({p}, {q})"
                    );
                    ensure!(
                        *c.value(g, h) == l.pow(e),
                        "n={n} λ={l}: value at ({p}, {q})"
                    );
                }
            }
        }
        for (i, li) in lambdas.iter().enumerate() {
            for (j, lj) in lambdas.iter().enumerate() {
                let prod = ok(family[i].multiply(&family[j]))?;
                let direct = ok(normalized_sn_cocycle_on(&grp, &(li * lj)))?;
                ensure!(
                    prod == direct,
                    "n={n}: α(λ={li})α(λ={lj}) ≠ α(λ={})",
                    li * lj
                );
            }
        }
    }
    // λ-twisted second quantization.
    for n in [2, 3] {
        let (s, x) = build(models::dual_numbers(), n)?;
        for l in &lambdas[1..] {
            let y = ok(qw_twist(&x, l))?;
            for g in 0..x.order() {
                let m = l.pow(length(perm(&x, g)));
                let scaled: Vec<SparseVec> = x.metric_rows(g).iter().map(|r| r.scale(&m)).collect();
                ensure!(
                    y.metric_rows(g) == scaled.as_slice(),
                    "λ={l}: metric at {}",
                    perm(&x, g)
                );
                for h in 0..x.order() {
                    let c = l.pow(half_defect(perm(&x, g), perm(&x, h)));
                    let expect: Vec<SparseVec> =
                        x.product_table(g, h).iter().map(|v| v.scale(&c)).collect();
                    ensure!(
                        y.product_table(g, h) == expect.as_slice(),
                        "λ={l}: product at ({}, {})",
                        perm(&x, g),
                        perm(&x, h)
                    );
                }
            }
            let tau = ok(s.index_of(&ok(Permutation::parse("(1 2)", n))?))?;
            let one = s.sector_unit(tau);
            ensure!(
                y.multiply(tau, &one, tau, &one) == x.multiply(tau, &one, tau, &one).scale(l),
                "λ={l}: 1_τ 1_τ"
            );
            axioms_pass(&y)?;
        }
    }
    Ok("n = 2..5, λ ∈ {-1, 2, 1/3}".into())
}

// 6. Compatibility pairs on S_3.
fn compatibility_pairs() -> Outcome {
    for base in [models::dual_numbers(), models::surface4()] {
        let (s, x) = build(base.clone(), 3)?;
        let deg = |g: usize| length(s.perm(g));
        let phi = |p: i64| move |g: usize, h: usize| Scalar::sign_power(p * deg(g) * deg(h));
        let r0 = ok(s.compatibility_pair(0, phi(0)))?;
        ensure!(r0.passed(), "{} φ≡1: {:?}", base.name(), r0.failed_codes());
        let r1 = ok(s.compatibility_pair(1, phi(1)))?;
        ensure!(
            r1.passed(),
            "{} φ=(−1)^(|σ||σ′|): {:?}",
            base.name(),
            r1.failed_codes()
        );
        let ord = s.group().order();
        for g in 0..ord {
            for h in 0..ord {
                ensure!(phi(2)(g, h) == phi(0)(g, h), "p=2 differs from p=0");
            }
        }
        let r2 = ok(s.compatibility_pair(2, phi(2)))?;
        ensure!(
            r2.checks == r0.checks,
            "{}: p=2 checks differ from p=0",
            base.name()
        );
        let bad = ok(s.compatibility_pair(0, |_, h| Scalar::sign_power(deg(h))))?;
        ensure!(!bad.passed(), "{}: negative control passed", base.name());
        let g = x.group_arc().clone();
        let sup = ok(x.twist(&Cocycle2::trivial(g.clone()), &ok(sign_supertwist_on(&g))?))?;
        axioms_pass(&sup)?;
    }
    Ok("S_3 over dual and surface4; p ∈ {0, 1}, p=2 ≡ p=0, control fails".into())
}

// 7. Intersection lemmas.
fn intersection_lemmas() -> Outcome {
    let mut degree_cases = 0;
    for base in [models::dual_numbers(), models::surface4()] {
        for n in 1..=4 {
            let s = sp(base.clone(), n)?;
            for g in 0..s.group().order() {
                if let Some(w) = ok(s.metric_compatibility(g))? {
                    return Err(format!(
                        "{} n={n}: metric compatibility at {}: {w:?}",
                        base.name(),
                        s.perm(g)
                    ));
                }
            }
        }
    }
    for base in [models::point(), models::dual_numbers(), models::surface4()] {
        for n in 1..=3 {
            let s = sp(base.clone(), n)?;
            let ord = s.group().order();
            for g in 0..ord {
                for h in 0..ord {
                    if let Some(w) = ok(s.kernel_lemma(g, h))? {
                        return Err(format!(
                            "{} n={n}: kernel lemma at ({}, {}): {w:?}",
                            base.name(),
                            s.perm(g),
                            s.perm(h)
                        ));
                    }
                    if let Some((lhs, rhs)) = ok(s.degree_identity(g, h))? {
                        ensure!(
                            lhs == rhs,
                            "{} n={n}: deg γ̃ {lhs} vs {rhs} at ({}, {})",
                            base.name(),
                            s.perm(g),
                            s.perm(h)
                        );
                        degree_cases += 1;
                    }
                }
            }
        }
    }
    ensure!(degree_cases > 0, "degree identity never applicable");
    Ok(format!("{degree_cases} nonzero γ̃ degree cases"))
}

// 8. Euler classes.
fn euler_classes() -> Outcome {
    let v = |pairs: &[(usize, i64)]| {
        SparseVec::from_pairs(pairs.iter().map(|&(i, c)| (i, Scalar::from_int(c))))
    };
    let expected = [
        (models::point(), v(&[(0, 1)])),
        (models::dual_numbers(), v(&[(1, 2)])),
        (models::surface4(), v(&[(3, 4)])),
    ];
    for (a, e) in &expected {
        ensure!(
            ok(a.euler_class())? == *e,
            "{}: e = {}",
            a.name(),
            a.format_element(&ok(a.euler_class())?)
        );
    }
    for (base, e) in expected.into_iter().skip(1) {
        let (s, x) = build(base.clone(), 3)?;
        let c = ok(s.index_of(&ok(Permutation::parse("(1 2 3)", 3))?))?;
        let ci = ok(s.index_of(&ok(Permutation::parse("(1 3 2)", 3))?))?;
        ensure!(s.group().mul(c, c) == ci, "(123)² ≠ (132)");
        let one = s.sector_unit(c);
        ensure!(
            ok(s.multiply_pushforward(c, &one, c, &one))? == e,
            "{}: pushforward",
            base.name()
        );
        ensure!(
            ok(s.multiply_chain(c, &one, c, &one, None))? == e,
            "{}: chain",
            base.name()
        );
        ensure!(
            x.multiply(c, &one, c, &one) == e,
            "{}: built table",
            base.name()
        );
        let h = ok(hilbert_twist(&x))?;
        ensure!(
            h.multiply(c, &one, c, &one) == e.scale(&Scalar::from_int(-1)),
            "{}: Hilbert sign",
            base.name()
        );
    }
    Ok("1, 2x, 4t; 1_(123)² = e, −e after the Hilbert twist".into())
}

/// `dim ∩_{h ∈ Z(g)} ker(φ_h − 1)` on `A_g`, by elimination on the stacked
/// matrices.
fn fixed_dim(x: &GFrobeniusAlgebra, g: usize) -> usize {
    let grp = x.group();
    let d = x.sector_dim(g);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for h in 0..grp.order() {
        if grp.mul(g, h) != grp.mul(h, g) {
            continue;
        }
        let cols = x.action_table(h, g);
        let mut m = vec![vec![Scalar::zero(); d]; d];
        for (b, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[i][b] = c.clone();
            }
            m[b][b] = &m[b][b] - &Scalar::one();
        }
        rows.extend(m.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    let mut rank = 0;
    for col in 0..d {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().unwrap();
        let pivot: Vec<(usize, Scalar)> = rows[rank]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c * &inv))
            .collect();
        for row in &mut rows[rank + 1..] {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (j, c) in &pivot {
                row[*j] = &row[*j] - &(&f * c);
            }
        }
        rank += 1;
    }
    d - rank
}

fn class_representatives(grp: &FiniteGroup) -> Vec<usize> {
    let mut seen = vec![false; grp.order()];
    let mut reps = Vec::new();
    for g in 0..grp.order() {
        if !seen[g] {
            reps.push(g);
            for k in 0..grp.order() {
                seen[grp.mul(grp.mul(k, g), grp.inv(k))] = true;
            }
        }
    }
    reps
}

// 9. Shifts and invariants.
fn shifts_and_invariants() -> Outcome {
    for n in 1..=5 {
        for p in ok(orbifrob::groups::enumerate(n))? {
            for copies in 1..=3 {
                let angles = permutation_eigenangles(&p, copies);
                let sm: Scalar = angles
                    .iter()
                    .filter(|t| !t.is_zero())
                    .map(|t| &(t * &Scalar::from_int(2)) - &Scalar::one())
                    .sum();
                ensure!(sm.is_zero(), "s⁻ ≠ 0 for {p}");
            }
        }
    }
    for n in 2..=4 {
        let (_, x) = build(models::dual_numbers(), n)?;
        let sh = ok(standard_shifts(&x, 1))?;
        ensure!(
            sh.shifts.iter().all(|s| s.s_minus.is_zero()),
            "dual n={n}: s⁻ ≠ 0"
        );
    }

    let (_, k3) = build(models::k3(), 2)?;
    let sh = ok(standard_shifts(&k3, 2))?;
    let tau = 1 - k3.group().identity();
    ensure!(*sh.s(tau) == Scalar::from_int(2), "K3: s_τ = {}", sh.s(tau));
    let p = ok(shifted_poincare(&k3, &sh, true))?;
    let betti: Vec<i64> = (0..=8)
        .step_by(2)
        .map(|deg| p.total.coefficient(2 * deg))
        .collect();
    ensure!(
        betti == [1, 23, 276, 23, 1] && p.total.total() == 324,
        "K3 n=2 Poincaré {}",
        p.total
    );

    let mut suite: Vec<GFrobeniusAlgebra> = Vec::new();
    for n in 2..=5 {
        suite.push(build(models::point(), n)?.1);
    }
    for n in 2..=4 {
        suite.push(build(models::dual_numbers(), n)?.1);
    }
    for n in 2..=3 {
        suite.push(build(models::surface4(), n)?.1);
    }
    let d3 = build(models::dual_numbers(), 3)?.1;
    suite.push(ok(hilbert_twist(&d3))?);
    suite.push(ok(hilbert_twist(&build(models::surface4(), 2)?.1))?);
    let g3 = d3.group_arc().clone();
    suite.push(ok(d3.twist(
        &Cocycle2::trivial(g3.clone()),
        &ok(sign_supertwist_on(&g3))?,
    ))?);
    suite.push(k3);
    let mut total = 0;
    for x in &suite {
        let inv = ok(x.invariants())?;
        let reps = class_representatives(x.group());
        let oracle: usize = reps.iter().map(|&g| fixed_dim(x, g)).sum();
        ensure!(
            inv.dim() == oracle,
            "{}: invariants {} vs fixed-space count {oracle}",
            x.name(),
            inv.dim()
        );
        let mut by_class = inv.class_dims();
        let mut direct: Vec<usize> = inv.classes().iter().map(|c| fixed_dim(x, c[0])).collect();
        by_class.sort_unstable();
        direct.sort_unstable();
        ensure!(by_class == direct, "{}: per-class dims", x.name());
        total += 1;
    }
    Ok(format!(
        "s⁻ = 0 for n ≤ 5, s_τ(K3) = 2, K3 Poincaré 1+23t²+276t⁴+23t⁶+t⁸, {total} invariant counts"
    ))
}

// 10. Twists form a group action.
fn twist_action() -> Outcome {
    let d3 = build(models::dual_numbers(), 3)?.1;
    let mut targets = vec![d3];
    for n in 2..=4 {
        let g = Arc::new(ok(FiniteGroup::symmetric(n))?);
        targets.push(ok(twisted_group_ring(
            &Cocycle2::trivial(g.clone()),
            &SuperTwist::trivial(g),
        ))?);
    }
    for x in &targets {
        let g = x.group_arc().clone();
        let plain = SuperTwist::trivial(g.clone());
        let mut cocycles: Vec<Cocycle2> = [
            Scalar::from_int(2),
            Scalar::frac(1, 3),
            Scalar::from_int(-1),
        ]
        .iter()
        .map(|l| ok(normalized_sn_cocycle_on(&g, l)))
        .collect::<Result<_, _>>()?;
        // A normalized coboundary with non-constant values.
        let f = |a: usize| {
            if a == g.identity() {
                Scalar::one()
            } else {
                Scalar::from_int(a as i64 + 2)
            }
        };
        cocycles.push(ok(Cocycle2::from_fn(g.clone(), |a, b| {
            &(&f(a) * &f(b)) * &f(g.mul(a, b)).inv().unwrap()
        }))?);
        for a in &cocycles {
            let back = ok(ok(x.twist(a, &plain))?.twist(&a.inverse(), &plain))?;
            ensure!(back == *x, "{}: α then α⁻¹", x.name());
        }
        let sigma = ok(sign_supertwist_on(&g))?;
        let triv = Cocycle2::trivial(g.clone());
        let twice = ok(ok(x.twist(&triv, &sigma))?.twist(&triv, &sigma))?;
        ensure!(twice == *x, "{}: Σ twice", x.name());
    }
    for n in 2..=4 {
        let g = Arc::new(ok(FiniteGroup::symmetric(n))?);
        let sigma = ok(sign_supertwist_on(&g))?;
        let plain = SuperTwist::trivial(g.clone());
        let triv = Cocycle2::trivial(g.clone());
        for l in [Scalar::from_int(2), Scalar::from_int(-1)] {
            let a = ok(normalized_sn_cocycle_on(&g, &l))?;
            let both = ok(twisted_group_ring(&a, &sigma))?;
            let split = ok(ok(twisted_group_ring(&a, &plain))?
                .tensor_hat(&ok(twisted_group_ring(&triv, &sigma))?))?;
            ensure!(both == split, "S_{n} λ={l}: k^(α,σ)[G] ≠ k^α[G] ⊗̂ k^σ[G]");
        }
    }
    Ok("α·α⁻¹, Σ², tensor splitting on S_2..S_4".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("group-ring degeneration", group_ring_degeneration),
        ("axiom suite", axiom_suite),
        ("chain vs pushforward, word independence", cross_oracle),
        ("Hilbert twist identities", hilbert_identities),
        ("normalized cocycle family", cocycle_family),
        ("compatibility pairs", compatibility_pairs),
        ("intersection lemmas", intersection_lemmas),
        ("Euler classes", euler_classes),
        ("shifts and invariants", shifts_and_invariants),
        ("twist group action", twist_action),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
