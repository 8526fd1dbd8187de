use std::sync::Arc;

use orbifrob::cocycles::{
    normalized_sn_cocycle_on, sign_supertwist_on, twisted_group_ring, Cocycle2, SuperTwist,
};
use orbifrob::gfrob::VerifyOptions;
use orbifrob::grading::{shifted_poincare, standard_shifts, ShiftData};
use orbifrob::groups::FiniteGroup;
use orbifrob::io::{format_element, parse_element, AlgebraDoc, CocycleDoc, Element, GAlgebraDoc};
use orbifrob::report::Report;
use orbifrob::{Error, Result};
use serde_json::json;

use crate::input::{apply_twists, lambda, load, load_galg, write_out, Loaded};
use crate::{Build, ShiftKind};

fn print_report(report: &Report, json_only: bool, out: Option<&str>) -> Result<u8> {
    let lines = report.to_json_lines();
    if !json_only {
        print!("{report}");
    }
    println!("{lines}");
    if let Some(p) = out {
        write_out(&format!("{lines}\n"), Some(p))?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn verify(input: &str, b: &Build, json_only: bool, out: Option<&str>) -> Result<u8> {
    let has_build = b.n.is_some() || b.lambda.is_some() || b.super_twist;
    match load(input, false)? {
        Loaded::Base(a) if !has_build => print_report(&a.verify(), json_only, out),
        _ => {
            let x = load_galg(input, b, None)?;
            let opts = b
                .budget
                .map(|budget| VerifyOptions { budget })
                .unwrap_or_default();
            print_report(&x.verify_axioms_with(opts)?, json_only, out)
        }
    }
}

pub fn symprod(base: &str, b: &Build, out: Option<&str>) -> Result<u8> {
    if !matches!(load(base, true)?, Loaded::Base(_)) {
        return Err(Error::Parse(
            "symprod expects a base algebra document".into(),
        ));
    }
    if b.n.is_none() {
        return Err(Error::Parse("symprod needs --n".into()));
    }
    let x = load_galg(base, b, b.budget)?;
    write_out(&GAlgebraDoc::from_algebra(&x).to_json(), out)?;
    Ok(0)
}

pub fn mult(input: &str, a: &str, c: &str, b: &Build) -> Result<u8> {
    let x = load_galg(input, b, b.budget)?;
    let u = parse_element(&x, a)?;
    let v = parse_element(&x, c)?;
    let p = Element {
        sector: x.group().mul(u.sector, v.sector),
        coeffs: x.multiply(u.sector, &u.coeffs, v.sector, &v.coeffs),
    };
    println!("{}", format_element(&x, &p));
    Ok(0)
}

pub fn twist(input: &str, cocycle: Option<&str>, b: &Build, out: Option<&str>) -> Result<u8> {
    let plain = Build {
        lambda: None,
        super_twist: false,
        ..b.clone()
    };
    let x = load_galg(input, &plain, b.budget)?;
    let alpha = match cocycle {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{p}: {e}")))?;
            Some(CocycleDoc::parse(&text)?.to_cocycle_on(x.group_arc().clone())?)
        }
        None => None,
    };
    if alpha.is_none() && b.lambda.is_none() && !b.super_twist {
        return Err(Error::Parse(
            "twist needs --cocycle, --lambda or --super".into(),
        ));
    }
    let y = apply_twists(x, b, alpha)?;
    write_out(&GAlgebraDoc::from_algebra(&y).to_json(), out)?;
    Ok(0)
}

pub fn invariants(
    input: &str,
    b: &Build,
    poincare: bool,
    shift: Option<ShiftKind>,
    copies: usize,
) -> Result<u8> {
    let x = load_galg(input, b, b.budget)?;
    let inv = x.invariants()?;
    let grp = x.group();
    let classes = grp.conjugacy_classes();
    let dims = inv.class_dims();
    println!("invariants of {}", x.name());
    let mut rows = Vec::new();
    for (c, d) in classes.iter().zip(&dims) {
        println!("  class {} (size {}): {d}", grp.label(c[0]), c.len());
        rows.push(json!({"representative": grp.label(c[0]), "size": c.len(), "dim": d}));
    }
    println!("  total: {}", inv.dim());
    let mut summary = json!({"classes": rows, "total": inv.dim()});
    if poincare || shift.is_some() {
        let shifts = match shift {
            Some(ShiftKind::Standard) => standard_shifts(&x, copies)?,
            None => ShiftData::zero(grp.order(), 0),
        };
        let p = shifted_poincare(&x, &shifts, true)?;
        println!("  poincare: {}", p.total);
        for (c, q) in classes.iter().zip(&p.by_class) {
            println!("    {}: {q}", grp.label(c[0]));
        }
        summary["poincare"] = json!(p.total.to_string());
        summary["poincare_by_class"] = json!(p
            .by_class
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>());
    }
    println!("{summary}");
    Ok(0)
}

pub fn export(source: &str, b: &Build, out: Option<&str>) -> Result<u8> {
    let text = if source == "group-ring" {
        let n =
            b.n.ok_or_else(|| Error::Parse("group-ring needs --n".into()))?;
        let g = Arc::new(FiniteGroup::symmetric(n)?);
        let alpha = match lambda(b)? {
            Some(l) => normalized_sn_cocycle_on(&g, &l)?,
            None => Cocycle2::trivial(g.clone()),
        };
        let sigma = if b.super_twist {
            sign_supertwist_on(&g)?
        } else {
            SuperTwist::trivial(g)
        };
        GAlgebraDoc::from_algebra(&twisted_group_ring(&alpha, &sigma)?).to_json()
    } else {
        match load(source, false)? {
            Loaded::Base(a) if b.n.is_none() && b.lambda.is_none() && !b.super_twist => {
                AlgebraDoc::from_algebra(&a).to_json()
            }
            _ => GAlgebraDoc::from_algebra(&load_galg(source, b, b.budget)?).to_json(),
        }
    };
    write_out(&text, out)?;
    Ok(0)
}
