use std::path::Path;
use std::sync::Arc;

use orbifrob::cocycles::{normalized_sn_cocycle_on, sign_supertwist_on, Cocycle2, SuperTwist};
use orbifrob::exactnum::Scalar;
use orbifrob::frobenius::{models, FrobeniusAlgebra};
use orbifrob::gfrob::GFrobeniusAlgebra;
use orbifrob::io::{AlgebraDoc, GAlgebraDoc};
use orbifrob::symprod::{BuildOptions, SymmetricProduct, DEFAULT_BUILD_BUDGET};
use orbifrob::{Error, Result};

use crate::Build;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidAlgebra(_)
        | Error::InvalidCocycle(_)
        | Error::InvalidSuperTwist(_)
        | Error::DegenerateMetric(_)
        | Error::Singular { .. }
        | Error::Convention(_) => 1,
        _ => 2,
    }
}

pub enum Loaded {
    Base(FrobeniusAlgebra),
    Galg(GFrobeniusAlgebra),
}

/// A file path, or a built-in model name when no such file exists.
pub fn load(source: &str, checked: bool) -> Result<Loaded> {
    if !Path::new(source).exists() {
        if let Some(a) = models::by_name(source) {
            return Ok(Loaded::Base(a));
        }
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    if value.get("sectors").is_some() {
        Ok(Loaded::Galg(GAlgebraDoc::parse(&text)?.to_algebra()?))
    } else {
        let doc = AlgebraDoc::parse(&text)?;
        Ok(Loaded::Base(if checked {
            doc.to_algebra()?
        } else {
            doc.to_algebra_unchecked()?
        }))
    }
}

pub fn lambda(b: &Build) -> Result<Option<Scalar>> {
    b.lambda.as_deref().map(str::parse).transpose()
}

/// Loads a G-algebra, building the second quantization of a base input,
/// then applies `--lambda` and `--super`.
pub fn load_galg(source: &str, b: &Build, build_budget: Option<u128>) -> Result<GFrobeniusAlgebra> {
    let x = match load(source, true)? {
        Loaded::Galg(x) => x,
        Loaded::Base(a) => {
            let n =
                b.n.ok_or_else(|| Error::Parse("a base algebra input needs --n".into()))?;
            let sp = SymmetricProduct::new(a, n)?;
            sp.build_with(BuildOptions {
                budget: build_budget.unwrap_or(DEFAULT_BUILD_BUDGET),
                ..Default::default()
            })?
        }
    };
    apply_twists(x, b, None)
}

pub fn apply_twists(
    x: GFrobeniusAlgebra,
    b: &Build,
    cocycle: Option<Cocycle2>,
) -> Result<GFrobeniusAlgebra> {
    let lam = lambda(b)?;
    if cocycle.is_none() && lam.is_none() && !b.super_twist {
        return Ok(x);
    }
    let g: Arc<_> = x.group_arc().clone();
    let mut alpha = cocycle.unwrap_or_else(|| Cocycle2::trivial(g.clone()));
    if let Some(l) = &lam {
        if l.is_zero() {
            return Err(Error::InvalidCocycle("λ must be nonzero".into()));
        }
        alpha = alpha.multiply(&normalized_sn_cocycle_on(&g, l)?)?;
    }
    let sigma = if b.super_twist {
        sign_supertwist_on(&g)?
    } else {
        SuperTwist::trivial(g)
    };
    let mut suffix = Vec::new();
    if let Some(l) = &lam {
        suffix.push(format!("λ={l}"));
    }
    if b.super_twist {
        suffix.push("Σ".to_string());
    }
    let name = if suffix.is_empty() {
        format!("{}^α", x.name())
    } else {
        format!("{}^({})", x.name(), suffix.join(","))
    };
    Ok(x.twist(&alpha, &sigma)?.with_name(name))
}

pub fn write_out(text: &str, out: Option<&str>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{p}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
