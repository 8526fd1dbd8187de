//! Elements of a single sector, written either as `lincomb@sector`, e.g.
//! `-2x@(1 3 2)` or `(1⊗x + x⊗1)@e`, or in keyed form
//! `sector=(1 2 3); coeffs={(x,1): 3/2, (1,1): 1}`.

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, SparseAccumulator, SparseVec};
use crate::gfrob::GFrobeniusAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub sector: usize,
    pub coeffs: SparseVec,
}

pub fn parse_element(x: &GFrobeniusAlgebra, text: &str) -> Result<Element> {
    let t = text.trim().replace('\u{2212}', "-");
    if let Some(rest) = t.strip_prefix("sector=") {
        return parse_keyed(x, rest);
    }
    let (lin, sec) = t
        .rsplit_once('@')
        .ok_or_else(|| Error::Parse(format!("missing '@sector' in {text:?}")))?;
    let sector = x.sector_of_label(sec.trim())?;
    let coeffs = parse_linear(&x.sector(sector).labels, lin)?;
    Ok(Element { sector, coeffs })
}

pub fn format_element(x: &GFrobeniusAlgebra, e: &Element) -> String {
    let lin = x.format_element(e.sector, &e.coeffs);
    let compound = lin
        .get(1..)
        .is_some_and(|s| s.contains(" + ") || s.contains(" - "));
    let label = x.group().label(e.sector);
    if compound {
        format!("({lin})@{label}")
    } else {
        format!("{lin}@{label}")
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner.trim(),
        None => s,
    }
}

/// Splits at top-level `+`/`-`, keeping each sign with its term.
fn split_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().ends_with('/') {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
            }
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() || out.is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

/// One term `c·label`, `c label`, `clabel`, `label` or `c`. The longest
/// label that leaves a rational prefix wins.
fn parse_term(labels: &[String], t: &str) -> Result<(usize, Scalar)> {
    let t = strip_parens(t);
    if let Some(i) = labels.iter().position(|l| l == t) {
        return Ok((i, Scalar::one()));
    }
    let mut best: Option<(usize, Scalar, usize)> = None;
    for (i, l) in labels.iter().enumerate() {
        if let Some(prefix) = t.strip_suffix(l.as_str()) {
            let prefix = prefix.trim().trim_end_matches(['*', '·']).trim();
            if let Ok(c) = prefix.parse::<Scalar>() {
                if best.as_ref().is_none_or(|b| l.len() > b.2) {
                    best = Some((i, c, l.len()));
                }
            }
        }
    }
    if let Some((i, c, _)) = best {
        return Ok((i, c));
    }
    // A bare rational times the unit-like label "1".
    if let (Ok(c), Some(i)) = (t.parse::<Scalar>(), labels.iter().position(|l| l == "1")) {
        return Ok((i, c));
    }
    Err(Error::Unknown {
        kind: "basis label",
        name: t.to_string(),
    })
}

fn parse_linear(labels: &[String], s: &str) -> Result<SparseVec> {
    let s = strip_parens(s);
    if s == "0" {
        return Ok(SparseVec::new());
    }
    let mut acc = SparseAccumulator::new();
    for (neg, term) in split_terms(s) {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        let (i, c) = parse_term(labels, &term)?;
        acc.add(i, &if neg { -c } else { c });
    }
    Ok(acc.finish())
}

fn parse_keyed(x: &GFrobeniusAlgebra, rest: &str) -> Result<Element> {
    let (sec, coeffs) = rest
        .split_once(';')
        .ok_or_else(|| Error::Parse("missing ';' after sector".into()))?;
    let sector = x.sector_of_label(sec.trim())?;
    let body = coeffs
        .trim()
        .strip_prefix("coeffs=")
        .and_then(|b| b.trim().strip_prefix('{'))
        .and_then(|b| b.trim_end().strip_suffix('}'))
        .ok_or_else(|| Error::Parse("expected coeffs={...}".into()))?;
    let labels = &x.sector(sector).labels;
    let mut acc = SparseAccumulator::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut entries = Vec::new();
    for ch in body.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                entries.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    entries.push(cur);
    for entry in entries.iter().filter(|e| !e.trim().is_empty()) {
        let (key, val) = entry
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {entry:?}")))?;
        let parts: Vec<&str> = strip_parens(key).split(',').map(str::trim).collect();
        let joined = parts.join("⊗");
        let i = labels
            .iter()
            .position(|l| *l == joined)
            .or_else(|| (labels.len() == 1 && parts.iter().all(|p| *p == labels[0])).then_some(0))
            .ok_or_else(|| Error::Unknown {
                kind: "basis label",
                name: joined.clone(),
            })?;
        acc.add(i, &val.trim().parse::<Scalar>()?);
    }
    Ok(Element {
        sector,
        coeffs: acc.finish(),
    })
}
