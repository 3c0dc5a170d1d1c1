//! The `.spbw` presentation file format.
//!
//! ```text
//! [field]
//! kind = prime
//! modulus = 7
//!
//! [base]
//! vars = y t:2
//! ideal = y^2
//!
//! [vars]
//! names = x1 x2
//!
//! [sigma]
//! x1(y) = 2*y
//!
//! [delta]
//! x2(t) = 1
//!
//! [relations]
//! x2*x1 = 3*x1*x2 + y*x1 + 1
//! ```
//!
//! Every section except `[vars]` is optional. `#` starts a comment. Omitted
//! `sigma` images are the identity, omitted `delta` images are zero and an
//! omitted relation means `x_j x_i = x_i x_j`.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::basering::{BaseElement, BaseRing, BaseRingSpec, DerMap, EndoMap};
use crate::error::{Result, SpbwError};
use crate::field::FieldSpec;
use crate::skewcore::{expand_formal, parse_base_element, ExprParser, PairRelation, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    Field,
    Base,
    Vars,
    Sigma,
    Delta,
    Relations,
}

struct Entry {
    line: usize,
    key: String,
    value: String,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(SpbwError::Parse {
        line,
        msg: msg.into(),
    })
}

fn at_line(line: usize) -> impl Fn(SpbwError) -> SpbwError {
    move |e| match e {
        SpbwError::Parse { line: 0, msg } => SpbwError::Parse { line, msg },
        other => other,
    }
}

fn split_sections(text: &str) -> Result<Vec<(Section, Vec<Entry>)>> {
    let mut out: Vec<(Section, Vec<Entry>)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let section = match name.trim() {
                "field" => Section::Field,
                "base" => Section::Base,
                "vars" => Section::Vars,
                "sigma" => Section::Sigma,
                "delta" => Section::Delta,
                "relations" => Section::Relations,
                other => return perr(line, format!("unknown section [{other}]")),
            };
            if out.iter().any(|(s, _)| *s == section) {
                return perr(line, format!("section [{name}] appears twice"));
            }
            out.push((section, Vec::new()));
            continue;
        }
        let Some((key, value)) = body.split_once('=') else {
            return perr(line, format!("expected `key = value`, found `{body}`"));
        };
        let Some((_, entries)) = out.last_mut() else {
            return perr(line, "entry before any section header");
        };
        entries.push(Entry {
            line,
            key: key.trim().to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

/// `name` or `name:degree`, separated by whitespace.
fn parse_names(e: &Entry) -> Result<(Vec<String>, Vec<u32>)> {
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    for tok in e.value.split_whitespace() {
        let (name, deg) = match tok.split_once(':') {
            Some((n, d)) => match d.parse::<u32>() {
                Ok(d) => (n, d),
                Err(_) => return perr(e.line, format!("bad degree in `{tok}`")),
            },
            None => (tok, 1),
        };
        names.push(name.to_string());
        degrees.push(deg);
    }
    Ok((names, degrees))
}

fn parse_field(entries: &[Entry]) -> Result<FieldSpec> {
    let mut kind = None;
    let mut modulus = None;
    for e in entries {
        match e.key.as_str() {
            "kind" => kind = Some((e.line, e.value.clone())),
            "modulus" => match e.value.parse::<u64>() {
                Ok(p) => modulus = Some((e.line, p)),
                Err(_) => return perr(e.line, format!("bad modulus `{}`", e.value)),
            },
            other => return perr(e.line, format!("unknown key `{other}` in [field]")),
        }
    }
    let field = match (kind, modulus) {
        (None, None) => FieldSpec::Rationals,
        (Some((_, k)), None) if k == "rationals" => FieldSpec::Rationals,
        (Some((_, k)), Some((_, p))) if k == "prime" => FieldSpec::Prime(p),
        (Some((line, k)), _) => {
            return perr(line, format!("field kind `{k}` needs `rationals`, or `prime` with a modulus"))
        }
        (None, Some((line, _))) => return perr(line, "modulus given without `kind = prime`"),
    };
    field.validate()?;
    Ok(field)
}

/// `x1(y)` -> (skew index, base index).
fn parse_map_key(e: &Entry, xnames: &[String], ynames: &[String]) -> Result<(usize, usize)> {
    let parsed = e
        .key
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .map(|(x, y)| (x.trim(), y.trim()));
    let Some((x, y)) = parsed else {
        return perr(e.line, format!("expected `x(y) = ...`, found key `{}`", e.key));
    };
    let i = xnames
        .iter()
        .position(|n| n == x)
        .ok_or_else(|| SpbwError::UnknownIdentifier(x.to_string()))?;
    let j = ynames
        .iter()
        .position(|n| n == y)
        .ok_or_else(|| SpbwError::UnknownIdentifier(y.to_string()))?;
    Ok((i, j))
}

fn parse_relation(
    e: &Entry,
    base: &BaseRing,
    xnames: &[String],
) -> Result<(usize, usize, PairRelation)> {
    let n = xnames.len();
    let lhs: Vec<&str> = e.key.split('*').map(str::trim).collect();
    let idx = |name: &str| {
        xnames
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| SpbwError::UnknownIdentifier(name.to_string()))
    };
    let (j, i) = match lhs.as_slice() {
        [a, b] => (idx(a)?, idx(b)?),
        _ => return perr(e.line, format!("relation left side must be `xj*xi`, found `{}`", e.key)),
    };
    if j <= i {
        return perr(
            e.line,
            format!("relation left side `{}` must list the later variable first", e.key),
        );
    }
    let parser = ExprParser {
        field: base.field(),
        base_names: base.names(),
        skew_names: xnames,
    };
    let rhs = parser.parse(&e.value).map_err(at_line(e.line))?;
    let words = expand_formal(base, &rhs).map_err(at_line(e.line))?;
    let mut rel = PairRelation {
        c: BaseElement::zero(),
        d0: BaseElement::zero(),
        dlin: vec![BaseElement::zero(); n],
    };
    for (w, r) in words {
        match w.as_slice() {
            [] => rel.d0 = r,
            [k] => rel.dlin[*k] = r,
            [a, b] if (*a, *b) == (i, j) => rel.c = r,
            _ => {
                let word: Vec<&str> = w.iter().map(|&k| xnames[k].as_str()).collect();
                return perr(
                    e.line,
                    format!(
                        "term `{}` is not allowed; the right side may contain {}*{}, single variables and base elements",
                        word.join("*"),
                        xnames[i],
                        xnames[j]
                    ),
                );
            }
        }
    }
    Ok((i, j, rel))
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let sections = split_sections(text)?;
    let get = |s: Section| sections.iter().find(|(k, _)| *k == s).map(|(_, v)| v.as_slice());
    let field = parse_field(get(Section::Field).unwrap_or(&[]))?;

    let mut spec = BaseRingSpec::field_only(field);
    let mut ideal_entry = None;
    for e in get(Section::Base).unwrap_or(&[]) {
        match e.key.as_str() {
            "vars" => {
                let (names, degrees) = parse_names(e)?;
                spec.names = names;
                spec.degrees = degrees;
            }
            "ideal" => ideal_entry = Some(e),
            other => return perr(e.line, format!("unknown key `{other}` in [base]")),
        }
    }
    if let Some(e) = ideal_entry {
        let free = BaseRing::new(BaseRingSpec { ideal: Vec::new(), ..spec.clone() })?;
        for part in e.value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let g = parse_base_element(&free, part).map_err(at_line(e.line))?;
            let mut terms = g.terms();
            match (terms.next(), terms.next()) {
                (Some((exp, c)), None) if c.is_one() => spec.ideal.push(exp.0.clone()),
                _ => return perr(e.line, format!("ideal generator `{part}` is not a monomial")),
            }
        }
    }
    let base = BaseRing::new(spec.clone())?;

    let Some(vars) = get(Section::Vars) else {
        return perr(0, "missing [vars] section");
    };
    let mut names_entry = None;
    for e in vars {
        match e.key.as_str() {
            "names" => names_entry = Some(parse_names(e)?),
            other => return perr(e.line, format!("unknown key `{other}` in [vars]")),
        }
    }
    let Some((xnames, xdegrees)) = names_entry else {
        return perr(0, "[vars] needs `names = ...`");
    };
    let refs: Vec<&str> = xnames.iter().map(String::as_str).collect();
    let mut pres = Presentation::new(spec, &refs)?.with_xdegrees(xdegrees);
    pres.check_structure()?;

    for e in get(Section::Sigma).unwrap_or(&[]) {
        let (i, j) = parse_map_key(e, &xnames, base.names())?;
        pres.sigma[i].images[j] = parse_base_element(&base, &e.value).map_err(at_line(e.line))?;
    }
    for e in get(Section::Delta).unwrap_or(&[]) {
        let (i, j) = parse_map_key(e, &xnames, base.names())?;
        pres.delta[i].images[j] = parse_base_element(&base, &e.value).map_err(at_line(e.line))?;
    }
    let mut seen = std::collections::BTreeSet::new();
    for e in get(Section::Relations).unwrap_or(&[]) {
        let (i, j, rel) = parse_relation(e, &base, &xnames)?;
        if !seen.insert((i, j)) {
            return perr(e.line, format!("relation for `{}` given twice", e.key));
        }
        pres.relations.insert((i, j), rel);
    }
    Ok(pres)
}

fn names_with_degrees(names: &[String], degrees: &[u32]) -> String {
    names
        .iter()
        .zip(degrees)
        .map(|(n, &d)| if d == 1 { n.clone() } else { format!("{n}:{d}") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn term(r: &BaseElement, names: &[String], word: &str) -> String {
    let coeff = r.fmt_with(names);
    if word.is_empty() {
        format!("({coeff})")
    } else {
        format!("({coeff})*{word}")
    }
}

/// Canonical text of a presentation; `parse_presentation` inverts it.
pub fn print_presentation(pres: &Presentation) -> String {
    let base = BaseRing::new(pres.base.clone()).expect("presentation has a valid base");
    let ynames = base.names();
    let mut out = String::new();
    out.push_str("[field]\n");
    match pres.base.field {
        FieldSpec::Rationals => out.push_str("kind = rationals\n"),
        FieldSpec::Prime(p) => {
            let _ = writeln!(out, "kind = prime\nmodulus = {p}");
        }
    }
    if !ynames.is_empty() {
        out.push_str("\n[base]\n");
        let _ = writeln!(out, "vars = {}", names_with_degrees(ynames, &pres.base.degrees));
        if !pres.base.ideal.is_empty() {
            let gens: Vec<String> = pres
                .base
                .ideal
                .iter()
                .map(|g| {
                    let one = BaseElement::from_terms(
                        &BaseRing::new(BaseRingSpec { ideal: Vec::new(), ..pres.base.clone() })
                            .expect("valid base"),
                        [(g.clone(), pres.base.field.one())],
                    );
                    one.fmt_with(ynames)
                })
                .collect();
            let _ = writeln!(out, "ideal = {}", gens.join(", "));
        }
    }
    out.push_str("\n[vars]\n");
    let _ = writeln!(out, "names = {}", names_with_degrees(&pres.xnames, &pres.xdegrees));

    let maps = |title: &str, rows: Vec<(usize, usize, &BaseElement)>, out: &mut String| {
        if rows.is_empty() {
            return;
        }
        let _ = writeln!(out, "\n[{title}]");
        for (i, j, r) in rows {
            let _ = writeln!(out, "{}({}) = {}", pres.xnames[i], ynames[j], r.fmt_with(ynames));
        }
    };
    let sigma_rows = pres
        .sigma
        .iter()
        .enumerate()
        .flat_map(|(i, s): (usize, &EndoMap)| {
            let base = &base;
            s.images
                .iter()
                .enumerate()
                .filter(move |(j, r)| **r != base.var(*j))
                .map(move |(j, r)| (i, j, r))
        })
        .collect();
    maps("sigma", sigma_rows, &mut out);
    let delta_rows = pres
        .delta
        .iter()
        .enumerate()
        .flat_map(|(i, d): (usize, &DerMap)| {
            d.images
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .map(move |(j, r)| (i, j, r))
        })
        .collect();
    maps("delta", delta_rows, &mut out);

    let commuting = PairRelation::commuting(&base, pres.n());
    let rels: Vec<_> = pres.relations.iter().filter(|(_, r)| **r != commuting).collect();
    if !rels.is_empty() {
        out.push_str("\n[relations]\n");
        for (&(i, j), r) in rels {
            let (xi, xj) = (&pres.xnames[i], &pres.xnames[j]);
            let mut parts = Vec::new();
            if !r.c.is_zero() {
                parts.push(term(&r.c, ynames, &format!("{xi}*{xj}")));
            }
            for (k, d) in r.dlin.iter().enumerate() {
                if !d.is_zero() {
                    parts.push(term(d, ynames, &pres.xnames[k]));
                }
            }
            if !r.d0.is_zero() {
                parts.push(term(&r.d0, ynames, ""));
            }
            if parts.is_empty() {
                parts.push("0".into());
            }
            let _ = writeln!(out, "{xj}*{xi} = {}", parts.join(" + "));
        }
    }
    out
}

/// Reads a number such as `3`, `-2` or `1/2` as a field element.
pub fn parse_scalar(field: FieldSpec, s: &str) -> Result<crate::field::Scalar> {
    let err = || SpbwError::Parse {
        line: 0,
        msg: format!("bad number `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    field.from_ratio(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_round_trips() {
        let q = FieldSpec::Rationals;
        let f7 = FieldSpec::Prime(7);
        for pres in [
            catalog::quantum_plane(q, 2).unwrap(),
            catalog::quantum_plane(f7, -1).unwrap(),
            catalog::weyl(q).unwrap(),
            catalog::weyl_ore(q).unwrap(),
            catalog::diffusion2(q).unwrap(),
            catalog::dual_numbers_x(q).unwrap(),
            catalog::weighted_plane(q).unwrap(),
            catalog::scaled_quantum_plane_over_dual(f7, 3).unwrap(),
            catalog::broken(q).unwrap(),
        ] {
            let text = print_presentation(&pres);
            let back = parse_presentation(&text).unwrap();
            assert_eq!(back, pres, "{text}");
        }
    }

    #[test]
    fn rejects_unknown_keys_and_sections() {
        let bad_key = "[vars]\nnames = x\ncolour = red\n";
        assert!(matches!(parse_presentation(bad_key), Err(SpbwError::Parse { line: 3, .. })));
        let bad_section = "[vars]\nnames = x\n[extras]\n";
        assert!(matches!(parse_presentation(bad_section), Err(SpbwError::Parse { line: 3, .. })));
    }

    #[test]
    fn relation_terms_are_restricted() {
        let text = "[vars]\nnames = a b\n[relations]\nb*a = a*a\n";
        assert!(matches!(parse_presentation(text), Err(SpbwError::Parse { line: 4, .. })));
        let text = "[vars]\nnames = a b\n[relations]\nb*a = q*a*b\n";
        assert!(matches!(parse_presentation(text), Err(SpbwError::UnknownIdentifier(_))));
    }

    #[test]
    fn sigma_and_delta_sections() {
        let text = "[base]\nvars = t\n[vars]\nnames = d\n[delta]\nd(t) = 1\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres, catalog::weyl_ore(FieldSpec::Rationals).unwrap());
    }
}
