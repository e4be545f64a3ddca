//! Canonical text form: terms descending under the order, `p/q` coefficients,
//! unit coefficients omitted on non-constant terms, e.g.
//! `x{a}*x{b} - x{}*x{a,b}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

use super::{Monomial, MonomialOrder, Polynomial};

pub fn to_text(p: &Polynomial, ord: &MonomialOrder, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms(ord).into_iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        let vars: Vec<String> = m
            .iter()
            .map(|(v, e)| {
                if e == 1 {
                    names[v].clone()
                } else {
                    format!("{}^{e}", names[v])
                }
            })
            .collect();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&vars.join("*"));
        } else {
            out.push_str(&format!("{a}*{}", vars.join("*")));
        }
    }
    out
}

/// Parse the canonical form back. Variable names must end in `}` and
/// contain no other `}`; whitespace only appears around the `+`/`-` separators.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial, AlgebraError> {
    let lookup: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let err = |m: String| AlgebraError::Parse(m);
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut p = Polynomial::zero();
    let mut k = 0;
    let mut sign = 1i64;
    loop {
        let mut tok = tokens[k];
        if k == 0 {
            if let Some(rest) = tok.strip_prefix('-') {
                sign = -1;
                tok = rest;
            }
        }
        let (m, c) = parse_term(tok, &lookup).map_err(err)?;
        p.add_term(m, c * BigRational::from_integer(BigInt::from(sign)));
        k += 1;
        if k == tokens.len() {
            break;
        }
        sign = match tokens[k] {
            "+" => 1,
            "-" => -1,
            other => return Err(err(format!("expected `+` or `-`, found `{other}`"))),
        };
        k += 1;
        if k == tokens.len() {
            return Err(err("dangling operator".into()));
        }
    }
    Ok(p)
}

fn parse_term(tok: &str, lookup: &HashMap<&str, usize>) -> Result<(Monomial, BigRational), String> {
    let mut rest = tok;
    let mut coef = BigRational::one();
    // a leading coefficient is anything before the first variable name
    if !rest.starts_with(|c: char| c.is_alphabetic()) {
        let end = rest.find('*').unwrap_or(rest.len());
        coef = parse_rational(&rest[..end])?;
        rest = rest.get(end + 1..).unwrap_or("");
        if end == tok.len() {
            return Ok((Monomial::one(), coef));
        }
    }
    let mut pairs = Vec::new();
    while !rest.is_empty() {
        let close = rest.find('}').ok_or_else(|| format!("unterminated variable in `{tok}`"))?;
        let name = &rest[..=close];
        let v = *lookup.get(name).ok_or_else(|| format!("unknown variable `{name}`"))?;
        rest = &rest[close + 1..];
        let mut e = 1u32;
        if let Some(after) = rest.strip_prefix('^') {
            let end = after.find('*').unwrap_or(after.len());
            e = after[..end].parse().map_err(|_| format!("bad exponent in `{tok}`"))?;
            rest = &after[end..];
        }
        pairs.push((v, e));
        if let Some(after) = rest.strip_prefix('*') {
            if after.is_empty() {
                return Err(format!("trailing `*` in `{tok}`"));
            }
            rest = after;
        } else if !rest.is_empty() {
            return Err(format!("unexpected `{rest}` in `{tok}`"));
        }
    }
    if coef.is_zero() {
        return Err(format!("zero coefficient in `{tok}`"));
    }
    Ok((Monomial::from_exponents(pairs), coef))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad coefficient `{s}`");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
