//! Text form of Laurent polynomials.
//!
//! Terms appear in ascending lexicographic order of their exponent vectors;
//! inside a term the variables are written in alphabetical order, e.g.
//! `1 - 2*q^2*t + q^4*t^2`. The grammar accepted by [`parse`] is
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := INTEGER | NAME ['^' [sign] INTEGER]
//! ```
//!
//! with whitespace ignored and names matching `[a-zA-Z][a-zA-Z0-9_]*`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::context::{Ctx, RingContext};
use super::poly::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

pub fn render(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names: Vec<&str> = match p.ctx() {
        Some(c) => c.names().iter().map(|s| s.as_str()).collect(),
        None => vec![],
    };
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| names[i]);

    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let factors: Vec<String> = order
            .iter()
            .filter(|&&i| e.as_slice()[i] != 0)
            .map(|&i| match e.as_slice()[i] {
                1 => names[i].to_string(),
                x => format!("{}^{}", names[i], x),
            })
            .collect();
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(src: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(s.parse().unwrap()), col));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Name(chars[start..i].iter().collect()), col));
            }
            _ => return Err(Error::parse(line, col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

/// Variable names referenced by a polynomial text, in sorted order.
pub fn names_in(src: &str) -> Result<BTreeSet<String>> {
    Ok(tokenize(src, 1)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Tok::Name(n) => Some(n),
            _ => None,
        })
        .collect())
}

/// Parses `src` as a polynomial in `ctx`.
pub fn parse(src: &str, ctx: &Ctx) -> Result<LaurentPoly> {
    parse_at(src, ctx, 1)
}

/// Parses `src` in a fresh context made of the names it references, sorted.
pub fn parse_infer(src: &str) -> Result<LaurentPoly> {
    let names: Vec<String> = names_in(src)?.into_iter().collect();
    let ctx = RingContext::new(&names)?;
    parse(src, &ctx)
}

pub(crate) fn parse_at(src: &str, ctx: &Ctx, line: usize) -> Result<LaurentPoly> {
    let toks = tokenize(src, line)?;
    let end_col = src.chars().count() + 1;
    if toks.is_empty() {
        return Err(Error::parse(line, 1, "empty polynomial"));
    }
    let mut pos = 0;
    let mut terms: Vec<(ExponentVector, BigInt)> = Vec::new();
    let mut first = true;
    while pos < toks.len() {
        let mut sign = BigInt::one();
        match &toks[pos].0 {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                sign = -sign;
                pos += 1
            }
            _ if first => {}
            _ => return Err(Error::parse(line, toks[pos].1, "expected `+` or `-` between terms")),
        }
        first = false;
        let mut coef = sign;
        let mut exps = ExponentVector::zeros(ctx.arity());
        loop {
            let Some((tok, col)) = toks.get(pos) else {
                return Err(Error::parse(line, end_col, "expected a factor"));
            };
            match tok {
                Tok::Int(v) => {
                    coef *= v;
                    pos += 1;
                }
                Tok::Name(n) => {
                    let idx =
                        ctx.index_of(n).ok_or_else(|| Error::parse(line, *col, format!("unknown variable `{n}`")))?;
                    pos += 1;
                    let mut k: i64 = 1;
                    if matches!(toks.get(pos), Some((Tok::Caret, _))) {
                        pos += 1;
                        let mut s = 1i64;
                        match toks.get(pos) {
                            Some((Tok::Minus, _)) => {
                                s = -1;
                                pos += 1
                            }
                            Some((Tok::Plus, _)) => pos += 1,
                            _ => {}
                        }
                        match toks.get(pos) {
                            Some((Tok::Int(v), c)) => {
                                let v: i64 = v.try_into().map_err(|_| Error::parse(line, *c, "exponent too large"))?;
                                k = s * v;
                                pos += 1;
                            }
                            Some((_, c)) => return Err(Error::parse(line, *c, "expected an integer exponent")),
                            None => return Err(Error::parse(line, end_col, "expected an integer exponent")),
                        }
                    }
                    let cur = exps.0[idx] as i64 + k;
                    exps.0[idx] = i32::try_from(cur).map_err(|_| Error::parse(line, *col, "exponent too large"))?;
                }
                _ => return Err(Error::parse(line, *col, "expected a factor")),
            }
            if matches!(toks.get(pos), Some((Tok::Star, _))) {
                pos += 1;
            } else {
                break;
            }
        }
        terms.push((exps, coef));
    }
    LaurentPoly::from_terms(ctx, terms)
}
