//! Operations specific to matrices of Laurent polynomials.

use crate::error::{Error, Result};
use crate::laurent::{parse_at, split_indexed, Ctx, LaurentPoly, Specialization};

use super::{Permutation, PolyMatrix};

/// Parses the matrix text format in the given context.
pub fn parse_matrix(src: &str, ctx: &Ctx) -> Result<PolyMatrix> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `rows cols` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(hl, 1, format!("bad dimension `{s}`")));
    let (rows, cols) = match dims.as_slice() {
        [r, c] => (parse_dim(r)?, parse_dim(c)?),
        _ => return Err(Error::parse(hl, 1, "header must be `rows cols`")),
    };
    let mut out: Vec<Vec<LaurentPoly>> = Vec::with_capacity(rows);
    for (ln, line) in lines {
        if out.len() == rows {
            return Err(Error::parse(ln, 1, "more rows than declared"));
        }
        let mut row = Vec::with_capacity(cols);
        let mut offset = 0;
        for cell in line.split(';') {
            let p = parse_at(cell, ctx, ln).map_err(|e| match e {
                Error::Parse { line, col, msg } => Error::Parse { line, col: col + offset, msg },
                e => e,
            })?;
            row.push(p);
            offset += cell.chars().count() + 1;
        }
        if row.len() != cols {
            return Err(Error::parse(ln, 1, format!("expected {cols} entries, found {}", row.len())));
        }
        out.push(row);
    }
    if out.len() != rows {
        return Err(Error::parse(src.lines().count().max(1), 1, format!("expected {rows} rows, found {}", out.len())));
    }
    if rows == 0 {
        return Ok(PolyMatrix::zeros(0, cols));
    }
    PolyMatrix::from_rows(out)
}

/// Applies a specialization to every entry.
pub fn specialize_matrix(m: &PolyMatrix, s: &Specialization) -> Result<PolyMatrix> {
    m.try_map(|e| s.apply(e))
}

/// Relabels indexed variables: `u_j ↦ u_{π(j)}`, and likewise for every
/// indexed family in the context.
pub fn variable_twist(m: &PolyMatrix, ctx: &Ctx, perm: &Permutation) -> Result<PolyMatrix> {
    let twist = index_twist(ctx, perm)?;
    specialize_matrix(m, &twist)
}

/// The ring automorphism `u_j ↦ u_{π(j)}` of an indexed context.
pub fn index_twist(ctx: &Ctx, perm: &Permutation) -> Result<Specialization> {
    let mut images = Vec::with_capacity(ctx.arity());
    for name in ctx.names() {
        let (base, i) = split_indexed(name).ok_or_else(|| Error::NotIndexedFamily(name.clone()))?;
        if i == 0 || i > perm.len() {
            return Err(Error::NotIndexedFamily(name.clone()));
        }
        let target = format!("{base}_{}", perm.apply(i));
        let img = LaurentPoly::var(ctx, &target).map_err(|_| Error::NotIndexedFamily(name.clone()))?;
        images.push((name.as_str(), img));
    }
    Specialization::new(ctx, ctx, &images)
}
