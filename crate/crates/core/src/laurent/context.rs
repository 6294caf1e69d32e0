use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered variable names of a Laurent polynomial ring.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

/// Shared handle to a ring context. Polynomials hold one of these.
pub type Ctx = Arc<RingContext>;

impl RingContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_valid_name(n) {
                return Err(Error::parse(1, 1, format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(RingContext { names: out }))
    }

    /// Indexed families in block order: for bases `["u", "v"]` and `n = 2`
    /// this is `u_1, u_2, v_1, v_2`.
    pub fn indexed(bases: &[&str], n: usize) -> Ctx {
        let names: Vec<String> = bases.iter().flat_map(|b| (1..=n).map(move |i| format!("{b}_{i}"))).collect();
        RingContext::new(&names).expect("indexed names are distinct")
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

pub(crate) fn is_valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    match cs.next() {
        Some(c) if c.is_ascii_alphabetic() => cs.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

/// Splits `u_12` into `("u", 12)`.
pub fn split_indexed(name: &str) -> Option<(&str, usize)> {
    let (base, idx) = name.rsplit_once('_')?;
    if base.is_empty() {
        return None;
    }
    idx.parse().ok().map(|i| (base, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(RingContext::new(&["u", "v", "u"]).unwrap_err(), Error::DuplicateVariable("u".into()));
    }

    #[test]
    fn indexed_layout() {
        let c = RingContext::indexed(&["u", "v"], 3);
        assert_eq!(c.names(), &["u_1", "u_2", "u_3", "v_1", "v_2", "v_3"]);
        assert_eq!(split_indexed("v_3"), Some(("v", 3)));
        assert_eq!(split_indexed("alpha"), None);
    }
}
