use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::context::{same_ctx, Ctx};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Exponents of a monomial, one integer per context variable. Ordered
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentVector(pub(crate) SmallVec<[i32; 4]>);

impl ExponentVector {
    pub fn new(exps: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub(crate) fn scale(&self, k: i32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by exponent vector with no zero coefficients. A
/// polynomial built by `zero()`/`one()` or from a bare integer carries no
/// context and embeds into every Laurent ring.
#[derive(Clone)]
pub struct LaurentPoly {
    ctx: Option<Ctx>,
    terms: Vec<(ExponentVector, BigInt)>,
}

impl LaurentPoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { vec![] } else { vec![(ExponentVector::default(), c)] };
        LaurentPoly { ctx: None, terms }
    }

    pub fn constant_in(ctx: &Ctx, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { vec![] } else { vec![(ExponentVector::zeros(ctx.arity()), c)] };
        LaurentPoly { ctx: Some(ctx.clone()), terms }
    }

    pub fn monomial(ctx: &Ctx, e: ExponentVector, c: impl Into<BigInt>) -> Result<Self> {
        if e.len() != ctx.arity() {
            return Err(Error::ArityMismatch { expected: ctx.arity(), got: e.len() });
        }
        let c = c.into();
        let terms = if c.is_zero() { vec![] } else { vec![(e, c)] };
        Ok(LaurentPoly { ctx: Some(ctx.clone()), terms })
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        Self::var_pow(ctx, name, 1)
    }

    pub fn var_pow(ctx: &Ctx, name: &str, k: i32) -> Result<Self> {
        let i = ctx.var_index(name)?;
        let mut e = ExponentVector::zeros(ctx.arity());
        e.0[i] = k;
        Self::monomial(ctx, e, 1)
    }

    /// Builds a polynomial from arbitrary terms; duplicates are combined.
    pub fn from_terms(ctx: &Ctx, terms: Vec<(ExponentVector, BigInt)>) -> Result<Self> {
        if let Some((e, _)) = terms.iter().find(|(e, _)| e.len() != ctx.arity()) {
            return Err(Error::ArityMismatch { expected: ctx.arity(), got: e.len() });
        }
        Ok(LaurentPoly { ctx: Some(ctx.clone()), terms: normalize(terms) })
    }

    pub fn ctx(&self) -> Option<&Ctx> {
        self.ctx.as_ref()
    }

    pub fn terms(&self) -> &[(ExponentVector, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The integer value, if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-expresses this polynomial in `ctx`. Context-free constants are
    /// always accepted.
    pub fn in_ctx(&self, ctx: &Ctx) -> Result<Self> {
        match &self.ctx {
            Some(c) if same_ctx(c, ctx) => Ok(self.clone()),
            Some(c) => Err(Error::ContextMismatch(c.to_string(), ctx.to_string())),
            None => Ok(match self.as_constant() {
                Some(v) => LaurentPoly::constant_in(ctx, v),
                None => unreachable!("context-free polynomials are constants"),
            }),
        }
    }

    fn joint_ctx(&self, other: &Self) -> Result<Option<Ctx>> {
        match (&self.ctx, &other.ctx) {
            (Some(a), Some(b)) if same_ctx(a, b) => Ok(Some(a.clone())),
            (Some(a), Some(b)) => Err(Error::ContextMismatch(a.to_string(), b.to_string())),
            (Some(a), None) | (None, Some(a)) => Ok(Some(a.clone())),
            (None, None) => Ok(None),
        }
    }

    fn aligned(&self, ctx: &Option<Ctx>) -> std::borrow::Cow<'_, [(ExponentVector, BigInt)]> {
        match (ctx, &self.ctx) {
            (Some(c), None) if !self.terms.is_empty() => std::borrow::Cow::Owned(
                self.terms.iter().map(|(_, v)| (ExponentVector::zeros(c.arity()), v.clone())).collect(),
            ),
            _ => std::borrow::Cow::Borrowed(&self.terms),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let ctx = self.joint_ctx(other)?;
        let terms = merge(&self.aligned(&ctx), &other.aligned(&ctx), false);
        Ok(LaurentPoly { ctx, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let ctx = self.joint_ctx(other)?;
        let terms = merge(&self.aligned(&ctx), &other.aligned(&ctx), true);
        Ok(LaurentPoly { ctx, terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let ctx = self.joint_ctx(other)?;
        if self.terms.is_empty() || other.terms.is_empty() {
            return Ok(LaurentPoly { ctx, terms: vec![] });
        }
        let a = self.aligned(&ctx);
        let b = other.aligned(&ctx);
        let (big, small) = if a.len() >= b.len() { (&a, &b) } else { (&b, &a) };
        let terms = if small.len() == 1 {
            // Shifting by a fixed exponent vector preserves the lexicographic order.
            let (e, c) = &small[0];
            big.iter().map(|(f, d)| (f.add(e), d * c)).collect()
        } else {
            let mut acc = Vec::with_capacity(big.len() * small.len());
            for (e, c) in small.iter() {
                for (f, d) in big.iter() {
                    acc.push((f.add(e), d * c));
                }
            }
            normalize(acc)
        };
        Ok(LaurentPoly { ctx, terms })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly { ctx: self.ctx.clone(), terms: vec![] };
        }
        LaurentPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Inverse of a unit `±x^e`; `None` for anything else.
    pub fn inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => {
                Some(LaurentPoly { ctx: self.ctx.clone(), terms: vec![(e.neg(), c.clone())] })
            }
            _ => None,
        }
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let inv = self.inverse().ok_or_else(|| Error::NotInvertible(self.to_string()))?;
            return inv.pow(-k);
        }
        if let ([(e, c)], Ok(k32)) = (self.terms.as_slice(), i32::try_from(k)) {
            return Ok(LaurentPoly {
                ctx: self.ctx.clone(),
                terms: vec![(e.scale(k32), num_traits::pow(c.clone(), k as usize))],
            });
        }
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Largest absolute value of an exponent, per variable.
    pub fn exponent_span(&self) -> Vec<(i32, i32)> {
        let n = self.ctx.as_ref().map_or(0, |c| c.arity());
        let mut span = vec![(0, 0); n];
        for (e, _) in &self.terms {
            for (i, &x) in e.0.iter().enumerate() {
                span[i].0 = span[i].0.min(x);
                span[i].1 = span[i].1.max(x);
            }
        }
        span
    }
}

fn cmp_terms(a: &(ExponentVector, BigInt), b: &(ExponentVector, BigInt)) -> Ordering {
    a.0.cmp(&b.0)
}

fn normalize(mut terms: Vec<(ExponentVector, BigInt)>) -> Vec<(ExponentVector, BigInt)> {
    terms.sort_unstable_by(cmp_terms);
    let mut out: Vec<(ExponentVector, BigInt)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        if let Some((le, lc)) = out.last_mut() {
            if *le == e {
                *lc += c;
                continue;
            }
        }
        out.push((e, c));
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn merge(
    a: &[(ExponentVector, BigInt)],
    b: &[(ExponentVector, BigInt)],
    negate_b: bool,
) -> Vec<(ExponentVector, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    out
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        match (&self.ctx, &other.ctx) {
            (Some(a), Some(b)) => same_ctx(a, b) && self.terms == other.terms,
            (None, None) => self.terms == other.terms,
            _ => match (self.as_constant(), other.as_constant()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl Eq for LaurentPoly {}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { ctx: None, terms: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(1)
    }

    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(e, c)] if e.is_zero() && c.is_one())
    }
}

impl From<i64> for LaurentPoly {
    fn from(v: i64) -> Self {
        LaurentPoly::constant(v)
    }
}

macro_rules! impl_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        if rhs.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            match (&self.ctx, &rhs.ctx) {
                (Some(a), Some(b)) if !same_ctx(a, b) => {
                    panic!("{}", Error::ContextMismatch(a.to_string(), b.to_string()))
                }
                (Some(a), None) => *self = rhs.in_ctx(a).unwrap(),
                _ => *self = rhs.clone(),
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Ring for LaurentPoly {
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.terms.is_empty() || b.terms.is_empty() {
            return;
        }
        *self += &(a * b);
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render(self))
    }
}

/// Shorthand for building variables of a known context.
pub trait CtxExt {
    /// The variable `name` as a polynomial; panics on unknown names.
    fn var(&self, name: &str) -> LaurentPoly;
}

impl CtxExt for Ctx {
    fn var(&self, name: &str) -> LaurentPoly {
        LaurentPoly::var(self, name).unwrap_or_else(|e| panic!("{e}"))
    }
}
