//! Ring homomorphisms out of a Laurent polynomial ring.
//!
//! A homomorphism is fixed by the images of the variables, which must be
//! units of the target: `±` monomials for a Laurent target, nonzero elements
//! for a prime field.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::context::Ctx;
use super::poly::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};
use crate::field::Fp;

/// A homomorphism `Z[source] -> Z[target]` sending each source variable to
/// a unit monomial of the target.
#[derive(Clone, Debug)]
pub struct Specialization {
    source: Ctx,
    target: Ctx,
    // Per source variable: sign and exponent vector of the image.
    images: Vec<(bool, ExponentVector)>,
}

impl Specialization {
    /// `images` lists `(source variable, image)`; every source variable
    /// must appear exactly once.
    pub fn new(source: &Ctx, target: &Ctx, images: &[(&str, LaurentPoly)]) -> Result<Self> {
        let mut slots: Vec<Option<(bool, ExponentVector)>> = vec![None; source.arity()];
        for (name, img) in images {
            let i = source.var_index(name)?;
            let img = img.in_ctx(target)?;
            let (e, c) = match img.terms() {
                [(e, c)] if c.abs().is_one() => (e.clone(), c.is_negative()),
                _ => return Err(Error::NonUnitImage(name.to_string())),
            };
            slots[i] = Some((c, e));
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::MissingImage(source.name(i).to_string())))
            .collect::<Result<_>>()?;
        Ok(Specialization { source: source.clone(), target: target.clone(), images })
    }

    /// Sends each variable to the target variable of the same name, e.g.
    /// `Z[t] -> Z[t, q]`.
    pub fn embedding(source: &Ctx, target: &Ctx) -> Result<Self> {
        let images = source
            .names()
            .iter()
            .map(|n| {
                let v = LaurentPoly::var(target, n).map_err(|_| Error::MissingImage(n.clone()))?;
                Ok((n.as_str(), v))
            })
            .collect::<Result<Vec<_>>>()?;
        Specialization::new(source, target, &images)
    }

    /// Collapses an indexed family onto its base names: `u_i -> u`,
    /// `v_i -> v`, `alpha_i -> alpha`. Variables without an index must name
    /// a target variable directly.
    pub fn collapse_indices(source: &Ctx, target: &Ctx) -> Result<Self> {
        let images = source
            .names()
            .iter()
            .map(|n| {
                let base = super::context::split_indexed(n).map_or(n.as_str(), |(b, _)| b);
                let v = LaurentPoly::var(target, base).map_err(|_| Error::MissingImage(n.clone()))?;
                Ok((n.as_str(), v))
            })
            .collect::<Result<Vec<_>>>()?;
        Specialization::new(source, target, &images)
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        let p = p.in_ctx(&self.source)?;
        let m = self.target.arity();
        let mut terms = Vec::with_capacity(p.len());
        for (e, c) in p.terms() {
            let mut f = ExponentVector::zeros(m);
            let mut neg = false;
            for (k, &x) in e.as_slice().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let (s, img) = &self.images[k];
                if *s && x % 2 != 0 {
                    neg = !neg;
                }
                for (fi, gi) in f.0.iter_mut().zip(img.as_slice()) {
                    *fi += x * gi;
                }
            }
            terms.push((f, if neg { -c } else { c.clone() }));
        }
        LaurentPoly::from_terms(&self.target, terms)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Specialization) -> Result<Specialization> {
        if !super::context::same_ctx(&self.target, &next.source) {
            return Err(Error::ContextMismatch(self.target.to_string(), next.source.to_string()));
        }
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(i, (s, e))| {
                let mono = LaurentPoly::monomial(&self.target, e.clone(), if *s { -1 } else { 1 })?;
                Ok((self.source.name(i), next.apply(&mono)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Specialization::new(&self.source, &next.target, &images)
    }
}

/// A homomorphism `Z[source] -> F_p` fixed by nonzero variable values.
#[derive(Clone, Debug)]
pub struct FieldSpecialization {
    source: Ctx,
    p: u64,
    values: Vec<Fp>,
}

impl FieldSpecialization {
    pub fn new(source: &Ctx, p: u64, values: &[(&str, i64)]) -> Result<Self> {
        let mut slots: Vec<Option<Fp>> = vec![None; source.arity()];
        for (name, v) in values {
            let i = source.var_index(name)?;
            let x = Fp::new(*v, p);
            if x.is_zero() {
                return Err(Error::NonUnitImage(name.to_string()));
            }
            slots[i] = Some(x);
        }
        let values = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::MissingImage(source.name(i).to_string())))
            .collect::<Result<_>>()?;
        Ok(FieldSpecialization { source: source.clone(), p, values })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn apply(&self, poly: &LaurentPoly) -> Result<Fp> {
        let poly = poly.in_ctx(&self.source)?;
        let p = self.p;
        let mut acc = Fp::new(0, p);
        for (e, c) in poly.terms() {
            let r = (c % BigInt::from(p)).to_i64().expect("reduced below the modulus");
            let mut t = Fp::new(r, p);
            for (k, &x) in e.as_slice().iter().enumerate() {
                if x != 0 {
                    t *= self.values[k].pow(x as i64)?;
                }
            }
            acc += t;
        }
        Ok(acc)
    }
}
