//! Representations of (welded) braid groups given by generator images:
//! Burau, Tong-Yang-Ma, welded Tong-Yang-Ma and one-dimensional characters.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Ctx, CtxExt, FieldSpecialization, LaurentPoly, RingContext, Specialization};
use crate::matrix::RingMatrix;
use crate::ring::Ring;
use crate::words::{BraidWord, Letter};
use crate::Fp;

/// A representation of `B_n` (or `WB_n` when `tau` images are present).
#[derive(Clone)]
pub struct GenRep<R> {
    name: String,
    n: usize,
    dim: usize,
    ctx: Option<Ctx>,
    sigma: Vec<RingMatrix<R>>,
    sigma_inv: Vec<RingMatrix<R>>,
    tau: Option<Vec<RingMatrix<R>>>,
}

impl<R: Ring> std::fmt::Debug for GenRep<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenRep")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("dim", &self.dim)
            .field("welded", &self.tau.is_some())
            .finish()
    }
}

pub type PolyRep = GenRep<LaurentPoly>;
pub type FpRep = GenRep<Fp>;

impl<R: Ring> GenRep<R> {
    /// Builds a representation from its generator images. Inverse images
    /// are taken from `sigma_inv` when given, and otherwise computed by
    /// monomial or unit-pivot inversion; either way they are verified.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        ctx: Option<Ctx>,
        sigma: Vec<RingMatrix<R>>,
        sigma_inv: Option<Vec<RingMatrix<R>>>,
        tau: Option<Vec<RingMatrix<R>>>,
    ) -> Result<Self> {
        if n < 1 || sigma.len() != n - 1 {
            return Err(Error::Shape(format!("{} sigma images for {n} strands", sigma.len())));
        }
        let dim = sigma.first().map_or(1, |m| m.rows());
        for m in sigma.iter().chain(tau.iter().flatten()) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!("generator image {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
            }
        }
        if let Some(t) = &tau {
            if t.len() != n - 1 {
                return Err(Error::Shape(format!("{} tau images for {n} strands", t.len())));
            }
        }
        let sigma_inv = match sigma_inv {
            Some(inv) => {
                if inv.len() != sigma.len() {
                    return Err(Error::Shape("one inverse per generator".into()));
                }
                inv
            }
            None => {
                sigma.iter().map(|m| m.monomial_inverse().or_else(|_| m.unit_pivot_inverse())).collect::<Result<_>>()?
            }
        };
        for (i, (a, b)) in sigma.iter().zip(&sigma_inv).enumerate() {
            if !a.try_mul(b)?.is_identity() {
                return Err(Error::NotInvertible(format!("image of sigma_{}", i + 1)));
            }
        }
        Ok(GenRep { name: name.into(), n, dim, ctx, sigma, sigma_inv, tau })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> Option<&Ctx> {
        self.ctx.as_ref()
    }

    pub fn is_welded(&self) -> bool {
        self.tau.is_some()
    }

    /// Image of `σ_i` (1-based).
    pub fn sigma(&self, i: usize) -> &RingMatrix<R> {
        &self.sigma[i - 1]
    }

    pub fn sigma_inv(&self, i: usize) -> &RingMatrix<R> {
        &self.sigma_inv[i - 1]
    }

    pub fn tau(&self, i: usize) -> Option<&RingMatrix<R>> {
        self.tau.as_ref().map(|t| &t[i - 1])
    }

    pub fn letter(&self, l: &Letter) -> Result<&RingMatrix<R>> {
        match *l {
            Letter::Sigma(i, s) if s > 0 => Ok(&self.sigma[i - 1]),
            Letter::Sigma(i, _) => Ok(&self.sigma_inv[i - 1]),
            Letter::Tau(i) => self.tau(i).ok_or(Error::VirtualLetter),
        }
    }

    /// The image of a word: the product of letter images, left to right.
    pub fn evaluate(&self, w: &BraidWord) -> Result<RingMatrix<R>> {
        if w.strands() != self.n {
            return Err(Error::StrandMismatch { expected: self.n, got: w.strands() });
        }
        let mut letters = w.letters().iter();
        let Some(first) = letters.next() else {
            return Ok(RingMatrix::identity(self.dim));
        };
        let mut acc = self.letter(first)?.clone();
        for l in letters {
            acc = acc.try_mul(self.letter(l)?)?;
        }
        Ok(acc)
    }

    /// Multiplies every `σ` image by the unit `r` (and inverses by `r^{-1}`).
    pub fn tensor_one_dim(&self, r: &R) -> Result<Self> {
        let r_inv = r.unit_inverse().ok_or_else(|| Error::NonUnitImage(format!("{r:?}")))?;
        Ok(GenRep {
            name: format!("{} (twisted)", self.name),
            n: self.n,
            dim: self.dim,
            ctx: self.ctx.clone(),
            sigma: self.sigma.iter().map(|m| m.scale(r)).collect(),
            sigma_inv: self.sigma_inv.iter().map(|m| m.scale(&r_inv)).collect(),
            tau: self.tau.clone(),
        })
    }

    /// Applies a ring map to every generator image.
    pub fn try_map<S: Ring>(&self, ctx: Option<Ctx>, mut f: impl FnMut(&R) -> Result<S>) -> Result<GenRep<S>> {
        let mut conv =
            |ms: &[RingMatrix<R>]| -> Result<Vec<RingMatrix<S>>> { ms.iter().map(|m| m.try_map(&mut f)).collect() };
        Ok(GenRep {
            name: self.name.clone(),
            n: self.n,
            dim: self.dim,
            ctx,
            sigma: conv(&self.sigma)?,
            sigma_inv: conv(&self.sigma_inv)?,
            tau: self.tau.as_deref().map(&mut conv).transpose()?,
        })
    }

    /// The relations that fail, by name; empty when every relation of the
    /// (welded) braid group presentation holds exactly.
    pub fn failed_relations(&self) -> Vec<String> {
        let n = self.n;
        let s = |i: usize| &self.sigma[i - 1];
        let prod = |ms: &[&RingMatrix<R>]| {
            ms.iter().skip(1).fold(ms[0].clone(), |acc, m| acc.try_mul(m).expect("square images"))
        };
        let mut bad = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                bad.push(what);
            }
        };
        for i in 1..n {
            for j in i + 2..n {
                check(prod(&[s(i), s(j)]) == prod(&[s(j), s(i)]), format!("s{i} s{j} = s{j} s{i}"));
            }
            if i + 1 < n {
                check(
                    prod(&[s(i), s(i + 1), s(i)]) == prod(&[s(i + 1), s(i), s(i + 1)]),
                    format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
                );
            }
        }
        if let Some(tau) = &self.tau {
            let t = |i: usize| &tau[i - 1];
            for i in 1..n {
                check(prod(&[t(i), t(i)]).is_identity(), format!("t{i}^2 = 1"));
                for j in i + 2..n {
                    check(prod(&[t(i), t(j)]) == prod(&[t(j), t(i)]), format!("t{i} t{j} = t{j} t{i}"));
                }
                for j in 1..n {
                    if i.abs_diff(j) >= 2 {
                        check(prod(&[s(i), t(j)]) == prod(&[t(j), s(i)]), format!("s{i} t{j} = t{j} s{i}"));
                    }
                }
                if i + 1 < n {
                    let k = i + 1;
                    check(
                        prod(&[t(i), t(k), t(i)]) == prod(&[t(k), t(i), t(k)]),
                        format!("t{i} t{k} t{i} = t{k} t{i} t{k}"),
                    );
                    check(
                        prod(&[s(i), t(k), t(i)]) == prod(&[t(k), t(i), s(k)]),
                        format!("s{i} t{k} t{i} = t{k} t{i} s{k}"),
                    );
                    check(
                        prod(&[t(i), s(k), s(i)]) == prod(&[s(k), s(i), t(k)]),
                        format!("t{i} s{k} s{i} = s{k} s{i} t{k}"),
                    );
                }
            }
        }
        bad
    }

    pub fn check_relations(&self) -> bool {
        self.failed_relations().is_empty()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the image of `σ_i`; used to build negative controls.
    pub fn with_sigma(&self, i: usize, m: RingMatrix<R>, m_inv: RingMatrix<R>) -> Self {
        let mut r = self.clone();
        r.sigma[i - 1] = m;
        r.sigma_inv[i - 1] = m_inv;
        r
    }
}

impl GenRep<LaurentPoly> {
    /// Applies a specialization to all images.
    pub fn specialize(&self, s: &Specialization) -> Result<Self> {
        let mut r = self.try_map(Some(s.target().clone()), |e| s.apply(e))?;
        r.name = self.name.clone();
        Ok(r)
    }

    /// Reduces all images into `F_p`.
    pub fn to_field(&self, f: &FieldSpecialization) -> Result<FpRep> {
        self.try_map(None, |e| f.apply(e))
    }

    /// Re-expresses all images in a larger context.
    pub fn embed(&self, target: &Ctx) -> Result<Self> {
        let src = self.ctx.clone().ok_or_else(|| Error::Degenerate("representation has no ring context".into()))?;
        if src.names() == target.names() {
            return Ok(self.clone());
        }
        let s = Specialization::embedding(&src, target)?;
        let mut r = self.try_map(Some(target.clone()), |e| s.apply(e))?;
        r.name = self.name.clone();
        Ok(r)
    }
}

fn block_generator(n: usize, i: usize, block: [[LaurentPoly; 2]; 2]) -> RingMatrix<LaurentPoly> {
    let [[a, b], [c, d]] = block;
    let mid = RingMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2");
    RingMatrix::direct_sum(&[RingMatrix::identity(i - 1), mid, RingMatrix::identity(n - i - 1)])
}

fn require_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    Ok(())
}

fn require_unit(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.inverse().ok_or_else(|| Error::NonUnitImage(p.to_string()))
}

/// The context `Z[t^{±1}]`.
pub fn t_ctx() -> Ctx {
    RingContext::new(&["t"]).expect("valid name")
}

/// The unreduced Burau representation over `Z[t^{±1}]`.
pub fn burau(n: usize) -> Result<PolyRep> {
    burau_with(n, &t_ctx().var("t"), "Bur")
}

/// Unreduced Burau with the parameter `t` replaced by the unit `param`,
/// e.g. `q^2` or `q^2 t`.
pub fn burau_with(n: usize, t: &LaurentPoly, name: &str) -> Result<PolyRep> {
    require_strands(n)?;
    let t_inv = require_unit(t)?;
    let (zero, one) = (LaurentPoly::zero(), LaurentPoly::one());
    let sigma = (1..n).map(|i| block_generator(n, i, [[zero.clone(), t.clone()], [one.clone(), &one - t]])).collect();
    let sigma_inv =
        (1..n).map(|i| block_generator(n, i, [[&one - &t_inv, one.clone()], [t_inv.clone(), zero.clone()]])).collect();
    GenRep::new(format!("{name}_{n}"), n, t.ctx().cloned(), sigma, Some(sigma_inv), None)
}

/// The Tong-Yang-Ma representation over `Z[t^{±1}]`.
pub fn tym(n: usize) -> Result<PolyRep> {
    tym_with(n, &t_ctx().var("t"))
}

/// Tong-Yang-Ma with block `(0 1; t 0)` for a unit `t` of any context.
pub fn tym_with(n: usize, t: &LaurentPoly) -> Result<PolyRep> {
    require_strands(n)?;
    require_unit(t)?;
    let (zero, one) = (LaurentPoly::zero(), LaurentPoly::one());
    let sigma =
        (1..n).map(|i| block_generator(n, i, [[zero.clone(), one.clone()], [t.clone(), zero.clone()]])).collect();
    GenRep::new(format!("TYM_{n}"), n, t.ctx().cloned(), sigma, None, None)
}

/// The context `Z[t^{±1}, α^{±1}]` of the welded representation.
pub fn welded_ctx() -> Ctx {
    RingContext::new(&["t", "alpha"]).expect("valid names")
}

/// The welded Tong-Yang-Ma representation over `Z[t^{±1}, α^{±1}]`.
pub fn wtym(n: usize) -> Result<PolyRep> {
    require_strands(n)?;
    let c = welded_ctx();
    let (t, a) = (c.var("t"), c.var("alpha"));
    let a_inv = a.inverse().expect("variable");
    let (zero, one) = (LaurentPoly::zero(), LaurentPoly::one());
    let sigma =
        (1..n).map(|i| block_generator(n, i, [[zero.clone(), one.clone()], [t.clone(), zero.clone()]])).collect();
    let tau =
        (1..n).map(|i| block_generator(n, i, [[zero.clone(), a_inv.clone()], [a.clone(), zero.clone()]])).collect();
    GenRep::new(format!("wTYM_{n}"), n, Some(c), sigma, None, Some(tau))
}

/// The character sending every Artin generator to the unit `r`.
pub fn one_dim(n: usize, r: &LaurentPoly) -> Result<PolyRep> {
    if n < 1 {
        return Err(Error::TooFewStrands { min: 1, got: n });
    }
    let r_inv = require_unit(r)?;
    let sigma = vec![RingMatrix::diag(vec![r.clone()]); n - 1];
    let sigma_inv = vec![RingMatrix::diag(vec![r_inv]); n - 1];
    GenRep::new(format!("Z[{r}]_{n}"), n, r.ctx().cloned(), sigma, Some(sigma_inv), None)
}
