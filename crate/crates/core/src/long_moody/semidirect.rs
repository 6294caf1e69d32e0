use crate::error::{Error, Result};
use crate::laurent::{Ctx, CtxExt, LaurentPoly};
use crate::matrix::RingMatrix;
use crate::reps::GenRep;
use crate::ring::Ring;
use crate::words::{artin_action, chi, BraidWord, FreeWord, GroupRingWord};

use super::tq_ctx;

/// A representation of `F_n ⋊ B_n`: images of the braid generators
/// `σ_1..σ_{n-1}` and of the free generators `x_1..x_n`.
#[derive(Clone, Debug)]
pub struct SemidirectRep<R: Ring> {
    name: String,
    n: usize,
    dim: usize,
    ctx: Option<Ctx>,
    sigma: Vec<RingMatrix<R>>,
    sigma_inv: Vec<RingMatrix<R>>,
    x: Vec<RingMatrix<R>>,
    x_inv: Vec<RingMatrix<R>>,
}

impl<R: Ring> SemidirectRep<R> {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        ctx: Option<Ctx>,
        sigma: Vec<RingMatrix<R>>,
        x: Vec<RingMatrix<R>>,
    ) -> Result<Self> {
        if n < 1 || sigma.len() != n - 1 || x.len() != n {
            return Err(Error::Shape(format!("{} sigma and {} x images for rank {n}", sigma.len(), x.len())));
        }
        let dim = x[0].rows();
        let invert = |ms: &[RingMatrix<R>]| -> Result<Vec<RingMatrix<R>>> {
            ms.iter()
                .map(|m| {
                    if m.rows() != dim || m.cols() != dim {
                        return Err(Error::Shape(format!("image {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
                    }
                    m.monomial_inverse().or_else(|_| m.unit_pivot_inverse())
                })
                .collect()
        };
        let sigma_inv = invert(&sigma)?;
        let x_inv = invert(&x)?;
        Ok(SemidirectRep { name: name.into(), n, dim, ctx, sigma, sigma_inv, x, x_inv })
    }

    /// Restricts a representation `ρ` of `B_{n+1}` along
    /// `x_j ↦ χ(x_j)` and `σ_i ↦ σ_{i+1}`.
    pub fn from_braid_rep(rho: &GenRep<R>) -> Result<Self> {
        let n1 = rho.strands();
        if n1 < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n1 });
        }
        let n = n1 - 1;
        let sigma = (1..n).map(|i| rho.sigma(i + 1).clone()).collect();
        let sigma_inv = (1..n).map(|i| rho.sigma_inv(i + 1).clone()).collect();
        let mut x = Vec::with_capacity(n);
        let mut x_inv = Vec::with_capacity(n);
        for j in 1..=n {
            let c = chi(&FreeWord::generator(n, j));
            x.push(rho.evaluate(&c)?);
            x_inv.push(rho.evaluate(&c.inverse())?);
        }
        Ok(SemidirectRep {
            name: format!("{} restricted", rho.name()),
            n,
            dim: rho.dim(),
            ctx: rho.ctx().cloned(),
            sigma,
            sigma_inv,
            x,
            x_inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> Option<&Ctx> {
        self.ctx.as_ref()
    }

    pub fn sigma(&self, i: usize) -> &RingMatrix<R> {
        &self.sigma[i - 1]
    }

    pub fn sigma_inv(&self, i: usize) -> &RingMatrix<R> {
        &self.sigma_inv[i - 1]
    }

    pub fn x(&self, j: usize) -> &RingMatrix<R> {
        &self.x[j - 1]
    }

    /// Image of a free group element.
    pub fn eval_free(&self, w: &FreeWord) -> Result<RingMatrix<R>> {
        if w.rank() != self.n {
            return Err(Error::StrandMismatch { expected: self.n, got: w.rank() });
        }
        let mut acc = RingMatrix::identity(self.dim);
        for &(j, s) in w.letters() {
            acc = acc.try_mul(if s > 0 { &self.x[j - 1] } else { &self.x_inv[j - 1] })?;
        }
        Ok(acc)
    }

    /// Linear extension of `eval_free` to the group ring.
    pub fn eval_group_ring(&self, g: &GroupRingWord) -> Result<RingMatrix<R>> {
        let mut acc = RingMatrix::zeros(self.dim, self.dim);
        for (w, c) in g.terms() {
            let m = self.eval_free(w)?;
            acc = if c == 1 { acc.try_add(&m)? } else { acc.try_add(&m.scale(&R::from_int(c)))? };
        }
        Ok(acc)
    }

    /// Image of a braid word in `B_n`.
    pub fn eval_braid(&self, w: &BraidWord) -> Result<RingMatrix<R>> {
        if w.strands() != self.n {
            return Err(Error::StrandMismatch { expected: self.n, got: w.strands() });
        }
        let mut acc = RingMatrix::identity(self.dim);
        for l in w.letters() {
            let crate::words::Letter::Sigma(i, s) = *l else {
                return Err(Error::VirtualLetter);
            };
            acc = acc.try_mul(if s > 0 { &self.sigma[i - 1] } else { &self.sigma_inv[i - 1] })?;
        }
        Ok(acc)
    }

    /// Multiplies every `σ` and `x` image by the unit `r`.
    pub fn twist(&self, r: &R) -> Result<Self> {
        let r_inv = r.unit_inverse().ok_or_else(|| Error::NonUnitImage(r.to_string()))?;
        let sc = |ms: &[RingMatrix<R>], k: &R| ms.iter().map(|m| m.scale(k)).collect();
        Ok(SemidirectRep {
            name: format!("{} (twisted)", self.name),
            n: self.n,
            dim: self.dim,
            ctx: self.ctx.clone(),
            sigma: sc(&self.sigma, r),
            sigma_inv: sc(&self.sigma_inv, &r_inv),
            x: sc(&self.x, r),
            x_inv: sc(&self.x_inv, &r_inv),
        })
    }

    /// Pairs `(i, j)` for which `S_i X(x_j) = X(a_n(σ_i)(x_j)) S_i` fails.
    pub fn compatibility_failures(&self) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        for i in 1..self.n {
            for sign in [1i32, -1] {
                let w = BraidWord::from_ints(self.n, &[sign * i as i32])?;
                let imgs = artin_action(&w)?;
                let s = self.eval_braid(&w)?;
                for (j, img) in imgs.iter().enumerate() {
                    let lhs = s.try_mul(&self.x[j])?;
                    let rhs = self.eval_free(img)?.try_mul(&s)?;
                    if lhs != rhs && !bad.contains(&(i, j + 1)) {
                        bad.push((i, j + 1));
                    }
                }
            }
        }
        Ok(bad)
    }

    pub fn check_compatibility(&self) -> Result<()> {
        let bad = self.compatibility_failures()?;
        if bad.is_empty() {
            return Ok(());
        }
        let list: Vec<String> = bad.iter().map(|(i, j)| format!("(sigma_{i}, x_{j})")).collect();
        Err(Error::Compatibility(list.join(", ")))
    }
}

/// `η_n` over `Z[t^{±1}, q^{±1}]`: `σ_i ↦ TYM_n(σ_i)`,
/// `x_i ↦ q · Diag(1, …, t, …, 1)` with `t` in place `i`.
pub fn eta(n: usize) -> Result<SemidirectRep<LaurentPoly>> {
    let c = tq_ctx();
    let tym = crate::reps::tym_with(n.max(2), &c.var("t"))?;
    let sigma = if n >= 2 { (1..n).map(|i| tym.sigma(i).clone()).collect() } else { vec![] };
    let (t, q) = (c.var("t"), c.var("q"));
    let x = (1..=n)
        .map(|i| RingMatrix::diag((1..=n).map(|k| if k == i { &q * &t } else { q.clone() }).collect::<Vec<_>>()))
        .collect();
    SemidirectRep::new(format!("eta_{n}"), n, Some(c), sigma, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{burau, one_dim, tym};
    use num_traits::One;

    #[test]
    fn restriction_is_compatible() {
        for n1 in 2..=5 {
            for rho in [tym(n1).unwrap(), burau(n1).unwrap()] {
                let s = SemidirectRep::from_braid_rep(&rho).unwrap();
                assert!(s.compatibility_failures().unwrap().is_empty(), "{}", rho.name());
            }
        }
        let c = tq_ctx();
        let s = SemidirectRep::from_braid_rep(&one_dim(4, &c.var("q")).unwrap()).unwrap();
        assert_eq!(*s.x(2), RingMatrix::diag(vec![c.var("q").pow(2).unwrap()]));
    }

    #[test]
    fn eta_is_compatible() {
        for n in 2..=5 {
            eta(n).unwrap().check_compatibility().unwrap();
        }
    }

    #[test]
    fn broken_compatibility_is_reported() {
        // commuting x images that ignore the braid action
        let c = tq_ctx();
        let e = eta(3).unwrap();
        let x: Vec<_> = (1..=3).map(|_| e.x(1).clone()).collect();
        let x2 = {
            let mut v = x;
            v[1] = RingMatrix::diag(vec![c.var("t"), LaurentPoly::one(), LaurentPoly::one()]);
            v
        };
        let bad = SemidirectRep::new("bad", 3, Some(c), vec![e.sigma(1).clone(), e.sigma(2).clone()], x2).unwrap();
        assert!(matches!(bad.check_compatibility(), Err(Error::Compatibility(_))));
    }

    #[test]
    fn group_ring_evaluation() {
        let e = eta(2).unwrap();
        let x1 = FreeWord::generator(2, 1);
        let mut g = GroupRingWord::from_word(x1.clone(), 2);
        g.add_term(FreeWord::identity(2), -1);
        let expect = e.x(1).scale(&LaurentPoly::constant(2)).try_sub(&RingMatrix::identity(2)).unwrap();
        assert_eq!(e.eval_group_ring(&g).unwrap(), expect);
    }
}
