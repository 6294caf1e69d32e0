use crate::error::{Error, Result};
use crate::laurent::{CtxExt, LaurentPoly};
use crate::matrix::RingMatrix;
use crate::reps::{GenRep, PolyRep};
use crate::ring::Ring;
use crate::words::{artin_action, fox_derivative, BraidWord};

use super::semidirect::SemidirectRep;
use super::tq_ctx;

/// Image of `λ` on `I_{F_n} ⊗ V` in the basis `(x_j - 1) ⊗ e_k`, index
/// `(j - 1) d + k`: block `(j, k)` is `X(D_j(a_n(λ)(x_k))) · S(λ)`.
fn lm_image<R: Ring>(eta: &SemidirectRep<R>, w: &BraidWord) -> Result<RingMatrix<R>> {
    let (n, d) = (eta.rank(), eta.dim());
    let imgs = artin_action(w)?;
    let s = eta.eval_braid(w)?;
    let mut out = RingMatrix::zeros(n * d, n * d);
    for (k, img) in imgs.iter().enumerate() {
        for j in 1..=n {
            let g = fox_derivative(img, j);
            if g.is_zero() {
                continue;
            }
            let block = eta.eval_group_ring(&g)?.try_mul(&s)?;
            out.put_block((j - 1) * d, k * d, &block);
        }
    }
    Ok(out)
}

/// The Long-Moody representation of `B_n` built from `F_n ⋊ B_n`.
pub fn lm_semidirect<R: Ring>(eta: &SemidirectRep<R>) -> Result<GenRep<R>> {
    let n = eta.rank();
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    let mut sigma = Vec::with_capacity(n - 1);
    let mut sigma_inv = Vec::with_capacity(n - 1);
    for i in 1..n {
        sigma.push(lm_image(eta, &BraidWord::sigma(n, i, 1)?)?);
        sigma_inv.push(lm_image(eta, &BraidWord::sigma(n, i, -1)?)?);
    }
    GenRep::new(format!("LM({})", eta.name()), n, eta.ctx().cloned(), sigma, Some(sigma_inv), None)
}

/// `LM(ρ)` for a representation `ρ` of `B_{n+1}`.
pub fn lm_apply<R: Ring>(rho: &GenRep<R>) -> Result<GenRep<R>> {
    Ok(lm_semidirect(&SemidirectRep::from_braid_rep(rho)?)?.renamed(format!("LM({})", rho.name())))
}

/// `q^{-1} ⊗ LM(q ⊗ ρ)` for an explicit unit `q`.
pub fn lm_q_with<R: Ring>(rho: &GenRep<R>, q: &R) -> Result<GenRep<R>> {
    let q_inv = q.unit_inverse().ok_or_else(|| Error::NonUnitImage(q.to_string()))?;
    let inner = SemidirectRep::from_braid_rep(&rho.tensor_one_dim(q)?)?;
    Ok(lm_semidirect(&inner)?.tensor_one_dim(&q_inv)?.renamed(format!("LM_q({})", rho.name())))
}

/// `q^{-1} ⊗ LM(q ⊗ η)` where the character `q` sends every `σ_i` and
/// every `x_j` to `q`.
pub fn lm_q_semidirect_with<R: Ring>(eta: &SemidirectRep<R>, q: &R) -> Result<GenRep<R>> {
    let q_inv = q.unit_inverse().ok_or_else(|| Error::NonUnitImage(q.to_string()))?;
    Ok(lm_semidirect(&eta.twist(q)?)?.tensor_one_dim(&q_inv)?.renamed(format!("LM_q({})", eta.name())))
}

/// Moves a representation over a subring of `Z[t^{±1}, q^{±1}]` into it.
fn into_tq(rho: &PolyRep) -> Result<PolyRep> {
    let c = tq_ctx();
    match rho.ctx() {
        Some(src) if src.names() == c.names() => Ok(rho.clone()),
        Some(_) => rho.embed(&c),
        None => rho.try_map(Some(c.clone()), |e| e.in_ctx(&c)),
    }
}

/// `LM_q(ρ)` over `Z[t^{±1}, q^{±1}]`.
pub fn lm_q(rho: &PolyRep) -> Result<PolyRep> {
    let rho = into_tq(rho)?;
    lm_q_with(&rho, &tq_ctx().var("q"))
}

pub fn lm_q_semidirect(eta: &SemidirectRep<LaurentPoly>) -> Result<PolyRep> {
    lm_q_semidirect_with(eta, &tq_ctx().var("q"))
}

/// `TYM_n` with coefficients in `Z[t^{±1}, q^{±1}]`.
pub fn tym_tq(n: usize) -> Result<PolyRep> {
    crate::reps::tym_with(n, &tq_ctx().var("t"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::long_moody::eta;
    use crate::reps::{burau_with, one_dim, tym};
    use num_traits::One;

    #[test]
    fn sub_diagonal_block_is_the_shifted_generator() {
        // block (i+1, i) of LM(ρ)(σ_i) is ρ(σ_{i+1})
        let rho = tym(4).unwrap();
        let lm = lm_apply(&rho).unwrap();
        for i in 1..=2 {
            assert_eq!(lm.sigma(i).block(i * 4, (i - 1) * 4, 4, 4), *rho.sigma(i + 1));
        }
    }

    #[test]
    fn braid_relations() {
        for n in 2..=4 {
            assert!(lm_q(&tym_tq(n + 1).unwrap()).unwrap().check_relations());
            assert!(lm_q_semidirect(&eta(n).unwrap()).unwrap().check_relations());
        }
    }

    #[test]
    fn trivial_source_gives_burau() {
        let c = tq_ctx();
        let q2 = c.var("q").pow(2).unwrap();
        for n in 2..=4 {
            let lm = lm_q(&one_dim(n + 1, &LaurentPoly::one()).unwrap()).unwrap();
            let bur = burau_with(n, &q2, "Bur").unwrap();
            for i in 1..n {
                assert_eq!(lm.sigma(i), bur.sigma(i));
            }
        }
    }

    #[test]
    fn twist_cancels_at_q_one() {
        let c = tq_ctx();
        let s = crate::laurent::Specialization::new(&c, &c, &[("t", c.var("t")), ("q", LaurentPoly::one())]).unwrap();
        let twisted = lm_q(&tym_tq(4).unwrap()).unwrap().specialize(&s).unwrap();
        let plain = lm_apply(&tym_tq(4).unwrap()).unwrap();
        for i in 1..3 {
            assert_eq!(twisted.sigma(i), plain.sigma(i));
        }
    }
}
