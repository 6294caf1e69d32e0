use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{CtxExt, LaurentPoly};
use crate::matrix::{Permutation, PolyMatrix};
use crate::reps::{burau_with, one_dim, PolyRep};

use super::construction::{lm_q, lm_q_semidirect, tym_tq};
use super::semidirect::eta;
use super::tq_ctx;

/// Outcome of the splitting check for one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSplit {
    pub index: usize,
    pub block_diagonal: bool,
    pub burau_block: bool,
    pub eta_block: bool,
}

impl GeneratorSplit {
    pub fn passed(&self) -> bool {
        self.block_diagonal && self.burau_block && self.eta_block
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub n: usize,
    pub first_block: usize,
    pub second_block: usize,
    pub generators: Vec<GeneratorSplit>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.generators.iter().all(GeneratorSplit::passed)
    }
}

/// The basis order listing `e_1, e_{(n+1)+1}, …, e_{(n-1)(n+1)+1}` first and
/// the remaining vectors after, in their original order.
pub fn splitting_order(n: usize) -> Permutation {
    let d = n + 1;
    let first: Vec<usize> = (0..n).map(|j| j * d + 1).collect();
    let rest = (1..=n * d).filter(|k| (k - 1) % d != 0);
    let images: Vec<usize> = first.iter().copied().chain(rest).collect();
    Permutation::new(&images).expect("a reordering of 1..=n(n+1)")
}

fn off_blocks_zero(m: &PolyMatrix, k: usize) -> bool {
    let d = m.rows();
    (0..d).all(|i| (0..d).all(|j| (i < k) == (j < k) || m.get(i, j).is_zero()))
}

/// Checks that `LM_q(TYM_{n+1})` splits as `Bur_{n,q²t} ⊕ LM_q(η_n)` in the
/// reordered basis.
pub fn decompose_check(n: usize) -> Result<DecompositionReport> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    let c = tq_ctx();
    let lm = lm_q(&tym_tq(n + 1)?)?;
    let q2t = c.var("q").pow(2)?.try_mul(&c.var("t"))?;
    let bur = burau_with(n, &q2t, "Bur_q2t")?;
    let second = lm_q_semidirect(&eta(n)?)?;
    let order = splitting_order(n);
    let mut generators = Vec::with_capacity(n - 1);
    for i in 1..n {
        let m = lm.sigma(i).permute_basis(&order)?;
        generators.push(GeneratorSplit {
            index: i,
            block_diagonal: off_blocks_zero(&m, n),
            burau_block: m.block(0, 0, n, n) == *bur.sigma(i),
            eta_block: m.block(n, n, n * n, n * n) == *second.sigma(i),
        });
    }
    Ok(DecompositionReport { n, first_block: n, second_block: n * n, generators })
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Searches basis reorderings `π` with `LM(σ_i)[π(a)][π(b)] = B(σ_i)[a][b]`
/// for all generators.
pub fn find_permutation_conjugacy(a: &PolyRep, b: &PolyRep) -> Result<Option<Permutation>> {
    if a.dim() != b.dim() || a.strands() != b.strands() {
        return Ok(None);
    }
    let mut images: Vec<usize> = (1..=a.dim()).collect();
    loop {
        let p = Permutation::new(&images)?;
        let mut ok = true;
        for i in 1..a.strands() {
            if a.sigma(i).permute_basis(&p)? != *b.sigma(i) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(p));
        }
        if !next_permutation(&mut images) {
            return Ok(None);
        }
    }
}

/// `LM_q` of the trivial character of `B_{n+1}` against `Bur_{n,q²}`: the
/// conjugating reordering, when one exists.
pub fn identify_trivial_with_burau(n: usize) -> Result<Option<Permutation>> {
    let c = tq_ctx();
    let lm = lm_q(&one_dim(n + 1, &LaurentPoly::from(1))?)?;
    let bur = burau_with(n, &c.var("q").pow(2)?, "Bur_q2")?;
    let found = find_permutation_conjugacy(&lm, &bur)?;
    if let Some(p) = &found {
        let pm = PolyMatrix::permutation(p);
        let pinv = PolyMatrix::permutation(&p.inverse());
        for i in 1..n {
            if lm.sigma(i).base_change(&pm, &pinv)? != *bur.sigma(i) {
                return Err(Error::Degenerate("reordering does not conjugate as a base change".into()));
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_for_three() {
        assert_eq!(splitting_order(3).images(), vec![1, 5, 9, 2, 3, 4, 6, 7, 8, 10, 11, 12]);
    }

    #[test]
    fn splits_small() {
        for n in 2..=3 {
            let r = decompose_check(n).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.first_block + r.second_block, n * (n + 1));
        }
    }

    #[test]
    fn trivial_source_is_burau() {
        for n in 2..=3 {
            assert!(identify_trivial_with_burau(n).unwrap().is_some());
        }
    }

    #[test]
    fn permutation_enumeration() {
        let mut v = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
