use std::time::{Duration, Instant};

use crate::error::Result;
use crate::reps::{burau, tym};
use crate::words::BraidWord;

use super::construction::{lm_apply, lm_q, tym_tq};

/// A named braid word expected in the Burau kernel.
#[derive(Clone, Debug)]
pub struct KernelWord {
    pub name: &'static str,
    pub word: BraidWord,
}

fn w(n: usize, ints: &[i32]) -> BraidWord {
    BraidWord::from_ints(n, ints).expect("indices fit the strand count")
}

fn conj(a: &BraidWord, c: &BraidWord) -> BraidWord {
    a.conjugate_by(c).expect("same strand count")
}

fn comm(a: &BraidWord, b: &BraidWord) -> BraidWord {
    BraidWord::commutator(a, b).expect("same strand count")
}

pub fn theta() -> BraidWord {
    w(6, &[-5, -4, 5, -3, 4, -2, -3, -3, -3, 1, 1, 1, 5, 4, -3, -2, 1])
}

/// The words `σ ∈ B_5`, `τ, ξ ∈ B_6` and `υ ∈ B_7`.
pub fn kernel_words() -> Vec<KernelWord> {
    let psi1 = w(5, &[-3, 2, 1, 1, 2, 4, 4, 4, 3, 2]);
    let psi2 = w(5, &[-4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4]);
    let sigma = comm(&conj(&w(5, &[4]), &psi1), &conj(&w(5, &[4, 3, 2, 1, 1, 2, 3, 4]), &psi2));

    let d1 = w(6, &[4, -5, -2, 1]);
    let d2 = w(6, &[-4, 5, 5, 2, -1, -1]);
    let s3 = w(6, &[3]);
    let tau = comm(&conj(&s3, &d1), &conj(&s3, &d2));

    let th = theta();
    let xi = comm(&conj(&w(6, &[5]), &th), &w(6, &[2, 3, 4, 5]).pow(5));

    let g = th.shift_embed(1);
    let upsilon = comm(&w(7, &[1]), &conj(&w(7, &[6]), &g));

    vec![
        KernelWord { name: "sigma", word: sigma },
        KernelWord { name: "tau", word: tau },
        KernelWord { name: "xi", word: xi },
        KernelWord { name: "upsilon", word: upsilon },
    ]
}

#[derive(Clone, Debug)]
pub struct KernelRow {
    pub name: &'static str,
    pub strands: usize,
    pub length: usize,
    pub burau_identity: bool,
    pub lm_identity: bool,
    pub twisted_identity: bool,
    /// Dimension of the `τ₁LM_q(TYM_{n+1})` images.
    pub twisted_dim: usize,
    pub elapsed: Duration,
}

impl KernelRow {
    /// Burau and `LM(TYM_{n+1})` kill the word while `τ₁LM_q(TYM_{n+1})`
    /// does not.
    pub fn as_expected(&self) -> bool {
        self.burau_identity && self.lm_identity && !self.twisted_identity
    }
}

pub fn kernel_row(k: &KernelWord) -> Result<KernelRow> {
    let start = Instant::now();
    let n = k.word.strands();
    let burau_identity = burau(n)?.evaluate(&k.word)?.is_identity();
    let lm_identity = lm_apply(&tym(n + 1)?)?.evaluate(&k.word)?.is_identity();
    let twisted = lm_q(&tym_tq(n + 2)?)?;
    let twisted_identity = twisted.evaluate(&k.word.shift_embed(1))?.is_identity();
    Ok(KernelRow {
        name: k.name,
        strands: n,
        length: k.word.len(),
        burau_identity,
        lm_identity,
        twisted_identity,
        twisted_dim: twisted.dim(),
        elapsed: start.elapsed(),
    })
}

pub fn kernel_experiment() -> Result<Vec<KernelRow>> {
    kernel_words().iter().map(kernel_row).collect()
}
