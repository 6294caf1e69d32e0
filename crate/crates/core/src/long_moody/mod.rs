//! The Long-Moody construction and the representations derived from it.

mod construction;
mod decompose;
mod goldens;
mod irreducible;
mod kernel;
mod semidirect;

use crate::laurent::{Ctx, RingContext};

pub use construction::{lm_apply, lm_q, lm_q_semidirect, lm_q_semidirect_with, lm_q_with, lm_semidirect, tym_tq};
pub use decompose::{
    decompose_check, find_permutation_conjugacy, identify_trivial_with_burau, splitting_order, DecompositionReport,
    GeneratorSplit,
};
pub use goldens::{
    lmq_eta3, lmq_tym4, reduced_lm3, sparse_matrix, LMQ_ETA3_SIGMA1, LMQ_ETA3_SIGMA2, LMQ_TYM4_SIGMA1, LMQ_TYM4_SIGMA2,
    REDUCED_LM3_SIGMA1, REDUCED_LM3_SIGMA2,
};
pub use irreducible::{irreducibility_probe, is_prime, span_dimension, ProbeReport, ProbeTrial};
pub use kernel::{kernel_experiment, kernel_row, kernel_words, theta, KernelRow, KernelWord};
pub use semidirect::{eta, SemidirectRep};

/// `Z[t^{±1}, q^{±1}]`.
pub fn tq_ctx() -> Ctx {
    RingContext::new(&["t", "q"]).expect("distinct names")
}
