//! Reference matrices over `Z[t^{±1}, q^{±1}]`, listed as 1-based
//! `(row, col, entry)` triples; all other entries are zero.

use crate::error::Result;
use crate::laurent::parse;
use crate::matrix::PolyMatrix;
use crate::reps::{GenRep, PolyRep};

use super::tq_ctx;

type Sparse = &'static [(usize, usize, &'static str)];

/// `LM_q(TYM_4)(σ_1)`.
pub const LMQ_TYM4_SIGMA1: Sparse = &[
    (1, 5, "q^2*t"),
    (2, 7, "q^2"),
    (3, 6, "q^2*t^2"),
    (4, 8, "q^2"),
    (5, 1, "1"),
    (5, 5, "1 - q^2*t"),
    (6, 3, "1"),
    (6, 7, "1 - q^2*t"),
    (7, 2, "t"),
    (7, 6, "t - q^2*t"),
    (8, 4, "1"),
    (8, 8, "1 - q^2"),
    (9, 9, "1"),
    (10, 11, "1"),
    (11, 10, "t"),
    (12, 12, "1"),
];

/// `LM_q(TYM_4)(σ_2)`.
pub const LMQ_TYM4_SIGMA2: Sparse = &[
    (1, 1, "1"),
    (2, 2, "1"),
    (3, 4, "1"),
    (4, 3, "t"),
    (5, 9, "q^2*t"),
    (6, 10, "q^2"),
    (7, 12, "q^2"),
    (8, 11, "q^2*t^2"),
    (9, 5, "1"),
    (9, 9, "1 - q^2*t"),
    (10, 6, "1"),
    (10, 10, "1 - q^2"),
    (11, 8, "1"),
    (11, 12, "1 - q^2*t"),
    (12, 7, "t"),
    (12, 11, "t - q^2*t"),
];

/// `LM_q(η_3)(σ_1)`.
pub const LMQ_ETA3_SIGMA1: Sparse = &[
    (1, 5, "q^2"),
    (2, 4, "q^2*t^2"),
    (3, 6, "q^2"),
    (4, 2, "1"),
    (4, 5, "1 - q^2*t"),
    (5, 1, "t"),
    (5, 4, "t - q^2*t"),
    (6, 3, "1"),
    (6, 6, "1 - q^2"),
    (7, 8, "1"),
    (8, 7, "t"),
    (9, 9, "1"),
];

/// `LM_q(η_3)(σ_2)`.
pub const LMQ_ETA3_SIGMA2: Sparse = &[
    (1, 1, "1"),
    (2, 3, "1"),
    (3, 2, "t"),
    (4, 7, "q^2"),
    (5, 9, "q^2"),
    (6, 8, "q^2*t^2"),
    (7, 4, "1"),
    (7, 7, "1 - q^2"),
    (8, 6, "1"),
    (8, 9, "1 - q^2*t"),
    (9, 5, "t"),
    (9, 8, "t - q^2*t"),
];

/// The reduced six-dimensional representation of `B_3`, `σ_1`.
pub const REDUCED_LM3_SIGMA1: Sparse = &[
    (1, 2, "-q^2"),
    (2, 1, "-q^2*t^2"),
    (3, 3, "-q^2"),
    (4, 2, "1"),
    (4, 5, "1"),
    (5, 1, "t"),
    (5, 4, "t"),
    (6, 3, "1"),
    (6, 6, "1"),
];

/// The reduced six-dimensional representation of `B_3`, `σ_2`.
pub const REDUCED_LM3_SIGMA2: Sparse = &[
    (1, 1, "1"),
    (1, 4, "q^2"),
    (2, 3, "1"),
    (2, 6, "q^2"),
    (3, 2, "t"),
    (3, 5, "q^2*t^2"),
    (4, 4, "-q^2"),
    (5, 6, "-q^2"),
    (6, 5, "-q^2*t^2"),
];

/// Assembles a sparse listing into a `dim × dim` matrix.
pub fn sparse_matrix(dim: usize, entries: Sparse) -> Result<PolyMatrix> {
    let c = tq_ctx();
    let mut m = PolyMatrix::zeros(dim, dim);
    for &(i, j, e) in entries {
        m.set(i - 1, j - 1, parse(e, &c)?);
    }
    Ok(m)
}

pub fn lmq_tym4() -> Result<[PolyMatrix; 2]> {
    Ok([sparse_matrix(12, LMQ_TYM4_SIGMA1)?, sparse_matrix(12, LMQ_TYM4_SIGMA2)?])
}

pub fn lmq_eta3() -> Result<[PolyMatrix; 2]> {
    Ok([sparse_matrix(9, LMQ_ETA3_SIGMA1)?, sparse_matrix(9, LMQ_ETA3_SIGMA2)?])
}

/// The six-dimensional representation of `B_3`, with inverse images by
/// unit-pivot elimination.
pub fn reduced_lm3() -> Result<PolyRep> {
    let s = vec![sparse_matrix(6, REDUCED_LM3_SIGMA1)?, sparse_matrix(6, REDUCED_LM3_SIGMA2)?];
    GenRep::new("reduced LM_q(eta_3)", 3, Some(tq_ctx()), s, None, None)
}
