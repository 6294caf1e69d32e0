//! Dense matrices over a ring scalar, permutations, and the block and
//! monomial operations used by the representations.

mod dense;
mod permutation;
mod poly;

use num_bigint::BigInt;

use crate::field::Fp;
use crate::laurent::LaurentPoly;

pub use dense::RingMatrix;
pub use permutation::Permutation;
pub use poly::{index_twist, parse_matrix, specialize_matrix, variable_twist};

pub type PolyMatrix = RingMatrix<LaurentPoly>;
pub type FpMatrix = RingMatrix<Fp>;
pub type IntMatrix = RingMatrix<BigInt>;
