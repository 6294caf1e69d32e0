//! Exact evaluation of braid group representations over Laurent polynomial
//! rings: Burau, Tong-Yang-Ma and its string link extensions, and the
//! Long-Moody construction.

pub mod error;
pub mod field;
pub mod laurent;
pub mod long_moody;
pub mod matrix;
pub mod reps;
pub mod ring;
pub mod stringlink;
pub mod words;

pub use error::{Error, Result};
pub use field::Fp;
pub use laurent::{Ctx, LaurentPoly, RingContext};
pub use matrix::{FpMatrix, IntMatrix, Permutation, PolyMatrix, RingMatrix};
pub use reps::{GenRep, PolyRep};
pub use ring::Ring;
pub use stringlink::{Diagram, Mode};
pub use words::{BraidWord, FreeWord, Letter};
