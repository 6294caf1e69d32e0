//! Exact multivariate Laurent polynomials over the integers.

mod context;
mod poly;
mod render;
mod specialize;

pub use context::{split_indexed, Ctx, RingContext};
pub use poly::{CtxExt, ExponentVector, LaurentPoly};
pub(crate) use render::parse_at;
pub use render::{names_in, parse, parse_infer, render};
pub use specialize::{FieldSpecialization, Specialization};
