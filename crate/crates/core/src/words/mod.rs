//! Braid and welded braid words, free group words, the Artin action, the
//! embedding `χ_{n,1}` and right Fox derivatives.

mod braid;
mod free;
mod parse;

pub use braid::{BraidWord, Letter};
pub use free::{artin_action, chi, fox_derivative, FreeWord, GroupRingWord};
