// `!(x > 0.0)` is used on purpose so that NaN fails range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arg;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod quad;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
