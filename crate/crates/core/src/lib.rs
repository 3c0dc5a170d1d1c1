//! Exact arithmetic, classification and bounded Koszulity certificates for
//! skew PBW extensions `A = sigma(R)<x_1..x_n>` over `Q` or `F_p`.

pub mod basering;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod field;
pub mod gradings;
pub mod koszul;
pub mod linalg;
pub mod skewcore;

pub use error::{Result, SpbwError};
