pub mod algebra;
pub mod commands;
pub mod cubic;
pub mod dirac;
pub mod error;
pub mod gamma;
pub mod matrix2;
pub mod report;
pub mod scalar;
pub mod split;

pub use error::{Error, Result};
