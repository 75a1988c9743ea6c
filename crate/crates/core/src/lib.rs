pub mod cli;
pub mod diffops;
pub mod error;
pub mod qfield;
pub mod sympspace;
pub mod uqsp;

pub use error::{QsympError, Result};
