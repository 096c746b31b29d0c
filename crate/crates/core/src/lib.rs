pub mod algebra;
pub mod engine;
pub mod error;
pub mod genperm;
pub mod invariants;
pub mod io;
pub mod matroid;
pub mod taut;

pub use error::{Error, Result};
