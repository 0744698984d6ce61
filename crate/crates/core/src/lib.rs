pub mod algebra;
pub mod cli;
pub mod analysis;
pub mod error;
pub mod field;
pub mod iso;
pub mod reps;

pub use error::{Error, Result};
