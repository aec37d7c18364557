pub mod aqec;
pub mod catalog;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod galois;
pub mod matrix;
pub mod polyring;
pub mod weights;

pub use cli::run_command;
pub use error::{Error, Result};
