pub mod base_models;
pub mod cli;
pub mod composite;
pub mod error;
pub mod oracle;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
