//! Neutrosophic soft sets, their algebra, and the ranking procedures built
//! on them.

pub mod decision;
pub mod error;
pub mod exec;
pub mod group;
pub mod io;
pub mod maji;
pub mod ns;

pub use error::{Error, ErrorClass, Result};
pub use exec::Execution;
