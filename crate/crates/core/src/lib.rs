pub mod cli;
pub mod curve;
pub mod diagram;
pub mod ensemble;
pub mod error;
pub mod partition;
mod roots;
pub mod scatter;
pub mod specfun;

pub use curve::PhaseCurve;
pub use error::{Error, Result};
