pub mod clifford;
pub mod combinat;
pub mod error;
pub mod grouprep;
pub mod linalg;
pub mod nilpotent;
pub mod num;
pub mod psi;
pub mod suites;
pub mod rootsys;
pub mod spincover;

pub use error::{Error, Result};
