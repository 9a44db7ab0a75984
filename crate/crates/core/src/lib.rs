//! Exact workbench for semisimple Ariki–Koike algebras.

pub mod algebra;
pub mod cellular;
pub mod coeff;
pub mod combinatorics;
mod error;
pub mod linalg;
pub mod report;
pub mod schur;
pub mod seminormal;
pub mod verify;

pub use error::{Error, Result};
