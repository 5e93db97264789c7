pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod polyval;
pub mod ring;
pub mod schur_core;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{Composition, IntVector, Partition, Permutation, SkewShape};
pub use error::{Error, Result};
pub use symfunc::{Basis, SymFunc};
