//! Schubert, key and Schur polynomial expansions through (weak) dual
//! equivalence on reduced words and tableaux.

pub mod bases;
pub mod dualequiv;
pub mod error;
pub mod foundations;
pub mod oracle;
pub mod permwords;
pub mod tableaux;

pub use error::{Error, Result};
pub use foundations::{Basis, BasisExpansion, Partition, Polynomial, StrongComposition, WeakComposition, WeakDescent};
pub use permwords::{Permutation, ReducedWord};
pub use tableaux::{Filling, KohnertTableau, Shape};
