//! Exact-arithmetic analysis of simplicial complexes with bounded
//! missing-face dimension: face enumeration, integral homology via Smith
//! normal form, f/h/g-vector transforms, the extremal constructions
//! `S(i,d)`, `Sk(d,n)` and `S(i,d,n)`, and a verification harness for the
//! associated lower bound theorems and conjectures.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod homology;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod polyvec;
pub mod verify;

pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
