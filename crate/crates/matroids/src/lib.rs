//! Binary matroids represented by GF(2) matrices: rank and closure
//! operators, minors and duality, circuit families, connectivity and
//! separation search, named constructions, and structure audits.
//!
//! Ground sets are capped at 64 elements so that every subset is a word
//! and every rank query runs on words.

pub mod analysis;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod io;
pub mod matroid;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, ColumnSelection};
pub use matroid::{BinaryMatroid, ElementSet};
