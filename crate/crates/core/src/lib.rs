//! Full and cyclic full commutativity in Coxeter groups.
//!
//! Words are decided through heaps and their cylindric transformations,
//! elements are enumerated by Coxeter length, and the resulting censuses are
//! compared against exact quasi-rational generating series.

pub mod classify;
pub mod coxeter;
pub mod cylindric;
pub mod enumerate;
pub mod error;
pub mod heap;
pub mod qseries;
pub mod render;
#[cfg(test)]
mod testutil;
pub mod verify;

pub use coxeter::{build_family, CoxeterSystem, Family, RingElem, RootVector, Word};
pub use error::{Error, Result};
