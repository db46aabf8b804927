//! Exact computations for super Kac-Moody 2-categories.
//!
//! The crate covers the covering quantum group and its sesquilinear form, the
//! graphical matching formula for that form, the quiver Hecke superalgebra and
//! the degree/parity bookkeeping of string diagrams.

pub mod cartan;
pub mod covering;
pub mod diagrams;
pub mod halfquantum;
pub mod qhsa;
pub mod scalars;
pub mod symfun;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible scalar")]
    NonInvertible,
    #[error("invalid datum: {0}")]
    Datum(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}
