//! Exact data model for monomial ideals.
//!
//! Everything downstream (Newton polyhedra, multiplier ideals, integral
//! closures) is built on the types in this crate: arbitrary-precision
//! rationals, exponent vectors, canonically minimalized monomial ideals,
//! sparse polynomials with Gaussian-rational coefficients, and the
//! monomial-expression parser.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the whole crate is safe for unrestricted concurrent
//! use.

pub mod error;
pub mod ideal;
pub mod index;
pub mod limits;
pub mod parse;
pub mod poly;
pub mod rat;

pub use error::{Error, ParseError, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use index::MultiIndex;
pub use limits::Limits;
pub use parse::{parse_ideal, render_ideal};
pub use poly::{GaussianRat, Polynomial};
pub use rat::Rat;
