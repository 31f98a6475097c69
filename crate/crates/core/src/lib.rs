//! Exact univariate subresultants computed two ways: from the classical
//! determinant definition, and from closed formulas in the roots (Sylvester
//! single and double sums, and their multiset generalization built from
//! confluent Schur polynomials).
//!
//! Everything is exact rational arithmetic. The [`verify`] module bundles the
//! identity suites used by the `subres` binary and the acceptance tests.

pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rootsets;
pub mod scalar;
pub mod schur;
pub mod sylvester;
pub mod verify;

pub use error::{Error, Result};
pub use poly::UPoly;
pub use rootsets::RootMultiset;
pub use scalar::Rational;
