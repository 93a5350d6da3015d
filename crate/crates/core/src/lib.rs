//! Exact computations with finite-dimensional Leibniz algebras and their
//! crossed modules: non-abelian tensor and exterior products, Schur
//! multipliers, central extensions and stem covers, all over the rationals.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod homology;
pub mod ratlin;
pub mod report;
pub mod tensor;
pub mod xmod;

pub use algebra::{AlgebraHom, LeibnizAction, LeibnizAlgebra};
pub use error::{Error, Result};
pub use extensions::{classify, Classification, Extension};
pub use ratlin::{QuotientMap, RatMatrix, Rational, Subspace};
pub use report::{ValidityReport, Violation};
pub use tensor::{schur_multiplier, SchurMultiplier};
pub use xmod::{CrossedModule, Predicates, SubPair, XModHom};
