//! Lie algebras obtained from the general linear Lie superalgebra gl(m|n)
//! through the derived bracket `[[X, Y]]_B = [X, [B, Y]]` of an odd
//! square-zero element `B`.
//!
//! The crate builds these algebras from structure constants, computes their
//! center, radical and Levi factor both from block formulas and by generic
//! linear algebra, and decides isomorphism between any two of them with an
//! explicit isomorphism or a separating invariant. All arithmetic is exact.
//!
//! ```
//! use dbracket::{structure::verify_levi_decomposition, SuperShape};
//!
//! let report = verify_levi_decomposition(SuperShape::new(5, 6).unwrap(), 2).unwrap();
//! assert_eq!((report.dim_levi, report.dim_radical, report.dim_center), (3, 27, 12));
//! ```

pub mod classify;
pub mod derived;
pub mod error;
pub mod linalg;
pub mod random;
pub mod structure;
pub mod superalg;
pub mod sweep;

pub use classify::{iso_decision, AlgebraSpec, ClassificationVerdict, LinearMap};
pub use derived::{build_algebra, DerivedAlgebra, OddGenerator};
pub use error::{Error, Result};
pub use linalg::{Rational, RectMatrix};
pub use structure::{DecompositionReport, Subspace};
pub use superalg::{SuperMatrix, SuperShape};
