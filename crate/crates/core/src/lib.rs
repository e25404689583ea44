//! Hilbert bases of lecture hall cones, in exact arithmetic.
//!
//! A sequence `s = (s_1, ..., s_n)` of positive integers defines the cone
//! `0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_n/s_n`. This crate computes its
//! Hilbert basis from closed forms where one is known and by brute force
//! otherwise, checks Gorenstein points, and counts lattice points in the
//! associated polytopes.
//!
//! ```
//! use lecture_hall::{hilbert_basis, Budget, Sequence};
//!
//! let s: Sequence = "1,3,5".parse().unwrap();
//! let (family, basis) = hilbert_basis(&s, &Budget::default()).unwrap();
//! assert_eq!(family.unwrap().to_string(), "modk(k=2,n=3)");
//! assert_eq!(basis.len(), 4);
//! ```

pub mod cli;
pub mod closed_form;
mod descent;
pub mod ehrhart;
pub mod error;
pub mod gorenstein;
pub mod model;
pub mod oracle;
pub mod report;

pub use closed_form::{hilbert_basis, Dim4Case, Family};
pub use ehrhart::{count_p, count_r, FormulaFlag};
pub use error::{Error, Result};
pub use gorenstein::{GorensteinCertificate, UVector};
pub use model::{Grading, HilbertBasis, LatticePoint, Method, Sequence};
pub use oracle::{hilbert_basis_oracle, Budget, VerificationReport};
