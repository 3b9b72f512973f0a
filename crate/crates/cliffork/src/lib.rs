//! Exact Clifford algebra workbench.
//!
//! Real and complex Clifford algebras over Gaussian rationals, spinor
//! matrix representations, the extended automorphism group
//! {I, W, E, C, Π, K, S, F} with its CPT signature, finite group
//! identification, Pin coverings and the quotient map of odd-dimensional
//! algebras.

pub mod algebra;
pub mod classification;
pub mod coverings;
pub mod error;
pub mod ext;
pub mod groups;
pub mod matrix;
pub mod par;
pub mod quotient;
pub mod reference;
pub mod scalar;
pub mod spinor;
pub mod verify;

pub use algebra::{Blade, Field, MultiVector, SignatureSpec};
pub use error::{Error, Result};
pub use matrix::SpinMatrix;
pub use scalar::GaussianScalar;
