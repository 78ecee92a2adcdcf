//! Exact arithmetic toolkit for the nine classical matrix symmetry types
//! (semimagic, associated, balanced, row/column reverse, vertex cross sum,
//! 2×2 array sum, consecutive alternating sum, strong pandiagonal, quartered),
//! their block representations under `X_n`, and the Z2-graded direct sums
//! they form.
//!
//! Everything is computed over Q(√2) with arbitrary-precision rationals, so
//! every identity is checked exactly.

pub mod block;
pub mod construct;
pub mod decompose;
pub mod error;
pub mod format;
pub mod linalg;
pub mod matrix;
pub mod predicates;
pub mod scalar;
pub mod verify;

pub use block::{conjugate_j, from_block, to_block, BlockForm, BlockViews, Parity};
pub use decompose::{GradedPair, SplitKind};
pub use error::{Error, Result};
pub use matrix::{Matrix, MatrixKind, Vector, VectorKind};
pub use predicates::{classify, Property, SymmetryReport, Verdict};
pub use scalar::Scalar;
