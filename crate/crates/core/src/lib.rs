//! Exact arithmetic for positive-integer words `(a_1, …, a_n)` whose product of
//! elementary matrices
//!
//! ```text
//! M(a_1, …, a_n) = E(a_n) · E(a_{n-1}) ⋯ E(a_1),    E(a) = [[a, -1], [1, 0]]
//! ```
//!
//! equals `Id`, `-Id`, or a square root of `-Id` (trace zero), together with their
//! combinatorial models (3d-dissections of convex polygons), analytic invariants
//! (rotation index of the associated broken line, frieze patterns), and reduced
//! decompositions of modular-group elements.
//!
//! The crate is `no_std` (it needs `alloc`). The default `std` feature only adds
//! parallel brute-force enumeration.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod dissection;
pub mod enumeration;
mod error;
mod fast;
pub mod matrix;
pub mod psl2;
pub mod sturm;
pub mod surgery;

pub use error::{Error, Result};
pub use matrix::{
    classify_matrix, continuant, elementary, product_from_continuants, rotundus, word_product, Mat2, MatrixClass, Word,
};
pub use surgery::{classify, reduce, ReductionCertificate, SolutionClass, SurgeryKind, SurgeryStep};
