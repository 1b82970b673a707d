//! Exact-arithmetic engine for the affine algebras of generalized Stiefel
//! manifolds.
//!
//! A pair (h, g + l) of form-preserving matrix algebras splits as
//! h = g + l + p with p identified with rectangular matrices over R, C or H.
//! The quotient tangent space m = g + p carries the non-associative product
//! [x, y]_m (the bracket projected along l). This crate constructs the six
//! classical families of such pairs with rational coefficients, computes
//! Der(m), the g-homomorphisms of p and their B-form filter exactly, and
//! verifies that Der(m) coincides with ad(g + l) on the parameter ranges
//! where the structure theory predicts it.
//!
//! All arithmetic is exact; every reported rank is a kernel dimension over Q
//! and every flag is an exact identity check. There are no tolerances.

pub mod deriv;
pub mod error;
pub mod fmat;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use lie::{Family, FamilySpec};
pub use report::Report;
pub use verify::{verify, VerifyOptions};
