//! Construction of the six symmetric-pair families: forms, block bases, the
//! decomposition h = g0 + z + l + p and the affine algebra m.

pub mod basis;
pub mod decompose;
pub mod family;
pub mod form;
pub mod malgebra;

pub use decompose::{decompose, Brackets, PairDecomposition};
pub use family::{Family, FamilySpec, ALL_FAMILIES};
pub use form::{build_form, Dagger, FormData};
pub use malgebra::{build_m_algebra, MAlgebra};

use crate::error::Result;
use crate::fmat::FMat;

/// Canonical ordered basis of h over R: the concatenated block bases
/// (g0, z, l, p), each enumerated deterministically by position and
/// imaginary unit. Every element solves X K_N + K_N X^dag = 0 (plus the
/// trace constraint for unitary-c), and the list is independent and spanning
/// (cross-checked against the kernel of the defining system).
pub fn algebra_basis(spec: &FamilySpec) -> Result<Vec<FMat>> {
    Ok(decompose(spec)?.basis)
}
