//! Shared helpers for the integration suites.

use stiefel::fmat::FMat;
use stiefel::lie::{build_m_algebra, decompose, Family, FamilySpec, MAlgebra, PairDecomposition};
use stiefel::scalar::{rat_i, FScalar, Field};

pub fn build(family: Family, params: &[usize]) -> (PairDecomposition, MAlgebra) {
    let spec = FamilySpec::new(family, params).expect("valid spec");
    let dec = decompose(&spec).expect("decompose");
    let m = build_m_algebra(&dec).expect("m-algebra");
    (dec, m)
}

/// Real matrix from integer entries.
pub fn rmat(field: Field, entries: &[&[i64]]) -> FMat {
    let rows = entries.len();
    let cols = entries[0].len();
    let mut m = FMat::zero(field, rows, cols);
    for (r, row) in entries.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.at_mut(r, c).c[0] = rat_i(*v);
        }
    }
    m
}

/// A single F-scalar entry placed in an r x c zero matrix.
pub fn scalar_at(field: Field, rows: usize, cols: usize, r: usize, c: usize, s: FScalar) -> FMat {
    let mut m = FMat::zero(field, rows, cols);
    *m.at_mut(r, c) = s;
    m
}

/// The m-projected bracket of two explicit elements of m, as a matrix.
pub fn m_bracket(dec: &PairDecomposition, m: &MAlgebra, x: &FMat, y: &FMat) -> FMat {
    let cx = m.m_coords(dec, x).expect("x in m");
    let cy = m.m_coords(dec, y).expect("y in m");
    m.to_fmat(dec, &m.bracket_vec(&cx, &cy))
}

/// x scaled by an integer.
pub fn times(x: &FMat, k: i64) -> FMat {
    x.scale(&rat_i(k))
}
