//! The centralizer of ad(g0) in End(m) and block preservation.

use crate::deriv::endo::{mat_mul, EndoSubspace};
use crate::error::{Error, Result};
use crate::lie::MAlgebra;
use crate::linalg::{kernel, SparseRow, Subspace};
use crate::scalar::Rat;
use num_traits::Zero;

fn g0_ad_matrices(m: &MAlgebra) -> Vec<Vec<Vec<Rat>>> {
    (0..m.g0_dim).map(|x| m.brackets.ad_matrix(x)).collect()
}

/// Solution space of T ad_x = ad_x T over all x in the g0 basis.
pub fn centralizer_of_g0(m: &MAlgebra) -> EndoSubspace {
    let n = m.dim;
    let actions = g0_ad_matrices(m);
    let rows = actions.iter().flat_map(|act| {
        (0..n).flat_map(move |r| {
            (0..n).map(move |c| {
                let mut row: SparseRow = Vec::new();
                for a in 0..n {
                    if !act[a][c].is_zero() {
                        row.push((r * n + a, act[a][c].clone()));
                    }
                    if !act[r][a].is_zero() {
                        row.push((a * n + c, -&act[r][a]));
                    }
                }
                row.sort_by_key(|e| e.0);
                let mut merged: SparseRow = Vec::with_capacity(row.len());
                for (cc, v) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == cc => *lv += v,
                        _ => merged.push((cc, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
        })
    });
    let subspace: Subspace = kernel(n * n, rows);
    EndoSubspace {
        space_dim: n,
        subspace,
    }
}

/// True iff F maps each of g0, z, p into itself. Errors unless F commutes
/// with ad(g0) on m; per the structure theory this preservation must hold for
/// every such F when the blocks are pairwise non-isomorphic g0-modules, and
/// it is reported, never assumed.
pub fn g0_block_preservation(f: &[Vec<Rat>], m: &MAlgebra) -> Result<bool> {
    let n = m.dim;
    if f.len() != n {
        return Err(Error::InvalidOperand(
            "endomorphism does not match dim m".into(),
        ));
    }
    for act in g0_ad_matrices(m) {
        if mat_mul(f, &act) != mat_mul(&act, f) {
            return Err(Error::PreconditionViolation(
                "endomorphism does not commute with ad(g0)".into(),
            ));
        }
    }
    for (r, row) in f.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if !v.is_zero() && m.block_of(r) != m.block_of(c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every basis element of the computed centralizer preserves the blocks.
pub fn centralizer_preserves_blocks(m: &MAlgebra) -> Result<(usize, bool)> {
    let cen = centralizer_of_g0(m);
    let mut ok = true;
    for idx in 0..cen.rank() {
        let f = cen.basis_matrix(idx);
        if !g0_block_preservation(&f, m)? {
            ok = false;
        }
    }
    Ok((cen.rank(), ok))
}
