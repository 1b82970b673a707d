//! Vectorized spaces of linear endomorphisms.

use crate::linalg::Subspace;
use crate::scalar::Rat;
use num_traits::Zero;

/// A subspace of End(V) for dim(V) = space_dim, vectorized row-major:
/// the matrix entry `T[a][b]` (coefficient of e_a in T(e_b)) sits at
/// coordinate a * space_dim + b.
#[derive(Debug, Clone)]
pub struct EndoSubspace {
    pub space_dim: usize,
    pub subspace: Subspace,
}

impl EndoSubspace {
    pub fn rank(&self) -> usize {
        self.subspace.rank()
    }

    pub fn basis_matrix(&self, idx: usize) -> Vec<Vec<Rat>> {
        unflatten(self.space_dim, &self.subspace.basis[idx])
    }
}

pub fn flatten(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut out = Vec::with_capacity(n * n);
    for row in m {
        out.extend(row.iter().cloned());
    }
    out
}

pub fn unflatten(n: usize, v: &[Rat]) -> Vec<Vec<Rat>> {
    assert_eq!(v.len(), n * n);
    (0..n).map(|a| v[a * n..(a + 1) * n].to_vec()).collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for t in 0..n {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[t][j].is_zero() {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}
