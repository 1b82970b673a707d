//! The non-associative algebra m = g0 + z + p with the projected bracket.

use crate::error::{Error, Result};
use crate::lie::decompose::{Brackets, PairDecomposition};
use crate::linalg::QMat;
use crate::scalar::Rat;
use num_traits::Zero;

/// (m, [.,.]_m): structure constants of the bracket projected along l, plus
/// the restricted trace-form Gram matrix and the index map back into h.
pub struct MAlgebra {
    pub dim: usize,
    /// m-index -> h-index into the PairDecomposition basis
    pub h_index: Vec<usize>,
    pub brackets: Brackets,
    pub gram: QMat,
    pub g0_dim: usize,
    pub z_dim: usize,
    pub p_dim: usize,
}

impl MAlgebra {
    pub fn p_start(&self) -> usize {
        self.g0_dim + self.z_dim
    }

    /// m-coordinates of an explicit matrix; None when it is not in h or has a
    /// nonzero l-component.
    pub fn m_coords(&self, dec: &PairDecomposition, x: &crate::fmat::FMat) -> Option<Vec<Rat>> {
        let h = dec.coords(x)?;
        let mut out = vec![Rat::zero(); self.dim];
        for (hi, v) in h.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            match self.h_index.iter().position(|&x| x == hi) {
                Some(mi) => out[mi] = v.clone(),
                None => return None, // nonzero l-part
            }
        }
        Some(out)
    }

    /// [a, b]_m on coordinate vectors via the structure constants.
    pub fn bracket_vec(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, va) in a.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (j, vb) in b.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                for (k, c) in self.brackets.get(i, j) {
                    out[k] += va * vb * &c;
                }
            }
        }
        out
    }

    /// Materialize an m-coordinate vector as a matrix in h.
    pub fn to_fmat(&self, dec: &PairDecomposition, coords: &[Rat]) -> crate::fmat::FMat {
        let n = dec.spec.total();
        let mut out = crate::fmat::FMat::zero(dec.spec.field(), n, n);
        for (mi, v) in coords.iter().enumerate() {
            if !v.is_zero() {
                out = out
                    .add(&dec.basis[self.h_index[mi]].scale(v))
                    .expect("same-shape add");
            }
        }
        out
    }

    /// block of an m-index: 0 = g0, 1 = z, 2 = p
    pub fn block_of(&self, i: usize) -> usize {
        if i < self.g0_dim {
            0
        } else if i < self.g0_dim + self.z_dim {
            1
        } else {
            2
        }
    }

    /// Naturally-reductive identity `B([x,y]_m, z) + B(y, [x,z]_m) = 0` over
    /// all basis triples.
    pub fn check_naturally_reductive(&self) -> bool {
        let n = self.dim;
        for x in 0..n {
            for y in 0..n {
                let cxy = self.brackets.get(x, y);
                for z in 0..n {
                    let mut acc = Rat::zero();
                    for (k, v) in &cxy {
                        let g = self.gram.at(*k, z);
                        if !g.is_zero() {
                            acc += v * g;
                        }
                    }
                    for (k, v) in self.brackets.get(x, z) {
                        let g = self.gram.at(y, k);
                        if !g.is_zero() {
                            acc += &v * g;
                        }
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Project the bracket of h onto m = g0 + z + p by dropping l-coordinates.
/// Coordinate truncation is the trace-orthogonal projection because l is
/// trace-orthogonal to m and the form is non-degenerate; both facts are
/// verified here before truncating.
pub fn build_m_algebra(dec: &PairDecomposition) -> Result<MAlgebra> {
    let h_index: Vec<usize> = (0..dec.h_dim).filter(|i| dec.block_of(*i) != 2).collect();
    let dim = h_index.len();
    let mut pos = vec![usize::MAX; dec.h_dim];
    for (mi, hi) in h_index.iter().enumerate() {
        pos[*hi] = mi;
    }

    // l ⟂ m and non-degeneracy of the full Gram matrix
    for &hi in &h_index {
        for lj in dec.l_range() {
            if !dec.trace_gram.at(hi, lj).is_zero() {
                return Err(Error::ConstructionFailure(format!(
                    "l is not trace-orthogonal to m in {}",
                    dec.spec
                )));
            }
        }
    }
    if dec.trace_gram.rank() != dec.h_dim {
        return Err(Error::ConstructionFailure(format!(
            "degenerate trace form on {}",
            dec.spec
        )));
    }

    let mut brackets = Brackets::new(dim);
    for a in 0..dim {
        for b in (a + 1)..dim {
            let full = dec.brackets.get(h_index[a], h_index[b]);
            let projected: Vec<(usize, Rat)> = full
                .into_iter()
                .filter(|(k, _)| pos[*k] != usize::MAX)
                .map(|(k, v)| (pos[k], v))
                .collect();
            if !projected.is_empty() {
                brackets.set(a, b, projected);
            }
        }
    }

    let mut gram = QMat::zero(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            gram.set(a, b, dec.trace_gram.at(h_index[a], h_index[b]).clone());
        }
    }
    if gram.rank() != dim {
        return Err(Error::ConstructionFailure(format!(
            "degenerate trace form on m in {}",
            dec.spec
        )));
    }

    Ok(MAlgebra {
        dim,
        h_index,
        brackets,
        gram,
        g0_dim: dec.g0.len(),
        z_dim: dec.z.len(),
        p_dim: dec.p.len(),
    })
}
