//! Canonical bases of the diagonal block algebras, enumerated by position and
//! imaginary unit in a fixed deterministic order.

use crate::fmat::FMat;
use crate::lie::family::{Family, FamilySpec};
use crate::scalar::{FScalar, Field};

fn unit(field: Field, u: usize) -> FScalar {
    FScalar::unit(field, u)
}

fn place(field: Field, n: usize, r: usize, c: usize, v: FScalar) -> FMat {
    let mut m = FMat::zero(field, n, n);
    *m.at_mut(r, c) = v;
    m
}

/// Anti-hermitian block algebra u(F^sig) = {X : X J + J X^dag = 0} for the
/// signature form; `traceless` cuts the diagonal to the trace-zero combos
/// (su). Enumeration: diagonal terms per imaginary unit, then column-major
/// over position pairs a < b per unit.
fn u_alg(field: Field, sig: (usize, usize), ambient: usize, offset: usize, traceless: bool) -> Vec<FMat> {
    let size = sig.0 + sig.1;
    let d = field.dim();
    let mut out = Vec::new();
    if traceless {
        for u in 1..d {
            for a in 0..size.saturating_sub(1) {
                let mut m = place(field, ambient, offset + a, offset + a, unit(field, u));
                *m.at_mut(offset + a + 1, offset + a + 1) = unit(field, u).neg();
                out.push(m);
            }
        }
    } else {
        for a in 0..size {
            for u in 1..d {
                out.push(place(field, ambient, offset + a, offset + a, unit(field, u)));
            }
        }
    }
    let sgn = |a: usize| if a < sig.0 { 1i64 } else { -1 };
    for a in 0..size {
        for b in (a + 1)..size {
            for u in 0..d {
                let mut m = place(field, ambient, offset + a, offset + b, unit(field, u));
                let back = unit(field, u).conj();
                // X_ba = -j_a j_b conj(X_ab)
                let back = if sgn(a) * sgn(b) > 0 { back.neg() } else { back };
                *m.at_mut(offset + b, offset + a) = back;
                out.push(m);
            }
        }
    }
    out
}

/// sp(k, F) for the standard symplectic form: X = [[A, B], [C, -A^t]] with
/// B, C symmetric, per scalar unit.
fn sp_alg(field: Field, k: usize, ambient: usize, offset: usize) -> Vec<FMat> {
    let h = k / 2;
    let d = field.dim();
    let mut out = Vec::new();
    for u in 0..d {
        for a in 0..h {
            for b in 0..h {
                let mut m = place(field, ambient, offset + a, offset + b, unit(field, u));
                *m.at_mut(offset + h + b, offset + h + a) = unit(field, u).neg();
                out.push(m);
            }
        }
        for a in 0..h {
            for b in a..h {
                let mut m = place(field, ambient, offset + a, offset + h + b, unit(field, u));
                if b > a {
                    *m.at_mut(offset + b, offset + h + a) = unit(field, u);
                }
                out.push(m);
            }
        }
        for a in 0..h {
            for b in a..h {
                let mut m = place(field, ambient, offset + h + a, offset + b, unit(field, u));
                if b > a {
                    *m.at_mut(offset + h + b, offset + a) = unit(field, u);
                }
                out.push(m);
            }
        }
    }
    out
}

/// so(k, C): complex antisymmetric matrices, real basis over units {1, i}.
fn so_alg(field: Field, k: usize, ambient: usize, offset: usize) -> Vec<FMat> {
    let d = field.dim();
    let mut out = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            for u in 0..d {
                let mut m = place(field, ambient, offset + a, offset + b, unit(field, u));
                *m.at_mut(offset + b, offset + a) = unit(field, u).neg();
                out.push(m);
            }
        }
    }
    out
}

/// Canonical basis of the g-side block algebra embedded at the top-left
/// (traceless for unitary-c; the central trace direction lives in z).
pub fn g_block_basis(spec: &FamilySpec) -> Vec<FMat> {
    block_basis(spec, spec.n_sig, 0)
}

/// Canonical basis of the l-side block algebra embedded at the bottom-right.
pub fn l_block_basis(spec: &FamilySpec) -> Vec<FMat> {
    block_basis(spec, spec.m_sig, spec.n_block())
}

fn block_basis(spec: &FamilySpec, sig: (usize, usize), offset: usize) -> Vec<FMat> {
    let field = spec.field();
    let ambient = spec.total();
    match spec.family {
        Family::OrthRR | Family::UnitaryH => u_alg(field, sig, ambient, offset, false),
        Family::UnitaryC => u_alg(field, sig, ambient, offset, true),
        Family::SympR | Family::SympC => sp_alg(field, sig.0, ambient, offset),
        Family::OrthC => so_alg(field, sig.0, ambient, offset),
    }
}

/// The trace-coupled center candidate of s(u(n) + u(m)) for unitary-c:
/// i * diag(m I_n, -n I_m). None for other families or empty blocks.
pub fn center_candidate(spec: &FamilySpec) -> Option<FMat> {
    if spec.family != Family::UnitaryC || spec.n_block() == 0 || spec.m_block() == 0 {
        return None;
    }
    let field = spec.field();
    let (nb, mb, n) = (spec.n_block(), spec.m_block(), spec.total());
    let mut m = FMat::zero(field, n, n);
    for a in 0..nb {
        m.at_mut(a, a).c[1] = crate::scalar::rat_i(mb as i64);
    }
    for a in 0..mb {
        m.at_mut(nb + a, nb + a).c[1] = crate::scalar::rat_i(-(nb as i64));
    }
    Some(m)
}

/// Canonical basis of M_{n x m}(F) over R: lexicographic in (row, col, unit).
pub fn p_rect_basis(spec: &FamilySpec) -> Vec<FMat> {
    let field = spec.field();
    let d = field.dim();
    let (nb, mb) = (spec.n_block(), spec.m_block());
    let mut out = Vec::new();
    for a in 0..nb {
        for b in 0..mb {
            for u in 0..d {
                let mut m = FMat::zero(field, nb, mb);
                *m.at_mut(a, b) = unit(field, u);
                out.push(m);
            }
        }
    }
    out
}

/// Canonical basis of M_{m x m}(F) over R, same ordering. Used for the
/// right-multiplication span and for recognizing right multiplications.
pub fn mxm_basis(spec: &FamilySpec) -> Vec<FMat> {
    let field = spec.field();
    let d = field.dim();
    let mb = spec.m_block();
    let mut out = Vec::new();
    for a in 0..mb {
        for b in 0..mb {
            for u in 0..d {
                let mut m = FMat::zero(field, mb, mb);
                *m.at_mut(a, b) = unit(field, u);
                out.push(m);
            }
        }
    }
    out
}

/// Classical real dimension of the block algebra on a signature block; used
/// as a cross-check oracle against the enumerated bases and kernel ranks.
pub fn classical_block_dim(family: Family, size: usize) -> usize {
    match family {
        Family::OrthRR => size * size.saturating_sub(1) / 2,
        Family::UnitaryC => size * size, // u(n); su is n^2 - 1
        Family::UnitaryH => size * (2 * size + 1),
        Family::SympR => size * (size + 1) / 2,
        Family::SympC => size * (size + 1),
        Family::OrthC => size * size.saturating_sub(1),
    }
}
