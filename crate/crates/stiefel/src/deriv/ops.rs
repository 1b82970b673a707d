//! Derivation spaces, ad spans, g-homomorphisms and the B-form filter.

use crate::deriv::endo::{flatten, EndoSubspace};
use crate::error::{Error, Result};
use crate::fmat::FMat;
use crate::lie::basis::mxm_basis;
use crate::lie::{MAlgebra, PairDecomposition};
use crate::linalg::{kernel_bounded, Eliminator, SparseRow, Subspace};
use crate::scalar::Rat;
use num_traits::Zero;

/// Ad maps of h restricted to m, indexed per m (columns are bracket
/// coordinates), used both here and by the sparse constraint generators.
fn ad_on_m(dec: &PairDecomposition, m: &MAlgebra, x_h: usize) -> Result<Vec<Vec<Rat>>> {
    let mut out = vec![vec![Rat::zero(); m.dim]; m.dim];
    for (b, &bh) in m.h_index.iter().enumerate() {
        for (k, v) in dec.brackets.get(x_h, bh) {
            let Some(mk) = m.h_index.iter().position(|&h| h == k) else {
                return Err(Error::ConstructionFailure(format!(
                    "[x, m] leaves m for x = basis {x_h} in {}",
                    dec.spec
                )));
            };
            out[mk][b] = v;
        }
    }
    Ok(out)
}

/// Does T satisfy `T[x,y]_m = [Tx,y]_m + [x,Ty]_m` over all basis pairs?
pub fn is_derivation(m: &MAlgebra, t: &[Vec<Rat>]) -> bool {
    let n = m.dim;
    for i in 0..n {
        for j in (i + 1)..n {
            let cij = m.brackets.get(i, j);
            for k in 0..n {
                let mut acc = Rat::zero();
                for (l, v) in &cij {
                    if !t[k][*l].is_zero() {
                        acc += v * &t[k][*l];
                    }
                }
                for a in 0..n {
                    if !t[a][i].is_zero() {
                        if let Some(c) = lookup(&m.brackets.get(a, j), k) {
                            acc -= &t[a][i] * &c;
                        }
                    }
                    if !t[a][j].is_zero() {
                        if let Some(c) = lookup(&m.brackets.get(i, a), k) {
                            acc -= &t[a][j] * &c;
                        }
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

fn lookup(coords: &[(usize, Rat)], k: usize) -> Option<Rat> {
    coords
        .iter()
        .find(|(kk, _)| *kk == k)
        .map(|(_, v)| v.clone())
}

/// Stream the derivation-identity constraint rows in canonical order
/// (i < j over basis pairs, then output coordinate k).
fn derivation_rows<'a>(m: &'a MAlgebra) -> impl Iterator<Item = SparseRow> + 'a {
    let n = m.dim;
    // per-x sparse rows of the ad matrices: ad_rows[x][k] = [(a, c_{xa}^k)]
    let mut ad_rows: Vec<Vec<Vec<(usize, Rat)>>> = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for a in 0..n {
            for (k, v) in m.brackets.get(x, a) {
                ad_rows[x][k].push((a, v));
            }
        }
    }
    let ad_rows = std::rc::Rc::new(ad_rows);
    (0..n).flat_map(move |i| {
        let ad_rows = ad_rows.clone();
        ((i + 1)..n).flat_map(move |j| {
            let cij = m.brackets.get(i, j);
            let ad_rows = ad_rows.clone();
            (0..n).map(move |k| {
                let mut row: SparseRow = Vec::new();
                // T[e_i, e_j]: + sum_l c_{ij}^l T_{kl}
                for (l, v) in &cij {
                    row.push((k * n + l, v.clone()));
                }
                // -[T e_i, e_j]: - sum_a c_{aj}^k T_{ai} = + sum_a c_{ja}^k T_{ai}
                for (a, v) in &ad_rows[j][k] {
                    row.push((a * n + i, v.clone()));
                }
                // -[e_i, T e_j]: - sum_a c_{ia}^k T_{aj}
                for (a, v) in &ad_rows[i][k] {
                    row.push((a * n + j, -v));
                }
                // merge duplicate columns
                row.sort_by_key(|e| e.0);
                let mut merged: SparseRow = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
        })
    })
}

/// The exact solution space of the derivation identity, as a subspace of
/// End(m). `lower_bound` enables the certified early exit: when the caller
/// knows a subspace of that dimension inside Der (the ad span, by the Jacobi
/// identity), streaming stops as soon as the kernel dimension reaches it.
pub fn derivations(m: &MAlgebra, lower_bound: Option<usize>) -> EndoSubspace {
    let n2 = m.dim * m.dim;
    let (subspace, _) = kernel_bounded(n2, derivation_rows(m), lower_bound);
    EndoSubspace {
        space_dim: m.dim,
        subspace,
    }
}

/// The span of ad_x|m for x over the g0, z and l bases. Every generator is
/// verified to satisfy the derivation identity; the map x -> ad_x|m is also
/// checked for faithfulness separately (its kernel as a linear map).
pub struct AdSpan {
    pub endo: EndoSubspace,
    /// (h-index, ad matrix on m) per generator
    pub generators: Vec<(usize, Vec<Vec<Rat>>)>,
    /// rank of x -> ad_x|m over g + l (faithful iff equals dim g + dim l)
    pub map_rank: usize,
}

pub fn ad_span(dec: &PairDecomposition, m: &MAlgebra) -> Result<AdSpan> {
    let mut gens = Vec::new();
    let diag = dec.g0.len() + dec.z.len() + dec.l.len();
    let mut el = Eliminator::new(m.dim * m.dim);
    for xh in 0..diag {
        let mat = ad_on_m(dec, m, xh)?;
        if !is_derivation(m, &mat) {
            return Err(Error::ConstructionFailure(format!(
                "ad of basis {xh} is not a derivation in {}",
                dec.spec
            )));
        }
        let flat = flatten(&mat);
        let row: SparseRow = flat
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        el.add_row(&row);
        gens.push((xh, mat));
    }
    let map_rank = el.rank();
    let vectors: Vec<Vec<Rat>> = gens.iter().map(|(_, m)| flatten(m)).collect();
    let endo = EndoSubspace {
        space_dim: m.dim,
        subspace: Subspace::from_vectors(m.dim * m.dim, &vectors),
    };
    Ok(AdSpan {
        endo,
        generators: gens,
        map_rank,
    })
}

/// The matrix of A -> A * X on p-coordinates, X an m x m matrix over F.
pub fn right_mult_matrix(dec: &PairDecomposition, x: &FMat) -> Result<Vec<Vec<Rat>>> {
    let pd = dec.p_rect.len();
    let d = dec.spec.field().dim();
    let mb = dec.spec.m_block();
    let mut out = vec![vec![Rat::zero(); pd]; pd];
    for (t, a) in dec.p_rect.iter().enumerate() {
        let ax = a.mul(x)?;
        // p-coordinates of a rectangular matrix read off componentwise
        for r in 0..dec.spec.n_block() {
            for c in 0..mb {
                for u in 0..d {
                    let v = &ax.at(r, c).c[u];
                    if !v.is_zero() {
                        out[(r * mb + c) * d + u][t] = v.clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Span of all right multiplications inside End(p).
pub fn right_mult_span(dec: &PairDecomposition) -> Result<EndoSubspace> {
    let pd = dec.p_rect.len();
    let mut vectors = Vec::new();
    for x in mxm_basis(&dec.spec) {
        vectors.push(flatten(&right_mult_matrix(dec, &x)?));
    }
    Ok(EndoSubspace {
        space_dim: pd,
        subspace: Subspace::from_vectors(pd * pd, &vectors),
    })
}

/// ad_x restricted to p in p-coordinates, for x one of the g = g0 + z basis
/// elements.
fn g_action_on_p(dec: &PairDecomposition, x_h: usize) -> Vec<Vec<Rat>> {
    let pd = dec.p_rect.len();
    let p_start = dec.p_range().start;
    let mut out = vec![vec![Rat::zero(); pd]; pd];
    for b in 0..pd {
        for (k, v) in dec.brackets.get(x_h, p_start + b) {
            debug_assert!(k >= p_start);
            out[k - p_start][b] = v;
        }
    }
    out
}

/// Solution space of F ad_x = ad_x F on p for all x in the g-basis
/// (g = g0 + z), i.e. the R-linear g-homomorphisms of p. The right
/// multiplications always commute with the g-action, so their span is a
/// certified lower bound for the early exit.
pub fn hom_g(dec: &PairDecomposition, rm_rank: Option<usize>) -> Result<EndoSubspace> {
    let pd = dec.p_rect.len();
    let g_dim = dec.g0.len() + dec.z.len();
    let actions: Vec<Vec<Vec<Rat>>> = (0..g_dim).map(|x| g_action_on_p(dec, x)).collect();
    let rows = actions.iter().flat_map(|act| {
        // (F * act - act * F)[r][c] = 0
        (0..pd).flat_map(move |r| {
            (0..pd).map(move |c| {
                let mut row: SparseRow = Vec::new();
                for a in 0..pd {
                    if !act[a][c].is_zero() {
                        row.push((r * pd + a, act[a][c].clone()));
                    }
                    if !act[r][a].is_zero() {
                        row.push((a * pd + c, -&act[r][a]));
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
    let (subspace, _) = kernel_bounded(pd * pd, rows, rm_rank);
    Ok(EndoSubspace {
        space_dim: pd,
        subspace,
    })
}

/// The subspace of `homs` whose members F satisfy
/// curly_B(F(A), B) + curly_B(A, F(B)) = 0 over all basis pairs of p.
pub fn filter_b_derivations(
    homs: &EndoSubspace,
    dec: &PairDecomposition,
) -> Result<EndoSubspace> {
    let pd = dec.p_rect.len();
    if homs.space_dim != pd {
        return Err(Error::InvalidOperand(
            "hom space does not match p dimension".into(),
        ));
    }
    let r = homs.rank();
    let field = dec.spec.field();
    let (nb, mb) = (dec.spec.n_block(), dec.spec.m_block());
    // image of every p-basis element under every hom basis map
    let mut images: Vec<Vec<FMat>> = Vec::with_capacity(r);
    for t in 0..r {
        let mat = homs.basis_matrix(t);
        let mut per_basis = Vec::with_capacity(pd);
        for i in 0..pd {
            let mut acc = FMat::zero(field, nb, mb);
            for (a, row) in mat.iter().enumerate() {
                if !row[i].is_zero() {
                    acc = acc.add(&dec.p_rect[a].scale(&row[i]))?;
                }
            }
            per_basis.push(acc);
        }
        images.push(per_basis);
    }
    // constraint rows over lambda in Q^r, one per output component of each pair
    let mut el = Eliminator::new(r);
    for i in 0..pd {
        for j in (i + 1)..pd {
            let mut per_component: std::collections::BTreeMap<usize, SparseRow> =
                std::collections::BTreeMap::new();
            for t in 0..r {
                let term = dec
                    .form
                    .curly_b(&images[t][i], &dec.p_rect[j])?
                    .add(&dec.form.curly_b(&dec.p_rect[i], &images[t][j])?)?;
                for (cidx, v) in term.to_sparse_components() {
                    per_component.entry(cidx).or_default().push((t, v));
                }
            }
            for row in per_component.into_values() {
                el.add_row(&row);
            }
        }
    }
    let lambdas = el.kernel_basis();
    // convert back to End(p) vectors
    let mut vectors = Vec::with_capacity(lambdas.len());
    for lam in &lambdas {
        let mut v = vec![Rat::zero(); pd * pd];
        for (t, coef) in lam.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (idx, x) in homs.subspace.basis[t].iter().enumerate() {
                if !x.is_zero() {
                    v[idx] += coef * x;
                }
            }
        }
        vectors.push(v);
    }
    Ok(EndoSubspace {
        space_dim: pd,
        subspace: Subspace::from_vectors(pd * pd, &vectors),
    })
}

/// Recognize an endomorphism of p as a right multiplication: find X with
/// F(A) = A X for all A. `None` is the meaningful negative (F is not a right
/// multiplication), expected for hypothesis-violating specs.
pub fn right_mult_recognize(f: &[Vec<Rat>], dec: &PairDecomposition) -> Result<Option<FMat>> {
    let pd = dec.p_rect.len();
    if f.len() != pd {
        return Err(Error::InvalidOperand(
            "endomorphism does not match p dimension".into(),
        ));
    }
    let field = dec.spec.field();
    let d = field.dim();
    let mb = dec.spec.m_block();
    let ncols = mb * mb * d;
    if ncols == 0 {
        return Ok(Some(FMat::zero(field, 0, 0)));
    }
    let xs = mxm_basis(&dec.spec);
    // rows: for each p-basis element A_i and each output coordinate, the
    // equation sum_w x_w * coord(A_i X_w) = coord(F(A_i))
    let mut rows: Vec<(SparseRow, Rat)> = Vec::new();
    let nb = dec.spec.n_block();
    for i in 0..pd {
        // coords of A_i * X_w for every unknown w
        let mut cols: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(ncols);
        for x in &xs {
            let prod = dec.p_rect[i].mul(x)?;
            let mut col = Vec::new();
            for r in 0..nb {
                for c in 0..mb {
                    for u in 0..d {
                        let v = &prod.at(r, c).c[u];
                        if !v.is_zero() {
                            col.push(((r * mb + c) * d + u, v.clone()));
                        }
                    }
                }
            }
            cols.push(col);
        }
        for out_coord in 0..pd {
            let mut row: SparseRow = Vec::new();
            for (w, col) in cols.iter().enumerate() {
                if let Some((_, v)) = col.iter().find(|(cc, _)| *cc == out_coord) {
                    row.push((w, v.clone()));
                }
            }
            let rhs = f[out_coord][i].clone();
            if !row.is_empty() || !rhs.is_zero() {
                rows.push((row, rhs));
            }
        }
    }
    let Some(sol) = crate::linalg::solve_linear(ncols, rows.into_iter()) else {
        return Ok(None);
    };
    let mut x = FMat::zero(field, mb, mb);
    for (w, coef) in sol.iter().enumerate() {
        if !coef.is_zero() {
            x = x.add(&xs[w].scale(coef))?;
        }
    }
    Ok(Some(x))
}

/// Basis of {X in M_{m x m}(F) : X K_m + K_m X^dag = 0} and the span of the
/// corresponding right multiplications; the l0 filter must coincide with it.
pub fn skew_constraint_rm_span(dec: &PairDecomposition) -> Result<EndoSubspace> {
    let field = dec.spec.field();
    let d = field.dim();
    let mb = dec.spec.m_block();
    let ncols = mb * mb * d;
    let pd = dec.p_rect.len();
    let xs = mxm_basis(&dec.spec);
    let mut el = Eliminator::new(ncols);
    // one constraint row per output component of X K_m + K_m X^dag
    let mut per_component: std::collections::BTreeMap<usize, SparseRow> =
        std::collections::BTreeMap::new();
    for (w, x) in xs.iter().enumerate() {
        let img = x
            .mul(&dec.form.k_m)?
            .add(&dec.form.k_m.mul(&dec.form.dag(x))?)?;
        for (cidx, v) in img.to_sparse_components() {
            per_component.entry(cidx).or_default().push((w, v));
        }
    }
    for row in per_component.into_values() {
        el.add_row(&row);
    }
    let xvecs = el.kernel_basis();
    let mut vectors = Vec::new();
    for xv in &xvecs {
        let mut x = FMat::zero(field, mb, mb);
        for (w, coef) in xv.iter().enumerate() {
            if !coef.is_zero() {
                x = x.add(&xs[w].scale(coef))?;
            }
        }
        vectors.push(flatten(&right_mult_matrix(dec, &x)?));
    }
    Ok(EndoSubspace {
        space_dim: pd,
        subspace: Subspace::from_vectors(pd * pd, &vectors),
    })
}
