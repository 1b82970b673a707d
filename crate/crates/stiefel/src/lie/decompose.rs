//! The pair decomposition h = g0 + z + l + p with exact structure constants.

use crate::error::{Error, Result};
use crate::fmat::{trace_form, FMat};
use crate::lie::basis;
use crate::lie::family::{Family, FamilySpec};
use crate::lie::form::{build_form, FormData};
use crate::linalg::{kernel, Eliminator, QMat, SparseRow, Subspace};
use crate::scalar::Rat;
use num_traits::Zero;

/// Sparse coordinate reducer with combination tracking: expresses vectors in
/// a fixed basis exactly. Rows are pivot-normalized rationals; tag columns
/// beyond `real_cols` record the combination and are never pivots.
struct CoordSolver {
    real_cols: usize,
    rows: Vec<(usize, Vec<(usize, Rat)>)>, // (pivot col, sorted sparse row)
}

impl CoordSolver {
    fn new(real_cols: usize) -> Self {
        CoordSolver {
            real_cols,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &[(usize, Rat)]) -> Vec<(usize, Rat)> {
        let mut cur: Vec<(usize, Rat)> = v.to_vec();
        cur.sort_by_key(|e| e.0);
        for (pc, row) in &self.rows {
            let Some(pos) = cur.iter().position(|(c, _)| c == pc) else {
                continue;
            };
            let f = cur[pos].1.clone();
            // cur -= f * row
            let mut out: Vec<(usize, Rat)> = Vec::with_capacity(cur.len() + row.len());
            let (mut i, mut j) = (0, 0);
            while i < cur.len() || j < row.len() {
                if j >= row.len() || (i < cur.len() && cur[i].0 < row[j].0) {
                    out.push(cur[i].clone());
                    i += 1;
                } else if i >= cur.len() || row[j].0 < cur[i].0 {
                    out.push((row[j].0, -(&f * &row[j].1)));
                    j += 1;
                } else {
                    let v = &cur[i].1 - &f * &row[j].1;
                    if !v.is_zero() {
                        out.push((cur[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            cur = out;
        }
        cur
    }

    /// Insert basis vector number `idx`; false if dependent on earlier ones.
    fn insert(&mut self, idx: usize, v: &[(usize, Rat)]) -> bool {
        let mut row: Vec<(usize, Rat)> = v.to_vec();
        row.push((self.real_cols + idx, Rat::from_integer(1.into())));
        let mut row = self.reduce(&row);
        let Some(pos) = row.iter().position(|(c, _)| *c < self.real_cols) else {
            return false;
        };
        let pc = row[pos].0;
        let lead = row[pos].1.clone();
        for (_, x) in row.iter_mut() {
            *x = &*x / &lead;
        }
        self.rows.push((pc, row));
        true
    }

    /// Coordinates in the inserted basis; None when not in the span.
    fn coords(&self, v: &[(usize, Rat)], nbasis: usize) -> Option<Vec<Rat>> {
        let r = self.reduce(v);
        let mut out = vec![Rat::zero(); nbasis];
        for (c, val) in r {
            if c < self.real_cols {
                if !val.is_zero() {
                    return None;
                }
            } else {
                out[c - self.real_cols] = -val;
            }
        }
        Some(out)
    }
}

/// Antisymmetric structure constants over a fixed ordered basis, stored for
/// i < j, plus row/column sparse views of every ad map.
#[derive(Debug, Clone)]
pub struct Brackets {
    pub dim: usize,
    table: Vec<Vec<(usize, Rat)>>, // index i*dim + j, i < j
}

impl Brackets {
    pub fn new(dim: usize) -> Self {
        Brackets {
            dim,
            table: vec![Vec::new(); dim * dim],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, coords: Vec<(usize, Rat)>) {
        debug_assert!(i < j);
        self.table[i * self.dim + j] = coords;
    }

    /// [e_i, e_j] coordinates, sign handled.
    pub fn get(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.table[i * self.dim + j].clone(),
            Ordering::Greater => self.table[j * self.dim + i]
                .iter()
                .map(|(k, v)| (*k, -v))
                .collect(),
        }
    }

    pub fn get_ref(&self, i: usize, j: usize) -> Option<&[(usize, Rat)]> {
        if i < j {
            Some(&self.table[i * self.dim + j])
        } else {
            None
        }
    }

    /// ad_x as a dense matrix: column b holds the coordinates of [e_x, e_b].
    pub fn ad_matrix(&self, x: usize) -> Vec<Vec<Rat>> {
        let mut m = vec![vec![Rat::zero(); self.dim]; self.dim];
        for b in 0..self.dim {
            for (k, v) in self.get(x, b) {
                m[k][b] = v;
            }
        }
        m
    }
}

/// Explicit bases of the four blocks inside h plus exact structure constants
/// and the trace-form Gram matrix, all over the concatenated ordered basis
/// (g0, z, l, p).
pub struct PairDecomposition {
    pub spec: FamilySpec,
    pub form: FormData,
    pub g0: Vec<FMat>,
    pub z: Vec<FMat>,
    pub l: Vec<FMat>,
    /// p embedded in h, in bijection with `p_rect`
    pub p: Vec<FMat>,
    /// the rectangular M_{n x m}(F) basis behind `p`
    pub p_rect: Vec<FMat>,
    pub basis: Vec<FMat>,
    pub h_dim: usize,
    pub brackets: Brackets,
    pub trace_gram: QMat,
    solver: CoordSolver,
}

impl PairDecomposition {
    pub fn g_dim(&self) -> usize {
        self.g0.len() + self.z.len()
    }

    pub fn block_of(&self, idx: usize) -> usize {
        let (g0, z, l) = (self.g0.len(), self.z.len(), self.l.len());
        if idx < g0 {
            0
        } else if idx < g0 + z {
            1
        } else if idx < g0 + z + l {
            2
        } else {
            3
        }
    }

    pub fn l_range(&self) -> std::ops::Range<usize> {
        let start = self.g0.len() + self.z.len();
        start..start + self.l.len()
    }

    pub fn p_range(&self) -> std::ops::Range<usize> {
        let start = self.g0.len() + self.z.len() + self.l.len();
        start..self.h_dim
    }

    /// Exact coordinates of an h-element in the concatenated basis; None when
    /// the matrix lies outside h's span.
    pub fn coords(&self, x: &FMat) -> Option<Vec<Rat>> {
        self.solver.coords(&x.to_sparse_components(), self.h_dim)
    }

    /// Materialize a coordinate vector back into a matrix.
    pub fn from_coords(&self, coords: &[Rat]) -> FMat {
        let n = self.spec.total();
        let mut out = FMat::zero(self.spec.field(), n, n);
        for (i, v) in coords.iter().enumerate() {
            if !v.is_zero() {
                out = out.add(&self.basis[i].scale(v)).expect("same-shape add");
            }
        }
        out
    }
}

fn component_dim(spec: &FamilySpec) -> usize {
    let n = spec.total();
    n * n * spec.field().dim()
}

/// Rank of the defining constraint system of h, computed column-by-column
/// from elementary matrices; h_dim must equal (components) - rank.
fn defining_system_corank(spec: &FamilySpec, form: &FormData) -> usize {
    let field = spec.field();
    let d = field.dim();
    let n = spec.total();
    let ncols = component_dim(spec);
    // output coordinates: the relation components, plus F-trace components
    // for unitary-c appended past the end
    let extra = if spec.family == Family::UnitaryC { d } else { 0 };
    let mut el = Eliminator::new(ncols + extra);
    // stream the transposed system: rank(M) = rank(M^T)
    for r in 0..n {
        for c in 0..n {
            for u in 0..d {
                let mut x = FMat::zero(field, n, n);
                x.at_mut(r, c).c[u] = Rat::from_integer(1.into());
                let mut img = x
                    .mul(&form.k_full)
                    .unwrap()
                    .add(&form.k_full.mul(&form.dag(&x)).unwrap())
                    .unwrap()
                    .to_sparse_components();
                if spec.family == Family::UnitaryC {
                    // F-trace components appended as extra output coordinates
                    let t = x.trace().unwrap();
                    for u in 0..d {
                        if !t.c[u].is_zero() {
                            img.push((n * n * d + u, t.c[u].clone()));
                        }
                    }
                }
                el.add_row(&img);
            }
        }
    }
    ncols - el.rank()
}

/// Build the full decomposition. Internal consistency failures (dependent
/// bases, brackets not closing, dimension mismatches) are construction
/// failures, never silent.
pub fn decompose(spec: &FamilySpec) -> Result<PairDecomposition> {
    let form = build_form(spec)?;
    let field = spec.field();
    let comp_dim = component_dim(spec);

    let g_enum = basis::g_block_basis(spec);
    let l_enum = basis::l_block_basis(spec);
    let z_cand = basis::center_candidate(spec);

    // block-diagonal subalgebra basis
    let mut d_basis: Vec<FMat> = Vec::new();
    d_basis.extend(g_enum.iter().cloned());
    d_basis.extend(l_enum.iter().cloned());
    if let Some(zc) = &z_cand {
        d_basis.push(zc.clone());
    }
    for b in &d_basis {
        if !form.in_h(b)? {
            return Err(Error::ConstructionFailure(format!(
                "block basis element violates the defining relation in {spec}"
            )));
        }
    }

    // z = (center of the block-diagonal subalgebra) ∩ (trace-orthocomplement of l),
    // solved in d-coordinates
    let nd = d_basis.len();
    let z = {
        let mut rows: Vec<SparseRow> = Vec::new();
        // centrality: [x, b_j] = 0 for all j, one row per output component
        for bj in &d_basis {
            let mut by_component: std::collections::BTreeMap<usize, SparseRow> =
                std::collections::BTreeMap::new();
            for (i, bi) in d_basis.iter().enumerate() {
                for (cidx, v) in bi.bracket(bj)?.to_sparse_components() {
                    by_component.entry(cidx).or_default().push((i, v));
                }
            }
            rows.extend(by_component.into_values());
        }
        // orthogonality to l
        for lm in &l_enum {
            let mut row: SparseRow = Vec::new();
            for (i, bi) in d_basis.iter().enumerate() {
                let t = trace_form(bi, lm)?;
                if !t.is_zero() {
                    row.push((i, t));
                }
            }
            rows.push(row);
        }
        let ker = kernel(nd, rows.into_iter());
        let mut out = Vec::new();
        for kv in &ker.basis {
            let mut m = FMat::zero(field, spec.total(), spec.total());
            for (i, coef) in kv.iter().enumerate() {
                if !coef.is_zero() {
                    m = m.add(&d_basis[i].scale(coef))?;
                }
            }
            out.push(m);
        }
        out
    };

    // g0 = canonical basis of [g, g]
    let g0 = {
        let mut vecs = Vec::new();
        for i in 0..g_enum.len() {
            for j in (i + 1)..g_enum.len() {
                let br = g_enum[i].bracket(&g_enum[j])?;
                if !br.is_zero() {
                    vecs.push(br.to_components());
                }
            }
        }
        let sub = Subspace::from_vectors(comp_dim, &vecs);
        sub.basis
            .iter()
            .map(|v| FMat::from_components(field, spec.total(), spec.total(), v))
            .collect::<Vec<_>>()
    };

    let p_rect = basis::p_rect_basis(spec);
    let p: Vec<FMat> = p_rect
        .iter()
        .map(|a| form.embed_p(a))
        .collect::<Result<_>>()?;

    let mut all: Vec<FMat> = Vec::new();
    all.extend(g0.iter().cloned());
    all.extend(z.iter().cloned());
    all.extend(l_enum.iter().cloned());
    all.extend(p.iter().cloned());
    let h_dim = all.len();

    // independence + coordinate solver
    let mut solver = CoordSolver::new(comp_dim);
    for (i, b) in all.iter().enumerate() {
        if !form.in_h(b)? {
            return Err(Error::ConstructionFailure(format!(
                "basis element {i} violates the defining relation in {spec}"
            )));
        }
        if !solver.insert(i, &b.to_sparse_components()) {
            return Err(Error::ConstructionFailure(format!(
                "dependent basis element {i} in {spec}"
            )));
        }
    }

    // the concatenated blocks must span h exactly
    let expected = defining_system_corank(spec, &form);
    if expected != h_dim {
        return Err(Error::ConstructionFailure(format!(
            "{spec}: block bases span {h_dim} dims but the defining system has corank {expected}"
        )));
    }

    // structure constants
    let mut brackets = Brackets::new(h_dim);
    for i in 0..h_dim {
        for j in (i + 1)..h_dim {
            let br = all[i].bracket(&all[j])?;
            if br.is_zero() {
                continue;
            }
            let co = solver
                .coords(&br.to_sparse_components(), h_dim)
                .ok_or_else(|| {
                    Error::ConstructionFailure(format!(
                        "bracket ({i},{j}) does not close in {spec}"
                    ))
                })?;
            let sparse: Vec<(usize, Rat)> = co
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            brackets.set(i, j, sparse);
        }
    }

    // trace-form Gram matrix
    let mut trace_gram = QMat::zero(h_dim, h_dim);
    for i in 0..h_dim {
        for j in i..h_dim {
            let t = trace_form(&all[i], &all[j])?;
            trace_gram.set(i, j, t.clone());
            trace_gram.set(j, i, t);
        }
    }

    Ok(PairDecomposition {
        spec: spec.clone(),
        form,
        g0,
        z,
        l: l_enum,
        p,
        p_rect,
        basis: all,
        h_dim,
        brackets,
        trace_gram,
        solver,
    })
}

// ---------------------------------------------------------------------------
// Exact invariant checks
// ---------------------------------------------------------------------------

impl PairDecomposition {
    /// Jacobi identity over all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let n = self.h_dim;
        for i in 0..n {
            for j in (i + 1)..n {
                let cij = self.brackets.get(i, j);
                for k in (j + 1)..n {
                    let mut acc = vec![Rat::zero(); n];
                    for (l, v) in &cij {
                        for (m, w) in self.brackets.get(*l, k) {
                            acc[m] += v * &w;
                        }
                    }
                    for (l, v) in self.brackets.get(j, k) {
                        for (m, w) in self.brackets.get(l, i) {
                            acc[m] += &v * &w;
                        }
                    }
                    for (l, v) in self.brackets.get(k, i) {
                        for (m, w) in self.brackets.get(l, j) {
                            acc[m] += &v * &w;
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every basis element satisfies the defining relation (and tracelessness
    /// for unitary-c).
    pub fn check_defining_relations(&self) -> bool {
        self.basis
            .iter()
            .all(|b| self.form.in_h(b).unwrap_or(false))
    }

    /// The four blocks are pairwise trace-orthogonal and the form on h is
    /// non-degenerate.
    pub fn check_orthogonality(&self) -> bool {
        for i in 0..self.h_dim {
            for j in (i + 1)..self.h_dim {
                if self.block_of(i) != self.block_of(j) && !self.trace_gram.at(i, j).is_zero() {
                    return false;
                }
            }
        }
        self.trace_gram.rank() == self.h_dim
    }

    /// [g, l] = 0, [g + l, p] in p, [p, p] in g + l.
    pub fn check_bracket_relations(&self) -> bool {
        let pr = self.p_range();
        for i in 0..self.h_dim {
            for j in (i + 1)..self.h_dim {
                let (bi, bj) = (self.block_of(i), self.block_of(j));
                let coords = self.brackets.get(i, j);
                let in_g_or_z = |b: usize| b == 0 || b == 1;
                if in_g_or_z(bi) && bj == 2 {
                    if !coords.is_empty() {
                        return false;
                    }
                } else if bi != 3 && bj == 3 {
                    if coords.iter().any(|(k, _)| !pr.contains(k)) {
                        return false;
                    }
                } else if bi == 3 && bj == 3 && coords.iter().any(|(k, _)| pr.contains(k)) {
                    return false;
                }
            }
        }
        true
    }

    /// The g + l action pulled back through the M_{n x m}(F) identification
    /// is (X + Y, A) -> X A - A Y, checked over all basis pairs.
    pub fn check_action_identity(&self) -> bool {
        let nb = self.spec.n_block();
        let mb = self.spec.m_block();
        let field = self.spec.field();
        let p_start = self.p_range().start;
        let diag_count = self.g0.len() + self.z.len() + self.l.len();
        for xi in 0..diag_count {
            let bx = &self.basis[xi];
            // split the diagonal element into its two blocks
            let mut xblk = FMat::zero(field, nb, nb);
            for r in 0..nb {
                for c in 0..nb {
                    *xblk.at_mut(r, c) = bx.at(r, c).clone();
                }
            }
            let mut yblk = FMat::zero(field, mb, mb);
            for r in 0..mb {
                for c in 0..mb {
                    *yblk.at_mut(r, c) = bx.at(nb + r, nb + c).clone();
                }
            }
            for (t, a) in self.p_rect.iter().enumerate() {
                let expect = match xblk.mul(a).and_then(|xa| xa.sub(&a.mul(&yblk)?)) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
                let coords = self.brackets.get(xi, p_start + t);
                let mut got = FMat::zero(field, nb, mb);
                let mut ok = true;
                for (k, v) in coords {
                    if k < p_start {
                        ok = false;
                        break;
                    }
                    got = match got.add(&self.p_rect[k - p_start].scale(&v)) {
                        Ok(g) => g,
                        Err(_) => return false,
                    };
                }
                if !ok || got != expect {
                    return false;
                }
            }
        }
        true
    }
}
