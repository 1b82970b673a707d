//! Exact linear algebra over Q: streaming sparse elimination, kernels and
//! canonical-form subspaces.
//!
//! The large solves (derivation spaces have dim(m)^2 unknowns and up to
//! dim(m)^3/2 constraint rows) never materialize a dense constraint matrix:
//! rows are streamed into an echelon set kept in fraction-free integer form,
//! with content stripping after every combination and pivots chosen by
//! smallest coefficient magnitude to limit growth and fill.

use crate::error::{Error, Result};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse rational row: strictly increasing column indices, nonzero entries.
pub type SparseRow = Vec<(usize, Rat)>;

/// Dense rational matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &QMat) -> Result<QMat> {
        if self.cols != other.rows {
            return Err(Error::InvalidOperand(format!(
                "matrix product {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(t, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact rank via elimination.
    pub fn rank(&self) -> usize {
        let mut el = Eliminator::new(self.cols);
        for r in 0..self.rows {
            let row: SparseRow = self
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            el.add_row(&row);
        }
        el.rank()
    }
}

// ---------------------------------------------------------------------------
// Streaming fraction-free eliminator
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct IntRow {
    /// sorted by column, entries nonzero, gcd of entries = 1
    entries: Vec<(u32, BigInt)>,
    pivot_col: u32,
    pivot_val: BigInt,
}

/// Incremental echelon form over Q in fraction-free integer representation.
///
/// Rows are reduced against existing pivot rows on arrival; a surviving row is
/// content-stripped and becomes a new pivot. Pivot choice inside a row:
/// smallest |coefficient|, ties broken by smallest column index. Pivot rows
/// are only reduced against rows older than themselves, so back-substitution
/// walks rows in reverse creation order.
#[derive(Debug, Clone)]
pub struct Eliminator {
    ncols: usize,
    rows: Vec<IntRow>,
    /// column -> index into `rows`
    pivot_of_col: Vec<Option<u32>>,
}

fn content_strip(entries: &mut Vec<(u32, BigInt)>) {
    let mut g = BigInt::zero();
    for (_, v) in entries.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_one() || g.is_zero() {
        return;
    }
    for (_, v) in entries.iter_mut() {
        *v = &*v / &g;
    }
}

/// Outcome of a pivot-limited row insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOutcome {
    /// reduced to zero against the echelon set
    Dependent,
    /// became a new pivot row
    Added,
    /// nonzero but supported only at or past the pivot limit
    OnlyPastLimit,
}

/// dst = p_dst * dst - c * src, merged by column; result sorted, zero-free.
fn combine(
    dst: &[(u32, BigInt)],
    p_dst: &BigInt,
    c: &BigInt,
    src: &[(u32, BigInt)],
) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < dst.len() || j < src.len() {
        if j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push((dst[i].0, p_dst * &dst[i].1));
            i += 1;
        } else if i >= dst.len() || src[j].0 < dst[i].0 {
            out.push((src[j].0, -(c * &src[j].1)));
            j += 1;
        } else {
            let v = p_dst * &dst[i].1 - c * &src[j].1;
            if !v.is_zero() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Eliminator {
    pub fn new(ncols: usize) -> Self {
        Eliminator {
            ncols,
            rows: Vec::new(),
            pivot_of_col: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn to_int_row(row: &SparseRow) -> Vec<(u32, BigInt)> {
        // clear denominators by their lcm
        let mut lcm = BigInt::one();
        for (_, v) in row {
            lcm = lcm.lcm(v.denom());
        }
        let mut scaled: Vec<(u32, BigInt)> = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c as u32, v.numer() * (&lcm / v.denom())))
            .collect();
        scaled.sort_by_key(|e| e.0);
        // merge duplicate columns
        let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(scaled.len());
        for (c, v) in scaled {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        content_strip(&mut out);
        out
    }

    /// Fully reduce an integer row against the echelon set. Pivot columns are
    /// eliminated oldest-row-first, which terminates because a pivot row's
    /// support only meets pivot columns of rows created after it.
    fn reduce_int(&self, mut r: Vec<(u32, BigInt)>) -> Vec<(u32, BigInt)> {
        loop {
            let mut best: Option<(u32, u32)> = None; // (row_creation_idx, col)
            for (c, _) in &r {
                if let Some(ri) = self.pivot_of_col[*c as usize] {
                    if best.map_or(true, |(b, _)| ri < b) {
                        best = Some((ri, *c));
                    }
                }
            }
            let Some((ri, col)) = best else {
                return r;
            };
            let p = &self.rows[ri as usize];
            let c = r
                .iter()
                .find(|(cc, _)| *cc == col)
                .map(|(_, v)| v.clone())
                .unwrap();
            r = combine(&r, &p.pivot_val, &c, &p.entries);
            content_strip(&mut r);
        }
    }

    /// Insert one constraint row. Returns true if the rank increased.
    pub fn add_row(&mut self, row: &SparseRow) -> bool {
        matches!(self.add_row_with_limit(row, self.ncols), RowOutcome::Added)
    }

    /// Insert a row whose pivot must sit in a column below `limit`. A row
    /// that survives reduction but has support only at or past the limit is
    /// reported, not inserted (used for augmented right-hand-side columns).
    pub fn add_row_with_limit(&mut self, row: &SparseRow, limit: usize) -> RowOutcome {
        let r = Self::to_int_row(row);
        self.add_int_row(r, limit as u32)
    }

    fn add_int_row(&mut self, r: Vec<(u32, BigInt)>, limit: u32) -> RowOutcome {
        let mut r = self.reduce_int(r);
        if r.is_empty() {
            return RowOutcome::Dependent;
        }
        // smallest |coefficient| pivot among eligible columns, ties by index
        let mut best = usize::MAX;
        for idx in 0..r.len() {
            if r[idx].0 >= limit {
                continue;
            }
            if best == usize::MAX {
                best = idx;
                continue;
            }
            let (bc, bv) = (&r[best].0, r[best].1.magnitude());
            let (cc, cv) = (&r[idx].0, r[idx].1.magnitude());
            if cv < bv || (cv == bv && cc < bc) {
                best = idx;
            }
        }
        if best == usize::MAX {
            return RowOutcome::OnlyPastLimit;
        }
        let pivot_col = r[best].0;
        if r[best].1.is_negative() {
            for (_, v) in r.iter_mut() {
                *v = -&*v;
            }
        }
        let pivot_val = r[best].1.clone();
        let created = self.rows.len() as u32;
        self.pivot_of_col[pivot_col as usize] = Some(created);
        self.rows.push(IntRow {
            entries: r,
            pivot_col,
            pivot_val,
        });
        RowOutcome::Added
    }

    /// Does the vector reduce to zero against the echelon set?
    pub fn reduces_to_zero(&self, row: &SparseRow) -> bool {
        self.reduce_int(Self::to_int_row(row)).is_empty()
    }

    /// Kernel of the accumulated constraint system (rows * x = 0), one basis
    /// vector per free column, via back-substitution in reverse creation order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.reverse();
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| self.pivot_of_col[*c].is_none())
            .collect();
        let mut out = Vec::with_capacity(free.len());
        for f in free {
            let mut v = vec![Rat::zero(); self.ncols];
            v[f] = Rat::one();
            for &ri in &order {
                let row = &self.rows[ri];
                let mut acc = Rat::zero();
                for (c, coef) in &row.entries {
                    let c = *c as usize;
                    if c != row.pivot_col as usize && !v[c].is_zero() {
                        acc += Rat::from_integer(coef.clone()) * &v[c];
                    }
                }
                if !acc.is_zero() {
                    v[row.pivot_col as usize] = -acc / Rat::from_integer(row.pivot_val.clone());
                }
            }
            out.push(v);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Canonical subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of Q^ambient in canonical form: basis rows in reduced row
/// echelon form with strictly increasing pivot columns and leading ones.
/// Canonicity makes equality of spans a literal matrix comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// RREF basis rows (dense).
    pub basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Canonical RREF basis of the span of the given vectors.
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Subspace {
        // forward pass
        let mut rows: Vec<(usize, Vec<Rat>)> = Vec::new(); // (pivot col, row)
        for vec in vectors {
            assert_eq!(vec.len(), ambient_dim);
            let mut v = vec.clone();
            for (pc, r) in &rows {
                if !v[*pc].is_zero() {
                    let f = v[*pc].clone();
                    for c in 0..ambient_dim {
                        if !r[c].is_zero() {
                            let t = &f * &r[c];
                            v[c] -= t;
                        }
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let lead = v[pc].clone();
                for x in v.iter_mut() {
                    *x /= lead.clone();
                }
                rows.push((pc, v));
            }
        }
        rows.sort_by_key(|(pc, _)| *pc);
        // back-eliminate
        for i in 0..rows.len() {
            let (pc, row) = (rows[i].0, rows[i].1.clone());
            for (j, (_, other)) in rows.iter_mut().enumerate() {
                if j != i && !other[pc].is_zero() {
                    let f = other[pc].clone();
                    for c in 0..ambient_dim {
                        if !row[c].is_zero() {
                            let t = &f * &row[c];
                            other[c] -= t;
                        }
                    }
                }
            }
        }
        Subspace {
            ambient_dim,
            basis: rows.into_iter().map(|(_, r)| r).collect(),
        }
    }

    /// True iff the two RREF bases are identical matrices.
    pub fn span_equal(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::InvalidOperand(format!(
                "ambient dimension mismatch: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(self.basis == other.basis)
    }

    /// True iff v reduces to zero against the basis.
    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::InvalidOperand(format!(
                "vector length {} vs ambient {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut v = v.to_vec();
        for row in &self.basis {
            // rows are RREF: the pivot is the first nonzero entry and equals one
            let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for c in 0..self.ambient_dim {
                    if !row[c].is_zero() {
                        let t = &f * &row[c];
                        v[c] -= t;
                    }
                }
            }
        }
        Ok(v.iter().all(|x| x.is_zero()))
    }
}

/// Full solution space of `constraints * x = 0` as a canonical subspace.
/// An empty constraint set yields the full space.
pub fn kernel(ncols: usize, constraints: impl Iterator<Item = SparseRow>) -> Subspace {
    kernel_bounded(ncols, constraints, None).0
}

/// Kernel with a certified early exit: if `stop_at_dim` is reached the
/// remaining constraint rows cannot cut further (the caller guarantees a
/// subspace of that dimension inside the kernel), so streaming stops.
/// Returns the subspace and whether the early exit fired.
pub fn kernel_bounded(
    ncols: usize,
    constraints: impl Iterator<Item = SparseRow>,
    stop_at_dim: Option<usize>,
) -> (Subspace, bool) {
    let mut el = Eliminator::new(ncols);
    let mut early = false;
    for row in constraints {
        el.add_row(&row);
        if let Some(target) = stop_at_dim {
            if ncols - el.rank() == target {
                early = true;
                break;
            }
        }
    }
    let basis = el.kernel_basis();
    (Subspace::from_vectors(ncols, &basis), early)
}

/// Solve `A x = b` for one exact solution, where rows stream as
/// (sparse row of A, rhs entry). Returns None when inconsistent.
/// The homogeneous system is augmented with the rhs as an extra column; the
/// system is inconsistent exactly when that column becomes a pivot.
pub fn solve_linear(
    ncols: usize,
    rows: impl Iterator<Item = (SparseRow, Rat)>,
) -> Option<Vec<Rat>> {
    let mut el = Eliminator::new(ncols + 1);
    for (mut row, rhs) in rows {
        if !rhs.is_zero() {
            row.push((ncols, rhs));
        }
        // a row surviving with support only in the augmented column means
        // rank of [A|b] exceeds rank of A: no solution
        if el.add_row_with_limit(&row, ncols) == RowOutcome::OnlyPastLimit {
            return None;
        }
    }
    // particular solution: free variables zero, augmented column coordinate -1
    let mut v = vec![Rat::zero(); ncols + 1];
    v[ncols] = -Rat::one();
    let mut order: Vec<usize> = (0..el.rows.len()).collect();
    order.reverse();
    for ri in order {
        let row = &el.rows[ri];
        let mut acc = Rat::zero();
        for (c, coef) in &row.entries {
            let c = *c as usize;
            if c != row.pivot_col as usize && !v[c].is_zero() {
                acc += Rat::from_integer(coef.clone()) * &v[c];
            }
        }
        if !acc.is_zero() {
            v[row.pivot_col as usize] = -acc / Rat::from_integer(row.pivot_val.clone());
        }
    }
    v.truncate(ncols);
    Some(v)
}
