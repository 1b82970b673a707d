//! Matrices over R, C or H with exact rational components.

use crate::error::{Error, Result};
use crate::scalar::{FScalar, Field, Rat};
use num_traits::Zero;

/// Dense matrix with FScalar entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FScalar>,
}

impl FMat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        FMat {
            field,
            rows,
            cols,
            data: vec![FScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = FScalar::one(field);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &FScalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FScalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn check_same_shape(&self, other: &FMat) -> Result<()> {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidOperand(format!(
                "shape/tag mismatch: {}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FMat) -> Result<FMat> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FMat) -> Result<FMat> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> FMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> FMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.scale(r);
        }
        out
    }

    pub fn mul(&self, other: &FMat) -> Result<FMat> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::InvalidOperand(format!(
                "matrix product {}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        let mut out = FMat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(t, j);
                    if !b.is_zero() {
                        let term = a.mul(b)?;
                        let cur = out.at(i, j).add(&term)?;
                        *out.at_mut(i, j) = cur;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, other: &FMat) -> Result<FMat> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Plain transpose (entries kept, no conjugation).
    pub fn transpose(&self) -> FMat {
        let mut out = FMat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> FMat {
        let mut out = FMat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).conj();
            }
        }
        out
    }

    /// F-valued trace (square matrices).
    pub fn trace(&self) -> Result<FScalar> {
        if self.rows != self.cols {
            return Err(Error::InvalidOperand("trace of non-square matrix".into()));
        }
        let mut t = FScalar::zero(self.field);
        for i in 0..self.rows {
            t = t.add(self.at(i, i))?;
        }
        Ok(t)
    }

    /// Component vector over Q: entries in row-major order, each contributing
    /// its d components of (1, i, j, k). This is the fixed vectorization used
    /// by all subspace computations.
    pub fn to_components(&self) -> Vec<Rat> {
        let d = self.field.dim();
        let mut out = Vec::with_capacity(self.rows * self.cols * d);
        for e in &self.data {
            for u in 0..d {
                out.push(e.c[u].clone());
            }
        }
        out
    }

    /// Inverse of `to_components`.
    pub fn from_components(field: Field, rows: usize, cols: usize, v: &[Rat]) -> FMat {
        let d = field.dim();
        assert_eq!(v.len(), rows * cols * d);
        let mut m = FMat::zero(field, rows, cols);
        for (idx, e) in m.data.iter_mut().enumerate() {
            for u in 0..d {
                e.c[u] = v[idx * d + u].clone();
            }
        }
        m
    }

    /// Sparse component vector (index, value) pairs, same coordinate order.
    pub fn to_sparse_components(&self) -> Vec<(usize, Rat)> {
        let d = self.field.dim();
        let mut out = Vec::new();
        for (idx, e) in self.data.iter().enumerate() {
            for u in 0..d {
                if !e.c[u].is_zero() {
                    out.push((idx * d + u, e.c[u].clone()));
                }
            }
        }
        out
    }
}

/// Re(tr(X*Y)): the ad-invariant trace form used for all orthogonality.
pub fn trace_form(x: &FMat, y: &FMat) -> Result<Rat> {
    if x.field != y.field || x.cols != y.rows || x.rows != y.cols {
        return Err(Error::InvalidOperand(
            "trace form needs square-compatible matrices of one tag".into(),
        ));
    }
    // Re tr(XY) without materializing XY
    let mut acc = Rat::zero();
    for i in 0..x.rows {
        for t in 0..x.cols {
            let a = x.at(i, t);
            if a.is_zero() {
                continue;
            }
            let b = y.at(t, i);
            if !b.is_zero() {
                acc += a.mul(b)?.re().clone();
            }
        }
    }
    Ok(acc)
}
