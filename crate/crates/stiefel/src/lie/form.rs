//! Defining forms, the hat operator and the block embedding of p.

use crate::error::{Error, Result};
use crate::fmat::FMat;
use crate::lie::family::{Family, FamilySpec};
use crate::scalar::{FScalar, Field};

/// Whether the defining relation uses the transpose or conjugate transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dagger {
    Transpose,
    ConjTranspose,
}

/// Form data of one spec: K_N = diag(K_n, K_m), with K^2 = eps * I.
#[derive(Debug, Clone)]
pub struct FormData {
    pub spec: FamilySpec,
    pub field: Field,
    pub k_n: FMat,
    pub k_m: FMat,
    pub k_full: FMat,
    /// -1 for the symplectic families, +1 otherwise
    pub eps: i64,
    pub dagger: Dagger,
}

fn sig_form(field: Field, sig: (usize, usize)) -> FMat {
    let n = sig.0 + sig.1;
    let mut m = FMat::zero(field, n, n);
    for a in 0..n {
        let one = FScalar::one(field);
        *m.at_mut(a, a) = if a < sig.0 { one } else { one.neg() };
    }
    m
}

fn symp_form(field: Field, n: usize) -> FMat {
    let h = n / 2;
    let mut m = FMat::zero(field, n, n);
    for a in 0..h {
        *m.at_mut(a, h + a) = FScalar::one(field);
        *m.at_mut(h + a, a) = FScalar::one(field).neg();
    }
    m
}

/// Build K_N, K_n, K_m, the sign eps and the dagger flavor for a spec.
pub fn build_form(spec: &FamilySpec) -> Result<FormData> {
    let field = spec.field();
    let (k_n, k_m, eps, dagger) = match spec.family {
        Family::OrthRR => (
            sig_form(field, spec.n_sig),
            sig_form(field, spec.m_sig),
            1,
            Dagger::Transpose,
        ),
        Family::UnitaryC | Family::UnitaryH => (
            sig_form(field, spec.n_sig),
            sig_form(field, spec.m_sig),
            1,
            Dagger::ConjTranspose,
        ),
        Family::SympR | Family::SympC => (
            symp_form(field, spec.n_block()),
            symp_form(field, spec.m_block()),
            -1,
            Dagger::Transpose,
        ),
        Family::OrthC => (
            FMat::identity(field, spec.n_block()),
            FMat::identity(field, spec.m_block()),
            1,
            Dagger::Transpose,
        ),
    };
    let n = spec.total();
    let mut k_full = FMat::zero(field, n, n);
    let nb = spec.n_block();
    for r in 0..nb {
        for c in 0..nb {
            *k_full.at_mut(r, c) = k_n.at(r, c).clone();
        }
    }
    for r in 0..spec.m_block() {
        for c in 0..spec.m_block() {
            *k_full.at_mut(nb + r, nb + c) = k_m.at(r, c).clone();
        }
    }
    Ok(FormData {
        spec: spec.clone(),
        field,
        k_n,
        k_m,
        k_full,
        eps,
        dagger,
    })
}

impl FormData {
    pub fn dag(&self, m: &FMat) -> FMat {
        match self.dagger {
            Dagger::Transpose => m.transpose(),
            Dagger::ConjTranspose => m.conj_transpose(),
        }
    }

    /// The form-adjoint of a rectangular block: hat(A) = eps * K_m * A^dag * K_n,
    /// the unique matrix with B_n(A x, y) = B_m(x, hat(A) y).
    pub fn hat(&self, a: &FMat) -> Result<FMat> {
        if a.rows != self.spec.n_block() || a.cols != self.spec.m_block() {
            return Err(Error::InvalidOperand(format!(
                "hat expects an n-block x m-block matrix, got {}x{}",
                a.rows, a.cols
            )));
        }
        let mut h = self.k_m.mul(&self.dag(a))?.mul(&self.k_n)?;
        if self.eps < 0 {
            h = h.neg();
        }
        Ok(h)
    }

    /// Block embedding A -> [[0, A], [-hat(A), 0]] into h.
    pub fn embed_p(&self, a: &FMat) -> Result<FMat> {
        let hat = self.hat(a)?;
        let (nb, mb, n) = (self.spec.n_block(), self.spec.m_block(), self.spec.total());
        let mut out = FMat::zero(self.field, n, n);
        for r in 0..nb {
            for c in 0..mb {
                *out.at_mut(r, nb + c) = a.at(r, c).clone();
            }
        }
        for r in 0..mb {
            for c in 0..nb {
                *out.at_mut(nb + r, c) = hat.at(r, c).neg();
            }
        }
        Ok(out)
    }

    /// The g-valued antisymmetric form on p: B(A,B) = B*hat(A) - A*hat(B),
    /// the g-block component of [embed(A), embed(B)].
    pub fn curly_b(&self, a: &FMat, b: &FMat) -> Result<FMat> {
        let t1 = b.mul(&self.hat(a)?)?;
        let t2 = a.mul(&self.hat(b)?)?;
        t1.sub(&t2)
    }

    /// The defining pairing B_s(u, v) = v^dag K_s u on a block (s = n or m),
    /// with u, v given as column vectors over F.
    pub fn pair(&self, on_n_block: bool, u: &FMat, v: &FMat) -> Result<FScalar> {
        let k = if on_n_block { &self.k_n } else { &self.k_m };
        let p = self.dag(v).mul(&k.mul(u)?)?;
        if p.rows != 1 || p.cols != 1 {
            return Err(Error::InvalidOperand("pairing expects column vectors".into()));
        }
        Ok(p.at(0, 0).clone())
    }

    /// Membership in h: X K_N + K_N X^dag = 0, plus zero F-trace for unitary-c.
    pub fn in_h(&self, x: &FMat) -> Result<bool> {
        let lhs = x.mul(&self.k_full)?.add(&self.k_full.mul(&self.dag(x))?)?;
        if !lhs.is_zero() {
            return Ok(false);
        }
        if self.spec.family == Family::UnitaryC && !x.trace()?.is_zero() {
            return Ok(false);
        }
        Ok(true)
    }
}
