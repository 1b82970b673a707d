//! Exact scalars over R, C and H with rational components.
//!
//! Every scalar carries four rational components (coefficients of 1, i, j, k);
//! components at indices >= the field's real dimension are kept at zero. The
//! quaternion product uses the Hamilton convention i*j = k.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational number. Always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The coefficient field F of a family: R, C or H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    /// Real dimension d of the field: 1, 2 or 4.
    pub fn dim(self) -> usize {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Real => write!(f, "R"),
            Field::Complex => write!(f, "C"),
            Field::Quaternion => write!(f, "H"),
        }
    }
}

/// An element of R, C or H with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FScalar {
    pub field: Field,
    /// Coefficients of (1, i, j, k); entries at indices >= field.dim() are zero.
    pub c: [Rat; 4],
}

/// Signs and index table of the Hamilton product e_a * e_b = QTAB[a][b].1 * e_{QTAB[a][b].0}.
const QTAB: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, -1), (1, 1)],
    [(3, 1), (2, 1), (1, -1), (0, -1)],
];

impl FScalar {
    pub fn zero(field: Field) -> Self {
        FScalar {
            field,
            c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one(field: Field) -> Self {
        let mut s = Self::zero(field);
        s.c[0] = Rat::one();
        s
    }

    /// The basis unit e_u (1, i, j or k). Panics if u >= field.dim().
    pub fn unit(field: Field, u: usize) -> Self {
        assert!(u < field.dim(), "unit index out of range for {field}");
        let mut s = Self::zero(field);
        s.c[u] = Rat::one();
        s
    }

    pub fn from_rat(field: Field, r: Rat) -> Self {
        let mut s = Self::zero(field);
        s.c[0] = r;
        s
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Real component.
    pub fn re(&self) -> &Rat {
        &self.c[0]
    }

    fn check_tags(&self, other: &FScalar) -> Result<()> {
        if self.field != other.field {
            return Err(Error::InvalidOperand(format!(
                "field tag mismatch: {} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, b: &FScalar) -> Result<FScalar> {
        self.check_tags(b)?;
        let mut out = FScalar::zero(self.field);
        for u in 0..4 {
            out.c[u] = &self.c[u] + &b.c[u];
        }
        Ok(out)
    }

    pub fn sub(&self, b: &FScalar) -> Result<FScalar> {
        self.check_tags(b)?;
        let mut out = FScalar::zero(self.field);
        for u in 0..4 {
            out.c[u] = &self.c[u] - &b.c[u];
        }
        Ok(out)
    }

    pub fn neg(&self) -> FScalar {
        let mut out = FScalar::zero(self.field);
        for u in 0..4 {
            out.c[u] = -&self.c[u];
        }
        out
    }

    /// Product; for Quaternion the Hamilton convention i*j = k.
    pub fn mul(&self, b: &FScalar) -> Result<FScalar> {
        self.check_tags(b)?;
        let d = self.field.dim();
        let mut out = FScalar::zero(self.field);
        for a in 0..d {
            if self.c[a].is_zero() {
                continue;
            }
            for bb in 0..d {
                if b.c[bb].is_zero() {
                    continue;
                }
                let (idx, sg) = QTAB[a][bb];
                let term = &self.c[a] * &b.c[bb];
                if sg > 0 {
                    out.c[idx] += term;
                } else {
                    out.c[idx] -= term;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rat) -> FScalar {
        let mut out = FScalar::zero(self.field);
        for u in 0..4 {
            out.c[u] = &self.c[u] * r;
        }
        out
    }

    /// Conjugation: fixes the real component, negates the imaginary ones.
    pub fn conj(&self) -> FScalar {
        let mut out = self.clone();
        for u in 1..4 {
            out.c[u] = -&out.c[u];
        }
        out
    }
}

/// The d x d rational matrix of left multiplication by `a` in the ordered
/// basis (1, i, j, k) truncated to d; an injective algebra homomorphism.
pub fn realify_scalar(a: &FScalar) -> Vec<Vec<Rat>> {
    let d = a.field.dim();
    let mut m = vec![vec![Rat::zero(); d]; d];
    // column b holds the coordinates of a * e_b
    for b in 0..d {
        for x in 0..d {
            if a.c[x].is_zero() {
                continue;
            }
            let (idx, sg) = QTAB[x][b];
            let term = if sg > 0 { a.c[x].clone() } else { -&a.c[x] };
            m[idx][b] += term;
        }
    }
    m
}

/// Render a scalar as a short human-readable string, e.g. "1 - 3/2k".
impl fmt::Display for FScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "i", "j", "k"];
        let mut first = true;
        for u in 0..4 {
            if self.c[u].is_zero() {
                continue;
            }
            let v = &self.c[u];
            if first {
                if v.is_negative() {
                    write!(f, "-")?;
                }
            } else if v.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = v.abs();
            if u == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{}", NAMES[u])?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> FScalar {
        FScalar {
            field: Field::Quaternion,
            c: [rat_i(a), rat_i(b), rat_i(c), rat_i(d)],
        }
    }

    #[test]
    fn unit_products() {
        let i = FScalar::unit(Field::Quaternion, 1);
        let j = FScalar::unit(Field::Quaternion, 2);
        let k = FScalar::unit(Field::Quaternion, 3);
        // i*i = -1
        assert_eq!(i.mul(&i).unwrap(), q(-1, 0, 0, 0));
        // j*i = -k, forced by ij = k and anticommutativity
        assert_eq!(j.mul(&i).unwrap(), k.neg());
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&k).unwrap(), i);
        assert_eq!(k.mul(&i).unwrap(), j);
    }

    #[test]
    fn complex_norm_identity() {
        // (1+i)(1-i) = 2
        let mut a = FScalar::one(Field::Complex);
        a.c[1] = rat_i(1);
        let b = a.conj();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, FScalar::from_rat(Field::Complex, rat_i(2)));
    }

    #[test]
    fn tag_mismatch_rejected() {
        let a = FScalar::one(Field::Real);
        let b = FScalar::one(Field::Complex);
        assert!(matches!(a.mul(&b), Err(Error::InvalidOperand(_))));
    }

    #[test]
    fn conj_fixes_reals() {
        let r = FScalar::from_rat(Field::Real, rat(3, 2));
        assert_eq!(r.conj(), r);
        let x = q(1, 2, 3, 4);
        assert_eq!(x.conj(), q(1, -2, -3, -4));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn conj_norm_nonneg() {
        let x = q(2, -1, 5, 3);
        let n = x.conj().mul(&x).unwrap();
        assert!(n.re() > &Rat::zero());
        for u in 1..4 {
            assert!(n.c[u].is_zero());
        }
        let z = FScalar::zero(Field::Quaternion);
        assert!(z.conj().mul(&z).unwrap().is_zero());
    }

    #[test]
    fn realify_identity_and_rotation() {
        let one = FScalar::one(Field::Complex);
        let m = realify_scalar(&one);
        assert_eq!(m[0][0], rat_i(1));
        assert_eq!(m[1][1], rat_i(1));
        assert_eq!(m[0][1], rat_i(0));
        // realify(i) over C = [[0,-1],[1,0]]
        let i = FScalar::unit(Field::Complex, 1);
        let m = realify_scalar(&i);
        assert_eq!(m[0][0], rat_i(0));
        assert_eq!(m[0][1], rat_i(-1));
        assert_eq!(m[1][0], rat_i(1));
        assert_eq!(m[1][1], rat_i(0));
    }

    #[test]
    fn realify_is_homomorphism() {
        // realify(i) * realify(j) = realify(k) by direct 4x4 multiplication
        let i = FScalar::unit(Field::Quaternion, 1);
        let j = FScalar::unit(Field::Quaternion, 2);
        let k = FScalar::unit(Field::Quaternion, 3);
        let (mi, mj, mk) = (realify_scalar(&i), realify_scalar(&j), realify_scalar(&k));
        let mut prod = vec![vec![Rat::zero(); 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                for t in 0..4 {
                    prod[r][c] += &mi[r][t] * &mj[t][c];
                }
            }
        }
        assert_eq!(prod, mk);
    }
}
