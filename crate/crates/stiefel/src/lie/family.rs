//! The six families of symmetric pairs and their parameter handling.

use crate::error::{Error, Result};
use crate::scalar::Field;
use serde::Serialize;
use std::fmt;

/// Family of the pair (h, g + l): which form-preserving algebra h is, over
/// which field, and how the two diagonal blocks split it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// so(p,q) with g-block of signature (p-k, q-l) and l-block (k, l)
    OrthRR,
    /// su(n1+m1, n2+m2) with g = u(C^(n1,n2)), l = su(C^(m1,m2))
    UnitaryC,
    /// sp(n1+m1, n2+m2) quaternionic with g = sp(n1,n2), l = sp(m1,m2)
    UnitaryH,
    /// sp(n+m, R), g = sp(n,R), l = sp(m,R); n, m even
    SympR,
    /// sp(n+m, C) as a real algebra; n, m even
    SympC,
    /// so(n+m, C) as a real algebra, identity form
    OrthC,
}

pub const ALL_FAMILIES: [Family; 6] = [
    Family::OrthRR,
    Family::UnitaryC,
    Family::UnitaryH,
    Family::SympR,
    Family::SympC,
    Family::OrthC,
];

impl Family {
    pub fn field(self) -> Field {
        match self {
            Family::OrthRR | Family::SympR => Field::Real,
            Family::UnitaryC | Family::SympC | Family::OrthC => Field::Complex,
            Family::UnitaryH => Field::Quaternion,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Family::OrthRR => "orth-rr",
            Family::UnitaryC => "unitary-c",
            Family::UnitaryH => "unitary-h",
            Family::SympR => "symp-r",
            Family::SympC => "symp-c",
            Family::OrthC => "orth-c",
        }
    }

    pub fn from_cli_name(s: &str) -> Result<Family> {
        Ok(match s {
            "orth-rr" => Family::OrthRR,
            "unitary-c" => Family::UnitaryC,
            "unitary-h" => Family::UnitaryH,
            "symp-r" => Family::SympR,
            "symp-c" => Family::SympC,
            "orth-c" => Family::OrthC,
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "unknown family '{s}' (expected orth-rr|unitary-c|unitary-h|symp-r|symp-c|orth-c)"
                )))
            }
        })
    }

    /// Number of CLI parameters for this family.
    pub fn param_count(self) -> usize {
        match self {
            Family::OrthRR | Family::UnitaryC | Family::UnitaryH => 4,
            Family::SympR | Family::SympC | Family::OrthC => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cli_name())
    }
}

/// One family with concrete parameters. Signatures are kept per block:
/// `n_sig` is the g-block, `m_sig` the l-block; for the symplectic and
/// complex-orthogonal families the second signature component is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub n_sig: (usize, usize),
    pub m_sig: (usize, usize),
}

impl FamilySpec {
    /// Validate raw parameters. OrthRR takes (p, q, k, l) with k <= p, l <= q;
    /// the unitary families take (n1, n2, m1, m2); symplectic and complex
    /// orthogonal take (n, m), n and m even for symplectic. The g-block must
    /// be nonempty.
    pub fn new(family: Family, params: &[usize]) -> Result<FamilySpec> {
        if params.len() != family.param_count() {
            return Err(Error::InvalidSpec(format!(
                "{family} expects {} parameters, got {}",
                family.param_count(),
                params.len()
            )));
        }
        let (n_sig, m_sig) = match family {
            Family::OrthRR => {
                let (p, q, k, l) = (params[0], params[1], params[2], params[3]);
                if k > p || l > q {
                    return Err(Error::InvalidSpec(format!(
                        "orth-rr({p},{q};{k},{l}) needs k <= p and l <= q"
                    )));
                }
                ((p - k, q - l), (k, l))
            }
            Family::UnitaryC | Family::UnitaryH => {
                ((params[0], params[1]), (params[2], params[3]))
            }
            Family::SympR | Family::SympC => {
                let (n, m) = (params[0], params[1]);
                if n % 2 != 0 || m % 2 != 0 {
                    return Err(Error::InvalidSpec(format!(
                        "{family}({n};{m}) needs even block sizes"
                    )));
                }
                ((n, 0), (m, 0))
            }
            Family::OrthC => ((params[0], 0), (params[1], 0)),
        };
        if n_sig.0 + n_sig.1 == 0 {
            return Err(Error::InvalidSpec(format!(
                "{family}: empty g-block (the pair needs a nonempty G side)"
            )));
        }
        Ok(FamilySpec {
            family,
            params: params.to_vec(),
            n_sig,
            m_sig,
        })
    }

    pub fn n_block(&self) -> usize {
        self.n_sig.0 + self.n_sig.1
    }

    pub fn m_block(&self) -> usize {
        self.m_sig.0 + self.m_sig.1
    }

    pub fn total(&self) -> usize {
        self.n_block() + self.m_block()
    }

    pub fn field(&self) -> Field {
        self.family.field()
    }

    /// dim_R of p = M_{n x m}(F).
    pub fn p_dim(&self) -> usize {
        self.n_block() * self.m_block() * self.field().dim()
    }

    /// Theorem-scope flags: recorded, never enforced. A spec is in scope when
    /// the g-block has a nontrivial simple part acting with the expected
    /// commutant on F^n, and l is nonzero whenever p is (otherwise m equals h
    /// and Der(m) = ad(h) strictly contains ad(g+l)).
    pub fn theorem_scope(&self) -> (bool, Vec<String>) {
        let mut reasons = Vec::new();
        let n = self.n_block();
        let m = self.m_block();
        match self.family {
            Family::OrthRR | Family::OrthC => {
                if n < 3 {
                    reasons.push(format!(
                        "g = so({n}) block has no simple part / reducible commutant (needs n-block >= 3)"
                    ));
                }
                if m == 1 {
                    reasons.push("l = so(1) = 0 while p != 0".into());
                }
            }
            Family::UnitaryC => {
                if n < 2 {
                    reasons.push(format!(
                        "g = u({n}) has no simple part (needs n-block >= 2)"
                    ));
                }
                if m == 1 {
                    reasons.push("l = su(1) = 0 while p != 0".into());
                }
                if m == 0 {
                    reasons.push("m-block = 0: the u(1) direction of l0 has nothing to act on".into());
                }
            }
            Family::UnitaryH => {
                if n < 1 {
                    reasons.push("empty g-block".into());
                }
            }
            Family::SympR | Family::SympC => {
                if n < 2 {
                    reasons.push(format!("g = sp({n}) is trivial (needs n-block >= 2)"));
                }
            }
        }
        (reasons.is_empty(), reasons)
    }

    /// Whether the module-separation premise behind the g0-block-preservation
    /// statement holds: for an orthogonal g-block of size 3 the adjoint and
    /// standard representations of so(3) (or so(3,C)) are isomorphic, so the
    /// centralizer of ad(g0) genuinely mixes g0 with p there.
    pub fn block_preservation_applicable(&self) -> bool {
        let in_scope = self.theorem_scope().0;
        let orth3 = matches!(self.family, Family::OrthRR | Family::OrthC) && self.n_block() == 3;
        in_scope && !orth3
    }

    /// Predicted rank of Der(m) when the spec is in theorem scope.
    pub fn predicted_der_rank(&self, g_dim: usize, l_dim: usize) -> usize {
        g_dim + l_dim
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.family, p.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FamilySpec::new(Family::OrthRR, &[5, 0, 2, 0]).is_ok());
        assert!(FamilySpec::new(Family::OrthRR, &[2, 0, 3, 0]).is_err()); // k > p
        assert!(FamilySpec::new(Family::SympR, &[3, 2]).is_err()); // odd
        assert!(FamilySpec::new(Family::SympR, &[2, 2]).is_ok());
        assert!(FamilySpec::new(Family::UnitaryC, &[0, 0, 1, 0]).is_err()); // empty g
        assert!(FamilySpec::new(Family::OrthC, &[3]).is_err()); // arity
    }

    #[test]
    fn scope_flags() {
        let s = FamilySpec::new(Family::OrthRR, &[5, 0, 2, 0]).unwrap();
        assert!(s.theorem_scope().0);
        assert!(!s.block_preservation_applicable()); // orthogonal n-block = 3

        let s = FamilySpec::new(Family::OrthRR, &[6, 0, 2, 0]).unwrap();
        assert!(s.theorem_scope().0);
        assert!(s.block_preservation_applicable());

        // l = 0 with p != 0 is out of scope
        let s = FamilySpec::new(Family::UnitaryC, &[2, 0, 1, 0]).unwrap();
        assert!(!s.theorem_scope().0);
        let s = FamilySpec::new(Family::OrthRR, &[4, 0, 1, 0]).unwrap();
        assert!(!s.theorem_scope().0);

        // g without simple part
        let s = FamilySpec::new(Family::UnitaryC, &[1, 0, 1, 1]).unwrap();
        assert!(!s.theorem_scope().0);
        let s = FamilySpec::new(Family::OrthRR, &[4, 0, 2, 0]).unwrap();
        assert!(!s.theorem_scope().0);

        // m = 0 stays in scope outside unitary-c
        let s = FamilySpec::new(Family::OrthRR, &[3, 0, 0, 0]).unwrap();
        assert!(s.theorem_scope().0);
        let s = FamilySpec::new(Family::UnitaryH, &[1, 0, 0, 1]).unwrap();
        assert!(s.theorem_scope().0);
    }
}
