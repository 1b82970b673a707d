//! Search for concrete violations of the derivation identity by ad_x, x in p.

use crate::deriv::endo::EndoSubspace;
use crate::lie::MAlgebra;
use crate::scalar::Rat;
use num_traits::Zero;
use serde::Serialize;

/// A triple witnessing ad_x not a derivation of m: the two sides of the
/// Leibniz identity disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// m-basis indices of the triple (x in p; y, z in m)
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// coordinates of `ad_x([y,z]_m)`
    pub lhs: Vec<String>,
    /// coordinates of `[ad_x y, z]_m + [y, ad_x z]_m`
    pub rhs: Vec<String>,
}

fn apply_bracket(m: &MAlgebra, x: usize, coords: &[(usize, Rat)]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); m.dim];
    for (l, v) in coords {
        for (k, w) in m.brackets.get(x, *l) {
            out[k] += v * &w;
        }
    }
    out
}

/// First basis triple (x over the p basis, then (y, z) lexicographic over
/// m-basis pairs) violating the derivation identity, or None when every
/// basis x in p gives a derivation.
pub fn witness_non_derivation(m: &MAlgebra) -> Option<Witness> {
    let ps = m.p_start();
    for x in ps..m.dim {
        for y in 0..m.dim {
            for z in (y + 1)..m.dim {
                let lhs = apply_bracket(m, x, &m.brackets.get(y, z));
                let mut rhs = vec![Rat::zero(); m.dim];
                for (a, v) in m.brackets.get(x, y) {
                    for (k, w) in m.brackets.get(a, z) {
                        rhs[k] += &v * &w;
                    }
                }
                for (a, v) in m.brackets.get(x, z) {
                    for (k, w) in m.brackets.get(y, a) {
                        rhs[k] += &v * &w;
                    }
                }
                if lhs != rhs {
                    return Some(Witness {
                        x,
                        y,
                        z,
                        lhs: lhs.iter().map(|r| r.to_string()).collect(),
                        rhs: rhs.iter().map(|r| r.to_string()).collect(),
                    });
                }
            }
        }
    }
    None
}

/// For every basis x in p, ad_x|m (as an element of End(m)) fails containment
/// in the given derivation space. Vacuously true when p = 0.
pub fn all_p_ads_outside(m: &MAlgebra, der: &EndoSubspace) -> bool {
    let ps = m.p_start();
    for x in ps..m.dim {
        let mat = m.brackets.ad_matrix(x);
        let flat = crate::deriv::endo::flatten(&mat);
        match der.subspace.contains(&flat) {
            Ok(true) => return false,
            Ok(false) => {}
            Err(_) => return false,
        }
    }
    true
}
