//! Pinned non-derivation witnesses: the three hand-picked triples, with their
//! matrices encoded verbatim, reproduce as exact bracket identities.

mod common;

use common::{build, m_bracket, rmat, scalar_at, times};
use stiefel::deriv;
use stiefel::fmat::FMat;
use stiefel::lie::Family;
use stiefel::scalar::{FScalar, Field};

/// so(4) with g = l = so(2): the triple (x0, x1, x2) breaks the Leibniz
/// identity with ad_{x0}[x1,x2]_m = x3 while the expanded side vanishes.
#[test]
fn so4_witness_triple() {
    let (dec, m) = build(Family::OrthRR, &[4, 0, 2, 0]);
    let f = Field::Real;
    let a0 = rmat(f, &[&[-1, 0], &[0, 0]]);
    let a1 = rmat(f, &[&[0, -1], &[0, 0]]);
    let a2 = rmat(f, &[&[0, 0], &[0, 1]]);
    let a3 = rmat(f, &[&[0, 0], &[-1, 0]]);
    let [x0, x1, x2, x3] =
        [a0, a1, a2, a3].map(|a| dec.form.embed_p(&a).expect("embed"));

    let b12 = m_bracket(&dec, &m, &x1, &x2);
    let lhs = m_bracket(&dec, &m, &x0, &b12);
    assert_eq!(lhs, x3, "ad_x0 [x1,x2]_m = x3");

    let t1 = m_bracket(&dec, &m, &m_bracket(&dec, &m, &x0, &x1), &x2);
    let t2 = m_bracket(&dec, &m, &x1, &m_bracket(&dec, &m, &x0, &x2));
    assert!(
        t1.add(&t2).unwrap().is_zero(),
        "[ad_x0 x1, x2]_m + [x1, ad_x0 x2]_m = 0"
    );

    // hence ad_{x0} is not a derivation, and the generic search agrees
    assert!(deriv::witness_non_derivation(&m).is_some());
}

/// sp(2) with g = l = sp(1): the quaternionic identities
/// [[x1,xi]_m, xj]_m = [xi,[x1,xj]_m]_m = -[x1,[xi,xj]_m]_m = 2 x_k.
#[test]
fn sp2_quaternionic_triple() {
    let (dec, m) = build(Family::UnitaryH, &[1, 0, 1, 0]);
    let f = Field::Quaternion;
    let x_sigma = |u: usize| -> FMat {
        // [[0, sigma], [-conj(sigma), 0]] = embed of the 1x1 block (sigma)
        let a = scalar_at(f, 1, 1, 0, 0, FScalar::unit(f, u));
        dec.form.embed_p(&a).expect("embed")
    };
    let (x1, xi, xj, xk) = (x_sigma(0), x_sigma(1), x_sigma(2), x_sigma(3));
    let two_xk = times(&xk, 2);

    let e1 = m_bracket(&dec, &m, &m_bracket(&dec, &m, &x1, &xi), &xj);
    assert_eq!(e1, two_xk, "[[x1,xi]_m, xj]_m = 2 x_k");

    let e2 = m_bracket(&dec, &m, &xi, &m_bracket(&dec, &m, &x1, &xj));
    assert_eq!(e2, two_xk, "[xi,[x1,xj]_m]_m = 2 x_k");

    let e3 = m_bracket(&dec, &m, &x1, &m_bracket(&dec, &m, &xi, &xj)).neg();
    assert_eq!(e3, two_xk, "-[x1,[xi,xj]_m]_m = 2 x_k");

    // Leibniz fails on (x1; xi, xj): lhs = -2 x_k vs rhs = 4 x_k
    let lhs = m_bracket(&dec, &m, &x1, &m_bracket(&dec, &m, &xi, &xj));
    let rhs = m_bracket(&dec, &m, &m_bracket(&dec, &m, &x1, &xi), &xj)
        .add(&m_bracket(&dec, &m, &xi, &m_bracket(&dec, &m, &x1, &xj)))
        .unwrap();
    assert_ne!(lhs, rhs);
    assert!(deriv::witness_non_derivation(&m).is_some());
}

/// su(2,1) with g = u(1), l = su(2): the X/Y families give
/// [X1,[Y1,Yi]_m]_m = 3 Xi with vanishing Leibniz expansion. (The projection
/// onto the trace-corrected u(1) makes the exact coefficient 3.)
#[test]
fn su21_complex_triple() {
    let (dec, m) = build(Family::UnitaryC, &[0, 1, 2, 0]);
    let f = Field::Complex;
    let p_elt = |slot: usize, u: usize| -> FMat {
        let a = scalar_at(f, 1, 2, 0, slot, FScalar::unit(f, u));
        dec.form.embed_p(&a).expect("embed")
    };
    let (x1, xi) = (p_elt(0, 0), p_elt(0, 1));
    let (y1, yi) = (p_elt(1, 0), p_elt(1, 1));

    let inner = m_bracket(&dec, &m, &y1, &yi);
    let lhs = m_bracket(&dec, &m, &x1, &inner);
    assert_eq!(lhs, times(&xi, 3), "[X1,[Y1,Yi]_m]_m = 3 Xi");

    let t1 = m_bracket(&dec, &m, &m_bracket(&dec, &m, &x1, &y1), &yi);
    let t2 = m_bracket(&dec, &m, &y1, &m_bracket(&dec, &m, &x1, &yi));
    assert!(t1.is_zero() && t2.is_zero(), "Leibniz expansion vanishes");

    // the mirrored triple behaves the same way
    let inner = m_bracket(&dec, &m, &x1, &xi);
    let lhs = m_bracket(&dec, &m, &y1, &inner);
    assert_eq!(lhs, times(&yi, 3), "[Y1,[X1,Xi]_m]_m = 3 Yi");

    assert!(deriv::witness_non_derivation(&m).is_some());
}

/// The generic witness search returns the first violating triple in canonical
/// order and its recorded sides recompute exactly.
#[test]
fn witness_search_is_canonical_and_consistent() {
    for (fam, params) in [
        (Family::OrthRR, vec![5usize, 0, 2, 0]),
        (Family::UnitaryH, vec![1, 0, 0, 1]),
        (Family::SympR, vec![2, 2]),
    ] {
        let (_, m) = build(fam, &params);
        let w = deriv::witness_non_derivation(&m).expect("witness exists");
        assert!(w.x >= m.p_start());
        assert!(w.y < w.z);
        // recompute both sides from the structure constants
        let mut ex = vec![stiefel::scalar::rat_i(0); m.dim];
        ex[w.x] = stiefel::scalar::rat_i(1);
        let mut ey = ex.clone();
        ey[w.x] = stiefel::scalar::rat_i(0);
        ey[w.y] = stiefel::scalar::rat_i(1);
        let mut ez = ex.clone();
        ez[w.x] = stiefel::scalar::rat_i(0);
        ez[w.z] = stiefel::scalar::rat_i(1);
        let lhs = m.bracket_vec(&ex, &m.bracket_vec(&ey, &ez));
        let mut rhs = m.bracket_vec(&m.bracket_vec(&ex, &ey), &ez);
        for (r, v) in rhs.iter_mut().zip(m.bracket_vec(&ey, &m.bracket_vec(&ex, &ez))) {
            *r += v;
        }
        assert_ne!(lhs, rhs);
        let lhs_strings: Vec<String> = lhs.iter().map(|r| r.to_string()).collect();
        let rhs_strings: Vec<String> = rhs.iter().map(|r| r.to_string()).collect();
        assert_eq!(lhs_strings, w.lhs);
        assert_eq!(rhs_strings, w.rhs);
    }
}
