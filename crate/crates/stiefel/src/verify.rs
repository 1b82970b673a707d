//! Full verification of one spec: construction, structural invariants, the
//! derivation computation and the homomorphism classification.

use crate::deriv;
use crate::deriv::endo::flatten;
use crate::error::Result;
use crate::fmat::FMat;
use crate::lie::{build_m_algebra, decompose, Family, FamilySpec};
use crate::linalg::Eliminator;
use crate::report::{BlockPreservation, Checks, Dims, Report, SpecEcho, SCHEMA_VERSION};
use crate::scalar::Rat;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

/// Above this dim(m) the centralizer solve (dim^2 unknowns with dense kernel)
/// is skipped in reports; the block-preservation criterion only concerns
/// small specs.
pub const CENTRALIZER_DIM_CAP: usize = 30;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_dim: usize,
    pub with_timings: bool,
    /// skip the centralizer solve regardless of size (sweep rows)
    pub skip_centralizer: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_dim: 40,
            with_timings: false,
            skip_centralizer: false,
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let n = rng.gen_range(-9i64..=9);
    let d = rng.gen_range(1i64..=9);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn random_fmat(rng: &mut ChaCha8Rng, field: crate::scalar::Field, r: usize, c: usize) -> FMat {
    let mut m = FMat::zero(field, r, c);
    for e in m.data.iter_mut() {
        for u in 0..field.dim() {
            e.c[u] = random_rat(rng);
        }
    }
    m
}

/// The defining-form adjoint identity B_n(Ax, y) = B_m(x, hat(A) y) on
/// `trials` random rational triples. Vacuous for an empty m-block.
pub fn check_hat_adjoint(spec: &FamilySpec, trials: usize) -> Result<bool> {
    let form = crate::lie::build_form(spec)?;
    let (nb, mb) = (spec.n_block(), spec.m_block());
    if mb == 0 {
        return Ok(true);
    }
    let field = spec.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f1e_fe1d);
    for _ in 0..trials {
        let a = random_fmat(&mut rng, field, nb, mb);
        let x = random_fmat(&mut rng, field, mb, 1);
        let y = random_fmat(&mut rng, field, nb, 1);
        let lhs = form.pair(true, &a.mul(&x)?, &y)?;
        let rhs = form.pair(false, &x, &form.hat(&a)?.mul(&y)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the linear map x -> ad_x|p over the g = g0 + z basis; faithfulness
/// of the g-action on p means this equals dim g (p != 0 permitting).
fn g0z_action_on_p_rank(dec: &crate::lie::PairDecomposition) -> usize {
    let pd = dec.p_rect.len();
    let g_dim = dec.g0.len() + dec.z.len();
    let p_start = dec.p_range().start;
    let mut el = Eliminator::new(pd * pd);
    for x in 0..g_dim {
        let mut row: Vec<(usize, Rat)> = Vec::new();
        for b in 0..pd {
            for (k, v) in dec.brackets.get(x, p_start + b) {
                row.push(((k - p_start) * pd + b, v));
            }
        }
        row.sort_by_key(|e| e.0);
        el.add_row(&row);
    }
    el.rank()
}

pub fn verify(spec: &FamilySpec, opts: &VerifyOptions) -> Result<Report> {
    let mut timings: BTreeMap<String, u128> = BTreeMap::new();
    let mut mark = Instant::now();
    let mut lap = |timings: &mut BTreeMap<String, u128>, name: &str| {
        let now = Instant::now();
        timings.insert(name.to_string(), (now - mark).as_millis());
        mark = now;
    };

    let (in_scope, scope_reasons) = spec.theorem_scope();

    let dec = decompose(spec)?;
    let m = build_m_algebra(&dec)?;
    let dims = Dims {
        h: dec.h_dim,
        g0: dec.g0.len(),
        z: dec.z.len(),
        l: dec.l.len(),
        p: dec.p.len(),
        m: m.dim,
    };
    let jacobi = dec.check_jacobi();
    let defining_relations = dec.check_defining_relations();
    let orthogonality = dec.check_orthogonality();
    let bracket_relations = dec.check_bracket_relations();
    let action_identity = dec.check_action_identity();
    let naturally_reductive = m.check_naturally_reductive();
    lap(&mut timings, "construct");

    let hat_adjoint = check_hat_adjoint(spec, 100)?;
    lap(&mut timings, "hat_adjoint");

    let ad = deriv::ad_span(&dec, &m)?;
    let ad_rank = ad.endo.rank();
    let g_l_dim = dec.g_dim() + dec.l.len();
    let ad_map_faithful = ad.map_rank == g_l_dim;
    lap(&mut timings, "ad_span");

    let der = deriv::derivations(&m, Some(ad_rank));
    let der_rank = der.rank();
    // ad(g + l) always sits inside Der(m); verify the containment exactly
    for (_, mat) in &ad.generators {
        if !der.subspace.contains(&flatten(mat))? {
            return Err(crate::error::Error::ConstructionFailure(format!(
                "ad generator escapes the computed derivation space in {spec}"
            )));
        }
    }
    let der_equals_ad = der.subspace.span_equal(&ad.endo.subspace)?;
    lap(&mut timings, "derivations");

    let rm = deriv::right_mult_span(&dec)?;
    let hom = deriv::hom_g(&dec, Some(rm.rank()))?;
    // right multiplications always commute with the g-action; verify the
    // containment that certifies the bounded solve
    for idx in 0..rm.rank() {
        if !hom.subspace.contains(&rm.subspace.basis[idx])? {
            return Err(crate::error::Error::ConstructionFailure(format!(
                "right multiplication escapes the computed Hom_g space in {spec}"
            )));
        }
    }
    let hom_g_rank = hom.rank();
    let hom_g_rank_predicted = spec.m_block() * spec.m_block() * spec.field().dim();
    let mut right_mult_all_recognized = true;
    for idx in 0..hom.rank() {
        let f = hom.basis_matrix(idx);
        if deriv::right_mult_recognize(&f, &dec)?.is_none() {
            right_mult_all_recognized = false;
            break;
        }
    }
    lap(&mut timings, "hom_g");

    let l0 = deriv::filter_b_derivations(&hom, &dec)?;
    let l0_rank = l0.rank();
    let l0_rank_predicted = dec.l.len() + usize::from(spec.family == Family::UnitaryC);
    let skew_span = deriv::skew_constraint_rm_span(&dec)?;
    let l0_matches_skew_constraint = l0.subspace.span_equal(&skew_span.subspace)?;
    lap(&mut timings, "l0_filter");

    let witness = deriv::witness_non_derivation(&m);
    let witness_found = witness.is_some();
    let ad_p_non_derivations = dims.p > 0 && deriv::all_p_ads_outside(&m, &der);
    let g0z_faithful_on_p =
        dims.p == 0 || g0z_action_on_p_rank(&dec) == dec.g_dim();
    lap(&mut timings, "witness");

    let block_preservation = if opts.skip_centralizer || m.dim > CENTRALIZER_DIM_CAP {
        None
    } else {
        let (centralizer_rank, preserves_blocks) = deriv::centralizer_preserves_blocks(&m)?;
        Some(BlockPreservation {
            applicable: spec.block_preservation_applicable(),
            centralizer_rank,
            preserves_blocks,
        })
    };
    lap(&mut timings, "centralizer");

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        spec: SpecEcho {
            family: spec.family.cli_name().to_string(),
            params: spec.params.clone(),
        },
        in_theorem_scope: in_scope,
        scope_reasons,
        dims,
        checks: Checks {
            jacobi,
            defining_relations,
            orthogonality,
            bracket_relations,
            naturally_reductive,
            action_identity,
            hat_adjoint,
            der_rank,
            ad_rank,
            der_equals_ad,
            ad_map_faithful,
            g0z_faithful_on_p,
            hom_g_rank,
            hom_g_rank_predicted,
            l0_rank,
            l0_rank_predicted,
            l0_matches_skew_constraint,
            right_mult_all_recognized,
            ad_p_non_derivations,
            witness_found,
            block_preservation,
        },
        witness,
        timings_ms: opts.with_timings.then_some(timings),
    })
}

/// Guard for the dimension cap; returns the reason string when skipped.
/// dim m = dim g + dim p is known in closed form before building anything.
pub fn dim_cap_reason(spec: &FamilySpec, max_dim: usize) -> Option<String> {
    let n = spec.n_block();
    let g_dim = match spec.family {
        // su(n) when l is everything (m = 0), s(u(n)+u(m)) center included otherwise
        Family::UnitaryC if spec.m_block() == 0 => n * n - 1,
        _ => crate::lie::basis::classical_block_dim(spec.family, n),
    };
    let m_dim = g_dim + spec.p_dim();
    (m_dim > max_dim).then(|| format!("dim m = {m_dim} exceeds cap {max_dim}"))
}
