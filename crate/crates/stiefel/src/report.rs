//! Machine-readable verification reports.

use crate::deriv::Witness;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct SpecEcho {
    pub family: String,
    pub params: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Dims {
    pub h: usize,
    pub g0: usize,
    pub z: usize,
    pub l: usize,
    pub p: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockPreservation {
    /// whether the module-separation premise applies to this spec
    pub applicable: bool,
    pub centralizer_rank: usize,
    pub preserves_blocks: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Checks {
    pub jacobi: bool,
    pub defining_relations: bool,
    pub orthogonality: bool,
    pub bracket_relations: bool,
    pub naturally_reductive: bool,
    pub action_identity: bool,
    pub hat_adjoint: bool,
    pub der_rank: usize,
    pub ad_rank: usize,
    pub der_equals_ad: bool,
    pub ad_map_faithful: bool,
    pub g0z_faithful_on_p: bool,
    pub hom_g_rank: usize,
    pub hom_g_rank_predicted: usize,
    pub l0_rank: usize,
    pub l0_rank_predicted: usize,
    pub l0_matches_skew_constraint: bool,
    pub right_mult_all_recognized: bool,
    pub ad_p_non_derivations: bool,
    pub witness_found: bool,
    /// None when the centralizer solve was skipped (dimension cap)
    pub block_preservation: Option<BlockPreservation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub spec: SpecEcho,
    pub in_theorem_scope: bool,
    pub scope_reasons: Vec<String>,
    pub dims: Dims,
    pub checks: Checks,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Report {
    /// Structural invariants that must hold for every spec, in or out of
    /// theorem scope; a failure here is an engine bug.
    pub fn structural_ok(&self) -> bool {
        let c = &self.checks;
        c.jacobi
            && c.defining_relations
            && c.orthogonality
            && c.bracket_relations
            && c.naturally_reductive
            && c.action_identity
            && c.hat_adjoint
    }

    /// The theorem-level checks, evaluated only for in-scope specs.
    pub fn theorem_ok(&self) -> bool {
        let c = &self.checks;
        let witness_ok = self.dims.p == 0 || (c.witness_found && c.ad_p_non_derivations);
        let preservation_ok = match &c.block_preservation {
            Some(bp) => !bp.applicable || bp.preserves_blocks,
            None => true,
        };
        c.der_equals_ad
            && c.der_rank == c.ad_rank
            && c.ad_map_faithful
            && c.g0z_faithful_on_p
            && c.hom_g_rank == c.hom_g_rank_predicted
            && c.l0_rank == c.l0_rank_predicted
            && c.l0_matches_skew_constraint
            && c.right_mult_all_recognized
            && witness_ok
            && preservation_ok
    }

    /// Exit-code semantics: out-of-scope observations never fail a run.
    pub fn passes(&self) -> bool {
        if !self.in_theorem_scope {
            return true;
        }
        self.structural_ok() && self.theorem_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
