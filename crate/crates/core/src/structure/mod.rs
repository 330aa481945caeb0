//! Structural parameters: local independence number, clique number,
//! induced bones and admitting sets.

mod bones;
mod mis;

pub use bones::{
    admitting_set, find_induced_bone, find_induced_bone_dfs, find_induced_bone_scan, full_cap,
    BoneEmbedding, SCAN_LIMIT,
};
pub use mis::{
    clique_number, independence_number, local_independence_number, max_independent_set, MIS_LIMIT,
};

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub alpha_l: usize,
    pub omega: usize,
    pub admitting: Vec<usize>,
    /// Largest bone index searched; the admitting set is exact only when this
    /// equals `n - 4`.
    pub admitting_cap: usize,
    pub snail_horns: usize,
    pub claw_free: bool,
    pub triangle_free: bool,
}

impl StructureProfile {
    pub fn admitting_is_complete(&self, g: &Graph) -> bool {
        self.admitting_cap >= full_cap(g)
    }
}

/// Computes every structural parameter; `cap` defaults to `n - 4`.
pub fn structure_profile(g: &Graph, cap: Option<usize>) -> Result<StructureProfile> {
    let cap = cap.unwrap_or_else(|| full_cap(g)).min(full_cap(g));
    let alpha_l = local_independence_number(g)?;
    let omega = clique_number(g)?;
    let admitting = admitting_set(g, cap)?;
    Ok(StructureProfile {
        alpha_l,
        omega,
        admitting,
        admitting_cap: cap,
        snail_horns: g.snail_horns().len(),
        claw_free: alpha_l < 3,
        triangle_free: omega < 3,
    })
}
