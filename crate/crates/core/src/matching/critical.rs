use rayon::prelude::*;
use serde::Serialize;

use super::deficiency;
use crate::error::{guard, Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order for which all induced subgraphs are enumerated.
pub const CRITICAL_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalityMode {
    Exhaustive,
    DeleteOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Critical,
    NotCritical,
    /// No single-vertex deletion violates criticality; larger subgraphs were
    /// not examined.
    PartialPass,
}

/// A proper connected induced subgraph whose deficiency is not smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    pub deficiency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityResult {
    pub verdict: Verdict,
    pub mode: CriticalityMode,
    pub deficiency: usize,
    pub witness: Option<Witness>,
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask & mask.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

fn mask_vertices(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Ordering used to pick a single witness: fewer vertices first, then the
/// lexicographically smallest vertex list.
fn witness_key(mask: u64) -> (u32, Vec<Vertex>) {
    (mask.count_ones(), mask_vertices(mask))
}

/// Decides whether every proper connected induced subgraph of `g` has
/// strictly smaller deficiency.
pub fn is_deficiency_critical(g: &Graph, mode: CriticalityMode) -> Result<CriticalityResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let kd = deficiency(g);
    let witness = match mode {
        CriticalityMode::Exhaustive => {
            guard("exhaustive criticality", CRITICAL_LIMIT, g.n())?;
            let adj = g.adjacency_masks();
            let full = (1u64 << g.n()) - 1;
            (1..full)
                .into_par_iter()
                .filter(|&m| mask_connected(&adj, m))
                .filter_map(|m| {
                    let d = deficiency(&g.induced_by_mask(m));
                    (d >= kd).then(|| (witness_key(m), d))
                })
                .min_by(|a, b| a.0.cmp(&b.0))
                .map(|((_, vertices), deficiency)| Witness {
                    vertices,
                    deficiency,
                })
        }
        CriticalityMode::DeleteOne => g.vertices().find_map(|v| {
            if g.n() == 1 {
                return None;
            }
            let (h, kept) = g.remove_vertices(&[v]);
            if !h.is_connected() {
                return None;
            }
            let d = deficiency(&h);
            (d >= kd).then_some(Witness {
                vertices: kept,
                deficiency: d,
            })
        }),
    };
    let verdict = match (&witness, mode) {
        (Some(_), _) => Verdict::NotCritical,
        (None, CriticalityMode::Exhaustive) => Verdict::Critical,
        (None, CriticalityMode::DeleteOne) => Verdict::PartialPass,
    };
    Ok(CriticalityResult {
        verdict,
        mode,
        deficiency: kd,
        witness,
    })
}

/// The connected induced subgraph of maximum deficiency, ties broken by
/// smaller order and then by lexicographically smallest vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCore {
    pub graph: Graph,
    /// Original ids of the core's vertices, ascending.
    pub vertices: Vec<Vertex>,
    pub deficiency: usize,
}

pub fn critical_core(g: &Graph) -> Result<CriticalCore> {
    guard("critical core", CRITICAL_LIMIT, g.n())?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj = g.adjacency_masks();
    let full = (1u64 << g.n()) - 1;
    let (_, mask, deficiency) = (1..=full)
        .into_par_iter()
        .filter(|&m| mask_connected(&adj, m))
        .map(|m| {
            let d = deficiency(&g.induced_by_mask(m));
            (d, m)
        })
        .map(|(d, m)| {
            let (order, verts) = witness_key(m);
            ((std::cmp::Reverse(d), order, verts), m, d)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("every nonempty graph has a connected induced subgraph");
    let vertices = mask_vertices(mask);
    let (graph, _) = g.induced_subgraph(&vertices)?;
    Ok(CriticalCore {
        graph,
        vertices,
        deficiency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn claw_is_critical() {
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = is_deficiency_critical(&claw, CriticalityMode::Exhaustive).unwrap();
        assert_eq!(r.verdict, Verdict::Critical);
        assert!(r.witness.is_none());
        let r = is_deficiency_critical(&claw, CriticalityMode::DeleteOne).unwrap();
        assert_eq!(r.verdict, Verdict::PartialPass);
    }

    #[test]
    fn p3_is_not_critical() {
        let r = is_deficiency_critical(&path(3), CriticalityMode::Exhaustive).unwrap();
        assert_eq!(r.verdict, Verdict::NotCritical);
        let w = r.witness.unwrap();
        assert_eq!(w.vertices, vec![0]);
        assert_eq!(w.deficiency, 1);
        // single deletions give P2 or a disconnected graph
        let r = is_deficiency_critical(&path(3), CriticalityMode::DeleteOne).unwrap();
        assert_eq!(r.verdict, Verdict::PartialPass);
    }

    #[test]
    fn k1_is_critical() {
        let r = is_deficiency_critical(&Graph::empty(1), CriticalityMode::Exhaustive).unwrap();
        assert_eq!(r.verdict, Verdict::Critical);
    }

    #[test]
    fn guards_and_disconnected() {
        assert!(is_deficiency_critical(&path(19), CriticalityMode::Exhaustive).is_err());
        assert!(is_deficiency_critical(&path(19), CriticalityMode::DeleteOne).is_ok());
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            is_deficiency_critical(&g, CriticalityMode::Exhaustive).unwrap_err(),
            Error::Disconnected
        );
        assert!(critical_core(&path(19)).is_err());
    }

    #[test]
    fn cores() {
        let core = critical_core(&path(3)).unwrap();
        assert_eq!(core.vertices, vec![0]);
        assert_eq!(core.deficiency, 1);
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let core = critical_core(&claw).unwrap();
        assert_eq!(core.graph, claw);
    }
}
