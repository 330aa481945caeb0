//! Maximum matchings, deficiency and deficiency-critical subgraphs.

mod blossom;
mod critical;
pub mod oracle;

pub use critical::{
    critical_core, is_deficiency_critical, CriticalCore, CriticalityMode, CriticalityResult,
    Verdict, Witness, CRITICAL_LIMIT,
};

use serde::{Serialize, Serializer};

use crate::graph::{Graph, Vertex};

/// A maximum matching together with the vertices it leaves uncovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    pub unsaturated: Vec<Vertex>,
    pub deficiency: usize,
}

impl Serialize for MatchingResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            matching: Vec<[Vertex; 2]>,
            unsaturated: &'a [Vertex],
            deficiency: usize,
        }
        Wire {
            matching: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            unsaturated: &self.unsaturated,
            deficiency: self.deficiency,
        }
        .serialize(s)
    }
}

pub fn maximum_matching(g: &Graph) -> MatchingResult {
    let mate = blossom::mates(g);
    let mut edges = Vec::new();
    let mut unsaturated = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if blossom::is_unmatched(m) {
            unsaturated.push(v);
        } else if v < m {
            edges.push((v, m));
        }
    }
    let deficiency = unsaturated.len();
    MatchingResult {
        edges,
        unsaturated,
        deficiency,
    }
}

/// Number of vertices missed by a maximum matching.
pub fn deficiency(g: &Graph) -> usize {
    maximum_matching(g).deficiency
}

/// Outcome of repeatedly deleting both ends of a pendant edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantReduction {
    /// What is left, relabeled; `kept[i]` is the original id of vertex `i`.
    pub graph: Graph,
    pub kept: Vec<Vertex>,
    /// Deleted pairs `(x, y)` in original ids, where `y` was the pendant vertex.
    pub removed: Vec<(Vertex, Vertex)>,
    /// Isolated vertices in the final graph.
    pub isolated: usize,
}

/// Deletes pendant edges until none remain, always choosing the smallest
/// pendant vertex. Deficiency is unchanged by each deletion.
pub fn reduce_pendants(g: &Graph) -> PendantReduction {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    while let Some(y) = (0..n).find(|&v| alive[v] && deg[v] == 1) {
        let x = g
            .neighbors(y)
            .iter()
            .copied()
            .find(|&w| alive[w])
            .expect("a degree-one vertex has a live neighbor");
        for v in [x, y] {
            alive[v] = false;
            for &w in g.neighbors(v) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
        removed.push((x, y));
    }
    let kept: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    let (graph, kept) = g.induced_subgraph(&kept).expect("subset of V(G)");
    let isolated = graph.vertices().filter(|&v| graph.degree(v) == 0).count();
    PendantReduction {
        graph,
        kept,
        removed,
        isolated,
    }
}
