use std::fmt::Write as _;

use serde::Serialize;

use super::two_level::two_level_matching;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::levelling::Levelling;

/// Matchings and leftover sets produced for one level `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub level: usize,
    /// `M_i`: the constrained matching on levels `i-1` and `i`.
    #[serde(rename = "M")]
    pub matching: Vec<(Vertex, Vertex)>,
    /// `M'_i`: each `u ∈ X_{i-1}` paired with its smallest private witness.
    #[serde(rename = "M_prime")]
    pub witness_matching: Vec<(Vertex, Vertex)>,
    #[serde(rename = "X_prev")]
    pub x_prev: Vec<Vertex>,
    #[serde(rename = "Y")]
    pub y: Vec<Vertex>,
    #[serde(rename = "Z")]
    pub z: Vec<Vertex>,
    /// Matched vertices of level `i-1` for which the exchange property fails.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exchange_violations: Vec<Vertex>,
}

/// Full run of the levelling-matching procedure from a snail head.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LmTrace {
    pub root: Vertex,
    pub beards: [Vertex; 2],
    pub levels: Vec<Vec<Vertex>>,
    /// Records for `i = N, N-1, ..., 1`.
    pub records: Vec<LevelRecord>,
    /// `Σ |Z_i|`, an upper bound on the deficiency.
    pub bound: usize,
}

impl LmTrace {
    pub fn record(&self, level: usize) -> Option<&LevelRecord> {
        self.records.iter().find(|r| r.level == level)
    }

    /// Union of all `M_i` and `M'_i`, sorted.
    pub fn combined_matching(&self) -> Vec<(Vertex, Vertex)> {
        let mut all: Vec<_> = self
            .records
            .iter()
            .flat_map(|r| r.matching.iter().chain(&r.witness_matching))
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        all.sort_unstable();
        all
    }

    /// Per-level table in the algorithm's notation.
    pub fn explain(&self) -> String {
        let fmt = |v: &[Vertex]| {
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("{{{}}}", parts.join(","))
        };
        let fmt_pairs = |v: &[(Vertex, Vertex)]| {
            let parts: Vec<String> = v.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!("{{{}}}", parts.join(","))
        };
        let mut out = format!(
            "root x0 = {} (beards {}, {}), level number N = {}\n",
            self.root,
            self.beards[0],
            self.beards[1],
            self.levels.len() - 1
        );
        let _ = writeln!(
            out,
            "{:>3}  {:<24} {:<20} {:<16} {:<20} {:<16}",
            "i", "M_i", "M'_i", "X_{i-1}", "Y_i", "Z_i"
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:>3}  {:<24} {:<20} {:<16} {:<20} {:<16}",
                r.level,
                fmt_pairs(&r.matching),
                fmt_pairs(&r.witness_matching),
                fmt(&r.x_prev),
                fmt(&r.y),
                fmt(&r.z)
            );
        }
        let _ = writeln!(out, "bound = sum |Z_i| = {}", self.bound);
        out
    }
}

/// Runs the levelling-matching procedure from `root`, which must carry two
/// pendant neighbors.
pub fn lm_run(g: &Graph, root: Vertex) -> Result<LmTrace> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    let lev = Levelling::new(g, root)?;
    let beards: Vec<Vertex> = g
        .neighbors(root)
        .iter()
        .copied()
        .filter(|&w| g.degree(w) == 1)
        .take(2)
        .collect();
    let [b0, b1] = beards[..] else {
        return Err(Error::NotSnailHead(root));
    };

    let depth = lev.depth();
    let mut used = vec![false; g.n()];
    let mut records = Vec::with_capacity(depth);
    for i in (1..=depth).rev() {
        let upper = lev.level(i - 1);
        let lower: Vec<Vertex> = lev.level(i).iter().copied().filter(|&v| !used[v]).collect();
        let mut verts: Vec<Vertex> = upper.iter().chain(&lower).copied().collect();
        verts.sort_unstable();
        let (h, map) = g.induced_subgraph(&verts)?;
        let local = |v: Vertex| map.binary_search(&v).expect("vertex of H");
        let x: Vec<Vertex> = upper.iter().map(|&v| local(v)).collect();
        let y: Vec<Vertex> = lower.iter().map(|&v| local(v)).collect();
        let r = two_level_matching(&h, &x, &y)?;

        let matching: Vec<(Vertex, Vertex)> =
            r.matching.iter().map(|&(a, b)| (map[a], map[b])).collect();
        let witness_matching: Vec<(Vertex, Vertex)> = r
            .private
            .iter()
            .map(|(&u, w)| (map[u], map[w[0]]))
            .collect();
        for &(a, b) in matching.iter().chain(&witness_matching) {
            used[a] = true;
            used[b] = true;
        }
        let y_i: Vec<Vertex> = r.y_m.iter().map(|&v| map[v]).collect();
        let z: Vec<Vertex> = y_i.iter().copied().filter(|&v| !used[v]).collect();
        records.push(LevelRecord {
            level: i,
            matching,
            witness_matching,
            x_prev: r.x_m.iter().map(|&v| map[v]).collect(),
            y: y_i,
            z,
            exchange_violations: r.exchange_violations.iter().map(|&v| map[v]).collect(),
        });
    }
    let bound = records.iter().map(|r| r.z.len()).sum();
    let trace = LmTrace {
        root,
        beards: [b0, b1],
        levels: lev.levels().to_vec(),
        records,
        bound,
    };
    check_cover(g, &trace)?;
    Ok(trace)
}

/// The combined matching must be a matching of `g` missing exactly `⋃ Z_i`.
fn check_cover(g: &Graph, t: &LmTrace) -> Result<()> {
    let mut hit = vec![0u8; g.n()];
    for (a, b) in t.combined_matching() {
        if !g.has_edge(a, b) {
            return Err(Error::Postcondition(format!("{a}-{b} is not an edge")));
        }
        hit[a] += 1;
        hit[b] += 1;
    }
    for r in &t.records {
        for &z in &r.z {
            hit[z] += 1;
        }
    }
    match hit.iter().position(|&c| c != 1) {
        Some(v) => Err(Error::Postcondition(format!(
            "vertex {v} is covered {} times by the matchings and leftover sets",
            hit[v]
        ))),
        None => Ok(()),
    }
}

/// Runs from the smallest snail head.
pub fn lm_run_auto(g: &Graph) -> Result<LmTrace> {
    let head = g
        .snail_horns()
        .first()
        .map(|h| h.head)
        .ok_or_else(|| Error::InvalidInput("graph has no snail head".into()))?;
    lm_run(g, head)
}

/// Runs from every snail head and keeps the smallest bound (first on ties).
pub fn lm_best_root(g: &Graph) -> Result<LmTrace> {
    let mut best: Option<LmTrace> = None;
    for h in g.snail_horns() {
        let t = lm_run(g, h.head)?;
        if best.as_ref().is_none_or(|b| t.bound < b.bound) {
            best = Some(t);
        }
    }
    best.ok_or_else(|| Error::InvalidInput("graph has no snail head".into()))
}
