//! Simple undirected graphs over dense vertex ids `0..n`.

mod io;

pub use io::{from_edge_list_text, to_dot, to_edge_list_text, GraphDoc};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Vertex id.
pub type Vertex = usize;

/// An immutable finite simple graph.
///
/// Neighbor lists are kept sorted and duplicate-free, so two graphs with the
/// same edge set compare equal regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Repeated pairs are
    /// merged; out-of-range endpoints and self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, name: None })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn without_name(mut self) -> Self {
        self.name = None;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at most one component (`K_0` and `K_1` included).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The subgraph induced by `subset`, relabeled `0..|subset|` in ascending
    /// original order. The second value maps new ids back to original ids.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut map: Vec<Vertex> = subset.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&bad) = map.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                // neighbor lists stay sorted since `index` is monotone on `map`
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Ok((Graph { adj, name: None }, map))
    }

    /// Induced subgraph on a vertex bitmask (graphs with at most 64 vertices).
    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let subset: Vec<Vertex> = (0..self.n()).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced_subgraph(&subset)
            .map(|(g, _)| g)
            .unwrap_or_else(|_| Graph::empty(0))
    }

    /// Removes the listed vertices and relabels the rest in ascending order.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut drop = vec![false; self.n()];
        for &v in removed {
            if v < self.n() {
                drop[v] = true;
            }
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
            .expect("kept vertices are in range")
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj, name: None }
    }

    /// Adjacency rows as bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }

    /// All pendant edges `(x, y)`: `y` has degree one and `x` is its neighbor.
    /// Ordered by `y`.
    pub fn pendant_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices()
            .filter(|&y| self.degree(y) == 1)
            .map(|y| (self.adj[y][0], y))
            .collect()
    }

    /// Snail horns: every vertex with at least two pendant neighbors, reported
    /// once together with all of its pendant neighbors (ascending).
    pub fn snail_horns(&self) -> Vec<SnailHorn> {
        let mut beards: Vec<Vec<Vertex>> = vec![Vec::new(); self.n()];
        for (x, y) in self.pendant_edges() {
            beards[x].push(y);
        }
        beards
            .into_iter()
            .enumerate()
            .filter(|(_, b)| b.len() >= 2)
            .map(|(head, beards)| SnailHorn { head, beards })
            .collect()
    }

    pub fn is_snail_head(&self, v: Vertex) -> bool {
        v < self.n()
            && self.adj[v]
                .iter()
                .filter(|&&w| self.degree(w) == 1)
                .take(2)
                .count()
                == 2
    }

    /// Stable 64-bit FNV-1a fingerprint of `n` and the sorted edge list.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(self.n() as u64);
        for (u, v) in self.edges() {
            eat(u as u64);
            eat(v as u64);
        }
        h
    }
}

/// A vertex together with its two or more pendant neighbors.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SnailHorn {
    pub head: Vertex,
    pub beards: Vec<Vertex>,
}

/// Mutable edge-set builder used by constructors.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    pub fn remove_edges_at(&mut self, v: Vertex) -> Vec<Vertex> {
        let mut nbrs = Vec::new();
        self.edges.retain(|&(a, b)| {
            if a == v {
                nbrs.push(b);
                false
            } else if b == v {
                nbrs.push(a);
                false
            } else {
                true
            }
        });
        nbrs.sort_unstable();
        nbrs.dedup();
        nbrs
    }

    pub fn build(self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges)
    }
}
