//! Breadth-first levellings and the level-based queries used by the
//! levelling-matching bound.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Partition of a connected graph into distance classes `L_0 = {root}, L_1, ..., L_N`.
#[derive(Clone, Debug)]
pub struct Levelling<'g> {
    graph: &'g Graph,
    root: Vertex,
    level_of: Vec<usize>,
    levels: Vec<Vec<Vertex>>,
}

/// Result of a friendly-level query: the level and two shortest root paths
/// (listed from the query vertex down to the root) that agree on every level
/// up to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriendlyLevel {
    pub level: usize,
    pub path_u: Vec<Vertex>,
    pub path_v: Vec<Vertex>,
}

impl<'g> Levelling<'g> {
    pub fn new(graph: &'g Graph, root: Vertex) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: graph.n(),
            });
        }
        let dist = graph.distances_from(root);
        let level_of: Vec<usize> = dist
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Disconnected)?;
        let depth = level_of.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for (v, &l) in level_of.iter().enumerate() {
            levels[l].push(v);
        }
        Ok(Levelling {
            graph,
            root,
            level_of,
            levels,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// The level number `N`: index of the deepest nonempty level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_of(&self, v: Vertex) -> usize {
        self.level_of[v]
    }

    pub fn level(&self, i: usize) -> &[Vertex] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    /// `C(u)`: neighbors of `u` one level deeper.
    pub fn children(&self, u: Vertex) -> Vec<Vertex> {
        let next = self.level_of[u] + 1;
        self.graph
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| self.level_of[w] == next)
            .collect()
    }

    /// Neighbors of `u` one level closer to the root.
    pub fn parents(&self, u: Vertex) -> Vec<Vertex> {
        let l = self.level_of[u];
        self.graph
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| l > 0 && self.level_of[w] == l - 1)
            .collect()
    }

    /// For each level `0..=level_of(u)`, the vertices lying on some shortest
    /// root-`u` path.
    pub fn ancestor_sets(&self, u: Vertex) -> Vec<Vec<Vertex>> {
        let top = self.level_of[u];
        let mut sets = vec![Vec::new(); top + 1];
        sets[top] = vec![u];
        let mut mark = vec![false; self.graph.n()];
        for l in (1..=top).rev() {
            let mut next = Vec::new();
            for &w in &sets[l] {
                for p in self.parents(w) {
                    if !mark[p] {
                        mark[p] = true;
                        next.push(p);
                    }
                }
            }
            next.sort_unstable();
            sets[l - 1] = next;
        }
        sets
    }

    /// Deepest level at which some shortest root paths of `u` and `v` share a
    /// vertex (and hence can be chosen to coincide from there to the root).
    pub fn friendly_level(&self, u: Vertex, v: Vertex) -> Result<FriendlyLevel> {
        if u == v {
            return Err(Error::InvalidInput(
                "friendly level needs two distinct vertices".into(),
            ));
        }
        for w in [u, v] {
            if w >= self.graph.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.graph.n(),
                });
            }
        }
        let au = self.ancestor_sets(u);
        let av = self.ancestor_sets(v);
        let top = self.level_of[u].min(self.level_of[v]);
        let (level, meet) = (0..=top)
            .rev()
            .find_map(|l| {
                au[l]
                    .iter()
                    .find(|w| av[l].binary_search(w).is_ok())
                    .map(|&w| (l, w))
            })
            .expect("the root is a common ancestor");
        let shared = self.path_to_root(meet);
        let mut path_u = self.path_between(u, meet);
        path_u.extend_from_slice(&shared[1..]);
        let mut path_v = self.path_between(v, meet);
        path_v.extend_from_slice(&shared[1..]);
        Ok(FriendlyLevel {
            level,
            path_u,
            path_v,
        })
    }

    /// A shortest path from `v` to the root, taking the smallest parent each step.
    pub fn path_to_root(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.root {
            cur = self.parents(cur)[0];
            path.push(cur);
        }
        path
    }

    /// Shortest path from `u` down to its ancestor `w`, inclusive.
    fn path_between(&self, u: Vertex, w: Vertex) -> Vec<Vertex> {
        // vertices reachable from w by level-increasing edges
        let mut below = vec![false; self.graph.n()];
        below[w] = true;
        for l in self.level_of[w]..self.level_of[u] {
            for &x in &self.levels[l] {
                if below[x] {
                    for c in self.children(x) {
                        below[c] = true;
                    }
                }
            }
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != w {
            cur = self
                .parents(cur)
                .into_iter()
                .find(|&p| below[p])
                .expect("u descends from w");
            path.push(cur);
        }
        path
    }

    /// `L_i` is clean when every `C(u)` for `u` in `L_{i-1}` is a clique.
    pub fn is_clean_level(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.depth() {
            return Err(Error::LevelOutOfRange {
                level: i,
                max: self.depth(),
            });
        }
        Ok(self.levels[i - 1].iter().all(|&u| {
            let c = self.children(u);
            c.iter()
                .enumerate()
                .all(|(k, &a)| c[k + 1..].iter().all(|&b| self.graph.has_edge(a, b)))
        }))
    }
}
