//! Induced bone detection.
//!
//! A bone `B_i` is a path on `i >= 2` vertices with two pendant edges at each
//! end. An embedding is a set of `i + 4` vertices of the host graph inducing
//! exactly that tree.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order at which bones are located by scanning vertex subsets.
pub const SCAN_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoneEmbedding {
    pub path: Vec<Vertex>,
    pub pendants_left: [Vertex; 2],
    pub pendants_right: [Vertex; 2],
}

impl BoneEmbedding {
    pub fn index(&self) -> usize {
        self.path.len()
    }

    /// All `i + 4` vertices, ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = self.path.clone();
        v.extend(self.pendants_left);
        v.extend(self.pendants_right);
        v.sort_unstable();
        v
    }

    /// Checks that the embedding's vertex set induces exactly `B_i` in `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let verts = self.vertices();
        if verts.windows(2).any(|w| w[0] == w[1]) || self.path.len() < 2 {
            return false;
        }
        let mut expected: Vec<(Vertex, Vertex)> = self
            .path
            .windows(2)
            .map(|w| (w[0], w[1]))
            .chain(self.pendants_left.iter().map(|&a| (self.path[0], a)))
            .chain(
                self.pendants_right
                    .iter()
                    .map(|&b| (*self.path.last().unwrap(), b)),
            )
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        expected.sort_unstable();
        let mut actual = Vec::new();
        for (k, &a) in verts.iter().enumerate() {
            for &b in &verts[k + 1..] {
                if g.has_edge(a, b) {
                    actual.push((a, b));
                }
            }
        }
        actual == expected
    }
}

/// Finds an induced `B_i`, choosing the search strategy by graph order.
pub fn find_induced_bone(g: &Graph, i: usize) -> Result<Option<BoneEmbedding>> {
    if g.n() <= SCAN_LIMIT {
        find_induced_bone_scan(g, i)
    } else {
        find_induced_bone_dfs(g, i)
    }
}

fn check_index(i: usize) -> Result<()> {
    if i < 2 {
        Err(Error::InvalidParameter(format!(
            "bone index must be at least 2, got {i}"
        )))
    } else {
        Ok(())
    }
}

/// Depth-first search over induced paths `v_1..v_i`, then private pendant
/// pairs at both ends.
pub fn find_induced_bone_dfs(g: &Graph, i: usize) -> Result<Option<BoneEmbedding>> {
    check_index(i)?;
    if g.n() < i + 4 {
        return Ok(None);
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(i);
    for start in g.vertices().filter(|&v| g.degree(v) >= 3) {
        path.push(start);
        on_path[start] = true;
        let found = extend(g, i, &mut path, &mut on_path);
        path.pop();
        on_path[start] = false;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn extend(
    g: &Graph,
    i: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
) -> Option<BoneEmbedding> {
    let last = *path.last().unwrap();
    if path.len() == i {
        // each path is met from both ends; keep the orientation with the smaller start
        if path[0] > last || g.degree(last) < 3 {
            return None;
        }
        return attach_pendants(g, path, on_path);
    }
    for &w in g.neighbors(last) {
        if on_path[w] {
            continue;
        }
        // induced: w sees no path vertex except `last`
        if g.neighbors(w).iter().filter(|&&x| on_path[x]).count() != 1 {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let found = extend(g, i, path, on_path);
        path.pop();
        on_path[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

fn attach_pendants(g: &Graph, path: &[Vertex], on_path: &[bool]) -> Option<BoneEmbedding> {
    let private = |end: Vertex| -> Vec<Vertex> {
        g.neighbors(end)
            .iter()
            .copied()
            .filter(|&a| !on_path[a] && g.neighbors(a).iter().filter(|&&x| on_path[x]).count() == 1)
            .collect()
    };
    let first = path[0];
    let last = *path.last().unwrap();
    let left = private(first);
    let right = private(last);
    let pairs = |c: &[Vertex]| -> Vec<[Vertex; 2]> {
        let mut out = Vec::new();
        for (k, &a) in c.iter().enumerate() {
            for &b in &c[k + 1..] {
                if !g.has_edge(a, b) {
                    out.push([a, b]);
                }
            }
        }
        out
    };
    let right_pairs = pairs(&right);
    for l in pairs(&left) {
        for r in &right_pairs {
            if l.iter()
                .all(|&a| r.iter().all(|&b| a != b && !g.has_edge(a, b)))
            {
                return Some(BoneEmbedding {
                    path: path.to_vec(),
                    pendants_left: l,
                    pendants_right: *r,
                });
            }
        }
    }
    None
}

/// Scans every `(i + 4)`-subset and tests whether it induces `B_i`.
pub fn find_induced_bone_scan(g: &Graph, i: usize) -> Result<Option<BoneEmbedding>> {
    check_index(i)?;
    let k = i + 4;
    if g.n() < k {
        return Ok(None);
    }
    let mut subset: Vec<Vertex> = (0..k).collect();
    loop {
        if let Some(b) = bone_shape(g, &subset) {
            return Ok(Some(b));
        }
        // next combination in lexicographic order
        let n = g.n();
        let Some(pos) = (0..k).rev().find(|&p| subset[p] < n - k + p) else {
            return Ok(None);
        };
        subset[pos] += 1;
        for p in pos + 1..k {
            subset[p] = subset[p - 1] + 1;
        }
    }
}

/// If `verts` induces a bone, returns it with the path oriented from its
/// smaller end.
fn bone_shape(g: &Graph, verts: &[Vertex]) -> Option<BoneEmbedding> {
    let inside = |v: Vertex| verts.binary_search(&v).is_ok();
    let deg = |v: Vertex| g.neighbors(v).iter().filter(|&&w| inside(w)).count();
    let edges: usize = verts.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if edges != verts.len() - 1 {
        return None;
    }
    let ends: Vec<Vertex> = verts.iter().copied().filter(|&v| deg(v) == 3).collect();
    let leaves = verts.iter().filter(|&&v| deg(v) == 1).count();
    let others_ok = verts.iter().all(|&v| matches!(deg(v), 1..=3));
    if ends.len() != 2 || leaves != 4 || !others_ok {
        return None;
    }
    let leaf_nbrs = |v: Vertex| -> Vec<Vertex> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| inside(w) && deg(w) == 1)
            .collect()
    };
    let (a, b) = (leaf_nbrs(ends[0]), leaf_nbrs(ends[1]));
    if a.len() != 2 || b.len() != 2 {
        return None;
    }
    // walk the spine from ends[0] to ends[1]
    let mut path = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while cur != ends[1] {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| inside(w) && w != prev && deg(w) >= 2)?;
        prev = cur;
        cur = next;
        path.push(cur);
        if path.len() > verts.len() {
            return None;
        }
    }
    if path.len() + 4 != verts.len() {
        return None;
    }
    Some(BoneEmbedding {
        path,
        pendants_left: [a[0], a[1]],
        pendants_right: [b[0], b[1]],
    })
}

/// Bone indices in `2..=cap` realized as induced subgraphs of `g`.
pub fn admitting_set(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    (2..=cap)
        .into_par_iter()
        .map(|i| find_induced_bone(g, i).map(|b| b.map(|_| i)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

/// `|V(G)| - 4`, the largest index any bone in `g` can have.
pub fn full_cap(g: &Graph) -> usize {
    g.n().saturating_sub(4)
}
