//! Deterministic constructors for the extremal families and a few basic graphs.
//!
//! Notation: `D_n^p` is a path on `p` vertices with `n` pendant edges at one
//! end; its other end is the attachment point. Attaching `D_n^p` at `v`
//! identifies that end with `v`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn attach_d_in(b: &mut GraphBuilder, v: Vertex, n: usize, p: usize) -> Vertex {
    let mut tip = v;
    for _ in 1..p {
        let w = b.add_vertex();
        b.add_edge(tip, w);
        tip = w;
    }
    for _ in 0..n {
        let w = b.add_vertex();
        b.add_edge(tip, w);
    }
    tip
}

/// Attaches a copy of `D_n^p` at `v`: `p - 1` new path vertices, then `n`
/// pendants at the far end.
pub fn attach_d(g: &Graph, v: Vertex, n: usize, p: usize) -> Result<Graph> {
    require(n >= 1 && p >= 1, || {
        format!("D_n^p needs n, p >= 1 (n={n}, p={p})")
    })?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut b = GraphBuilder::from_graph(g);
    attach_d_in(&mut b, v, n, p);
    b.build()
}

/// `BS_n^p`: path on `p` vertices with `n` pendants at each end. Vertices
/// `0..p` form the path.
pub fn bs(n: usize, p: usize) -> Result<Graph> {
    require(n >= 1 && p >= 2, || {
        format!("BS_n^p needs n >= 1, p >= 2 (n={n}, p={p})")
    })?;
    let mut b = GraphBuilder::new(p);
    for i in 1..p {
        b.add_edge(i - 1, i);
    }
    for end in [0, p - 1] {
        for _ in 0..n {
            let w = b.add_vertex();
            b.add_edge(end, w);
        }
    }
    Ok(b.build()?.with_name(format!("BS_{n}^{p}")))
}

/// `S_n^p`: `n` disjoint copies of `D_{n-1}^p` attached at vertex 0.
pub fn s_family(n: usize, p: usize) -> Result<Graph> {
    require(n >= 2 && p >= 1, || {
        format!("S_n^p needs n >= 2, p >= 1 (n={n}, p={p})")
    })?;
    let mut b = GraphBuilder::new(1);
    for _ in 0..n {
        attach_d_in(&mut b, 0, n - 1, p);
    }
    Ok(b.build()?.with_name(format!("S_{n}^{p}")))
}

/// `T_n^p`: `K_{2,n}` (degree-`n` side is vertices 0 and 1) with `D_n^p`
/// attached at both of 0 and 1.
pub fn t_family(n: usize, p: usize) -> Result<Graph> {
    require(n >= 2 && p >= 1, || {
        format!("T_n^p needs n >= 2, p >= 1 (n={n}, p={p})")
    })?;
    let mut b = GraphBuilder::new(n + 2);
    for s in 0..2 {
        for t in 2..n + 2 {
            b.add_edge(s, t);
        }
    }
    attach_d_in(&mut b, 0, n, p);
    attach_d_in(&mut b, 1, n, p);
    Ok(b.build()?.with_name(format!("T_{n}^{p}")))
}

fn e_builder(m: usize, n: usize, p: usize) -> Result<GraphBuilder> {
    require(m >= 2 && n >= 1 && p >= 1, || {
        format!("E_(m,n)^p needs m >= 2, n, p >= 1 (m={m}, n={n}, p={p})")
    })?;
    let mut b = GraphBuilder::new(m);
    for u in 0..m {
        for v in u + 1..m {
            b.add_edge(u, v);
        }
    }
    for v in 0..m {
        attach_d_in(&mut b, v, n, p);
    }
    Ok(b)
}

/// `E_{m,n}^p`: `K_m` on vertices `0..m` with `D_n^p` attached at each.
pub fn e_family(m: usize, n: usize, p: usize) -> Result<Graph> {
    Ok(e_builder(m, n, p)?
        .build()?
        .with_name(format!("E_({m},{n})^{p}")))
}

/// `E_{m,n}^{p+}`: one extra vertex adjacent to clique vertex 0 and the next
/// vertex on its attached path (the clique end of that copy).
pub fn e_plus_family(m: usize, n: usize, p: usize) -> Result<Graph> {
    require(p >= 2, || {
        "E+ needs p >= 2: the copy must have two path vertices".into()
    })?;
    let mut b = e_builder(m, n, p)?;
    // the first vertex added after the clique is the second path vertex of copy 0
    let second = m;
    let extra = b.add_vertex();
    b.add_edge(extra, 0);
    b.add_edge(extra, second);
    Ok(b.build()?
        .with_name(format!("E_({m},{n})^({p}+) clique-end")))
}

/// `T_{m,n}`: rooted tree (root 0) of depth `m - 2` whose even levels have
/// degree `n - 1`, odd levels degree 2, and deepest level leaves.
pub fn t_tree(m: usize, n: usize) -> Result<Graph> {
    require(m >= 3 && m % 2 == 1 && n > 3, || {
        format!("T_(m,n) needs odd m >= 3 and n > 3 (m={m}, n={n})")
    })?;
    let mut b = GraphBuilder::new(1);
    let mut frontier = vec![0];
    for level in 0..m - 2 {
        let kids = if level == 0 {
            n - 1
        } else if level % 2 == 0 {
            n - 2
        } else {
            1
        };
        let mut next = Vec::with_capacity(frontier.len() * kids);
        for &u in &frontier {
            for _ in 0..kids {
                let w = b.add_vertex();
                b.add_edge(u, w);
                next.push(w);
            }
        }
        frontier = next;
    }
    Ok(b.build()?.with_name(format!("T_({m},{n})")))
}

fn check_ascending(a: &[usize]) -> Result<()> {
    require(
        !a.is_empty() && a[0] >= 1 && a.windows(2).all(|w| w[0] < w[1]),
        || format!("expected strictly ascending positive integers, got {a:?}"),
    )
}

/// Skeleton tree `T(a_1, ..., a_r)` rooted at 0, with the vertices of each
/// level listed. Degree 3 at levels `0, a_1, ..., a_{r-1}`, leaves at level
/// `a_r`, degree 2 elsewhere.
fn skeleton_levels(a: &[usize]) -> Result<(GraphBuilder, Vec<Vec<Vertex>>)> {
    check_ascending(a)?;
    let depth = *a.last().unwrap();
    let branch = &a[..a.len() - 1];
    let mut b = GraphBuilder::new(1);
    let mut levels = vec![vec![0]];
    for level in 0..depth {
        let kids = if level == 0 {
            3
        } else if branch.contains(&level) {
            2
        } else {
            1
        };
        let mut next = Vec::new();
        for &u in &levels[level] {
            for _ in 0..kids {
                let w = b.add_vertex();
                b.add_edge(u, w);
                next.push(w);
            }
        }
        levels.push(next);
    }
    Ok((b, levels))
}

pub fn skeleton_tree(a: &[usize]) -> Result<Graph> {
    let (b, _) = skeleton_levels(a)?;
    Ok(b.build()?.with_name(format!("T({})", join(a))))
}

fn y_delta_in(b: &mut GraphBuilder, v: Vertex) -> Result<[Vertex; 3]> {
    let nbrs = b.remove_edges_at(v);
    let [na, nb, nc] = nbrs[..] else {
        return Err(Error::InvalidParameter(format!(
            "Y-Δ needs a degree-3 vertex; {v} has degree {}",
            nbrs.len()
        )));
    };
    let (x, y, z) = (v, b.add_vertex(), b.add_vertex());
    for (s, t) in [(x, y), (y, z), (z, x), (na, x), (nb, y), (nc, z)] {
        b.add_edge(s, t);
    }
    Ok([x, y, z])
}

/// Replaces the degree-3 vertex `v` by a triangle. `v` keeps its id as the
/// corner joined to its smallest neighbor; the other two corners are new
/// vertices joined to the middle and largest neighbor.
pub fn y_delta(g: &Graph, v: Vertex) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut b = GraphBuilder::from_graph(g);
    y_delta_in(&mut b, v)?;
    b.build()
}

/// `F(a_1, ..., a_r)`: the skeleton tree with every degree-3 vertex expanded
/// to a triangle and two pendants added at every leaf.
pub fn f_family(a: &[usize]) -> Result<Graph> {
    let (mut b, levels) = skeleton_levels(a)?;
    let depth = levels.len() - 1;
    let mut branch_levels = vec![0];
    branch_levels.extend_from_slice(&a[..a.len() - 1]);
    for &l in &branch_levels {
        for &v in &levels[l] {
            y_delta_in(&mut b, v)?;
        }
    }
    for &leaf in &levels[depth] {
        attach_d_in(&mut b, leaf, 2, 1);
    }
    Ok(b.build()?.with_name(format!("F({})", join(a))))
}

fn join(a: &[usize]) -> String {
    a.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs at least one vertex".into())?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P_{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || "cycle needs at least three vertices".into())?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_name(format!("C_{n}")))
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    require(k >= 1, || "star needs at least one leaf".into())?;
    Ok(Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))?.with_name(format!("K_1,{k}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs at least one vertex".into())?;
    Ok(
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
            .with_name(format!("K_{n}")),
    )
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, || {
        "complete bipartite graph needs positive sides".into()
    })?;
    Ok(
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))?
            .with_name(format!("K_{a},{b}")),
    )
}

/// A family member named by id and integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum FamilySpec {
    D { n: usize, p: usize },
    Bs { n: usize, p: usize },
    S { n: usize, p: usize },
    T { n: usize, p: usize },
    E { m: usize, n: usize, p: usize },
    EPlus { m: usize, n: usize, p: usize },
    TTree { m: usize, n: usize },
    Skeleton { a: Vec<usize> },
    F { a: Vec<usize> },
    Path { n: usize },
    Cycle { n: usize },
    Star { k: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
}

pub const FAMILY_IDS: &[&str] = &[
    "d",
    "bs",
    "s",
    "t",
    "e",
    "e_plus",
    "t_tree",
    "skeleton",
    "f",
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
];

impl FamilySpec {
    /// Parses `id` with `key=value` parameters. Sequences (`a` for `skeleton`
    /// and `f`) are written with `/` separators, e.g. `a=1/2`.
    pub fn from_params(id: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let int = |k: &str| -> Result<usize> {
            params
                .get(k)
                .ok_or_else(|| Error::InvalidParameter(format!("family {id} needs parameter {k}")))?
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("parameter {k} must be an integer")))
        };
        let seq = |k: &str| -> Result<Vec<usize>> {
            params
                .get(k)
                .ok_or_else(|| Error::InvalidParameter(format!("family {id} needs parameter {k}")))?
                .split('/')
                .map(|s| {
                    s.trim().parse().map_err(|_| {
                        Error::InvalidParameter(format!(
                            "parameter {k} must be integers joined by '/'"
                        ))
                    })
                })
                .collect()
        };
        let allowed: &[&str] = match id {
            "d" | "bs" | "s" | "t" => &["n", "p"],
            "e" | "e_plus" => &["m", "n", "p"],
            "t_tree" => &["m", "n"],
            "skeleton" | "f" => &["a"],
            "path" | "cycle" | "complete" => &["n"],
            "star" => &["k"],
            "complete_bipartite" => &["a", "b"],
            _ => return Err(Error::InvalidParameter(format!("unknown family {id:?}"))),
        };
        if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "family {id} does not take parameter {k}"
            )));
        }
        Ok(match id {
            "d" => FamilySpec::D {
                n: int("n")?,
                p: int("p")?,
            },
            "bs" => FamilySpec::Bs {
                n: int("n")?,
                p: int("p")?,
            },
            "s" => FamilySpec::S {
                n: int("n")?,
                p: int("p")?,
            },
            "t" => FamilySpec::T {
                n: int("n")?,
                p: int("p")?,
            },
            "e" => FamilySpec::E {
                m: int("m")?,
                n: int("n")?,
                p: int("p")?,
            },
            "e_plus" => FamilySpec::EPlus {
                m: int("m")?,
                n: int("n")?,
                p: int("p")?,
            },
            "t_tree" => FamilySpec::TTree {
                m: int("m")?,
                n: int("n")?,
            },
            "skeleton" => FamilySpec::Skeleton { a: seq("a")? },
            "f" => FamilySpec::F { a: seq("a")? },
            "path" => FamilySpec::Path { n: int("n")? },
            "cycle" => FamilySpec::Cycle { n: int("n")? },
            "star" => FamilySpec::Star { k: int("k")? },
            "complete" => FamilySpec::Complete { n: int("n")? },
            _ => FamilySpec::CompleteBipartite {
                a: int("a")?,
                b: int("b")?,
            },
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::D { n, p } => {
                Ok(attach_d(&Graph::empty(1), 0, *n, *p)?.with_name(format!("D_{n}^{p}")))
            }
            FamilySpec::Bs { n, p } => bs(*n, *p),
            FamilySpec::S { n, p } => s_family(*n, *p),
            FamilySpec::T { n, p } => t_family(*n, *p),
            FamilySpec::E { m, n, p } => e_family(*m, *n, *p),
            FamilySpec::EPlus { m, n, p } => e_plus_family(*m, *n, *p),
            FamilySpec::TTree { m, n } => t_tree(*m, *n),
            FamilySpec::Skeleton { a } => skeleton_tree(a),
            FamilySpec::F { a } => f_family(a),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Star { k } => star(*k),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        }
    }

    /// Metadata block written next to constructed graphs.
    pub fn annotation(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("family specs serialize");
        let designated = match self {
            FamilySpec::D { .. } => Some(("end", 0)),
            FamilySpec::TTree { .. } | FamilySpec::Skeleton { .. } | FamilySpec::S { .. } => {
                Some(("root", 0))
            }
            FamilySpec::Star { .. } => Some(("center", 0)),
            _ => None,
        };
        if let Some((k, vertex)) = designated {
            v[k] = vertex.into();
        }
        if let FamilySpec::EPlus { .. } = self {
            v["reading"] = "extra vertex at the clique end".into();
        }
        v
    }
}
