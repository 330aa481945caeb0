//! Constrained matching between two consecutive levels.
//!
//! Given a partition `V(H) = X ∪ Y` with every `Y`-vertex adjacent to `X`, we
//! look for a matching `M` whose uncovered `Y`-vertices all keep an uncovered
//! `X`-neighbor. A matching that admits neither of the two improving moves
//! below leaves `Y_M` stable and gives every `x ∈ X_M` two private
//! `Y_M`-neighbors. On small instances the moves only seed an exact search
//! for a largest such matching, preferring one with the exchange property.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::maximum_matching;

/// Largest `|V(H)|` for which the exact search runs.
pub const EXACT_LIMIT: usize = 16;
const NODE_BUDGET: usize = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoLevelResult {
    /// Matched pairs `(a, b)` with `a < b`, sorted.
    pub matching: Vec<(Vertex, Vertex)>,
    /// Uncovered `X`-vertices with a neighbor in `Y_M`.
    pub x_m: Vec<Vertex>,
    /// Uncovered `Y`-vertices.
    pub y_m: Vec<Vertex>,
    /// For each `x ∈ X_M`, its two smallest private witnesses: vertices of
    /// `Y_M` whose only neighbor in `X_M` is `x`.
    pub private: BTreeMap<Vertex, [Vertex; 2]>,
    /// Matched `X`-vertices that, if uncovered again, would leave two or more
    /// members of `X_M` without two private witnesses.
    pub exchange_violations: Vec<Vertex>,
}

struct State<'a> {
    h: &'a Graph,
    in_x: Vec<bool>,
    in_y: Vec<bool>,
    matched: Vec<bool>,
}

impl State<'_> {
    /// `Y_M ⊆ N(X - V(M))`.
    fn covered(&self) -> bool {
        self.h.vertices().all(|y| {
            !self.in_y[y]
                || self.matched[y]
                || self
                    .h
                    .neighbors(y)
                    .iter()
                    .any(|&x| self.in_x[x] && !self.matched[x])
        })
    }

    fn set(&mut self, e: (Vertex, Vertex), on: bool) {
        self.matched[e.0] = on;
        self.matched[e.1] = on;
    }

    fn free(&self, e: (Vertex, Vertex)) -> bool {
        !self.matched[e.0] && !self.matched[e.1]
    }
}

/// Runs the exchange-move local search from the empty matching.
pub fn two_level_matching(h: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<TwoLevelResult> {
    let n = h.n();
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n];
    for &v in x {
        check_vertex(h, v)?;
        in_x[v] = true;
    }
    for &v in y {
        check_vertex(h, v)?;
        if in_x[v] {
            return Err(Error::InvalidInput(format!(
                "vertex {v} is in both X and Y"
            )));
        }
        in_y[v] = true;
    }
    if let Some(v) = h.vertices().find(|&v| !in_x[v] && !in_y[v]) {
        return Err(Error::InvalidInput(format!(
            "vertex {v} is in neither X nor Y"
        )));
    }
    if let Some(&v) = y
        .iter()
        .find(|&&v| !h.neighbors(v).iter().any(|&w| in_x[w]))
    {
        return Err(Error::InvalidInput(format!(
            "Y-vertex {v} has no neighbor in X"
        )));
    }

    let edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    let cross: Vec<(Vertex, Vertex)> = edges
        .iter()
        .filter_map(|&(a, b)| match (in_x[a], in_x[b]) {
            (true, false) => Some((a, b)),
            (false, true) => Some((b, a)),
            _ => None,
        })
        .collect();
    let mut st = State {
        h,
        in_x,
        in_y,
        matched: vec![false; n],
    };
    let mut matching: Vec<(Vertex, Vertex)> = Vec::new();

    'search: loop {
        // (a) add a single edge
        for &e in &edges {
            if st.free(e) {
                st.set(e, true);
                if st.covered() {
                    matching.push(e);
                    continue 'search;
                }
                st.set(e, false);
            }
        }
        // (b) trade one edge at an X-vertex for two X-Y edges
        for k in 0..matching.len() {
            let old = matching[k];
            if !st.in_x[old.0] && !st.in_x[old.1] {
                continue;
            }
            st.set(old, false);
            let open: Vec<(Vertex, Vertex)> =
                cross.iter().copied().filter(|&e| st.free(e)).collect();
            for (i, &e1) in open.iter().enumerate() {
                for &e2 in &open[i + 1..] {
                    if e1.0 == e2.0 || e1.1 == e2.1 {
                        continue;
                    }
                    st.set(e1, true);
                    st.set(e2, true);
                    if st.covered() {
                        matching.swap_remove(k);
                        matching.push(norm(e1));
                        matching.push(norm(e2));
                        continue 'search;
                    }
                    st.set(e1, false);
                    st.set(e2, false);
                }
            }
            st.set(old, true);
        }
        break;
    }
    matching.sort_unstable();
    let local = finish(&st, matching)?;
    if n > EXACT_LIMIT || local.exchange_violations.is_empty() && 2 * local.matching.len() + 1 >= n
    {
        return Ok(local);
    }
    let mut ex = Exact {
        nu: maximum_matching(h).edges.len(),
        best: (local.matching.len(), local.exchange_violations.is_empty()),
        result: local,
        current: Vec::new(),
        decided: vec![false; n],
        budget: NODE_BUDGET,
        done: false,
    };
    st.matched.iter_mut().for_each(|m| *m = false);
    ex.search(&mut st, 0)?;
    Ok(ex.result)
}

/// Branch and bound over matchings, keyed by size and then by the exchange
/// property; the first matching found with the best key is kept.
struct Exact {
    nu: usize,
    best: (usize, bool),
    result: TwoLevelResult,
    current: Vec<(Vertex, Vertex)>,
    /// Vertices already matched or deliberately left uncovered.
    decided: Vec<bool>,
    budget: usize,
    done: bool,
}

impl Exact {
    fn search(&mut self, st: &mut State<'_>, from: Vertex) -> Result<()> {
        if self.done || self.budget == 0 {
            return Ok(());
        }
        self.budget -= 1;
        let n = st.h.n();
        let open = (from..n).filter(|&v| !self.decided[v]).count();
        let upper = self.current.len() + open / 2;
        if upper < self.best.0 || (upper == self.best.0 && self.best.1) {
            return Ok(());
        }
        let Some(v) = (from..n).find(|&v| !self.decided[v]) else {
            if st.covered() {
                let mut m = self.current.clone();
                m.sort_unstable();
                if let Ok(r) = finish(st, m) {
                    let key = (r.matching.len(), r.exchange_violations.is_empty());
                    if key > self.best {
                        self.best = key;
                        self.result = r;
                        self.done = key == (self.nu, true);
                    }
                }
            }
            return Ok(());
        };
        self.decided[v] = true;
        for &w in st.h.neighbors(v) {
            if w > v && !self.decided[w] {
                self.decided[w] = true;
                st.set((v, w), true);
                self.current.push((v, w));
                self.search(st, v + 1)?;
                self.current.pop();
                st.set((v, w), false);
                self.decided[w] = false;
            }
        }
        self.search(st, v + 1)?;
        self.decided[v] = false;
        Ok(())
    }
}

fn norm(e: (Vertex, Vertex)) -> (Vertex, Vertex) {
    (e.0.min(e.1), e.0.max(e.1))
}

fn check_vertex(h: &Graph, v: Vertex) -> Result<()> {
    if v >= h.n() {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n: h.n(),
        })
    } else {
        Ok(())
    }
}

/// Vertices of `y_m` whose neighbors among `xs ∪ extra` are exactly `{x}`.
fn privates(
    h: &Graph,
    y_m: &[Vertex],
    xs: &[bool],
    extra: Option<Vertex>,
    x: Vertex,
) -> Vec<Vertex> {
    y_m.iter()
        .copied()
        .filter(|&y| {
            let mut seen = h
                .neighbors(y)
                .iter()
                .filter(|&&w| xs[w] || Some(w) == extra);
            seen.next() == Some(&x) && seen.next().is_none()
        })
        .collect()
}

fn finish(st: &State<'_>, matching: Vec<(Vertex, Vertex)>) -> Result<TwoLevelResult> {
    let h = st.h;
    let y_m: Vec<Vertex> = h
        .vertices()
        .filter(|&v| st.in_y[v] && !st.matched[v])
        .collect();
    let mut in_ym = vec![false; h.n()];
    y_m.iter().for_each(|&v| in_ym[v] = true);
    let x_m: Vec<Vertex> = h
        .vertices()
        .filter(|&v| st.in_x[v] && !st.matched[v] && h.neighbors(v).iter().any(|&w| in_ym[w]))
        .collect();
    let mut in_xm = vec![false; h.n()];
    x_m.iter().for_each(|&v| in_xm[v] = true);

    if !st.covered() {
        return Err(Error::Postcondition("Y_M is not covered by X_M".into()));
    }
    if let Some(&y) = y_m
        .iter()
        .find(|&&y| h.neighbors(y).iter().any(|&w| in_ym[w]))
    {
        return Err(Error::Postcondition(format!("Y_M is not stable at {y}")));
    }
    let mut private = BTreeMap::new();
    for &x in &x_m {
        match privates(h, &y_m, &in_xm, None, x)[..] {
            [a, b, ..] => {
                private.insert(x, [a, b]);
            }
            _ => {
                return Err(Error::Postcondition(format!(
                    "{x} lacks two private witnesses"
                )))
            }
        }
    }
    let exchange_violations = h
        .vertices()
        .filter(|&v| st.in_x[v] && st.matched[v])
        .filter(|&v| {
            x_m.iter()
                .filter(|&&x| privates(h, &y_m, &in_xm, Some(v), x).len() < 2)
                .count()
                > 1
        })
        .collect();
    Ok(TwoLevelResult {
        matching,
        x_m,
        y_m,
        private,
        exchange_violations,
    })
}
