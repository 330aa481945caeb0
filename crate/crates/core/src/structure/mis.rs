use crate::error::{guard, Result};
use crate::graph::{Graph, Vertex};

pub const MIS_LIMIT: usize = 40;

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Size of a maximum independent set within `cand`.
///
/// Branches on the closed neighborhood of a minimum-degree candidate: every
/// maximal independent set contains one of those vertices.
fn mis_size(adj: &[u64], cand: u64, current: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(current);
        return;
    }
    if current + cand.count_ones() <= *best {
        return;
    }
    let pivot = bits(cand)
        .min_by_key(|&v| (adj[v] & cand).count_ones())
        .expect("cand is nonempty");
    let branch = (adj[pivot] & cand) | 1 << pivot;
    for u in bits(branch) {
        mis_size(adj, cand & !(adj[u] | 1 << u), current + 1, best);
    }
}

fn alpha_of(adj: &[u64], cand: u64) -> u32 {
    let mut best = 0;
    mis_size(adj, cand, 0, &mut best);
    best
}

/// A maximum independent set, lexicographically smallest among all maximum ones.
pub fn max_independent_set(g: &Graph) -> Result<Vec<Vertex>> {
    guard("maximum independent set", MIS_LIMIT, g.n())?;
    let adj = g.adjacency_masks();
    let full = if g.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - g.n())
    };
    let target = alpha_of(&adj, full);
    let mut chosen = Vec::new();
    let mut cand = full;
    let mut need = target;
    for v in 0..g.n() {
        if need == 0 {
            break;
        }
        if cand >> v & 1 == 0 {
            continue;
        }
        let rest = cand & !(adj[v] | 1 << v);
        if alpha_of(&adj, rest) + 1 == need {
            chosen.push(v);
            cand = rest;
            need -= 1;
        } else {
            cand &= !(1 << v);
        }
    }
    Ok(chosen)
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    guard("maximum independent set", MIS_LIMIT, g.n())?;
    let adj = g.adjacency_masks();
    let full = if g.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - g.n())
    };
    Ok(alpha_of(&adj, full) as usize)
}

/// Largest `t` such that `G` has an induced `K_{1,t}`; 0 for edgeless graphs.
pub fn local_independence_number(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for v in g.vertices() {
        if g.degree(v) <= best {
            continue;
        }
        let (nbhd, _) = g.induced_subgraph(g.neighbors(v))?;
        best = best.max(independence_number(&nbhd)?);
    }
    Ok(best)
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    independence_number(&g.complement())
}
