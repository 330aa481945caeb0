use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};

pub const REJECTION_TRIES: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree on a shuffled vertex order.
pub fn random_tree_with(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        b.add_edge(order[i], order[j]);
    }
    b.build()
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut rng(seed))
}

pub(crate) fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Connected `G(n, p)` sample: rejection sampling, then a random spanning
/// tree united with one more sample once the tries run out.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside (0, 1]"
        )));
    }
    let mut r = rng(seed);
    for _ in 0..REJECTION_TRIES {
        let g = gnp(n, p, &mut r)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    let tree = random_tree_with(n, &mut r)?;
    let extra = gnp(n, p, &mut r)?;
    let mut b = GraphBuilder::from_graph(&tree);
    for (u, v) in extra.edges() {
        b.add_edge(u, v);
    }
    b.build()
}

/// Random two-level instance `(H, X, Y)` with `Y ⊆ N(X)`: vertices `0..x`
/// form `X`, the rest `Y`; edges inside `X`, inside `Y` and across appear
/// with probability `p`, and every `y` gets at least one neighbor in `X`.
pub fn random_two_level(
    x: usize,
    y: usize,
    p: f64,
    rng: &mut impl Rng,
) -> Result<(Graph, Vec<Vertex>, Vec<Vertex>)> {
    if x == 0 && y > 0 {
        return Err(Error::InvalidParameter("Y needs a nonempty X".into()));
    }
    let n = x + y;
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    for v in x..n {
        let u = rng.gen_range(0..x);
        b.add_edge(u, v);
    }
    Ok((b.build()?, (0..x).collect(), (x..n).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_connected() {
        for seed in 0..20 {
            let g = random_connected(9, 0.2, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(9, 0.2, seed).unwrap());
        }
        let t = random_tree(12, 3).unwrap();
        assert_eq!(t.edge_count(), 11);
        assert!(t.is_connected());
    }

    #[test]
    fn sparse_falls_back_to_tree() {
        let g = random_connected(30, 0.001, 1).unwrap();
        assert!(g.is_connected());
        assert!(g.edge_count() >= 29);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(random_connected(0, 0.5, 0).is_err());
        assert!(random_connected(3, 1.5, 0).is_err());
        assert!(random_connected(3, 0.0, 0).is_err());
    }

    #[test]
    fn extremes() {
        assert_eq!(random_connected(1, 0.5, 9).unwrap().n(), 1);
        assert_eq!(random_connected(6, 1.0, 9).unwrap().edge_count(), 15);
    }
}
