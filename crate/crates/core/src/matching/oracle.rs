//! Exponential reference computations of the matching number, kept
//! independent of the blossom search so the two can be compared.

use std::collections::HashMap;

use crate::error::{guard, Result};
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 16;
pub const BERGE_TUTTE_LIMIT: usize = 14;

/// Maximum matching size by exhaustive branching on the lowest free vertex.
pub fn brute_force_matching_size(g: &Graph) -> Result<usize> {
    guard("brute-force matching", BRUTE_FORCE_LIMIT, g.n())?;
    let adj = g.adjacency_masks();
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut memo = HashMap::new();
    Ok(best(full, &adj, &mut memo))
}

fn best(free: u64, adj: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
    if free == 0 {
        return 0;
    }
    if let Some(&m) = memo.get(&free) {
        return m;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut result = best(rest, adj, memo);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        result = result.max(1 + best(rest & !(1 << w), adj, memo));
    }
    memo.insert(free, result);
    result
}

/// Deficiency as `max_S (odd components of G - S) - |S|` over all vertex
/// subsets `S` (including the empty set).
pub fn berge_tutte_deficiency(g: &Graph) -> Result<usize> {
    guard("Berge-Tutte enumeration", BERGE_TUTTE_LIMIT, g.n())?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let full = (1u64 << n) - 1;
    let mut best = 0i64;
    for s in 0..=full {
        let odd = odd_components(full & !s, &adj) as i64;
        best = best.max(odd - i64::from(s.count_ones() as u16));
    }
    Ok(best as usize)
}

fn odd_components(mut remaining: u64, adj: &[u64]) -> usize {
    let alive = remaining;
    let mut odd = 0;
    while remaining != 0 {
        let start = remaining & remaining.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & alive & !comp;
            comp |= new;
            frontier |= new;
        }
        if comp.count_ones() % 2 == 1 {
            odd += 1;
        }
        remaining &= !comp;
    }
    odd
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(brute_force_matching_size(&cycle(5)).unwrap(), 2);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_force_matching_size(&k4).unwrap(), 2);
        assert_eq!(brute_force_matching_size(&Graph::empty(0)).unwrap(), 0);
        assert!(brute_force_matching_size(&Graph::empty(17)).is_err());
    }

    #[test]
    fn berge_tutte_small_cases() {
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(berge_tutte_deficiency(&claw).unwrap(), 2);
        assert_eq!(berge_tutte_deficiency(&cycle(6)).unwrap(), 0);
        assert_eq!(berge_tutte_deficiency(&Graph::empty(3)).unwrap(), 3);
        assert!(berge_tutte_deficiency(&Graph::empty(15)).is_err());
    }
}
