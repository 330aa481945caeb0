use crate::graph::{Graph, Vertex};

fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// One or two centers, by repeated leaf stripping.
fn centers(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(g: &Graph, v: Vertex, parent: Option<Vertex>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode(g, w, Some(v)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Canonical string of an unrooted tree, `None` for non-trees.
pub fn tree_canonical(g: &Graph) -> Option<String> {
    if !is_tree(g) {
        return None;
    }
    centers(g).into_iter().map(|c| encode(g, c, None)).min()
}

pub fn trees_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && tree_canonical(a).is_some() && tree_canonical(a) == tree_canonical(b)
}

pub const CANONICAL_LIMIT: usize = 8;

/// Lexicographically largest upper-triangle adjacency word over all
/// relabelings. Exponential; intended for `n <= 8`.
pub fn canonical_form(g: &Graph) -> Option<u64> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u64;
    loop {
        let mut word = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                word <<= 1;
                if g.has_edge(perm[i], perm[j]) {
                    word |= 1;
                }
            }
        }
        best = best.max(word);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Some(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_trees_match() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = Graph::from_edges(5, [(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(trees_isomorphic(&a, &b));
        assert!(!trees_isomorphic(&a, &p5));
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(tree_canonical(&c4), None);
    }

    #[test]
    fn bicentral_trees() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(trees_isomorphic(&a, &b));
    }

    #[test]
    fn canonical_forms() {
        let p3a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p3a), canonical_form(&p3b));
        assert_ne!(canonical_form(&p3a), canonical_form(&k3));
    }
}
