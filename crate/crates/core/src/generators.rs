//! Named graph families used by fixtures and tests.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::Graph;

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// Star `K_{1,k}` with center `0`.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("valid star")
}

/// `K_{r,s}` with sides `0..r` and `r..r+s`.
pub fn complete_bipartite(r: usize, s: usize) -> Graph {
    let edges = (0..r).flat_map(|u| (r..r + s).map(move |w| (u, w)));
    Graph::new(r + s, edges).expect("valid biclique")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
    Graph::new(n, edges).expect("valid clique")
}

/// `g` plus a new vertex `n` attached to `v`.
pub fn with_pendant(g: &Graph, v: usize) -> Graph {
    let edges = g.edges().iter().copied().chain([(v, g.n())]);
    Graph::new(g.n() + 1, edges).expect("valid pendant extension")
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let g = with_pendant(t, v);
                debug_assert_eq!(g.n(), size);
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Canonical code of a tree: the smallest AHU string over its centers.
pub fn tree_code(g: &Graph) -> String {
    assert!(g.is_tree());
    tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            degree[leaf] = 0;
            for &w in g.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    children.sort();
    let mut s = String::from("(");
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}
