//! Independent oracles shared by the integration tests. Nothing here calls
//! into the enumeration or polyhedral code under test; only `Graph`
//! accessors are used.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmlab_core::{Graph, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x, 1)).collect()
}

/// `count` random graphs with `0 <= n <= max_n`, edge density drawn per graph.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Endpoints of every element, vertices as `(v, v)`.
fn element_ends(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n()).map(|v| (v, v)).chain(g.edges().iter().copied()).collect()
}

/// Adjacency straight from the definition: two distinct elements conflict
/// when they share an endpoint or are the two ends of an edge.
pub fn conflict(g: &Graph, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let ends = element_ends(g);
    let (a0, a1) = ends[a];
    let (b0, b1) = ends[b];
    let a_is_vertex = a0 == a1;
    let b_is_vertex = b0 == b1;
    match (a_is_vertex, b_is_vertex) {
        (true, true) => g.has_edge(a0, b0),
        _ => a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1,
    }
}

/// All total matchings by include/exclude branching, sorted.
pub fn total_matchings_oracle(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == g.num_elements() {
            out.push(cur.clone());
            return;
        }
        go(g, i + 1, cur, out);
        if cur.iter().all(|&a| !conflict(g, a, i)) {
            cur.push(i);
            go(g, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Independent sets of an arbitrary graph, sorted.
pub fn stable_sets_oracle(h: &Graph) -> Vec<Vec<usize>> {
    fn go(h: &Graph, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == h.n() {
            out.push(cur.clone());
            return;
        }
        go(h, i + 1, cur, out);
        if cur.iter().all(|&a| !h.has_edge(a, i)) {
            cur.push(i);
            go(h, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(h, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn nu_t_oracle(g: &Graph) -> usize {
    total_matchings_oracle(g).iter().map(Vec::len).max().unwrap_or(0)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn alpha_oracle(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap()
}

pub fn nu_oracle(g: &Graph) -> usize {
    let e = g.edges();
    subsets(e.len())
        .filter(|s| {
            let mut used = vec![false; g.n()];
            s.iter().all(|&j| {
                let (u, v) = e[j];
                let ok = !used[u] && !used[v];
                used[u] = true;
                used[v] = true;
                ok
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap()
}

/// Smallest set of elements such that every element is in it or in conflict
/// with a member.
pub fn tau_oracle(g: &Graph) -> usize {
    let len = g.num_elements();
    subsets(len)
        .filter(|c| (0..len).all(|a| c.iter().any(|&x| conflict(g, x, a))))
        .map(|c| c.len())
        .min()
        .unwrap()
}

/// Induced bicliques `(R, S)` by brute force over pairs of vertex subsets,
/// using the orientation convention `r < s`, or `r = s` with `R < S`.
pub fn bicliques_oracle(g: &Graph, max_side: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let independent =
        |s: &[usize]| s.iter().all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)));
    let sets: Vec<Vec<usize>> = subsets(g.n())
        .filter(|s| !s.is_empty() && s.len() <= max_side && independent(s))
        .collect();
    let mut out = Vec::new();
    for a in &sets {
        for b in &sets {
            let oriented = a.len() < b.len() || (a.len() == b.len() && a < b);
            let complete = a.iter().all(|&u| b.iter().all(|&w| g.has_edge(u, w)));
            if oriented && complete {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort_by(|x, y| (x.0.len(), x.1.len(), &x.0, &x.1).cmp(&(y.0.len(), y.1.len(), &y.0, &y.1)));
    out
}

/// 0/1 vector of a set of elements.
pub fn chi(len: usize, set: &[usize]) -> Vec<Rational> {
    let mut z = vec![q(0, 1); len];
    for &a in set {
        z[a] = q(1, 1);
    }
    z
}

/// Affine rank of 0/1 points, by fraction-free elimination over i128.
pub fn affine_rank_oracle(points: &[Vec<usize>], len: usize) -> usize {
    if points.is_empty() {
        return 0;
    }
    let row = |p: &Vec<usize>| {
        let mut r = vec![0i128; len];
        for &a in p {
            r[a] = 1;
        }
        r
    };
    let base = row(&points[0]);
    let mut rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| row(p).iter().zip(&base).map(|(x, y)| x - y).collect())
        .collect();
    let mut rank = 0;
    for c in 0..len {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = *x * pivot[c] - f * p;
                }
                let g = row.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    row.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank + 1
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
