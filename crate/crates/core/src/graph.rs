//! Simple undirected graphs with a canonical joint indexing of vertices and
//! edges.
//!
//! Element `i < n` is vertex `i`; element `n + j` is the `j`-th edge in
//! lexicographic `(min endpoint, max endpoint)` order.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Simple, loopless, undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

/// A vertex or an edge, resolved from an element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    /// Edge with its position in the canonical edge list and its endpoints.
    Edge { index: usize, u: usize, v: usize },
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge { u, v, .. } => write!(f, "e{u}-{v}"),
        }
    }
}

impl Graph {
    /// Builds a graph, canonicalizing the edge order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }

        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (j, &(u, v)) in list.iter().enumerate() {
            neighbors[u].push(v);
            neighbors[v].push(u);
            incident[u].push(j);
            incident[v].push(j);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            neighbors,
            incident,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            neighbors: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of elements, `n + m`.
    pub fn num_elements(&self) -> usize {
        self.n + self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Canonical indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Canonical index of edge `{u, v}`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Element index of edge `{u, v}`.
    pub fn edge_element(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index(u, v).map(|j| self.n + j)
    }

    /// Resolves an element index.
    pub fn element(&self, index: usize) -> Result<Element> {
        if index < self.n {
            Ok(Element::Vertex(index))
        } else if index < self.num_elements() {
            let j = index - self.n;
            let (u, v) = self.edges[j];
            Ok(Element::Edge { index: j, u, v })
        } else {
            Err(Error::ElementOutOfRange {
                element: index,
                len: self.num_elements(),
            })
        }
    }

    /// Whether two elements are adjacent: vertices joined by an edge, edges
    /// sharing an endpoint, or an edge and one of its endpoints. Every element
    /// is adjacent to itself.
    pub fn adjacent(&self, a: usize, b: usize) -> Result<bool> {
        let ea = self.element(a)?;
        let eb = self.element(b)?;
        if a == b {
            return Ok(true);
        }
        Ok(match (ea, eb) {
            (Element::Vertex(x), Element::Vertex(y)) => self.has_edge(x, y),
            (Element::Vertex(x), Element::Edge { u, v, .. })
            | (Element::Edge { u, v, .. }, Element::Vertex(x)) => x == u || x == v,
            (Element::Edge { u: a1, v: a2, .. }, Element::Edge { u: b1, v: b2, .. }) => {
                a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2
            }
        })
    }

    /// Elements adjacent to `a`, excluding `a` itself, in increasing order.
    pub fn element_neighbors(&self, a: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        match self.element(a)? {
            Element::Vertex(v) => {
                out.extend_from_slice(&self.neighbors[v]);
                out.extend(self.incident[v].iter().map(|j| self.n + j));
            }
            Element::Edge { index, u, v } => {
                out.push(u);
                out.push(v);
                for &j in self.incident[u].iter().chain(&self.incident[v]) {
                    if j != index {
                        out.push(self.n + j);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Adjacency bitmasks over elements, one per element. Requires
    /// `n + m <= 64`.
    pub(crate) fn element_masks(&self) -> Vec<u64> {
        debug_assert!(self.num_elements() <= 64);
        (0..self.num_elements())
            .map(|a| {
                self.element_neighbors(a)
                    .expect("index in range")
                    .into_iter()
                    .fold(0u64, |acc, b| acc | (1u64 << b))
            })
            .collect()
    }

    /// The total graph: one node per element, joined when the elements are
    /// adjacent. Node indices follow the element indexing.
    pub fn total_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.num_elements() {
            for b in self.element_neighbors(a).expect("index in range") {
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.num_elements(), edges).expect("adjacent pairs form a simple graph")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Connected with `m = n - 1`. The graph with no vertices is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Two-coloring `(A1, A2)` with the smallest vertex of every component in
    /// `A1`, or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("colored on push");
                for &w in &self.neighbors[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a1, mut a2) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                a1.push(v);
            } else {
                a2.push(v);
            }
        }
        Some((a1, a2))
    }

    /// Chordality via maximum cardinality search and a perfect elimination
    /// ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // order[i] is the i-th vertex picked; the reverse is a PEO if chordal.
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered[v] = true;
            order.push(v);
            for &w in &self.neighbors[v] {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // For each v, its earlier-picked neighbors must form a clique; it is
        // enough that they are all adjacent to the latest of them.
        for &v in &order {
            let earlier: Vec<usize> = self.neighbors[v]
                .iter()
                .copied()
                .filter(|&w| pos[w] < pos[v])
                .collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
                if earlier
                    .iter()
                    .any(|&w| w != parent && !self.has_edge(w, parent))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Maps every element of `self` to the corresponding element of
    /// `self.relabel(perm)`.
    pub fn element_permutation(&self, perm: &[usize]) -> Result<Vec<usize>> {
        let h = self.relabel(perm)?;
        let mut map: Vec<usize> = perm.to_vec();
        for &(u, v) in &self.edges {
            map.push(h.edge_element(perm[u], perm[v]).expect("edge survives relabeling"));
        }
        Ok(map)
    }

    fn is_independent_vertex_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// All induced bicliques `(R, S)` with `1 <= |R| <= |S| <= max_side`, one
    /// per vertex set, sorted by `(r, s, R, S)`. When `|R| = |S|` the side with
    /// the lexicographically smaller vertex list is `R`.
    pub fn induced_bicliques(&self, max_side: usize) -> Vec<Biclique> {
        let mut out = Vec::new();
        let mut r_side = Vec::new();
        self.grow_left(0, max_side, &mut r_side, &mut out);
        out.sort_by(|a, b| {
            (a.r(), a.s(), &a.left, &a.right).cmp(&(b.r(), b.s(), &b.left, &b.right))
        });
        out
    }

    fn grow_left(&self, start: usize, max_side: usize, left: &mut Vec<usize>, out: &mut Vec<Biclique>) {
        if !left.is_empty() {
            let common: Vec<usize> = (0..self.n)
                .filter(|&w| left.iter().all(|&u| self.has_edge(u, w)))
                .collect();
            let mut right = Vec::new();
            self.grow_right(&common, 0, left, max_side, &mut right, out);
        }
        if left.len() == max_side {
            return;
        }
        for v in start..self.n {
            if left.iter().all(|&u| !self.has_edge(u, v)) {
                left.push(v);
                self.grow_left(v + 1, max_side, left, out);
                left.pop();
            }
        }
    }

    fn grow_right(
        &self,
        candidates: &[usize],
        start: usize,
        left: &[usize],
        max_side: usize,
        right: &mut Vec<usize>,
        out: &mut Vec<Biclique>,
    ) {
        if right.len() >= left.len() && (right.len() > left.len() || left < right.as_slice()) {
            out.push(Biclique {
                left: left.to_vec(),
                right: right.clone(),
                induced: true,
            });
        }
        if right.len() == max_side {
            return;
        }
        for i in start..candidates.len() {
            let w = candidates[i];
            if right.iter().all(|&x| !self.has_edge(x, w)) {
                right.push(w);
                self.grow_right(candidates, i + 1, left, max_side, right, out);
                right.pop();
            }
        }
    }
}

/// Complete bipartite subgraph with sides `R` (left) and `S` (right).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biclique {
    left: Vec<usize>,
    right: Vec<usize>,
    induced: bool,
}

impl Biclique {
    /// Checks that every `R`-`S` pair is an edge of `g` and records whether
    /// the subgraph is induced. Sides are stored sorted.
    pub fn new(g: &Graph, mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        right.sort_unstable();
        for &v in left.iter().chain(&right) {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        if left.windows(2).any(|w| w[0] == w[1])
            || right.windows(2).any(|w| w[0] == w[1])
            || left.iter().any(|v| right.binary_search(v).is_ok())
        {
            return Err(Error::NotABiclique);
        }
        if left.iter().any(|&u| right.iter().any(|&w| !g.has_edge(u, w))) {
            return Err(Error::NotABiclique);
        }
        let induced = g.is_independent_vertex_set(&left) && g.is_independent_vertex_set(&right);
        Ok(Biclique {
            left,
            right,
            induced,
        })
    }

    /// Side `R`.
    pub fn left(&self) -> &[usize] {
        &self.left
    }

    /// Side `S`.
    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn r(&self) -> usize {
        self.left.len()
    }

    pub fn s(&self) -> usize {
        self.right.len()
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.left.iter().chain(&self.right).copied()
    }

    /// Element indices of the biclique edges in `g`, in `(R, S)` order.
    pub fn edge_elements(&self, g: &Graph) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.r() * self.s());
        for &u in &self.left {
            for &w in &self.right {
                out.push(g.edge_element(u, w).expect("biclique edge present"));
            }
        }
        out
    }

    pub(crate) fn check_in(&self, g: &Graph) -> Result<()> {
        let again = Biclique::new(g, self.left.clone(), self.right.clone())?;
        if !again.induced {
            return Err(Error::NotInduced);
        }
        Ok(())
    }
}
