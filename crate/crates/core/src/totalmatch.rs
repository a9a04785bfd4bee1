//! Enumeration and exact optimization of total matchings, and the classical
//! parameters alpha (stable set), nu (matching) and tau (total cover).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::{Error, Graph, Limits, Rational, RationalVector, Result};

/// A set of pairwise independent elements, stored as sorted element indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalMatching {
    elements: Vec<usize>,
}

impl TotalMatching {
    /// Validates `elements` against `g`.
    pub fn new(g: &Graph, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        for (i, &a) in elements.iter().enumerate() {
            g.element(a)?;
            for &b in &elements[i + 1..] {
                if g.adjacent(a, b)? {
                    return Err(Error::NotIndependent { a, b });
                }
            }
        }
        Ok(TotalMatching { elements })
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        TotalMatching {
            elements: mask_elements(mask),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }
}

impl fmt::Display for TotalMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn mask_elements(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub(crate) fn check_cap(g: &Graph, limits: &Limits) -> Result<()> {
    let cap = limits.max_elements.min(Limits::HARD_MAX_ELEMENTS);
    if g.num_elements() > cap {
        return Err(Error::CapExceeded {
            what: "total matching enumeration",
            size: g.num_elements(),
            cap,
        });
    }
    Ok(())
}

/// Every total matching as an element bitmask, in lexicographic order of the
/// sorted element lists (the empty set first).
pub(crate) fn matching_masks(g: &Graph, limits: &Limits) -> Result<Vec<u64>> {
    check_cap(g, limits)?;
    let adj = g.element_masks();
    let mut out = Vec::new();
    stable_sets(&adj, 0, 0, 0, &mut out);
    Ok(out)
}

fn stable_sets(adj: &[u64], start: usize, current: u64, blocked: u64, out: &mut Vec<u64>) {
    out.push(current);
    for i in start..adj.len() {
        if blocked & (1 << i) == 0 {
            stable_sets(adj, i + 1, current | (1 << i), blocked | adj[i], out);
        }
    }
}

/// All total matchings of `g`, each once, in lexicographic order.
pub fn enumerate_total_matchings(g: &Graph, limits: &Limits) -> Result<Vec<TotalMatching>> {
    Ok(matching_masks(g, limits)?
        .into_iter()
        .map(TotalMatching::from_mask)
        .collect())
}

/// How a maximum total matching was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    TreeDp,
    Enumeration,
}

/// A maximum total matching. Trees use the linear-time dynamic program;
/// other graphs fall back to enumeration within `limits`.
pub fn maximum_total_matching(g: &Graph, limits: &Limits) -> Result<(TotalMatching, Method)> {
    if g.is_tree() {
        return Ok((tree_max_matching(g)?, Method::TreeDp));
    }
    let best = matching_masks(g, limits)?
        .into_iter()
        .fold(0u64, |best, m| {
            if m.count_ones() > best.count_ones() {
                m
            } else {
                best
            }
        });
    Ok((TotalMatching::from_mask(best), Method::Enumeration))
}

/// Maximum total matching size.
pub fn nu_t(g: &Graph, limits: &Limits) -> Result<usize> {
    maximum_total_matching(g, limits).map(|(t, _)| t.len())
}

/// Maximum total matching size of a tree by dynamic programming.
pub fn tree_max(g: &Graph) -> Result<usize> {
    tree_max_matching(g).map(|t| t.len())
}

const NEG: i64 = i64::MIN / 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    /// The vertex itself is chosen.
    Taken,
    /// The edge to the recorded child is chosen.
    MatchedDown,
    /// Neither the vertex nor an edge to a child is chosen.
    Free,
}

/// A maximum total matching of a tree, built by a rooted dynamic program over
/// the states [`State::Taken`], [`State::MatchedDown`], [`State::Free`].
pub fn tree_max_matching(g: &Graph) -> Result<TotalMatching> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let parent = &parent;
    let children = |v: usize| g.neighbors(v).iter().copied().filter(move |&w| parent[v] != w);

    let mut taken = vec![0i64; n];
    let mut down = vec![NEG; n];
    let mut down_child = vec![usize::MAX; n];
    let mut free = vec![0i64; n];
    let best = |t: i64, d: i64, f: i64| t.max(d).max(f);

    for &v in order.iter().rev() {
        let mut t = 1;
        let mut f = 0;
        for c in children(v) {
            t += down[c].max(free[c]);
            f += best(taken[c], down[c], free[c]);
        }
        // Matching v to child c replaces c's best value by 1 + free[c].
        let mut d = NEG;
        let mut dc = usize::MAX;
        for c in children(v) {
            let cand = f - best(taken[c], down[c], free[c]) + 1 + free[c];
            if cand > d {
                d = cand;
                dc = c;
            }
        }
        taken[v] = t;
        down[v] = d;
        down_child[v] = dc;
        free[v] = f;
    }

    let pick = |v: usize, allow_taken: bool| {
        let mut s = State::Free;
        let mut val = free[v];
        if down[v] > val {
            s = State::MatchedDown;
            val = down[v];
        }
        if allow_taken && taken[v] > val {
            s = State::Taken;
        }
        s
    };

    let mut elements = Vec::new();
    let mut states = vec![State::Free; n];
    states[0] = pick(0, true);
    for &v in &order {
        match states[v] {
            State::Taken => {
                elements.push(v);
                for c in children(v) {
                    states[c] = pick(c, false);
                }
            }
            State::MatchedDown => {
                let dc = down_child[v];
                elements.push(g.edge_element(v, dc).expect("tree edge"));
                for c in children(v) {
                    states[c] = if c == dc { State::Free } else { pick(c, true) };
                }
            }
            State::Free => {
                for c in children(v) {
                    states[c] = pick(c, true);
                }
            }
        }
    }
    let root_value = best(taken[0], down[0], free[0]);
    debug_assert_eq!(elements.len() as i64, root_value);
    TotalMatching::new(g, elements)
}

/// Largest independent set of a graph given as neighbor masks.
fn max_independent(adj: &[u64]) -> u64 {
    fn go(adj: &[u64], candidates: u64, current: u64, best: &mut u64) {
        if candidates == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        go(adj, candidates & !bit & !adj[v], current | bit, best);
        go(adj, candidates & !bit, current, best);
    }
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut best = 0;
    go(adj, all, 0, &mut best);
    best
}

/// Stability number: the largest set of pairwise non-adjacent vertices.
pub fn alpha(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap(g, limits)?;
    let adj: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    Ok(max_independent(&adj).count_ones() as usize)
}

/// Matching number: the largest set of pairwise disjoint edges.
pub fn nu(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap(g, limits)?;
    let adj: Vec<u64> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(j, &(u, v))| {
            g.incident_edges(u)
                .iter()
                .chain(g.incident_edges(v))
                .filter(|&&k| k != j)
                .fold(0u64, |acc, &k| acc | (1 << k))
        })
        .collect();
    Ok(max_independent(&adj).count_ones() as usize)
}

/// Minimum total cover size. A set `C` of elements covers `a` when `a` is in
/// `C` or adjacent to a member of `C`; a total cover covers every element.
pub fn tau(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap(g, limits)?;
    let n_el = g.num_elements();
    let closed: Vec<u64> = g
        .element_masks()
        .into_iter()
        .enumerate()
        .map(|(a, m)| m | (1 << a))
        .collect();
    let all = if n_el == 64 { u64::MAX } else { (1u64 << n_el) - 1 };

    // Branch on the lowest uncovered element: some member of its closed
    // neighborhood must be in the cover.
    fn covers(closed: &[u64], all: u64, covered: u64, budget: usize) -> bool {
        if covered == all {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let a = (!covered & all).trailing_zeros() as usize;
        let mut choices = closed[a];
        while choices != 0 {
            let c = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if covers(closed, all, covered | closed[c], budget - 1) {
                return true;
            }
        }
        false
    }

    Ok((0..=n_el)
        .find(|&k| covers(&closed, all, 0, k))
        .expect("the full element set covers everything"))
}

/// 0/1 characteristic vector of `t` in canonical element order.
pub fn incidence(g: &Graph, t: &TotalMatching) -> Result<RationalVector> {
    let t = TotalMatching::new(g, t.elements.clone())?;
    let mut z = vec![Rational::zero(); g.num_elements()];
    for &a in t.elements() {
        z[a] = Rational::one();
    }
    Ok(z)
}

pub(crate) fn mask_incidence(mask: u64, len: usize) -> RationalVector {
    (0..len)
        .map(|a| {
            if mask & (1 << a) != 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}
