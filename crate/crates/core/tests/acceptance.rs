//! Acceptance suite. Every criterion runs in order and prints one line:
//!
//! ```text
//! AC-NN PASS|FAIL  <claim>  [elapsed / time bound]  <detail>
//! ```
//!
//! All comparisons are exact (rational arithmetic, tolerance zero); the only
//! tolerances are the wall-clock bounds listed per criterion. The process
//! exits non-zero if any criterion fails.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{chi, ints, nu_t_oracle, q, random_graphs, stable_sets_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmlab_core::generators::{complete_bipartite, cycle, nonisomorphic_trees, path, with_pendant};
use tmlab_core::ineq::{
    balanced_biclique_inequalities, balanced_biclique_inequality, basic_inequalities,
    biclique_all_ones, biclique_lifting_base, edge_lift_counterexample, is_valid,
    lifted_biclique_inequalities, lifted_family, sequential_lift, weighted_biclique,
};
use tmlab_core::polylab::{
    check_complete_description, face_dimension, hull, is_facet, polytope_dimension, vertices,
};
use tmlab_core::separation::separate;
use tmlab_core::totalmatch::{alpha, enumerate_total_matchings, nu, nu_t, tau, tree_max};
use tmlab_core::{Biclique, Family, Graph, Limits, LinearInequality, RationalVector};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn full(g: &Graph, r: usize, s: usize) -> Biclique {
    Biclique::new(g, (0..r).collect(), (r..r + s).collect()).unwrap()
}

fn sorted_incidence(g: &Graph, limits: &Limits) -> Vec<RationalVector> {
    let mut v: Vec<RationalVector> = enumerate_total_matchings(g, limits)
        .unwrap()
        .iter()
        .map(|t| chi(g.num_elements(), t.elements()))
        .collect();
    v.sort();
    v
}

fn all_trees(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(nonisomorphic_trees).collect()
}

fn ac01() -> Outcome {
    let limits = Limits::default();
    for r in 1..=3 {
        let g = complete_bipartite(r, r);
        let best = enumerate_total_matchings(&g, &limits)
            .unwrap()
            .iter()
            .map(|t| t.len())
            .max()
            .unwrap();
        ensure!(best == r, "K_{{{r},{r}}}: enumerated maximum {best}");
    }
    Ok("r = 1, 2, 3".into())
}

fn ac02() -> Outcome {
    let limits = Limits::default();
    let trees = all_trees(6);
    for t in &trees {
        let report = check_complete_description(t, &basic_inequalities(t), &limits).unwrap();
        ensure!(report.complete, "incomplete for {:?}: {} missing", t.edges(), report.missing_facets.len());
    }
    Ok(format!("{} trees", trees.len()))
}

fn ac03() -> Outcome {
    let limits = Limits::default();
    let trees = all_trees(6);
    let zero = q(0, 1);
    let one = q(1, 1);
    for t in &trees {
        let rep = vertices(&basic_inequalities(t), t.num_elements(), &limits).unwrap();
        ensure!(
            rep.vrep.iter().flatten().all(|x| *x == zero || *x == one),
            "fractional vertex for {:?}",
            t.edges()
        );
        ensure!(rep.vrep == sorted_incidence(t, &limits), "vertex set mismatch for {:?}", t.edges());
    }
    Ok(format!("{} trees", trees.len()))
}

fn ac04() -> Outcome {
    let limits = Limits::default();
    let g = complete_bipartite(2, 3);
    let b = full(&g, 2, 3);
    let lifted = lifted_biclique_inequalities(&g, &b).unwrap();
    let edges = [1; 6];
    let expected: Vec<LinearInequality> = [[2, 1, 1, 1, 1], [1, 2, 1, 1, 1]]
        .iter()
        .map(|v| {
            let c: Vec<i64> = v.iter().chain(&edges).copied().collect();
            LinearInequality::new(ints(&c), q(3, 1), Family::Custom("displayed".into()))
        })
        .collect();
    ensure!(lifted == expected, "lifted pair differs: {lifted:?}");
    let dim = polytope_dimension(&g, &limits).unwrap();
    ensure!(dim == 11, "polytope dimension {dim}");
    for l in &lifted {
        let f = face_dimension(&g, l, &limits).unwrap();
        ensure!(f == 10, "lifted face dimension {f}");
    }
    let ones = biclique_all_ones(&g, &b).unwrap();
    ensure!(is_valid(&g, &ones, &limits).unwrap().is_valid(), "all-ones invalid");
    let f_ones = face_dimension(&g, &ones, &limits).unwrap();
    ensure!(f_ones < 10, "all-ones face dimension {f_ones}");
    let w = weighted_biclique(&g, &b, &[q(3, 2), q(1, 2)]).unwrap();
    ensure!(is_valid(&g, &w, &limits).unwrap().is_valid(), "(3/2, 1/2) instance invalid");
    ensure!(!is_facet(&g, &w, &limits).unwrap(), "(3/2, 1/2) instance is a facet");
    let f_w = face_dimension(&g, &w, &limits).unwrap();
    Ok(format!("lifted faces 10/11, all-ones face {f_ones}, (3/2,1/2) face {f_w}"))
}

fn bipartite_system(g: &Graph, max_side: usize) -> Vec<LinearInequality> {
    let mut sys = basic_inequalities(g);
    for r in 2..=max_side {
        sys.extend(balanced_biclique_inequalities(g, r).unwrap());
    }
    sys.extend(lifted_family(g, max_side));
    sys
}

fn ac05() -> Outcome {
    let g = complete_bipartite(2, 3);
    let report = check_complete_description(&g, &bipartite_system(&g, 3), &Limits::default()).unwrap();
    ensure!(report.complete, "K_{{2,3}}: {} facets missing", report.missing_facets.len());
    let t = Instant::now();
    let forced = Limits {
        max_hull_dim: 15,
        ..Limits::default()
    };
    let g = complete_bipartite(3, 3);
    let report = check_complete_description(&g, &bipartite_system(&g, 3), &forced).unwrap();
    ensure!(report.complete, "K_{{3,3}}: {} facets missing", report.missing_facets.len());
    Ok(format!(
        "K_{{2,3}} complete; K_{{3,3}} complete at hull dimension 15 in {:.2?}",
        t.elapsed()
    ))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn ac06() -> Outcome {
    let limits = Limits::default();
    let mut runs = 0;
    for (r, s) in [(2, 3), (2, 4)] {
        let g = complete_bipartite(r, s);
        let b = full(&g, r, s);
        let base = biclique_lifting_base(&g, &b).unwrap();
        let lifted = lifted_biclique_inequalities(&g, &b).unwrap();
        let left: Vec<usize> = (0..r).collect();
        for order in permutations(&left) {
            let run = sequential_lift(&g, &base, &left, &order, &limits).unwrap();
            let step1 = &run.steps[0];
            ensure!(step1.inner_max == q(r as i64 - 1, 1), "step-1 optimum {} on K_{{{r},{s}}}", step1.inner_max);
            let expect = &lifted[order[0]];
            ensure!(run.inequality == *expect, "order {order:?} on K_{{{r},{s}}} gives {:?}", run.inequality.coeffs());
            runs += 1;
        }
    }
    Ok(format!("{runs} lifting orders"))
}

fn ac07() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for (r, s) in [(2, 3), (2, 4)] {
        let g = complete_bipartite(r, s);
        let b = full(&g, r, s);
        let lifted = lifted_biclique_inequalities(&g, &b).unwrap();
        for e in b.edge_elements(&g) {
            let t = edge_lift_counterexample(&g, &b, e).unwrap();
            let z = chi(g.num_elements(), t.elements());
            for ineq in &lifted {
                ensure!(&ineq.lhs(&z).unwrap() == ineq.rhs(), "edge {e}: {t} not tight");
                let mut c = ineq.coeffs().to_vec();
                c[e] += q(1, 1000);
                let raised = LinearInequality::new(c, ineq.rhs().clone(), Family::Custom("raised".into()));
                ensure!(!is_valid(&g, &raised, &limits).unwrap().is_valid(), "edge {e}: raise stays valid");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (edge, inequality) pairs"))
}

fn ac08() -> Outcome {
    let limits = Limits::default();
    let c4 = cycle(4);
    let k22 = Biclique::new(&c4, vec![0, 2], vec![1, 3]).unwrap();
    let ineq = balanced_biclique_inequality(&c4, &k22).unwrap();
    ensure!(is_facet(&c4, &ineq, &limits).unwrap(), "K_{{2,2}} not a facet of C_4");
    for v in 0..4 {
        let h = with_pendant(&c4, v);
        let ineq = balanced_biclique_inequality(&h, &k22).unwrap();
        ensure!(is_facet(&h, &ineq, &limits).unwrap(), "not a facet of C_4 + pendant at {v}");
    }
    let k23 = complete_bipartite(2, 3);
    for v in [0, 2] {
        let h = with_pendant(&k23, v);
        let b = full(&h, 2, 3);
        for l in lifted_biclique_inequalities(&h, &b).unwrap() {
            ensure!(is_facet(&h, &l, &limits).unwrap(), "lifted not a facet of K_{{2,3}} + pendant at {v}");
        }
    }
    Ok("C_4, C_4 + pendant, K_{2,3} + pendant".into())
}

fn ac09() -> Outcome {
    let limits = Limits::default();
    let graphs = random_graphs(2024, 200, 6);
    for g in &graphs {
        let nt = nu_t(g, &limits).unwrap();
        let (a, n, t) = (alpha(g, &limits).unwrap(), nu(g, &limits).unwrap(), tau(g, &limits).unwrap());
        ensure!(nt >= a.max(n), "{:?}: nu_T {nt} < max(alpha {a}, nu {n})", g.edges());
        ensure!(t <= nt, "{:?}: tau {t} > nu_T {nt}", g.edges());
    }
    Ok(format!("{} graphs, 0 violations", graphs.len()))
}

fn ac10() -> Outcome {
    let limits = Limits::default();
    let graphs = random_graphs(2024, 200, 6);
    for g in &graphs {
        let got: Vec<Vec<usize>> = enumerate_total_matchings(g, &limits)
            .unwrap()
            .into_iter()
            .map(|t| t.elements().to_vec())
            .collect();
        ensure!(got == stable_sets_oracle(&g.total_graph()), "stable set mismatch on {:?}", g.edges());
    }
    let trees = all_trees(8);
    for t in &trees {
        ensure!(tree_max(t).unwrap() == nu_t_oracle(t), "tree_max mismatch on {:?}", t.edges());
    }
    for g in [path(2), path(3), cycle(4)] {
        let points = sorted_incidence(&g, &limits);
        let h = hull(&points, &limits).unwrap();
        let v = vertices(&h.hrep, g.num_elements(), &limits).unwrap();
        ensure!(v.vrep == points, "vertices(hull) differs on {:?}", g.edges());
        ensure!(hull(&v.vrep, &limits).unwrap().hrep == h.hrep, "hull(vertices) differs on {:?}", g.edges());
    }
    Ok(format!("{} graphs, {} trees, 3 round trips", graphs.len(), trees.len()))
}

fn ac11() -> Outcome {
    let g = complete_bipartite(2, 2);
    let res = separate(&g, &vec![q(1, 3); 8], 4).unwrap();
    ensure!(res.violated.len() == 1, "{} violations", res.violated.len());
    let v = &res.violated[0];
    ensure!(matches!(v.inequality.label(), Family::BalancedBiclique(_)), "label {:?}", v.inequality.label());
    ensure!(v.amount == q(2, 3), "amount {}", v.amount);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let graphs = random_graphs(1111, 50, 6);
    for g in &graphs {
        let all = enumerate_total_matchings(g, &Limits::default()).unwrap();
        let t = &all[rng.gen_range(0..all.len())];
        let res = separate(g, &chi(g.num_elements(), t.elements()), 4).unwrap();
        ensure!(res.violated.is_empty(), "{t} separated on {:?}", g.edges());
    }
    Ok("K_{2,2} point: one violation of 2/3; 50 incidence vectors: none".into())
}

struct Criterion {
    id: &'static str,
    claim: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: "AC-01", claim: "nu_T(K_{r,r}) = r by enumeration", bound: secs(10), run: ac01 },
        Criterion { id: "AC-02", claim: "basic inequalities describe every tree, n <= 6", bound: secs(300), run: ac02 },
        Criterion { id: "AC-03", claim: "basic systems of trees have 0/1 vertices = total matchings", bound: secs(300), run: ac03 },
        Criterion { id: "AC-04", claim: "K_{2,3} lifted pair, facets, non-facet members", bound: secs(30), run: ac04 },
        Criterion { id: "AC-05", claim: "K_{2,3} and K_{3,3} complete descriptions", bound: secs(1800), run: ac05 },
        Criterion { id: "AC-06", claim: "sequential lifting re-derives the lifted family", bound: secs(60), run: ac06 },
        Criterion { id: "AC-07", claim: "edge coefficients cannot be lifted above one", bound: secs(60), run: ac07 },
        Criterion { id: "AC-08", claim: "biclique facets survive in larger hosts", bound: secs(120), run: ac08 },
        Criterion { id: "AC-09", claim: "nu_T >= max(alpha, nu) and tau <= nu_T", bound: secs(120), run: ac09 },
        Criterion { id: "AC-10", claim: "oracle equivalences and hull round trips", bound: secs(120), run: ac10 },
        Criterion { id: "AC-11", claim: "separation soundness and completeness", bound: secs(60), run: ac11 },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(c.run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.bound => Err(format!("{detail}; over time bound")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "{} {}  {}  [{:.2?} / {:?}]  {}",
            c.id, status, c.claim, elapsed, c.bound, detail
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
