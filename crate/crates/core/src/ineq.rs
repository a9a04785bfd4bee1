//! Linear inequalities over element space and the valid inequality families
//! of the total matching polytope: vertex stars, edge cliques,
//! nonnegativity, balanced biclique inequalities and the lifted non-balanced
//! biclique inequalities. Also hosts the exhaustive sequential lifting engine.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::totalmatch::{matching_masks, TotalMatching};
use crate::{Biclique, Error, Graph, Limits, Rational, Result};

/// Which family an inequality belongs to, with its generating substructure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x_v + sum_{e in delta(v)} y_e <= 1`.
    BasicVertex { vertex: usize },
    /// `x_u + x_v + y_uv <= 1`.
    BasicEdge { u: usize, v: usize },
    /// `-z_a <= 0`.
    NonNegativity { element: usize },
    /// All-ones over an induced `K_{r,r}` with right-hand side `r`.
    BalancedBiclique(Biclique),
    /// Lifted inequality of an induced `K_{r,s}`, `s > r > 1`, whose
    /// distinguished vertex `t` in the `R` side carries `s - r + 1`.
    LiftedBiclique { biclique: Biclique, distinguished: usize },
    Custom(String),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::BasicVertex { .. } => "basic-vertex",
            Family::BasicEdge { .. } => "basic-edge",
            Family::NonNegativity { .. } => "nonneg",
            Family::BalancedBiclique(_) => "balanced-biclique",
            Family::LiftedBiclique { .. } => "lifted-biclique",
            Family::Custom(_) => "custom",
        }
    }
}

/// `coeffs . z <= rhs` with exact rational data, coordinates in canonical
/// element order.
///
/// Equality compares normalized forms and ignores the label.
#[derive(Clone, Debug)]
pub struct LinearInequality {
    coeffs: Vec<Rational>,
    rhs: Rational,
    label: Family,
}

/// Coprime integer form of an inequality: the unique positive multiple with
/// integer data whose entries have gcd one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalizedInequality {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
}

impl NormalizedInequality {
    pub fn to_inequality(&self, label: Family) -> LinearInequality {
        LinearInequality::new(
            self.coeffs.iter().cloned().map(Rational::from_integer).collect(),
            Rational::from_integer(self.rhs.clone()),
            label,
        )
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

impl LinearInequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational, label: Family) -> Self {
        LinearInequality { coeffs, rhs, label }
    }

    /// Inequality with integer data labelled [`Family::Custom`].
    pub fn custom(coeffs: &[i64], rhs: i64, name: &str) -> Self {
        LinearInequality::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            Rational::from_integer(rhs.into()),
            Family::Custom(name.into()),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    pub fn label(&self) -> &Family {
        &self.label
    }

    pub fn with_label(mut self, label: Family) -> Self {
        self.label = label;
        self
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lhs(&self, z: &[Rational]) -> Result<Rational> {
        if z.len() != self.coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: self.coeffs.len(),
                found: z.len(),
            });
        }
        Ok(self.coeffs.iter().zip(z).map(|(a, b)| a * b).sum())
    }

    /// `coeffs . z - rhs`; positive means violated.
    pub fn violation(&self, z: &[Rational]) -> Result<Rational> {
        Ok(self.lhs(z)? - &self.rhs)
    }

    pub(crate) fn lhs_mask(&self, mut mask: u64) -> Rational {
        let mut total = Rational::zero();
        while mask != 0 {
            total += &self.coeffs[mask.trailing_zeros() as usize];
            mask &= mask - 1;
        }
        total
    }

    pub fn normalized(&self) -> NormalizedInequality {
        let lcm = self
            .coeffs
            .iter()
            .chain(core::iter::once(&self.rhs))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .chain(core::iter::once(&self.rhs))
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut scaled: Vec<BigInt> = if g.is_zero() {
            scaled
        } else {
            scaled.into_iter().map(|x| x / &g).collect()
        };
        let rhs = scaled.pop().expect("rhs present");
        NormalizedInequality {
            coeffs: scaled,
            rhs,
        }
    }

    /// The same inequality in coprime integer form, keeping the label.
    pub fn normalize(&self) -> LinearInequality {
        self.normalized().to_inequality(self.label.clone())
    }

    /// Multiplies coefficients and right-hand side by a positive rational.
    pub fn scaled(&self, factor: &Rational) -> Result<LinearInequality> {
        if !factor.is_positive() {
            return Err(Error::Precondition("scaling factor must be positive".into()));
        }
        Ok(LinearInequality::new(
            self.coeffs.iter().map(|c| c * factor).collect(),
            &self.rhs * factor,
            self.label.clone(),
        ))
    }

    fn check_dim(&self, g: &Graph) -> Result<()> {
        if self.dim() != g.num_elements() {
            return Err(Error::LengthMismatch {
                expected: g.num_elements(),
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl PartialEq for LinearInequality {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for LinearInequality {}

fn indicator(len: usize, ones: impl IntoIterator<Item = usize>) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); len];
    for a in ones {
        c[a] = Rational::one();
    }
    c
}

/// Vertex stars, edge inequalities and nonnegativity, `2n + 2m` rows in that
/// order.
pub fn basic_inequalities(g: &Graph) -> Vec<LinearInequality> {
    let len = g.num_elements();
    let mut out = Vec::with_capacity(2 * len);
    for v in 0..g.n() {
        let ones = core::iter::once(v).chain(g.incident_edges(v).iter().map(|j| g.n() + j));
        out.push(LinearInequality::new(
            indicator(len, ones),
            Rational::one(),
            Family::BasicVertex { vertex: v },
        ));
    }
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        out.push(LinearInequality::new(
            indicator(len, [u, v, g.n() + j]),
            Rational::one(),
            Family::BasicEdge { u, v },
        ));
    }
    for a in 0..len {
        let mut c = vec![Rational::zero(); len];
        c[a] = -Rational::one();
        out.push(LinearInequality::new(
            c,
            Rational::zero(),
            Family::NonNegativity { element: a },
        ));
    }
    out
}

fn biclique_support(g: &Graph, b: &Biclique) -> Vec<usize> {
    b.vertices().chain(b.edge_elements(g)).collect()
}

/// Balanced biclique inequality of an induced `K_{r,r}`.
pub fn balanced_biclique_inequality(g: &Graph, b: &Biclique) -> Result<LinearInequality> {
    b.check_in(g)?;
    if b.r() != b.s() {
        return Err(Error::Precondition("balanced biclique needs r = s".into()));
    }
    Ok(LinearInequality::new(
        indicator(g.num_elements(), biclique_support(g, b)),
        int(b.r()),
        Family::BalancedBiclique(b.clone()),
    ))
}

/// One balanced biclique inequality per induced `K_{r,r}` of `g`.
pub fn balanced_biclique_inequalities(g: &Graph, r: usize) -> Result<Vec<LinearInequality>> {
    if r == 0 {
        return Err(Error::Precondition("biclique side must be at least 1".into()));
    }
    g.induced_bicliques(r)
        .iter()
        .filter(|b| b.r() == r && b.s() == r)
        .map(|b| balanced_biclique_inequality(g, b))
        .collect()
}

fn check_non_balanced(b: &Biclique) -> Result<()> {
    if !(b.s() > b.r() && b.r() > 1) {
        return Err(Error::Precondition(alloc::format!(
            "lifted biclique inequalities need s > r > 1, got r = {}, s = {}",
            b.r(),
            b.s()
        )));
    }
    Ok(())
}

/// The `r` lifted inequalities of an induced non-balanced `K_{r,s}`: one per
/// `t` in `R`, with `s - r + 1` on `x_t` and `1` on every other vertex and
/// edge of the biclique, right-hand side `s`.
pub fn lifted_biclique_inequalities(g: &Graph, b: &Biclique) -> Result<Vec<LinearInequality>> {
    b.check_in(g)?;
    check_non_balanced(b)?;
    let base = indicator(g.num_elements(), biclique_support(g, b));
    let top = int(b.s() - b.r() + 1);
    Ok(b.left()
        .iter()
        .map(|&t| {
            let mut c = base.clone();
            c[t] = top.clone();
            LinearInequality::new(
                c,
                int(b.s()),
                Family::LiftedBiclique {
                    biclique: b.clone(),
                    distinguished: t,
                },
            )
        })
        .collect())
}

/// Lifted inequalities of every induced `K_{r,s}` with `1 < r < s <= max_side`.
pub fn lifted_family(g: &Graph, max_side: usize) -> Vec<LinearInequality> {
    g.induced_bicliques(max_side)
        .iter()
        .filter(|b| b.s() > b.r() && b.r() > 1)
        .flat_map(|b| lifted_biclique_inequalities(g, b).expect("enumerated bicliques are induced"))
        .collect()
}

/// Basic inequalities, balanced biclique inequalities for `2 <= r <=
/// max_side` and the lifted family, without duplicates.
pub fn all_families(g: &Graph, max_side: usize) -> Vec<LinearInequality> {
    let mut out = basic_inequalities(g);
    for r in 2..=max_side.max(1) {
        out.extend(balanced_biclique_inequalities(g, r).expect("r >= 1"));
    }
    out.extend(lifted_family(g, max_side));
    out
}

/// All-ones inequality over the vertices and edges of a biclique with
/// right-hand side `max(r, s)`.
pub fn biclique_all_ones(g: &Graph, b: &Biclique) -> Result<LinearInequality> {
    b.check_in(g)?;
    Ok(LinearInequality::new(
        indicator(g.num_elements(), biclique_support(g, b)),
        int(b.r().max(b.s())),
        Family::Custom("biclique all-ones".into()),
    ))
}

/// Biclique inequality with the given weights on the `R` vertices and `1` on
/// every other biclique element, right-hand side `s`.
pub fn weighted_biclique(g: &Graph, b: &Biclique, left_weights: &[Rational]) -> Result<LinearInequality> {
    b.check_in(g)?;
    if left_weights.len() != b.r() {
        return Err(Error::LengthMismatch {
            expected: b.r(),
            found: left_weights.len(),
        });
    }
    let mut c = indicator(g.num_elements(), biclique_support(g, b));
    for (&v, w) in b.left().iter().zip(left_weights) {
        c[v] = w.clone();
    }
    Ok(LinearInequality::new(
        c,
        int(b.s()),
        Family::Custom("weighted biclique".into()),
    ))
}

/// Starting point for lifting the `R` vertices of a biclique:
/// `sum_S x + sum_E(K) y <= s`, valid once every `R` vertex is fixed to zero.
pub fn biclique_lifting_base(g: &Graph, b: &Biclique) -> Result<LinearInequality> {
    b.check_in(g)?;
    let ones = b.right().iter().copied().chain(b.edge_elements(g));
    Ok(LinearInequality::new(
        indicator(g.num_elements(), ones),
        int(b.s()),
        Family::Custom("biclique lifting base".into()),
    ))
}

/// Outcome of an exhaustive validity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid {
        /// Largest left-hand side over all total matchings.
        max_lhs: Rational,
    },
    Invalid {
        /// A total matching with the largest left-hand side.
        violator: TotalMatching,
        lhs: Rational,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid { .. })
    }
}

/// Checks `coeffs . chi[T] <= rhs` for every total matching `T`.
pub fn is_valid(g: &Graph, ineq: &LinearInequality, limits: &Limits) -> Result<Validity> {
    ineq.check_dim(g)?;
    let masks = matching_masks(g, limits)?;
    Ok(validity_over(ineq, &masks))
}

pub(crate) fn validity_over(ineq: &LinearInequality, masks: &[u64]) -> Validity {
    let mut best_mask = 0u64;
    let mut best = ineq.lhs_mask(0);
    for &m in masks {
        let v = ineq.lhs_mask(m);
        if v > best {
            best = v;
            best_mask = m;
        }
    }
    if best > ineq.rhs {
        Validity::Invalid {
            violator: TotalMatching::from_mask(best_mask),
            lhs: best,
        }
    } else {
        Validity::Valid { max_lhs: best }
    }
}

/// One step of a sequential lifting run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftStep {
    pub element: usize,
    /// Optimum of the inner maximization with `z_element = 1`.
    pub inner_max: Rational,
    /// Lifted coefficient, `rhs - inner_max`.
    pub coefficient: Rational,
}

#[derive(Clone, Debug)]
pub struct Lifting {
    pub inequality: LinearInequality,
    pub steps: Vec<LiftStep>,
}

/// Sequential lifting of the variables in `fixed_zero`, one at a time in
/// `order`.
///
/// `base` must be valid on the face where every element of `fixed_zero` is
/// zero and carry zero coefficients on those elements. Each step sets the
/// coefficient of `a` to `rhs - max{ lhs(chi[T]) : a in T, T avoids the
/// elements not yet lifted }`, maximizing exactly over enumerated total
/// matchings.
pub fn sequential_lift(
    g: &Graph,
    base: &LinearInequality,
    fixed_zero: &[usize],
    order: &[usize],
    limits: &Limits,
) -> Result<Lifting> {
    base.check_dim(g)?;
    let mut a_sorted = fixed_zero.to_vec();
    let mut b_sorted = order.to_vec();
    a_sorted.sort_unstable();
    b_sorted.sort_unstable();
    if a_sorted != b_sorted || a_sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("order must be a permutation of the fixed elements".into()));
    }
    for &a in fixed_zero {
        g.element(a)?;
        if !base.coeffs[a].is_zero() {
            return Err(Error::Precondition(alloc::format!(
                "base has a nonzero coefficient on fixed element {a}"
            )));
        }
    }
    let masks = matching_masks(g, limits)?;
    let mut pending: u64 = fixed_zero.iter().fold(0, |acc, &a| acc | (1 << a));

    let restricted: Vec<u64> = masks.iter().copied().filter(|m| m & pending == 0).collect();
    if let Validity::Invalid { violator, .. } = validity_over(base, &restricted) {
        return Err(Error::InvalidInequality {
            violator: violator.elements().to_vec(),
        });
    }

    let mut current = base.clone();
    let mut steps = Vec::with_capacity(order.len());
    for &a in order {
        let bit = 1u64 << a;
        pending &= !bit;
        let inner_max = masks
            .iter()
            .filter(|&&m| m & bit != 0 && m & pending == 0)
            .map(|&m| current.lhs_mask(m))
            .max()
            .ok_or_else(|| Error::Precondition(alloc::format!("no total matching contains element {a}")))?;
        let coefficient = &current.rhs - &inner_max;
        current.coeffs[a] = coefficient.clone();
        steps.push(LiftStep {
            element: a,
            inner_max,
            coefficient,
        });
    }
    current.label = Family::Custom("sequential lift".into());
    Ok(Lifting {
        inequality: current,
        steps,
    })
}

/// Total matching certifying that the edge `e` of a non-balanced induced
/// biclique cannot take a coefficient above one: a perfect matching of an
/// induced `K_{r,r}` through `e`, plus the `s - r` remaining `S` vertices. It
/// meets the unit-coefficient biclique inequality with equality, so raising
/// the coefficient of `e` violates it.
pub fn edge_lift_counterexample(g: &Graph, b: &Biclique, e: usize) -> Result<TotalMatching> {
    b.check_in(g)?;
    if b.s() <= b.r() {
        return Err(Error::Precondition("needs a non-balanced biclique with s > r".into()));
    }
    let (u, w) = match g.element(e)? {
        crate::Element::Edge { u, v, .. } => {
            if b.left().contains(&u) && b.right().contains(&v) {
                (u, v)
            } else if b.left().contains(&v) && b.right().contains(&u) {
                (v, u)
            } else {
                return Err(Error::Precondition(alloc::format!("element {e} is not a biclique edge")));
            }
        }
        crate::Element::Vertex(_) => {
            return Err(Error::Precondition(alloc::format!("element {e} is not an edge")));
        }
    };
    let other_left = b.left().iter().copied().filter(|&x| x != u);
    let mut other_right = b.right().iter().copied().filter(|&x| x != w);
    let mut elements = vec![e];
    for x in other_left {
        let y = other_right.next().expect("s > r leaves enough partners");
        elements.push(g.edge_element(x, y).expect("biclique edge"));
    }
    elements.extend(other_right);
    TotalMatching::new(g, elements)
}
