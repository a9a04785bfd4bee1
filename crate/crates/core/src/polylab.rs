//! Exact polyhedral computations on the total matching polytope: dimensions
//! of faces, facet certification, conversion between vertex and facet
//! descriptions, and complete-description checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dd::{cone_generators, make_primitive};
use crate::ineq::{is_valid, validity_over, Family, LinearInequality, NormalizedInequality, Validity};
use crate::linalg::{affine_rank, RationalMatrix};
use crate::totalmatch::{mask_incidence, matching_masks};
use crate::{Error, Graph, Limits, Rational, RationalVector, Result};

/// Paired vertex and facet descriptions of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRep {
    pub vrep: Vec<RationalVector>,
    pub hrep: Vec<LinearInequality>,
    pub dim_ambient: usize,
}

impl PolytopeRep {
    /// Checks the double description invariants: every vertex satisfies every
    /// inequality, every inequality is tight at `dim` affinely independent
    /// vertices, and every vertex is tight at `dim` linearly independent
    /// inequalities.
    pub fn is_consistent(&self) -> bool {
        let d = self.dim_ambient;
        for h in &self.hrep {
            let tight: Vec<RationalVector> = self
                .vrep
                .iter()
                .filter(|v| h.lhs(v).map(|l| &l == h.rhs()).unwrap_or(false))
                .cloned()
                .collect();
            if self.vrep.iter().any(|v| h.violation(v).map_or(true, |x| x.is_positive())) {
                return false;
            }
            if tight.is_empty() || affine_rank(&tight).unwrap_or(0) < d {
                return false;
            }
        }
        if self.hrep.is_empty() {
            return self.vrep.len() <= 1;
        }
        self.vrep.iter().all(|v| {
            let normals: Vec<RationalVector> = self
                .hrep
                .iter()
                .filter(|h| h.lhs(v).map(|l| &l == h.rhs()).unwrap_or(false))
                .map(|h| h.coeffs().to_vec())
                .collect();
            RationalMatrix::from_rows(&normals, d).is_ok_and(|m| m.rank() == d)
        })
    }
}

fn check_hull_cap(dim: usize, limits: &Limits) -> Result<()> {
    if dim > limits.max_hull_dim {
        return Err(Error::CapExceeded {
            what: "double description ambient dimension",
            size: dim,
            cap: limits.max_hull_dim,
        });
    }
    Ok(())
}

/// Scales a rational row to coprime integers with the same sign pattern.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    make_primitive(&mut out);
    out
}

fn by_support(rows: &mut [Vec<BigInt>]) {
    rows.sort_by_key(|r| r.iter().filter(|x| !x.is_zero()).count());
}

fn facet_label() -> Family {
    Family::Custom("facet".into())
}

/// Facet description of the convex hull of full-dimensional `points`.
///
/// Facets come back in coprime integer form, sorted by their normalized data.
/// A single point yields no facets.
pub fn hull(points: &[RationalVector], limits: &Limits) -> Result<PolytopeRep> {
    let d = points.first().ok_or(Error::EmptyInput)?.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch);
    }
    check_hull_cap(d, limits)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(PolytopeRep {
            vrep: pts,
            hrep: Vec::new(),
            dim_ambient: d,
        });
    }

    // (a, b) is valid iff b - a.p >= 0 for every point p.
    let mut rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            let mut r: Vec<Rational> = p.iter().map(|x| -x).collect();
            r.push(Rational::one());
            integer_row(&r)
        })
        .collect();
    by_support(&mut rows);
    let cone = cone_generators(d + 1, &rows);
    if !cone.lineality.is_empty() {
        return Err(Error::NotFullDimensional {
            affine_dim: affine_rank(&pts)? - 1,
            ambient: d,
        });
    }

    let mut facets: Vec<NormalizedInequality> = cone
        .rays
        .into_iter()
        .filter(|r| r[..d].iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            let rhs = r.pop().expect("homogenizing coordinate");
            NormalizedInequality { coeffs: r, rhs }
        })
        .collect();
    facets.sort();
    facets.dedup();
    let hrep: Vec<LinearInequality> = facets.iter().map(|f| f.to_inequality(facet_label())).collect();

    let vrep: Vec<RationalVector> = pts
        .into_iter()
        .filter(|p| {
            let normals: Vec<RationalVector> = hrep
                .iter()
                .filter(|h| h.lhs(p).map(|l| &l == h.rhs()).unwrap_or(false))
                .map(|h| h.coeffs().to_vec())
                .collect();
            RationalMatrix::from_rows(&normals, d).is_ok_and(|m| m.rank() == d)
        })
        .collect();
    Ok(PolytopeRep {
        vrep,
        hrep,
        dim_ambient: d,
    })
}

/// Vertices of the bounded polyhedron `{z in R^dim : a . z <= b for every
/// member of hrep}`. Returns [`Error::Unbounded`] for unbounded input.
pub fn vertices(hrep: &[LinearInequality], dim: usize, limits: &Limits) -> Result<PolytopeRep> {
    if let Some(h) = hrep.iter().find(|h| h.dim() != dim) {
        return Err(Error::LengthMismatch {
            expected: dim,
            found: h.dim(),
        });
    }
    check_hull_cap(dim, limits)?;
    // Homogenize: b t - a.z >= 0 and t >= 0.
    let mut rows: Vec<Vec<BigInt>> = hrep
        .iter()
        .map(|h| {
            let n = h.normalized();
            let mut r: Vec<BigInt> = n.coeffs.iter().map(|x| -x).collect();
            r.push(n.rhs);
            r
        })
        .collect();
    let mut t_row = alloc::vec![BigInt::zero(); dim + 1];
    t_row[dim] = BigInt::one();
    rows.push(t_row);
    by_support(&mut rows);

    let cone = cone_generators(dim + 1, &rows);
    if !cone.lineality.is_empty() {
        return Err(Error::Unbounded);
    }
    let mut vrep = Vec::with_capacity(cone.rays.len());
    for mut r in cone.rays {
        let t = r.pop().expect("homogenizing coordinate");
        if t.is_zero() {
            return Err(Error::Unbounded);
        }
        vrep.push(
            r.into_iter()
                .map(|x| Rational::new(x, t.clone()))
                .collect::<RationalVector>(),
        );
    }
    vrep.sort();
    Ok(PolytopeRep {
        vrep,
        hrep: hrep.to_vec(),
        dim_ambient: dim,
    })
}

/// Incidence vectors of every total matching of `g`.
pub fn incidence_vectors(g: &Graph, limits: &Limits) -> Result<Vec<RationalVector>> {
    let len = g.num_elements();
    Ok(matching_masks(g, limits)?
        .into_iter()
        .map(|m| mask_incidence(m, len))
        .collect())
}

/// Dimension of the total matching polytope of `g`, from the affine rank of
/// its incidence vectors.
pub fn polytope_dimension(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(affine_rank(&incidence_vectors(g, limits)?)? - 1)
}

/// Dimension of the face cut out by a valid inequality; `-1` for the empty
/// face. Invalid inequalities are reported with a violating total matching.
pub fn face_dimension(g: &Graph, ineq: &LinearInequality, limits: &Limits) -> Result<isize> {
    if let Validity::Invalid { violator, .. } = is_valid(g, ineq, limits)? {
        return Err(Error::InvalidInequality {
            violator: violator.elements().to_vec(),
        });
    }
    let len = g.num_elements();
    let tight: Vec<RationalVector> = matching_masks(g, limits)?
        .into_iter()
        .filter(|&m| &ineq.lhs_mask(m) == ineq.rhs())
        .map(|m| mask_incidence(m, len))
        .collect();
    if tight.is_empty() {
        return Ok(-1);
    }
    Ok(affine_rank(&tight)? as isize - 1)
}

/// Whether `ineq` defines a facet of the total matching polytope of `g`.
pub fn is_facet(g: &Graph, ineq: &LinearInequality, limits: &Limits) -> Result<bool> {
    let face = face_dimension(g, ineq, limits)?;
    Ok(face == polytope_dimension(g, limits)? as isize - 1)
}

/// Facet description of the total matching polytope of `g`.
pub fn polytope_hull(g: &Graph, limits: &Limits) -> Result<PolytopeRep> {
    check_hull_cap(g.num_elements(), limits)?;
    hull(&incidence_vectors(g, limits)?, limits)
}

/// Outcome of comparing an inequality system with the facets of the total
/// matching polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    /// Every facet appears in the system.
    pub complete: bool,
    /// Facets whose normalized form is not in the system.
    pub missing_facets: Vec<LinearInequality>,
    /// Valid members of the system that are not facets.
    pub redundant: Vec<LinearInequality>,
    /// Dimension of the polytope.
    pub dimension: usize,
}

/// Checks whether `ineqs` lists every facet of the total matching polytope
/// of `g`, by literal normalized-form membership.
pub fn check_complete_description(
    g: &Graph,
    ineqs: &[LinearInequality],
    limits: &Limits,
) -> Result<CompletenessReport> {
    check_hull_cap(g.num_elements(), limits)?;
    let masks = matching_masks(g, limits)?;
    for ineq in ineqs {
        if ineq.dim() != g.num_elements() {
            return Err(Error::LengthMismatch {
                expected: g.num_elements(),
                found: ineq.dim(),
            });
        }
        if let Validity::Invalid { violator, .. } = validity_over(ineq, &masks) {
            return Err(Error::InvalidInequality {
                violator: violator.elements().to_vec(),
            });
        }
    }
    let len = g.num_elements();
    let points: Vec<RationalVector> = masks.iter().map(|&m| mask_incidence(m, len)).collect();
    let rep = hull(&points, limits)?;
    let facets: BTreeSet<NormalizedInequality> = rep.hrep.iter().map(|h| h.normalized()).collect();

    let mut given = BTreeSet::new();
    let mut redundant = Vec::new();
    for ineq in ineqs {
        let n = ineq.normalized();
        if given.insert(n.clone()) && !facets.contains(&n) {
            redundant.push(ineq.clone());
        }
    }
    let missing_facets: Vec<LinearInequality> = rep
        .hrep
        .into_iter()
        .filter(|h| !given.contains(&h.normalized()))
        .collect();
    Ok(CompletenessReport {
        complete: missing_facets.is_empty(),
        missing_facets,
        redundant,
        dimension: affine_rank(&points)? - 1,
    })
}
