//! Double description method on integer rows.
//!
//! Computes a minimal generating system (lineality basis plus extreme rays)
//! of the cone `{y : h . y >= 0 for every row h}`. Rays are kept as primitive
//! integer vectors, so arithmetic is exact without rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;

pub(crate) struct Cone {
    pub(crate) lineality: Vec<Vec<BigInt>>,
    pub(crate) rays: Vec<Vec<BigInt>>,
}

struct Ray {
    v: Vec<BigInt>,
    /// Processed constraints (by processing position) tight at this ray.
    zero: BitSet,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a * x - b * y`, made primitive.
fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = x.iter().zip(y).map(|(xi, yi)| a * xi - b * yi).collect();
    make_primitive(&mut v);
    v
}

/// Runs the double description method, adding `constraints` in the given
/// order. Every row must have length `dim`.
pub(crate) fn cone_generators(dim: usize, constraints: &[Vec<BigInt>]) -> Cone {
    let total = constraints.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = alloc::vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed = BitSet::new(total);

    for (ci, h) in constraints.iter().enumerate() {
        debug_assert_eq!(h.len(), dim);

        // A lineality direction not orthogonal to h becomes a ray.
        if let Some(p) = lineality.iter().position(|l| !dot(h, l).is_zero()) {
            let mut l = lineality.swap_remove(p);
            let mut hl = dot(h, &l);
            if hl.is_negative() {
                l.iter_mut().for_each(|x| *x = -&*x);
                hl = -hl;
            }
            for other in lineality.iter_mut() {
                let d = dot(h, other);
                if !d.is_zero() {
                    *other = combine(&hl, other, &d, &l);
                }
            }
            for ray in rays.iter_mut() {
                let d = dot(h, &ray.v);
                if !d.is_zero() {
                    ray.v = combine(&hl, &ray.v, &d, &l);
                }
                ray.zero.insert(ci);
            }
            rays.push(Ray {
                v: l,
                zero: processed.clone(),
            });
            processed.insert(ci);
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh = Vec::new();
        if !neg.is_empty() && !pos.is_empty() {
            // Two rays are adjacent when their common zero set has enough
            // constraints and no third ray's zero set contains it.
            let needed = dim.saturating_sub(lineality.len() + 2);
            for &p in &pos {
                for &q in &neg {
                    let common = rays[p].zero.intersection(&rays[q].zero);
                    if common.len() < needed {
                        continue;
                    }
                    let blocked = rays
                        .iter()
                        .enumerate()
                        .any(|(i, r)| i != p && i != q && common.is_subset(&r.zero));
                    if blocked {
                        continue;
                    }
                    let v = combine(&values[p], &rays[q].v, &values[q], &rays[p].v);
                    let mut zero = common;
                    zero.insert(ci);
                    fresh.push(Ray { v, zero });
                }
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (ray, value) in rays.into_iter().zip(&values) {
            if value.is_negative() {
                continue;
            }
            let mut ray = ray;
            if value.is_zero() {
                ray.zero.insert(ci);
            }
            kept.push(ray);
        }
        kept.extend(fresh);
        rays = kept;
        processed.insert(ci);
    }

    Cone {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}
