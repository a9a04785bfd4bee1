//! Exhaustive separation over the basic, balanced biclique and lifted
//! biclique families.
//!
//! Finding the most violated balanced biclique inequality is NP-hard in
//! general, so the biclique scan is exhaustive and capped by `max_side`.

use alloc::vec::Vec;

use num_traits::Signed;

use crate::ineq::{balanced_biclique_inequality, basic_inequalities, lifted_biclique_inequalities};
use crate::{Error, Graph, LinearInequality, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub inequality: LinearInequality,
    /// `coeffs . z - rhs`, always positive.
    pub amount: Rational,
}

/// One scanned family and how many of its members were checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyScan {
    pub family: &'static str,
    /// Side sizes `(r, s)` for biclique families, `None` for the basic family.
    pub sides: Option<(usize, usize)>,
    pub scanned: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationResult {
    /// Sorted by decreasing violation; ties keep the scan order.
    pub violated: Vec<Violation>,
    pub searched_families: Vec<FamilyScan>,
}

impl SeparationResult {
    pub fn most_violated(&self) -> Option<&Violation> {
        self.violated.first()
    }
}

/// Scans the basic inequalities, then the balanced biclique inequalities of
/// every induced `K_{r,r}` with `2 <= r <= max_side`, then the lifted
/// inequalities of every induced `K_{r,s}` with `1 < r < s <= max_side`, and
/// reports every member violated by `z`.
pub fn separate(g: &Graph, z: &[Rational], max_side: usize) -> Result<SeparationResult> {
    if z.len() != g.num_elements() {
        return Err(Error::LengthMismatch {
            expected: g.num_elements(),
            found: z.len(),
        });
    }
    let mut violated = Vec::new();
    let mut searched = Vec::new();
    let consider = |ineq: LinearInequality, violated: &mut Vec<Violation>| {
        let amount = ineq.violation(z).expect("length checked");
        if amount.is_positive() {
            violated.push(Violation {
                inequality: ineq,
                amount,
            });
        }
    };

    let basic = basic_inequalities(g);
    searched.push(FamilyScan {
        family: "basic",
        sides: None,
        scanned: basic.len(),
    });
    for ineq in basic {
        consider(ineq, &mut violated);
    }

    let bicliques = g.induced_bicliques(max_side);
    for r in 2..=max_side {
        let mut scanned = 0;
        for b in bicliques.iter().filter(|b| b.r() == r && b.s() == r) {
            scanned += 1;
            consider(balanced_biclique_inequality(g, b)?, &mut violated);
        }
        searched.push(FamilyScan {
            family: "balanced-biclique",
            sides: Some((r, r)),
            scanned,
        });
    }
    for r in 2..=max_side {
        for s in r + 1..=max_side {
            let mut scanned = 0;
            for b in bicliques.iter().filter(|b| b.r() == r && b.s() == s) {
                for ineq in lifted_biclique_inequalities(g, b)? {
                    scanned += 1;
                    consider(ineq, &mut violated);
                }
            }
            searched.push(FamilyScan {
                family: "lifted-biclique",
                sides: Some((r, s)),
                scanned,
            });
        }
    }

    violated.sort_by(|a, b| b.amount.cmp(&a.amount));
    Ok(SeparationResult {
        violated,
        searched_families: searched,
    })
}
