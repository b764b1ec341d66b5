//! Exhaustive enumeration of connected skew diagrams and their grouping
//! into skew-equivalence classes by Schur-basis fingerprint.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::compose::{check_hypotheses, compose, WPlacement};
use crate::diagram::{Cell, SkewDiagram};
use crate::error::{Error, Result};
use crate::schur::skew_schur;

pub const DEFAULT_MAX_CELLS: usize = 12;

/// Enumeration cap: `SKEWKIT_MAX_CELLS` overrides the default of 12.
pub fn max_cells_cap() -> usize {
    std::env::var("SKEWKIT_MAX_CELLS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// All connected skew diagrams with exactly `n` cells, canonical and
/// duplicate-free, generated from staircase-consistent row intervals with
/// every consecutive pair of rows sharing a column.
pub fn enumerate_connected(n: usize) -> Result<Vec<SkewDiagram>> {
    let cap = max_cells_cap();
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    if n == 0 {
        return Err(Error::Input("diagrams have at least one cell".into()));
    }
    Ok(enumerate_connected_unbounded(n))
}

pub(crate) fn enumerate_connected_unbounded(n: usize) -> Vec<SkewDiagram> {
    let mut out = Vec::new();
    // intervals[(i, lo, hi)] built north to south
    let mut intervals: Vec<(i32, i32)> = Vec::new();
    fn rec(remaining: usize, intervals: &mut Vec<(i32, i32)>, out: &mut Vec<SkewDiagram>) {
        if remaining == 0 {
            let min_l = intervals.iter().map(|&(l, _)| l).min().unwrap();
            let cells: Vec<Cell> = intervals
                .iter()
                .enumerate()
                .flat_map(|(i, &(l, r))| (l..=r).map(move |c| (i as i32, c - min_l)))
                .collect();
            out.push(SkewDiagram::from_cells(cells).expect("construction is staircase-consistent"));
            return;
        }
        match intervals.last().copied() {
            None => {
                for size in 1..=remaining {
                    intervals.push((0, size as i32 - 1));
                    rec(remaining - size, intervals, out);
                    intervals.pop();
                }
            }
            Some((l_prev, r_prev)) => {
                for size in 1..=remaining {
                    let s = size as i32;
                    // next row must overlap the previous one and keep both
                    // endpoints weakly decreasing
                    let lo_r = l_prev;
                    let hi_r = r_prev.min(l_prev + s - 1);
                    for r in lo_r..=hi_r {
                        intervals.push((r - s + 1, r));
                        rec(remaining - size, intervals, out);
                        intervals.pop();
                    }
                }
            }
        }
    }
    rec(n, &mut intervals, &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInvariants {
    pub cells: usize,
    pub rows: usize,
    pub row_lengths: Vec<u32>,
    pub nw_body: usize,
}

fn invariants_of(d: &SkewDiagram) -> ClassInvariants {
    let (la, mu) = d.lambda_mu();
    let mut row_lengths: Vec<u32> = (0..la.len()).map(|i| la.part(i) - mu.part(i)).collect();
    row_lengths.sort_unstable();
    ClassInvariants {
        cells: d.size(),
        rows: d.rows(),
        row_lengths,
        nw_body: d.nw_body().size(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceClass {
    pub members: Vec<SkewDiagram>,
    pub fingerprint: String,
    pub invariants: ClassInvariants,
}

impl EquivalenceClass {
    /// True iff the class is a singleton or a rotation pair `{D, D*}`.
    pub fn is_rotation_class(&self) -> bool {
        match self.members.len() {
            1 => true,
            2 => self.members[0].rotate180() == self.members[1],
            _ => false,
        }
    }
}

/// Groups all connected diagrams with at most `n` cells by the fingerprint
/// of their Schur expansion.  Output order is deterministic: classes sorted
/// by fingerprint, members sorted within a class.
pub fn classify(n: usize) -> Result<Vec<EquivalenceClass>> {
    let mut diagrams = Vec::new();
    for m in 1..=n {
        diagrams.extend(enumerate_connected(m)?);
    }
    let fingered: Vec<(String, SkewDiagram)> = diagrams
        .into_par_iter()
        .map(|d| (skew_schur(&d).fingerprint(), d))
        .collect();
    let mut groups: BTreeMap<String, Vec<SkewDiagram>> = BTreeMap::new();
    for (fp, d) in fingered {
        groups.entry(fp).or_default().push(d);
    }
    Ok(groups
        .into_iter()
        .map(|(fingerprint, mut members)| {
            members.sort();
            let invariants = invariants_of(&members[0]);
            EquivalenceClass { members, fingerprint, invariants }
        })
        .collect())
}

/// Confirms that every member of a class shares the structural invariants
/// forced by skew-equivalence: cell count, row count, row-length multiset,
/// and size of the northwest body.
pub fn check_class_invariants(class: &EquivalenceClass) -> std::result::Result<(), String> {
    for m in &class.members {
        let inv = invariants_of(m);
        if inv != class.invariants {
            return Err(format!(
                "member {m:?} has invariants {inv:?}, class claims {:?}",
                class.invariants
            ));
        }
    }
    Ok(())
}

/// Confirms `D' ∘_W E ~ D ∘_W E ~ D ∘_{W*} E*` for skew-equivalent `D ~ D'`
/// and a placement satisfying all five hypotheses.  Precondition failures
/// are reported as errors, distinct from an equivalence failure (`Ok(false)`).
pub fn verify_equivalence_theorem(
    d: &SkewDiagram,
    d_prime: &SkewDiagram,
    pl: &WPlacement,
) -> Result<bool> {
    if skew_schur(d) != skew_schur(d_prime) {
        return Err(Error::Precondition(format!("{d:?} and {d_prime:?} are not skew-equivalent")));
    }
    let report = check_hypotheses(pl)?;
    if !report.all_i_to_v {
        return Err(Error::Hypothesis(format!(
            "placement of {:?} in {:?} fails the hypotheses",
            pl.w(),
            pl.e()
        )));
    }
    let a = skew_schur(&compose(d, pl)?);
    let b = skew_schur(&compose(d_prime, pl)?);
    let c = skew_schur(&compose(d, &pl.rotate180())?);
    Ok(a == b && a == c)
}

/// All connected diagrams with at most `n` cells satisfying `F ~ Fᵗ` with
/// `F ≠ Fᵗ`.  Equivalence with the transpose is read off the fingerprint:
/// it holds exactly when the expansion is fixed by conjugation.
pub fn transpose_equivalences(n: usize) -> Result<Vec<SkewDiagram>> {
    let mut out = Vec::new();
    for m in 1..=n {
        for d in enumerate_connected(m)? {
            let t = d.transpose();
            if t != d && skew_schur(&d) == skew_schur(&t) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Confirms `(D ∘_W E)ᵗ ~ D ∘_W E` for a self-transpose placement
/// (`Eᵗ = E`, `Wᵗ = W`, `W ≠ ∅`) satisfying the first four hypotheses.
pub fn verify_transpose_prop(d: &SkewDiagram, pl: &WPlacement) -> Result<bool> {
    if pl.w().is_empty() {
        return Err(Error::Precondition("W must be non-empty".into()));
    }
    if &pl.e().transpose() != pl.e() || &pl.w().transpose() != pl.w() {
        return Err(Error::Precondition("E and W must be self-transpose".into()));
    }
    let report = check_hypotheses(pl)?;
    if !report.all_i_to_iv {
        return Err(Error::Hypothesis("placement fails the first four hypotheses".into()));
    }
    let f = compose(d, pl)?;
    Ok(skew_schur(&f) == skew_schur(&f.transpose()))
}
