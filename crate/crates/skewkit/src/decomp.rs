//! Outside ribbon decompositions, cutting strips, the `#` operation on
//! strip intervals, Hamel-Goulden matrices, and Sylvester's determinantal
//! identity.
//!
//! An outside decomposition keeps its ribbons and cutting strip positioned in
//! the coordinate frame of the decomposed diagram, so strip intervals can be
//! addressed by content.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagram::{cells, content, Cell, Ribbon, SkewDiagram};
use crate::error::{Error, Result};
use crate::schur::{det, skew_schur, SchurPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecompKind {
    Southeast,
    Northwest,
    JacobiTrudi,
}

/// One ribbon of a decomposition, positioned inside the original diagram.
/// `p` and `q` are the contents of its southwestern and northeastern ends.
#[derive(Clone, Debug)]
pub struct DecompRibbon {
    pub cells: BTreeSet<Cell>,
    pub p: i32,
    pub q: i32,
}

/// An outside ribbon decomposition together with its cutting strip.
#[derive(Clone, Debug)]
pub struct OutsideDecomposition {
    pub kind: DecompKind,
    pub ribbons: Vec<DecompRibbon>,
    /// Cutting strip cells keyed by content, in the diagram's frame.
    pub strip: BTreeMap<i32, Cell>,
}

/// A content interval of the cutting strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripInterval {
    Ribbon(Ribbon),
    Empty,
    Undefined,
}

impl StripInterval {
    /// The Schur expansion of the interval: `s_∅ = 1`, `s_undefined = 0`.
    pub fn schur(&self) -> SchurPoly {
        match self {
            StripInterval::Ribbon(r) => skew_schur(r.diagram()),
            StripInterval::Empty => SchurPoly::one(),
            StripInterval::Undefined => SchurPoly::zero(),
        }
    }

    pub fn label(&self, p: i32, q: i32) -> String {
        match self {
            StripInterval::Undefined => format!("θ[{p},{q}] = undefined"),
            StripInterval::Empty => format!("θ[{p},{q}] = ∅"),
            StripInterval::Ribbon(_) => format!("θ[{p},{q}]"),
        }
    }
}

fn ribbon_endpoints(rib: &BTreeSet<Cell>) -> (i32, i32) {
    let p = rib.iter().map(|&c| content(c)).min().unwrap();
    let q = rib.iter().map(|&c| content(c)).max().unwrap();
    (p, q)
}

/// Computes the outside decomposition of the given kind.  The southeast and
/// northwest kinds peel border ribbons and recurse on connected components
/// southwest to northeast; they require a connected diagram.  The
/// Jacobi-Trudi kind takes the rows north to south and accepts any diagram.
pub fn decompose(d: &SkewDiagram, kind: DecompKind) -> Result<OutsideDecomposition> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let ribbons = match kind {
        DecompKind::JacobiTrudi => jacobi_trudi_ribbons(d),
        _ => {
            if !d.is_connected() {
                return Err(Error::Disconnected);
            }
            peel_ribbons(d.cells().clone(), kind)
        }
    };
    let strip = cutting_strip(d, kind, &ribbons)?;
    let ribbons = ribbons
        .into_iter()
        .map(|cells| {
            let (p, q) = ribbon_endpoints(&cells);
            DecompRibbon { cells, p, q }
        })
        .collect();
    Ok(OutsideDecomposition { kind, ribbons, strip })
}

fn jacobi_trudi_ribbons(d: &SkewDiagram) -> Vec<BTreeSet<Cell>> {
    let mut by_row: BTreeMap<i32, BTreeSet<Cell>> = BTreeMap::new();
    for &c in d.cells() {
        by_row.entry(c.0).or_default().insert(c);
    }
    by_row.into_values().collect()
}

fn peel_ribbons(set: BTreeSet<Cell>, kind: DecompKind) -> Vec<BTreeSet<Cell>> {
    let mut out = Vec::new();
    let border = match kind {
        DecompKind::Southeast => cells::se_border(&set),
        DecompKind::Northwest => cells::nw_border(&set),
        DecompKind::JacobiTrudi => unreachable!(),
    };
    out.push(border.clone());
    let rest: BTreeSet<Cell> = set.difference(&border).copied().collect();
    let mut comps = cells::components(&rest);
    comps.sort_by_key(|c| cells::diagonals(c).first().copied());
    for comp in comps {
        out.extend(peel_ribbons(comp, kind));
    }
    out
}

/// Direction a diagonal takes in the cutting strip.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    North,
    East,
}

fn cutting_strip(
    d: &SkewDiagram,
    kind: DecompKind,
    ribbons: &[BTreeSet<Cell>],
) -> Result<BTreeMap<i32, Cell>> {
    let all = d.cells();
    let min_c = all.iter().map(|&c| content(c)).min().unwrap();
    let max_c = all.iter().map(|&c| content(c)).max().unwrap();
    let mut dirs: BTreeMap<i32, Dir> = BTreeMap::new();
    for rib in ribbons {
        let ne = cells::ne_cell(rib).unwrap();
        for &cell in rib {
            let (r, c) = cell;
            let goes_north = rib.contains(&(r - 1, c))
                || (cell == ne && !all.contains(&(r - 1, c)));
            let goes_east = rib.contains(&(r, c + 1))
                || (cell == ne && !all.contains(&(r, c + 1)));
            let dir = match (goes_north, goes_east) {
                (true, false) => Some(Dir::North),
                (false, true) => Some(Dir::East),
                // a corner end-cell may satisfy both; it cannot constrain
                _ => None,
            };
            if let Some(dir) = dir {
                let prev = dirs.insert(content(cell), dir);
                if prev.is_some_and(|p| p != dir) {
                    return Err(Error::NotSkew(format!(
                        "diagonal {} has inconsistent go-north/go-east assignment",
                        content(cell)
                    )));
                }
            }
        }
    }
    // Anchor: the strip starts at the diagram's southwesternmost cell for the
    // border kinds; the Jacobi-Trudi strip is one row of the full content
    // range (content gaps of a disconnected diagram are spanned eastward).
    let start = match kind {
        DecompKind::JacobiTrudi => (0, min_c),
        _ => cells::sw_cell(all).unwrap(),
    };
    let mut strip = BTreeMap::new();
    let mut cur = start;
    strip.insert(min_c, cur);
    for c in min_c..max_c {
        let dir = match kind {
            DecompKind::JacobiTrudi => Dir::East,
            _ => dirs.get(&c).copied().unwrap_or(Dir::East),
        };
        cur = match dir {
            Dir::North => (cur.0 - 1, cur.1),
            Dir::East => (cur.0, cur.1 + 1),
        };
        strip.insert(c + 1, cur);
    }
    Ok(strip)
}

impl OutsideDecomposition {
    pub fn len(&self) -> usize {
        self.ribbons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ribbons.is_empty()
    }

    /// The subdiagram of the cutting strip on contents `[p, q]`.
    pub fn strip_interval(&self, p: i32, q: i32) -> StripInterval {
        if p == q + 1 {
            return StripInterval::Empty;
        }
        if p > q + 1 {
            return StripInterval::Undefined;
        }
        let cells: Vec<Cell> = (p..=q)
            .map(|c| self.strip.get(&c).copied())
            .collect::<Option<Vec<_>>>()
            .unwrap_or_default();
        if cells.len() != (q - p + 1) as usize {
            return StripInterval::Undefined;
        }
        let diagram = SkewDiagram::from_cells(cells).expect("strip slice is a ribbon");
        StripInterval::Ribbon(Ribbon::try_from(diagram).expect("strip slice is a ribbon"))
    }

    /// `θ_i # θ_j = θ[p(θ_j), q(θ_i)]`.
    pub fn hash_op(&self, i: usize, j: usize) -> StripInterval {
        self.strip_interval(self.ribbons[j].p, self.ribbons[i].q)
    }
}

/// Builds the Hamel-Goulden matrix of an outside decomposition and its exact
/// determinant: entry `(i, j)` is the Schur expansion of `θ_i # θ_j`.
pub fn hamel_goulden(dec: &OutsideDecomposition) -> (Vec<Vec<SchurPoly>>, SchurPoly) {
    let m = dec.len();
    let matrix: Vec<Vec<SchurPoly>> = (0..m)
        .map(|i| (0..m).map(|j| dec.hash_op(i, j).schur()).collect())
        .collect();
    let d = det(&matrix);
    (matrix, d)
}

fn submatrix<T: Clone>(m: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Verifies Sylvester's determinantal identity
/// `det(M) · det(M[S,S])^(n-|S|-1) = det(syl(M,S))`
/// over any commutative ring, where `syl(M,S)_{i,j} = det M[S ∪ {i}, S ∪ {j}]`
/// for `i, j ∉ S`.
pub fn sylvester_check<T>(m: &[Vec<T>], s: &BTreeSet<usize>) -> bool
where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(s.iter().all(|&i| i < n), "S must index into the matrix");
    let s_sorted: Vec<usize> = s.iter().copied().collect();
    let rest: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();

    let det_m = det(m);
    let det_ss = det(&submatrix(m, &s_sorted, &s_sorted));
    let mut lhs = det_m;
    let power = n - s.len() - 1;
    for _ in 0..power {
        lhs = lhs * det_ss.clone();
    }

    let syl: Vec<Vec<T>> = rest
        .iter()
        .map(|&i| {
            rest.iter()
                .map(|&j| {
                    let mut rows = s_sorted.clone();
                    rows.push(i);
                    rows.sort_unstable();
                    let mut cols = s_sorted.clone();
                    cols.push(j);
                    cols.sort_unstable();
                    det(&submatrix(m, &rows, &cols))
                })
                .collect()
        })
        .collect();
    let rhs = det(&syl);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn d(lambda: &[u32], mu: &[u32]) -> SkewDiagram {
        SkewDiagram::new(lambda, mu).unwrap()
    }

    #[test]
    fn northwest_decomposition_of_worked_example() {
        let sh = d(&[3, 3, 3, 1], &[1]);
        let dec = decompose(&sh, DecompKind::Northwest).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!((dec.ribbons[0].p, dec.ribbons[0].q), (-3, 2));
        assert_eq!((dec.ribbons[1].p, dec.ribbons[1].q), (-1, 1));
        // the cutting strip of a northwest decomposition is the nw border
        let strip_cells: BTreeSet<Cell> = dec.strip.values().copied().collect();
        let nw: BTreeSet<Cell> = cells::nw_border(sh.cells());
        assert_eq!(strip_cells, nw);
        // θ_1 # θ_2 = θ[-1,2], the four-cell ribbon (3,2)/(1)
        match dec.hash_op(0, 1) {
            StripInterval::Ribbon(r) => assert_eq!(r.diagram(), &d(&[3, 2], &[1])),
            other => panic!("expected ribbon, got {other:?}"),
        }
        // diagonal entries are content-congruent copies of the ribbons
        for rib in &dec.ribbons {
            let own = SkewDiagram::from_cells(rib.cells.iter().copied()).unwrap();
            match dec.strip_interval(rib.p, rib.q) {
                StripInterval::Ribbon(r) => assert_eq!(r.diagram(), &own),
                other => panic!("expected ribbon, got {other:?}"),
            }
        }
    }

    #[test]
    fn southeast_of_a_ribbon_is_itself() {
        let r = d(&[3, 2], &[1]);
        let dec = decompose(&r, DecompKind::Southeast).unwrap();
        assert_eq!(dec.len(), 1);
        let strip_cells: BTreeSet<Cell> = dec.strip.values().copied().collect();
        assert_eq!(strip_cells, *r.cells());
    }

    #[test]
    fn strip_interval_edge_values() {
        let dec = decompose(&d(&[3, 3, 3, 1], &[1]), DecompKind::Northwest).unwrap();
        assert_eq!(dec.strip_interval(1, 0), StripInterval::Empty);
        assert_eq!(dec.strip_interval(2, 0), StripInterval::Undefined);
        assert_eq!(dec.strip_interval(-7, -5), StripInterval::Undefined);
    }

    #[test]
    fn hamel_goulden_matches_expansion_on_worked_example() {
        let sh = d(&[3, 3, 3, 1], &[1]);
        let dec = decompose(&sh, DecompKind::Northwest).unwrap();
        let (matrix, det) = hamel_goulden(&dec);
        assert_eq!(matrix.len(), 2);
        assert_eq!(det, skew_schur(&sh));
    }

    #[test]
    fn jacobi_trudi_entries_are_rows() {
        let sh = d(&[4, 3, 1], &[2, 1]);
        let (la, mu) = sh.lambda_mu();
        let dec = decompose(&sh, DecompKind::JacobiTrudi).unwrap();
        assert_eq!(dec.len(), la.len());
        for i in 0..dec.len() {
            for j in 0..dec.len() {
                let e = la.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                match dec.hash_op(i, j) {
                    StripInterval::Ribbon(r) => {
                        assert_eq!(r.size() as i64, e);
                        assert_eq!(r.diagram().rows(), 1);
                    }
                    StripInterval::Empty => assert_eq!(e, 0),
                    StripInterval::Undefined => assert!(e < 0),
                }
            }
        }
        let (_, det) = hamel_goulden(&dec);
        assert_eq!(det, skew_schur(&sh));
    }

    #[test]
    fn partition_property() {
        let sh = d(&[4, 4, 3, 2], &[2, 1]);
        for kind in [DecompKind::Southeast, DecompKind::Northwest, DecompKind::JacobiTrudi] {
            let dec = decompose(&sh, kind).unwrap();
            let mut seen: BTreeSet<Cell> = BTreeSet::new();
            for rib in &dec.ribbons {
                assert!(rib.cells.iter().all(|c| seen.insert(*c)), "ribbons overlap");
            }
            assert_eq!(seen, *sh.cells());
        }
    }

    #[test]
    fn sylvester_trivial_and_desnanot_jacobi() {
        let m: Vec<Vec<i128>> = vec![vec![2, 0, 1], vec![1, 3, 2], vec![5, 1, 1]];
        // S = all indices but one reduces to det M = det M
        let s: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert!(sylvester_check(&m, &s));
        // S = {1} on a 3x3 matrix is the Desnanot-Jacobi identity
        let s: BTreeSet<usize> = [1].into_iter().collect();
        assert!(sylvester_check(&m, &s));
        // empty S: syl(M, ∅) = M entrywise
        assert!(sylvester_check(&m, &BTreeSet::new()));
    }

    #[test]
    fn sylvester_over_schur_polys() {
        let f = |la: &[u32]| SchurPoly::single(Partition::from_trimmed(la.to_vec()).unwrap(), 1);
        let m = vec![
            vec![f(&[1]), f(&[2]), SchurPoly::one()],
            vec![f(&[1, 1]), f(&[2, 1]), f(&[1])],
            vec![SchurPoly::zero(), f(&[3]), f(&[2])],
        ];
        let s: BTreeSet<usize> = [1].into_iter().collect();
        assert!(sylvester_check(&m, &s));
    }
}
