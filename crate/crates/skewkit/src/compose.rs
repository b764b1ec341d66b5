//! Composition of skew diagrams along an identified subdiagram.
//!
//! Given a skew diagram `E` with a subdiagram shape `W` lying in both its
//! top and bottom, every cell of a diagram `D` contributes a translated copy
//! of `E`; copies of adjacent cells are glued by amalgamation or by the dot
//! operation according to how the `W` copies attach to the rest of `E`.
//! The module provides the placement search, the five structural hypotheses,
//! amalgamated powers, the composition itself, the overlap shapes of the
//! infinite amalgam, the induced map on symmetric functions, and the
//! determinantal identity relating the two.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::decomp::{decompose, DecompKind};
use crate::diagram::{cells, content, Cell, SkewDiagram};
use crate::error::{Error, Result};
use crate::schur::{det, skew_schur, SchurPoly};

/// How the two copies of `W` attach to the interior `O`: the first letter is
/// the lower copy, the second the upper.  Horizontal means the extreme cell
/// of `O` has a `W` cell beside it in its row; vertical, in its column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AttachCase {
    /// `E = →W→O`: both copies horizontally attached.
    A,
    /// `E = ↑W↑O`: both copies vertically attached.
    B,
    /// lower horizontal, upper vertical.
    C,
    /// lower vertical, upper horizontal.
    D,
}

impl AttachCase {
    pub fn letter(self) -> char {
        match self {
            AttachCase::A => 'a',
            AttachCase::B => 'b',
            AttachCase::C => 'c',
            AttachCase::D => 'd',
        }
    }
}

/// A copy of a shape `W` identified in the top and bottom of a diagram `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPlacement {
    e: SkewDiagram,
    /// The copy of `W` containing the southwesternmost cell of `E`.
    sw: BTreeSet<Cell>,
    /// The copy of `W` containing the northeasternmost cell of `E`.
    ne: BTreeSet<Cell>,
    /// Canonical shape of `W`; empty for the edge placement.
    w: SkewDiagram,
    /// `E` minus both copies, positioned.
    o: BTreeSet<Cell>,
    case: Option<AttachCase>,
}

impl WPlacement {
    /// The conventional placement of the empty `W`: the west edge of the
    /// southwesternmost cell and the east edge of the northeasternmost cell.
    pub fn empty(e: &SkewDiagram) -> Result<Self> {
        if e.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        Ok(WPlacement {
            e: e.clone(),
            sw: BTreeSet::new(),
            ne: BTreeSet::new(),
            w: SkewDiagram::empty(),
            o: e.cells().clone(),
            case: Some(AttachCase::A),
        })
    }

    /// Builds a placement from positioned copies inside `E`'s canonical form.
    pub fn new(e: &SkewDiagram, sw: BTreeSet<Cell>, ne: BTreeSet<Cell>) -> Result<Self> {
        if sw.is_empty() && ne.is_empty() {
            return WPlacement::empty(e);
        }
        let all = e.cells();
        if !sw.iter().all(|c| all.contains(c)) || !ne.iter().all(|c| all.contains(c)) {
            return Err(Error::Placement("W copies must be subsets of E".into()));
        }
        for (set, which) in [(&sw, "bottom"), (&ne, "top")] {
            if !cells::is_skew(set) || !cells::is_connected(set) {
                return Err(Error::Placement(format!(
                    "{which} copy is not a connected subdiagram"
                )));
            }
        }
        let e_sw = cells::sw_cell(all).unwrap();
        let e_ne = cells::ne_cell(all).unwrap();
        if !sw.contains(&e_sw) {
            return Err(Error::Placement(
                "bottom copy must contain the southwesternmost cell of E".into(),
            ));
        }
        if !ne.contains(&e_ne) {
            return Err(Error::Placement(
                "top copy must contain the northeasternmost cell of E".into(),
            ));
        }
        let w_sw = SkewDiagram::from_cells(sw.iter().copied())?;
        let w_ne = SkewDiagram::from_cells(ne.iter().copied())?;
        if w_sw != w_ne {
            return Err(Error::Placement("the two copies have different shapes".into()));
        }
        let o: BTreeSet<Cell> = all
            .iter()
            .filter(|c| !sw.contains(c) && !ne.contains(c))
            .copied()
            .collect();
        let case = attach_case(&sw, &ne, &o);
        Ok(WPlacement { e: e.clone(), sw, ne, w: w_sw, o, case })
    }

    pub fn e(&self) -> &SkewDiagram {
        &self.e
    }

    pub fn w(&self) -> &SkewDiagram {
        &self.w
    }

    pub fn sw_cells(&self) -> &BTreeSet<Cell> {
        &self.sw
    }

    pub fn ne_cells(&self) -> &BTreeSet<Cell> {
        &self.ne
    }

    pub fn o_cells(&self) -> &BTreeSet<Cell> {
        &self.o
    }

    pub fn case(&self) -> Option<AttachCase> {
        self.case
    }

    /// Translation carrying the bottom copy onto the top copy; the second
    /// factor of an amalgam is shifted by this vector.
    pub fn amalg_vector(&self) -> Cell {
        if self.w.is_empty() {
            let (sr, sc) = cells::sw_cell(self.e.cells()).unwrap();
            let (nr, nc) = cells::ne_cell(self.e.cells()).unwrap();
            (nr - sr, nc - sc + 1)
        } else {
            let s = self.sw.iter().next().unwrap();
            let n = self.ne.iter().next().unwrap();
            (n.0 - s.0, n.1 - s.1)
        }
    }

    /// The placement of `W*` inside `E*`.
    pub fn rotate180(&self) -> WPlacement {
        let rot = |set: &BTreeSet<Cell>| -> BTreeSet<Cell> {
            set.iter().map(|&(r, c)| (-r, -c)).collect()
        };
        let raw: BTreeSet<Cell> = rot(self.e.cells());
        let e_star = self.e.rotate180();
        // from_cells compresses; recover the shift from raw to canonical
        let raw_min_r = raw.iter().map(|c| c.0).min().unwrap();
        let raw_min_c = raw.iter().map(|c| c.1).min().unwrap();
        let shift = (-raw_min_r, -raw_min_c);
        // rotation of a canonical diagram needs no compression beyond translation
        debug_assert_eq!(cells::translate(&raw, shift), *e_star.cells());
        let sw_star = cells::translate(&rot(&self.ne), shift);
        let ne_star = cells::translate(&rot(&self.sw), shift);
        WPlacement::new(&e_star, sw_star, ne_star).expect("rotation preserves placements")
    }

    /// The placement of `Wᵗ` inside `Eᵗ`.  Transposition carries the
    /// northeasternmost cell to the southwesternmost one, so the copies swap.
    pub fn transpose(&self) -> WPlacement {
        let tr = |set: &BTreeSet<Cell>| -> BTreeSet<Cell> {
            set.iter().map(|&(r, c)| (c, r)).collect()
        };
        let e_t = self.e.transpose();
        WPlacement::new(&e_t, tr(&self.ne), tr(&self.sw))
            .expect("transposition preserves placements")
    }
}

fn attach_case(
    sw: &BTreeSet<Cell>,
    ne: &BTreeSet<Cell>,
    o: &BTreeSet<Cell>,
) -> Option<AttachCase> {
    if o.is_empty() || sw.iter().any(|c| ne.contains(c)) {
        return None;
    }
    let (osr, osc) = cells::sw_cell(o)?;
    let (onr, onc) = cells::ne_cell(o)?;
    let lower_h = sw.contains(&(osr, osc - 1));
    let lower_v = sw.contains(&(osr + 1, osc));
    let upper_h = ne.contains(&(onr, onc + 1));
    let upper_v = ne.contains(&(onr - 1, onc));
    match (lower_h, lower_v, upper_h, upper_v) {
        (true, false, true, false) => Some(AttachCase::A),
        (false, true, false, true) => Some(AttachCase::B),
        (true, false, false, true) => Some(AttachCase::C),
        (false, true, true, false) => Some(AttachCase::D),
        _ => None,
    }
}

/// Enumerates all connected subsets of `within` that contain `anchor` and
/// form skew shapes in place.
fn anchored_subdiagrams(within: &BTreeSet<Cell>, anchor: Cell) -> Vec<BTreeSet<Cell>> {
    let mut seen: HashSet<Vec<Cell>> = HashSet::new();
    let mut queue: VecDeque<BTreeSet<Cell>> = VecDeque::new();
    let start: BTreeSet<Cell> = [anchor].into_iter().collect();
    seen.insert(start.iter().copied().collect());
    queue.push_back(start);
    let mut all = Vec::new();
    while let Some(cur) = queue.pop_front() {
        if cells::is_skew(&cur) {
            all.push(cur.clone());
        }
        for &(r, c) in &cur {
            for n in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
                if within.contains(&n) && !cur.contains(&n) {
                    let mut next = cur.clone();
                    next.insert(n);
                    let key: Vec<Cell> = next.iter().copied().collect();
                    if seen.insert(key) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    all
}

/// All shapes `W` (including the empty one) lying in both the top and bottom
/// of a connected diagram `E`, with their anchored copies.  Maximality and
/// the other hypotheses are reported by [`check_hypotheses`], not filtered
/// here.
pub fn find_w_placements(e: &SkewDiagram) -> Result<Vec<WPlacement>> {
    if e.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    if !e.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = vec![WPlacement::empty(e)?];
    let all = e.cells();
    let tops = anchored_subdiagrams(all, cells::ne_cell(all).unwrap());
    let bottoms = anchored_subdiagrams(all, cells::sw_cell(all).unwrap());
    let mut tops_by_shape: BTreeMap<SkewDiagram, Vec<&BTreeSet<Cell>>> = BTreeMap::new();
    for t in &tops {
        let shape = SkewDiagram::from_cells(t.iter().copied()).expect("validated");
        tops_by_shape.entry(shape).or_default().push(t);
    }
    for b in &bottoms {
        let shape = SkewDiagram::from_cells(b.iter().copied()).expect("validated");
        if let Some(ts) = tops_by_shape.get(&shape) {
            for t in ts {
                out.push(WPlacement::new(e, b.clone(), (*t).clone())?);
            }
        }
    }
    out.sort_by(|x, y| {
        (x.w.size(), &x.w, &x.sw, &x.ne).cmp(&(y.w.size(), &y.w, &y.sw, &y.ne))
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Amalgamation and the dot operation.
// ---------------------------------------------------------------------------

/// `E1 ⊔_W E2`: glues a copy of `E2` onto `E1`, identifying the top copy of
/// `W` in `E1` with the bottom copy in `E2`.
pub fn amalgamate(
    e1: &SkewDiagram,
    top1: &BTreeSet<Cell>,
    e2: &SkewDiagram,
    bottom2: &BTreeSet<Cell>,
) -> Result<SkewDiagram> {
    let v = amalg_offset(e1, top1, e2, bottom2)?;
    let mut cells_out: BTreeSet<Cell> = e1.cells().clone();
    cells_out.extend(cells::translate(e2.cells(), v));
    SkewDiagram::from_positioned(&cells_out)
}

fn amalg_offset(
    e1: &SkewDiagram,
    top1: &BTreeSet<Cell>,
    e2: &SkewDiagram,
    bottom2: &BTreeSet<Cell>,
) -> Result<Cell> {
    if top1.is_empty() != bottom2.is_empty() {
        return Err(Error::Placement("both copies must be empty or non-empty".into()));
    }
    if top1.is_empty() {
        let ne = cells::ne_cell(e1.cells()).ok_or(Error::EmptyDiagram)?;
        let sw = cells::sw_cell(e2.cells()).ok_or(Error::EmptyDiagram)?;
        return Ok((ne.0 - sw.0, ne.1 - sw.1 + 1));
    }
    let shape1 = SkewDiagram::from_cells(top1.iter().copied())?;
    let shape2 = SkewDiagram::from_cells(bottom2.iter().copied())?;
    if shape1 != shape2 {
        return Err(Error::Placement("identified copies have different shapes".into()));
    }
    if !top1.iter().all(|c| e1.cells().contains(c))
        || !bottom2.iter().all(|c| e2.cells().contains(c))
    {
        return Err(Error::Placement("copies must live inside their diagrams".into()));
    }
    if !top1.contains(&cells::ne_cell(e1.cells()).unwrap()) {
        return Err(Error::Placement("copy must lie in the top of the first factor".into()));
    }
    if !bottom2.contains(&cells::sw_cell(e2.cells()).unwrap()) {
        return Err(Error::Placement("copy must lie in the bottom of the second factor".into()));
    }
    let t = top1.iter().next().unwrap();
    let b = bottom2.iter().next().unwrap();
    let v = (t.0 - b.0, t.1 - b.1);
    if cells::translate(bottom2, v) != *top1 {
        return Err(Error::Placement("copies are not translates of each other".into()));
    }
    Ok(v)
}

/// Positioned cells of `E^{⊔_W m}` for `m ≥ 1` in `E`'s frame.
fn amalg_cells(pl: &WPlacement, m: u32) -> BTreeSet<Cell> {
    let v = pl.amalg_vector();
    let mut out = BTreeSet::new();
    for k in 0..m as i32 {
        out.extend(cells::translate(pl.e.cells(), (v.0 * k, v.1 * k)));
    }
    out
}

/// `E^{⊔_W m}`, with `E^{⊔_W 0} = W` and `E^{⊔_W 1} = E`.
pub fn amalg_power(pl: &WPlacement, m: u32) -> Result<SkewDiagram> {
    if m == 0 {
        return Ok(pl.w.clone());
    }
    SkewDiagram::from_positioned(&amalg_cells(pl, m))
}

/// The four candidate constructions for `E ·_W E`.  Returns `None` when the
/// construction does not produce a skew shape.
pub fn dot_construction(pl: &WPlacement, which: AttachCase) -> Option<SkewDiagram> {
    let v = pl.amalg_vector();
    let mut out: BTreeSet<Cell> = pl.e.cells().clone();
    match which {
        AttachCase::A => {
            out.extend(cells::translate(pl.e.cells(), (v.0 - 1, v.1 - 1)));
        }
        AttachCase::B => {
            out.extend(cells::translate(pl.e.cells(), (v.0 + 1, v.1 + 1)));
        }
        AttachCase::C => {
            out.extend(cells::translate(pl.e.cells(), v));
            out.extend(cells::translate(&pl.ne, (1, 1)));
        }
        AttachCase::D => {
            out.extend(cells::translate(pl.e.cells(), v));
            out.extend(cells::translate(&pl.ne, (-1, -1)));
        }
    }
    SkewDiagram::from_positioned(&out).ok()
}

/// `E ·_W E` via the construction matching the placement's attachment case.
pub fn dot_compose(pl: &WPlacement) -> Result<SkewDiagram> {
    let case = pl
        .case
        .ok_or_else(|| Error::Placement("attachment case undefined for this placement".into()))?;
    dot_construction(pl, case).ok_or_else(|| {
        Error::Placement(format!(
            "construction for case {} did not produce a skew shape",
            case.letter()
        ))
    })
}

// ---------------------------------------------------------------------------
// The composition D ∘_W E.
// ---------------------------------------------------------------------------

/// `D ∘_W E`.  Every cell of `D` contributes a copy of `E`; copies of
/// east neighbours amalgamate, copies of south neighbours combine by the dot
/// operation, and for the mixed attachment cases the gluing follows the
/// northwest (case c) or southeast (case d, via rotation) ribbon
/// decomposition of `D`.  `∅ ∘_W E = W`; `D` must otherwise be connected.
pub fn compose(d: &SkewDiagram, pl: &WPlacement) -> Result<SkewDiagram> {
    if d.is_empty() {
        return Ok(pl.w.clone());
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let case = pl
        .case
        .ok_or_else(|| Error::Placement("attachment case undefined for this placement".into()))?;
    match case {
        AttachCase::A | AttachCase::B => compose_linear(d, pl, case),
        AttachCase::C => compose_staircase(d, pl),
        AttachCase::D => {
            let inner = compose(&d.rotate180(), &pl.rotate180())?;
            Ok(inner.rotate180())
        }
    }
}

fn compose_linear(d: &SkewDiagram, pl: &WPlacement, case: AttachCase) -> Result<SkewDiagram> {
    let v = pl.amalg_vector();
    let delta = if case == AttachCase::A { (-1, -1) } else { (1, 1) };
    let v_dot = (v.0 + delta.0, v.1 + delta.1);
    let mut union: BTreeSet<Cell> = BTreeSet::new();
    for &(i, j) in d.cells() {
        let t = (j * v.0 - i * v_dot.0, j * v.1 - i * v_dot.1);
        union.extend(cells::translate(pl.e.cells(), t));
    }
    SkewDiagram::from_positioned(&union)
}

fn compose_staircase(d: &SkewDiagram, pl: &WPlacement) -> Result<SkewDiagram> {
    let v = pl.amalg_vector();
    let dec = decompose(d, DecompKind::Northwest)?;
    // relation edges: consecutive cells of one ribbon step by the amalgam
    // vector; a cell one position southeast of another steps by (1,1)
    let mut offsets: HashMap<Cell, Cell> = HashMap::new();
    let mut edges: Vec<(Cell, Cell, Cell)> = Vec::new();
    for rib in &dec.ribbons {
        let mut path: Vec<Cell> = rib.cells.iter().copied().collect();
        path.sort_by_key(|&c| content(c));
        for w in path.windows(2) {
            edges.push((w[0], w[1], v));
        }
    }
    for &(r, c) in d.cells() {
        if d.cells().contains(&(r + 1, c + 1)) {
            edges.push(((r, c), (r + 1, c + 1), (1, 1)));
        }
    }
    let start = *d.cells().iter().next().unwrap();
    offsets.insert(start, (0, 0));
    let mut frontier = VecDeque::from([start]);
    let adj: HashMap<Cell, Vec<(Cell, Cell)>> = {
        let mut m: HashMap<Cell, Vec<(Cell, Cell)>> = HashMap::new();
        for &(a, b, step) in &edges {
            m.entry(a).or_default().push((b, step));
            m.entry(b).or_default().push((a, (-step.0, -step.1)));
        }
        m
    };
    while let Some(cur) = frontier.pop_front() {
        let t = offsets[&cur];
        for &(next, step) in adj.get(&cur).into_iter().flatten() {
            let nt = (t.0 + step.0, t.1 + step.1);
            match offsets.get(&next) {
                None => {
                    offsets.insert(next, nt);
                    frontier.push_back(next);
                }
                Some(&have) => {
                    if have != nt {
                        return Err(Error::Placement(
                            "inconsistent copy offsets along redundant paths".into(),
                        ));
                    }
                }
            }
        }
    }
    if offsets.len() != d.size() {
        return Err(Error::Placement("ribbon relations do not span D".into()));
    }
    let mut union: BTreeSet<Cell> = BTreeSet::new();
    for &t in offsets.values() {
        union.extend(cells::translate(pl.e.cells(), t));
    }
    // dot steps on a ribbon (southern neighbour on the same ribbon) add an
    // extra copy of W one position southeast of the shared copy
    for rib in &dec.ribbons {
        let mut path: Vec<Cell> = rib.cells.iter().copied().collect();
        path.sort_by_key(|&c| content(c));
        for w in path.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if hi == (lo.0 - 1, lo.1) {
                let t = offsets[&lo];
                union.extend(cells::translate(&pl.ne, (t.0 + 1, t.1 + 1)));
            }
        }
    }
    SkewDiagram::from_positioned(&union)
}

// ---------------------------------------------------------------------------
// Overlap shapes of the infinite amalgam.
// ---------------------------------------------------------------------------

/// The shapes `W̄` and `Ō` cut out of the infinite amalgam by its translate
/// one position northwest.  Both may be empty or disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapShapes {
    pub bar_w: SkewDiagram,
    pub bar_o: SkewDiagram,
}

/// Positioned overlap data inside the triple amalgam `E^{⊔_W 3}`.
struct PositionedOverlap {
    /// One copy of `Ō` per copy of `O`, positioned.
    baro: Vec<BTreeSet<Cell>>,
    /// One copy of `W̄` per copy of `W`, positioned (boundary copies are
    /// truncated, which can only miss adjacencies that a middle copy shows).
    barw: Vec<BTreeSet<Cell>>,
    /// Index of the fully surrounded `W̄` copy.
    middle_w: usize,
}

fn positioned_overlap(pl: &WPlacement) -> PositionedOverlap {
    let v = pl.amalg_vector();
    let u3 = amalg_cells(pl, 3);
    let baro = (0..3)
        .map(|k| {
            let o_k = cells::translate(&pl.o, (v.0 * k, v.1 * k));
            o_k.iter()
                .filter(|&&(r, c)| o_k.contains(&(r + 1, c + 1)))
                .copied()
                .collect()
        })
        .collect();
    let mut barw = Vec::new();
    if !pl.w.is_empty() {
        for k in 0..4 {
            let w_k = cells::translate(&pl.sw, (v.0 * k, v.1 * k));
            let mut set: BTreeSet<Cell> = u3
                .iter()
                .filter(|&&(r, c)| w_k.contains(&(r + 1, c + 1)))
                .copied()
                .collect();
            set.extend(
                w_k.iter().filter(|&&(r, c)| u3.contains(&(r + 1, c + 1))).copied(),
            );
            barw.push(set);
        }
    }
    PositionedOverlap { baro, barw, middle_w: 1 }
}

/// Canonical `W̄` and `Ō` for a placement.
pub fn overlap_shapes(pl: &WPlacement) -> Result<OverlapShapes> {
    let pos = positioned_overlap(pl);
    let bar_o = SkewDiagram::from_cells(pos.baro[1].iter().copied())?;
    let bar_w = if pl.w.is_empty() {
        SkewDiagram::empty()
    } else {
        SkewDiagram::from_cells(pos.barw[pos.middle_w].iter().copied())?
    };
    Ok(OverlapShapes { bar_w, bar_o })
}

// ---------------------------------------------------------------------------
// Hypotheses.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct HypCheck {
    pub holds: bool,
    pub witness: String,
}

fn hyp(holds: bool, witness: impl Into<String>) -> HypCheck {
    HypCheck { holds, witness: witness.into() }
}

/// Report on the five structural hypotheses for a placement.  The fifth is
/// only required when both copies attach the same way (cases a and b).
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub case: Option<char>,
    pub h1_maximal: HypCheck,
    pub h2_separated: HypCheck,
    pub h3_complement_connected: HypCheck,
    pub h4_overlap_nonadjacent: HypCheck,
    pub h5_single_attach_cell: HypCheck,
    pub all_i_to_iv: bool,
    pub all_i_to_v: bool,
}

pub fn check_hypotheses(pl: &WPlacement) -> Result<HypothesisReport> {
    let all = find_w_placements(&pl.e)?;
    Ok(check_hypotheses_with(pl, &all))
}

/// Hypothesis check against a precomputed placement list for the same `E`.
pub fn check_hypotheses_with(pl: &WPlacement, all_placements: &[WPlacement]) -> HypothesisReport {
    let h1 = check_h1(pl, all_placements);
    let h2 = check_h2(pl);
    let h3 = check_h3(pl);
    let h4 = check_h4(pl);
    let h5 = check_h5(pl);
    let all_i_to_iv = h1.holds && h2.holds && h3.holds && h4.holds;
    let all_i_to_v = all_i_to_iv && h5.holds;
    HypothesisReport {
        case: pl.case.map(AttachCase::letter),
        h1_maximal: h1,
        h2_separated: h2,
        h3_complement_connected: h3,
        h4_overlap_nonadjacent: h4,
        h5_single_attach_cell: h5,
        all_i_to_iv,
        all_i_to_v,
    }
}

fn check_h1(pl: &WPlacement, all: &[WPlacement]) -> HypCheck {
    for other in all {
        if other.w.size() <= pl.w.size() {
            continue;
        }
        let grows_ne = other.ne.is_superset(&pl.ne);
        let grows_sw = other.sw.is_superset(&pl.sw);
        let same_diags = cells::diagonals(&other.ne) == cells::diagonals(&pl.ne)
            && cells::diagonals(&other.sw) == cells::diagonals(&pl.sw);
        if grows_ne && grows_sw && same_diags {
            return hyp(
                false,
                format!("a larger shape {} fits the same diagonals", other.w),
            );
        }
    }
    hyp(true, "no larger shape on the same diagonals lies in top and bottom")
}

fn check_h2(pl: &WPlacement) -> HypCheck {
    if pl.w.is_empty() {
        return hyp(true, "vacuous: W is empty");
    }
    let max_sw = pl.sw.iter().map(|&c| content(c)).max().unwrap();
    let min_ne = pl.ne.iter().map(|&c| content(c)).min().unwrap();
    if min_ne - max_sw >= 2 {
        hyp(true, format!("copies separated by {} diagonal(s)", min_ne - max_sw - 1))
    } else {
        hyp(false, format!("copies separated by {} diagonals", (min_ne - max_sw - 1).max(-1)))
    }
}

fn check_h3(pl: &WPlacement) -> HypCheck {
    if pl.w.is_empty() {
        return hyp(true, "vacuous: W is empty");
    }
    for (copy, name) in [(&pl.ne, "top"), (&pl.sw, "bottom")] {
        let rest: BTreeSet<Cell> =
            pl.e.cells().iter().filter(|c| !copy.contains(c)).copied().collect();
        if rest.is_empty() {
            return hyp(false, format!("complement of the {name} copy is empty"));
        }
        if !cells::is_skew(&rest) {
            return hyp(false, format!("complement of the {name} copy is not a skew shape"));
        }
        if !cells::is_connected(&rest) {
            return hyp(false, format!("complement of the {name} copy is disconnected"));
        }
    }
    hyp(true, "both complements are connected skew shapes")
}

fn check_h4(pl: &WPlacement) -> HypCheck {
    if pl.w.is_empty() {
        return hyp(true, "vacuous: W̄ is empty");
    }
    let pos = positioned_overlap(pl);
    for (k, baro) in pos.baro.iter().enumerate() {
        for (j, barw) in pos.barw.iter().enumerate() {
            if baro.is_empty() || barw.is_empty() {
                continue;
            }
            if cells::adjacent(baro, barw) {
                return hyp(
                    false,
                    format!("Ō copy {k} is adjacent to W̄ copy {j} in the amalgam"),
                );
            }
        }
    }
    hyp(true, "no copy of Ō touches a copy of W̄")
}

fn check_h5(pl: &WPlacement) -> HypCheck {
    if pl.w.is_empty() {
        return hyp(true, "vacuous: W is empty");
    }
    match pl.case {
        Some(AttachCase::C) | Some(AttachCase::D) => {
            hyp(true, "not required for mixed attachment")
        }
        None => hyp(false, "attachment case undefined"),
        Some(_) => {
            let touch = |copy: &BTreeSet<Cell>| {
                copy.iter()
                    .filter(|&&(r, c)| {
                        [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)]
                            .iter()
                            .any(|n| pl.o.contains(n))
                    })
                    .count()
            };
            let (b, t) = (touch(&pl.sw), touch(&pl.ne));
            if b == 1 || t == 1 {
                hyp(true, format!("attachment cell counts: bottom {b}, top {t}"))
            } else {
                hyp(false, format!("attachment cell counts: bottom {b}, top {t}"))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The induced map on symmetric functions and the main identity.
// ---------------------------------------------------------------------------

/// Places the given diagrams in a single plane, each strictly northeast of
/// the previous one with a separating gap, so the expansion of the union is
/// the product of the expansions.
fn far_disjoint_union(parts: &[&SkewDiagram]) -> SkewDiagram {
    let mut cells_out: BTreeSet<Cell> = BTreeSet::new();
    let mut min_row = 1i32;
    let mut max_col = -1i32;
    for part in parts {
        if part.is_empty() {
            continue;
        }
        let rows = part.cells().iter().map(|c| c.0).max().unwrap() + 1;
        let shift = (min_row - rows - 1, max_col + 2);
        cells_out.extend(cells::translate(part.cells(), shift));
        min_row = min_row - rows - 1;
        max_col += 2 + part.cells().iter().map(|c| c.1).max().unwrap();
    }
    SkewDiagram::from_cells(cells_out).expect("stacked blocks form a skew shape")
}

/// `s_D ∘_W s_E`: the determinant of the Jacobi-Trudi matrix of `D` with
/// `h_r` replaced by the expansion of `E^{⊔_W r}`, `h_0` by `s_W` and
/// negative indices by zero.  `∅ ∘_W E = W`.
pub fn schur_compose(d: &SkewDiagram, pl: &WPlacement) -> Result<SchurPoly> {
    if d.is_empty() {
        return Ok(skew_schur(&pl.w));
    }
    let (la, mu) = d.lambda_mu();
    let r = la.len();
    let mut exponents = vec![vec![-1i64; r]; r];
    let mut max_e = 0;
    for i in 0..r {
        for j in 0..r {
            let e = la.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            exponents[i][j] = e;
            max_e = max_e.max(e);
        }
    }
    let mut power_diagrams: HashMap<u32, SkewDiagram> = HashMap::new();
    for k in 0..=max_e.max(0) as u32 {
        power_diagrams.insert(k, amalg_power(pl, k)?);
    }
    if r <= PERMANENT_EXPANSION_MAX_ROWS {
        // permutation expansion: group permutations by the multiset of
        // exponents they select, then expand each monomial with a single
        // enumeration of the stacked product diagram
        let mut monomials: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        let mut perm = Vec::with_capacity(r);
        let mut used = vec![false; r];
        collect_permutations(&exponents, 0, &mut used, &mut perm, &mut monomials);
        let mut out = SchurPoly::zero();
        for (expts, coeff) in monomials {
            let parts: Vec<&SkewDiagram> =
                expts.iter().map(|k| &power_diagrams[k]).collect();
            let poly = skew_schur(&far_disjoint_union(&parts));
            for (lam, c) in poly.terms() {
                out.add_term(lam.clone(), c * coeff);
            }
        }
        Ok(out)
    } else {
        let matrix: Vec<Vec<SchurPoly>> = exponents
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| {
                        if e < 0 {
                            SchurPoly::zero()
                        } else {
                            skew_schur(&power_diagrams[&(e as u32)])
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(det(&matrix))
    }
}

const PERMANENT_EXPANSION_MAX_ROWS: usize = 7;

fn collect_permutations(
    exponents: &[Vec<i64>],
    row: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<u32>, i64>,
) {
    let r = exponents.len();
    if row == r {
        let mut inv = 0;
        for i in 0..r {
            for j in i + 1..r {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        let mut expts: Vec<u32> =
            (0..r).map(|i| exponents[i][perm[i]] as u32).collect();
        expts.sort_unstable();
        *out.entry(expts).or_insert(0) += sign;
        return;
    }
    for col in 0..r {
        if !used[col] && exponents[row][col] >= 0 {
            used[col] = true;
            perm.push(col);
            collect_permutations(exponents, row + 1, used, perm, out);
            perm.pop();
            used[col] = false;
        }
    }
}

/// A ribbon of the enhanced northwest decomposition; empty ribbons record
/// the imaginary cells that justify them.
#[derive(Clone, Debug)]
pub struct EnhancedRibbon {
    pub cells: Vec<Cell>,
    pub p: i32,
    pub q: i32,
    /// For an empty ribbon, the imaginary cells `(southern, northern)` one
    /// position southeast of the generating pair.
    pub imaginary: Option<(Cell, Cell)>,
}

/// The northwest decomposition of a connected diagram together with one
/// empty ribbon for every south-step of the southeast border that stays on a
/// single northwest ribbon.  Has exactly `rows(D)` ribbons, ordered by
/// strictly decreasing end content `q`.
pub fn enhanced_nw_decomposition(d: &SkewDiagram) -> Result<Vec<EnhancedRibbon>> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = decompose(d, DecompKind::Northwest)?;
    let se = cells::se_border(d.cells());
    let mut out: Vec<EnhancedRibbon> = dec
        .ribbons
        .iter()
        .map(|r| EnhancedRibbon {
            cells: {
                let mut v: Vec<Cell> = r.cells.iter().copied().collect();
                v.sort_by_key(|&c| content(c));
                v
            },
            p: r.p,
            q: r.q,
            imaginary: None,
        })
        .collect();
    for rib in &dec.ribbons {
        let mut path: Vec<Cell> = rib.cells.iter().copied().collect();
        path.sort_by_key(|&c| content(c));
        for w in path.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if hi == (lo.0 - 1, lo.1) && se.contains(&lo) && se.contains(&hi) {
                let i_lo = (lo.0 + 1, lo.1 + 1);
                let i_hi = (hi.0 + 1, hi.1 + 1);
                out.push(EnhancedRibbon {
                    cells: Vec::new(),
                    p: content(i_hi),
                    q: content(i_lo),
                    imaginary: Some((i_lo, i_hi)),
                });
            }
        }
    }
    out.sort_by_key(|r| -r.q);
    if out.len() != d.rows() {
        return Err(Error::Placement(format!(
            "enhanced decomposition has {} ribbons for {} rows",
            out.len(),
            d.rows()
        )));
    }
    Ok(out)
}

/// The sign attached to a connected `D` in the mixed attachment cases:
/// `(-1)^inv(σ)` for the permutation sorting the start contents of the
/// enhanced northwest decomposition into decreasing order.
pub fn sign_of(d: &SkewDiagram) -> Result<i32> {
    let ribbons = enhanced_nw_decomposition(d)?;
    let ps: Vec<i32> = ribbons.iter().map(|r| r.p).collect();
    let mut sigma: Vec<usize> = (0..ps.len()).collect();
    sigma.sort_by_key(|&i| -ps[i]);
    let mut inv = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inv += 1;
            }
        }
    }
    Ok(if inv % 2 == 0 { 1 } else { -1 })
}

/// Outcome of checking the determinantal identity
/// `s_{D∘E} · s_W̄^{|D↑|} · s_Ō^{|nw-body(D)|} = ± (s_D ∘_W s_E)`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Which sign matched; meaningful only when `holds` is true.
    pub sign: i32,
    /// Sign predicted by the attachment case (+1 for a/b, the decomposition
    /// sign of `D` for c/d).
    pub expected_sign: i32,
    pub sign_matches: bool,
}

/// Evaluates both sides of the identity and reports which sign matched.
/// Assumes the placement satisfies the first four hypotheses.
pub fn verify_main_identity(d: &SkewDiagram, pl: &WPlacement) -> Result<IdentityCheck> {
    let composite = compose(d, pl)?;
    let shapes = overlap_shapes(pl)?;
    let mut lhs = skew_schur(&composite);
    let up = d.up_body_size();
    let nwb = d.nw_body().size();
    if !shapes.bar_w.is_empty() {
        lhs = lhs * skew_schur(&shapes.bar_w).pow(up);
    }
    if !shapes.bar_o.is_empty() {
        lhs = lhs * skew_schur(&shapes.bar_o).pow(nwb);
    }
    let rhs = schur_compose(d, pl)?;
    let (holds, sign) = if lhs == rhs {
        (true, 1)
    } else if lhs == -rhs.clone() {
        (true, -1)
    } else {
        (false, 0)
    };
    let expected_sign = match pl.case {
        Some(AttachCase::A) | Some(AttachCase::B) => 1,
        Some(_) => {
            if d.is_empty() {
                1
            } else {
                sign_of(d)?
            }
        }
        None => return Err(Error::Placement("attachment case undefined".into())),
    };
    Ok(IdentityCheck { holds, sign, expected_sign, sign_matches: !holds || sign == expected_sign })
}

// ---------------------------------------------------------------------------
// Factorisations.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Factorization {
    pub d: SkewDiagram,
    pub placement: WPlacement,
    pub trivial: bool,
}

impl Factorization {
    pub fn w(&self) -> &SkewDiagram {
        self.placement.w()
    }

    pub fn e(&self) -> &SkewDiagram {
        self.placement.e()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FactorBounds {
    /// Largest diagram the exhaustive search accepts.
    pub max_cells: usize,
}

impl Default for FactorBounds {
    fn default() -> Self {
        FactorBounds { max_cells: 14 }
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub factorizations: Vec<Factorization>,
    /// Indices of the non-trivial factorizations minimizing the number of
    /// diagonals of `W`, then of `E`.  All ties are reported.
    pub minimal: Vec<usize>,
}

fn is_trivial_factorization(f_diagram: &SkewDiagram, d: &SkewDiagram, pl: &WPlacement) -> bool {
    let one = SkewDiagram::new(&[1], &[]).expect("single cell");
    // (1) ∘_W F
    if *d == one && pl.e() == f_diagram {
        return true;
    }
    // F ∘_∅ (1)
    if d == f_diagram && pl.w().is_empty() && *pl.e() == one {
        return true;
    }
    // ∅ ∘_F E
    if d.is_empty() && pl.w() == f_diagram {
        return true;
    }
    false
}

/// Exhaustive search for expressions `F = D ∘_W E` with the placement
/// satisfying the first four hypotheses.  `E` is recovered as a positioned
/// copy inside `F` containing its northeasternmost cell; candidate `D` are
/// bounded through the disjoint south-strip contributions of the copies.
pub fn factorizations(f: &SkewDiagram, bounds: FactorBounds) -> Result<FactorizationReport> {
    if f.size() > bounds.max_cells {
        return Err(Error::CapExceeded { requested: f.size(), cap: bounds.max_cells });
    }
    if f.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    if !f.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut found: Vec<Factorization> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let one = SkewDiagram::new(&[1], &[]).expect("single cell");
    let tops = anchored_subdiagrams(f.cells(), cells::ne_cell(f.cells()).unwrap());
    // connected candidate D's, generated lazily by size
    let mut d_pool: Vec<Vec<SkewDiagram>> = vec![Vec::new()];
    for top in &tops {
        let e_shape = SkewDiagram::from_cells(top.iter().copied()).expect("validated");
        if !e_shape.is_connected() {
            continue;
        }
        let placements = find_w_placements(&e_shape)?;
        for pl in &placements {
            let report = check_hypotheses_with(pl, &placements);
            if !report.all_i_to_iv {
                continue;
            }
            // ∅ ∘_W E = W
            if pl.w() == f {
                push_unique(&mut found, &mut seen, f, SkewDiagram::empty(), pl.clone());
            }
            // composing with a single cell along the empty shape is the
            // identity; search would otherwise range over all |F|-cell D
            if *pl.e() == one && pl.w().is_empty() {
                push_unique(&mut found, &mut seen, f, f.clone(), pl.clone());
                continue;
            }
            let d_cap = candidate_d_cap(f, pl).min(f.size());
            while d_pool.len() <= d_cap {
                let n = d_pool.len();
                d_pool.push(crate::classify::enumerate_connected_unbounded(n));
            }
            for d in d_pool[1..=d_cap].iter().flatten() {
                if let Ok(result) = compose(d, pl) {
                    if result == *f {
                        push_unique(&mut found, &mut seen, f, d.clone(), pl.clone());
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| {
        (a.w().size(), a.e().size(), &a.d, a.e(), a.w())
            .cmp(&(b.w().size(), b.e().size(), &b.d, b.e(), b.w()))
    });
    let mut minimal: Vec<usize> = Vec::new();
    let mut best: Option<(usize, usize)> = None;
    for (i, fac) in found.iter().enumerate() {
        if fac.trivial {
            continue;
        }
        let key = (fac.w().diagonal_count(), fac.e().diagonal_count());
        match best {
            None => {
                best = Some(key);
                minimal.push(i);
            }
            Some(b) if key < b => {
                best = Some(key);
                minimal.clear();
                minimal.push(i);
            }
            Some(b) if key == b => minimal.push(i),
            _ => {}
        }
    }
    Ok(FactorizationReport { factorizations: found, minimal })
}

fn push_unique(
    found: &mut Vec<Factorization>,
    seen: &mut BTreeSet<String>,
    f: &SkewDiagram,
    d: SkewDiagram,
    pl: WPlacement,
) {
    let key = format!("{:?}|{:?}|{:?}|{:?}|{:?}", d, pl.e(), pl.w(), pl.sw_cells(), pl.ne_cells());
    if seen.insert(key) {
        let trivial = is_trivial_factorization(f, &d, &pl);
        found.push(Factorization { d, placement: pl, trivial });
    }
}

/// Upper bound for `|D|` in `F = D ∘_W E`: every cell of `D` contributes a
/// disjoint copy of the south strip of `E` (the copy minus its two `W̄`
/// overlays and its `Ō`), glued along at most `|W ∩ southstrip|` cells.
fn candidate_d_cap(f: &SkewDiagram, pl: &WPlacement) -> usize {
    let pos = positioned_overlap(pl);
    let v = pl.amalg_vector();
    let mut south: BTreeSet<Cell> = cells::translate(pl.e().cells(), (v.0, v.1));
    // middle copy of E inside the triple amalgam, minus overlap shapes
    let lower_barw = pos.barw.get(1);
    let upper_barw = pos.barw.get(2);
    let baro = &pos.baro[1];
    south.retain(|c| {
        !baro.contains(c)
            && lower_barw.is_none_or(|s| !s.contains(c))
            && upper_barw.is_none_or(|s| !s.contains(c))
    });
    let w_mid = cells::translate(pl.sw_cells(), (v.0, v.1));
    let s_w = w_mid.iter().filter(|c| south.contains(c)).count();
    let per_cell = south.len().saturating_sub(s_w);
    if per_cell == 0 {
        f.size()
    } else {
        f.size() / per_cell
    }
}
