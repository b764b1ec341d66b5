//! Partitions, skew diagrams and ribbons in canonical form.
//!
//! A skew diagram is stored as its set of occupied `(row, col)` cells with
//! rows increasing southward, translated and compressed so that no row or
//! column of the bounding region is empty.  Two diagrams that differ by
//! translation or by insertion of empty rows/columns therefore compare equal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell position `(row, col)`; row grows southward, col eastward.
pub type Cell = (i32, i32);

/// Content (diagonal index) of a cell: `col - row`.
pub fn content(c: Cell) -> i32 {
    c.1 - c.0
}

/// A partition: weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let desc = parts.windows(2).all(|w| w[0] >= w[1]);
        if !desc || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Builds from a weakly decreasing list that may carry trailing zeros.
    pub fn from_trimmed(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().enumerate().all(|(i, &p)| p <= other.parts[i])
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = max.min(n);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All sub-partitions `mu ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(lambda: &[u32], i: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lambda.len() {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                if parts.iter().all(|&p| p > 0) {
                    out.push(Partition { parts });
                }
                return;
            }
            for p in 0..=lambda[i].min(prev) {
                cur.push(p);
                rec(lambda, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::from_trimmed(parts).map_err(D::Error::custom)
    }
}

/// Positioned cell-set helpers shared across the crate.  These work on raw
/// `BTreeSet<Cell>` values that are *not* required to be in canonical form.
pub(crate) mod cells {
    use super::*;

    pub fn translate(set: &BTreeSet<Cell>, d: Cell) -> BTreeSet<Cell> {
        set.iter().map(|&(r, c)| (r + d.0, c + d.1)).collect()
    }

    /// Removes empty rows and columns, reindexing ranks to 0..n.
    pub fn compress(set: &BTreeSet<Cell>) -> BTreeSet<Cell> {
        if set.is_empty() {
            return BTreeSet::new();
        }
        let rows: BTreeSet<i32> = set.iter().map(|c| c.0).collect();
        let cols: BTreeSet<i32> = set.iter().map(|c| c.1).collect();
        let rmap: BTreeMap<i32, i32> =
            rows.iter().enumerate().map(|(i, &r)| (r, i as i32)).collect();
        let cmap: BTreeMap<i32, i32> =
            cols.iter().enumerate().map(|(i, &c)| (c, i as i32)).collect();
        set.iter().map(|&(r, c)| (rmap[&r], cmap[&c])).collect()
    }

    /// Row intervals `(row, min_col, max_col)` for the occupied rows, in order.
    pub fn row_intervals(set: &BTreeSet<Cell>) -> Vec<(i32, i32, i32)> {
        let mut out: Vec<(i32, i32, i32)> = Vec::new();
        for &(r, c) in set {
            match out.last_mut() {
                Some(last) if last.0 == r => {
                    last.1 = last.1.min(c);
                    last.2 = last.2.max(c);
                }
                _ => out.push((r, c, c)),
            }
        }
        out
    }

    /// True iff the set is a skew shape: every occupied row is a contiguous
    /// interval and both interval endpoints weakly decrease going south
    /// (over the occupied rows; empty rows in between are tolerated since
    /// they disappear under compression).
    pub fn is_skew(set: &BTreeSet<Cell>) -> bool {
        let ivs = row_intervals(set);
        for &(r, lo, hi) in &ivs {
            for c in lo..=hi {
                if !set.contains(&(r, c)) {
                    return false;
                }
            }
        }
        ivs.windows(2)
            .all(|w| w[1].1 <= w[0].1 && w[1].2 <= w[0].2)
    }

    pub fn is_connected(set: &BTreeSet<Cell>) -> bool {
        let Some(&start) = set.iter().next() else { return true };
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some((r, c)) = queue.pop_front() {
            for n in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
                if set.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn components(set: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
        let mut rest = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = rest.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            rest.remove(&start);
            comp.insert(start);
            while let Some((r, c)) = queue.pop_front() {
                for n in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
                    if rest.remove(&n) {
                        comp.insert(n);
                        queue.push_back(n);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Cells `x` of the set with `x + (1,1)` not in the set.
    pub fn se_border(set: &BTreeSet<Cell>) -> BTreeSet<Cell> {
        set.iter()
            .filter(|&&(r, c)| !set.contains(&(r + 1, c + 1)))
            .copied()
            .collect()
    }

    /// Cells `x` of the set with `x - (1,1)` not in the set.
    pub fn nw_border(set: &BTreeSet<Cell>) -> BTreeSet<Cell> {
        set.iter()
            .filter(|&&(r, c)| !set.contains(&(r - 1, c - 1)))
            .copied()
            .collect()
    }

    /// Southwesternmost cell: lowest row, then leftmost column.
    pub fn sw_cell(set: &BTreeSet<Cell>) -> Option<Cell> {
        set.iter().max_by_key(|&&(r, c)| (r, -c)).copied()
    }

    /// Northeasternmost cell: highest row, then rightmost column.
    pub fn ne_cell(set: &BTreeSet<Cell>) -> Option<Cell> {
        set.iter().min_by_key(|&&(r, c)| (r, -c)).copied()
    }

    /// Distinct contents occupied by the set.
    pub fn diagonals(set: &BTreeSet<Cell>) -> BTreeSet<i32> {
        set.iter().map(|&c| content(c)).collect()
    }

    /// True iff the two disjoint sets have a pair of edge-adjacent cells.
    /// Overlapping sets are not adjacent in this sense.
    pub fn adjacent(a: &BTreeSet<Cell>, b: &BTreeSet<Cell>) -> bool {
        if a.iter().any(|c| b.contains(c)) {
            return false;
        }
        a.iter().any(|&(r, c)| {
            [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)]
                .iter()
                .any(|n| b.contains(n))
        })
    }
}

/// A skew diagram in canonical position.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SkewDiagram {
    cells: BTreeSet<Cell>,
}

impl SkewDiagram {
    /// The empty diagram.
    pub fn empty() -> Self {
        SkewDiagram { cells: BTreeSet::new() }
    }

    /// Canonicalizes an arbitrary positioned cell set and validates that it
    /// forms a skew shape.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(iter: I) -> Result<Self> {
        let raw: BTreeSet<Cell> = iter.into_iter().collect();
        let cells = cells::compress(&raw);
        if !cells::is_skew(&cells) {
            return Err(Error::NotSkew(format!("{:?}", cells)));
        }
        Ok(SkewDiagram { cells })
    }

    /// Like [`SkewDiagram::from_cells`], but requires the cells to form a
    /// skew shape *in place*: a positioned construction may not lean on the
    /// removal of empty columns to repair a gap inside a row.
    pub fn from_positioned(raw: &BTreeSet<Cell>) -> Result<Self> {
        if !cells::is_skew(raw) {
            return Err(Error::NotSkew(format!("{:?}", raw)));
        }
        SkewDiagram::from_cells(raw.iter().copied())
    }

    /// The diagram `lambda/mu`.
    pub fn from_parts(lambda: &Partition, mu: &Partition) -> Result<Self> {
        if !mu.contained_in(lambda) {
            return Err(Error::Containment {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
            });
        }
        let mut cells = BTreeSet::new();
        for i in 0..lambda.len() {
            for j in mu.part(i)..lambda.part(i) {
                cells.insert((i as i32, j as i32));
            }
        }
        SkewDiagram::from_cells(cells)
    }

    /// Convenience constructor from raw part lists.
    pub fn new(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        let la = Partition::from_trimmed(lambda.to_vec())?;
        let mu = Partition::from_trimmed(mu.to_vec())?;
        SkewDiagram::from_parts(&la, &mu)
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of occupied rows.
    pub fn rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len()
    }

    /// Number of occupied columns.
    pub fn cols(&self) -> usize {
        self.cells.iter().map(|c| c.1).collect::<BTreeSet<_>>().len()
    }

    /// Recovers `(lambda, mu)` with `lambda_1` and `len(lambda)` minimal.
    pub fn lambda_mu(&self) -> (Partition, Partition) {
        let ivs = cells::row_intervals(&self.cells);
        let lambda: Vec<u32> = ivs.iter().map(|&(_, _, hi)| (hi + 1) as u32).collect();
        let mu: Vec<u32> = ivs.iter().map(|&(_, lo, _)| lo as u32).collect();
        (
            Partition::from_trimmed(lambda).expect("canonical rows give a partition"),
            Partition::from_trimmed(mu).expect("canonical rows give a partition"),
        )
    }

    /// Multiset of contents, sorted ascending.
    pub fn contents(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.cells.iter().map(|&c| content(c)).collect();
        v.sort();
        v
    }

    /// Number of distinct diagonals the diagram occupies.
    pub fn diagonal_count(&self) -> usize {
        cells::diagonals(&self.cells).len()
    }

    pub fn is_connected(&self) -> bool {
        cells::is_connected(&self.cells)
    }

    /// Connected and free of 2x2 blocks.
    pub fn is_ribbon(&self) -> bool {
        if self.cells.is_empty() || !self.is_connected() {
            return false;
        }
        !self.cells.iter().any(|&(r, c)| {
            self.cells.contains(&(r, c + 1))
                && self.cells.contains(&(r + 1, c))
                && self.cells.contains(&(r + 1, c + 1))
        })
    }

    pub fn transpose(&self) -> SkewDiagram {
        SkewDiagram::from_cells(self.cells.iter().map(|&(r, c)| (c, r)))
            .expect("transpose of a skew shape is a skew shape")
    }

    /// Antipodal rotation by 180 degrees.
    pub fn rotate180(&self) -> SkewDiagram {
        SkewDiagram::from_cells(self.cells.iter().map(|&(r, c)| (-r, -c)))
            .expect("rotation of a skew shape is a skew shape")
    }

    /// The ribbon tracing the northwest border, from the southwesternmost to
    /// the northeasternmost cell.
    pub fn nw_ribbon(&self) -> Result<Ribbon> {
        self.border_ribbon(true)
    }

    /// The ribbon tracing the southeast border.
    pub fn se_ribbon(&self) -> Result<Ribbon> {
        self.border_ribbon(false)
    }

    fn border_ribbon(&self, nw: bool) -> Result<Ribbon> {
        if self.cells.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let border = if nw {
            cells::nw_border(&self.cells)
        } else {
            cells::se_border(&self.cells)
        };
        Ribbon::try_from(SkewDiagram::from_cells(border)?)
    }

    /// `D` minus its southeast border ribbon: the cells with a southeast
    /// neighbour in `D`.  Defined for disconnected diagrams as well.
    pub fn nw_body(&self) -> SkewDiagram {
        let inner: Vec<Cell> = self
            .cells
            .iter()
            .filter(|&&(r, c)| self.cells.contains(&(r + 1, c + 1)))
            .copied()
            .collect();
        SkewDiagram::from_cells(inner).expect("nw-body of a skew shape is a skew shape")
    }

    /// Number of cells with another cell of the diagram directly south.
    pub fn up_body_size(&self) -> usize {
        self.cells
            .iter()
            .filter(|&&(r, c)| self.cells.contains(&(r + 1, c)))
            .count()
    }

    /// ASCII rendering with `×` for cells.
    pub fn ascii(&self) -> String {
        self.ascii_marked(&BTreeSet::new())
    }

    /// ASCII rendering with a `w` overlay on the marked cells.
    pub fn ascii_marked(&self, marks: &BTreeSet<Cell>) -> String {
        if self.cells.is_empty() {
            return String::from("(empty)");
        }
        let max_r = self.cells.iter().map(|c| c.0).max().unwrap();
        let max_c = self.cells.iter().map(|c| c.1).max().unwrap();
        let mut out = String::new();
        for r in 0..=max_r {
            let mut line = String::new();
            for c in 0..=max_c {
                let ch = if marks.contains(&(r, c)) {
                    'w'
                } else if self.cells.contains(&(r, c)) {
                    '×'
                } else {
                    ' '
                };
                line.push(ch);
                line.push(' ');
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (la, mu) = self.lambda_mu();
        write!(f, "{la}/{mu}")
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DiagramDto {
    Parts { lambda: Vec<u32>, #[serde(default)] mu: Vec<u32> },
    Cells { cells: Vec<Cell> },
}

impl Serialize for SkewDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (la, mu) = self.lambda_mu();
        DiagramDto::Parts { lambda: la.parts().to_vec(), mu: mu.parts().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match DiagramDto::deserialize(d)? {
            DiagramDto::Parts { lambda, mu } => {
                SkewDiagram::new(&lambda, &mu).map_err(D::Error::custom)
            }
            DiagramDto::Cells { cells } => {
                SkewDiagram::from_cells(cells).map_err(D::Error::custom)
            }
        }
    }
}

/// A connected skew diagram with no 2x2 block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ribbon(SkewDiagram);

impl Ribbon {
    pub fn diagram(&self) -> &SkewDiagram {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn into_diagram(self) -> SkewDiagram {
        self.0
    }
}

impl TryFrom<SkewDiagram> for Ribbon {
    type Error = Error;

    fn try_from(d: SkewDiagram) -> Result<Self> {
        if d.is_ribbon() {
            Ok(Ribbon(d))
        } else {
            Err(Error::NotRibbon(format!("{d:?}")))
        }
    }
}
