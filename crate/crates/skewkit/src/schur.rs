//! Exact symmetric-function arithmetic in the Schur basis.
//!
//! A [`SchurPoly`] is a finitely supported integer mapping from partitions
//! to coefficients.  Since Schur functions form a basis, equality of these
//! mappings is equality of symmetric functions, which makes the sorted term
//! list a sound and complete fingerprint.  Expansions and products are driven
//! by backtracking enumeration of Littlewood-Richardson fillings: semistandard
//! fillings whose reverse reading word is a lattice word.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Partition, SkewDiagram};

/// Integer combination of Schur functions, indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    partition: Vec<u32>,
    coeff: i64,
}

impl SchurPoly {
    pub fn zero() -> Self {
        SchurPoly::default()
    }

    /// The unit `s_∅ = 1`.
    pub fn one() -> Self {
        SchurPoly::single(Partition::empty(), 1)
    }

    pub fn single(p: Partition, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(p, coeff);
        }
        SchurPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(p);
        match e {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let n = o.get() + coeff;
                if n == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = n;
                }
            }
        }
    }

    /// Applies the involution sending each `s_λ` to `s_{λ'}`.
    pub fn omega(&self) -> SchurPoly {
        let terms = self.terms.iter().map(|(p, &c)| (p.conjugate(), c)).collect();
        SchurPoly { terms }
    }

    pub fn pow(&self, n: usize) -> SchurPoly {
        let mut acc = SchurPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Byte-deterministic serialized form: terms sorted lexicographically by
    /// partition.  Used as the classification fingerprint.
    pub fn fingerprint(&self) -> String {
        serde_json::to_string(&self.to_dto()).expect("serialization cannot fail")
    }

    fn to_dto(&self) -> Vec<TermDto> {
        self.terms
            .iter()
            .map(|(p, &c)| TermDto { partition: p.parts().to_vec(), coeff: c })
            .collect()
    }
}

impl Serialize for SchurPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_dto().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let dto = Vec::<TermDto>::deserialize(d)?;
        let mut out = SchurPoly::zero();
        for t in dto {
            let p = Partition::from_trimmed(t.partition).map_err(serde::de::Error::custom)?;
            out.add_term(p, t.coeff);
        }
        Ok(out)
    }
}

impl Add for SchurPoly {
    type Output = SchurPoly;
    fn add(mut self, rhs: SchurPoly) -> SchurPoly {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Sub for SchurPoly {
    type Output = SchurPoly;
    fn sub(mut self, rhs: SchurPoly) -> SchurPoly {
        for (p, c) in rhs.terms {
            self.add_term(p, -c);
        }
        self
    }
}

impl Neg for SchurPoly {
    type Output = SchurPoly;
    fn neg(mut self) -> SchurPoly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul for SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: SchurPoly) -> SchurPoly {
        &self * &rhs
    }
}

impl Mul for &SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for (mu, a) in self.terms() {
            for (nu, b) in rhs.terms() {
                let prod = lr_mult(mu, nu);
                for (la, c) in prod.terms() {
                    out.add_term(la.clone(), a * b * c);
                }
            }
        }
        out
    }
}

impl Zero for SchurPoly {
    fn zero() -> Self {
        SchurPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl One for SchurPoly {
    fn one() -> Self {
        SchurPoly::one()
    }
}

/// Bilinear product `f · g` in the Schur basis.
pub fn multiply(f: &SchurPoly, g: &SchurPoly) -> SchurPoly {
    f * g
}

/// `ω(f)`: conjugates every indexing partition.
pub fn omega(f: &SchurPoly) -> SchurPoly {
    f.omega()
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson enumeration on a skew shape.
// ---------------------------------------------------------------------------

struct ShapeCells {
    // reverse reading order: rows north to south, right to left inside a row
    order: Vec<(usize, i32)>,
    north: Vec<Option<usize>>,
    east: Vec<Option<usize>>,
}

fn shape_cells(d: &SkewDiagram) -> ShapeCells {
    let mut order: Vec<(usize, i32)> = d.cells().iter().map(|&(r, c)| (r as usize, c)).collect();
    order.sort_by_key(|&(r, c)| (r, -c));
    let index: BTreeMap<(usize, i32), usize> =
        order.iter().enumerate().map(|(k, &rc)| (rc, k)).collect();
    let north = order
        .iter()
        .map(|&(r, c)| (r > 0).then(|| index.get(&(r - 1, c)).copied()).flatten())
        .collect();
    let east = order.iter().map(|&(r, c)| index.get(&(r, c + 1)).copied()).collect();
    ShapeCells { order, north, east }
}

struct LrEnum<'a> {
    cells: &'a ShapeCells,
    entries: Vec<u8>,
    counts: Vec<u32>,
    target: Option<&'a [u32]>, // content bound, 0-based by entry-1
    found: u64,
    // keyed by the trimmed count vector; avoids allocating on repeat leaves
    acc: Option<std::collections::HashMap<Vec<u32>, i64>>,
}

impl LrEnum<'_> {
    fn run(&mut self, k: usize) {
        if k == self.cells.order.len() {
            self.found += 1;
            if let Some(acc) = &mut self.acc {
                let mut end = self.counts.len();
                while end > 1 && self.counts[end - 1] == 0 {
                    end -= 1;
                }
                let key = &self.counts[1..end];
                match acc.get_mut(key) {
                    Some(c) => *c += 1,
                    None => {
                        acc.insert(key.to_vec(), 1);
                    }
                }
            }
            return;
        }
        let row = self.cells.order[k].0;
        let lo = match self.cells.north[k] {
            Some(n) => self.entries[n] + 1,
            None => 1,
        };
        let mut hi = match self.cells.east[k] {
            Some(e) => self.entries[e],
            None => (row + 1).min(u8::MAX as usize) as u8,
        };
        if let Some(t) = self.target {
            hi = hi.min(t.len() as u8);
        }
        for e in lo..=hi {
            let e_us = e as usize;
            // lattice word: prefix must keep count(e-1) >= count(e)
            if e > 1 && self.counts[e_us - 1] <= self.counts[e_us] {
                continue;
            }
            if let Some(t) = self.target {
                if self.counts[e_us] >= t[e_us - 1] {
                    continue;
                }
            }
            self.counts[e_us] += 1;
            self.entries[k] = e;
            self.run(k + 1);
            self.counts[e_us] -= 1;
        }
    }
}

/// Expansion of the skew Schur function of `d` in the Schur basis.  Small
/// shapes are expanded by direct enumeration of Littlewood-Richardson
/// fillings; past [`DIRECT_ENUM_MAX_CELLS`] the number of fillings can dwarf
/// the size of the answer, so larger shapes go through the Jacobi-Trudi
/// determinant over the shorter axis instead.  Works for disconnected
/// shapes; the empty diagram gives the unit.
pub fn skew_schur(d: &SkewDiagram) -> SchurPoly {
    if d.is_empty() {
        return SchurPoly::one();
    }
    if let Some(hit) = schur_cache().get(d) {
        return (*hit.value()).as_ref().clone();
    }
    let out = if d.size() <= DIRECT_ENUM_MAX_CELLS {
        skew_schur_enumerated(d)
    } else {
        skew_schur_jacobi_trudi(d)
    };
    if d.size() <= SCHUR_CACHE_MAX_CELLS {
        schur_cache().insert(d.clone(), Arc::new(out.clone()));
    }
    out
}

/// Direct enumeration of Littlewood-Richardson fillings.
pub fn skew_schur_enumerated(d: &SkewDiagram) -> SchurPoly {
    if d.is_empty() {
        return SchurPoly::one();
    }
    let cells = shape_cells(d);
    let n = cells.order.len();
    let mut st = LrEnum {
        cells: &cells,
        entries: vec![0; n],
        counts: vec![0; n + 2],
        target: None,
        found: 0,
        acc: Some(std::collections::HashMap::new()),
    };
    st.run(0);
    let terms: BTreeMap<Partition, i64> = st
        .acc
        .unwrap()
        .into_iter()
        .map(|(parts, c)| {
            (Partition::from_trimmed(parts).expect("lattice word content is a partition"), c)
        })
        .collect();
    SchurPoly { terms }
}

/// The classical determinant in complete homogeneous functions, evaluated by
/// cofactor expansion with memoized minors and Pieri multiplications.  The
/// diagram is transposed first when it has fewer columns than rows, so the
/// matrix dimension never exceeds min(rows, cols).
pub fn skew_schur_jacobi_trudi(d: &SkewDiagram) -> SchurPoly {
    if d.is_empty() {
        return SchurPoly::one();
    }
    if d.cols() < d.rows() {
        return jt_determinant(&d.transpose()).omega();
    }
    jt_determinant(d)
}

fn jt_determinant(d: &SkewDiagram) -> SchurPoly {
    let (la, mu) = d.lambda_mu();
    let r = la.len();
    assert!(r <= 64, "Jacobi-Trudi expansion limited to 64 rows");
    let full: u64 = if r == 64 { u64::MAX } else { (1 << r) - 1 };
    let mut memo: std::collections::HashMap<u64, SchurPoly> = std::collections::HashMap::new();
    fn go(
        la: &Partition,
        mu: &Partition,
        row: usize,
        mask: u64,
        memo: &mut std::collections::HashMap<u64, SchurPoly>,
    ) -> SchurPoly {
        if row == la.len() {
            return SchurPoly::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = SchurPoly::zero();
        let mut pos = 0u32;
        for col in 0..la.len() {
            let bit = 1u64 << col;
            if mask & bit == 0 {
                continue;
            }
            let e = la.part(row) as i64 - mu.part(col) as i64 - row as i64 + col as i64;
            if e >= 0 {
                let sub = go(la, mu, row + 1, mask & !bit, memo);
                let term = pieri_mult(&sub, e as u32);
                acc = if pos % 2 == 0 { acc + term } else { acc - term };
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    go(&la, &mu, 0, full, &mut memo)
}

/// `f · h_k` by the Pieri rule: each term grows by a horizontal `k`-strip.
pub fn pieri_mult(f: &SchurPoly, k: u32) -> SchurPoly {
    if k == 0 {
        return f.clone();
    }
    let mut out = SchurPoly::zero();
    let mut scratch: Vec<u32> = Vec::new();
    for (mu, c) in f.terms() {
        scratch.clear();
        add_horizontal_strips(mu.parts(), 0, k, &mut scratch, &mut |parts| {
            out.add_term(
                Partition::from_trimmed(parts.to_vec()).expect("strip keeps partition shape"),
                c,
            );
        });
    }
    out
}

fn add_horizontal_strips(
    mu: &[u32],
    i: usize,
    remaining: u32,
    cur: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if i == mu.len() {
        // optional final row below mu
        if remaining == 0 {
            emit(cur);
        } else if mu.is_empty() || remaining <= mu[mu.len() - 1] {
            cur.push(remaining);
            emit(cur);
            cur.pop();
        }
        return;
    }
    // row i grows from mu[i] up to the previous row's old length
    let cap = if i == 0 { remaining } else { mu[i - 1] - mu[i] };
    for take in 0..=cap.min(remaining) {
        cur.push(mu[i] + take);
        add_horizontal_strips(mu, i + 1, remaining - take, cur, emit);
        cur.pop();
    }
}

/// Small shapes are enumerated directly; see [`skew_schur`].
pub const DIRECT_ENUM_MAX_CELLS: usize = 16;

const SCHUR_CACHE_MAX_CELLS: usize = 40;

fn schur_cache() -> &'static DashMap<SkewDiagram, Arc<SchurPoly>> {
    static CACHE: OnceLock<DashMap<SkewDiagram, Arc<SchurPoly>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// The Littlewood-Richardson coefficient `c^λ_{μν}`: the number of lattice
/// semistandard fillings of `λ/μ` with content `ν`.  Returns 0 whenever
/// `μ ⊄ λ` or the sizes do not match.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !mu.contained_in(lambda) || mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let d = SkewDiagram::from_parts(lambda, mu).expect("containment checked");
    // canonical compression does not change the filling count
    let cells = shape_cells(&d);
    let n = cells.order.len();
    let mut st = LrEnum {
        cells: &cells,
        entries: vec![0; n],
        counts: vec![0; n + 2],
        target: Some(nu.parts()),
        found: 0,
        acc: None,
    };
    st.run(0);
    st.found
}

// ---------------------------------------------------------------------------
// Products: growth enumeration of s_mu * s_nu.
// ---------------------------------------------------------------------------

struct GrowthState<'a> {
    nu: &'a Partition,
    rows: usize,
    cur: Vec<u32>,
    /// `pre[v]`: the row profile before value `v` was placed.
    pre: Vec<Vec<u32>>,
    /// `cum[v][i]`: number of cells of value `v` in rows `0..=i`.
    cum: Vec<Vec<u32>>,
    acc: std::collections::HashMap<Vec<u32>, i64>,
}

impl GrowthState<'_> {
    fn next_value(&mut self, v: usize) {
        if v > self.nu.len() {
            let mut end = self.rows;
            while end > 0 && self.cur[end - 1] == 0 {
                end -= 1;
            }
            let key = &self.cur[..end];
            match self.acc.get_mut(key) {
                Some(c) => *c += 1,
                None => {
                    self.acc.insert(key.to_vec(), 1);
                }
            }
            return;
        }
        let need = self.nu.part(v - 1);
        self.pre[v].copy_from_slice(&self.cur);
        self.place_rows(v, 0, need, 0);
    }

    fn place_rows(&mut self, v: usize, i: usize, remaining: u32, placed: u32) {
        if remaining == 0 {
            for j in i..self.rows {
                let prev = if j == 0 { 0 } else { self.cum[v][j - 1] };
                self.cum[v][j] = prev;
            }
            self.next_value(v + 1);
            return;
        }
        if i == self.rows {
            return;
        }
        // horizontal strip: cells of value v in row i sit strictly west of the
        // previous profile of row i-1 (so the cell above each one is older)
        let cap_shape = if i == 0 {
            remaining
        } else {
            self.pre[v][i - 1].saturating_sub(self.cur[i])
        };
        // lattice word: v's in rows <= i never outnumber (v-1)'s in rows <= i-1
        let cap_lattice = if v == 1 {
            remaining
        } else if i == 0 {
            0
        } else {
            self.cum[v - 1][i - 1].saturating_sub(placed)
        };
        let max_take = remaining.min(cap_shape).min(cap_lattice);
        for take in (0..=max_take).rev() {
            self.cur[i] += take;
            self.cum[v][i] = placed + take;
            self.place_rows(v, i + 1, remaining - take, placed + take);
            self.cur[i] -= take;
        }
    }
}

fn lr_mult_raw(mu: &Partition, nu: &Partition) -> SchurPoly {
    // place the smaller partition onto the bigger one
    let (mu, nu) = if nu.size() > mu.size() { (nu, mu) } else { (mu, nu) };
    if nu.is_empty() {
        return SchurPoly::single(mu.clone(), 1);
    }
    let rows = mu.len() + nu.len();
    let values = nu.len() + 2;
    let mut st = GrowthState {
        nu,
        rows,
        cur: (0..rows).map(|i| mu.part(i)).collect(),
        pre: vec![vec![0; rows]; values],
        cum: vec![vec![0; rows]; values],
        acc: std::collections::HashMap::new(),
    };
    st.next_value(1);
    let terms: BTreeMap<Partition, i64> = st
        .acc
        .into_iter()
        .map(|(parts, c)| {
            (Partition::from_trimmed(parts).expect("growth keeps partition shape"), c)
        })
        .collect();
    SchurPoly { terms }
}

const LR_CACHE_MAX_CELLS: u32 = 22;

type PairKey = (Partition, Partition);

fn lr_cache() -> &'static DashMap<PairKey, Arc<SchurPoly>> {
    static CACHE: OnceLock<DashMap<PairKey, Arc<SchurPoly>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Expansion of `s_mu · s_nu`, cached on the unordered pair.
pub fn lr_mult(mu: &Partition, nu: &Partition) -> Arc<SchurPoly> {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(hit) = lr_cache().get(&key) {
        return hit.value().clone();
    }
    let out = Arc::new(lr_mult_raw(mu, nu));
    if mu.size() + nu.size() <= LR_CACHE_MAX_CELLS {
        lr_cache().insert(key, out.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Monomial oracle: truncation to finitely many variables.
// ---------------------------------------------------------------------------

/// A dense multivariate polynomial keyed by exponent vectors of a fixed
/// length.  Test oracle only; exponentially larger than the Schur form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialPoly {
    pub nvars: usize,
    pub coeffs: BTreeMap<Vec<u16>, i64>,
}

/// Truncation of `s_D` to `nvars` variables by direct enumeration of
/// semistandard fillings with entries at most `nvars`.
pub fn monomial_oracle(d: &SkewDiagram, nvars: usize) -> MonomialPoly {
    if d.is_empty() {
        let mut out = MonomialPoly { nvars, coeffs: BTreeMap::new() };
        out.coeffs.insert(vec![0; nvars], 1);
        return out;
    }
    let cells = shape_cells(d);
    let n = cells.order.len();
    let mut entries = vec![0u8; n];
    let mut expt = vec![0u16; nvars];
    let mut acc: std::collections::HashMap<Vec<u16>, i64> = Default::default();
    fn rec(
        cells: &ShapeCells,
        k: usize,
        nvars: usize,
        entries: &mut Vec<u8>,
        expt: &mut Vec<u16>,
        out: &mut std::collections::HashMap<Vec<u16>, i64>,
    ) {
        if k == cells.order.len() {
            match out.get_mut(expt.as_slice()) {
                Some(c) => *c += 1,
                None => {
                    out.insert(expt.clone(), 1);
                }
            }
            return;
        }
        let lo = match cells.north[k] {
            Some(n) => entries[n] + 1,
            None => 1,
        };
        let hi = match cells.east[k] {
            Some(e) => entries[e],
            None => nvars as u8,
        };
        for e in lo..=hi {
            entries[k] = e;
            expt[e as usize - 1] += 1;
            rec(cells, k + 1, nvars, entries, expt, out);
            expt[e as usize - 1] -= 1;
        }
    }
    rec(&cells, 0, nvars, &mut entries, &mut expt, &mut acc);
    MonomialPoly { nvars, coeffs: acc.into_iter().collect() }
}

/// Evaluates a Schur-basis element in `nvars` variables, term by term, via
/// tableau enumeration of straight shapes.  Independent route used to check
/// [`monomial_oracle`] against [`skew_schur`].
pub fn eval_in_vars(f: &SchurPoly, nvars: usize) -> MonomialPoly {
    let mut out = MonomialPoly { nvars, coeffs: BTreeMap::new() };
    for (la, c) in f.terms() {
        let mono = straight_monomials(la, nvars);
        for (e, m) in mono.coeffs.iter() {
            *out.coeffs.entry(e.clone()).or_insert(0) += c * m;
        }
    }
    out.coeffs.retain(|_, v| *v != 0);
    out
}

fn straight_monomials(la: &Partition, nvars: usize) -> Arc<MonomialPoly> {
    static CACHE: OnceLock<DashMap<(Partition, usize), Arc<MonomialPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&(la.clone(), nvars)) {
        return hit.value().clone();
    }
    let d = SkewDiagram::from_parts(la, &Partition::empty()).expect("straight shape");
    let out = Arc::new(monomial_oracle(&d, nvars));
    cache.insert((la.clone(), nvars), out.clone());
    out
}

// ---------------------------------------------------------------------------
// Determinants over a commutative ring.
// ---------------------------------------------------------------------------

/// Exact determinant by cofactor expansion with memoized minors.  The matrix
/// may contain zero entries standing in for undefined strips.
pub fn det<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return T::one();
    }
    assert!(n <= 64, "cofactor expansion limited to 64x64");
    let mut memo: std::collections::HashMap<u64, T> = std::collections::HashMap::new();
    fn go<T>(
        m: &[Vec<T>],
        row: usize,
        mask: u64,
        memo: &mut std::collections::HashMap<u64, T>,
    ) -> T
    where
        T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
    {
        if row == m.len() {
            return T::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = T::zero();
        let mut pos = 0u32;
        for col in 0..m.len() {
            let bit = 1u64 << col;
            if mask & bit == 0 {
                continue;
            }
            if !m[row][col].is_zero() {
                let sub = go(m, row + 1, mask & !bit, memo);
                let term = m[row][col].clone() * sub;
                acc = if pos % 2 == 0 { acc + term } else { acc - term };
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(m, 0, full, &mut memo)
}

/// Determinant of a matrix of Schur-basis elements.
pub fn det_schur(m: &[Vec<SchurPoly>]) -> SchurPoly {
    det(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_trimmed(parts.to_vec()).unwrap()
    }

    fn d(lambda: &[u32], mu: &[u32]) -> SkewDiagram {
        SkewDiagram::new(lambda, mu).unwrap()
    }

    #[test]
    fn lr_basics() {
        for la in [p(&[3, 1]), p(&[2, 2, 1]), p(&[4])] {
            assert_eq!(lr_coefficient(&la, &Partition::empty(), &la), 1);
        }
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[3]), &p(&[1])), 0);
    }

    #[test]
    fn skew_schur_examples() {
        let f = skew_schur(&d(&[2, 2], &[1]));
        assert_eq!(f, SchurPoly::single(p(&[2, 1]), 1));
        // straight shapes have a single term
        assert_eq!(skew_schur(&d(&[3, 1], &[])), SchurPoly::single(p(&[3, 1]), 1));
        // the eight-cell equivalent pair
        assert_eq!(
            skew_schur(&d(&[4, 3, 2, 1], &[2])),
            skew_schur(&d(&[4, 3, 2, 1], &[1, 1]))
        );
        assert!(skew_schur(&d(&[4, 3, 2, 1], &[2])).terms().all(|(_, c)| c > 0));
    }

    #[test]
    fn homogeneous_support() {
        let sh = d(&[4, 3, 1], &[2]);
        let f = skew_schur(&sh);
        assert!(f.terms().all(|(la, _)| la.size() as usize == sh.size()));
    }

    #[test]
    fn products() {
        let s1 = SchurPoly::single(p(&[1]), 1);
        let sq = &s1 * &s1;
        let mut expect = SchurPoly::zero();
        expect.add_term(p(&[2]), 1);
        expect.add_term(p(&[1, 1]), 1);
        assert_eq!(sq, expect);
        // unit
        let f = skew_schur(&d(&[3, 2], &[1]));
        assert_eq!(&SchurPoly::one() * &f, f);
        // known square: s_21^2
        let s21 = SchurPoly::single(p(&[2, 1]), 1);
        let sq = &s21 * &s21;
        assert_eq!(sq.coeff(&p(&[3, 2, 1])), 2);
        assert_eq!(sq.coeff(&p(&[4, 2])), 1);
        assert_eq!(sq.coeff(&p(&[2, 2, 1, 1])), 1);
    }

    #[test]
    fn product_matches_disjoint_union() {
        // multiply(s_A, s_B) equals the expansion of the two shapes placed
        // far apart in a single diagram
        let a = d(&[2, 1], &[]);
        let b = d(&[2, 2], &[1]);
        let mut cells: Vec<_> = a.cells().iter().copied().collect();
        let shift_r = -(b.rows() as i32) - 1;
        let shift_c = a.cells().iter().map(|c| c.1).max().unwrap() + 2;
        cells.extend(b.cells().iter().map(|&(r, c)| (r + shift_r, c + shift_c)));
        let ab = SkewDiagram::from_cells(cells).unwrap();
        assert!(!ab.is_connected());
        assert_eq!(skew_schur(&ab), &skew_schur(&a) * &skew_schur(&b));
    }

    #[test]
    fn omega_involution() {
        let f = skew_schur(&d(&[3, 2, 1], &[1]));
        assert_eq!(f.omega().omega(), f);
        assert_eq!(
            SchurPoly::single(p(&[2]), 1).omega(),
            SchurPoly::single(p(&[1, 1]), 1)
        );
    }

    #[test]
    fn omega_is_transpose_on_diagrams() {
        for sh in [d(&[3, 2], &[1]), d(&[4, 3, 2, 1], &[2]), d(&[2, 2, 2], &[1])] {
            assert_eq!(skew_schur(&sh).omega(), skew_schur(&sh.transpose()));
        }
    }

    #[test]
    fn monomial_oracle_small() {
        let one_cell = monomial_oracle(&d(&[1], &[]), 3);
        assert_eq!(one_cell.coeffs.len(), 3);
        assert!(one_cell.coeffs.values().all(|&c| c == 1));
        let m = monomial_oracle(&d(&[2, 2], &[1]), 2);
        let mut expect = BTreeMap::new();
        expect.insert(vec![2u16, 1u16], 1i64);
        expect.insert(vec![1u16, 2u16], 1i64);
        assert_eq!(m.coeffs, expect);
    }

    #[test]
    fn oracle_agrees_with_expansion() {
        for sh in [d(&[3, 2], &[1]), d(&[2, 2, 1], &[1]), d(&[4, 1], &[2])] {
            let n = sh.size();
            assert_eq!(monomial_oracle(&sh, n), eval_in_vars(&skew_schur(&sh), n));
        }
    }

    #[test]
    fn adjointness_spot_check() {
        let la = p(&[3, 2, 1]);
        let mu = p(&[2, 1]);
        let f = skew_schur(&SkewDiagram::from_parts(&la, &mu).unwrap());
        for nu in Partition::all(3) {
            let prod = lr_mult(&mu, &nu);
            assert_eq!(f.coeff(&nu), prod.coeff(&la));
        }
    }

    #[test]
    fn jacobi_trudi_route_matches_enumeration() {
        // exhaustively around and past the switch-over size
        for n in [7, 11] {
            for sh in crate::classify::enumerate_connected(n).unwrap() {
                assert_eq!(
                    skew_schur_jacobi_trudi(&sh),
                    skew_schur_enumerated(&sh),
                    "routes disagree on {sh:?}"
                );
            }
        }
        // a disconnected shape
        let sh = d(&[4, 1], &[2]);
        assert_eq!(skew_schur_jacobi_trudi(&sh), skew_schur_enumerated(&sh));
        // a taller-than-wide shape exercises the transposed branch
        let tall = d(&[2, 2, 1, 1, 1], &[1]);
        assert!(tall.rows() > tall.cols());
        assert_eq!(skew_schur_jacobi_trudi(&tall), skew_schur_enumerated(&tall));
    }

    #[test]
    fn pieri_rule() {
        let f = SchurPoly::single(p(&[2, 1]), 1);
        let g = pieri_mult(&f, 2);
        let expect = &f * &SchurPoly::single(p(&[2]), 1);
        assert_eq!(g, expect);
        assert_eq!(pieri_mult(&f, 0), f);
    }

    #[test]
    fn determinants() {
        let f = skew_schur(&d(&[2, 1], &[]));
        assert_eq!(det_schur(&[vec![f.clone()]]), f);
        let zero_row = vec![
            vec![SchurPoly::zero(), SchurPoly::zero()],
            vec![SchurPoly::one(), f],
        ];
        assert_eq!(det_schur(&zero_row), SchurPoly::zero());
        let m: Vec<Vec<i128>> = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(det(&m), -2);
    }
}
