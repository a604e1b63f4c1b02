//! Points of the tropical torus, max-tropical hyperplane arrangements, and
//! the fine/coarse (co)type data attached to them.
//!
//! A point of the tropical torus is a class of R^d modulo the all-ones
//! vector; the canonical representative subtracts the first coordinate.
//! An arrangement is an ordered list of n apices; hyperplane i divides the
//! torus into d closed sectors, and the fine type of a point records which
//! sectors contain it.

use std::collections::BTreeSet;
use std::fmt;

use crate::rat::{self, Rat};
use crate::{Error, Result};
use num::Zero;

/// Canonical representative of a point in the tropical torus: the first
/// coordinate is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalPoint {
    coords: Vec<Rat>,
}

impl TropicalPoint {
    /// Normalizes by subtracting the first coordinate. Idempotent.
    pub fn new(raw: Vec<Rat>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyCoordinates);
        }
        let base = raw[0].clone();
        let coords = raw.into_iter().map(|c| c - &base).collect();
        Ok(TropicalPoint { coords })
    }

    /// Point with integer coordinates.
    pub fn from_ints(raw: &[i64]) -> Result<Self> {
        Self::new(raw.iter().map(|&c| rat::rat_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &Rat {
        &self.coords[k]
    }
}

impl fmt::Display for TropicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rat::display).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An ordered arrangement of n max-tropical hyperplanes, given by their
/// apices. Order matters: row i of every type matrix refers to apex i.
///
/// The coefficient rows are kept exactly as given; apices are the same rows
/// normalized. Types and cells only see coordinate differences within a row,
/// so they are insensitive to the distinction, but the value of the defining
/// tropical polynomial is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    apices: Vec<TropicalPoint>,
    rows: Vec<Vec<Rat>>,
    d: usize,
}

impl Arrangement {
    pub fn new(apices: Vec<TropicalPoint>) -> Result<Self> {
        let d = apices.first().ok_or(Error::EmptyArrangement)?.dim();
        for a in &apices {
            if a.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: a.dim(),
                });
            }
        }
        let rows = apices.iter().map(|a| a.coords().to_vec()).collect();
        Ok(Arrangement { apices, rows, d })
    }

    /// Arrangement from coefficient rows, kept unnormalized for polynomial
    /// evaluation.
    pub fn from_coeff_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let apices = rows
            .iter()
            .map(|r| TropicalPoint::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        let mut arr = Self::new(apices)?;
        arr.rows = rows;
        Ok(arr)
    }

    /// Arrangement from rows of integer coordinates.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_coeff_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| rat::rat_int(c)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.apices.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn apex(&self, i: usize) -> &TropicalPoint {
        &self.apices[i]
    }

    pub fn apices(&self) -> &[TropicalPoint] {
        &self.apices
    }

    /// Coefficient of hyperplane i in coordinate k, as given on input.
    pub fn coeff(&self, i: usize, k: usize) -> &Rat {
        &self.rows[i][k]
    }

    pub fn coeff_rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    fn check_point(&self, p: &TropicalPoint) -> Result<()> {
        if p.dim() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: p.dim(),
            });
        }
        Ok(())
    }
}

/// Which of the two dual conventions an operation uses. Arrangements are
/// max-oriented; the min variant appears in reciprocity statements and in
/// the bounded subcomplex (a min-tropical polytope).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Min,
    Max,
}

/// Dense n×d matrix over {0,1}, stored as a flat bitset. Used for fine
/// types, fine cotypes, and vertex sets of dual cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeMatrix {
    n: usize,
    d: usize,
    words: Vec<u64>,
}

impl TypeMatrix {
    pub fn zeros(n: usize, d: usize) -> Self {
        let bits = n * d;
        TypeMatrix {
            n,
            d,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    /// Builds a matrix from per-row sector sets (0-based column indices).
    pub fn from_rows(n: usize, d: usize, rows: &[Vec<usize>]) -> Self {
        let mut m = Self::zeros(n, d);
        for (i, row) in rows.iter().enumerate() {
            for &k in row {
                m.set(i, k, true);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    fn bit(&self, i: usize, k: usize) -> usize {
        debug_assert!(i < self.n && k < self.d);
        i * self.d + k
    }

    #[inline]
    pub fn get(&self, i: usize, k: usize) -> bool {
        let b = self.bit(i, k);
        self.words[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, k: usize, value: bool) {
        let b = self.bit(i, k);
        if value {
            self.words[b / 64] |= 1 << (b % 64);
        } else {
            self.words[b / 64] &= !(1 << (b % 64));
        }
    }

    /// Column indices set in row i.
    pub fn row(&self, i: usize) -> Vec<usize> {
        (0..self.d).filter(|&k| self.get(i, k)).collect()
    }

    pub fn row_count(&self, i: usize) -> usize {
        (0..self.d).filter(|&k| self.get(i, k)).count()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Entrywise maximum (union of supports).
    pub fn union(&self, other: &TypeMatrix) -> TypeMatrix {
        debug_assert!(self.n == other.n && self.d == other.d);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        TypeMatrix {
            n: self.n,
            d: self.d,
            words,
        }
    }

    /// Entrywise minimum (intersection of supports).
    pub fn intersection(&self, other: &TypeMatrix) -> TypeMatrix {
        debug_assert!(self.n == other.n && self.d == other.d);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        TypeMatrix {
            n: self.n,
            d: self.d,
            words,
        }
    }

    /// Entrywise ≤ (support containment).
    pub fn is_subset_of(&self, other: &TypeMatrix) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Entrywise complement.
    pub fn complement(&self) -> TypeMatrix {
        let mut m = TypeMatrix {
            n: self.n,
            d: self.d,
            words: self.words.iter().map(|w| !w).collect(),
        };
        let used = self.n * self.d;
        let full_words = used / 64;
        if full_words < m.words.len() {
            m.words[full_words] &= (1u64 << (used % 64)) - 1;
        }
        m
    }

    /// Column sums.
    pub fn col_sums(&self) -> CoarseVector {
        let mut counts = vec![0u32; self.d];
        for i in 0..self.n {
            for (k, c) in counts.iter_mut().enumerate() {
                if self.get(i, k) {
                    *c += 1;
                }
            }
        }
        CoarseVector { counts }
    }

    pub fn rows_nonempty(&self) -> bool {
        (0..self.n).all(|i| self.row_count(i) > 0)
    }

    /// Set entries as (row, column) pairs in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.count_ones());
        for i in 0..self.n {
            for k in 0..self.d {
                if self.get(i, k) {
                    out.push((i, k));
                }
            }
        }
        out
    }
}

impl fmt::Display for TypeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cols: Vec<String> =
                    self.row(i).iter().map(|k| (k + 1).to_string()).collect();
                format!("{{{}}}", cols.join(","))
            })
            .collect();
        write!(f, "({})", rows.join(", "))
    }
}

/// Column-sum vector of a type matrix: entry k counts the hyperplanes whose
/// k-th sector contains the cell or point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoarseVector {
    counts: Vec<u32>,
}

impl CoarseVector {
    pub fn new(counts: Vec<u32>) -> Self {
        CoarseVector { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn d(&self) -> usize {
        self.counts.len()
    }

    pub fn sum(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// All entries ≥ 1; for a cell's coarse type this is exactly boundedness.
    pub fn all_positive(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }

    pub fn entrywise_max(&self, other: &CoarseVector) -> CoarseVector {
        CoarseVector {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Entrywise ≤.
    pub fn le(&self, other: &CoarseVector) -> bool {
        self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    /// Coordinates sorted descending: canonical representative of the orbit
    /// under coordinate permutations.
    pub fn sorted_desc(&self) -> CoarseVector {
        let mut counts = self.counts.clone();
        counts.sort_unstable_by(|a, b| b.cmp(a));
        CoarseVector { counts }
    }
}

impl fmt::Display for CoarseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// True iff p lies in the k-th closed sector of the hyperplane with the given
/// apex, max convention: a_k − p_k ≤ a_i − p_i for all i.
pub fn sector_contains(apex: &TropicalPoint, k: usize, p: &TropicalPoint) -> Result<bool> {
    sector_contains_variant(apex, k, p, Variant::Max)
}

/// Sector membership in either convention. The min convention reverses the
/// inequalities: a_k − p_k ≥ a_i − p_i for all i.
pub fn sector_contains_variant(
    apex: &TropicalPoint,
    k: usize,
    p: &TropicalPoint,
    variant: Variant,
) -> Result<bool> {
    if apex.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: apex.dim(),
            got: p.dim(),
        });
    }
    if k >= apex.dim() {
        return Err(Error::IndexOutOfRange {
            index: k,
            limit: apex.dim(),
        });
    }
    let val = |i: usize| apex.coord(i) - p.coord(i);
    let vk = val(k);
    Ok((0..apex.dim()).all(|i| match variant {
        Variant::Max => vk <= val(i),
        Variant::Min => vk >= val(i),
    }))
}

/// Fine type of p: row i lists the sectors of hyperplane i containing p,
/// i.e. the argmin set of v_{ij} − p_j over j.
pub fn fine_type(arr: &Arrangement, p: &TropicalPoint) -> Result<TypeMatrix> {
    arr.check_point(p)?;
    let mut m = TypeMatrix::zeros(arr.n(), arr.d());
    for i in 0..arr.n() {
        let v = arr.apex(i);
        let mut best: Option<Rat> = None;
        for j in 0..arr.d() {
            let val = v.coord(j) - p.coord(j);
            match &best {
                Some(b) if *b <= val => {}
                _ => best = Some(val),
            }
        }
        let best = best.expect("d >= 1");
        for j in 0..arr.d() {
            if v.coord(j) - p.coord(j) == best {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

/// Coarse type of p: column sums of the fine type.
pub fn coarse_type(arr: &Arrangement, p: &TropicalPoint) -> Result<CoarseVector> {
    Ok(fine_type(arr, p)?.col_sums())
}

/// Entrywise complement of a type matrix.
pub fn cotype(t: &TypeMatrix) -> TypeMatrix {
    t.complement()
}

/// Column sums of the complement: n·(1,…,1) minus the coarse type.
pub fn coarse_cotype(t: &TypeMatrix) -> CoarseVector {
    t.complement().col_sums()
}

/// True iff p lies on hyperplane i, i.e. the per-hyperplane minimum is
/// attained at least twice.
pub fn on_hyperplane(arr: &Arrangement, i: usize, p: &TropicalPoint) -> Result<bool> {
    arr.check_point(p)?;
    if i >= arr.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: arr.n(),
        });
    }
    Ok(fine_type(arr, p)?.row_count(i) >= 2)
}

/// A point is generic for the arrangement iff every per-hyperplane argmin is
/// a singleton (it lies on no hyperplane).
pub fn point_is_generic(arr: &Arrangement, p: &TropicalPoint) -> Result<bool> {
    let t = fine_type(arr, p)?;
    Ok((0..arr.n()).all(|i| t.row_count(i) == 1))
}

/// The point (λ⊙p)⊕(μ⊙q) of the tropical segment between p and q.
pub fn trop_segment_point(
    p: &TropicalPoint,
    q: &TropicalPoint,
    lambda: &Rat,
    mu: &Rat,
    variant: Variant,
) -> Result<TropicalPoint> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    let coords = (0..p.dim())
        .map(|i| {
            let a = lambda + p.coord(i);
            let b = mu + q.coord(i);
            match variant {
                Variant::Max => a.max(b),
                Variant::Min => a.min(b),
            }
        })
        .collect();
    TropicalPoint::new(coords)
}

/// Tropical distance max_{i<j} |p_i − p_j + q_j − q_i|; well defined on the
/// torus and zero exactly on equal points.
pub fn distance(p: &TropicalPoint, q: &TropicalPoint) -> Result<Rat> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    let mut best = Rat::zero();
    for i in 0..p.dim() {
        for j in (i + 1)..p.dim() {
            let v = rat::abs(&(p.coord(i) - p.coord(j) + q.coord(j) - q.coord(i)));
            if v > best {
                best = v;
            }
        }
    }
    Ok(best)
}

/// Value and exponent fan of the tropicalized product polynomial at p.
///
/// The value is Σ_i max_k (p_k − v_{ik}) with v the coefficient rows as
/// given, not their normalizations. The argmax set collects every coarse
/// vector realizable by picking one maximizing coordinate per hyperplane;
/// for generic p it is the singleton {coarse_type(p)}.
pub fn trop_poly_eval(
    arr: &Arrangement,
    p: &TropicalPoint,
) -> Result<(Rat, BTreeSet<CoarseVector>)> {
    let t = fine_type(arr, p)?;
    let mut value = Rat::zero();
    for i in 0..arr.n() {
        let k = t.row(i)[0];
        value += p.coord(k) - arr.coeff(i, k);
    }
    let mut partial: BTreeSet<Vec<u32>> = BTreeSet::new();
    partial.insert(vec![0; arr.d()]);
    for i in 0..arr.n() {
        let mut next = BTreeSet::new();
        for counts in &partial {
            for k in t.row(i) {
                let mut c = counts.clone();
                c[k] += 1;
                next.insert(c);
            }
        }
        partial = next;
    }
    let argmax = partial.into_iter().map(CoarseVector::new).collect();
    Ok((value, argmax))
}
