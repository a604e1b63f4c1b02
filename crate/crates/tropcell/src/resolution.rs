//! Cellular and cocellular resolutions supported on a tropical complex, with
//! per-multidegree exactness verification and Betti tables.
//!
//! A labeled complex attaches a monomial to every cell so that labels grow
//! along the face order (labeled mode, lcm over facets) or against it
//! (colabeled mode, lcm over cofacets). Incidence signs are propagated cell
//! by cell; each codimension-2 interval of a polyhedral complex is a diamond
//! and forces the relative sign of the two intermediate covers, so a breadth
//! first sweep either 2-colors every cell's facet graph or reports the
//! complex as invalid. Exactness is established strand by strand: for each
//! multidegree in the join closure of the labels, the surviving basis
//! elements form a sign matrix complex whose ranks must telescope.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::complex::TropicalComplex;
use crate::ideals::{binom, Granularity, Monomial, MonomialIdeal, VarSpace};
use crate::linalg::{rank_mod_p, rank_rational};
use crate::tropical::coarse_cotype;
use crate::{Error, Result};

/// Whether labels accumulate from faces or from cofaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    Labeled,
    Colabeled,
}

/// Coefficient field for rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    fn rank(&self, m: &[Vec<i64>]) -> Result<usize> {
        match *self {
            Field::Rational => Ok(rank_rational(m)),
            Field::Prime(p) => rank_mod_p(m, p),
        }
    }
}

/// A finite polyhedral poset with monomial labels and signed incidences.
#[derive(Debug, Clone)]
pub struct LabeledComplex {
    space: VarSpace,
    mode: LabelMode,
    dims: Vec<usize>,
    labels: Vec<Monomial>,
    covers: Vec<(usize, usize)>,
    signs: Vec<i8>,
    facets: Vec<Vec<usize>>,
    cofacets: Vec<Vec<usize>>,
}

impl LabeledComplex {
    /// Builds and validates a labeled or colabeled complex and assigns
    /// incidence signs. Covers are (face, cofacet) pairs with dimension
    /// difference one.
    pub fn new(
        space: VarSpace,
        mode: LabelMode,
        dims: Vec<usize>,
        labels: Vec<Monomial>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let cells = dims.len();
        if labels.len() != cells {
            return Err(Error::Precondition(format!(
                "{} labels for {} cells",
                labels.len(),
                cells
            )));
        }
        for l in &labels {
            if l.num_vars() != space.num_vars() {
                return Err(Error::VariableSpaceMismatch(
                    "label outside the declared variable space".to_string(),
                ));
            }
        }
        let mut facets = vec![Vec::new(); cells];
        let mut cofacets = vec![Vec::new(); cells];
        for &(f, co) in &covers {
            if f >= cells || co >= cells || dims[f] + 1 != dims[co] {
                return Err(Error::Precondition(format!(
                    "cover ({f}, {co}) is not a dimension-1 step"
                )));
            }
            facets[co].push(f);
            cofacets[f].push(co);
        }
        let mut lc = LabeledComplex {
            space,
            mode,
            dims,
            labels,
            covers,
            signs: Vec::new(),
            facets,
            cofacets,
        };
        lc.validate_labels()?;
        lc.signs = lc.assign_incidence_signs()?;
        lc.check_boundary_squares_to_zero()?;
        Ok(lc)
    }

    fn validate_labels(&self) -> Result<()> {
        match self.mode {
            LabelMode::Labeled => {
                for (idx, &dim) in self.dims.iter().enumerate() {
                    if dim == 0 {
                        continue;
                    }
                    let lcm = self.facets[idx]
                        .iter()
                        .map(|&f| self.labels[f].clone())
                        .reduce(|a, b| a.lcm(&b));
                    if lcm.as_ref() != Some(&self.labels[idx]) {
                        return Err(Error::LabelingViolation(format!(
                            "cell {idx} label is not the lcm of its facet labels"
                        )));
                    }
                }
            }
            LabelMode::Colabeled => {
                let top = self.dims.iter().copied().max().unwrap_or(0);
                for (idx, &dim) in self.dims.iter().enumerate() {
                    if dim == top {
                        continue;
                    }
                    let lcm = self.cofacets[idx]
                        .iter()
                        .map(|&c| self.labels[c].clone())
                        .reduce(|a, b| a.lcm(&b));
                    if lcm.as_ref() != Some(&self.labels[idx]) {
                        return Err(Error::LabelingViolation(format!(
                            "cell {idx} label is not the lcm of its cofacet labels"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Signs on cover pairs making every diamond alternate. Edges get +1/−1
    /// on their endpoints; higher cells 2-color their facet constraint graph,
    /// where each codim-2 interval (always a diamond in a polyhedral
    /// complex) fixes the relative sign of its two covers.
    fn assign_incidence_signs(&self) -> Result<Vec<i8>> {
        let cells = self.dims.len();
        let cover_index: HashMap<(usize, usize), usize> = self
            .covers
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, k))
            .collect();
        if cover_index.len() != self.covers.len() {
            return Err(Error::Precondition("duplicate cover pair".to_string()));
        }
        let mut signs: Vec<i8> = vec![0; self.covers.len()];
        let mut order: Vec<usize> = (0..cells).collect();
        order.sort_by_key(|&i| self.dims[i]);
        for &h in &order {
            let dim = self.dims[h];
            if dim == 0 {
                continue;
            }
            let fs = &self.facets[h];
            if dim == 1 {
                for (pos, &f) in fs.iter().enumerate() {
                    if pos > 1 {
                        return Err(Error::NotThin(format!(
                            "1-cell {h} has more than two facets"
                        )));
                    }
                    signs[cover_index[&(f, h)]] = if pos == 0 { 1 } else { -1 };
                }
                continue;
            }
            // Constraint edges between facets g1, g2 sharing a codim-2 face
            // f: sign(h,g1)·sign(g1,f) = −sign(h,g2)·sign(g2,f).
            let mut constraints: Vec<Vec<(usize, i8)>> = vec![Vec::new(); fs.len()];
            let pos_of: HashMap<usize, usize> =
                fs.iter().enumerate().map(|(p, &g)| (g, p)).collect();
            let mut ridges: HashMap<usize, Vec<usize>> = HashMap::new();
            for &g in fs {
                for &f in &self.facets[g] {
                    ridges.entry(f).or_default().push(g);
                }
            }
            for (f, mids) in &ridges {
                if mids.len() != 2 {
                    return Err(Error::NotThin(format!(
                        "interval between cells {f} and {h} has {} intermediates",
                        mids.len()
                    )));
                }
                let (g1, g2) = (mids[0], mids[1]);
                let s1 = signs[cover_index[&(*f, g1)]];
                let s2 = signs[cover_index[&(*f, g2)]];
                // Required product sign(h,g1)·sign(h,g2) = −s1·s2.
                let rel = -s1 * s2;
                constraints[pos_of[&g1]].push((pos_of[&g2], rel));
                constraints[pos_of[&g2]].push((pos_of[&g1], rel));
            }
            let mut color: Vec<i8> = vec![0; fs.len()];
            for start in 0..fs.len() {
                if color[start] != 0 {
                    continue;
                }
                color[start] = 1;
                let mut queue = VecDeque::from([start]);
                while let Some(u) = queue.pop_front() {
                    for &(v, rel) in &constraints[u] {
                        let want = color[u] * rel;
                        if color[v] == 0 {
                            color[v] = want;
                            queue.push_back(v);
                        } else if color[v] != want {
                            return Err(Error::SignAssignment(format!(
                                "facet sign constraints of cell {h} are inconsistent"
                            )));
                        }
                    }
                }
            }
            for (pos, &g) in fs.iter().enumerate() {
                signs[cover_index[&(g, h)]] = color[pos];
            }
        }
        Ok(signs)
    }

    /// Symbolic ∂² = 0: for every codim-2 incidence the signed cover
    /// products cancel, so the monomial matrices compose to zero.
    fn check_boundary_squares_to_zero(&self) -> Result<()> {
        let cover_sign: HashMap<(usize, usize), i8> = self
            .covers
            .iter()
            .zip(&self.signs)
            .map(|(&c, &s)| (c, s))
            .collect();
        for h in 0..self.dims.len() {
            let mut through: HashMap<usize, i64> = HashMap::new();
            for &g in &self.facets[h] {
                for &f in &self.facets[g] {
                    *through.entry(f).or_insert(0) +=
                        i64::from(cover_sign[&(g, h)]) * i64::from(cover_sign[&(f, g)]);
                }
            }
            if through.values().any(|&v| v != 0) {
                return Err(Error::SignAssignment(format!(
                    "boundary of boundary of cell {h} does not vanish"
                )));
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// One arrow of a differential: target position, source position, sign, and
/// the exponent difference of the two labels.
#[derive(Debug, Clone)]
pub struct DiffEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub quotient: Monomial,
}

/// Free complex F_top → … → F_1 → F_0 with monomial degree labels. Index 0
/// carries the generators of the resolved ideal.
#[derive(Debug, Clone)]
pub struct AlgebraicComplex {
    space: VarSpace,
    degrees: Vec<Vec<Monomial>>,
    diffs: Vec<Vec<DiffEntry>>,
}

impl AlgebraicComplex {
    pub fn space(&self) -> VarSpace {
        self.space
    }

    /// Ranks of the free modules by homological index.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn degrees(&self) -> &[Vec<Monomial>] {
        &self.degrees
    }

    /// The differential φ_i: F_i → F_{i−1}, for 1 ≤ i < length.
    pub fn diff(&self, i: usize) -> &[DiffEntry] {
        &self.diffs[i]
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Flips one differential sign; only used by negative-control tests.
    pub fn corrupt_sign(&mut self, i: usize, entry: usize) {
        self.diffs[i][entry].sign = -self.diffs[i][entry].sign;
    }

    /// No invertible entries: every arrow changes the degree label.
    pub fn is_minimal(&self) -> bool {
        self.diffs
            .iter()
            .flatten()
            .all(|e| !e.quotient.is_one())
    }
}

/// Assembles the complex from a homological grading of the cells. The arrow
/// map fixes, per cover pair, which endpoint is the source.
fn assemble(
    lc: &LabeledComplex,
    hom_index: impl Fn(usize) -> usize,
    arrow: impl Fn(usize, usize) -> (usize, usize),
) -> Result<AlgebraicComplex> {
    let cells = lc.dims.len();
    let top = (0..cells).map(&hom_index).max().map_or(0, |t| t + 1);
    let mut by_index: Vec<Vec<usize>> = vec![Vec::new(); top];
    for cell in 0..cells {
        by_index[hom_index(cell)].push(cell);
    }
    let mut position = vec![0usize; cells];
    for layer in &by_index {
        for (pos, &cell) in layer.iter().enumerate() {
            position[cell] = pos;
        }
    }
    let degrees: Vec<Vec<Monomial>> = by_index
        .iter()
        .map(|layer| layer.iter().map(|&c| lc.labels[c].clone()).collect())
        .collect();
    let mut diffs: Vec<Vec<DiffEntry>> = vec![Vec::new(); top];
    for (k, &(f, co)) in lc.covers.iter().enumerate() {
        let (source, target) = arrow(f, co);
        let (si, ti) = (hom_index(source), hom_index(target));
        if si != ti + 1 {
            return Err(Error::Consistency(format!(
                "cover ({f}, {co}) does not step one homological index"
            )));
        }
        let quotient = lc.labels[source]
            .checked_div(&lc.labels[target])
            .ok_or_else(|| {
                Error::LabelingViolation(format!(
                    "label of cell {target} does not divide label of cell {source}"
                ))
            })?;
        diffs[si].push(DiffEntry {
            row: position[target],
            col: position[source],
            sign: lc.signs[k],
            quotient,
        });
    }
    Ok(AlgebraicComplex {
        space: lc.space,
        degrees,
        diffs,
    })
}

/// Cellular complex of a labeled complex: index i holds the i-cells and the
/// differential follows facets.
pub fn build_cellular(lc: &LabeledComplex) -> Result<AlgebraicComplex> {
    if lc.mode != LabelMode::Labeled {
        return Err(Error::Precondition(
            "cellular construction needs labeled mode".to_string(),
        ));
    }
    assemble(lc, |c| lc.dims[c], |f, co| (co, f))
}

/// Cocellular complex: index i holds the cells of dimension top−i and the
/// differential follows cofacets.
pub fn build_cocellular(lc: &LabeledComplex) -> Result<AlgebraicComplex> {
    if lc.mode != LabelMode::Colabeled {
        return Err(Error::Precondition(
            "cocellular construction needs colabeled mode".to_string(),
        ));
    }
    let top = lc.dims.iter().copied().max().unwrap_or(0);
    assemble(lc, |c| top - lc.dims[c], |f, co| (f, co))
}

/// Outcome of the per-multidegree exactness check.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub strands_checked: usize,
    /// (multidegree, homological index) of every failed strand position.
    pub failures: Vec<(Monomial, usize)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Join closure of the label set under entrywise max, plus the empty join.
fn lcm_lattice(labels: &[Vec<Monomial>]) -> Vec<Monomial> {
    let vars = labels
        .iter()
        .flatten()
        .next()
        .map_or(0, Monomial::num_vars);
    let mut known: BTreeSet<Monomial> = labels.iter().flatten().cloned().collect();
    known.insert(Monomial::new(vec![0; vars]));
    let mut frontier: Vec<Monomial> = known.iter().cloned().collect();
    while let Some(next) = {
        let mut fresh = Vec::new();
        for a in &frontier {
            for b in known.iter() {
                let j = a.lcm(b);
                if !known.contains(&j) {
                    fresh.push(j);
                }
            }
        }
        if fresh.is_empty() {
            None
        } else {
            Some(fresh)
        }
    } {
        for j in next.iter() {
            known.insert(j.clone());
        }
        frontier = next;
    }
    known.into_iter().collect()
}

/// Checks that the complex resolves the ideal. First the composite of
/// consecutive differentials must vanish identically; since the monomial
/// part of a two-step path from cell H to cell F is label(H)/label(F) no
/// matter the intermediate cell, this reduces to signed path counts. Then,
/// for every multidegree b in the join closure of the labels, the strand of
/// basis elements whose label divides x^b is exact away from index 0, and
/// its cokernel at index 0 has dimension one exactly when x^b lies in the
/// ideal.
pub fn verify_resolution(
    ac: &AlgebraicComplex,
    ideal: &MonomialIdeal,
    field: Field,
) -> Result<VerifyReport> {
    if ideal.space() != ac.space {
        return Err(Error::VariableSpaceMismatch(
            "ideal and complex live in different variable spaces".to_string(),
        ));
    }
    let mut failures = Vec::new();
    for i in 1..ac.len().saturating_sub(1) {
        let mut composite: HashMap<(usize, usize), i64> = HashMap::new();
        for outer in &ac.diffs[i + 1] {
            for inner in &ac.diffs[i] {
                if inner.col == outer.row {
                    *composite.entry((inner.row, outer.col)).or_insert(0) +=
                        i64::from(inner.sign) * i64::from(outer.sign);
                }
            }
        }
        for ((_, col), total) in composite {
            if total != 0 {
                failures.push((ac.degrees[i + 1][col].clone(), i));
            }
        }
    }
    let lattice = lcm_lattice(&ac.degrees);
    for b in &lattice {
        let selected: Vec<Vec<usize>> = ac
            .degrees
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| l.divides(b))
                    .map(|(pos, _)| pos)
                    .collect()
            })
            .collect();
        let mut ranks = vec![0usize; ac.len() + 1];
        for i in 1..ac.len() {
            let rows = &selected[i - 1];
            let cols = &selected[i];
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let row_pos: HashMap<usize, usize> =
                rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
            let col_pos: HashMap<usize, usize> =
                cols.iter().enumerate().map(|(p, &c)| (c, p)).collect();
            let mut m = vec![vec![0i64; cols.len()]; rows.len()];
            for e in &ac.diffs[i] {
                if let (Some(&r), Some(&c)) = (row_pos.get(&e.row), col_pos.get(&e.col)) {
                    m[r][c] = i64::from(e.sign);
                }
            }
            ranks[i] = field.rank(&m)?;
        }
        for i in 1..ac.len() {
            if ranks[i] + ranks[i + 1] != selected[i].len() {
                failures.push((b.clone(), i));
            }
        }
        let coker = selected[0].len() - ranks[1];
        let expected = usize::from(ideal.contains(b));
        if coker != expected {
            failures.push((b.clone(), 0));
        }
    }
    Ok(VerifyReport {
        strands_checked: lattice.len(),
        failures,
    })
}

/// Betti table of a minimal complex: multiplicity of each (index, degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    space: VarSpace,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn max_index(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Multiplicities keyed by (index, total degree).
    pub fn coarse_view(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, m), &c) in &self.entries {
            *out.entry((*i, m.degree())).or_insert(0) += c;
        }
        out
    }

    /// Rows "(i, exponent vector, multiplicity)" sorted lexicographically.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for ((i, m), c) in &self.entries {
            lines.push(format!("({i}, {:?}, {c})", m.exps()));
        }
        lines.join("\n")
    }
}

pub fn betti_table(ac: &AlgebraicComplex) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, layer) in ac.degrees.iter().enumerate() {
        for m in layer {
            *entries.entry((i, m.clone())).or_insert(0) += 1;
        }
    }
    BettiTable {
        space: ac.space,
        entries,
    }
}

/// Reads cell counts back from the coarse cocellular Betti table:
/// f_k = β_{d−1−k}, and the bounded count keeps only degrees with every
/// exponent positive.
pub fn fvector_from_betti(bt: &BettiTable, d: usize) -> (Vec<usize>, Vec<usize>) {
    let mut f = vec![0usize; d];
    let mut bounded = vec![0usize; d];
    for ((i, m), &c) in &bt.entries {
        if *i >= d {
            continue;
        }
        let k = d - 1 - i;
        f[k] += c;
        if m.exps().iter().all(|&e| e >= 1) {
            bounded[k] += c;
        }
    }
    while bounded.last() == Some(&0) && bounded.len() > 1 {
        bounded.pop();
    }
    (f, bounded)
}

/// Cell counts of the decomposition induced by any generic arrangement:
/// f_k = Σ_ℓ binom(n+d−2−ℓ, n−1)·binom(d−1−ℓ, d−1−k).
pub fn generic_fvector(n: usize, d: usize) -> Vec<u128> {
    (0..d)
        .map(|k| {
            (0..=k)
                .map(|l| binom(n + d - 2 - l, n - 1) * binom(d - 1 - l, d - 1 - k))
                .sum()
        })
        .collect()
}

/// The four label choices supported by a tropical complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labeling {
    Type(Granularity),
    Cotype(Granularity),
}

/// Labeled complex on the bounded subcomplex with (fine or coarse) cotype
/// labels; supports the cellular resolution of the cotype ideal.
pub fn bounded_cotype_complex(
    bounded: &TropicalComplex,
    granularity: Granularity,
) -> Result<LabeledComplex> {
    let arr = bounded.arrangement();
    let dims: Vec<usize> = bounded.cells().iter().map(|c| c.dim).collect();
    let (space, labels): (VarSpace, Vec<Monomial>) = match granularity {
        Granularity::Fine => (
            VarSpace::Grid {
                n: arr.n(),
                d: arr.d(),
            },
            bounded
                .cells()
                .iter()
                .map(|c| Monomial::from_type_matrix(&c.canonical_type.complement()))
                .collect(),
        ),
        Granularity::Coarse => (
            VarSpace::Simple { d: arr.d() },
            bounded
                .cells()
                .iter()
                .map(|c| Monomial::from_coarse(&coarse_cotype(&c.canonical_type)))
                .collect(),
        ),
    };
    LabeledComplex::new(
        space,
        LabelMode::Labeled,
        dims,
        labels,
        bounded.covers().to_vec(),
    )
}

/// Colabeled complex on the full decomposition with (fine or coarse) type
/// labels; supports the cocellular resolution of the type ideal.
pub fn full_type_complex(
    tc: &TropicalComplex,
    granularity: Granularity,
) -> Result<LabeledComplex> {
    let arr = tc.arrangement();
    let dims: Vec<usize> = tc.cells().iter().map(|c| c.dim).collect();
    let (space, labels): (VarSpace, Vec<Monomial>) = match granularity {
        Granularity::Fine => (
            VarSpace::Grid {
                n: arr.n(),
                d: arr.d(),
            },
            tc.cells()
                .iter()
                .map(|c| Monomial::from_type_matrix(&c.canonical_type))
                .collect(),
        ),
        Granularity::Coarse => (
            VarSpace::Simple { d: arr.d() },
            tc.cells()
                .iter()
                .map(|c| Monomial::from_coarse(&c.coarse))
                .collect(),
        ),
    };
    LabeledComplex::new(
        space,
        LabelMode::Colabeled,
        dims,
        labels,
        tc.covers().to_vec(),
    )
}
