//! Monomials, monomial ideals, the four (co)type ideals of an arrangement,
//! Alexander duality, the coarsening map, and the closed-form Betti numbers
//! of powers of the maximal ideal.
//!
//! Two variable spaces occur: d variables x_1..x_d for coarse data and an
//! n×d grid x_{ij} for fine data, ordered row-major. Ideals store their
//! generators minimalized, so membership is a divisibility scan.

use std::collections::BTreeSet;

use crate::complex::TropicalComplex;
use crate::tropical::{CoarseVector, TypeMatrix};
use crate::{Error, Result};

/// The polynomial ring a monomial lives in: either x_1..x_d or the n×d grid
/// x_{ij} with index i*d + j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarSpace {
    Simple { d: usize },
    Grid { n: usize, d: usize },
}

impl VarSpace {
    pub fn num_vars(&self) -> usize {
        match *self {
            VarSpace::Simple { d } => d,
            VarSpace::Grid { n, d } => n * d,
        }
    }

    /// Canonical variable name; grid variables use an underscore separator
    /// only when a bare concatenation would be ambiguous.
    pub fn var_name(&self, idx: usize) -> String {
        match *self {
            VarSpace::Simple { .. } => format!("x{}", idx + 1),
            VarSpace::Grid { n, d } => {
                let (i, j) = (idx / d + 1, idx % d + 1);
                if n <= 9 && d <= 9 {
                    format!("x{i}{j}")
                } else {
                    format!("x{i}_{j}")
                }
            }
        }
    }
}

/// Exponent vector over a variable space held by the enclosing ideal or
/// passed alongside. The zero vector is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(space: VarSpace) -> Self {
        Monomial {
            exps: vec![0; space.num_vars()],
        }
    }

    /// x^T for a fine type or cotype matrix, in the grid space.
    pub fn from_type_matrix(t: &TypeMatrix) -> Self {
        let mut exps = vec![0; t.n() * t.d()];
        for (i, j) in t.entries() {
            exps[i * t.d() + j] = 1;
        }
        Monomial { exps }
    }

    /// x^c for a coarse vector, in the simple space.
    pub fn from_coarse(c: &CoarseVector) -> Self {
        Monomial {
            exps: c.counts().to_vec(),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Quotient exponent a_H − a_G of a cover pair; None if not divisible.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn render(&self, space: VarSpace) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 1 {
                parts.push(space.var_name(idx));
            } else if e > 1 {
                parts.push(format!("{}^{}", space.var_name(idx), e));
            }
        }
        parts.join("*")
    }
}

/// A monomial ideal, stored as its unique minimal generating set sorted by
/// exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    space: VarSpace,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(space: VarSpace) -> Self {
        MonomialIdeal {
            space,
            gens: Vec::new(),
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The unit ideal ⟨1⟩; arises from the degenerate one-hyperplane cotype
    /// construction and is reported rather than rejected.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Contains a power of every variable.
    pub fn is_artinian(&self) -> bool {
        let vars = self.space.num_vars();
        (0..vars).all(|v| {
            self.gens
                .iter()
                .any(|g| g.exps.iter().enumerate().all(|(w, &e)| w == v || e == 0))
        })
    }

    /// Common total degree of all generators, if there is one.
    pub fn single_degree(&self) -> Option<u32> {
        let mut degrees = self.gens.iter().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.gens.iter().map(|g| g.render(self.space)).collect();
        format!("<{}>", body.join(", "))
    }
}

/// Discards every generator strictly divisible by another, dedupes, sorts.
pub fn minimalize(space: VarSpace, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let set: BTreeSet<Monomial> = gens.into_iter().collect();
    for m in &set {
        if m.num_vars() != space.num_vars() {
            return Err(Error::VariableSpaceMismatch(format!(
                "monomial has {} exponents, space has {} variables",
                m.num_vars(),
                space.num_vars()
            )));
        }
    }
    let mut minimal: Vec<Monomial> = set
        .iter()
        .filter(|m| !set.iter().any(|g| g != *m && g.divides(m)))
        .cloned()
        .collect();
    minimal.sort_by_key(|m| (m.degree(), m.exps.clone()));
    Ok(MonomialIdeal {
        space,
        gens: minimal,
    })
}

/// ⟨x_1,…,x_d⟩^a as an explicit ideal: all degree-a monomials in d variables.
pub fn power_of_maximal_ideal(d: usize, a: u32) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut current = vec![0u32; d];
    fn fill(gens: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == current.len() {
            current[pos] = left;
            gens.push(Monomial::new(current.clone()));
            return;
        }
        for take in 0..=left {
            current[pos] = take;
            fill(gens, current, pos + 1, left - take);
        }
    }
    if d > 0 {
        fill(&mut gens, &mut current, 0, a);
    }
    MonomialIdeal {
        space: VarSpace::Simple { d },
        gens: {
            let mut g = gens;
            g.sort();
            g
        },
    }
}

fn maximal_cell_indices(tc: &TropicalComplex) -> Vec<usize> {
    let top = tc.dim();
    tc.cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.dim == top)
        .map(|(i, _)| i)
        .collect()
}

/// Fine type ideal: generated by x^{T(C)} over inclusion-maximal cells.
pub fn fine_type_ideal(tc: &TropicalComplex) -> Result<MonomialIdeal> {
    let arr = tc.arrangement();
    let space = VarSpace::Grid {
        n: arr.n(),
        d: arr.d(),
    };
    minimalize(
        space,
        maximal_cell_indices(tc)
            .into_iter()
            .map(|i| Monomial::from_type_matrix(&tc.cells()[i].canonical_type)),
    )
}

/// Coarse type ideal: generated by x^{ct(C)} over inclusion-maximal cells.
pub fn coarse_type_ideal(tc: &TropicalComplex) -> Result<MonomialIdeal> {
    let space = VarSpace::Simple {
        d: tc.arrangement().d(),
    };
    minimalize(
        space,
        maximal_cell_indices(tc)
            .into_iter()
            .map(|i| Monomial::from_coarse(&tc.cells()[i].coarse)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    Fine,
    Coarse,
}

/// Cotype ideal: generated by the (fine or coarse) cotypes of the 0-cells.
/// For a single hyperplane the apex cotype is empty and the result is ⟨1⟩.
pub fn cotype_ideal(tc: &TropicalComplex, granularity: Granularity) -> Result<MonomialIdeal> {
    let arr = tc.arrangement();
    let vertices = tc.cells().iter().filter(|c| c.dim == 0);
    match granularity {
        Granularity::Fine => minimalize(
            VarSpace::Grid {
                n: arr.n(),
                d: arr.d(),
            },
            vertices.map(|c| Monomial::from_type_matrix(&c.canonical_type.complement())),
        ),
        Granularity::Coarse => minimalize(
            VarSpace::Simple { d: arr.d() },
            vertices.map(|c| {
                Monomial::from_coarse(&crate::tropical::coarse_cotype(&c.canonical_type))
            }),
        ),
    }
}

/// Generators of the irreducible ideal m^{a∖b}: x_v^{a_v+1−b_v} for each v
/// with b_v ≥ 1. An empty list (b = 0) denotes the unit ideal.
fn irreducible_complement(a: &Monomial, b: &Monomial) -> Vec<Monomial> {
    let vars = a.num_vars();
    let mut gens = Vec::new();
    for v in 0..vars {
        if b.exps[v] >= 1 {
            let mut exps = vec![0; vars];
            exps[v] = a.exps[v] + 1 - b.exps[v];
            gens.push(Monomial::new(exps));
        }
    }
    gens
}

/// Intersection of two monomial ideals: pairwise lcms, minimalized.
pub fn intersect(left: &MonomialIdeal, right: &MonomialIdeal) -> Result<MonomialIdeal> {
    if left.space != right.space {
        return Err(Error::VariableSpaceMismatch(
            "intersection of ideals over different variable spaces".to_string(),
        ));
    }
    minimalize(
        left.space,
        left.gens
            .iter()
            .flat_map(|f| right.gens.iter().map(move |g| f.lcm(g))),
    )
}

/// Alexander dual with respect to a: the intersection of m^{a∖b} over the
/// minimal generators b. Every generator must divide x^a entrywise.
pub fn alexander_dual(ideal: &MonomialIdeal, a: &Monomial) -> Result<MonomialIdeal> {
    if a.num_vars() != ideal.space.num_vars() {
        return Err(Error::VariableSpaceMismatch(
            "dualizing exponent lives in a different variable space".to_string(),
        ));
    }
    for b in &ideal.gens {
        if !b.divides(a) {
            return Err(Error::Precondition(format!(
                "generator {} exceeds the dualizing exponent {}",
                b.render(ideal.space),
                a.render(ideal.space)
            )));
        }
    }
    if ideal.is_zero() {
        // Empty intersection convention: dual of the zero ideal is the unit.
        return minimalize(ideal.space, [Monomial::one(ideal.space)]);
    }
    let mut acc: Option<MonomialIdeal> = None;
    for b in &ideal.gens {
        let piece = minimalize(ideal.space, irreducible_complement(a, b))?;
        let piece = if b.is_one() {
            // m^{a∖1} has no generators but means the unit ideal here.
            minimalize(ideal.space, [Monomial::one(ideal.space)])?
        } else {
            piece
        };
        acc = Some(match acc {
            None => piece,
            Some(prev) => intersect(&prev, &piece)?,
        });
    }
    Ok(acc.unwrap())
}

/// The coarsening map x_{ij} ↦ x_j on an ideal over the grid space.
pub fn coarsen(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let VarSpace::Grid { n: _, d } = ideal.space else {
        return Err(Error::VariableSpaceMismatch(
            "coarsening requires the n x d grid space".to_string(),
        ));
    };
    minimalize(
        VarSpace::Simple { d },
        ideal.gens.iter().map(|g| {
            let mut exps = vec![0u32; d];
            for (idx, &e) in g.exps.iter().enumerate() {
                exps[idx % d] += e;
            }
            Monomial::new(exps)
        }),
    )
}

/// Binomial coefficient, exact; zero when k is out of range.
pub fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for step in 0..k {
        acc = acc * (n - step) as u128 / (step + 1) as u128;
    }
    acc
}

/// Total Betti number β_i of ⟨x_1,…,x_d⟩^n, by the strongly stable formula
/// Σ_ℓ binom(n−2+ℓ, n−1)·binom(ℓ−1, i).
pub fn stable_betti(n: usize, d: usize, i: usize) -> Result<u128> {
    if n < 1 || d < 1 || i >= d {
        return Err(Error::Precondition(format!(
            "stable_betti out of range: n={n}, d={d}, i={i}"
        )));
    }
    Ok((1..=d)
        .map(|l| binom(n + l - 2, n - 1) * binom(l - 1, i))
        .sum())
}
