//! Mixed subdivisions of the dilated simplex n·Δ_{d−1}.
//!
//! Through the Cayley trick, the dual subdivision of an arrangement of n
//! tropical hyperplanes in d coordinates becomes a mixed subdivision of the
//! n-fold dilated standard simplex: the cell with type matrix T turns into
//! the Minkowski sum of the simplices spanned by the rows of T. Tropical
//! cells of dimension k map to mixed cells of dimension d−1−k, so vertices
//! of the arrangement give the full-dimensional mixed cells and maximal
//! tropical cells give the lattice points.

use std::collections::BTreeSet;

use crate::complex::TropicalComplex;
use crate::dual::dual_cell_dimension;
use crate::ideals::binom;
use crate::tropical::{Arrangement, CoarseVector, TypeMatrix};
use crate::{Error, Result};

/// A Minkowski sum of simplices: part i spans the unit vectors indexed by
/// `parts[i]` (0-indexed columns, each part nonempty and sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixedCell {
    d: usize,
    parts: Vec<Vec<usize>>,
}

impl MixedCell {
    /// The rows of a type matrix, each taken as a simplex of unit vectors.
    pub fn from_type_matrix(t: &TypeMatrix) -> Result<Self> {
        if !t.rows_nonempty() {
            return Err(Error::Precondition(
                "a mixed cell needs every part nonempty".to_string(),
            ));
        }
        Ok(MixedCell {
            d: t.d(),
            parts: (0..t.n()).map(|i| t.row(i)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    fn type_matrix(&self) -> TypeMatrix {
        let mut t = TypeMatrix::zeros(self.parts.len(), self.d);
        for (i, part) in self.parts.iter().enumerate() {
            for &j in part {
                t.set(i, j, true);
            }
        }
        t
    }

    /// Dimension of the Minkowski sum.
    pub fn dim(&self) -> usize {
        dual_cell_dimension(&self.type_matrix()) - (self.parts.len() - 1)
    }

    /// Entrywise maximum over the cell's lattice points; the exponent of
    /// the monomial label, and the coarse type of the tropical cell.
    pub fn label(&self) -> CoarseVector {
        self.type_matrix().col_sums()
    }

    /// The distinct points Σ_i e_{j_i} with j_i ranging over part i, in
    /// sorted order. These span the cell and include all its vertices.
    pub fn lattice_points(&self) -> Vec<Vec<u32>> {
        let mut sums: BTreeSet<Vec<u32>> = BTreeSet::new();
        sums.insert(vec![0; self.d]);
        for part in &self.parts {
            let mut next = BTreeSet::new();
            for s in &sums {
                for &j in part {
                    let mut t = s.clone();
                    t[j] += 1;
                    next.insert(t);
                }
            }
            sums = next;
        }
        sums.into_iter().collect()
    }

    /// Breakpoints 0 = b_0 ≤ … ≤ b_n = d−1 when every part is the interval
    /// [b_{i−1}, b_i]; the shape of staircase cells.
    pub fn as_interval_chain(&self) -> Option<Vec<usize>> {
        let mut breaks = vec![0usize];
        for part in &self.parts {
            let (&lo, &hi) = (part.first()?, part.last()?);
            if lo != *breaks.last()? || part.len() != hi - lo + 1 {
                return None;
            }
            breaks.push(hi);
        }
        if *breaks.last()? == self.d - 1 {
            Some(breaks)
        } else {
            None
        }
    }

    /// 1-indexed display such as `({1},{1,2})`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let inner: Vec<String> = p.iter().map(|j| (j + 1).to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

/// The mixed subdivision carried by a tropical complex, on the same index
/// space as the tropical cells.
#[derive(Debug, Clone)]
pub struct MixedSubdivision {
    n: usize,
    d: usize,
    cells: Vec<MixedCell>,
    dims: Vec<usize>,
    labels: Vec<CoarseVector>,
    covers: Vec<(usize, usize)>,
}

impl MixedSubdivision {
    pub fn from_tropical_complex(tc: &TropicalComplex) -> Result<Self> {
        let arr = tc.arrangement();
        let (n, d) = (arr.n(), arr.d());
        let mut cells = Vec::with_capacity(tc.cells().len());
        let mut dims = Vec::with_capacity(tc.cells().len());
        let mut labels = Vec::with_capacity(tc.cells().len());
        for cell in tc.cells() {
            let mc = MixedCell::from_type_matrix(&cell.canonical_type)?;
            dims.push(d - 1 - cell.dim);
            labels.push(mc.label());
            cells.push(mc);
        }
        // Tropical covers reverse: the mixed cell of a tropical cofacet is
        // a facet of the mixed cell of the tropical face.
        let covers = tc.covers().iter().map(|&(f, co)| (co, f)).collect();
        Ok(MixedSubdivision {
            n,
            d,
            cells,
            dims,
            labels,
            covers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cells(&self) -> &[MixedCell] {
        &self.cells
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> &[CoarseVector] {
        &self.labels
    }

    /// Cover pairs (face, cofacet) in the mixed face order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.d];
        for &k in &self.dims {
            f[k] += 1;
        }
        f
    }

    /// Indices of the full-dimensional cells.
    pub fn maximal_cells(&self) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&k| self.dims[k] == self.d - 1)
            .collect()
    }

    /// Fine means every full-dimensional cell is a fine mixed cell: its
    /// part sizes sum to n+d−1, the minimum possible.
    pub fn is_fine(&self) -> bool {
        self.maximal_cells().into_iter().all(|k| {
            let sizes: usize = self.cells[k].parts().iter().map(Vec::len).sum();
            sizes == self.n + self.d - 1
        })
    }
}

/// The arrangement with coefficient rows v_i = (−i·1, …, −i·d) for
/// i = 1, …, n. Any arrangement with strictly concave-interleaved rows
/// induces the staircase subdivision; this slope choice is the standard
/// one.
pub fn cyclic_arrangement(n: usize, d: usize) -> Result<Arrangement> {
    cyclic_with_sign(n, d, -1)
}

fn cyclic_with_sign(n: usize, d: usize, sign: i64) -> Result<Arrangement> {
    let rows: Vec<Vec<i64>> = (1..=n as i64)
        .map(|i| (1..=d as i64).map(|j| sign * i * j).collect())
        .collect();
    Arrangement::from_rows(&rows)
}

/// All nondecreasing breakpoint vectors 0 = b_0 ≤ … ≤ b_n = d−1.
fn breakpoint_sequences(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize];
    fn extend(current: &mut Vec<usize>, n: usize, d: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            let mut full = current.clone();
            full.push(d - 1);
            if d - 1 >= *current.last().unwrap() {
                out.push(full);
            }
            return;
        }
        let lo = *current.last().unwrap();
        for b in lo..d {
            current.push(b);
            extend(current, n, d, out);
            current.pop();
        }
    }
    extend(&mut current, n, d, &mut out);
    out
}

/// The expected maximal cells of the staircase subdivision: one interval
/// chain per breakpoint vector, part i spanning [b_{i−1}, b_i].
pub fn staircase_maximal_cells(n: usize, d: usize) -> Vec<MixedCell> {
    breakpoint_sequences(n, d)
        .into_iter()
        .map(|b| MixedCell {
            d,
            parts: (0..n).map(|i| (b[i]..=b[i + 1]).collect()).collect(),
        })
        .collect()
}

/// The staircase subdivision of n·Δ_{d−1}, computed by enumerating the
/// cyclic arrangement and checked against the interval-chain description.
/// Tries the opposite slope sign before giving up, so a wrong orientation
/// convention fails loudly instead of producing a different subdivision.
pub fn staircase_subdivision(n: usize, d: usize) -> Result<MixedSubdivision> {
    let expected: BTreeSet<MixedCell> = staircase_maximal_cells(n, d).into_iter().collect();
    let mut last_got = 0usize;
    for sign in [-1i64, 1] {
        let arr = cyclic_with_sign(n, d, sign)?;
        let tc = crate::complex::enumerate_cells(&arr)?;
        let ms = MixedSubdivision::from_tropical_complex(&tc)?;
        let got: BTreeSet<MixedCell> = ms
            .maximal_cells()
            .into_iter()
            .map(|k| ms.cells[k].clone())
            .collect();
        if got == expected {
            return Ok(ms);
        }
        last_got = got.len();
    }
    Err(Error::Calibration(format!(
        "cyclic arrangement for n={n}, d={d} induced {last_got} maximal mixed cells \
         under both slope signs, expected {} interval chains",
        expected.len()
    )))
}

/// Vertices of the tropical hypersimplex: all 0/1 vectors of length m with
/// exactly k zeros, ordered by the zero set lexicographically.
pub fn hypersimplex_vertices(k: usize, m: usize) -> Result<Vec<Vec<i64>>> {
    if k == 0 || k > m {
        return Err(Error::Precondition(format!(
            "hypersimplex needs 0 < k <= m, got k={k}, m={m}"
        )));
    }
    let mut out = Vec::with_capacity(binom(m, k) as usize);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut row = vec![1i64; m];
        for &j in &subset {
            row[j] = 0;
        }
        out.push(row);
        // Advance to the next k-subset in lexicographic order.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if subset[i] != i + m - k {
                subset[i] += 1;
                for t in i + 1..k {
                    subset[t] = subset[t - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return Ok(out);
            }
        }
    }
}

/// The arrangement whose coefficient rows are the hypersimplex vertices.
pub fn hypersimplex_arrangement(k: usize, m: usize) -> Result<Arrangement> {
    Arrangement::from_rows(&hypersimplex_vertices(k, m)?)
}

/// Coarse types of the inclusion-maximal cells, sorted descending, one
/// entry per orbit of the coordinate permutation action.
pub fn maximal_coarse_orbits(tc: &TropicalComplex) -> BTreeSet<Vec<u32>> {
    let top = tc.dim();
    tc.cells()
        .iter()
        .filter(|c| c.dim == top)
        .map(|c| c.coarse.sorted_desc().counts().to_vec())
        .collect()
}

/// The coarse-type orbits of the maximal cells of the hypersimplex
/// arrangement, one representative per class α = 1, …, m−k+1: the first
/// entry is binom(m−α, k) + binom(m−1, k−1), followed by binom(m−j, k−1)
/// for j = 2, …, α, padded with zeros.
pub fn hypersimplex_coarse_orbits(k: usize, m: usize) -> BTreeSet<Vec<u32>> {
    (1..=m - k + 1)
        .map(|alpha| {
            let mut v = vec![(binom(m - alpha, k) + binom(m - 1, k - 1)) as u32];
            for j in 2..=alpha {
                v.push(binom(m - j, k - 1) as u32);
            }
            v.resize(m, 0);
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_cells;
    use crate::dual::{dual_subdivision, is_fine};
    use crate::ideals::{
        coarse_type_ideal, power_of_maximal_ideal, stable_betti, Monomial, VarSpace,
    };
    use crate::resolution::{
        betti_table, build_cellular, verify_resolution, Field, LabelMode, LabeledComplex,
    };

    fn running_example() -> Arrangement {
        Arrangement::from_rows(&[vec![0, 3, 6], vec![0, 5, 2], vec![0, 0, 1], vec![1, 5, 0]])
            .unwrap()
    }

    #[test]
    fn staircase_two_two_is_the_two_interval_chains() {
        let ms = staircase_subdivision(2, 2).unwrap();
        let maximal: BTreeSet<String> = ms
            .maximal_cells()
            .into_iter()
            .map(|k| ms.cells()[k].render())
            .collect();
        let expected: BTreeSet<String> =
            ["({1},{1,2})", "({1,2},{2})"].iter().map(|s| s.to_string()).collect();
        assert_eq!(maximal, expected);
    }

    #[test]
    fn staircase_maximal_counts() {
        for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)] {
            let ms = staircase_subdivision(n, d).unwrap();
            assert_eq!(
                ms.maximal_cells().len() as u128,
                binom(n + d - 2, n - 1),
                "at n={n}, d={d}"
            );
            assert!(ms.is_fine());
            for k in ms.maximal_cells() {
                assert!(ms.cells()[k].as_interval_chain().is_some());
            }
        }
    }

    #[test]
    fn mixed_dimensions_track_tropical_dimensions() {
        let arr = running_example();
        let tc = enumerate_cells(&arr).unwrap();
        let ms = MixedSubdivision::from_tropical_complex(&tc).unwrap();
        for (k, cell) in tc.cells().iter().enumerate() {
            assert_eq!(ms.dims()[k], arr.d() - 1 - cell.dim);
            assert_eq!(ms.cells()[k].dim(), ms.dims()[k]);
        }
        let mut expected = tc.f_vector();
        expected.reverse();
        assert_eq!(ms.f_vector(), expected);
    }

    #[test]
    fn lattice_points_and_labels_of_a_segment_cell() {
        let ms = staircase_subdivision(2, 2).unwrap();
        let k = ms
            .maximal_cells()
            .into_iter()
            .find(|&k| ms.cells()[k].render() == "({1},{1,2})")
            .unwrap();
        let cell = &ms.cells()[k];
        assert_eq!(cell.lattice_points(), vec![vec![1, 1], vec![2, 0]]);
        assert_eq!(cell.label().counts(), &[2, 1]);
        assert_eq!(cell.dim(), 1);
    }

    #[test]
    fn staircase_resolves_the_power_of_the_maximal_ideal() {
        for (n, d) in [(2, 2), (2, 3), (3, 3)] {
            let ms = staircase_subdivision(n, d).unwrap();
            let labels: Vec<Monomial> =
                ms.labels().iter().map(Monomial::from_coarse).collect();
            let lc = LabeledComplex::new(
                VarSpace::Simple { d },
                LabelMode::Labeled,
                ms.dims().to_vec(),
                labels,
                ms.covers().to_vec(),
            )
            .unwrap();
            let ac = build_cellular(&lc).unwrap();
            assert!(ac.is_minimal());
            let ideal = power_of_maximal_ideal(d, n as u32);
            let report = verify_resolution(&ac, &ideal, Field::Rational).unwrap();
            assert!(report.passed(), "at n={n}, d={d}");
            let bt = betti_table(&ac);
            for i in 0..d {
                assert_eq!(
                    bt.total(i) as u128,
                    stable_betti(n, d, i).unwrap(),
                    "at n={n}, d={d}, i={i}"
                );
            }
        }
    }

    #[test]
    fn cyclic_arrangement_is_generic() {
        for (n, d) in [(2, 3), (3, 3), (4, 3)] {
            let arr = cyclic_arrangement(n, d).unwrap();
            let tc = enumerate_cells(&arr).unwrap();
            assert!(is_fine(&dual_subdivision(&tc)), "at n={n}, d={d}");
        }
    }

    #[test]
    fn hypersimplex_vertex_sets() {
        assert_eq!(
            hypersimplex_vertices(1, 3).unwrap(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        let v24 = hypersimplex_vertices(2, 4).unwrap();
        assert_eq!(v24.len(), 6);
        assert!(v24.iter().all(|r| r.iter().sum::<i64>() == 2));
        assert_eq!(v24[0], vec![0, 0, 1, 1]);
        assert_eq!(v24[5], vec![1, 1, 0, 0]);
        assert_eq!(hypersimplex_vertices(3, 5).unwrap().len(), 10);
        assert!(hypersimplex_vertices(0, 3).is_err());
    }

    #[test]
    fn first_hypersimplex_is_generic_with_power_coarse_ideal() {
        // The three points are in general position, so the coarse type
        // ideal is the full cube of the maximal ideal.
        let arr = hypersimplex_arrangement(1, 3).unwrap();
        let tc = enumerate_cells(&arr).unwrap();
        assert!(is_fine(&dual_subdivision(&tc)));
        let ideal = coarse_type_ideal(&tc).unwrap();
        assert_eq!(ideal, power_of_maximal_ideal(3, 3));
    }

    #[test]
    fn hypersimplex_two_four_maximal_orbits() {
        let expected: BTreeSet<Vec<u32>> =
            [vec![6, 0, 0, 0], vec![4, 2, 0, 0], vec![3, 2, 1, 0]]
                .into_iter()
                .collect();
        assert_eq!(hypersimplex_coarse_orbits(2, 4), expected);
        let arr = hypersimplex_arrangement(2, 4).unwrap();
        let tc = enumerate_cells(&arr).unwrap();
        assert_eq!(maximal_coarse_orbits(&tc), expected);
    }
}
