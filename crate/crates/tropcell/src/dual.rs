//! The regular subdivision of a product of two simplices dual to an
//! arrangement, and its crosscut complex.
//!
//! Lifting vertex (e_i, e_j) of the product to height v_{ij} induces a
//! regular subdivision whose faces are the tight sets of the envelope system
//! y_i + z_j ≤ v_{ij}. The cell of type T corresponds to the face
//! {(i,j) : T_{ij} = 1}, with complementary dimension. Faces missing a row
//! lie in the boundary of the product and have no tropical counterpart.

use crate::complex::{ConstraintSystem, TropicalComplex};
use crate::tropical::{Arrangement, TypeMatrix};
use crate::{Error, Result};

/// The dual subdivision of an enumerated complex. Entry k is the dual face
/// of cell k, so both complexes share one index space.
#[derive(Debug, Clone)]
pub struct DualSubdivision {
    n: usize,
    d: usize,
    cells: Vec<TypeMatrix>,
    dims: Vec<usize>,
}

impl DualSubdivision {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cells(&self) -> &[TypeMatrix] {
        &self.cells
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// Affine dimension of the face of the product with the given vertex set:
/// the number of touched rows and columns minus the number of connected
/// components of the bipartite incidence graph, minus one.
pub fn dual_cell_dimension(t: &TypeMatrix) -> usize {
    let n = t.n();
    let d = t.d();
    let mut parent: Vec<usize> = (0..n + d).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut touched = vec![false; n + d];
    for (i, j) in t.entries() {
        touched[i] = true;
        touched[n + j] = true;
        let a = find(&mut parent, i);
        let b = find(&mut parent, n + j);
        parent[a] = b;
    }
    let mut components = std::collections::HashSet::new();
    let mut count = 0;
    for x in 0..n + d {
        if touched[x] {
            count += 1;
            components.insert(find(&mut parent, x));
        }
    }
    if count == 0 {
        return 0;
    }
    count - components.len() - 1
}

/// One dual face per cell, aligned with the complex's cell indices.
pub fn dual_subdivision(tc: &TropicalComplex) -> DualSubdivision {
    let arr = tc.arrangement();
    let cells: Vec<TypeMatrix> = tc
        .cells()
        .iter()
        .map(|c| c.canonical_type.clone())
        .collect();
    let dims = cells.iter().map(dual_cell_dimension).collect();
    DualSubdivision {
        n: arr.n(),
        d: arr.d(),
        cells,
        dims,
    }
}

/// True iff every inclusion-maximal dual face is a simplex, i.e. has exactly
/// n+d−1 vertices. This is the general-position test for the arrangement.
pub fn is_fine(ds: &DualSubdivision) -> bool {
    let top = ds.n + ds.d - 2;
    ds.cells
        .iter()
        .zip(&ds.dims)
        .filter(|&(_, &dim)| dim == top)
        .all(|(t, _)| t.count_ones() == ds.n + ds.d - 1)
}

/// Vertex sets of the inclusion-maximal dual faces: the duals of the 0-cells.
/// Every dual face is a subset of one of them, since every cell of the
/// decomposition has a 0-cell in its closure.
pub fn crosscut_facets(tc: &TropicalComplex) -> Vec<TypeMatrix> {
    tc.cells()
        .iter()
        .filter(|c| c.dim == 0)
        .map(|c| c.canonical_type.clone())
        .collect()
}

/// Independent test for "S is a face of the dual subdivision": the envelope
/// system y_i + z_j ≤ v_{ij}, with equality forced on S, must be feasible
/// with no further constraint forced tight. Works for any subset of the
/// product's vertices, including boundary faces with empty rows; the empty
/// set is rejected.
pub fn envelope_is_face(arr: &Arrangement, s: &TypeMatrix) -> Result<bool> {
    let n = arr.n();
    let d = arr.d();
    if s.n() != n || s.d() != d {
        return Err(Error::DimensionMismatch {
            expected: n * d,
            got: s.n() * s.d(),
        });
    }
    if s.count_ones() == 0 {
        return Ok(false);
    }
    // Node i is −y_i for i < n; node n+j is z_j. The constraint
    // y_i + z_j ≤ v_{ij} reads z_j − (−y_i) ≤ v_{ij}.
    let mut cs = ConstraintSystem::new(n + d);
    for i in 0..n {
        let v = arr.apex(i);
        for j in 0..d {
            cs.add_bound(i, n + j, v.coord(j).clone());
            if s.get(i, j) {
                cs.add_bound(n + j, i, -v.coord(j));
            }
        }
    }
    let closed = cs.close();
    if !closed.is_feasible() {
        return Ok(false);
    }
    for i in 0..n {
        let v = arr.apex(i);
        for j in 0..d {
            if s.get(i, j) {
                continue;
            }
            // Tightness of an unlisted constraint is forced iff the closure
            // already implies y_i + z_j ≥ v_{ij}.
            if let Some(c) = closed.get(n + j, i) {
                if *c <= -v.coord(j) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_cells;
    use std::collections::HashSet;

    fn running_example() -> Arrangement {
        Arrangement::from_rows(&[vec![0, 3, 6], vec![0, 5, 2], vec![0, 0, 1], vec![1, 5, 0]])
            .unwrap()
    }

    fn nongeneric_example() -> Arrangement {
        Arrangement::from_rows(&[vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap()
    }

    #[test]
    fn dual_dimension_small_cases() {
        // A single product vertex.
        let t = TypeMatrix::from_rows(2, 2, &[vec![0], vec![]]);
        assert_eq!(dual_cell_dimension(&t), 0);
        // An edge of the product.
        let t = TypeMatrix::from_rows(1, 2, &[vec![0, 1]]);
        assert_eq!(dual_cell_dimension(&t), 1);
        // Two disjoint edges of the square span a diagonal.
        let t = TypeMatrix::from_rows(2, 2, &[vec![0], vec![1]]);
        assert_eq!(dual_cell_dimension(&t), 1);
        // The full square.
        let t = TypeMatrix::from_rows(2, 2, &[vec![0, 1], vec![0, 1]]);
        assert_eq!(dual_cell_dimension(&t), 2);
        // A spanning tree of the 3x3 grid is a top-dimensional simplex.
        let t = TypeMatrix::from_rows(3, 3, &[vec![0, 1, 2], vec![0], vec![0]]);
        assert_eq!(dual_cell_dimension(&t), 3 + 3 - 2);
        // The empty set, by convention.
        let t = TypeMatrix::zeros(2, 2);
        assert_eq!(dual_cell_dimension(&t), 0);
    }

    #[test]
    fn dimensions_are_complementary() {
        for arr in [running_example(), nongeneric_example()] {
            let tc = enumerate_cells(&arr).unwrap();
            let ds = dual_subdivision(&tc);
            let total = arr.n() + arr.d() - 2;
            for (cell, &dual_dim) in tc.cells().iter().zip(ds.dims()) {
                assert_eq!(cell.dim + dual_dim, total, "at type {}", cell.canonical_type);
            }
        }
    }

    #[test]
    fn running_example_is_a_triangulation() {
        let tc = enumerate_cells(&running_example()).unwrap();
        let ds = dual_subdivision(&tc);
        assert!(is_fine(&ds));
        // Every face of a triangulation is a simplex: vertex count tracks
        // dimension exactly.
        for (t, &dim) in ds.cells().iter().zip(ds.dims()) {
            assert_eq!(t.count_ones(), dim + 1);
        }
    }

    #[test]
    fn nongeneric_example_is_not_fine() {
        let arr = nongeneric_example();
        let tc = enumerate_cells(&arr).unwrap();
        let ds = dual_subdivision(&tc);
        assert!(!is_fine(&ds));
        let top = arr.n() + arr.d() - 2;
        let oversized = ds
            .cells()
            .iter()
            .zip(ds.dims())
            .any(|(t, &dim)| dim == top && t.count_ones() == 6);
        assert!(oversized, "expected a 6-vertex maximal dual cell");
    }

    #[test]
    fn single_hyperplane_dual_is_one_simplex() {
        let arr = Arrangement::from_rows(&[vec![0, 2, 5]]).unwrap();
        let tc = enumerate_cells(&arr).unwrap();
        let facets = crosscut_facets(&tc);
        assert_eq!(facets.len(), 1);
        assert_eq!(facets[0], TypeMatrix::from_rows(1, 3, &[vec![0, 1, 2]]));
    }

    #[test]
    fn every_dual_face_lies_in_a_crosscut_facet() {
        for arr in [running_example(), nongeneric_example()] {
            let tc = enumerate_cells(&arr).unwrap();
            let ds = dual_subdivision(&tc);
            let facets = crosscut_facets(&tc);
            for t in ds.cells() {
                assert!(facets.iter().any(|f| t.is_subset_of(f)));
            }
        }
    }

    /// Exhaustive cross-check on the 3x3 example: among all 512 subsets of
    /// the product's vertices, the envelope faces with every row touched are
    /// exactly the duals of the enumerated cells.
    #[test]
    fn envelope_oracle_matches_enumeration_exhaustively() {
        let arr = nongeneric_example();
        let tc = enumerate_cells(&arr).unwrap();
        let duals: HashSet<TypeMatrix> = dual_subdivision(&tc).cells().iter().cloned().collect();
        let n = arr.n();
        let d = arr.d();
        let mut faces = 0;
        for mask in 0..1u32 << (n * d) {
            let mut s = TypeMatrix::zeros(n, d);
            for b in 0..n * d {
                if mask >> b & 1 == 1 {
                    s.set(b / d, b % d, true);
                }
            }
            let face = envelope_is_face(&arr, &s).unwrap();
            if face {
                faces += 1;
            }
            assert_eq!(
                face && s.rows_nonempty(),
                duals.contains(&s),
                "disagreement at {s}"
            );
        }
        // Boundary faces (some row empty) exist but are not duals.
        assert!(faces > duals.len());
    }

    /// The envelope oracle agrees with enumeration on the generic running
    /// example too; subsets are sampled by extending true faces, which would
    /// catch an orientation flip in the lifting convention.
    #[test]
    fn envelope_oracle_running_example() {
        let arr = running_example();
        let tc = enumerate_cells(&arr).unwrap();
        let ds = dual_subdivision(&tc);
        let duals: HashSet<TypeMatrix> = ds.cells().iter().cloned().collect();
        for t in ds.cells() {
            assert!(envelope_is_face(&arr, t).unwrap(), "missing face {t}");
            // Any strict superset of a maximal face cannot be a face.
            if t.count_ones() == arr.n() + arr.d() - 1 {
                for i in 0..arr.n() {
                    for j in 0..arr.d() {
                        if !t.get(i, j) {
                            let mut bigger = t.clone();
                            bigger.set(i, j, true);
                            assert!(!envelope_is_face(&arr, &bigger).unwrap());
                            assert!(!duals.contains(&bigger));
                        }
                    }
                }
            }
        }
    }
}
