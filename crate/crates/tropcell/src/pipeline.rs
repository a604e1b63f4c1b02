//! End-to-end pipelines: the face-poset algorithm built on the crosscut
//! complex, random generic arrangement generation, and the full
//! verification battery.
//!
//! The face-poset route never touches Gröbner bases: the fine cotype ideal
//! is reached combinatorially as the Alexander dual of the Stanley–Reisner
//! ideal of the crosscut complex, then cross-checked against the cotype
//! ideal read off the enumerated cells. Both routes must agree exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{bounded_subcomplex, enumerate_cells, TropicalComplex};
use crate::doc::{ArrangementDocument, Metadata};
use crate::dual::{crosscut_facets, dual_subdivision, is_fine};
use crate::ideals::{
    alexander_dual, coarse_type_ideal, cotype_ideal, fine_type_ideal, minimalize,
    power_of_maximal_ideal, stable_betti, Granularity, Monomial, MonomialIdeal, VarSpace,
};
use crate::mixed::MixedSubdivision;
use crate::resolution::{
    betti_table, bounded_cotype_complex, build_cellular, build_cocellular, full_type_complex,
    fvector_from_betti, verify_resolution, BettiTable, Field,
};
use crate::{Error, Result};

/// A simplicial complex given by its inclusion-maximal faces.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    /// Keeps only inclusion-maximal facets; vertex ids must be in range.
    pub fn new(vertices: usize, facets: Vec<BTreeSet<usize>>) -> Result<Self> {
        for f in &facets {
            if let Some(&v) = f.iter().max() {
                if v >= vertices {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        limit: vertices,
                    });
                }
            }
        }
        let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
        for f in facets {
            if maximal.iter().any(|g| f.is_subset(g)) {
                continue;
            }
            maximal.retain(|g| !g.is_subset(&f));
            maximal.push(f);
        }
        maximal.sort();
        Ok(SimplicialComplex {
            vertices,
            facets: maximal,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn is_face(&self, s: &BTreeSet<usize>) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Minimal non-faces by breadth-first subset growth: level s candidates
    /// are faces of size s−1 extended past their maximum vertex, so every
    /// minimal non-face is generated exactly once.
    pub fn minimal_nonfaces(&self) -> Vec<BTreeSet<usize>> {
        let max_size = self.facets.iter().map(BTreeSet::len).max().unwrap_or(0);
        let mut minimal = Vec::new();
        let mut faces_prev: BTreeSet<BTreeSet<usize>> = BTreeSet::from([BTreeSet::new()]);
        for _size in 1..=max_size + 1 {
            let mut faces_cur = BTreeSet::new();
            for f in &faces_prev {
                let start = f.iter().next_back().map_or(0, |&m| m + 1);
                for v in start..self.vertices {
                    let mut c = f.clone();
                    c.insert(v);
                    if self.is_face(&c) {
                        faces_cur.insert(c);
                    } else if c.iter().all(|&w| {
                        let mut sub = c.clone();
                        sub.remove(&w);
                        self.is_face(&sub)
                    }) {
                        minimal.push(c);
                    }
                }
            }
            faces_prev = faces_cur;
        }
        minimal
    }
}

/// The crosscut complex of the arrangement: vertex set [n]×[d] flattened
/// row-major, one facet per 0-cell, spanning the entries of its type.
pub fn crosscut_complex(tc: &TropicalComplex) -> Result<SimplicialComplex> {
    let arr = tc.arrangement();
    let d = arr.d();
    let facets = crosscut_facets(tc)
        .into_iter()
        .map(|t| t.entries().into_iter().map(|(i, j)| i * d + j).collect())
        .collect();
    SimplicialComplex::new(arr.n() * d, facets)
}

/// Stanley–Reisner ideal: one squarefree generator per minimal non-face.
pub fn stanley_reisner(cc: &SimplicialComplex, space: VarSpace) -> Result<MonomialIdeal> {
    if space.num_vars() != cc.vertices() {
        return Err(Error::VariableSpaceMismatch(format!(
            "complex on {} vertices named in a space of {} variables",
            cc.vertices(),
            space.num_vars()
        )));
    }
    let gens = cc.minimal_nonfaces().into_iter().map(|nf| {
        let mut exps = vec![0u32; cc.vertices()];
        for v in nf {
            exps[v] = 1;
        }
        Monomial::new(exps)
    });
    minimalize(space, gens)
}

#[derive(Debug, Clone)]
pub struct ReportCell {
    pub dim: usize,
    pub fine: String,
    pub coarse: Vec<u32>,
    pub bounded: bool,
}

/// Everything the face-poset pipeline establishes about one arrangement.
#[derive(Debug, Clone)]
pub struct FacePosetReport {
    pub n: usize,
    pub d: usize,
    pub f_vector: Vec<usize>,
    pub bounded_f_vector: Vec<usize>,
    pub stanley_reisner: MonomialIdeal,
    pub fine_cotype: MonomialIdeal,
    pub resolution_ranks: Vec<usize>,
    pub fine_betti: BettiTable,
    pub coarse_betti: BTreeMap<(usize, u32), usize>,
    pub resolution_verified: bool,
    pub resolution_minimal: bool,
    pub cells: Vec<ReportCell>,
    pub covers: Vec<(usize, usize)>,
}

impl FacePosetReport {
    /// Stable key order, one fact per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "d: {}", self.d);
        let _ = writeln!(out, "f_vector: {:?}", self.f_vector);
        let _ = writeln!(out, "bounded_f_vector: {:?}", self.bounded_f_vector);
        let _ = writeln!(out, "stanley_reisner: {}", self.stanley_reisner.render());
        let _ = writeln!(out, "fine_cotype: {}", self.fine_cotype.render());
        let _ = writeln!(out, "resolution_ranks: {:?}", self.resolution_ranks);
        let _ = writeln!(out, "resolution_verified: {}", self.resolution_verified);
        let _ = writeln!(out, "resolution_minimal: {}", self.resolution_minimal);
        let _ = writeln!(out, "coarse_betti:");
        for ((i, deg), mult) in &self.coarse_betti {
            let _ = writeln!(out, "  beta[{i}, {deg}] = {mult}");
        }
        let _ = writeln!(out, "fine_betti:");
        for line in self.fine_betti.render().lines() {
            let _ = writeln!(out, "  {line}");
        }
        let _ = writeln!(out, "cells:");
        for (k, c) in self.cells.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {k}: dim {} bounded {} coarse {:?} type {}",
                c.dim, c.bounded, c.coarse, c.fine
            );
        }
        let _ = writeln!(out, "covers:");
        for &(f, co) in &self.covers {
            let _ = writeln!(out, "  {f} < {co}");
        }
        out
    }
}

/// The face-poset pipeline: enumerate, pass through the crosscut complex
/// and Alexander duality, cross-check against the directly computed cotype
/// ideal, then build and verify the minimal cellular resolution on the
/// bounded subcomplex.
pub fn face_poset_from_points(doc: &ArrangementDocument) -> Result<FacePosetReport> {
    let arr = doc.to_arrangement()?;
    let tc = enumerate_cells(&arr)?;
    let (n, d) = (arr.n(), arr.d());
    let space = VarSpace::Grid { n, d };

    let cc = crosscut_complex(&tc)?;
    let sr = stanley_reisner(&cc, space)?;
    let ones = Monomial::new(vec![1; space.num_vars()]);
    let via_duality = alexander_dual(&sr, &ones)?;
    let direct = cotype_ideal(&tc, Granularity::Fine)?;
    if via_duality != direct {
        return Err(Error::Consistency(format!(
            "cotype ideal mismatch: crosscut route gives {}, enumeration gives {}",
            via_duality.render(),
            direct.render()
        )));
    }

    let bounded = bounded_subcomplex(&tc);
    let lc = bounded_cotype_complex(&bounded, Granularity::Fine)?;
    let ac = build_cellular(&lc)?;
    let verified = verify_resolution(&ac, &direct, Field::Rational)?.passed();
    let fine_betti = betti_table(&ac);
    let coarse_betti = fine_betti.coarse_view();

    let mut f_vector = vec![0usize; d];
    let mut bounded_f_vector = vec![0usize; d];
    let mut cells = Vec::with_capacity(tc.cells().len());
    for cell in tc.cells() {
        f_vector[cell.dim] += 1;
        if cell.bounded {
            bounded_f_vector[cell.dim] += 1;
        }
        cells.push(ReportCell {
            dim: cell.dim,
            fine: cell.canonical_type.to_string(),
            coarse: cell.coarse.counts().to_vec(),
            bounded: cell.bounded,
        });
    }
    while bounded_f_vector.last() == Some(&0) && bounded_f_vector.len() > 1 {
        bounded_f_vector.pop();
    }

    Ok(FacePosetReport {
        n,
        d,
        f_vector,
        bounded_f_vector,
        stanley_reisner: sr,
        fine_cotype: direct,
        resolution_ranks: ac.ranks(),
        fine_betti,
        coarse_betti,
        resolution_verified: verified,
        resolution_minimal: ac.is_minimal(),
        cells,
        covers: tc.covers().to_vec(),
    })
}

/// Samples integer coordinates from a seeded stream until the dual
/// subdivision is fine, so the returned arrangement is generic.
pub fn generate_random_generic(n: usize, d: usize, seed: u64) -> Result<ArrangementDocument> {
    const ATTEMPTS: usize = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..d).map(|_| rng.random_range(0..=1_000_000)).collect())
            .collect();
        let arr = crate::tropical::Arrangement::from_rows(&rows)?;
        let tc = enumerate_cells(&arr)?;
        if is_fine(&dual_subdivision(&tc)) {
            return Ok(ArrangementDocument::from_integer_rows(
                &rows,
                Metadata {
                    name: Some(format!("random-{n}-{d}")),
                    seed: Some(seed),
                    generic: Some(true),
                },
            ));
        }
    }
    Err(Error::ResourceLimit(format!(
        "no generic arrangement found for n={n}, d={d} after {ATTEMPTS} samples"
    )))
}

/// One named check with its outcome.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Result of the full verification battery.
#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub checks: Vec<Check>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{mark}  {}: {}", c.name, c.detail);
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            }
        );
        out
    }
}

fn check(checks: &mut Vec<Check>, name: &str, passed: bool, detail: String) {
    checks.push(Check {
        name: name.to_string(),
        passed,
        detail,
    });
}

/// Runs the module invariants end to end on one arrangement: Euler
/// characteristic, dual dimension complementarity, all four (co)cellular
/// resolutions over three fields with minimality, the two-route cotype
/// consistency, the coarse Alexander duality identity, and, when the
/// subdivision is fine, the lattice-point count of the mixed subdivision.
pub fn verify_all(doc: &ArrangementDocument) -> Result<VerificationOutcome> {
    let arr = doc.to_arrangement()?;
    let tc = enumerate_cells(&arr)?;
    let (n, d) = (arr.n(), arr.d());
    let mut checks = Vec::new();

    let expected_euler = if (d - 1) % 2 == 0 { 1 } else { -1 };
    let euler = tc.euler_characteristic();
    check(
        &mut checks,
        "euler-characteristic",
        euler == expected_euler,
        format!("full complex alternating sum {euler}, expected {expected_euler}"),
    );

    let bounded = bounded_subcomplex(&tc);
    let bounded_euler = bounded.euler_characteristic();
    check(
        &mut checks,
        "bounded-euler-characteristic",
        bounded_euler == 1,
        format!("bounded subcomplex alternating sum {bounded_euler}, expected 1"),
    );

    let ds = dual_subdivision(&tc);
    let complementary = tc
        .cells()
        .iter()
        .zip(ds.dims())
        .all(|(c, &dd)| c.dim + dd == n + d - 2);
    check(
        &mut checks,
        "dual-dimension-complementarity",
        complementary,
        format!("{} cells against the dual subdivision", tc.cells().len()),
    );

    let fields = [Field::Rational, Field::Prime(2), Field::Prime(3)];
    let run_resolution = |checks: &mut Vec<Check>,
                              name: &str,
                              ac: &crate::resolution::AlgebraicComplex,
                              ideal: &MonomialIdeal|
     -> Result<()> {
        let mut ok = ac.is_minimal();
        let mut detail = format!("ranks {:?}, minimal {}", ac.ranks(), ok);
        for field in fields {
            let report = verify_resolution(ac, ideal, field)?;
            if !report.passed() {
                ok = false;
                let _ = write!(detail, ", {} failures over {:?}", report.failures.len(), field);
            }
        }
        if ok {
            let _ = write!(detail, ", exact over Q, F2, F3");
        }
        check(checks, name, ok, detail);
        Ok(())
    };

    let lc = bounded_cotype_complex(&bounded, Granularity::Fine)?;
    let ac = build_cellular(&lc)?;
    run_resolution(
        &mut checks,
        "cellular-fine-cotype",
        &ac,
        &cotype_ideal(&tc, Granularity::Fine)?,
    )?;
    let lc = bounded_cotype_complex(&bounded, Granularity::Coarse)?;
    let ac = build_cellular(&lc)?;
    run_resolution(
        &mut checks,
        "cellular-coarse-cotype",
        &ac,
        &cotype_ideal(&tc, Granularity::Coarse)?,
    )?;
    let lc = full_type_complex(&tc, Granularity::Fine)?;
    let ac = build_cocellular(&lc)?;
    run_resolution(
        &mut checks,
        "cocellular-fine-type",
        &ac,
        &fine_type_ideal(&tc)?,
    )?;
    let lc = full_type_complex(&tc, Granularity::Coarse)?;
    let ac = build_cocellular(&lc)?;
    let coarse_ideal = coarse_type_ideal(&tc)?;
    run_resolution(&mut checks, "cocellular-coarse-type", &ac, &coarse_ideal)?;

    let bt = betti_table(&ac);
    let (f_from_betti, bounded_from_betti) = fvector_from_betti(&bt, d);
    let mut f_vector = vec![0usize; d];
    let mut bounded_f = vec![0usize; d];
    for cell in tc.cells() {
        f_vector[cell.dim] += 1;
        if cell.bounded {
            bounded_f[cell.dim] += 1;
        }
    }
    while bounded_f.last() == Some(&0) && bounded_f.len() > 1 {
        bounded_f.pop();
    }
    check(
        &mut checks,
        "f-vector-from-betti",
        f_from_betti == f_vector && bounded_from_betti == bounded_f,
        format!("full {f_vector:?}, bounded {bounded_f:?} recovered from the coarse Betti table"),
    );

    match face_poset_from_points(doc) {
        Ok(report) => check(
            &mut checks,
            "cotype-two-routes",
            report.resolution_verified && report.resolution_minimal,
            format!(
                "crosscut route matches enumeration; resolution ranks {:?}",
                report.resolution_ranks
            ),
        ),
        Err(Error::Consistency(msg)) => {
            check(&mut checks, "cotype-two-routes", false, msg);
        }
        Err(e) => return Err(e),
    }

    // Coarse Alexander duality: dropping the pure powers from the coarse
    // type ideal and dualizing with respect to (n−1)·1 gives the coarse
    // cotype ideal.
    if n >= 2 {
        let bound = Monomial::new(vec![n as u32 - 1; d]);
        let trimmed = minimalize(
            VarSpace::Simple { d },
            coarse_ideal
                .gens()
                .iter()
                .filter(|g| g.divides(&bound))
                .cloned(),
        )?;
        let dual = alexander_dual(&trimmed, &bound)?;
        let direct = cotype_ideal(&tc, Granularity::Coarse)?;
        check(
            &mut checks,
            "coarse-alexander-duality",
            dual == direct,
            format!(
                "dual of the trimmed coarse type ideal has {} generators, direct cotype ideal {}",
                dual.gens().len(),
                direct.gens().len()
            ),
        );
    }

    if is_fine(&ds) {
        let ms = MixedSubdivision::from_tropical_complex(&tc)?;
        let vertex_labels: BTreeSet<Vec<u32>> = ms
            .cells()
            .iter()
            .zip(ms.dims())
            .filter(|&(_, &k)| k == 0)
            .map(|(c, _)| c.label().counts().to_vec())
            .collect();
        let expected = crate::ideals::binom(n + d - 1, d - 1) as usize;
        let all_points = power_of_maximal_ideal(d, n as u32);
        let as_points: BTreeSet<Vec<u32>> = all_points
            .gens()
            .iter()
            .map(|g| g.exps().to_vec())
            .collect();
        check(
            &mut checks,
            "mixed-lattice-points",
            vertex_labels.len() == expected && vertex_labels == as_points,
            format!(
                "{} vertex cells against {} lattice points of the dilated simplex",
                vertex_labels.len(),
                expected
            ),
        );
        let betti_stable = (0..d).all(|i| {
            stable_betti(n, d, i).map(|v| bt.total(i) as u128 == v).unwrap_or(false)
        });
        check(
            &mut checks,
            "stable-betti-numbers",
            betti_stable,
            format!(
                "coarse Betti totals {:?}",
                (0..d).map(|i| bt.total(i)).collect::<Vec<_>>()
            ),
        );
    }

    Ok(VerificationOutcome { checks })
}
