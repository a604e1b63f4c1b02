//! Plain-text reports with stable key ordering, shared by the command-line
//! interface and the C ABI.

use std::fmt::Write as _;

use crate::complex::{bounded_subcomplex, TropicalComplex};
use crate::ideals::{coarse_type_ideal, cotype_ideal, fine_type_ideal, Granularity};
use crate::mixed::MixedSubdivision;
use crate::resolution::{
    betti_table, bounded_cotype_complex, build_cellular, build_cocellular, full_type_complex,
    generic_fvector, AlgebraicComplex,
};
use crate::Result;

/// Summary plus one line per cell: dimension, boundedness, coarse and fine
/// type.
pub fn cells_report(tc: &TropicalComplex) -> String {
    let arr = tc.arrangement();
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", arr.n());
    let _ = writeln!(out, "d = {}", arr.d());
    let _ = writeln!(out, "dim = {}", tc.dim());
    let _ = writeln!(out, "f_vector = {:?}", tc.f_vector());
    let _ = writeln!(out, "euler_characteristic = {}", tc.euler_characteristic());
    let _ = writeln!(out, "cells:");
    for (k, cell) in tc.cells().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {k}: dim {} bounded {} coarse {} type {}",
            cell.dim, cell.bounded, cell.coarse, cell.canonical_type
        );
    }
    out
}

/// The four ideals attached to the decomposition.
pub fn ideals_report(tc: &TropicalComplex) -> Result<String> {
    let arr = tc.arrangement();
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", arr.n());
    let _ = writeln!(out, "d = {}", arr.d());
    let _ = writeln!(out, "coarse_type = {}", coarse_type_ideal(tc)?.render());
    let _ = writeln!(out, "fine_type = {}", fine_type_ideal(tc)?.render());
    let _ = writeln!(
        out,
        "coarse_cotype = {}",
        cotype_ideal(tc, Granularity::Coarse)?.render()
    );
    let _ = writeln!(
        out,
        "fine_cotype = {}",
        cotype_ideal(tc, Granularity::Fine)?.render()
    );
    Ok(out)
}

fn push_betti(out: &mut String, name: &str, ac: &AlgebraicComplex) {
    let bt = betti_table(ac);
    let _ = writeln!(out, "{name}:");
    let _ = writeln!(out, "  ranks = {:?}", ac.ranks());
    for ((i, m), mult) in bt.entries() {
        let _ = writeln!(out, "  beta[{i}, {}] = {mult}", m.render(bt.space()));
    }
    let totals: Vec<usize> = (0..=bt.max_index()).map(|i| bt.total(i)).collect();
    let _ = writeln!(out, "  total = {totals:?}");
}

/// Betti tables of the four minimal resolutions: cellular ones supported on
/// the bounded subcomplex resolving the cotype ideals, cocellular ones
/// supported on the full decomposition resolving the type ideals.
pub fn betti_report(tc: &TropicalComplex) -> Result<String> {
    let bounded = bounded_subcomplex(tc);
    let mut out = String::new();
    for (name, granularity) in [
        ("cellular_fine_cotype", Granularity::Fine),
        ("cellular_coarse_cotype", Granularity::Coarse),
    ] {
        let ac = build_cellular(&bounded_cotype_complex(&bounded, granularity)?)?;
        push_betti(&mut out, name, &ac);
    }
    for (name, granularity) in [
        ("cocellular_fine_type", Granularity::Fine),
        ("cocellular_coarse_type", Granularity::Coarse),
    ] {
        let ac = build_cocellular(&full_type_complex(tc, granularity)?)?;
        push_betti(&mut out, name, &ac);
    }
    Ok(out)
}

/// Face counts of the full and bounded complexes next to the generic
/// prediction.
pub fn fvector_report(tc: &TropicalComplex) -> String {
    let arr = tc.arrangement();
    let bounded = bounded_subcomplex(tc);
    let generic: Vec<u128> = generic_fvector(arr.n(), arr.d());
    let actual: Vec<u128> = tc.f_vector().iter().map(|&f| f as u128).collect();
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", arr.n());
    let _ = writeln!(out, "d = {}", arr.d());
    let _ = writeln!(out, "f_vector = {:?}", tc.f_vector());
    let _ = writeln!(out, "bounded_f_vector = {:?}", bounded.f_vector());
    let _ = writeln!(out, "euler_characteristic = {}", tc.euler_characteristic());
    let _ = writeln!(
        out,
        "bounded_euler_characteristic = {}",
        bounded.euler_characteristic()
    );
    let _ = writeln!(out, "generic_f_vector = {generic:?}");
    let _ = writeln!(out, "matches_generic = {}", actual == generic);
    out
}

/// The dual mixed subdivision: face counts, fineness, and the maximal
/// cells with their coarse types.
pub fn mixed_report(tc: &TropicalComplex) -> Result<String> {
    let ms = MixedSubdivision::from_tropical_complex(tc)?;
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", ms.n());
    let _ = writeln!(out, "d = {}", ms.d());
    let _ = writeln!(out, "mixed_f_vector = {:?}", ms.f_vector());
    let _ = writeln!(out, "fine = {}", ms.is_fine());
    let _ = writeln!(out, "maximal_cells:");
    for k in ms.maximal_cells() {
        let _ = writeln!(
            out,
            "  {k}: {} coarse {}",
            ms.cells()[k].render(),
            ms.labels()[k]
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_cells;
    use crate::tropical::Arrangement;

    #[test]
    fn reports_are_deterministic_and_keyed() {
        let arr =
            Arrangement::from_rows(&[vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let tc = enumerate_cells(&arr).unwrap();
        let a = cells_report(&tc);
        assert_eq!(a, cells_report(&tc));
        assert!(a.starts_with("n = 3\nd = 3\n"));
        let ideals = ideals_report(&tc).unwrap();
        assert!(ideals.contains("fine_cotype = <"));
        let betti = betti_report(&tc).unwrap();
        assert!(betti.contains("cellular_fine_cotype:"));
        assert!(betti.contains("  total = [4, 4, 1]"));
        let fv = fvector_report(&tc);
        assert!(fv.contains("matches_generic = false"));
        let mixed = mixed_report(&tc).unwrap();
        assert!(mixed.contains("fine = false"));
    }
}
