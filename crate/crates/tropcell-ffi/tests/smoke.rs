//! Exercises the C ABI the way a foreign caller would: through raw
//! pointers, out parameters, and status codes.

use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use tropcell_ffi::*;

/// Four generic hyperplanes in three coordinates, row-major.
const ROWS: [i64; 12] = [0, 3, 6, 0, 5, 2, 0, 0, 1, 1, 5, 0];

fn open(rows: &[i64], n: usize, d: usize) -> *mut TropComplexHandle {
    let mut h = ptr::null_mut();
    let status = unsafe { trop_complex_from_rows(rows.as_ptr(), n, d, &mut h) };
    assert_eq!(status, TropStatus::Ok);
    assert!(!h.is_null());
    h
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { trop_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(trop_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn builds_and_queries_a_decomposition() {
    let h = open(&ROWS, 4, 3);
    unsafe {
        assert_eq!(trop_complex_n(h), 4);
        assert_eq!(trop_complex_d(h), 3);
        assert_eq!(trop_complex_dim(h), 2);
        assert_eq!(trop_complex_cell_count(h), 49);
        assert_eq!(trop_complex_euler_characteristic(h), 1);

        // Two-call pattern: ask for the length, then fill.
        let len = trop_complex_f_vector(h, ptr::null_mut(), 0);
        assert_eq!(len, 3);
        let mut f = vec![0usize; len];
        assert_eq!(trop_complex_f_vector(h, f.as_mut_ptr(), len), 3);
        assert_eq!(f, [10, 24, 15]);

        // A short buffer still reports the required length.
        let mut short = [0usize; 2];
        assert_eq!(trop_complex_f_vector(h, short.as_mut_ptr(), 2), 3);
        assert_eq!(short, [10, 24]);

        // Per-cell queries agree with the f-vector.
        let count = trop_complex_cell_count(h);
        let mut by_dim = [0usize; 3];
        let mut bounded = 0usize;
        for idx in 0..count {
            let dim = trop_cell_dim(h, idx);
            assert!((0..=2).contains(&dim));
            by_dim[dim as usize] += 1;
            match trop_cell_is_bounded(h, idx) {
                1 => bounded += 1,
                0 => {}
                other => panic!("unexpected boundedness flag {other}"),
            }
            let d = trop_cell_coarse_type(h, idx, ptr::null_mut(), 0);
            assert_eq!(d, 3);
            let mut coarse = [0u32; 3];
            assert_eq!(trop_cell_coarse_type(h, idx, coarse.as_mut_ptr(), 3), 3);
            // Entries count sectors per hyperplane, so they total n for
            // maximal cells and more on lower-dimensional boundaries.
            let total = coarse.iter().sum::<u32>();
            if dim == 2 {
                assert_eq!(total, 4);
            } else {
                assert!(total > 4);
            }
        }
        assert_eq!(by_dim.to_vec(), f);
        assert_eq!(bounded, 10 + 12 + 3);

        // Out-of-range index.
        assert_eq!(trop_cell_dim(h, count), -1);
        assert_eq!(trop_cell_is_bounded(h, count), -1);
        assert_eq!(trop_cell_coarse_type(h, count, ptr::null_mut(), 0), 0);

        trop_complex_free(h);
    }
}

#[test]
fn null_handles_are_inert() {
    unsafe {
        let null = ptr::null();
        assert_eq!(trop_complex_n(null), 0);
        assert_eq!(trop_complex_d(null), 0);
        assert_eq!(trop_complex_dim(null), -1);
        assert_eq!(trop_complex_cell_count(null), 0);
        assert_eq!(trop_complex_euler_characteristic(null), 0);
        assert_eq!(trop_complex_f_vector(null, ptr::null_mut(), 0), 0);
        assert_eq!(trop_cell_dim(null, 0), -1);

        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(null, TropReport::Cells, &mut s),
            TropStatus::NullArgument
        );
        assert!(s.is_null());
        assert!(last_error().contains("null"));

        trop_complex_free(ptr::null_mut());
        trop_string_free(ptr::null_mut());
    }
}

#[test]
fn reports_match_the_library() {
    let h = open(&ROWS, 4, 3);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(h, TropReport::Fvector, &mut s),
            TropStatus::Ok
        );
        let fv = take_string(s);
        assert!(fv.contains("f_vector = [10, 24, 15]"));
        assert!(fv.contains("matches_generic = true"));

        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(h, TropReport::Ideals, &mut s),
            TropStatus::Ok
        );
        assert!(take_string(s).contains("fine_cotype = <"));

        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(h, TropReport::Bounded, &mut s),
            TropStatus::Ok
        );
        assert!(take_string(s).contains("f_vector = [10, 12, 3]"));

        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(h, TropReport::Betti, &mut s),
            TropStatus::Ok
        );
        let betti = take_string(s);
        assert!(betti.contains("cellular_fine_cotype:"));
        assert!(betti.contains("cocellular_coarse_type:"));

        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_report(h, TropReport::Mixed, &mut s),
            TropStatus::Ok
        );
        assert!(take_string(s).contains("mixed_f_vector"));

        trop_complex_free(h);
    }
}

#[test]
fn renders_svg_for_planar_input_only() {
    let h = open(&ROWS, 4, 3);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(trop_complex_render_svg(h, 0, &mut s), TropStatus::Ok);
        let svg = take_string(s);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("class=\"bounded\""));

        let mut s = ptr::null_mut();
        assert_eq!(trop_complex_render_svg(h, 1, &mut s), TropStatus::Ok);
        assert!(take_string(s).contains("class=\"cell\""));
        trop_complex_free(h);
    }

    let flat = open(&[0, 1, 0, 3], 2, 2);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            trop_complex_render_svg(flat, 0, &mut s),
            TropStatus::InvalidInput
        );
        assert!(s.is_null());
        assert!(last_error().contains("unsupported"));
        trop_complex_free(flat);
    }
}

#[test]
fn document_text_round_trips() {
    let h = open(&ROWS, 4, 3);
    let text = unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(trop_complex_document_text(h, &mut s), TropStatus::Ok);
        trop_complex_free(h);
        take_string(s)
    };
    assert!(text.contains("\"points\""));

    let c_text = CString::new(text).unwrap();
    let mut h2 = ptr::null_mut();
    unsafe {
        assert_eq!(
            trop_complex_from_document(c_text.as_ptr(), &mut h2),
            TropStatus::Ok
        );
        assert_eq!(trop_complex_cell_count(h2), 49);
        trop_complex_free(h2);
    }
}

#[test]
fn rejects_malformed_documents() {
    let bad = CString::new("{\"points\": [[[1, 0]]]}").unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(
            trop_complex_from_document(bad.as_ptr(), &mut h),
            TropStatus::InvalidInput
        );
        assert!(h.is_null());
        assert!(last_error().contains("zero denominator"));

        let garbage = CString::new("not json").unwrap();
        assert_eq!(
            trop_complex_from_document(garbage.as_ptr(), &mut h),
            TropStatus::InvalidInput
        );
        assert!(last_error().contains("does not parse"));

        assert_eq!(
            trop_complex_from_document(ptr::null(), &mut h),
            TropStatus::NullArgument
        );
        assert_eq!(
            trop_complex_from_rows(ptr::null(), 2, 3, &mut h),
            TropStatus::NullArgument
        );
    }
}

#[test]
fn verifies_and_generates() {
    unsafe {
        // The invariant suite passes on a builtin-sized arrangement.
        let h = open(&[0, 1, 1, 0, 0, 1, 0, 1, 0], 3, 3);
        let mut s = ptr::null_mut();
        assert_eq!(trop_complex_verify(h, &mut s), TropStatus::Ok);
        let report = take_string(s);
        assert!(report.contains("all checks passed"));
        // The report argument is optional.
        assert_eq!(trop_complex_verify(h, ptr::null_mut()), TropStatus::Ok);
        trop_complex_free(h);

        // Generation is deterministic per seed and loadable as a handle.
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(trop_generate_document(3, 3, 7, &mut a), TropStatus::Ok);
        assert_eq!(trop_generate_document(3, 3, 7, &mut b), TropStatus::Ok);
        let (a, b) = (take_string(a), take_string(b));
        assert_eq!(a, b);
        assert!(a.contains("\"seed\": 7"));

        let mut g = ptr::null_mut();
        assert_eq!(trop_complex_generate(3, 3, 7, &mut g), TropStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(trop_complex_document_text(g, &mut s), TropStatus::Ok);
        assert_eq!(take_string(s), a);
        trop_complex_free(g);

        // Invalid sizes are input errors.
        let mut bad = ptr::null_mut();
        assert_eq!(
            trop_generate_document(0, 3, 1, &mut bad),
            TropStatus::InvalidInput
        );
    }
}

#[test]
fn header_is_generated_and_covers_the_abi() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("tropcell.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "TROPCELL_H",
        "TROP_STATUS_OK",
        "TROP_REPORT_BETTI",
        "typedef struct TropComplexHandle TropComplexHandle;",
        "trop_complex_from_document",
        "trop_complex_from_rows",
        "trop_complex_generate",
        "trop_complex_free",
        "trop_complex_f_vector",
        "trop_cell_coarse_type",
        "trop_complex_report",
        "trop_complex_render_svg",
        "trop_complex_verify",
        "trop_generate_document",
        "trop_string_free",
        "trop_last_error_message",
    ] {
        assert!(text.contains(name), "header is missing {name}");
    }
}
