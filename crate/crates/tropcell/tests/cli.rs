//! End-to-end checks of the command-line interface: verb output, exit
//! codes, and determinism, driving the compiled binary.

use std::process::{Command, Output};

use tropcell::doc::parse_document;

fn tropcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropcell"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(args: &[&str]) -> String {
    let out = tropcell(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn count(hay: &str, needle: &str) -> usize {
    hay.match_indices(needle).count()
}

#[test]
fn cells_reports_the_full_decomposition() {
    let out = stdout_of(&["cells", "running-example"]);
    assert!(out.contains("n = 4"));
    assert!(out.contains("f_vector = [10, 24, 15]"));
    assert!(out.contains("euler_characteristic = 1"));
    assert_eq!(count(&out, "dim 2"), 15);
}

#[test]
fn bounded_reports_the_bounded_subcomplex() {
    let out = stdout_of(&["bounded", "running-example"]);
    assert!(out.contains("f_vector = [10, 12, 3]"));
    assert!(out.contains("euler_characteristic = 1"));
    assert_eq!(count(&out, "bounded false"), 0);
}

#[test]
fn ideals_prints_all_four_ideals() {
    let out = stdout_of(&["ideals", "nongeneric-example"]);
    assert!(out.contains(
        "fine_cotype = <x13*x21*x23, x12*x31*x32, x21*x23*x31*x32, x12*x13*x23*x32>"
    ));
    assert!(out.contains("coarse_type = <"));
    assert!(out.contains("coarse_cotype = <x1*x3^2, x1*x2^2, x2^2*x3^2, x1^2*x2*x3>"));
}

#[test]
fn betti_prints_the_four_resolution_tables() {
    let out = stdout_of(&["betti", "nongeneric-example"]);
    for section in [
        "cellular_fine_cotype:",
        "cellular_coarse_cotype:",
        "cocellular_fine_type:",
        "cocellular_coarse_type:",
    ] {
        assert!(out.contains(section), "missing section {section}");
    }
    assert_eq!(count(&out, "total = [4, 4, 1]"), 2);
    assert_eq!(count(&out, "total = [8, 11, 4]"), 2);
    assert!(out.contains("beta[2, x1^2*x2^2*x3^2] = 1"));
}

#[test]
fn fvector_flags_the_generic_match() {
    let out = stdout_of(&["fvector", "cyclic", "3", "3"]);
    assert!(out.contains("f_vector = [6, 15, 10]"));
    assert!(out.contains("matches_generic = true"));
}

#[test]
fn mixed_lists_the_maximal_cells() {
    let out = stdout_of(&["mixed", "cyclic", "2", "2"]);
    assert!(out.contains("mixed_f_vector = [3, 2]"));
    assert!(out.contains("fine = true"));
    assert!(out.contains("({1},{1,2}) coarse (2,1)"));
    assert!(out.contains("({1,2},{2}) coarse (1,2)"));
}

#[test]
fn faceposet_emits_the_pipeline_report() {
    let out = stdout_of(&["faceposet", "nongeneric-example"]);
    assert!(out.contains("resolution_ranks: [4, 4, 1]"));
    assert!(out.contains("resolution_verified: true"));
    assert!(out.contains("resolution_minimal: true"));
    assert!(out.contains("beta[1, 5] = 4"));
}

#[test]
fn render_draws_the_decomposition_and_the_mixed_subdivision() {
    let svg = stdout_of(&["render", "running-example"]);
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(count(&svg, "class=\"bounded\""), 3);
    assert_eq!(count(&svg, "class=\"apex\""), 4);

    let mixed = stdout_of(&["render", "--mixed", "cyclic", "4", "3"]);
    assert_eq!(count(&mixed, "class=\"vertex\""), 15);
    assert_eq!(count(&mixed, "class=\"cell\""), 10);
}

#[test]
fn render_writes_to_a_file_when_asked() {
    let path = std::env::temp_dir().join("tropcell-cli-render-test.svg");
    let _ = std::fs::remove_file(&path);
    let out = stdout_of(&[
        "render",
        "running-example",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("<?xml"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_passes_on_the_builtin_examples() {
    let out = tropcell(&["verify", "nongeneric-example"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all checks passed"));
    assert_eq!(count(&text, "FAIL"), 0);
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let first = stdout_of(&["generate", "3", "3", "--seed", "5"]);
    let second = stdout_of(&["generate", "3", "3", "--seed", "5"]);
    assert_eq!(first, second);
    let doc = parse_document(&first).unwrap();
    assert_eq!(doc.metadata.seed, Some(5));
    assert_eq!(doc.metadata.generic, Some(true));

    let path = std::env::temp_dir().join("tropcell-cli-generate-test.json");
    std::fs::write(&path, &first).unwrap();
    let report = stdout_of(&["fvector", path.to_str().unwrap()]);
    assert!(report.contains("matches_generic = true"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn input_errors_exit_with_code_2() {
    let missing = tropcell(&["cells", "no-such-file.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let unsupported = tropcell(&["render", "cyclic", "2", "2"]);
    assert_eq!(unsupported.status.code(), Some(2));

    let bad_builtin = tropcell(&["cells", "cyclic", "0", "3"]);
    assert_eq!(bad_builtin.status.code(), Some(2));
}

#[test]
fn svg_output_is_byte_identical_across_runs() {
    let a = stdout_of(&["render", "nongeneric-example"]);
    let b = stdout_of(&["render", "nongeneric-example"]);
    assert_eq!(a, b);
}
