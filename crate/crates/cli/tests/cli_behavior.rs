//! End-to-end behavior of the `chevalley` binary: verb output shapes, the
//! exit-code taxonomy, input equivalence, and determinism guarantees.

use std::io::Write as _;
use std::process::{Command, Output};

use chevalley_core::constants::full_table;
use chevalley_core::rootsys::{build_root_system, CartanMatrix};
use chevalley_core::SignTable;

fn chevalley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = chevalley(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    chevalley(args).status.code().expect("no signal")
}

/// Writes a named type's Cartan matrix in the file format the CLI reads.
fn cartan_file(name: &str) -> tempfile::NamedTempFile {
    let cartan = CartanMatrix::from_name(name).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{}", cartan.rank()).unwrap();
    for i in 0..cartan.rank() {
        let row: Vec<String> =
            (0..cartan.rank()).map(|j| cartan.entry(i, j).to_string()).collect();
        writeln!(file, "{}", row.join(" ")).unwrap();
    }
    file.flush().unwrap();
    file
}

#[test]
fn roots_g2_prints_twelve_rows() {
    let text = stdout_ok(&["roots", "G2"]);
    assert_eq!(text.lines().count(), 1 + 12, "header plus one line per root");
    let json = stdout_ok(&["roots", "G2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 12);
}

#[test]
fn table_a2_json_has_the_two_canonical_triples() {
    let json = stdout_ok(&["table", "A2", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 2);
    let golden = serde_json::json!({"lambda": [1, 0], "mu": [0, 1], "N": 1});
    assert!(rows.contains(&golden), "missing N_{{α,β}} = 1 row: {rows:?}");
}

#[test]
fn unknown_type_name_exits_one() {
    assert_eq!(exit_code(&["roots", "Q9"]), 1);
    assert_eq!(exit_code(&["table", "E9"]), 1);
}

#[test]
fn conflicting_or_missing_inputs_exit_one() {
    let file = cartan_file("A2");
    let path = file.path().to_str().unwrap();
    assert_eq!(exit_code(&["roots", "A2", "--cartan", path]), 1);
    assert_eq!(exit_code(&["roots"]), 1);
    assert_eq!(exit_code(&["frobnicate", "A2"]), 1);
}

#[test]
fn invalid_cartan_inputs_exit_two() {
    assert_eq!(exit_code(&["roots", "--cartan", "/nonexistent/file"]), 2);
    let mut affine = tempfile::NamedTempFile::new().unwrap();
    write!(affine, "2\n2 -2\n-2 2\n").unwrap();
    assert_eq!(exit_code(&["roots", "--cartan", affine.path().to_str().unwrap()]), 2);
    let mut malformed = tempfile::NamedTempFile::new().unwrap();
    write!(malformed, "2\n2 -1 -1 2 0").unwrap();
    assert_eq!(exit_code(&["roots", "--cartan", malformed.path().to_str().unwrap()]), 2);
}

#[test]
fn oracle_request_without_a_frame_exits_two() {
    assert_eq!(exit_code(&["verify", "G2", "--oracle"]), 2);
    // Without the explicit flag the same type verifies fine.
    assert_eq!(exit_code(&["verify", "G2"]), 0);
}

#[test]
fn verify_passes_on_framed_types() {
    let out = stdout_ok(&["verify", "C2", "--oracle", "--jacobi"]);
    assert!(out.ends_with("result: PASS\n"));
    let json = stdout_ok(&["verify", "A2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["ok"], serde_json::Value::Bool(true));
    assert!(doc["oracle"]["mismatches"].as_array().unwrap().is_empty());
    assert!(doc["suites"].as_array().unwrap().len() >= 3);
}

#[test]
fn named_type_and_cartan_file_outputs_are_byte_identical() {
    for name in ["A2", "C3"] {
        let file = cartan_file(name);
        let path = file.path().to_str().unwrap();
        for verb in ["roots", "basis", "table"] {
            for format in ["text", "json", "csv"] {
                let named = stdout_ok(&[verb, name, "--format", format]);
                let from_file = stdout_ok(&[verb, "--cartan", path, "--format", format]);
                assert_eq!(named, from_file, "{name} {verb} {format}");
            }
        }
    }
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roots.json");
    let direct = stdout_ok(&["roots", "B2", "--format", "json"]);
    let piped = stdout_ok(&["roots", "B2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(piped.is_empty(), "--out suppresses stdout");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn thread_count_does_not_change_output() {
    // Exhaustive path.
    let one = stdout_ok(&["verify", "B3", "--threads", "1"]);
    let four = stdout_ok(&["verify", "B3", "--threads", "4"]);
    assert_eq!(one, four);
    // Sampled path (large basis forces sampling).
    let two = stdout_ok(&["verify", "E6", "--jacobi", "--threads", "2"]);
    let three = stdout_ok(&["verify", "E6", "--jacobi", "--threads", "3"]);
    assert_eq!(two, three);
}

#[test]
fn binary_table_output_matches_the_library_renderer() {
    let sys = build_root_system(CartanMatrix::from_name("C3").unwrap()).unwrap();
    let signs = SignTable::new(&sys);
    let table = full_table(&sys, &signs).unwrap();
    let lib = chevalley_cli::formats::render_table(&sys, &table, chevalley_cli::args::Format::Json);
    assert_eq!(stdout_ok(&["table", "C3", "--format", "json"]), lib);
}

#[test]
fn rendered_table_json_reloads_into_an_equivalent_table() {
    let sys = build_root_system(CartanMatrix::from_name("B3").unwrap()).unwrap();
    let signs = SignTable::new(&sys);
    let table = full_table(&sys, &signs).unwrap();
    let json = stdout_ok(&["table", "B3", "--format", "json"]);
    let reloaded = chevalley_cli::formats::parse_table_json(&sys, &json).unwrap();
    assert_eq!(reloaded.canonical_rows(), table.canonical_rows());
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
    assert_eq!(exit_code(&["roots", "--help"]), 0);
}

#[test]
fn csv_outputs_are_flat_and_headed() {
    let roots = stdout_ok(&["roots", "A1", "--format", "csv"]);
    assert_eq!(
        roots,
        "index,coords,coroot,sq_length,height,depth\n0,1,1,1,1,0\n1,-1,-1,1,-1,0\n"
    );
    let table = stdout_ok(&["table", "A2", "--format", "csv"]);
    assert!(table.starts_with("lambda,mu,N\n"));
    assert!(table.contains("1 0,0 1,1\n"));
}
