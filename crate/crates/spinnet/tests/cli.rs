//! End-to-end runs of the binary: row counts, exit codes, determinism.

use std::process::{Command, Output};

fn spinnet(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spinnet"));
    cmd.args(args).env_remove("SPINNET_MAX_DIM");
    cmd
}

fn run(args: &[&str]) -> Output {
    spinnet(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

/// Data rows of the CSV block whose column header is `header`.
fn block_rows(text: &str, header: &str) -> Vec<String> {
    let mut rows = Vec::new();
    let mut inside = false;
    for line in text.lines() {
        if line == header {
            inside = true;
            continue;
        }
        if inside {
            if line.starts_with('#') || !line.contains(',') {
                break;
            }
            rows.push(line.to_string());
        }
    }
    rows
}

#[test]
fn spectrum_of_the_nine_site_ring_has_512_rows() {
    let out = run(&["spectrum", "--shape", "chain", "--dims", "9", "--model", "heisenberg"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let rows = block_rows(&text, "index,eigenvalue");
    assert_eq!(rows.len(), 512);
    let levels = block_rows(&text, "value,multiplicity");
    let total: usize = levels
        .iter()
        .map(|r| r.rsplit(',').next().unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 512);
}

#[test]
fn permutation_model_on_the_complete_nine_graph_has_five_levels() {
    let out = run(&["spectrum", "--shape", "complete", "--dims", "9", "--model", "permutation"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let levels = block_rows(&stdout(&out), "value,multiplicity");
    assert_eq!(levels.len(), 5);
}

#[test]
fn walk_on_the_periodic_cube_has_four_levels() {
    let out = run(&["spectrum", "--shape", "grid", "--dims", "3x3x3", "--model", "walk"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let levels = block_rows(&stdout(&out), "value,multiplicity");
    assert_eq!(levels.len(), 4);
}

#[test]
fn unknown_flags_exit_with_code_2() {
    let out = run(&["spectrum", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_shape_exits_with_code_2() {
    let out = run(&["spectrum", "--shape", "pentagon"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown shape"));
}

#[test]
fn capacity_overflow_exits_with_code_3() {
    let out = run(&["spectrum", "--shape", "chain", "--dims", "21"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn env_var_overrides_the_dimension_cap() {
    let out = spinnet(&["spectrum", "--shape", "chain", "--dims", "7"])
        .env("SPINNET_MAX_DIM", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "cap 100 must reject 2^7");

    let out = spinnet(&["spectrum", "--shape", "chain", "--dims", "7"])
        .env("SPINNET_MAX_DIM", "128")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "cap 128 must admit 2^7");
}

#[test]
fn bad_env_var_exits_with_code_2() {
    let out = spinnet(&["spectrum", "--shape", "chain", "--dims", "5"])
        .env("SPINNET_MAX_DIM", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table1_check_reports_the_known_link_discrepancy() {
    // one reference row records 59 links where hole removal leaves 58,
    // so the self-test must fail and say which row
    let out = run(&["table1", "--check"]);
    assert_eq!(out.status.code(), Some(5));
    let err = stderr(&out);
    assert!(err.contains("3x3x3"), "stderr: {err}");
    assert!(err.contains("58"), "stderr: {err}");
    assert!(err.contains("59"), "stderr: {err}");
}

#[test]
fn table1_emits_all_twelve_rows() {
    let out = run(&["table1", "--format", "csv"]);
    assert!(out.status.success());
    let rows = block_rows(&stdout(&out), "shape,holes,links,distinct");
    assert_eq!(rows.len(), 12);
    assert!(rows[0].starts_with("1x25,none,25,13"));
}

#[test]
fn verify_passes_at_small_sizes() {
    let out = run(&["verify", "--n-max", "4", "--m-max", "2"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("result: all checks passed"));
}

#[test]
fn sweep_rows_are_deterministic_under_a_master_seed() {
    let args = [
        "sweep-links", "--n", "5", "--model", "permutation", "--p-grid", "0.5",
        "--trials", "3", "--seed", "7",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "stderr: {}", stderr(&first));
    assert_eq!(stdout(&first), stdout(&second));
    let rows = block_rows(&stdout(&first), "p,seed,links,distinct");
    assert_eq!(rows.len(), 3);
}

#[test]
fn table_holes_sweep_reproduces_the_ring_rows() {
    let out = run(&["sweep-links", "--table-holes", "--table-shape", "1x25", "--format", "csv"]);
    assert!(out.status.success());
    let rows = block_rows(&stdout(&out), "shape,holes,links,distinct");
    let pairs: Vec<(usize, usize)> = rows
        .iter()
        .map(|r| {
            let mut parts = r.rsplit(',');
            let distinct = parts.next().unwrap().parse().unwrap();
            let links = parts.next().unwrap().parse().unwrap();
            (links, distinct)
        })
        .collect();
    assert_eq!(pairs, vec![(25, 13), (23, 25), (21, 21), (19, 17)]);
}

#[test]
fn spectrum_files_are_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let base_a = dir.path().join("a");
    let base_b = dir.path().join("b");
    for base in [&base_a, &base_b] {
        let out = run(&[
            "spectrum", "--shape", "random", "--dims", "6", "--p", "0.5", "--seed", "11",
            "--model", "permutation", "--out", base.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "stderr: {}", stderr(&out));
    }
    for suffix in [".spectrum.csv", ".levels.csv"] {
        let a = std::fs::read(dir.path().join(format!("a{suffix}"))).unwrap();
        let b = std::fs::read(dir.path().join(format!("b{suffix}"))).unwrap();
        assert_eq!(a, b, "{suffix} differs between identical runs");
    }
}

#[test]
fn lattice_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.json");
    let save = run(&[
        "lattice", "--shape", "grid", "--dims", "5x5", "--holes", "(1,2);(2,4)",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(save.status.success(), "stderr: {}", stderr(&save));
    let load = run(&["lattice", "--load", path.to_str().unwrap()]);
    assert!(load.status.success());
    assert!(stdout(&load).contains("25 sites, 42 links, 2 holes"));
}

#[test]
fn emit_matrix_writes_the_walk_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("walk.csv");
    let out = run(&[
        "spectrum", "--shape", "chain", "--dims", "5", "--model", "walk",
        "--emit-matrix", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("dimension,5"));
    assert!(text.contains("5.0000000000000000e-1"));
}
