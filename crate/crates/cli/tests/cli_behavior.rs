//! End-to-end CLI behavior: exit codes, output shapes, file-based
//! algebras, and determinism.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_lie-ideal"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn exit_code_2_on_generator_syntax_error() {
    for gens in ["x +", "y1", "2*", "[1, 2"] {
        let (_, stderr, code) = run(&["ideal", "--algebra", "gl2", "--char", "2", "--gens", gens]);
        assert_eq!(code, 2, "gens = '{gens}', stderr = {stderr}");
        assert!(stderr.contains("error:"));
    }
}

#[test]
fn exit_code_3_on_generator_outside_algebra() {
    for gens in ["x9", "x0", "[1, 0, 0]"] {
        let (_, _, code) = run(&["ideal", "--algebra", "gl2", "--char", "2", "--gens", gens]);
        assert_eq!(code, 3, "gens = '{gens}'");
    }
}

#[test]
fn exit_code_4_on_inconclusive_with_results_still_printed() {
    // Characteristic 0 cannot be enumerated; sl2 passes both quick checks.
    let (stdout, _, code) = run(&["simple", "--algebra", "sl2", "--char", "0"]);
    assert_eq!(code, 4);
    assert!(stdout.contains("inconclusive"));
    assert!(stdout.contains("derived subalgebra dimension = 3"));
    assert!(stdout.contains("center dimension = 0"));

    // Cap smaller than the 13 projective points of sl2 over F_3.
    let (stdout, _, code) = run(&["simple", "--algebra", "sl2", "--char", "3", "--cap", "5"]);
    assert_eq!(code, 4);
    assert!(stdout.contains("inconclusive"));
    assert!(stdout.contains("basis directions"));
}

#[test]
fn exit_code_5_on_bad_algebra_or_characteristic() {
    let (_, _, code) = run(&["table", "--algebra", "so3", "--char", "2"]);
    assert_eq!(code, 5);
    let (_, stderr, code) = run(&["table", "--algebra", "gl2", "--char", "4"]);
    assert_eq!(code, 5);
    assert!(stderr.contains("prime"));
    let (_, _, code) = run(&[
        "table",
        "--algebra",
        "file:/nonexistent.json",
        "--char",
        "2",
    ]);
    assert_eq!(code, 5);
    let (_, _, code) = run(&["table", "--algebra", "gl0", "--char", "2"]);
    assert_eq!(code, 5);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "ideal",
        "--algebra",
        "gl2",
        "--char",
        "3",
        "--gens",
        "x2",
        "--json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
}

#[test]
fn file_algebra_matches_builtin() {
    let definition = serde_json::json!({
        "name": "gl2-from-file",
        "matrix_size": 2,
        "basis": [
            [[1, 0], [0, 0]],
            [[0, 1], [0, 0]],
            [[0, 0], [1, 0]],
            [[0, 0], [0, 1]],
        ],
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gl2.json");
    std::fs::write(&path, definition.to_string()).unwrap();
    let file_arg = format!("file:{}", path.display());

    let from_file = run(&[
        "ideal",
        "--algebra",
        &file_arg,
        "--char",
        "2",
        "--gens",
        "x2",
    ]);
    let builtin = run(&["ideal", "--algebra", "gl2", "--char", "2", "--gens", "x2"]);
    assert_eq!(from_file, builtin);
}

#[test]
fn file_algebra_closure_failure_is_invalid_algebra() {
    let definition = serde_json::json!({
        "name": "open-span",
        "matrix_size": 2,
        "basis": [
            [[1, 0], [0, 0]],
            [[0, 1], [0, 0]],
            [[0, 0], [1, 0]],
        ],
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("open.json");
    std::fs::write(&path, definition.to_string()).unwrap();
    let file_arg = format!("file:{}", path.display());
    let (_, stderr, code) = run(&["table", "--algebra", &file_arg, "--char", "0"]);
    assert_eq!(code, 5);
    assert!(stderr.contains("[x2, x3]"), "stderr was: {stderr}");
}

#[test]
fn center_and_derived_output() {
    let (stdout, _, code) = run(&["center", "--algebra", "gl2", "--char", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        "Center = {x1 + x4} with dimension = 1 and char(K)=0"
    );

    let (stdout, _, code) = run(&["derived", "--algebra", "gl2", "--char", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Depth = 0 ->"));
    assert!(
        stdout.contains("Derived subalgebra = {x1 - x4, x2, x3} with dimension = 3 and char(K)=0")
    );
}

#[test]
fn simple_command_verdicts() {
    let (stdout, _, code) = run(&["simple", "--algebra", "sl2", "--char", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "simple (13 candidates tested)");

    let (stdout, _, code) = run(&["simple", "--algebra", "gl2", "--char", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("not simple"));
    assert!(stdout.contains("x1 + x4"));

    // The worker count must not change the verdict or the output.
    let single = run(&["simple", "--algebra", "sl2", "--char", "3"]);
    let multi = run(&[
        "simple",
        "--algebra",
        "sl2",
        "--char",
        "3",
        "--threads",
        "4",
    ]);
    assert_eq!(single, multi);
}

#[test]
fn gl2_char0_table_cells() {
    let (stdout, _, code) = run(&["table", "--algebra", "gl2", "--char", "0"]);
    assert_eq!(code, 0);
    let cells: Vec<Vec<&str>> = stdout
        .lines()
        .map(|line| {
            line.split("  ")
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .collect()
        })
        .collect();
    let expected = vec![
        vec!["0", "x2", "-x3", "0"],
        vec!["-x2", "0", "x1 - x4", "x2"],
        vec!["x3", "-x1 + x4", "0", "-x3"],
        vec!["0", "-x2", "x3", "0"],
    ];
    assert_eq!(cells, expected);
}

#[test]
fn table_text_and_json() {
    let (stdout, _, code) = run(&["table", "--algebra", "diag2", "--char", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2);
    for line in stdout.lines() {
        assert!(
            line.split_whitespace().all(|cell| cell == "0"),
            "line: {line}"
        );
    }

    // Structure constants of gl2 mod 3: [x2, x3] = x1 + 2 x4.
    let (stdout, _, code) = run(&["table", "--algebra", "gl2", "--char", "3", "--json"]);
    assert_eq!(code, 0);
    let envelope: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(envelope["command"], "table");
    assert_eq!(envelope["algebra"]["name"], "gl2");
    assert_eq!(envelope["trace"], serde_json::Value::Null);
    let sc = &envelope["result"]["structure_constants"];
    assert_eq!(sc[1][2], serde_json::json!([1, 0, 0, 2]));
    assert_eq!(sc[2][1], serde_json::json!([2, 0, 0, 1]));
    for i in 0..4 {
        assert_eq!(sc[i][i], serde_json::json!([0, 0, 0, 0]));
    }
}

#[test]
fn zero_generator_gives_the_zero_ideal() {
    let (stdout, _, code) = run(&["ideal", "--algebra", "gl2", "--char", "5", "--gens", "0"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "Depth = 0 -> {}");
    assert_eq!(lines[1], "Ideal <0> = {} with dimension = 0 and char(K)=5");
}
