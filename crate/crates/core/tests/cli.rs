//! Golden tests for the command-line tool: frozen bytes on standard
//! output, diagnostics on standard error, and the 0/1/2 exit contract
//! (success / validation failure / parse-or-usage error).

use std::io::Write as _;
use std::process::{Command, Stdio};

const GOLDEN_DIAGRAM: &str = "3 8 rows=1,3,6\n++00+\n++0+\n0+";
const GOLDEN_NECKLACE: &str = "136,236,367,467,678,678,178,168";
const EXCHANGE_NECKLACE: &str = "1247,2347,3478,4678,5678,4678,1478,1478";
const EXCHANGE_DIAGRAM: &str = "4 8 rows=1,2,4,7\n+00+\n++0+\n00+\n0";

const GOLDEN_DIAGRAM_JSON: &str =
    r#"{"k":3,"n":8,"rows":[1,3,6],"plus":[[1,2],[1,7],[1,8],[3,4],[3,7],[3,8],[6,7]]}"#;
const GOLDEN_NECKLACE_JSON: &str =
    r#"{"k":3,"n":8,"terms":[[1,3,6],[2,3,6],[3,6,7],[4,6,7],[6,7,8],[6,7,8],[1,7,8],[1,6,8]]}"#;
const EXCHANGE_DIAGRAM_JSON: &str =
    r#"{"k":4,"n":8,"rows":[1,2,4,7],"plus":[[1,3],[1,8],[2,3],[2,6],[2,8],[4,5]]}"#;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run_with(args: &[&str], stdin_data: Option<&str>, envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_positroid"));
    cmd.args(args)
        .env_remove("POSITROID_ENUM_MAX_N")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .stdin(if stdin_data.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        });
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("the binary spawns");
    if let Some(data) = stdin_data {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(data.as_bytes())
            .expect("stdin accepts the input");
    }
    let out = child.wait_with_output().expect("the binary finishes");
    Run {
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        code: out.status.code().unwrap_or(-1),
    }
}

fn run(args: &[&str], stdin_data: &str) -> Run {
    run_with(args, Some(stdin_data), &[])
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

#[test]
fn le2gn_text_golden() {
    let r = run(&["le2gn"], GOLDEN_DIAGRAM);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, format!("{GOLDEN_NECKLACE}\n"));
    assert!(r.stderr.is_empty());
}

#[test]
fn le2gn_json_golden() {
    let r = run(&["le2gn", "--format", "json"], GOLDEN_DIAGRAM_JSON);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, format!("{GOLDEN_NECKLACE_JSON}\n"));
}

#[test]
fn le2gn_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.txt");
    std::fs::write(&path, GOLDEN_DIAGRAM).unwrap();
    let r = run_with(&["le2gn", path.to_str().unwrap()], None, &[]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, format!("{GOLDEN_NECKLACE}\n"));
}

#[test]
fn le2gn_rejects_invalid_fillings() {
    let r = run(&["le2gn"], "2 4 rows=1,2\n0+\n+0");
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    assert!(
        r.stderr.contains("not a valid Le diagram"),
        "stderr: {}",
        r.stderr
    );
    assert!(
        r.stderr
            .contains("violation: + at (1, 3) and + at (2, 4) force + at (2, 3)"),
        "stderr: {}",
        r.stderr
    );
}

#[test]
fn gn2le_text_golden() {
    let r = run(&["gn2le"], EXCHANGE_NECKLACE);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, format!("{EXCHANGE_DIAGRAM}\n"));
}

#[test]
fn gn2le_json_golden() {
    let necklace_json = r#"{"k":4,"n":8,"terms":[[1,2,4,7],[2,3,4,7],[3,4,7,8],[4,6,7,8],[5,6,7,8],[4,6,7,8],[1,4,7,8],[1,4,7,8]]}"#;
    let r = run(&["gn2le", "--format", "json"], necklace_json);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, format!("{EXCHANGE_DIAGRAM_JSON}\n"));
}

#[test]
fn gn2le_rejects_unlawful_necklaces() {
    // lenient axiom failure: index 2 is present but never exchanged lawfully
    let r = run(&["gn2le"], "12,12,34,12");
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("error:"), "stderr: {}", r.stderr);
}

#[test]
fn conversions_invert_each_other() {
    let there = run(&["le2gn"], GOLDEN_DIAGRAM);
    let back = run(&["gn2le"], there.stdout.trim_end());
    assert_eq!(back.code, 0);
    assert_eq!(back.stdout, format!("{GOLDEN_DIAGRAM}\n"));
}

// ---------------------------------------------------------------------------
// Validation and dimension
// ---------------------------------------------------------------------------

#[test]
fn validate_le_reports_on_stdout() {
    let r = run(&["validate-le"], GOLDEN_DIAGRAM);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));

    let r = run(&["validate-le"], "2 4 rows=1,2\n0+\n+0");
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "invalid\nviolation: + at (1, 3) and + at (2, 4) force + at (2, 3)\n"
    );
}

#[test]
fn validate_le_json_report() {
    let r = run(&["validate-le", "--format", "json"], GOLDEN_DIAGRAM_JSON);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "{\"ok\":true,\"out_of_shape\":[],\"violations\":[]}\n"
    );

    let bad = r#"{"k":2,"n":4,"rows":[1,2],"plus":[[1,3],[2,4]]}"#;
    let r = run(&["validate-le", "--format", "json"], bad);
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "{\"ok\":false,\"out_of_shape\":[],\"violations\":[{\"northeast\":[1,3],\"southwest\":[2,4],\"missing\":[2,3]}]}\n"
    );
}

#[test]
fn validate_gn_lenient_and_strict() {
    let r = run(&["validate-gn"], "34,34,34,34");
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));

    let r = run(&["validate-gn", "--strict"], "34,34,34,34");
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "invalid\naxiom failure at 3: {3,4} -> {3,4}\naxiom failure at 4: {3,4} -> {3,4}\n"
    );

    // the exchange example fails strictly exactly at index 7
    let r = run(&["validate-gn", "--strict"], EXCHANGE_NECKLACE);
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "invalid\naxiom failure at 7: {1,4,7,8} -> {1,4,7,8}\n"
    );
    let r = run(&["validate-gn"], EXCHANGE_NECKLACE);
    assert_eq!(r.code, 0);
}

#[test]
fn validate_gn_json_report() {
    let r = run(
        &["validate-gn", "--strict", "--format", "json"],
        r#"{"k":2,"n":4,"terms":[[3,4],[3,4],[3,4],[3,4]]}"#,
    );
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "{\"ok\":false,\"strictness\":\"strict\",\"failures\":[{\"index\":3,\"term\":[3,4],\"next\":[3,4]},{\"index\":4,\"term\":[3,4],\"next\":[3,4]}]}\n"
    );
}

#[test]
fn dim_prints_the_plus_count() {
    let r = run(&["dim"], GOLDEN_DIAGRAM);
    assert_eq!((r.code, r.stdout.as_str()), (0, "7\n"));

    let r = run(&["dim", "--format", "json"], GOLDEN_DIAGRAM_JSON);
    assert_eq!((r.code, r.stdout.as_str()), (0, "{\"dimension\":7}\n"));

    let r = run(&["dim"], "2 4 rows=1,2\n0+\n+0");
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

#[test]
fn render_canonicalizes() {
    // trailing blank lines and an omitted empty row are both normalized
    let r = run(&["render"], "2 4 rows=1,4\n+0\n\n");
    assert_eq!((r.code, r.stdout.as_str()), (0, "2 4 rows=1,4\n+0\n"));

    // JSON in, JSON out
    let r = run(&["render", "--format", "json"], GOLDEN_DIAGRAM_JSON);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (0, format!("{GOLDEN_DIAGRAM_JSON}\n").as_str())
    );
}

#[test]
fn render_ascii_art_golden() {
    let expected = "\
+---+---+---+---+---+
|+  |+  |0  |0 3|+ 2| 1
+---+---+---+---+---+
                  2
|+  |+ 6|0 5|+ 4| 3
+---+---+---+---+
          5   4
|0 8|+ 7| 6
+---+---+
  8   7
";
    let r = run(&["render", "--ascii-art"], GOLDEN_DIAGRAM);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, expected);

    // the picture is the same regardless of the input wire format
    let r = run(
        &["render", "--ascii-art", "--format", "json"],
        GOLDEN_DIAGRAM_JSON,
    );
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, expected);
}

#[test]
fn render_does_not_validate() {
    // an invalid filling still renders; validation is a separate command
    let r = run(&["render"], "2 4 rows=1,2\n0+\n+0");
    assert_eq!((r.code, r.stdout.as_str()), (0, "2 4 rows=1,2\n0+\n+0\n"));
}

// ---------------------------------------------------------------------------
// Enumeration and the round-trip certificate
// ---------------------------------------------------------------------------

#[test]
fn enumerate_le_text_blocks() {
    let r = run_with(&["enumerate", "--k", "1", "--n", "2"], None, &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "1 2 rows=1\n0\n\n1 2 rows=1\n+\n\n1 2 rows=2\n\n");
}

#[test]
fn enumerate_gn_one_per_line() {
    let r = run_with(
        &["enumerate", "--k", "1", "--n", "2", "--what", "gn"],
        None,
        &[],
    );
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "1,1\n1,2\n2,2\n");
}

#[test]
fn enumerate_shapes_headers() {
    let r = run_with(
        &["enumerate", "--k", "1", "--n", "3", "--what", "shapes"],
        None,
        &[],
    );
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "1 3 rows=1\n1 3 rows=2\n1 3 rows=3\n");
}

#[test]
fn enumerate_count_only() {
    let r = run_with(
        &["enumerate", "--k", "2", "--n", "4", "--count-only"],
        None,
        &[],
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "33\n"));

    let r = run_with(
        &[
            "enumerate",
            "--k",
            "2",
            "--n",
            "4",
            "--count-only",
            "--format",
            "json",
        ],
        None,
        &[],
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "{\"count\":33}\n"));
}

#[test]
fn enumerate_json_array() {
    let r = run_with(
        &[
            "enumerate",
            "--k",
            "1",
            "--n",
            "2",
            "--what",
            "gn",
            "--format",
            "json",
        ],
        None,
        &[],
    );
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "[{\"k\":1,\"n\":2,\"terms\":[[1],[1]]},{\"k\":1,\"n\":2,\"terms\":[[1],[2]]},{\"k\":1,\"n\":2,\"terms\":[[2],[2]]}]\n"
    );
}

#[test]
fn enumerate_guard_refuses_large_ground_sets() {
    let r = run_with(&["enumerate", "--k", "1", "--n", "9"], None, &[]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(
        r.stderr.contains("enumeration guard"),
        "stderr: {}",
        r.stderr
    );
    assert!(
        r.stderr.contains("POSITROID_ENUM_MAX_N"),
        "stderr: {}",
        r.stderr
    );
}

#[test]
fn enumerate_guard_can_be_raised() {
    let r = run_with(
        &["enumerate", "--k", "1", "--n", "9", "--count-only"],
        None,
        &[("POSITROID_ENUM_MAX_N", "9")],
    );
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (0, "511\n"),
        "stderr: {}",
        r.stderr
    );
}

#[test]
fn enumerate_guard_rejects_garbage_overrides() {
    let r = run_with(
        &["enumerate", "--k", "1", "--n", "2"],
        None,
        &[("POSITROID_ENUM_MAX_N", "many")],
    );
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("POSITROID_ENUM_MAX_N"),
        "stderr: {}",
        r.stderr
    );
}

#[test]
fn roundtrip_text_block() {
    let r = run_with(&["roundtrip", "--k", "2", "--n", "4"], None, &[]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(
        r.stdout,
        "type: (2, 4)\n\
         shapes: 6\n\
         le diagrams: 33\n\
         necklaces: 33\n\
         le roundtrip failures: 0\n\
         necklace roundtrip failures: 0\n\
         invariant failures: 0\n\
         result: PASS\n"
    );
}

#[test]
fn roundtrip_json_report() {
    let expected = "{\"ok\":true,\"k\":1,\"n\":2,\"shapes\":2,\"le_diagrams\":3,\"necklaces\":3,\"le_roundtrip_failures\":[],\"necklace_roundtrip_failures\":[],\"invariant_failures\":[]}\n";
    let r = run_with(&["roundtrip", "--k", "1", "--n", "2", "--json"], None, &[]);
    assert_eq!((r.code, r.stdout.as_str()), (0, expected));

    // --format json selects the same encoding
    let r = run_with(
        &["roundtrip", "--k", "1", "--n", "2", "--format", "json"],
        None,
        &[],
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, expected));
}

#[test]
fn roundtrip_guard_matches_enumerate() {
    let r = run_with(&["roundtrip", "--k", "1", "--n", "9"], None, &[]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("POSITROID_ENUM_MAX_N"),
        "stderr: {}",
        r.stderr
    );
}

// ---------------------------------------------------------------------------
// Error handling
// ---------------------------------------------------------------------------

#[test]
fn parse_errors_exit_with_2() {
    let r = run(&["le2gn"], "not a diagram");
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(
        r.stderr.starts_with("error: line 1"),
        "stderr: {}",
        r.stderr
    );

    let r = run(&["gn2le"], "136,,236");
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("line 1, column 5"),
        "stderr: {}",
        r.stderr
    );

    let r = run(&["le2gn", "--format", "json"], "{\"k\":3");
    assert_eq!(r.code, 2);
}

#[test]
fn missing_files_exit_with_2() {
    let r = run_with(&["le2gn", "/no/such/file.txt"], None, &[]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("/no/such/file.txt"),
        "stderr: {}",
        r.stderr
    );
}

#[test]
fn unknown_flags_exit_with_2() {
    let r = run_with(&["le2gn", "--frobnicate"], None, &[]);
    assert_eq!(r.code, 2);

    let r = run_with(&["conjugate"], None, &[]);
    assert_eq!(r.code, 2);
}

#[test]
fn mixed_text_and_json_input_is_an_error() {
    // text input under --format json is a parse error, not a crash
    let r = run(&["le2gn", "--format", "json"], GOLDEN_DIAGRAM);
    assert_eq!(r.code, 2);
    // and JSON input under the text grammar likewise
    let r = run(&["le2gn"], GOLDEN_DIAGRAM_JSON);
    assert_eq!(r.code, 2);
}
