mod common;

use std::io::Cursor;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use symcert::cli::{self, parse_expression, Report, EXIT_INPUT, EXIT_OK, EXIT_REFUTED};
use symcert::poly::{elem_sym, power_sum, rat, ratio};
use symcert::symfun::{from_power_sums, to_power_sums, PowerSumRep};
use symcert::{Exponent, Poly};

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["symcert"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8"),
        String::from_utf8(err).expect("utf-8"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_stdin(args, "")
}

fn report(args: &[&str]) -> (i32, Report) {
    let (code, out, err) = run(args);
    let r = Report::from_json(&out).unwrap_or_else(|e| panic!("bad report ({e}): {out}{err}"));
    (code, r)
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let text = std::fs::read_to_string(path).expect("schema file");
    let schema: Value = serde_json::from_str(&text).expect("schema json");
    jsonschema::validator_for(&schema).expect("valid schema")
}

fn assert_valid(v: &jsonschema::Validator, json: &str) {
    let value: Value = serde_json::from_str(json).expect("json");
    let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}\n{json}");
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn decompose_sum_of_cubes() {
    let (code, r) = report(&["decompose", "--nvars", "2", "x1^3 + x2^3"]);
    assert_eq!(code, EXIT_OK);
    let g = parse_expression(&r.decomposition[0].g, 2).unwrap();
    // (3·Z1·Z2 − Z1^3)/2 read back with Z_i = p_i
    let p1 = power_sum(2, 1);
    let expect = &(&p1 * &power_sum(2, 2)).scale(&ratio(3, 2)) - &p1.pow(3).scale(&ratio(1, 2));
    assert_eq!(g, expect);
    assert_eq!(r.decomposition[0].g, "-1/2*p1^3 + 3/2*p1*p2");
}

#[test]
fn exit_code_table() {
    let cases: &[(&[&str], i32)] = &[
        (&["check-nonneg", "--nvars", "3", "3*p4 - p2^2"], EXIT_OK),
        (&["check-nonneg", "--nvars", "2", "p1"], EXIT_REFUTED),
        (&["check-nonneg", "--nvars", "3", "p2"], EXIT_OK),
        (&["check-empty", "--nvars", "4", "p2 = 1"], EXIT_REFUTED),
        (&["check-empty", "--nvars", "3", "p2 = -1"], EXIT_OK),
        (&["check-empty", "--nvars", "2", "p1 = 0; p2 = 2"], EXIT_REFUTED),
        (&["decompose", "--nvars", "2", "x1 + y2"], EXIT_INPUT),
        (&["decompose", "--nvars", "2", "x1^2 + x2"], EXIT_INPUT),
        (&["decompose", "--nvars", "2", "x3"], EXIT_INPUT),
        (&["decompose", "--nvars", "2", "x1^-1"], EXIT_INPUT),
        (&["decompose", "/nonexistent/input.txt"], EXIT_INPUT),
        (&["check-nonneg", "--nvars", "2", "p1 = 0"], EXIT_INPUT),
        (&["check-empty", "--nvars", "2", "p1"], EXIT_INPUT),
        (&["frobnicate", "x"], EXIT_INPUT),
        (&["check-nonneg", "--nvars", "2", "--box", "-1", "p2"], EXIT_INPUT),
        (&["--help"], EXIT_OK),
    ];
    for (args, expected) in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, *expected, "{args:?}: {err}");
    }
}

#[test]
fn refutation_reports_corner_witness() {
    let (code, r) = report(&["check-nonneg", "--nvars", "2", "p1"]);
    assert_eq!(code, EXIT_REFUTED);
    let s = r.search.unwrap();
    assert_eq!(s.witness.unwrap(), vec![-2.0, -2.0]);
    assert_eq!(s.value, Some(-4.0));
}

#[test]
fn non_symmetric_error_names_the_permutation() {
    let (code, out, err) = run(&["decompose", "--nvars", "3", "x1*x2 + x3"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("not symmetric") && err.contains("->"), "{err}");
}

#[test]
fn syntax_errors_have_positions() {
    let (_, _, err) = run(&["decompose", "--nvars", "2", "x1 + y2"]);
    assert!(err.contains("line 1, column 6"), "{err}");
    let path = fixture("bad.txt", "nvars: 2\n# comment\np1 >= 0\np2 + * 1 = 0\n");
    let (code, _, err) = run(&["check-empty", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 4, column 6"), "{err}");
}

#[test]
fn system_file_and_stdin_agree() {
    let text = "# circle meets line\nnvars: 2\np1 = 0\np2 - 2 = 0\n";
    let path = fixture("system.txt", text);
    let (code_file, from_file) = report(&["check-empty", path.to_str().unwrap()]);
    let (code_stdin, out, _) = run_with_stdin(&["check-empty", "-"], text);
    let from_stdin = Report::from_json(&out).unwrap();
    assert_eq!(code_file, EXIT_REFUTED);
    assert_eq!(code_file, code_stdin);
    assert_eq!(from_file.input_sha256, from_stdin.input_sha256);
    assert_eq!(from_file.search, from_stdin.search);
    let w = from_file.search.unwrap().witness.unwrap();
    assert!((w[0].abs() - 1.0).abs() < 1e-8 && (w[0] + w[1]).abs() < 1e-8);
}

#[test]
fn sparsity_and_reduce_reports() {
    let (code, r) = report(&["sparsity", "--nvars", "4", "p2^2 - 3*p4 + p2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.support, Some(vec![2, 4]));
    assert_eq!(r.gradient_support, Some(vec![2, 4]));

    let (code, r) = report(&["reduce", "--nvars", "3", "p4 - p1^4"]);
    assert_eq!(code, EXIT_OK);
    let plan = r.plan.unwrap();
    assert_eq!(plan.bound, 2);
    assert_eq!(plan.cells.unwrap(), vec!["(3)", "(2,1)"]);

    let (_, r) = report(&["reduce", "--nvars", "4", "--mode", "sparse", "p2 - 1 = 0; p4 - 1 >= 0"]);
    let plan = r.plan.unwrap();
    assert!(plan.orthant_restricted);
    assert_eq!(plan.bound, 2);
}

#[test]
fn bound_override_is_recorded() {
    let (code, r) = report(&["reduce", "--nvars", "4", "--bound-override", "3", "3*p4 - p2^2"]);
    assert_eq!(code, EXIT_OK);
    let plan = r.plan.unwrap();
    assert_eq!(plan.bound, 3);
    assert_eq!(plan.bound_override, Some(3));
    assert!(plan.notes.iter().any(|n| n.contains("overridden")));
}

#[test]
fn text_format_summarizes() {
    let (code, out, _) = run(&["check-nonneg", "--nvars", "3", "--format", "text", "3*p4 - p2^2"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with("check-nonneg: no counterexample found on A_2 (bound 2, 2 cells)"),
        "{out}"
    );
}

#[test]
fn reports_round_trip_and_match_schema() {
    let v = schema();
    let invocations: &[&[&str]] = &[
        &["decompose", "--nvars", "3", "p1^2 - 2*p2"],
        &["sparsity", "--nvars", "3", "p1*p3"],
        &["reduce", "--nvars", "3", "--mode", "variety", "p2 - 1 = 0"],
        &["reduce", "--nvars", "3", "--mode", "half-degree-orthant", "p4 - p2"],
        &["check-nonneg", "--nvars", "3", "3*p4 - p2^2"],
        &["check-nonneg", "--nvars", "2", "p1"],
        &["check-empty", "--nvars", "4", "p2 = 1"],
        &["check-empty", "--nvars", "3", "p2 = -1"],
        &["check-empty", "--nvars", "3", "--no-oracle", "p2 - 4 > 0; 1 - p1 >= 0"],
    ];
    for args in invocations {
        let (_, out, err) = run(args);
        assert!(err.is_empty(), "{args:?}: {err}");
        assert_valid(&v, &out);
        let parsed = Report::from_json(&out).unwrap();
        assert_eq!(parsed.schema_version, cli::SCHEMA_VERSION);
        assert_eq!(Report::from_json(&parsed.to_json()).unwrap(), parsed);
        assert_eq!(parsed.to_json(), out.trim_end());
    }
}

/// Random expression text over the grammar.
fn random_expr(rng: &mut ChaCha8Rng, n: usize, depth: u32) -> String {
    if depth == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..4) {
            0 => format!("{}", rng.random_range(0..20)),
            1 => format!("{}/{}", rng.random_range(0..20), rng.random_range(1..6)),
            2 => format!("x{}", rng.random_range(1..=n)),
            _ => format!("p{}", rng.random_range(1..=n + 1)),
        };
    }
    let a = random_expr(rng, n, depth - 1);
    match rng.random_range(0..6) {
        0 => format!("{a} + {}", random_expr(rng, n, depth - 1)),
        1 => format!("{a} - {}", random_expr(rng, n, depth - 1)),
        2 => format!("{a}*{}", random_expr(rng, n, depth - 1)),
        3 => format!("({a})^{}", rng.random_range(0..3)),
        4 => format!("-({a})"),
        _ => format!("({a})"),
    }
}

#[test]
fn parser_round_trip_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let n = rng.random_range(1..=4);
        let text = random_expr(&mut rng, n, 4);
        let f = parse_expression(&text, n).unwrap_or_else(|e| panic!("{text}: {e}"));
        let printed = f.to_text("x");
        assert_eq!(parse_expression(&printed, n).unwrap(), f, "{text} -> {printed}");
    }
}

#[test]
fn parser_examples() {
    let x: Vec<Poly> = (0..3).map(|i| Poly::var(3, i)).collect();
    let s = &(&x[0] + &x[1]) + &x[2];
    let q = &(&x[0].pow(2) + &x[1].pow(2)) + &x[2].pow(2);
    assert_eq!(
        parse_expression("p1^2 - 2*p2", 3).unwrap(),
        &s.pow(2) - &q.scale(&rat(2))
    );
    assert_eq!(
        parse_expression("3/2*x1*x2 + 3/2*x1*x3 + 3/2*x2*x3", 3).unwrap(),
        elem_sym(3, 2).unwrap().scale(&ratio(3, 2))
    );
    let m = Poly::monomial(Exponent::new(vec![2, 1, 0]), ratio(-7, 3));
    assert_eq!(parse_expression("-7/3*x1^2*x2", 3).unwrap(), m);
}

#[test]
fn power_sum_text_reparses() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let n = rng.random_range(1..=4);
        let d = rng.random_range(0..=5);
        let f = common::random_symmetric(&mut rng, n, d);
        let rep = to_power_sums(&f).unwrap();
        let g = parse_expression(&rep.to_text(), n).unwrap();
        assert_eq!(g, f, "p-text evaluates back to f");
        assert_eq!(from_power_sums(&PowerSumRep::new(rep.g().clone())), f);
    }
}
