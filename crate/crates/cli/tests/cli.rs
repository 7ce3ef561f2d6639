use std::path::PathBuf;
use std::process::Command;

use continuum_cli::{run, CommandResult, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

const GOLDEN: &[(&[&str], &str)] = &[
    (
        &["coverings", "--exp", "a,b,c", "--base", "0,1"],
        "coverings_abc_01.out",
    ),
    (
        &["coverings", "--exp", "x,y", "--base", "p,q,r"],
        "coverings_xy_pqr.out",
    ),
    (&["expand", "3/8"], "expand_3_8.out"),
    (&["expand", "1/3"], "expand_1_3.out"),
    (&["expand", "1"], "expand_1.out"),
    (&["classify", "3/8"], "classify_3_8.out"),
    (&["classify", "1/3"], "classify_1_3.out"),
    (&["classify", "0"], "classify_0.out"),
    (&["stream", "value", "(01)"], "stream_value_01.out"),
    (&["stream", "canon", "10(11)"], "stream_canon_10_11.out"),
    (&["stream", "member", "0(1)"], "stream_member_0_1.out"),
    (&["stream", "dual", "1(0)"], "stream_dual_1_0.out"),
    (&["stream", "dual", "(01)"], "stream_dual_01.out"),
    (&["map", "forward", "1(0)"], "map_forward_1_0.out"),
    (&["map", "forward", "001(0)"], "map_forward_001_0.out"),
    (&["map", "inverse", "0(1)"], "map_inverse_0_1.out"),
    (&["map", "inverse", "(1)"], "map_inverse_1.out"),
    (
        &["laws", "--check", "all", "--a", "2", "--b", "2", "--c", "3"],
        "laws_all_2_2_3.out",
    ),
    (&["duals", "7"], "duals_7.out"),
    (
        &["trace", "--mu-max", "8", "--format", "json"],
        "trace_mu8.json",
    ),
    (
        &["trace", "--mu-max", "4", "--format", "text"],
        "trace_mu4.txt",
    ),
    (
        &["union", "--left", "a,b", "--right", "c"],
        "union_ab_c.out",
    ),
    (
        &["union", "--left", "a", "--right", "a", "--tagged"],
        "union_tagged_a_a.out",
    ),
    (
        &["product", "--left", "a,b", "--right", "0,1"],
        "product_ab_01.out",
    ),
    (&["cardinal", "pow", "3", "2"], "cardinal_pow_3_2.out"),
];

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run_args(args: &[&str]) -> CommandResult {
    run(std::iter::once("continuum").chain(args.iter().copied()))
}

#[test]
fn golden_outputs() {
    for (args, file) in GOLDEN {
        let r = run_args(args);
        assert_eq!(r.exit_code, EXIT_OK, "{args:?}: {}", r.stderr);
        assert_eq!(r.stdout, golden(file), "{args:?}");
        assert!(r.stderr.is_empty());
    }
}

#[test]
fn binary_matches_library_byte_for_byte() {
    for (args, file) in GOLDEN.iter().take(6) {
        let out = Command::new(env!("CARGO_BIN_EXE_continuum"))
            .args(*args)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file));
    }
}

#[test]
fn domain_errors_exit_2_with_one_line() {
    let cases: &[(&[&str], &str)] = &[
        (&["expand", "3/2"], "OutOfRange"),
        (&["classify", "5/4"], "OutOfRange"),
        (&["expand", "1/0"], "ParseError"),
        (&["stream", "value", "01("], "ParseError"),
        (&["map", "forward", "0(1)"], "DomainViolation"),
        (
            &["union", "--left", "a,b", "--right", "b"],
            "DisjointnessViolation",
        ),
        (
            &[
                "laws", "--check", "CURRY", "--a", "9", "--b", "9", "--c", "9",
            ],
            "Overflow",
        ),
        (
            &[
                "laws", "--check", "CURRY", "--a", "3", "--b", "3", "--c", "4",
            ],
            "BudgetExceeded",
        ),
        (
            &["laws", "--check", "POW", "--a", "1", "--b", "1", "--c", "1"],
            "ParseError",
        ),
    ];
    for (args, name) in cases {
        let r = run_args(args);
        assert_eq!(r.exit_code, EXIT_DOMAIN, "{args:?}");
        assert!(r.stdout.is_empty());
        assert_eq!(r.stderr.lines().count(), 1, "{args:?}: {}", r.stderr);
        assert_eq!(r.stderr.split(':').next(), Some(*name), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["frobnicate"][..],
        &["coverings", "--exp", "a"],
        &["expand"],
        &["stream", "weigh", "(1)"],
        &["trace", "--mu-max", "8", "--format", "xml"],
        &["trace", "--mu-max", "0"],
        &["expand", "1/2", "--verbose"],
    ] {
        let r = run_args(args);
        assert_eq!(r.exit_code, EXIT_USAGE, "{args:?}");
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_continuum");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["expand", "3/2"]), Some(2));
    assert_eq!(code(&["nope"]), Some(1));
    assert_eq!(code(&["duals", "3"]), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["trace", "--mu-max", "6", "--format", "json"];
    assert_eq!(run_args(&args), run_args(&args));
}
