use std::io::Cursor;

use spcrystal_cli::run;

const EXAMPLE_SSOT: &str = "(1 1b)(1 1 1b)(2 1 2b)(2 1)";
const CLOSED_SSOT: &str = "(1 1)(2 2b)(1b)(1b)";
const CLOSED_MATRIX: &str = "0,1,0,1\n1,0,1,0\n0,1,0,0\n1,0,0,0\n";

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn call_with(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spcrystal").chain(args.iter().copied());
    let code = run(argv, &mut Cursor::new(stdin.as_bytes()), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn call(args: &[&str]) -> Run {
    call_with(args, "")
}

fn ok(args: &[&str]) -> String {
    let r = call(args);
    assert_eq!(r.code, 0, "{args:?}\n{}", r.err);
    r.out
}

#[test]
fn symmetric_matrix_insertion_gives_equal_tableaux() {
    let r = call_with(&["map", "phi-inv", "--trace"], "2,1,0,1\n1,0,1,0\n0,1,0,0\n1,0,0,0\n");
    assert_eq!(r.code, 0);
    let step0 = r.out.lines().find(|l| l.starts_with("0\t")).unwrap();
    assert_eq!(step0, "0\t1 1 1 1 2 4 / 2 3\t.");
}

#[test]
fn oscillating_tableau_weights() {
    let out = ok(&[
        "enumerate", "ssot", "--m", "4", "--g", "3", "--nu", "[3,1]", "--weight", "[2,3,3,2]", "--weights",
    ]);
    assert!(out.lines().any(|l| l == format!("{EXAMPLE_SSOT}\t[2,3,3,2]\t[1,0,0,1]")));
}

#[test]
fn operator_zero_lowers_twice_then_stops() {
    let base = ["crystal", "apply", "--op", "lower", "--index", "0", "--g", "3", "--input", EXAMPLE_SSOT];
    let once = ok(&base);
    assert_eq!(once, "(1 1 1b 1b)(1 1 1b)(2 1 2b)(2 1)\n");
    let mut thrice = base.to_vec();
    thrice.extend(["--times", "3"]);
    assert_eq!(ok(&thrice), "none\n");
}

#[test]
fn operator_two_in_both_directions() {
    let raise = ok(&["crystal", "apply", "--op", "raise", "--index", "2", "--g", "3", "--input", EXAMPLE_SSOT]);
    assert_eq!(raise, "(1 1b)(1 1 1b 1b)(1 1)(2 1)\n");
    let lower = ok(&["crystal", "apply", "--op", "f", "--index", "2", "--g", "3", "--input", EXAMPLE_SSOT]);
    assert_eq!(lower, "(1 1b)(1 1)(2 2 2b 2b)(2 1)\n");
}

#[test]
fn closed_tableau_to_matrix_and_back() {
    assert_eq!(ok(&["map", "phi", "--input", CLOSED_SSOT]), CLOSED_MATRIX);
    let r = call_with(&["map", "phi-inv"], CLOSED_MATRIX);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, format!("{CLOSED_SSOT}\n"));
}

#[test]
fn closed_tableau_to_king_tableau_and_back() {
    let king = "2 2b\n3 3\n3b 4\n4 4b\n";
    assert_eq!(ok(&["map", "psi-inv", "--m", "4", "--g", "2", "--input", CLOSED_SSOT]), king);
    let r = call_with(&["map", "psi", "--m", "4", "--g", "2"], king);
    assert_eq!(r.out, format!("{CLOSED_SSOT}\n"));
}

#[test]
fn insertion_deletion_table() {
    let r = call_with(&["map", "phi-inv", "--trace"], CLOSED_MATRIX);
    assert_eq!(r.code, 0);
    let want = "\
inverse column word\t1 2 1 3 2 4
step\tP\tV
0\t1 1 2 4 / 2 3\t.
1\t1 1 2 / 2 3\t1
2\t1 1 3 / 2\t1 1
3\t1 1 / 2\t1 1 / 2
4\t1 2\t1 2
5\t1\t1
6\t.\t.
result\t(1 1)(2 2b)(1b)(1b)
";
    assert_eq!(r.out, want);
}

#[test]
fn empty_shape_has_one_king_tableau() {
    assert_eq!(ok(&["enumerate", "king", "--mu", "[]", "--m", "3"]), ".\n\ncount 1\n");
}

#[test]
fn king_enumeration_count_matches_dimension() {
    let out = ok(&["enumerate", "king", "--mu", "[1]", "--m", "2"]);
    assert!(out.ends_with("count 4\n"));
}

#[test]
fn graph_exports() {
    let adj = ok(&["crystal", "graph", "--m", "1", "--g", "1", "--format", "adj"]);
    assert_eq!(adj, "() -0-> (1 1b)\n");
    let dot = ok(&["crystal", "graph", "--m", "1", "--g", "1"]);
    assert!(dot.starts_with("digraph crystal {\n"));
    assert!(dot.contains("v0 -> v2 [label=\"0\"];"));
}

#[test]
fn matrix_and_king_graphs_match_tableau_graph_sizes() {
    let count = |model: &str, mu: &str| {
        ok(&["crystal", "graph", "--model", model, "--m", "2", "--g", "2", "--mu", mu, "--format", "tsv"])
            .lines()
            .count()
    };
    assert_eq!(count("ssot", "[2,1]"), count("king", "[2,1]"));
    assert_eq!(count("ssot", "[2,2]"), count("matrix", "[2,2]"));
    let missing = call(&["crystal", "graph", "--model", "matrix", "--m", "2", "--g", "2", "--mu", "[2,1]"]);
    assert_eq!(missing.code, 3);
}

#[test]
fn decompose_ambient_crystal() {
    let out = ok(&["crystal", "decompose", "--m", "2", "--g", "1"]);
    let want = "# 10 vertices, 3 components\nweight\tshape\tmultiplicity\n[0,0]\t[]\t1\n[0,1]\t[1]\t1\n[1,1]\t[1,1]\t1\n";
    assert_eq!(out, want);
}

#[test]
fn skew_graph_uses_positive_indices() {
    let out = ok(&["crystal", "graph", "--m", "3", "--g", "1", "--lambda", "[1]", "--format", "adj"]);
    assert!(!out.is_empty());
    assert!(out.lines().all(|l| !l.contains(" -0-> ")));
    assert_eq!(
        call(&["crystal", "graph", "--m", "3", "--g", "1", "--lambda", "[1]", "--indices", "[0]"]).code,
        3
    );
}

#[test]
fn characters() {
    assert_eq!(ok(&["char", "chi", "--mu", "[1]", "--m", "1"]), "1 : [-1]\n1 : [1]\n");
    assert_eq!(
        ok(&["char", "chi", "--mu", "[2,1]", "--m", "2"]),
        ok(&["char", "chi", "--mu", "[2,1]", "--m", "2", "--king"])
    );
    assert_eq!(ok(&["char", "schur", "--mu", "[1,1]", "--m", "1"]), "1 : [0]\n");
}

#[test]
fn product_decomposition_table() {
    let out = ok(&["char", "decompose", "--lambda", "[1]", "--mu", "[1]", "--m", "2"]);
    let want = "# lambda=[1] mu=[1] m=2 mode=ASSERT\nnu\tlhs_count\trhs_coeff\tstatus\n[]\t1\t1\tok\n[1]\t0\t0\tok\n[1,1]\t1\t1\tok\n[2]\t1\t1\tok\n";
    assert_eq!(out, want);
}

#[test]
fn pieri_rules() {
    for rule in ["h", "e"] {
        let out = ok(&["char", "pieri", "--lambda", "[2,1]", "--k", "2", "--m", "3", "--rule", rule]);
        assert!(out.starts_with("nu\tcount\tcoefficient\tstatus\n"));
        assert!(out.lines().skip(1).all(|l| l.ends_with("\tok")), "{out}");
    }
}

#[test]
fn verify_smallest_configuration() {
    let r = call(&["verify", "all", "--m", "1", "--g", "1"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.lines().last().unwrap().starts_with("PASS"));
    assert!(r.out.lines().filter(|l| l.starts_with("FAIL")).count() == 0);
}

#[test]
fn verify_bijections_tsv() {
    let out = ok(&["verify", "bijections", "--m", "3", "--g", "2", "--format", "tsv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("check\tcases\tfailed\tstatus"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.ends_with("\t0\tPASS")));
}

#[test]
fn verify_conjecture_table() {
    let out = ok(&["verify", "conjecture", "--m", "2", "--max-size", "3", "--format", "tsv"]);
    assert!(out.starts_with("lambda\tmu\tm\tmode\tnu\tlhs_count\trhs_coeff\tstatus\n"));
    assert!(out.lines().filter(|l| l.contains("\tASSERT\t")).all(|l| l.ends_with("\tok")));
}

#[test]
fn verify_refuses_large_bounds() {
    let r = call(&["verify", "crystal", "--m", "4"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("refused"));
    assert_eq!(call(&["verify", "conjecture", "--max-size", "5"]).code, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["nonsense"]).code, 2);
    assert_eq!(call(&["crystal", "apply", "--op", "sideways", "--index", "0", "--g", "1"]).code, 2);
    assert_eq!(call(&["map", "psi", "--input", "1"]).code, 2);
    let bad = call(&["map", "phi", "--input", "(1 2)"]);
    assert_eq!(bad.code, 3);
    assert!(bad.err.starts_with("invalid input:"));
    let too_wide = call(&["crystal", "apply", "--op", "lower", "--index", "0", "--g", "1", "--input", "(1 1b)"]);
    assert_eq!(too_wide.code, 0);
    assert_eq!(too_wide.out, "none\n");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("spcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("king.txt");
    let r = call(&["enumerate", "king", "--mu", "[]", "--m", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), ".\n\ncount 1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_flag_reads_file() {
    let dir = std::env::temp_dir().join(format!("spcrystal-cli-in-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.ssot");
    std::fs::write(&path, format!("{CLOSED_SSOT}\n")).unwrap();
    assert_eq!(ok(&["map", "phi", "--input", path.to_str().unwrap()]), CLOSED_MATRIX);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let args = ["crystal", "graph", "--model", "king", "--m", "2", "--g", "2"];
    assert_eq!(ok(&args), ok(&args));
}
