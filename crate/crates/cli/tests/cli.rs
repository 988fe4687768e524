//! End-to-end behaviour of the `llt` binary.

use std::process::{Command, Output};

use llt::colorings::llt_poly;
use llt::{AreaSequence, Limits, StripDiagram, SymFunc};

fn llt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_llt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_text_table() {
    let o = llt(&["compute", "llt", "--area", "0,0,1,2", "--basis", "s"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "s[1,1,1,1]: q^3\ns[2,1,1]: q + q^2 + q^3\ns[2,2]: q + q^2\ns[3,1]: 1 + q + q^2\ns[4]: 1\n");
}

#[test]
fn compute_json_matches_library() {
    let o = llt(&["compute", "llt", "--area", "0,1,1,2", "--basis", "e", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let got: SymFunc = serde_json::from_value(v["value"].clone()).unwrap();
    let d = StripDiagram::unicellular(AreaSequence::new(vec![0, 1, 1, 2]).unwrap());
    assert_eq!(got, llt_poly(&d, &Limits::default()).unwrap());
    assert_eq!(v["form"], "plain");
}

#[test]
fn power_sum_basis_has_rational_coefficients() {
    let o = llt(&["compute", "llt", "--area", "0,0", "--basis", "p"]);
    assert_eq!(code(&o), 0);
    // e_1^2 = p_1^2.
    assert_eq!(stdout(&o), "p[1,1]: 1\n");
    let o = llt(&["compute", "llt", "--area", "0,1", "--basis", "p"]);
    assert_eq!(stdout(&o), "p[1,1]: 1/2 + 1/2q\np[2]: 1/2 - 1/2q\n");
}

#[test]
fn hall_littlewood_and_tilde() {
    let o = llt(&["compute", "hl", "--partition", "1,1", "--basis", "s"]);
    assert_eq!(stdout(&o), "s[1,1]: 1\ns[2]: q\n");
    let o = llt(&["compute", "gtilde", "--area", "0,1"]);
    assert_eq!(stdout(&o), "s[1,1]: q\ns[2]: 1\n");
}

#[test]
fn verify_reports() {
    let o = llt(&["verify", "conjecture", "--n", "3", "--strict", "all-corners"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("# llt verify conjecture --n 3 --strict all-corners\n"));
    assert!(text.contains("\nfailures: 0\n"));

    let o = llt(&["verify", "lee", "--n", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["instances"].as_u64().unwrap() as usize, lines.len() - 1);
    assert!(lines[..lines.len() - 1].iter().all(|l| l["pass"] == true && l["check"] == "lee"));
}

#[test]
fn verify_single_diagram() {
    let o = llt(&["verify", "corner", "--area", "0,0,1,1", "--strict", "1-2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("ok a=0,0,1,1 strict 1-2 corner 2-4 side G\n"));
    assert!(text.contains("instances: 2\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&llt(&["verify", "conjecture"])), 2);
    assert_eq!(code(&llt(&["verify", "no-such-check", "--n", "2"])), 2);
    assert_eq!(code(&llt(&["compute", "llt", "--area", "0,2"])), 2);
    assert_eq!(code(&llt(&["verify", "hl-relation", "--area", "0,1"])), 2);
    assert_eq!(code(&llt(&["compute", "llt", "--area", "0,1", "--threads", "0"])), 2);
}

#[test]
fn strict_edges_must_be_corners_unless_unchecked() {
    // (1,3) is a non-edge of (0,0,1) but not an outer corner.
    assert_eq!(code(&llt(&["compute", "llt", "--area", "0,0,1", "--strict", "1-3"])), 2);
    assert_eq!(code(&llt(&["compute", "lltc", "--area", "0,0,1", "--strict", "1-3", "--unchecked"])), 0);
    // Colorings of such a diagram are not symmetric, which is reported rather than computed.
    let o = llt(&["compute", "llt", "--area", "0,0,1", "--strict", "1-3", "--unchecked"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("not symmetric"));
}

#[test]
fn resource_limits_exit_3() {
    assert_eq!(code(&llt(&["compute", "llt", "--area", "0,1,2,3", "--max-colors", "3"])), 3);
    assert_eq!(code(&llt(&["compute", "lltc", "--area", "0,1,2,3", "--max-bits", "4"])), 3);
}

#[test]
fn families_and_dump() {
    let o = llt(&["families", "--kind", "melting-lollipop", "--params", "7,2,3"]);
    assert_eq!(stdout(&o), "0,1,2,3,4,5,4,1,1,1\n");
    let o = llt(&["families", "--n", "3"]);
    assert!(stdout(&o).contains("0,1,2: complete(3)"));
    let o = llt(&["dump-orientations", "--area", "0,1,1", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |t: &str| {
        let o = llt(&["verify", "two-term", "--n", "5", "--format", "json", "--threads", t]);
        let mut lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        lines.last_mut().unwrap().as_object_mut().unwrap().remove("wall_time_s");
        lines
    };
    assert_eq!(run("1"), run("4"));
}
