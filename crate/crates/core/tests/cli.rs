use std::path::PathBuf;
use std::process::Command;

use liftcheck::cli::run;

fn lc(args: &[&str]) -> liftcheck::cli::Outcome {
    run(std::iter::once("liftcheck").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("liftcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn lines<'a>(out: &'a str, prefix: &str) -> Vec<&'a str> {
    out.lines().filter(|l| l.starts_with(prefix)).collect()
}

#[test]
fn check_klein_and_companion() {
    let klein = lc(&["emit", "witness", "C2xC2"]);
    assert_eq!(klein.code, 0);
    let path = scratch("klein.rep", &klein.stdout);
    let out = lc(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(lines(&out.stdout, "VERDICT:"), ["VERDICT: NOT_LIFTABLE"]);
    assert_eq!(lines(&out.stdout, "REFUTE:").len(), 1);

    let comp = lc(&["emit", "companion", "-p", "2", "-n", "2", "-i", "3"]);
    let path = scratch("jordan3.rep", &comp.stdout);
    let out = lc(&["check", path.to_str().unwrap()]);
    assert_eq!(lines(&out.stdout, "VERDICT:"), ["VERDICT: LIFTABLE"]);
    assert_eq!(
        lines(&out.stdout, "CERT:"),
        ["CERT: s mod 4 = [[2,0,1],[1,0,1],[0,1,1]]"]
    );
    assert_eq!(lines(&out.stdout, "ORACLE:"), ["ORACLE: AGREE"]);
}

#[test]
fn emitted_reps_round_trip() {
    for kind in ["C2xC2", "Q8", "C3xC3", "C9", "C5", "C11"] {
        let text = lc(&["emit", "witness", kind]).stdout;
        let rep = liftcheck::replift::parse_rep(&text).unwrap();
        assert_eq!(
            liftcheck::replift::write_rep(&rep),
            text.split_once('\n').unwrap().1
        );
    }
    assert_eq!(lc(&["emit", "witness", "C4"]).code, 2);
}

#[test]
fn input_errors_exit_two() {
    let bad = scratch("bad.rep", "p 2\nn 2\ngens 1 s\nrel s s\nmat s\n1 2\n0 1\n");
    let out = lc(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 6"), "{}", out.stderr);
    assert_eq!(lc(&["check", "/nonexistent/file.rep"]).code, 2);
    assert_eq!(lc(&["classify", "X", "3"]).code, 2);
    assert_eq!(lc(&["frobnicate"]).code, 2);
}

#[test]
fn classify_examples() {
    let verdict = |spec: &[&str]| {
        let mut args = vec!["classify"];
        args.extend_from_slice(spec);
        lines(&lc(&args).stdout, "VERDICT:").join("")
    };
    assert_eq!(verdict(&["C", "24"]), "VERDICT: LIFTABLE (C3xC2n)");
    assert_eq!(verdict(&["Q", "8"]), "VERDICT: NOT_LIFTABLE (Q8)");
    assert_eq!(verdict(&["C", "9"]), "VERDICT: NOT_LIFTABLE (C9)");
    assert_eq!(verdict(&["C3semi", "4"]), "VERDICT: LIFTABLE (C3semiC2n)");
    let q8 = lc(&["classify", "Q", "8"]).stdout;
    assert_eq!(lines(&q8, "UNCERTIFIED:").len(), 1);

    let table = liftcheck::groups::write_table(
        &liftcheck::groups::make_family(&liftcheck::groups::Family::Alternating4).unwrap(),
    );
    let path = scratch("a4.table", &table);
    let out = lc(&["classify", "--table", path.to_str().unwrap()]);
    assert_eq!(
        lines(&out.stdout, "VERDICT:"),
        ["VERDICT: NOT_LIFTABLE (C2xC2)"]
    );
}

#[test]
fn theta_examples() {
    let elt = |name: &str, order: &str, k: &str, p: &str| {
        scratch(
            name,
            &lc(&["emit", "power", "-p", p, "--order", order, "-k", k]).stdout,
        )
    };
    let (f, h) = (elt("f9.elt", "9", "4", "3"), elt("h9.elt", "9", "5", "3"));
    let out = lc(&[
        "theta",
        "-p",
        "3",
        "--group",
        "C 9",
        f.to_str().unwrap(),
        h.to_str().unwrap(),
    ]);
    assert_eq!(lines(&out.stdout, "THETA:"), ["THETA: NONZERO"]);
    let (f, h) = (elt("f3.elt", "3", "1", "3"), elt("h3.elt", "3", "2", "3"));
    let out = lc(&[
        "theta",
        "-p",
        "3",
        "--group",
        "C 3",
        f.to_str().unwrap(),
        h.to_str().unwrap(),
    ]);
    assert_eq!(lines(&out.stdout, "THETA:"), ["THETA: ZERO"]);
    let zero = scratch("zero.elt", "elt 0 0 0\n");
    let out = lc(&[
        "theta",
        "-p",
        "3",
        "--group",
        "C 3",
        zero.to_str().unwrap(),
        h.to_str().unwrap(),
    ]);
    assert_eq!(lines(&out.stdout, "THETA:"), ["THETA: ZERO"]);
    let out = lc(&[
        "theta",
        "-p",
        "3",
        "--group",
        "C 3",
        f.to_str().unwrap(),
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 2);
}

#[test]
fn reproduce_report() {
    let out = lc(&["reproduce"]);
    let failed: Vec<&str> = lines(&out.stdout, "ITEM: FAIL");
    assert_eq!(out.code, 1);
    // The quaternion witness lifts; everything else passes.
    assert_eq!(failed.len(), 4, "{}", out.stdout);
    assert!(failed
        .iter()
        .all(|l| l.contains("quaternion") || l.contains("classify Q")));
    assert!(out.stdout.contains("ITEM: PASS Jordan sizes C9"));

    let corrupted = lc(&["reproduce", "--corrupt"]);
    assert!(corrupted
        .stdout
        .contains("ITEM: FAIL klein witness is not liftable"));

    let json: serde_json::Value =
        serde_json::from_str(&lc(&["reproduce", "--json"]).stdout).unwrap();
    let items = json["items"].as_array().unwrap();
    assert_eq!(items.len(), lines(&out.stdout, "ITEM:").len());
    assert_eq!(items.iter().filter(|i| i["status"] == "FAIL").count(), 4);
}

#[test]
fn output_is_deterministic() {
    let a = lc(&["classify", "Q", "16"]).stdout;
    assert_eq!(a, lc(&["classify", "Q", "16"]).stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_liftcheck");
    let status = Command::new(bin)
        .args(["classify", "C", "12"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&status.stdout).contains("VERDICT: LIFTABLE (C3xC2n)"));
    let status = Command::new(bin).args(["check"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
