use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use groebner_sat::cnf::{brute_force_sat, parse_dimacs};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_groebner-sat"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("groebner-sat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn stdin_and_file_give_the_same_answer() {
    let path = corpus("08_two_sat_sat.cnf");
    let text = std::fs::read_to_string(&path).unwrap();
    let a = run(&["solve", path.to_str().unwrap()], None);
    let b = run(&["solve"], Some(&text));
    let c = run(&["solve", "-"], Some(&text));
    assert_eq!(a.status.code(), Some(10));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let path = corpus("12_random_like_k5.cnf");
    let p = path.to_str().unwrap();
    for args in [
        vec!["solve", p],
        vec!["--order", "lex", "solve", p],
        vec!["--mode", "bare", "solve", p],
        vec!["encode", p],
        vec!["--seed", "3", "--count", "12", "bench"],
    ] {
        let first = run(&args, None);
        assert!(first.status.code().is_some());
        for _ in 0..2 {
            assert_eq!(run(&args, None).stdout, first.stdout, "{args:?}");
        }
    }
}

#[test]
fn records_are_json_lines() {
    let out = run(
        &[
            "--records",
            "solve",
            corpus("11_pigeonhole_3_2.cnf").to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(20));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["status"], "UNSAT");
    assert!(v["model"].is_null());
    assert!(v["ms"].as_f64().unwrap() >= 0.0);

    let out = run(&["--records", "--count", "5", "--seed", "9", "bench"], None);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines.last().unwrap()["agreement"], 5);
}

#[test]
fn encode_then_gb_then_verify() {
    for name in [
        "01_contradiction",
        "07_two_sat_unsat",
        "08_two_sat_sat",
        "11_pigeonhole_3_2",
    ] {
        let cnf = corpus(&format!("{name}.cnf"));
        let cnf_s = cnf.to_str().unwrap();
        let encoded = run(&["encode", cnf_s], None);
        assert_eq!(encoded.status.code(), Some(0));
        let gb = run(&["gb", "-"], Some(&stdout(&encoded)));
        assert_eq!(gb.status.code(), Some(0), "{name}");
        let cert = scratch(&format!("{name}.gb"), &stdout(&gb));
        let verdict = run(&["verify", cnf_s, cert.to_str().unwrap()], None);
        assert_eq!(verdict.status.code(), Some(0), "{name}");

        let formula = parse_dimacs(&std::fs::read_to_string(&cnf).unwrap()).unwrap();
        let unsat = brute_force_sat(&formula).unwrap().is_none();
        let gb_text = stdout(&gb);
        let body: Vec<&str> = gb_text.lines().skip(1).collect();
        assert_eq!(body == ["1"], unsat, "{name}");
        assert_eq!(
            stdout(&verdict).starts_with("VALID unsat certificate"),
            unsat,
            "{name}"
        );
    }
}

#[test]
fn verify_rejects_a_wrong_certificate() {
    // {1} cannot certify a satisfiable formula
    let cert = scratch("bogus.gb", "ring k=4 order=grevlex mode=boolean\n1\n");
    let out = run(
        &[
            "verify",
            corpus("08_two_sat_sat.cnf").to_str().unwrap(),
            cert.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("INVALID"));

    // a basis that is not closed under S-polynomials
    let cert = scratch("open.gb", "ring k=2 order=lex\nz1*z2 - 1\nz2^2 - z2\n");
    let cnf = scratch("tiny.cnf", "p cnf 2 1\n1 2 0\n");
    let out = run(
        &["verify", cnf.to_str().unwrap(), cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_input_is_an_error_not_a_crash() {
    for (args, input) in [
        (vec!["solve"], "p cnf 2 1\n1 3 0\n"),
        (vec!["solve"], "1 2 0\n"),
        (vec!["solve"], "p cnf 2 2\n1 0\n"),
        (vec!["gb"], "z1 + \n"),
        (vec!["--order", "revlex", "solve"], "p cnf 1 0\n"),
        (vec!["--mode", "ternary", "solve"], "p cnf 1 0\n"),
    ] {
        let out = run(&args, Some(input));
        assert_eq!(out.status.code(), Some(1), "{args:?} {input:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = run(&["solve", "/nonexistent/file.cnf"], None);
    assert_eq!(out.status.code(), Some(1));
}
