use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}")))
        .collect()
}

#[test]
fn instance_round_trip() {
    let out = run(&[
        "verify",
        "thm3.3",
        "--instance",
        r#"{"lambda":[3,2],"mu":[1],"nu":[1],"n":3}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports = lines(&out);
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert_eq!(r["verdict"], "Pass");
        assert!(r.get("elapsed_ms").is_none());
        let again = run(&["verify", "thm3.3", "--instance", &r["instance"].to_string()]);
        assert_eq!(again.stdout, out.stdout);
    }
}

#[test]
fn seeds_reproduce_output() {
    let args = ["random-suite", "--count", "4", "--seed", "17"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let other = run(&["random-suite", "--count", "4", "--seed", "18"]);
    assert_ne!(a.stdout, other.stdout);
    let all = lines(&a);
    assert!(all.last().unwrap().get("summary").is_some());
}

#[test]
fn thread_count_does_not_change_output() {
    let args = [
        "verify", "cor5.7", "--random", "--count", "12", "--seed", "2",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_schurdet"))
        .args(args)
        .env("SCHURDET_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_schurdet"))
        .args(args)
        .env("SCHURDET_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(lines(&one).len(), 12);
}

#[test]
fn timing_is_opt_in() {
    let out = run(&[
        "verify",
        "cor4.4",
        "--instance",
        r#"{"lambda":[3,3,1],"mu":[1]}"#,
        "--timing",
    ]);
    assert!(lines(&out)[0]["elapsed_ms"].is_number());
}

#[test]
fn failure_exits_one() {
    let out = run(&[
        "verify",
        "thm4.3",
        "--instance",
        r#"{"lambda":[2,1,1],"mu":[2],"nu":[2],"n":3}"#,
        "--kreiman-upper",
        "literal",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(lines(&out).iter().any(|r| r["verdict"] == "Fail"));
    let fixed = run(&[
        "verify",
        "thm4.3",
        "--instance",
        r#"{"lambda":[2,1,1],"mu":[2],"nu":[2],"n":3}"#,
    ]);
    assert_eq!(fixed.status.code(), Some(0));
}

#[test]
fn factorial_forms() {
    let inst = r#"{"lambda":[2,1],"mu":[1],"d":2,"a":[0,0,0,0,0,0],"trials":3,"seed":4}"#;
    let corrected = run(&["verify", "cor4.7", "--instance", inst]);
    assert_eq!(lines(&corrected)[0]["verdict"], "Pass");
    let original = run(&[
        "verify",
        "cor4.7",
        "--instance",
        inst,
        "--factorial",
        "original",
    ]);
    assert_eq!(original.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(
        run(&["verify", "thm9.9", "--instance", "{}"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "thm3.3", "--instance", "{lambda"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "thm3.3", "--instance", r#"{"lambda":[1,2]}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "thm3.3"]).status.code(), Some(2));
    let bad = run(&[
        "verify",
        "thm5.3",
        "--instance",
        r#"{"nu":[1],"lambda":[2],"mu":[]}"#,
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(lines(&bad)[0]["error"]["kind"], "precondition");
}

#[test]
fn decompose_outputs() {
    let out = run(&[
        "decompose",
        "--shape",
        r#"{"outer":[6,6,6,3,3],"inner":[4,3,2]}"#,
    ]);
    let v = &lines(&out)[0];
    assert_eq!(v["k"], 3);
    assert_eq!(v["decomposition"]["q"], serde_json::json!([5, 4, -2]));
    let empty = run(&["decompose", "--shape", "[]"]);
    assert_eq!(lines(&empty)[0]["k"], 0);
    let pretty = run(&[
        "decompose",
        "--shape",
        "[2,2]",
        "--cutting-strip",
        "inner",
        "--pretty",
    ]);
    assert!(String::from_utf8_lossy(&pretty.stdout).contains("k=2"));
    let incompatible = run(&[
        "decompose",
        "--shape",
        "[3,2]",
        "--cutting-strip",
        "custom",
        "--strip",
        "[[1,1]]",
    ]);
    assert_eq!(incompatible.status.code(), Some(2));
}

#[test]
fn render_and_schur() {
    let out = run(&["render", "--shape", "[3,1]", "--pretty"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "(3,1)\n###\n#\n");
    let glued = run(&[
        "render",
        "--glue",
        r#"{"gamma":[[2,1],[1,1],[1,2]],"nu":[2,2],"lambda":[2,1]}"#,
    ]);
    assert_eq!(lines(&glued)[0]["diagram"], "##\n##\n");
    let v = run(&[
        "schur",
        "--shape",
        "[2,1]",
        "--spec",
        "classical",
        "--at",
        "1,2,3",
    ]);
    assert_eq!(lines(&v)[0]["value"], "60");
    let half = run(&[
        "schur",
        "--shape",
        "[1]",
        "--spec",
        "classical",
        "--at",
        "1/2,-1/3",
    ]);
    assert_eq!(lines(&half)[0]["value"], "1/6");
    let mismatch = run(&[
        "schur",
        "--shape",
        "[1]",
        "--spec",
        "classical",
        "--at",
        "1,2",
        "--vars",
        "3",
    ]);
    assert_eq!(mismatch.status.code(), Some(2));
}
