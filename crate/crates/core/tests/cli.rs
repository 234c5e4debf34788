use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aporetic"))
        .args(args)
        .output()
        .expect("spawn");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aporetic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eval_and_parse() {
    assert_eq!(run(&["eval", "bot -> bot"]), (0, "true\n".into(), String::new()));
    assert_eq!(run(&["eval", "~~bot"]).1, "false\n");
    assert_eq!(run(&["parse", "~~bot->bot"]).1, "((bot -> bot) -> bot) -> bot\n");
    assert_eq!(run(&["parse", "(bot -> (bot -> bot))"]).1, "bot -> bot -> bot\n");
}

#[test]
fn check_skk_certificate() {
    let proof = fixture("skk.proof");
    assert_eq!(run(&["check", &proof, "--goal", "bot -> bot"]).1, "accept\n");
    let (code, out, _) = run(&["check", &proof, "--goal", "bot"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("reject: wrong conclusion"));
}

#[test]
fn synth_then_check_round_trip() {
    let path = scratch("synth.proof");
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["synth", "~~(bot -> bot)", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with("positive\nproof=(mp"));
    assert_eq!(run(&["check", p, "--goal", "~~(bot -> bot)"]).0, 0);

    let (code, out, _) = run(&["synth", "~(bot -> bot)", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with("negative\nrefutation="));
    assert_eq!(run(&["check", p, "--goal", "~~(bot -> bot)"]).0, 0);
}

#[test]
fn deduce_discharges_last_hypothesis() {
    let ctx = scratch("ctx.txt");
    std::fs::write(&ctx, "bot -> bot\nbot\n").unwrap();
    let proof = scratch("hyp.proof");
    std::fs::write(&proof, "(hyp 0)\n").unwrap();
    let out_path = scratch("deduced.proof");
    let (code, out, _) = run(&[
        "deduce",
        proof.to_str().unwrap(),
        "--context",
        ctx.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("conclusion=bot -> bot -> bot\n"));
    let rest = scratch("rest.txt");
    std::fs::write(&rest, "bot -> bot\n").unwrap();
    let checked = run(&[
        "check",
        out_path.to_str().unwrap(),
        "--context",
        rest.to_str().unwrap(),
        "--goal",
        "bot -> bot -> bot",
    ]);
    assert_eq!(checked.1, "accept\n");
}

#[test]
fn closure_lists_traces() {
    let (code, out, _) = run(&["closure", &fixture("negfp_base.txt")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("members=2\n"));
}

#[test]
fn negfp_outcomes() {
    let (code, out, _) = run(&["negfp", "--frame", &fixture("total_const_bot.frame")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("code=0\nb=bot\n"));
    let (code, out, _) = run(&["negfp", "--frame", &fixture("taut_const_bot.frame")]);
    assert_eq!(code, 1);
    assert!(out.ends_with("eval: no code\n"));
    assert_eq!(out.lines().count(), 1002);
}

#[test]
fn collapse_outcomes() {
    let total = fixture("total_const_bot.frame");
    for branch in ["left", "right", "classifier:taut", "classifier:const-ff"] {
        let (code, out, _) = run(&["collapse", "--frame", &total, "--branch", branch]);
        assert_eq!(code, 0, "{branch}");
        assert!(out.ends_with("qed=bot\n"));
    }
    let (code, out, _) = run(&["collapse", "--frame", &fixture("bare_negfp.frame"), "--branch", "left"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("collapse: blocked"));
    assert_eq!(run(&["collapse", "--frame", &total, "--branch", "middle"]).0, 2);
}

#[test]
fn diag_check_constant_frame() {
    let (code, out, _) = run(&[
        "diag-check",
        "--frame",
        &fixture("taut_const_bot.frame"),
        "--max-codes",
        "10",
    ]);
    assert_eq!(code, 1);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines[..11]
        .iter()
        .all(|l| l.ends_with("b=bot rejected=(bot -> bot) -> bot")));
    assert_eq!(lines[11], "eval: refuted");
}

#[test]
fn diag_check_precondition_failure_is_input_error() {
    let (code, _, err) = run(&[
        "diag-check",
        "--frame",
        &fixture("total_const_bot.frame"),
        "--max-codes",
        "3",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("precondition failed"));
}

#[test]
fn probe_outcomes() {
    assert_eq!(
        run(&["probe", "lem", "--regulator", "taut", "--max-size", "5"]).1,
        "property=lem bound=5 verdict=holds\n"
    );
    let base = format!("closure:{}", fixture("negfp_base.txt"));
    let (code, out, _) = run(&["probe", "lem", "--regulator", &base, "--max-size", "2"]);
    assert_eq!(
        (code, out.as_str()),
        (1, "property=lem bound=2 verdict=fails witness=bot\n")
    );
    let (code, out, _) = run(&["probe", "cons", "--regulator", "total", "--max-size", "0"]);
    assert_eq!(
        (code, out.as_str()),
        (1, "property=cons bound=0 verdict=fails witness=bot\n")
    );
    let (code, out, _) = run(&[
        "probe",
        "dec",
        "--regulator",
        "taut",
        "--max-size",
        "2",
        "--classifier",
        "const-ff",
    ]);
    assert_eq!(
        (code, out.as_str()),
        (1, "property=dec bound=2 verdict=fails witness=bot -> bot\n")
    );
    assert_eq!(run(&["probe", "ref", "--regulator", "total", "--max-size", "4"]).0, 0);
}

#[test]
fn profile_table() {
    let (code, out, _) = run(&["profile", "--config", &fixture("profile.cfg")]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert!(rows[1].contains("cons") && rows[1].starts_with("0    total"));
    assert!(rows[2].contains("eval"));
    assert!(rows[3].contains("undecided(bot -> bot)"));
    assert_eq!(rows[4], "ref: refutation_trivial holds on 3 regulator(s) at bound 4");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let corpus: Vec<Vec<String>> = vec![
        vec!["synth".into(), "~~~(bot -> bot -> bot)".into()],
        vec![
            "diag-check".into(),
            "--frame".into(),
            fixture("taut_affine.frame"),
            "--max-codes".into(),
            "200".into(),
        ],
        vec!["profile".into(), "--config".into(), fixture("profile.cfg")],
        vec![
            "probe".into(),
            "mp".into(),
            "--regulator".into(),
            "taut".into(),
            "--max-size".into(),
            "6".into(),
        ],
    ];
    for args in corpus {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&args);
        for _ in 0..3 {
            assert_eq!(run(&args), first, "{args:?}");
        }
    }
}

#[test]
fn exit_code_contract() {
    let total = fixture("total_const_bot.frame");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["eval", "bot"], 0),
        (vec!["parse", "bot ->"], 2),
        (vec!["eval", "p -> bot"], 2),
        (vec![], 2),
        (vec!["frobnicate"], 2),
        (vec!["eval", "bot", "--verbose"], 2),
        (vec!["check", "/nonexistent/proof", "--goal", "bot"], 2),
        (vec!["check", "--goal", "bot"], 2),
        (vec!["negfp", "--frame", "/nonexistent.frame"], 2),
        (vec!["negfp", "--frame", &total], 0),
        (vec!["probe", "lem", "--regulator", "taut", "--max-size", "11"], 2),
        (vec!["probe", "nope", "--regulator", "taut", "--max-size", "1"], 2),
        (vec!["probe", "dec", "--regulator", "taut", "--max-size", "1"], 2),
        (vec!["probe", "lem", "--regulator", "bogus", "--max-size", "1"], 2),
        (
            vec![
                "probe",
                "mp",
                "--regulator",
                "taut",
                "--max-size",
                "1",
                "--classifier",
                "taut",
            ],
            2,
        ),
        (vec!["probe", "cons", "--regulator", "total", "--max-size", "1"], 1),
        (vec!["--help"], 0),
    ];
    for (args, expected) in cases {
        let (code, _, err) = run(&args);
        assert_eq!(code, expected, "{args:?}");
        if expected == 2 {
            assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        }
    }
}
