use std::process::{Command, Output};

use parkvol::polytope::VolumeJson;

fn parkvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkvol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invenum_two() {
    let out = parkvol(&["invenum", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "I_2(q) = 2 + q; I_2(1)=3; I_2(-1)=1=E_2\n");
}

#[test]
fn cap_refusal_exits_nonzero() {
    let out = parkvol(&["invenum", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(parkvol(&["verify-all", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn volume_json_schema() {
    let out = parkvol(&[
        "volume", "--n", "5", "--set", "4", "--d", "1,2,3", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = raw
        .as_object()
        .unwrap()
        .keys()
        .map(|k| k.as_str())
        .collect();
    for key in ["n", "S", "d", "volume", "n_factorial_volume_polynomial"] {
        assert!(keys.contains(&key), "missing {key}");
    }
    let parsed: VolumeJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.d, vec!["1", "2", "3"]);
    assert_eq!(serde_json::to_value(&parsed).unwrap(), raw);
}

#[test]
fn invalid_volume_input() {
    let out = parkvol(&["volume", "--n", "5", "--set", "4", "--d", "3,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = parkvol(&["volume", "--n", "4", "--set", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["involution", "--a", "1,2,3,4", "--format", "csv"];
    let first = parkvol(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, parkvol(&args).stdout);
    let args = ["verify-all", "--n", "3", "--format", "csv", "--jobs", "2"];
    let a = stdout(&parkvol(&args));
    let b = stdout(&parkvol(&args));
    let strip = |s: &str| {
        s.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn verify_all_small() {
    let out = parkvol(&["verify-all", "--n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("12 of 12 checks passed\n"));
}

#[test]
fn involution_dump_lists_seven_column_strip() {
    let out = parkvol(&[
        "involution",
        "--a",
        "3,3,6,7,7,7,8",
        "--format",
        "csv",
        "--force",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text
        .lines()
        .find(|l| l.starts_with("\"[5, 7, 2, 5, 1, 5, 2]\""))
        .expect("strip listed");
    assert!(line.contains("\"[7, 5, 5, 5, 2, 2, 1]\",\"[2, 1, 4, 6, 7, 3, 5]\",20,"));
}

#[test]
fn other_commands() {
    assert!(stdout(&parkvol(&["euler", "--n", "5"])).ends_with("E_5 = 16\n"));
    let ps = stdout(&parkvol(&["pitman-stanley", "--c", "1,1"]));
    assert!(ps.contains("2!·Vol = 3"));
    let k = stdout(&parkvol(&["kappa", "--gamma", "1,3,1", "--format", "csv"]));
    assert_eq!(k.lines().count(), 10);
    let b = stdout(&parkvol(&[
        "beta", "--n", "5", "--set", "4", "--format", "json",
    ]));
    assert!(b.contains("\"beta\": \"4\""));
    let v = stdout(&parkvol(&["volume", "--n", "4", "--set", "3", "--q", "2"]));
    assert!(v.contains("agree ✓"));
}
