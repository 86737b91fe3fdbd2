use std::io::Write;
use std::process::{Command, Output, Stdio};

fn periplectic(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_periplectic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = periplectic(&["dim", "-n", "3"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "15\n");
    assert_eq!(stdout(&periplectic(&["pcore", "-p", "3", "(4,4,2,1)"], "")), "(1,1)\n");
    let text = stdout(&periplectic(&["blocks", "-n", "3", "-p", "5"], ""));
    assert_eq!(text, "A_3 over GF(5): 2 block(s) [classifier]\n  1: (1,1,1) (3) (1)\n  2: (2,1)\n");
}

#[test]
fn classifier_and_oracle_agree_in_json() {
    let c = stdout(&periplectic(&["blocks", "-n", "4", "-p", "5", "--json"], ""));
    let o = stdout(&periplectic(&["blocks", "-n", "4", "-p", "5", "--oracle", "--json"], ""));
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("provenance");
        v
    };
    assert_eq!(strip(&c), strip(&o));
}

#[test]
fn mult_reads_two_diagrams() {
    let input = r#"{"r":3,"s":3,"pairs":[[1,4],[2,3],[5,6]]} {"r":3,"s":3,"pairs":[[1,2],[3,6],[4,5]]}"#;
    let o = periplectic(&["mult", "--json"], input);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"], 3);
    assert!(v["sign"] == 1 || v["sign"] == -1);
    let o = periplectic(&["mult"], r#"{"r":1,"s":1,"pairs":[[1,2]]}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(periplectic(&["blocks", "-n", "3", "-p", "6"], "").status.code(), Some(2));
    assert_eq!(periplectic(&["blocks", "-n", "3", "-p", "2"], "").status.code(), Some(2));
    assert_eq!(periplectic(&["dim"], "").status.code(), Some(2));
    assert_eq!(periplectic(&["mullineux", "-p", "3", "(3)"], "").status.code(), Some(2));
    assert_eq!(periplectic(&["basis-check", "-n", "3", "-p", "5"], "").status.code(), Some(0));
}

#[test]
fn verify_is_deterministic() {
    let a = periplectic(&["verify", "--max-n", "3", "--seed", "11", "--json"], "");
    let b = periplectic(&["verify", "--max-n", "3", "--seed", "11", "--json"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 11);
}
