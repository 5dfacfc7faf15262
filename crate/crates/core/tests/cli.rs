use std::io::Write;
use std::process::{Command, Output};

fn mixshuf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixshuf"))
        .args(args)
        .output()
        .expect("run mixshuf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_mixable_product() {
    let o = mixshuf(&["--eval", "msh([z1],[z1])"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[z2] + 2*[z1,z1]\n");
}

#[test]
fn eval_counit_and_ssupp() {
    assert_eq!(stdout(&mixshuf(&["--eval", "counit([e])"])), "1\n");
    assert_eq!(stdout(&mixshuf(&["--eval", "ssupp((2,0,1))"])), "(2,1)\n");
}

#[test]
fn lambda_flag_feeds_products() {
    let o = mixshuf(&["--lambda", "-3/2", "--eval", "msh([z1],[z2])"]);
    assert_eq!(stdout(&o), "-3/2*[z3] + [z1,z2] + [z2,z1]\n");
}

#[test]
fn tabular_format() {
    let o = mixshuf(&["--format", "tabular", "--eval", "2*[z1,z2] + [z3]"]);
    assert_eq!(stdout(&o), "1\t[z3]\n2\t[z1,z2]\n");
}

#[test]
fn pairing_file_alphabet() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# a two-letter Hoffman set\nletter x 1\nletter y 2\npair x x = y").unwrap();
    let path = f.path().to_str().unwrap();
    let o = mixshuf(&["--alphabet", path, "--eval", "qsh([x],[x])"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "[y] + 2*[x,x]\n");
    let o = mixshuf(&["--alphabet", path, "--verify", "--max-degree", "3", "--max-length", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_pairing_file_reports_failures() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "letter x 1\npair x x = x").unwrap();
    let o = mixshuf(&["--alphabet", f.path().to_str().unwrap(), "--verify", "--max-degree", "2", "--max-length", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("axiom=S3 degree<=2  FAIL  witness: x,x"), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = mixshuf(&["--eval", "msh([z1])"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:1"));
    let o = mixshuf(&["--eval", "[z1] + [w]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:9"));
}

#[test]
fn missing_pairing_file_is_config_error() {
    let o = mixshuf(&["--alphabet", "/definitely/not/here.pairs", "--verify"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mixshuf(&["--lambda", "1/0", "--eval", "[z1]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mixshuf(&["--max-degree", "0", "--verify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_and_negative_control_fails() {
    let o = mixshuf(&["--verify", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let o = mixshuf(&["--verify", "--negative-control", "--max-degree", "3", "--max-length", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let failing: Vec<String> = stdout(&o).lines().filter(|l| l.contains("FAIL")).map(String::from).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].starts_with("negative-control"));
}

#[test]
fn zero_alphabet_verifies() {
    let o = mixshuf(&["--alphabet", "builtin:zero", "--lambda", "2", "--verify", "--format", "tabular"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("check\tparams\tresult\twitness\n"));
}
