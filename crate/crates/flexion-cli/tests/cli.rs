use std::io::Write;
use std::process::{Command, Output, Stdio};

use flexion::exact::Lfd;
use flexion::io::{read_mould, read_objects};
use flexion::Alphabet::U;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flexion"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn pal_values_from_the_command_line() {
    let o = run(&["pal", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let p = read_mould(&stdout(&o)).unwrap();
    assert_eq!(p.component(1), &Lfd::parse("-1/(2*u1)", U).unwrap());
    assert_eq!(p.component(3), &Lfd::parse("-1/(24*u1*u3*(u1 + u2))", U).unwrap());
    let plus = read_mould(&stdout(&run(&["--b1", "+1/2", "pal", "--depth", "1"]))).unwrap();
    assert_eq!(plus.component(1), &Lfd::parse("1/(2*u1)", U).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "lemma-7.1", "--depth", "3"]).status.code(), Some(0));
    assert_eq!(
        run(&["--b1", "+1/2", "verify", "lemma-7.1", "--depth", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["ma", "x+*"]).status.code(), Some(2));
    assert_eq!(run(&["swap", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["--b1", "1/3", "pal", "--depth", "1"]).status.code(), Some(2));
    assert_eq!(run(&["random", "tree"]).status.code(), Some(2));
}

#[test]
fn pipeline_through_stdin() {
    let basis = stdout(&run(&["ds-basis", "--weight", "3"]));
    let m = run_with_stdin(&["ma", "-", "--depth", "3"], &basis);
    assert_eq!(m.status.code(), Some(0));
    let c = run_with_stdin(&["classify", "-"], &stdout(&m));
    assert_eq!(stdout(&c).trim(), "al*il (underline) verified to depth 3");
    let s = run_with_stdin(&["swap", "-"], &stdout(&m));
    let back = run_with_stdin(&["swap", "-"], &stdout(&s));
    assert_eq!(stdout(&back), stdout(&m));
}

#[test]
fn output_file_and_show() {
    let dir = std::env::temp_dir().join(format!("flexion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pal.txt");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["pal", "--depth", "2", "-o", p]).status.code(), Some(0));
    assert_eq!(read_objects(&std::fs::read_to_string(&path).unwrap()).unwrap().len(), 1);
    let shown = stdout(&run(&["show", p]));
    assert!(shown.contains("[1] -1/(2*u1)"), "{shown}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports_are_reproducible() {
    let args = ["verify", "theorem-3.1", "--seed", "7", "--cases", "20", "--depth", "4"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json = stdout(&run(&["--json", "verify", "dar-dupal", "--depth", "3"]));
    assert!(json.trim_start().starts_with('{'), "{json}");
    assert!(json.contains("\"b1\""), "{json}");
}

#[test]
fn suites_are_listed() {
    let s = stdout(&run(&["suites"]));
    for name in [
        "theorem-3.1",
        "fundamental-identity",
        "racinet-closure",
        "ganit-consistency",
    ] {
        assert!(s.lines().any(|l| l == name), "{name} missing");
    }
}
