//! End-to-end acceptance run. Every criterion is checked at zero tolerance
//! through the `flexion` binary where an interface exists, and one line is
//! printed per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use flexion::ds::{adjudicate_odot, check_group_isomorphism};
use flexion::exact::Lfd;
use flexion::io::{read_mould, read_objects, write_objects};
use flexion::random::Generator;
use flexion::symmetry::is_symmetral;
use flexion::Alphabet::U;

/// Criteria expected to fail, with the reason (see the decisions ledger).
const KNOWN_RED: &[(usize, &str)] = &[(
    1,
    "pal(u1) = 1/(2u1) requires B1 = +1/2, which breaks criteria 7, 8 and 12",
)];

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn flexion(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_flexion"))
        .args(args)
        .output()
        .expect("flexion binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn suite(&mut self, args: &[&str]) {
        let r = flexion(args);
        let label = args.join(" ");
        if r.code != 0 {
            let first_fail = r
                .stdout
                .lines()
                .find(|l| l.trim_start().starts_with("FAIL"))
                .unwrap_or("");
            self.failures.push(format!(
                "`{label}` exited {} {}{}",
                r.code,
                first_fail.trim(),
                r.stderr.trim()
            ));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn u(s: &str) -> Lfd {
    Lfd::parse(s, U).unwrap()
}

fn pal_golden(o: &mut Outcome) {
    let r = flexion(&["pal", "--depth", "2"]);
    o.require(r.code == 0, format!("pal --depth 2 exited {}", r.code));
    let p = read_mould(&r.stdout).expect("pal output parses");
    o.require(
        p.component(1) == &u("1/(2*u1)"),
        format!("pal(u1) = {}, expected 1/(2*u1)", p.component(1)),
    );
    o.require(
        p.component(2) == &u("(u1 + 2*u2)/(12*u1*u2*(u1 + u2))"),
        format!("pal(u1,u2) = {}", p.component(2)),
    );

    // Depth 3 against the defining recursion with hand-entered dupal values:
    // (u1+u2+u3) pal(u1,u2,u3) = pal(u1,u2) dupal(u3) + pal(u1) dupal(u2,u3) + dupal(u1,u2,u3).
    let p3 = read_mould(&flexion(&["pal", "--depth", "3"]).stdout).expect("pal output parses");
    let lhs = p3.component(3) * &u("u1 + u2 + u3");
    let rhs = &(p3.component(2) * &u("-1/2")) + &(p3.component(1) * &u("(u2 - u3)/(12*u2*u3)"));
    o.require(lhs == rhs, "depth-3 value does not satisfy the recursion");
    o.require(
        p3.component(3) == &u("-1/(24*u1*u3*(u1 + u2))"),
        format!("pal(u1,u2,u3) = {}", p3.component(3)),
    );
    let sym = is_symmetral(&p3).unwrap();
    o.require(sym.holds(), format!("depth-3 symmetrality: {}", sym.summary()));

    let plus = read_mould(&flexion(&["--b1", "+1/2", "pal", "--depth", "2"]).stdout).unwrap();
    o.note(format!("with --b1 +1/2, pal(u1) = {}", plus.component(1)));
}

fn dictionary(o: &mut Outcome) {
    o.suite(&["verify", "dictionary", "--seed", "10", "--cases", "10", "--weight", "4"]);
}

fn racinet(o: &mut Outcome) {
    let mut dims = Vec::new();
    for w in ["3", "4", "5"] {
        let a = flexion(&["ds-basis", "--weight", w]);
        let b = flexion(&["ds-basis", "--weight", w]);
        o.require(
            a.code == 0 && a.stdout == b.stdout,
            format!("ds_basis({w}) is not reproducible"),
        );
        dims.push(format!(
            "dim ds_{w} = {}",
            read_objects(&a.stdout).map_or(0, |v| v.len())
        ));
    }
    o.note(dims.join(", "));
    o.suite(&["verify", "racinet-closure", "--weight", "8"]);
}

fn consistency(o: &mut Outcome) {
    o.suite(&["verify", "adari-consistency", "--seed", "12", "--depth", "3"]);
    let r = flexion(&["compare-ganit", "--seed", "12", "--depth", "3"]);
    o.require(
        r.code == 0 && r.stdout.contains("ganit"),
        format!("compare-ganit exited {}", r.code),
    );
    o.suite(&["verify", "dar-dupal", "--depth", "4"]);

    let mut g = Generator::new(12);
    let samples: Vec<_> = (0..3).map(|_| (g.lie(2, 3).unwrap(), g.lie(2, 3).unwrap())).collect();
    let (rep, passing) = adjudicate_odot(&samples, 4).unwrap();
    o.require(
        rep.passed() && passing.len() == 1,
        "odot adjudication does not select exactly one convention",
    );
    for (f, h) in &samples {
        let rep = check_group_isomorphism(f, h, 4).unwrap();
        o.require(
            rep.passed(),
            "ma(F*G) = gari(ma F, ma G) fails under the adopted convention",
        );
    }
}

fn infrastructure(o: &mut Outcome) {
    let mut fixtures = Vec::new();
    for d in ["0", "1", "2", "3", "4"] {
        fixtures.push(flexion(&["pal", "--depth", d]).stdout);
        fixtures.push(flexion(&["dupal", "--depth", d]).stdout);
    }
    fixtures.push(flexion(&["ds-basis", "--weight", "5"]).stdout);
    fixtures.push(flexion(&["fstar", "xxy - xyx"]).stdout);
    for kind in ["lie", "alternal", "lfd", "push-invariant", "constant"] {
        for seed in ["1", "2"] {
            fixtures.push(flexion(&["random", kind, "--seed", seed, "--depth", "3", "--weight", "5"]).stdout);
        }
    }
    fixtures.push(flexion(&["random", "lfd", "--alphabet", "v", "--depth", "3"]).stdout);
    for (i, text) in fixtures.iter().enumerate() {
        let ok = read_objects(text).is_ok_and(|objs| write_objects(&objs) == *text);
        o.require(ok, format!("fixture {i} does not round-trip"));
    }
    o.note(format!("{} fixtures round-trip", fixtures.len()));

    for args in [
        &["verify", "theorem-3.1", "--seed", "7", "--cases", "5", "--depth", "3"][..],
        &[
            "--json",
            "verify",
            "fundamental-identity",
            "--seed",
            "7",
            "--cases",
            "3",
        ][..],
        &["random", "alternal", "--seed", "99", "--depth", "4", "--weight", "6"][..],
    ] {
        let (a, b) = (flexion(args), flexion(args));
        o.require(
            a.code == b.code && a.stdout == b.stdout,
            format!("`{}` is not reproducible", args.join(" ")),
        );
    }
}

type Criterion = (usize, &'static str, Option<Duration>, Box<dyn Fn(&mut Outcome)>);

fn suite(args: &'static [&'static str]) -> Box<dyn Fn(&mut Outcome)> {
    Box::new(move |o: &mut Outcome| o.suite(args))
}

fn main() -> ExitCode {
    let mins = |m: u64| Some(Duration::from_secs(60 * m));
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "pal golden values",
            Some(Duration::from_secs(1)),
            Box::new(pal_golden),
        ),
        (
            2,
            "pal and pil symmetral to depth 4",
            Some(Duration::from_secs(60)),
            suite(&["verify", "pal-symmetrality", "--depth", "4"]),
        ),
        (
            3,
            "ari, lu and arit preserve alternality",
            None,
            Box::new(|o: &mut Outcome| {
                o.suite(&[
                    "verify",
                    "theorem-3.1",
                    "--seed",
                    "7",
                    "--cases",
                    "20",
                    "--depth",
                    "4",
                    "--weight",
                    "8",
                ]);
                o.suite(&[
                    "verify",
                    "appendix-A",
                    "--seed",
                    "7",
                    "--cases",
                    "20",
                    "--depth",
                    "4",
                    "--weight",
                    "8",
                ]);
            }),
        ),
        (
            4,
            "mantar invariance, neg push identity, push period",
            None,
            suite(&["verify", "appendix-B", "--seed", "4", "--cases", "20", "--depth", "4"]),
        ),
        (
            5,
            "swap of ari and its push-invariant reduction",
            None,
            suite(&[
                "verify",
                "swap-ari-identity",
                "--seed",
                "5",
                "--cases",
                "10",
                "--depth",
                "3",
            ]),
        ),
        (
            6,
            "ganit(pic) maps alternal to alternil",
            None,
            suite(&["verify", "prop-6.2", "--seed", "6", "--cases", "10", "--depth", "4"]),
        ),
        (
            7,
            "fundamental identity",
            mins(5),
            suite(&[
                "verify",
                "fundamental-identity",
                "--seed",
                "7",
                "--cases",
                "10",
                "--depth",
                "3",
            ]),
        ),
        (
            8,
            "constant moulds are fixed",
            None,
            suite(&["verify", "lemma-7.1", "--depth", "4"]),
        ),
        (
            9,
            "adari(pal) round trip and al*il image",
            None,
            suite(&["verify", "theorem-7.2", "--seed", "9", "--depth", "3"]),
        ),
        (
            10,
            "ma homomorphism, derivations, transcription",
            None,
            Box::new(dictionary),
        ),
        (
            11,
            "double shuffle closure under the Poisson bracket",
            mins(5),
            Box::new(racinet),
        ),
        (12, "consistency reports", None, Box::new(consistency)),
        (13, "serialization and reproducibility", None, Box::new(infrastructure)),
    ];

    let mut unexpected = Vec::new();
    for (id, title, limit, check) in &criteria {
        let t = Instant::now();
        let mut o = Outcome::default();
        check(&mut o);
        let elapsed = t.elapsed();
        if let Some(l) = limit {
            o.require(elapsed < *l, format!("took {elapsed:.2?}, limit {l:?}"));
        }
        let passed = o.failures.is_empty();
        let status = if passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} {title} ({elapsed:.2?})");
        for f in &o.failures {
            println!("      - {f}");
        }
        for n in &o.notes {
            println!("      note: {n}");
        }
        match KNOWN_RED.iter().find(|(k, _)| k == id) {
            Some((_, why)) if !passed => println!("      expected failure: {why}"),
            _ if !passed => unexpected.push(*id),
            _ => {}
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria pass except the documented ones");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
