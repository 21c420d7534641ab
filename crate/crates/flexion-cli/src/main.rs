use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flexion::ds::{ds_basis, f_star, ma, mi, poisson, NcPoly};
use flexion::gari::{adari, expari, ganit_explicit, gari, invgari, logari};
use flexion::io::{read_object, read_objects, write_objects, Object};
use flexion::mould::{ari, mu, push, swap};
use flexion::random::{Generator, RandomKind};
use flexion::special::{dupal, pal, B1Convention};
use flexion::suites::{run_suite, SuiteSpec, SUITES};
use flexion::symmetry::classify;
use flexion::{Alphabet, Error, Mould, VerificationReport};

/// Exact mould calculus: flexion operators, the ARI/GARI layer, the special
/// moulds pal/pil and the double shuffle dictionary.
///
/// Objects are read and written in the mould file format (see README).
/// Polynomial arguments may also be given inline, e.g. `"xy - yx"`.
/// Exit status: 0 success, 1 verification failure, 2 usage or input error.
#[derive(Parser, Debug)]
#[command(name = "flexion", version)]
struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Bernoulli convention for B1: -1/2 or +1/2.
    #[arg(long, global = true, default_value = "-1/2", allow_hyphen_values = true, value_parser = parse_b1)]
    b1: B1Convention,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random cases.
    #[arg(long)]
    cases: Option<usize>,
    /// Depth bound.
    #[arg(long)]
    depth: Option<usize>,
    /// Weight bound for polynomial inputs.
    #[arg(long)]
    weight: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ari(A, B)
    Ari { a: String, b: String },
    /// mu(A, B)
    Mu { a: String, b: String },
    /// swap(A)
    Swap { a: String },
    /// push(A)
    Push { a: String },
    /// expari(A), A in ARI
    Expari { a: String },
    /// logari(A), A in GARI
    Logari { a: String },
    /// gari(A, B)
    Gari { a: String, b: String },
    /// invgari(A)
    Invgari { a: String },
    /// adari(A)·B
    Adari { a: String, b: String },
    /// ganit(B)·A (explicit decomposition formula)
    Ganit { b: String, a: String },
    /// The mould pal up to a depth.
    Pal {
        #[arg(long)]
        depth: usize,
    },
    /// The mould dupal up to a depth.
    Dupal {
        #[arg(long)]
        depth: usize,
    },
    /// ma(F); the depth defaults to the top weight of F.
    Ma {
        f: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// mi(F) = swap(ma(F)).
    Mi {
        f: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// F_* in the letters y_i.
    Fstar { f: String },
    /// Dimorphic classification of a u-mould in ARI.
    Classify {
        a: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Basis of the double shuffle space in one weight.
    DsBasis {
        #[arg(long)]
        weight: usize,
    },
    /// The Poisson bracket {F, G}.
    Poisson { f: String, g: String },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        args: SuiteArgs,
    },
    /// Compare the explicit and exponential forms of ganit.
    CompareGanit {
        #[command(flatten)]
        args: SuiteArgs,
    },
    /// Seeded random input: lie, alternal, lfd, push-invariant or constant.
    Random {
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        weight: usize,
        #[arg(long, default_value = "u")]
        alphabet: String,
    },
    /// Print objects from a mould file in readable form.
    Show { file: String },
    /// List the verification suites.
    Suites,
}

fn parse_b1(s: &str) -> Result<B1Convention, String> {
    B1Convention::parse(s).ok_or_else(|| format!("expected -1/2 or +1/2, found `{s}`"))
}

enum Output {
    Objects(Vec<Object>),
    Text(String),
    Report(VerificationReport),
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn read_text(path: &str) -> Res<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn with_path<T>(path: &str, r: flexion::Result<T>) -> Res<T> {
    r.map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn load_mould(path: &str) -> Res<Mould> {
    let text = read_text(path)?;
    with_path(path, read_object(&text).and_then(Object::into_mould))
}

fn load_poly(arg: &str) -> Res<NcPoly> {
    if arg != "-" && !Path::new(arg).exists() {
        return NcPoly::parse(arg)
            .map_err(|e| Failure::Input(format!("`{arg}` is neither a file nor a polynomial: {e}")));
    }
    let text = read_text(arg)?;
    with_path(arg, read_object(&text).and_then(Object::into_ncpoly))
}

fn top_weight(f: &NcPoly) -> usize {
    f.weight_range().map_or(0, |(_, hi)| hi)
}

fn suite_spec(name: &str, a: &SuiteArgs, b1: B1Convention) -> Res<SuiteSpec> {
    let mut spec = SuiteSpec::new(name)?;
    spec.seed = a.seed;
    spec.b1 = b1;
    if let Some(c) = a.cases {
        spec.cases = c;
    }
    if let Some(d) = a.depth {
        spec.depth = d;
    }
    if let Some(w) = a.weight {
        spec.weight = w;
    }
    Ok(spec)
}

fn one(m: Mould) -> Output {
    Output::Objects(vec![m.into()])
}

fn run(cli: &Cli) -> Res<Output> {
    let b1 = cli.b1;
    Ok(match &cli.cmd {
        Command::Ari { a, b } => one(ari(&load_mould(a)?, &load_mould(b)?)?),
        Command::Mu { a, b } => one(mu(&load_mould(a)?, &load_mould(b)?)?),
        Command::Swap { a } => one(swap(&load_mould(a)?)?),
        Command::Push { a } => one(push(&load_mould(a)?)?),
        Command::Expari { a } => one(expari(&load_mould(a)?)?),
        Command::Logari { a } => one(logari(&load_mould(a)?)?),
        Command::Gari { a, b } => one(gari(&load_mould(a)?, &load_mould(b)?)?),
        Command::Invgari { a } => one(invgari(&load_mould(a)?)?),
        Command::Adari { a, b } => one(adari(&load_mould(a)?, &load_mould(b)?)?),
        Command::Ganit { b, a } => one(ganit_explicit(&load_mould(b)?, &load_mould(a)?)?),
        Command::Pal { depth } => one(pal(*depth, b1)?),
        Command::Dupal { depth } => one(dupal(*depth, b1)?),
        Command::Ma { f, depth } => {
            let f = load_poly(f)?;
            let d = depth.unwrap_or_else(|| top_weight(&f));
            one(ma(&f, d)?)
        }
        Command::Mi { f, depth } => {
            let f = load_poly(f)?;
            let d = depth.unwrap_or_else(|| top_weight(&f));
            one(mi(&f, d)?)
        }
        Command::Fstar { f } => Output::Objects(vec![f_star(&load_poly(f)?).into()]),
        Command::Classify { a, depth } => {
            let mut m = load_mould(a)?;
            if let Some(d) = depth {
                if *d > m.max_depth() {
                    return Err(Error::DepthExceeded {
                        requested: *d,
                        max_depth: m.max_depth(),
                    }
                    .into());
                }
                m = m.truncate(*d);
            }
            Output::Text(format!("{}\n", classify(&m)?))
        }
        Command::DsBasis { weight } => Output::Objects(ds_basis(*weight)?.into_iter().map(Object::from).collect()),
        Command::Poisson { f, g } => Output::Objects(vec![poisson(&load_poly(f)?, &load_poly(g)?).into()]),
        Command::Verify { suite, args } => Output::Report(run_suite(&suite_spec(suite, args, b1)?)?),
        Command::CompareGanit { args } => Output::Report(run_suite(&suite_spec("ganit-consistency", args, b1)?)?),
        Command::Random {
            kind,
            seed,
            depth,
            weight,
            alphabet,
        } => {
            let kind =
                RandomKind::parse(kind).ok_or_else(|| Failure::Input(format!("unknown random kind `{kind}`")))?;
            let al =
                Alphabet::parse(alphabet).ok_or_else(|| Failure::Input(format!("unknown alphabet `{alphabet}`")))?;
            let mut g = Generator::new(*seed);
            let obj: Object = match kind {
                RandomKind::Lie => g.lie(2, *weight)?.into(),
                RandomKind::Alternal => g.alternal(*depth, *weight)?.with_alphabet(al).into(),
                RandomKind::Lfd => g.lfd_mould(al, *depth)?.into(),
                RandomKind::PushInvariant => g.push_invariant(*depth)?.into(),
                RandomKind::Constant => g.constant(al, *depth).into(),
            };
            Output::Objects(vec![obj])
        }
        Command::Show { file } => {
            let text = read_text(file)?;
            let objs = with_path(file, read_objects(&text))?;
            let mut s = String::new();
            for o in objs {
                match o {
                    Object::Mould(m) => {
                        s.push_str(&format!("mould in {} up to depth {}\n", m.alphabet(), m.max_depth()));
                        for (r, c) in m.components().iter().enumerate() {
                            s.push_str(&format!("  [{r}] {c}\n"));
                        }
                    }
                    Object::NcPoly(p) => s.push_str(&format!("{p}\n")),
                    Object::YPoly(p) => s.push_str(&format!("{p}\n")),
                }
            }
            Output::Text(s)
        }
        Command::Suites => Output::Text(SUITES.iter().map(|s| format!("{s}\n")).collect()),
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Output::Objects(objs)) => (write_objects(&objs), 0),
        Ok(Output::Text(t)) => (t, 0),
        Ok(Output::Report(r)) => {
            let code = if r.passed() { 0 } else { 1 };
            (if cli.json { r.to_json() + "\n" } else { r.to_text() }, code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli.output, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
