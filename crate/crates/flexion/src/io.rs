//! Line-oriented text format for moulds and polynomials.
//!
//! ```text
//! flexion-mouldfile 1
//! mould u 2
//! depth 0 1 0
//! term 1 1
//! depth 1 1 1
//! term -1 2 0
//! factor 1 1
//! depth 2 zero
//! end
//! ```
//!
//! Each record is one line of space-separated tokens. Coefficients are
//! reduced integer pairs `p q` with `q > 0`; exponent and coefficient vectors
//! have exactly `r` entries at depth `r`. Terms and factors appear in the
//! internal order, so every object has exactly one valid encoding.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ds::{NcPoly, Word, YPoly};
use crate::error::{Error, Result};
use crate::exact::{Alphabet, Lfd, LinearForm, Monomial, Poly, Rational};
use crate::mould::Mould;

pub const MAGIC: &str = "flexion-mouldfile";
pub const VERSION: u32 = 1;

/// Any object that can live in a mould file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Mould(Mould),
    NcPoly(NcPoly),
    YPoly(YPoly),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Mould(_) => "mould",
            Object::NcPoly(_) => "ncpoly",
            Object::YPoly(_) => "ypoly",
        }
    }

    pub fn into_mould(self) -> Result<Mould> {
        match self {
            Object::Mould(m) => Ok(m),
            o => Err(Error::InvalidArgument(format!("expected a mould, found {}", o.kind()))),
        }
    }

    pub fn into_ncpoly(self) -> Result<NcPoly> {
        match self {
            Object::NcPoly(p) => Ok(p),
            o => Err(Error::InvalidArgument(format!(
                "expected an ncpoly, found {}",
                o.kind()
            ))),
        }
    }
}

impl From<Mould> for Object {
    fn from(m: Mould) -> Self {
        Object::Mould(m)
    }
}

impl From<NcPoly> for Object {
    fn from(p: NcPoly) -> Self {
        Object::NcPoly(p)
    }
}

impl From<YPoly> for Object {
    fn from(p: YPoly) -> Self {
        Object::YPoly(p)
    }
}

fn coeff(c: &Rational) -> String {
    format!("{} {}", c.numer(), c.denom())
}

fn header(out: &mut String) {
    let _ = writeln!(out, "{MAGIC} {VERSION}");
}

fn write_component(out: &mut String, r: usize, x: &Lfd) {
    if x.is_zero() {
        let _ = writeln!(out, "depth {r} zero");
        return;
    }
    let num = x.numerator();
    let _ = writeln!(out, "depth {r} {} {}", num.len(), x.denominator().count());
    for (m, c) in num.terms() {
        out.push_str("term ");
        out.push_str(&coeff(c));
        for i in 0..r {
            let _ = write!(out, " {}", m.exponent(i));
        }
        out.push('\n');
    }
    for (f, mult) in x.denominator() {
        let _ = write!(out, "factor {mult}");
        for i in 0..r {
            let _ = write!(out, " {}", f.coeffs().get(i).copied().unwrap_or(0));
        }
        out.push('\n');
    }
}

pub fn write_mould(m: &Mould) -> String {
    let mut out = String::new();
    header(&mut out);
    let _ = writeln!(out, "mould {} {}", m.alphabet(), m.max_depth());
    for (r, x) in m.components().iter().enumerate() {
        write_component(&mut out, r, x);
    }
    out.push_str("end\n");
    out
}

pub fn write_ncpoly(p: &NcPoly) -> String {
    let mut out = String::new();
    header(&mut out);
    if p.is_zero() {
        out.push_str("ncpoly zero\n");
    } else {
        let _ = writeln!(out, "ncpoly {}", p.len());
        for (w, c) in p.terms() {
            let word = if w.is_empty() { "1".to_string() } else { w.to_string() };
            let _ = writeln!(out, "word {} {word}", coeff(c));
        }
    }
    out.push_str("end\n");
    out
}

pub fn write_ypoly(p: &YPoly) -> String {
    let mut out = String::new();
    header(&mut out);
    if p.is_zero() {
        out.push_str("ypoly zero\n");
    } else {
        let _ = writeln!(out, "ypoly {}", p.len());
        for (w, c) in p.terms() {
            out.push_str("yword ");
            out.push_str(&coeff(c));
            for i in w {
                let _ = write!(out, " {i}");
            }
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

pub fn write_objects(objs: &[Object]) -> String {
    objs.iter().map(write_object).collect()
}

pub fn write_object(o: &Object) -> String {
    match o {
        Object::Mould(m) => write_mould(m),
        Object::NcPoly(p) => write_ncpoly(p),
        Object::YPoly(p) => write_ypoly(p),
    }
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last: usize,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<_> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_ascii_whitespace().collect::<Vec<_>>()))
            .collect();
        let last = lines.len();
        Lines { lines, pos: 0, last }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let item = self
            .lines
            .get(self.pos)
            .cloned()
            .ok_or_else(|| err(self.last + 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        if item.1.is_empty() {
            return Err(err(item.0, format!("blank line, expected {what}")));
        }
        Ok(item)
    }

    fn keyword(&mut self, kw: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, toks) = self.next(&format!("`{kw}` record"))?;
        if toks[0] != kw {
            return Err(err(n, format!("expected `{kw}` record, found `{}`", toks[0])));
        }
        Ok((n, toks[1..].to_vec()))
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse::<T>()
        .map_err(|_| err(line, format!("malformed {what} `{tok}`")))
}

fn rational(line: usize, p: &str, q: &str) -> Result<Rational> {
    let p: BigInt = num(line, p, "numerator")?;
    let q: BigInt = num(line, q, "denominator")?;
    if q <= BigInt::zero() {
        return Err(err(line, "denominator must be positive"));
    }
    let r = Rational::new(p.clone(), q.clone());
    if r.numer() != &p || r.denom() != &q {
        return Err(err(line, "coefficient is not in lowest terms"));
    }
    if r.is_zero() {
        return Err(err(line, "zero coefficient"));
    }
    Ok(r)
}

fn arity(line: usize, toks: &[&str], n: usize, what: &str) -> Result<()> {
    if toks.len() != n {
        return Err(err(line, format!("{what} expects {n} fields, found {}", toks.len())));
    }
    Ok(())
}

fn parse_component(lines: &mut Lines, alphabet: Alphabet, r: usize) -> Result<(usize, Lfd)> {
    let (n, toks) = lines.keyword("depth")?;
    if toks.is_empty() {
        return Err(err(n, "depth record is empty"));
    }
    let got: usize = num(n, toks[0], "depth")?;
    if got != r {
        return Err(err(n, format!("expected depth {r}, found {got}")));
    }
    if toks.len() == 2 && toks[1] == "zero" {
        return Ok((n, Lfd::zero(alphabet)));
    }
    arity(n, &toks, 3, "depth record")?;
    let n_terms: usize = num(n, toks[1], "term count")?;
    let n_factors: usize = num(n, toks[2], "factor count")?;
    if n_terms == 0 {
        return Err(err(n, "a zero component must be written `zero`"));
    }
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        let (ln, t) = lines.keyword("term")?;
        arity(ln, &t, r + 2, "term")?;
        let c = rational(ln, t[0], t[1])?;
        let e = t[2..]
            .iter()
            .map(|s| num::<u16>(ln, s, "exponent"))
            .collect::<Result<Vec<_>>>()?;
        terms.push((ln, Monomial::from_exponents(&e), c));
    }
    let mut den = Vec::with_capacity(n_factors);
    for _ in 0..n_factors {
        let (ln, t) = lines.keyword("factor")?;
        arity(ln, &t, r + 1, "factor")?;
        let mult: u32 = num(ln, t[0], "multiplicity")?;
        if mult == 0 {
            return Err(err(ln, "multiplicity must be positive"));
        }
        let mut c = t[1..]
            .iter()
            .map(|s| num::<i64>(ln, s, "form coefficient"))
            .collect::<Result<Vec<_>>>()?;
        while c.last() == Some(&0) {
            c.pop();
        }
        let f = LinearForm::from_normalized(alphabet, &c)
            .ok_or_else(|| err(ln, "linear form is zero or not normalized"))?;
        den.push((ln, f, mult));
    }
    let poly = Poly::from_terms(alphabet, terms.iter().map(|(_, m, c)| (m.clone(), c.clone())));
    if poly.len() != terms.len() {
        return Err(err(n, "repeated monomial"));
    }
    // Order and cancellation are enforced by re-encoding.
    let x = Lfd::new(poly, den.iter().map(|(_, f, m)| (f.clone(), *m)))?;
    let mut expect = String::new();
    write_component(&mut expect, r, &x);
    let mut found = vec![n];
    found.extend(terms.iter().map(|t| t.0));
    found.extend(den.iter().map(|d| d.0));
    let expect: Vec<&str> = expect.lines().collect();
    if expect.len() != found.len() {
        return Err(err(n, "non-canonical component (cancellable factor or repeated form)"));
    }
    for (want, &ln) in expect.iter().zip(&found) {
        let have = lines
            .lines
            .iter()
            .find(|l| l.0 == ln)
            .map(|l| l.1.join(" "))
            .unwrap_or_default();
        if *want != have {
            return Err(err(ln, format!("non-canonical record, expected `{want}`")));
        }
    }
    Ok((n, x))
}

fn parse_body(lines: &mut Lines) -> Result<Object> {
    let (n, toks) = lines.next("object header")?;
    let obj = match toks[0] {
        "mould" => {
            arity(n, &toks[1..], 2, "mould header")?;
            let alphabet = match toks[1] {
                "u" => Alphabet::U,
                "v" => Alphabet::V,
                a => return Err(err(n, format!("unknown alphabet `{a}`"))),
            };
            let depth: usize = num(n, toks[2], "max depth")?;
            let mut comps = Vec::with_capacity(depth + 1);
            for r in 0..=depth {
                let (ln, x) = parse_component(lines, alphabet, r)?;
                if r == 0 && x.constant_value().is_none() && !x.is_zero() {
                    return Err(err(ln, "depth-0 component must be constant"));
                }
                comps.push(x);
            }
            Object::Mould(Mould::new(alphabet, comps).map_err(|e| err(n, e.to_string()))?)
        }
        "ncpoly" => {
            arity(n, &toks[1..], 1, "ncpoly header")?;
            let mut p = NcPoly::zero();
            if toks[1] != "zero" {
                let count: usize = num(n, toks[1], "term count")?;
                if count == 0 {
                    return Err(err(n, "a zero polynomial must be written `zero`"));
                }
                let mut prev: Option<Word> = None;
                for _ in 0..count {
                    let (ln, t) = lines.keyword("word")?;
                    arity(ln, &t, 3, "word")?;
                    let c = rational(ln, t[0], t[1])?;
                    let w = Word::parse(t[2]).map_err(|_| err(ln, format!("malformed word `{}`", t[2])))?;
                    if prev.as_ref().is_some_and(|p| *p >= w) {
                        return Err(err(ln, "words out of order or repeated"));
                    }
                    prev = Some(w.clone());
                    p.add_term(w, c);
                }
            }
            Object::NcPoly(p)
        }
        "ypoly" => {
            arity(n, &toks[1..], 1, "ypoly header")?;
            let mut terms = Vec::new();
            if toks[1] != "zero" {
                let count: usize = num(n, toks[1], "term count")?;
                if count == 0 {
                    return Err(err(n, "a zero polynomial must be written `zero`"));
                }
                for _ in 0..count {
                    let (ln, t) = lines.keyword("yword")?;
                    if t.len() < 2 {
                        return Err(err(ln, "yword expects a coefficient"));
                    }
                    let c = rational(ln, t[0], t[1])?;
                    let w = t[2..]
                        .iter()
                        .map(|s| match num::<u32>(ln, s, "index")? {
                            0 => Err(err(ln, "indices start at 1")),
                            i => Ok(i),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    terms.push((ln, w, c));
                }
            }
            let p = YPoly::from_terms(terms.iter().map(|(_, w, c)| (w.clone(), c.clone())));
            for ((ln, w, _), (got, _)) in terms.iter().zip(p.terms()) {
                if w != got {
                    return Err(err(*ln, "ywords out of order or repeated"));
                }
            }
            if p.len() != terms.len() {
                return Err(err(n, "repeated yword"));
            }
            Object::YPoly(p)
        }
        other => return Err(err(n, format!("unknown object `{other}`"))),
    };
    lines.keyword("end")?;
    Ok(obj)
}

fn read_header(lines: &mut Lines) -> Result<()> {
    let (n, toks) = lines.next("file header")?;
    if toks[0] != MAGIC {
        return Err(err(n, format!("expected `{MAGIC}` header")));
    }
    arity(n, &toks[1..], 1, "header")?;
    if toks[1] != VERSION.to_string() {
        return Err(Error::Version(toks[1].to_string()));
    }
    Ok(())
}

/// Parses a sequence of objects, each with its own header. Only the
/// canonical encoding is accepted.
pub fn read_objects(text: &str) -> Result<Vec<Object>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    loop {
        while lines.lines.get(lines.pos).is_some_and(|l| l.1.is_empty()) {
            lines.pos += 1;
        }
        if lines.pos >= lines.lines.len() {
            break;
        }
        read_header(&mut lines)?;
        out.push(parse_body(&mut lines)?);
    }
    Ok(out)
}

/// Parses exactly one object.
pub fn read_object(text: &str) -> Result<Object> {
    let mut lines = Lines::new(text);
    read_header(&mut lines)?;
    let obj = parse_body(&mut lines)?;
    if let Some((ln, _)) = lines.lines[lines.pos..].iter().find(|l| !l.1.is_empty()) {
        return Err(err(*ln, "trailing content after `end`"));
    }
    Ok(obj)
}

pub fn read_mould(text: &str) -> Result<Mould> {
    read_object(text)?.into_mould()
}

pub fn read_ncpoly(text: &str) -> Result<NcPoly> {
    read_object(text)?.into_ncpoly()
}
