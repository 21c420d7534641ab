//! The group side: pre-Lie exponentials, the gari law, adari and ganit.

use std::collections::HashMap;

use num_traits::One;
use rayon::prelude::*;

use crate::ds::ncpoly::{NcPoly, Word, X};
use crate::error::{Error, Result};
use crate::exact::{Alphabet, Lfd, LinExpr, Rational};
use crate::mould::{anit, ari, preani, preari, Mould};
use crate::report::VerificationReport;

/// Which pre-Lie law an exponential or logarithm is taken with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PreLie {
    /// `preari(A,B) = arit(B)·A + mu(A,B)`.
    Ari,
    /// `preani(A,B) = anit(B)·A + mu(A,B)`.
    Ani,
}

impl PreLie {
    fn apply(self, a: &Mould, b: &Mould) -> Result<Mould> {
        match self {
            PreLie::Ari => preari(a, b),
            PreLie::Ani => preani(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PreLie::Ari => "ari",
            PreLie::Ani => "ani",
        }
    }
}

fn require_ari(op: &'static str, a: &Mould) -> Result<()> {
    if a.in_ari() {
        Ok(())
    } else {
        Err(Error::DepthZero {
            op,
            expected: "0",
            found: a.component(0).to_string(),
        })
    }
}

fn require_gari(op: &'static str, a: &Mould) -> Result<()> {
    if a.in_gari() {
        Ok(())
    } else {
        Err(Error::DepthZero {
            op,
            expected: "1",
            found: a.component(0).to_string(),
        })
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// `sum_n P_n / n!` with left-nested powers `P_n = pre(P_{n-1}, A)`.
pub fn exp_prelie(a: &Mould, law: PreLie) -> Result<Mould> {
    require_ari("exp", a)?;
    let d = a.max_depth();
    let mut res = Mould::unit(a.alphabet(), d).checked_add(a)?;
    let mut p = a.clone();
    for n in 2..=d {
        p = law.apply(&p, a)?;
        if p.is_zero() {
            break;
        }
        res = res.checked_add(&p.scale(&(Rational::one() / factorial(n))))?;
    }
    Ok(res)
}

/// Inverse of [`exp_prelie`], solved depth by depth: only the `n = 1` term of
/// the exponential reaches depth `d` through the depth-`d` component.
pub fn log_prelie(g: &Mould, law: PreLie) -> Result<Mould> {
    require_gari("log", g)?;
    let alph = g.alphabet();
    let d = g.max_depth();
    let mut x = g.clone();
    x.set_component(0, Lfd::zero(alph))?;
    for r in 2..=d {
        let e = exp_prelie(&x.truncate(r), law)?;
        let fixed = g.component(r).checked_sub(e.component(r))?;
        let new = x.component(r).checked_add(&fixed)?;
        x.set_component(r, new)?;
    }
    Ok(x)
}

/// The exponential `ARI -> GARI`.
pub fn expari(a: &Mould) -> Result<Mould> {
    exp_prelie(a, PreLie::Ari)
}

/// The logarithm `GARI -> ARI`.
pub fn logari(a: &Mould) -> Result<Mould> {
    log_prelie(a, PreLie::Ari)
}

/// Coefficients of `log(e^x e^y)` in the free algebra, up to word length `n`.
pub fn bch_series(n: usize) -> NcPoly {
    let exp = |g: &NcPoly| {
        let mut out = NcPoly::one();
        let mut pow = NcPoly::one();
        for k in 1..=n {
            pow = pow.mul_truncated(g, n);
            out.add_scaled(&pow, &(Rational::one() / factorial(k)));
        }
        out
    };
    let mut z = exp(&NcPoly::x()).mul_truncated(&exp(&NcPoly::y()), n);
    z.add_term(Word::empty(), -Rational::one());
    let mut out = NcPoly::zero();
    let mut pow = NcPoly::one();
    for k in 1..=n {
        pow = pow.mul_truncated(&z, n);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out.add_scaled(&pow, &Rational::new(sign.into(), (k as i64).into()));
    }
    out
}

/// Campbell-Hausdorff series in the ari bracket, via the Dynkin map
/// `w_1..w_n -> [w_1, [w_2, .. w_n]] / n` applied to `log(e^x e^y)`.
pub fn ch_ari(a: &Mould, b: &Mould) -> Result<Mould> {
    a.check_same(b)?;
    require_ari("ch_ari", a)?;
    require_ari("ch_ari", b)?;
    let d = a.max_depth().min(b.max_depth());
    let (a, b) = (a.truncate(d), b.truncate(d));
    let series = bch_series(d);
    let mut memo: HashMap<Vec<u8>, Mould> = HashMap::new();
    let mut terms = Vec::new();
    for (w, c) in series.terms() {
        let word = w.letters();
        let bracket = nested(word, &a, &b, &mut memo)?;
        if !bracket.is_zero() {
            terms.push((c / Rational::from_integer((word.len() as i64).into()), bracket));
        }
    }
    let refs: Vec<(Rational, &Mould)> = terms.iter().map(|(c, m)| (c.clone(), m)).collect();
    if refs.is_empty() {
        return Ok(Mould::zero(a.alphabet(), d));
    }
    Mould::linear_combination(a.alphabet(), &refs)
}

fn nested(word: &[u8], a: &Mould, b: &Mould, memo: &mut HashMap<Vec<u8>, Mould>) -> Result<Mould> {
    if let Some(m) = memo.get(word) {
        return Ok(m.clone());
    }
    let head = if word[0] == X { a } else { b };
    let m = if word.len() == 1 {
        head.clone()
    } else {
        let tail = nested(&word[1..], a, b, memo)?;
        if tail.is_zero() || head.is_zero() {
            Mould::zero(a.alphabet(), a.max_depth())
        } else {
            ari(head, &tail)?
        }
    };
    memo.insert(word.to_vec(), m.clone());
    Ok(m)
}

/// `gari(A, B) = expari(ch_ari(logari A, logari B))`.
pub fn gari(a: &Mould, b: &Mould) -> Result<Mould> {
    a.check_same(b)?;
    require_gari("gari", a)?;
    require_gari("gari", b)?;
    expari(&ch_ari(&logari(a)?, &logari(b)?)?)
}

/// `invgari(A) = expari(-logari A)`.
pub fn invgari(a: &Mould) -> Result<Mould> {
    require_gari("invgari", a)?;
    expari(&logari(a)?.neg_values())
}

/// Both forms of the adjoint action and whether they agree.
#[derive(Clone, Debug)]
pub struct Adari {
    /// `B + ari(log A, B) + ari(log A, ari(log A, B))/2 + ..`
    pub series: Mould,
    /// `gari(preari(A, B), invgari A)`, with `gari` extended linearly in its
    /// first argument.
    pub conjugation: Mould,
    pub agree: bool,
}

/// Adjoint action by the exponential-of-ad series.
pub fn adari(a: &Mould, b: &Mould) -> Result<Mould> {
    a.check_same(b)?;
    require_gari("adari", a)?;
    let d = a.max_depth().min(b.max_depth());
    let l = logari(&a.truncate(d))?;
    adari_with_log(&l, &b.truncate(d))
}

/// Series form of the adjoint action given `logari(A)`.
pub fn adari_with_log(l: &Mould, b: &Mould) -> Result<Mould> {
    let d = l.max_depth().min(b.max_depth());
    let mut res = b.truncate(d);
    let mut t = res.clone();
    for n in 1..=d {
        t = ari(l, &t)?;
        if t.is_zero() {
            break;
        }
        res = res.checked_add(&t.scale(&(Rational::one() / factorial(n))))?;
    }
    Ok(res)
}

/// Computes both forms of the adjoint action.
pub fn adari_both(a: &Mould, b: &Mould) -> Result<Adari> {
    require_ari("adari", b)?;
    let series = adari(a, b)?;
    let d = series.max_depth();
    let (a, b) = (a.truncate(d), b.truncate(d));
    let inv = invgari(&a)?;
    let lifted = Mould::unit(a.alphabet(), d).checked_add(&preari(&a, &b)?)?;
    let conjugation = gari(&lifted, &inv)?.checked_sub(&inv)?;
    let agree = series == conjugation;
    Ok(Adari {
        series,
        conjugation,
        agree,
    })
}

fn require_v(op: &'static str, a: &Mould) -> Result<()> {
    a.require(op, Alphabet::V)
}

/// The explicit automorphism `ganit(B)·A`: the sum over decompositions
/// `w = b^1 c^1 .. b^s c^s` (all factors nonempty except possibly `c^s`) of
/// `A(b^1..b^s) B(⌊c^1)..B(⌊c^s)`, where `⌊c` subtracts the last letter of
/// the preceding `b`.
pub fn ganit_explicit(b: &Mould, a: &Mould) -> Result<Mould> {
    require_v("ganit", a)?;
    require_v("ganit", b)?;
    require_gari("ganit", b)?;
    let d = a.max_depth().min(b.max_depth());
    Mould::from_fn(Alphabet::V, d, |r| {
        if r == 0 {
            return Ok(a.component(0).clone());
        }
        let decomps = decompositions(r);
        let terms = decomps
            .par_iter()
            .map(|dec| ganit_term(a, b, dec))
            .collect::<Result<Vec<_>>>()?;
        Ok(Lfd::sum(Alphabet::V, terms))
    })
}

/// A decomposition as a list of `(b_start, b_end, c_end)` blocks.
type Decomposition = Vec<(usize, usize, usize)>;

fn decompositions(r: usize) -> Vec<Decomposition> {
    fn rec(pos: usize, r: usize, cur: &mut Decomposition, out: &mut Vec<Decomposition>) {
        for be in pos + 1..=r {
            for ce in be..=r {
                if ce == be && ce != r {
                    continue;
                }
                cur.push((pos, be, ce));
                if ce == r {
                    out.push(cur.clone());
                } else {
                    rec(ce, r, cur, out);
                }
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, r, &mut Vec::new(), &mut out);
    out
}

fn ganit_term(a: &Mould, b: &Mould, dec: &Decomposition) -> Result<Lfd> {
    let mut aw = Vec::new();
    let mut val = Lfd::one(Alphabet::V);
    for &(bs, be, ce) in dec {
        aw.extend((bs..be).map(LinExpr::var));
        if ce > be {
            let last = LinExpr::var(be - 1);
            let cw: Vec<LinExpr> = (be..ce).map(|j| LinExpr::var(j).sub(&last)).collect();
            let f = b.eval(&cw)?;
            if f.is_zero() {
                return Ok(Lfd::zero(Alphabet::V));
            }
            val = &val * &f;
        }
    }
    let x = a.eval(&aw)?;
    Ok(&x * &val)
}

/// `sum_n anit(L)^n·A / n!` with `L` the logarithm of `B` for the given law.
pub fn ganit_expder(b: &Mould, a: &Mould, law: PreLie) -> Result<Mould> {
    require_v("ganit_expder", a)?;
    require_v("ganit_expder", b)?;
    let d = a.max_depth().min(b.max_depth());
    let l = log_prelie(&b.truncate(d), law)?;
    let mut res = a.truncate(d);
    let mut t = res.clone();
    for n in 1..=d {
        t = anit(&l, &t)?;
        if t.is_zero() {
            break;
        }
        res = res.checked_add(&t.scale(&(Rational::one() / factorial(n))))?;
    }
    Ok(res)
}

/// Compares the explicit ganit with both exponential-of-derivation variants.
pub fn compare_ganit(b: &Mould, a: &Mould) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("ganit-consistency");
    rep.bound("depth", a.max_depth().min(b.max_depth()));
    let explicit = ganit_explicit(b, a)?;
    for law in [PreLie::Ani, PreLie::Ari] {
        let other = ganit_expder(b, a, law)?;
        let label = format!("explicit = exp(anit(log_{} B))", law.name());
        match explicit.first_difference(&other)? {
            None => rep.pass(label),
            Some((r, diff)) => {
                let detail = format!("first differs at depth {r}: difference {diff}");
                if law == PreLie::Ari {
                    rep.note(label, detail);
                } else {
                    rep.fail(label, detail);
                }
            }
        }
    }
    Ok(rep)
}

/// Adari consistency of the two forms on given inputs.
pub fn compare_adari(a: &Mould, b: &Mould) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("adari-consistency");
    let both = adari_both(a, b)?;
    rep.bound("depth", both.series.max_depth());
    rep.check_moulds("series form = conjugation form", &both.series, &both.conjugation);
    Ok(rep)
}
