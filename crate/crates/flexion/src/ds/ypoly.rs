use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::ncpoly::{NcPoly, Word, X, Y};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Alphabet, Lfd, Rational};
use crate::symmetry::{stuffle_set, Defect, SymmetryDefect};

/// Polynomial in the noncommuting letters `y_1, y_2, ..`; a word is its
/// list of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn weight(w: &[u32]) -> usize {
    w.iter().map(|&a| a as usize).sum()
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn add_term(&mut self, w: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = YPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u32]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|w| weight(w)).max().unwrap_or(0)
    }

    /// Parses sums such as `y2 - 1/2*y1y1`.
    pub fn parse(s: &str) -> Result<YPoly> {
        let err = |msg: String| Error::Parse { line: 1, msg };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = YPoly::zero();
        if compact == "0" {
            return Ok(p);
        }
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for (i, c) in compact.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (neg, body) = match chunk.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            let (coef, word) = match body.rsplit_once('*') {
                Some((c, w)) => (
                    super::ncpoly::parse_rational(c).ok_or_else(|| err(format!("bad coefficient `{c}`")))?,
                    w,
                ),
                None if body.starts_with('y') => (Rational::one(), body),
                None => (
                    super::ncpoly::parse_rational(body).ok_or_else(|| err(format!("bad term `{body}`")))?,
                    "1",
                ),
            };
            let letters = if word == "1" {
                Vec::new()
            } else {
                word.split('y')
                    .skip(1)
                    .map(|d| d.parse::<u32>().ok().filter(|&a| a > 0))
                    .collect::<Option<Vec<u32>>>()
                    .filter(|_| word.starts_with('y'))
                    .ok_or_else(|| err(format!("bad y-word `{word}`")))?
            };
            p.add_term(letters, if neg { -coef } else { coef });
        }
        Ok(p)
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Weight, then depth, then indices.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| (weight(a.0), a.0.len(), a.0).cmp(&(weight(b.0), b.0.len(), b.0)));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|a| format!("y{a}")).collect()
            };
            let mag = c.abs();
            let body = if mag.is_one() && !w.is_empty() {
                word
            } else if w.is_empty() {
                fmt_rational(&mag)
            } else {
                format!("{}*{}", fmt_rational(&mag), word)
            };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Reads a word ending in `y` as a word in `y_i = x^{i-1} y`.
pub fn y_word(w: &Word) -> Option<Vec<u32>> {
    let l = w.letters();
    if l.last() != Some(&Y) {
        return None;
    }
    let mut out = Vec::new();
    let mut run = 0u32;
    for &c in l {
        if c == X {
            run += 1;
        } else {
            out.push(run + 1);
            run = 0;
        }
    }
    Some(out)
}

/// The word `x^{a_1-1} y .. x^{a_r-1} y`.
pub fn xy_word(a: &[u32]) -> Word {
    let mut v = Vec::new();
    for &k in a {
        v.extend(std::iter::repeat_n(X, k as usize - 1));
        v.push(Y);
    }
    Word(v)
}

/// `f_* = pi_y(f) + sum_n ((-1)^{n-1}/n) (f|x^{n-1}y) y_1^n`.
pub fn f_star(f: &NcPoly) -> YPoly {
    let mut out = YPoly::zero();
    for (w, c) in f.terms() {
        if let Some(yw) = y_word(w) {
            out.add_term(yw.clone(), c.clone());
            if yw.len() == 1 {
                let n = yw[0] as i64;
                let sign = if n % 2 == 1 { 1 } else { -1 };
                out.add_term(vec![1; n as usize], c * Rational::new(sign.into(), n.into()));
            }
        }
    }
    out
}

/// Stuffle relations `sum_{w in st(u,v)} (fs|w) = 0` for nonempty y-words
/// with total weight up to the weight of `fs`.
pub fn stuffle_relations_check(fs: &YPoly) -> SymmetryDefect {
    stuffle_check_to(fs, fs.max_weight())
}

/// Y-words (compositions) of weight `n`.
pub fn compositions(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn stuffle_check_to(fs: &YPoly, max_weight: usize) -> SymmetryDefect {
    let mut out = SymmetryDefect {
        relation: "stuffle".into(),
        max_depth: max_weight,
        checked: 0,
        failures: Vec::new(),
        correction: None,
    };
    let label = |w: &[u32]| w.iter().map(|a| format!("y{a}")).collect::<String>();
    for n in 2..=max_weight {
        for k in 1..=n / 2 {
            let left = compositions(k);
            let right = compositions(n - k);
            for u in &left {
                for v in &right {
                    if k == n - k && u > v {
                        continue;
                    }
                    out.checked += 1;
                    let sum: Rational = stuffle_set(u.len(), v.len())
                        .iter()
                        .map(|s| fs.coeff(&s.apply(u, v, |a, b| a + b)))
                        .sum();
                    if !sum.is_zero() {
                        out.failures.push(Defect {
                            left: label(u),
                            right: label(v),
                            value: Lfd::constant(Alphabet::V, sum),
                        });
                    }
                }
            }
        }
    }
    out
}
