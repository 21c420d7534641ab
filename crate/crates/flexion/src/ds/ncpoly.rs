use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

/// A word in the letters `x` (0) and `y` (1), ordered by length, then
/// lexicographically with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

pub const X: u8 = 0;
pub const Y: u8 = 1;

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Word> {
        if s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(X),
                'y' => Ok(Y),
                _ => Err(Error::Parse {
                    line: 1,
                    msg: format!("word `{s}` has a letter other than x, y"),
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&c| c == Y).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &c in &self.0 {
            f.write_str(if c == X { "x" } else { "y" })?;
        }
        Ok(())
    }
}

/// Noncommutative polynomial in `x`, `y` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::term(Word::empty(), Rational::one())
    }

    pub fn x() -> Self {
        NcPoly::term(Word(vec![X]), Rational::one())
    }

    pub fn y() -> Self {
        NcPoly::term(Word(vec![Y]), Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Parses sums such as `xxy - 2*xyx + 1/3*y`.
    pub fn parse(s: &str) -> Result<NcPoly> {
        let err = |msg: String| Error::Parse { line: 1, msg };
        let mut p = NcPoly::zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
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
            if body.is_empty() {
                return Err(err(format!("empty term in `{s}`")));
            }
            let (coef, word) = match body.rsplit_once('*') {
                Some((c, w)) => (
                    parse_rational(c).ok_or_else(|| err(format!("bad coefficient `{c}`")))?,
                    w,
                ),
                None if body.chars().all(|c| c == 'x' || c == 'y') => (Rational::one(), body),
                None => (
                    parse_rational(body).ok_or_else(|| err(format!("bad term `{body}`")))?,
                    "1",
                ),
            };
            let c = if neg { -coef } else { coef };
            p.add_term(Word::parse(word)?, c);
        }
        Ok(p)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Rational) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, d)| (w.clone(), d * c)))
    }

    /// Smallest and largest word length, `None` for zero.
    pub fn weight_range(&self) -> Option<(usize, usize)> {
        let lo = self.terms.keys().map(Word::len).min()?;
        let hi = self.terms.keys().map(Word::len).max()?;
        Some((lo, hi))
    }

    /// Weight when all words have the same length.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        match self.weight_range() {
            Some((lo, hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    pub fn component(&self, weight: usize) -> NcPoly {
        NcPoly::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.len() == weight)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Drops words longer than `max_weight`.
    pub fn truncate(&self, max_weight: usize) -> NcPoly {
        NcPoly::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.len() <= max_weight)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    /// Product truncated at `max_weight`.
    pub fn mul_truncated(&self, other: &NcPoly, max_weight: usize) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            if w1.len() > max_weight {
                continue;
            }
            for (w2, c2) in &other.terms {
                if w1.len() + w2.len() <= max_weight {
                    out.add_term(w1.concat(w2), c1 * c2);
                }
            }
        }
        out
    }

    /// `[f, g] = fg - gf`.
    pub fn bracket(&self, other: &NcPoly) -> NcPoly {
        &(self * other) - &(other * self)
    }

    /// Substitutes `x -> fx`, `y -> fy` (as an algebra morphism), truncated
    /// at `max_weight`; `fx`, `fy` must have no constant term.
    pub fn substitute(&self, fx: &NcPoly, fy: &NcPoly, max_weight: usize) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NcPoly::one();
            for &l in w.letters() {
                acc = acc.mul_truncated(if l == X { fx } else { fy }, max_weight);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if w.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                w.to_string()
            } else {
                format!("{}*{}", fmt_rational(&mag), w)
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        s
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parse_and_display() {
        let p = NcPoly::parse("xxy - 2*xyx + 1/3*y - 1").unwrap();
        assert_eq!(p.to_string(), "-1 + 1/3*y + xxy - 2*xyx");
        assert_eq!(p.coeff(&Word::parse("xyx").unwrap()), rat(-2, 1));
        assert!(NcPoly::parse("xz").is_err());
        assert!(NcPoly::parse("0").unwrap().is_zero());
    }

    #[test]
    fn bracket_of_letters() {
        assert_eq!(NcPoly::x().bracket(&NcPoly::y()), NcPoly::parse("xy - yx").unwrap());
    }
}
