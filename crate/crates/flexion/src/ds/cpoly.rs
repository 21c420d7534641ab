use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::ncpoly::{NcPoly, Word, X, Y};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

/// Polynomial in the free generators `C_i = ad(x)^{i-1} y`, plus the
/// coefficient of `x` (from `Lie[x,y] = Qx + Lie[C]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    pub x: Rational,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// `C_i` as a polynomial in `x`, `y`.
pub fn c_generator(i: u32) -> NcPoly {
    let x = NcPoly::x();
    let mut p = NcPoly::y();
    for _ in 1..i {
        p = x.bracket(&p);
    }
    p
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
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
        let mut p = CPoly::zero();
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
        self.x.is_zero() && self.terms.is_empty()
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.x.is_zero() {
            let m = self.x.abs();
            let body = if m.is_one() {
                "x".to_string()
            } else {
                format!("{}*x", fmt_rational(&m))
            };
            parts.push((self.x.is_negative(), body));
        }
        for (w, c) in &self.terms {
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|a| format!("C{a}")).collect::<Vec<_>>().join("")
            };
            let m = c.abs();
            let body = if w.is_empty() {
                fmt_rational(&m)
            } else if m.is_one() {
                word
            } else {
                format!("{}*{}", fmt_rational(&m), word)
            };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Expands a C-word product into `x`, `y`.
fn expand(w: &[u32], cache: &mut BTreeMap<u32, NcPoly>) -> NcPoly {
    let mut p = NcPoly::one();
    for &a in w {
        let g = cache.entry(a).or_insert_with(|| c_generator(a)).clone();
        p = &p * &g;
    }
    p
}

pub fn from_c_basis(g: &CPoly) -> NcPoly {
    let mut cache = BTreeMap::new();
    let mut out = NcPoly::zero();
    out.add_term(Word(vec![X]), g.x.clone());
    for (w, c) in &g.terms {
        out.add_scaled(&expand(w, &mut cache), c);
    }
    out
}

/// Largest word for the lexicographic order with `x > y` among words of
/// maximal length.
fn leading(f: &NcPoly) -> Option<(Word, Rational)> {
    f.terms()
        .max_by(|(a, _), (b, _)| {
            a.len().cmp(&b.len()).then_with(|| {
                // x = 0 must compare as the larger letter.
                b.letters().cmp(a.letters())
            })
        })
        .map(|(w, c)| (w.clone(), c.clone()))
}

/// Rewrites `f` in the generators `C_i` by successive elimination of the
/// leading word; the leading word of `C_{a_1}..C_{a_r}` is
/// `x^{a_1-1}y..x^{a_r-1}y` with coefficient 1.
pub fn to_c_basis(f: &NcPoly) -> Result<CPoly> {
    let mut rest = f.clone();
    let mut out = CPoly::zero();
    out.x = rest.coeff(&Word(vec![X]));
    rest.add_term(Word(vec![X]), -out.x.clone());
    let mut cache = BTreeMap::new();
    let mut bad = Vec::new();
    while let Some((w, c)) = leading(&rest) {
        if w.is_empty() {
            out.add_term(Vec::new(), c.clone());
            rest.add_term(w, -c);
            continue;
        }
        if w.letters().last() != Some(&Y) {
            bad.push(w.to_string());
            rest.add_term(w, -c);
            continue;
        }
        let cw = super::ypoly::y_word(&w).expect("word ends in y");
        let prod = expand(&cw, &mut cache);
        rest.add_scaled(&prod, &-c.clone());
        out.add_term(cw, c);
    }
    if bad.is_empty() {
        Ok(out)
    } else {
        Err(Error::NotInCAlgebra(bad.join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(c_generator(2), NcPoly::parse("xy - yx").unwrap());
        let g = CPoly::from_terms([(vec![1, 1], Rational::one())]);
        assert_eq!(from_c_basis(&g), NcPoly::parse("yy").unwrap());
    }

    #[test]
    fn rewrite_bracket() {
        let f = c_generator(2).bracket(&c_generator(1));
        let c = to_c_basis(&f).unwrap();
        assert_eq!(c.to_string(), "-C1C2 + C2C1");
        assert_eq!(from_c_basis(&c), f);
        assert!(to_c_basis(&NcPoly::parse("yx").unwrap()).is_err());
    }
}
