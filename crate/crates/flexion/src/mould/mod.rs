//! Moulds and the flexion operator suite.

mod ops;
mod split;

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
pub use crate::exact::Alphabet;
use crate::exact::{Lfd, LinExpr, Rational};
pub use ops::*;
pub use split::WordSplit;

/// Depth-graded family of rational functions, truncated at `max_depth`.
/// The component at depth `r` lives in the variables `x_1..x_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mould {
    alphabet: Alphabet,
    comps: Vec<Lfd>,
}

impl Mould {
    pub fn new(alphabet: Alphabet, comps: Vec<Lfd>) -> Result<Mould> {
        if comps.is_empty() {
            return Err(Error::InvalidArgument("a mould needs a depth-0 component".into()));
        }
        for (r, c) in comps.iter().enumerate() {
            if c.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet,
                    found: c.alphabet(),
                });
            }
            if c.n_vars() > r {
                return Err(Error::InvalidArgument(format!(
                    "component at depth {r} uses variable {}{}",
                    alphabet,
                    c.n_vars()
                )));
            }
        }
        Ok(Mould { alphabet, comps })
    }

    pub(crate) fn from_parts(alphabet: Alphabet, comps: Vec<Lfd>) -> Mould {
        debug_assert!(comps.iter().all(|c| c.alphabet() == alphabet));
        Mould { alphabet, comps }
    }

    pub fn zero(alphabet: Alphabet, max_depth: usize) -> Mould {
        Mould::from_parts(alphabet, vec![Lfd::zero(alphabet); max_depth + 1])
    }

    /// The unit: 1 in depth 0, zero elsewhere.
    pub fn unit(alphabet: Alphabet, max_depth: usize) -> Mould {
        let mut m = Mould::zero(alphabet, max_depth);
        m.comps[0] = Lfd::one(alphabet);
        m
    }

    /// Constant-valued mould with `values[r]` at depth `r`.
    pub fn constant(alphabet: Alphabet, values: &[Rational]) -> Mould {
        Mould::from_parts(
            alphabet,
            values.iter().map(|c| Lfd::constant(alphabet, c.clone())).collect(),
        )
    }

    /// Builds each component independently (in parallel).
    pub fn from_fn(alphabet: Alphabet, max_depth: usize, f: impl Fn(usize) -> Result<Lfd> + Sync) -> Result<Mould> {
        let comps = (0..=max_depth).into_par_iter().map(&f).collect::<Result<Vec<_>>>()?;
        Mould::new(alphabet, comps)
    }

    /// Builds a mould from one expression per depth, e.g. `["0", "1/(2*u1)"]`.
    pub fn parse_components<S: AsRef<str>>(alphabet: Alphabet, comps: &[S]) -> Result<Mould> {
        let comps = comps
            .iter()
            .map(|s| Lfd::parse(s.as_ref(), alphabet))
            .collect::<Result<Vec<_>>>()?;
        Mould::new(alphabet, comps)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn max_depth(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, r: usize) -> &Lfd {
        &self.comps[r]
    }

    pub fn components(&self) -> &[Lfd] {
        &self.comps
    }

    pub fn depth0(&self) -> Rational {
        self.comps[0].constant_value().unwrap_or_else(Rational::zero)
    }

    pub fn in_ari(&self) -> bool {
        self.comps[0].is_zero()
    }

    pub fn in_gari(&self) -> bool {
        self.comps[0].constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Lfd::is_zero)
    }

    pub fn is_polynomial(&self) -> bool {
        self.comps.iter().all(Lfd::is_polynomial)
    }

    /// Whether every component is a constant.
    pub fn is_constant(&self) -> bool {
        self.comps.iter().all(|c| c.constant_value().is_some())
    }

    pub fn truncate(&self, max_depth: usize) -> Mould {
        let d = max_depth.min(self.max_depth());
        Mould::from_parts(self.alphabet, self.comps[..=d].to_vec())
    }

    /// Keeps only the component at depth `r`.
    pub fn concentrate(&self, r: usize) -> Mould {
        let mut m = Mould::zero(self.alphabet, self.max_depth());
        m.comps[r] = self.comps[r].clone();
        m
    }

    /// Same components read in the other alphabet (no substitution).
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Mould {
        Mould::from_parts(alphabet, self.comps.iter().map(|c| c.with_alphabet(alphabet)).collect())
    }

    pub fn set_component(&mut self, r: usize, value: Lfd) -> Result<()> {
        if r > self.max_depth() {
            return Err(Error::DepthExceeded {
                requested: r,
                max_depth: self.max_depth(),
            });
        }
        if value.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet,
                found: value.alphabet(),
            });
        }
        self.comps[r] = value;
        Ok(())
    }

    /// Value of the mould on a word of linear expressions in its own alphabet.
    pub fn eval(&self, word: &[LinExpr]) -> Result<Lfd> {
        let r = word.len();
        let c = self.comps.get(r).ok_or(Error::DepthExceeded {
            requested: r,
            max_depth: self.max_depth(),
        })?;
        if r == 0 || c.is_zero() || c.constant_value().is_some() {
            return Ok(c.clone());
        }
        c.substitute(self.alphabet, word)
    }

    pub(crate) fn check_same(&self, other: &Mould) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet,
                found: other.alphabet,
            });
        }
        Ok(())
    }

    pub(crate) fn require(&self, op: &'static str, alphabet: Alphabet) -> Result<()> {
        if self.alphabet != alphabet {
            return Err(Error::WrongAlphabet { op, expected: alphabet });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Mould) -> Result<Mould> {
        self.combine(other, Rational::one())
    }

    pub fn checked_sub(&self, other: &Mould) -> Result<Mould> {
        self.combine(other, -Rational::one())
    }

    fn combine(&self, other: &Mould, c: Rational) -> Result<Mould> {
        self.check_same(other)?;
        let d = self.max_depth().min(other.max_depth());
        let comps = (0..=d)
            .into_par_iter()
            .map(|r| Lfd::sum(self.alphabet, [self.comps[r].clone(), other.comps[r].scale(&c)]))
            .collect();
        Ok(Mould::from_parts(self.alphabet, comps))
    }

    pub fn neg_values(&self) -> Mould {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Mould {
        Mould::from_parts(self.alphabet, self.comps.iter().map(|x| x.scale(c)).collect())
    }

    /// Exact linear combination `sum c_i m_i`.
    pub fn linear_combination(alphabet: Alphabet, terms: &[(Rational, &Mould)]) -> Result<Mould> {
        let Some(d) = terms.iter().map(|(_, m)| m.max_depth()).min() else {
            return Err(Error::InvalidArgument("empty linear combination".into()));
        };
        for (_, m) in terms {
            if m.alphabet != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet,
                    found: m.alphabet,
                });
            }
        }
        let comps = (0..=d)
            .into_par_iter()
            .map(|r| Lfd::sum(alphabet, terms.iter().map(|(c, m)| m.comps[r].scale(c))))
            .collect();
        Ok(Mould::from_parts(alphabet, comps))
    }

    /// First depth at which two moulds differ, with the difference there.
    pub fn first_difference(&self, other: &Mould) -> Result<Option<(usize, Lfd)>> {
        self.check_same(other)?;
        let d = self.max_depth().min(other.max_depth());
        for r in 0..=d {
            if self.comps[r] != other.comps[r] {
                return Ok(Some((r, &self.comps[r] - &other.comps[r])));
            }
        }
        Ok(None)
    }

    /// Equality up to the smaller truncation depth.
    pub fn agrees_with(&self, other: &Mould) -> bool {
        self.alphabet == other.alphabet && self.comps.iter().zip(other.comps.iter()).all(|(a, b)| a == b)
    }
}

impl fmt::Display for Mould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.alphabet.letter();
        for (r, c) in self.comps.iter().enumerate() {
            let args: Vec<String> = (1..=r).map(|i| format!("{letter}{i}")).collect();
            writeln!(f, "A({}) = {}", args.join(","), c)?;
        }
        Ok(())
    }
}

/// The identity word `x_1..x_r`.
pub fn identity_word(r: usize) -> Vec<LinExpr> {
    (0..r).map(LinExpr::var).collect()
}

/// The word `x_{lo+1}..x_{hi}`.
pub fn letters(lo: usize, hi: usize) -> Vec<LinExpr> {
    (lo..hi).map(LinExpr::var).collect()
}
