//! Exact arithmetic: rationals, linear forms, sparse polynomials and
//! rational functions whose denominators are products of linear forms.

mod lfd;
pub mod linalg;
mod linear;
mod parse;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use lfd::Lfd;
pub use linalg::{Echelon, SparseRow};
pub use linear::{LinExpr, LinearForm};
pub use poly::{Monomial, Poly};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Variable family of a mould: `u` (lower) or `v` (upper) side of the swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alphabet {
    U,
    V,
}

impl Alphabet {
    pub fn letter(self) -> char {
        match self {
            Alphabet::U => 'u',
            Alphabet::V => 'v',
        }
    }

    pub fn other(self) -> Alphabet {
        match self {
            Alphabet::U => Alphabet::V,
            Alphabet::V => Alphabet::U,
        }
    }

    pub fn parse(s: &str) -> Option<Alphabet> {
        match s {
            "u" => Some(Alphabet::U),
            "v" => Some(Alphabet::V),
            _ => None,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `a/b` or `a`, no spaces.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
