use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::{fmt_rational, int, Alphabet, LinExpr, LinearForm, Rational};
use crate::error::{Error, Result};

/// Exponent vector with trailing zeros trimmed, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        let mut v: SmallVec<[u16; 8]> = SmallVec::from_elem(0, i + 1);
        v[i] = e;
        Monomial(v)
    }

    pub fn from_exponents(e: &[u16]) -> Self {
        let mut v: SmallVec<[u16; 8]> = e.iter().copied().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Number of variable slots in use (highest index + 1).
    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        Monomial(v)
    }

    /// Splits off the exponent of variable `i`.
    fn split(&self, i: usize) -> (u16, Monomial) {
        let e = self.exponent(i);
        if e == 0 {
            return (0, self.clone());
        }
        let mut v = self.0.clone();
        v[i] = 0;
        while v.last() == Some(&0) {
            v.pop();
        }
        (e, Monomial(v))
    }

    fn display(&self, alphabet: Alphabet) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{}{}", alphabet.letter(), i + 1)),
                _ => parts.push(format!("{}{}^{}", alphabet.letter(), i + 1, e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients in one alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(alphabet: Alphabet) -> Self {
        Poly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Poly::constant(alphabet, Rational::one())
    }

    pub fn constant(alphabet: Alphabet, c: Rational) -> Self {
        let mut p = Poly::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(alphabet: Alphabet, i: usize) -> Self {
        Poly::monomial(alphabet, Monomial::var(i), Rational::one())
    }

    pub fn monomial(alphabet: Alphabet, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_linear(alphabet: Alphabet, e: &LinExpr) -> Self {
        Poly::from_terms(
            alphabet,
            e.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (Monomial::var(i), int(c))),
        )
    }

    pub fn from_form(form: &LinearForm) -> Self {
        Poly::from_linear(form.alphabet(), &form.expr())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a constant polynomial (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn n_vars(&self) -> usize {
        self.terms.keys().map(|m| m.n_vars()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.alphabet);
        }
        Poly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.alphabet);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each variable `x_i` by the linear expression `images[i]`
    /// over the `target` alphabet.
    pub fn substitute(&self, target: Alphabet, images: &[LinExpr]) -> Result<Poly> {
        let nv = self.n_vars();
        for i in 0..nv {
            let used = self.terms.keys().any(|m| m.exponent(i) > 0);
            if used && i >= images.len() {
                return Err(Error::MissingImage(format!("{}{}", self.alphabet.letter(), i + 1)));
            }
        }
        if let Some(singles) = images[..nv.min(images.len())]
            .iter()
            .map(|e| e.single_var())
            .collect::<Option<Vec<_>>>()
        {
            return Ok(self.substitute_monomial(target, &singles));
        }
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(nv);
        for i in 0..nv {
            let maxe = self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0);
            let base = Poly::from_linear(target, &images[i]);
            let mut v = vec![Poly::one(target)];
            for k in 1..=maxe as usize {
                let next = &v[k - 1] * &base;
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out.add_scaled(&t, &Rational::one());
        }
        Ok(out)
    }

    fn substitute_monomial(&self, target: Alphabet, singles: &[(usize, i64)]) -> Poly {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[u16; 8]> = SmallVec::new();
            let mut coeff = BigInt::one();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (j, s) = singles[i];
                if exps.len() <= j {
                    exps.resize(j + 1, 0);
                }
                exps[j] += e;
                if s != 1 {
                    coeff *= num_traits::pow(BigInt::from(s), e as usize);
                }
            }
            out.add_term(Monomial(exps), c * Rational::from_integer(coeff));
        }
        out
    }

    /// Exact division by a linear form; `None` when the form does not divide.
    pub fn div_exact_linear(&self, l: &LinearForm) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let k = l.lead();
        let c = int(l.coeffs()[k]);
        let mut rest = l.expr().coeffs().to_vec();
        rest[k] = 0;
        let r = Poly::from_linear(self.alphabet, &LinExpr::from_coeffs(&rest));
        let mut slices: Vec<Poly> = Vec::new();
        for (m, coef) in &self.terms {
            let (e, rem) = m.split(k);
            let e = e as usize;
            if slices.len() <= e {
                slices.resize(e + 1, Poly::zero(self.alphabet));
            }
            slices[e].terms.insert(rem, coef.clone());
        }
        let n = slices.len() - 1;
        if n == 0 {
            return None;
        }
        let inv_c = c.recip();
        let mut q: Vec<Poly> = vec![Poly::zero(self.alphabet); n];
        q[n - 1] = slices[n].scale(&inv_c);
        for j in (1..n).rev() {
            let t = &slices[j] - &(&r * &q[j]);
            q[j - 1] = t.scale(&inv_c);
        }
        if slices[0] != &r * &q[0] {
            return None;
        }
        let mut out = Poly::zero(self.alphabet);
        for (j, qj) in q.into_iter().enumerate() {
            let xk = Monomial::var_pow(k, j as u16);
            for (m, coef) in qj.terms {
                out.terms.insert(m.mul(&xk), coef);
            }
        }
        Some(out)
    }

    /// `c` with `self / c` having coprime integer coefficients and a positive
    /// leading coefficient. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return Rational::zero();
        };
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let c = Rational::new(g, l);
        if lead.is_negative() {
            -c
        } else {
            c
        }
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            let mono = m.display(self.alphabet);
            let body = if mono.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                mono
            } else {
                format!("{}*{}", fmt_rational(&mag), mono)
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

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.alphabet);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c).with_alphabet(self.alphabet);
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}
