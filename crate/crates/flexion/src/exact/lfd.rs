use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, int, Alphabet, LinExpr, LinearForm, Poly, Rational};
use crate::error::{Error, Result};

pub(crate) type Den = BTreeMap<LinearForm, u32>;

/// Rational function `num / prod(form^mult)` kept in canonical form: no
/// denominator form divides the numerator, and zero has an empty denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lfd {
    num: Poly,
    den: Den,
}

impl Lfd {
    pub fn zero(alphabet: Alphabet) -> Self {
        Lfd::from_poly(Poly::zero(alphabet))
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Lfd::from_poly(Poly::one(alphabet))
    }

    pub fn constant(alphabet: Alphabet, c: Rational) -> Self {
        Lfd::from_poly(Poly::constant(alphabet, c))
    }

    pub fn from_poly(num: Poly) -> Self {
        Lfd { num, den: Den::new() }
    }

    /// Builds and canonicalizes `num / prod(form^mult)`.
    pub fn new(num: Poly, den: impl IntoIterator<Item = (LinearForm, u32)>) -> Result<Self> {
        let mut d = Den::new();
        for (f, m) in den {
            if f.alphabet() != num.alphabet() {
                return Err(Error::AlphabetMismatch {
                    expected: num.alphabet(),
                    found: f.alphabet(),
                });
            }
            if m > 0 {
                *d.entry(f).or_insert(0) += m;
            }
        }
        Ok(Lfd::canonical(num, d))
    }

    /// `1 / e` for a nonzero linear expression `e`.
    pub fn recip_linear(alphabet: Alphabet, e: &LinExpr) -> Result<Self> {
        let (s, f) = LinearForm::normalize(alphabet, e).ok_or(Error::ZeroDivisor)?;
        let mut den = Den::new();
        den.insert(f, 1);
        Ok(Lfd {
            num: Poly::constant(alphabet, int(s).recip()),
            den,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.num.alphabet()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// Highest variable slot used by numerator or denominator.
    pub fn n_vars(&self) -> usize {
        self.den
            .keys()
            .map(|f| f.n_vars())
            .chain(std::iter::once(self.num.n_vars()))
            .max()
            .unwrap_or(0)
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Lfd {
        Lfd {
            num: self.num.clone().with_alphabet(alphabet),
            den: self.den.iter().map(|(f, &m)| (f.with_alphabet(alphabet), m)).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.den.is_empty();
        }
        self.den
            .iter()
            .all(|(f, &m)| m > 0 && f.alphabet() == self.alphabet() && self.num.div_exact_linear(f).is_none())
    }

    fn canonical(mut num: Poly, mut den: Den) -> Lfd {
        if num.is_zero() {
            return Lfd { num, den: Den::new() };
        }
        for (f, m) in den.iter_mut() {
            while *m > 0 {
                match num.div_exact_linear(f) {
                    Some(q) => {
                        num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, m| *m > 0);
        Lfd { num, den }
    }

    fn check(&self, other: &Lfd) -> Result<()> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet(),
                found: other.alphabet(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Lfd) -> Result<Lfd> {
        self.check(other)?;
        Ok(Lfd::sum(self.alphabet(), [self.clone(), other.clone()]))
    }

    pub fn checked_sub(&self, other: &Lfd) -> Result<Lfd> {
        self.check(other)?;
        Ok(Lfd::sum(self.alphabet(), [self.clone(), -other]))
    }

    pub fn checked_mul(&self, other: &Lfd) -> Result<Lfd> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Lfd::zero(self.alphabet()));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        let num = &self.num * &other.num;
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        if self.den.is_empty() && other.den.is_empty() {
            return Ok(Lfd::from_poly(num));
        }
        Ok(Lfd::canonical(num, den))
    }

    /// Structural equality of canonical forms, checking alphabets.
    pub fn equals(&self, other: &Lfd) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    pub fn scale(&self, c: &Rational) -> Lfd {
        if c.is_zero() {
            return Lfd::zero(self.alphabet());
        }
        Lfd {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Lfd {
        if p.is_zero() {
            return Lfd::zero(self.alphabet());
        }
        if self.den.is_empty() {
            return Lfd::from_poly(&self.num * p);
        }
        Lfd::canonical(&self.num * p, self.den.clone())
    }

    /// `self / e` for a nonzero linear expression `e`.
    pub fn div_linear(&self, e: &LinExpr) -> Result<Lfd> {
        let (s, f) = LinearForm::normalize(self.alphabet(), e).ok_or(Error::ZeroDivisor)?;
        let num = self.num.scale(&int(s).recip());
        if num.is_zero() {
            return Ok(Lfd::zero(self.alphabet()));
        }
        if let Some(q) = num.div_exact_linear(&f) {
            return Ok(Lfd {
                num: q,
                den: self.den.clone(),
            });
        }
        let mut den = self.den.clone();
        *den.entry(f).or_insert(0) += 1;
        Ok(Lfd { num, den })
    }

    /// Exact sum, grouping equal denominators and forming a single least
    /// common denominator.
    pub fn sum(alphabet: Alphabet, items: impl IntoIterator<Item = Lfd>) -> Lfd {
        let mut groups: BTreeMap<Den, Poly> = BTreeMap::new();
        for it in items {
            debug_assert_eq!(it.alphabet(), alphabet);
            if it.is_zero() {
                continue;
            }
            match groups.get_mut(&it.den) {
                Some(p) => p.add_scaled(&it.num, &Rational::one()),
                None => {
                    groups.insert(it.den, it.num);
                }
            }
        }
        groups.retain(|_, p| !p.is_zero());
        match groups.len() {
            0 => return Lfd::zero(alphabet),
            1 => {
                let (den, num) = groups.into_iter().next().unwrap();
                if den.is_empty() {
                    return Lfd::from_poly(num);
                }
                return Lfd::canonical(num, den);
            }
            _ => {}
        }
        let mut lcm = Den::new();
        for den in groups.keys() {
            for (f, &m) in den {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = Poly::zero(alphabet);
        let mut form_polys: BTreeMap<&LinearForm, Poly> = BTreeMap::new();
        for f in lcm.keys() {
            form_polys.insert(f, Poly::from_form(f));
        }
        for (den, p) in &groups {
            let mut term = p.clone();
            for (f, &m) in &lcm {
                let have = den.get(f).copied().unwrap_or(0);
                if m > have {
                    term = &term * &form_polys[f].pow(m - have);
                }
            }
            num.add_scaled(&term, &Rational::one());
        }
        Lfd::canonical(num, lcm)
    }

    /// Replaces `x_i` by `images[i]`, producing a value over `target`.
    pub fn substitute(&self, target: Alphabet, images: &[LinExpr]) -> Result<Lfd> {
        let mut num = self.num.substitute(target, images)?;
        if self.den.is_empty() {
            return Ok(Lfd::from_poly(num));
        }
        let mut den = Den::new();
        let mut scale = Rational::one();
        for (f, &m) in &self.den {
            let img = f
                .expr()
                .substitute(images)
                .ok_or_else(|| Error::MissingImage(format!("{}", f)))?;
            let (s, g) = LinearForm::normalize(target, &img).ok_or(Error::ZeroDivisor)?;
            if s != 1 {
                scale *= num_traits::pow(int(s), m as usize);
            }
            *den.entry(g).or_insert(0) += m;
        }
        if !scale.is_one() {
            num = num.scale(&scale.recip());
        }
        if independent(images, self.n_vars()) {
            debug_assert!(Lfd {
                num: num.clone(),
                den: den.clone()
            }
            .is_canonical());
            return Ok(Lfd { num, den });
        }
        Ok(Lfd::canonical(num, den))
    }

    pub fn display(&self) -> String {
        if self.den.is_empty() {
            return self.num.display();
        }
        let c = self.num.content();
        let p = self.num.scale(&c.recip());
        let a = Rational::from_integer(c.numer().clone());
        let b = c.denom().clone();
        let mut out = String::new();
        if a.is_negative() {
            out.push('-');
        }
        let a = a.abs();
        if p.is_one_poly() {
            out.push_str(&fmt_rational(&a));
        } else {
            let body = if p.len() > 1 {
                format!("({})", p.display())
            } else {
                p.display()
            };
            if a.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&a), body));
            }
        }
        let mut factors = Vec::new();
        if !b.is_one() {
            factors.push(b.to_string());
        }
        for (f, &m) in &self.den {
            let base = if f.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                format!("({})", f)
            } else {
                f.to_string()
            };
            if m == 1 {
                factors.push(base);
            } else {
                factors.push(format!("{base}^{m}"));
            }
        }
        out.push('/');
        if factors.len() == 1 {
            out.push_str(&factors[0]);
        } else {
            out.push_str(&format!("({})", factors.join("*")));
        }
        out
    }
}

/// Whether the images of the first `n` variables are linearly independent,
/// in which case substitution preserves canonical form.
fn independent(images: &[LinExpr], n: usize) -> bool {
    if n > images.len() {
        return false;
    }
    let width = images[..n].iter().map(|e| e.coeffs().len()).max().unwrap_or(0);
    if width < n {
        return false;
    }
    let mut rows: Vec<Vec<i128>> = images[..n]
        .iter()
        .map(|e| (0..width).map(|j| e.coeff(j) as i128).collect())
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..n).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..n {
            if rows[r][col] != 0 {
                let (a, b) = (rows[rank][col], rows[r][col]);
                for j in col..width {
                    rows[r][j] = rows[r][j] * a - rows[rank][j] * b;
                }
                let g = rows[r].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
        if rank == n {
            return true;
        }
    }
    rank == n
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for Lfd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Operator forms panic on alphabet mismatch; use the `checked_*` methods
/// for fallible arithmetic.
impl Add for &Lfd {
    type Output = Lfd;
    fn add(self, rhs: &Lfd) -> Lfd {
        self.checked_add(rhs).expect("alphabet mismatch in Lfd addition")
    }
}

impl Sub for &Lfd {
    type Output = Lfd;
    fn sub(self, rhs: &Lfd) -> Lfd {
        self.checked_sub(rhs).expect("alphabet mismatch in Lfd subtraction")
    }
}

impl Mul for &Lfd {
    type Output = Lfd;
    fn mul(self, rhs: &Lfd) -> Lfd {
        self.checked_mul(rhs).expect("alphabet mismatch in Lfd product")
    }
}

impl Neg for &Lfd {
    type Output = Lfd;
    fn neg(self) -> Lfd {
        Lfd {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn u(i: usize) -> Poly {
        Poly::var(Alphabet::U, i)
    }

    fn form(a: Alphabet, c: &[i64]) -> LinearForm {
        LinearForm::normalize(a, &LinExpr::from_coeffs(c)).unwrap().1
    }

    #[test]
    fn halves_add_up() {
        let h = Lfd::recip_linear(Alphabet::U, &LinExpr::var(0))
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(&h + &h, Lfd::recip_linear(Alphabet::U, &LinExpr::var(0)).unwrap());
        assert_eq!(h.to_string(), "1/(2*u1)");
    }

    #[test]
    fn pal_depth_two_symmetrization() {
        let den = [
            (form(Alphabet::U, &[1]), 1),
            (form(Alphabet::U, &[0, 1]), 1),
            (form(Alphabet::U, &[1, 1]), 1),
        ];
        let a = Lfd::new((&u(0) + &u(1).scale(&int(2))).scale(&rat(1, 12)), den.clone()).unwrap();
        let b = Lfd::new((&u(1) + &u(0).scale(&int(2))).scale(&rat(1, 12)), den).unwrap();
        let expect = Lfd::new(
            Poly::constant(Alphabet::U, rat(1, 4)),
            [(form(Alphabet::U, &[1]), 1), (form(Alphabet::U, &[0, 1]), 1)],
        )
        .unwrap();
        assert_eq!(&a + &b, expect);
        assert_eq!(a.to_string(), "(u1 + 2*u2)/(12*u1*u2*(u1 + u2))");
    }

    #[test]
    fn canonicalization_cancels() {
        let s = form(Alphabet::U, &[1, 1]);
        let x = Lfd::new(&u(0) + &u(1), [(s.clone(), 1), (form(Alphabet::U, &[1]), 1)]).unwrap();
        assert_eq!(x, Lfd::recip_linear(Alphabet::U, &LinExpr::var(0)).unwrap());
        let d = form(Alphabet::U, &[1, -1]);
        let y = Lfd::new(&u(0).pow(2) - &u(1).pow(2), [(d, 1)]).unwrap();
        assert_eq!(y, Lfd::from_poly(&u(0) + &u(1)));
        assert!(y.is_canonical());
    }

    #[test]
    fn equality_examples() {
        let a = Lfd::recip_linear(Alphabet::U, &LinExpr::var(0))
            .unwrap()
            .scale(&rat(1, 2));
        let b = Lfd::recip_linear(Alphabet::U, &LinExpr::var(0).neg().neg())
            .unwrap()
            .scale(&rat(2, 4));
        assert!(a.equals(&b).unwrap());
        let c = Lfd::new(u(0), [(form(Alphabet::U, &[1]), 1), (form(Alphabet::U, &[1, 1]), 1)]).unwrap();
        assert_eq!(c, Lfd::recip_linear(Alphabet::U, &LinExpr::range_sum(0, 2)).unwrap());
        let d = Lfd::recip_linear(Alphabet::U, &LinExpr::var(1)).unwrap();
        assert!(!Lfd::recip_linear(Alphabet::U, &LinExpr::var(0))
            .unwrap()
            .equals(&d)
            .unwrap());
        let v = Lfd::recip_linear(Alphabet::V, &LinExpr::var(0)).unwrap();
        assert!(matches!(v.equals(&d), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn products() {
        let a = Lfd::recip_linear(Alphabet::V, &LinExpr::var(0)).unwrap();
        let b = Lfd::recip_linear(Alphabet::V, &LinExpr::var(1)).unwrap();
        assert_eq!((&a * &b).to_string(), "1/(v1*v2)");
    }

    #[test]
    fn substitution_that_merges_forms_recanonicalizes() {
        // (u1 - u2)/(u1*u2) at u1 = u2 = v1 collapses to zero
        let x = Lfd::new(
            &u(0) - &u(1),
            [(form(Alphabet::U, &[1]), 1), (form(Alphabet::U, &[0, 1]), 1)],
        )
        .unwrap();
        let imgs = [LinExpr::var(0), LinExpr::var(0)];
        assert!(x.substitute(Alphabet::V, &imgs).unwrap().is_zero());
        // 1/(u1 + u2) at (v1, -v2) gives 1/(v1 - v2)
        let y = Lfd::recip_linear(Alphabet::U, &LinExpr::range_sum(0, 2)).unwrap();
        let imgs = [LinExpr::var(0), LinExpr::var(1).neg()];
        assert_eq!(y.substitute(Alphabet::V, &imgs).unwrap().to_string(), "1/(v1 - v2)");
    }
}
