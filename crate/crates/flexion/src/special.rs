//! Bernoulli numbers, `dupal`, `pal`, `pil` and the checks built on them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::ds::{ma, NcPoly};
use crate::error::Result;
use crate::exact::{Alphabet, Lfd, LinExpr, Monomial, Poly, Rational};
use crate::gari::{adari, ganit_explicit, invgari};
use crate::mould::{dar, dur, letters, mu, push, swap, Mould};
use crate::report::{Conventions, VerificationReport};
use crate::symmetry::{classify, is_symmetral, pic, Membership};

/// Sign convention for `B_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum B1Convention {
    /// `B_1 = -1/2`, the coefficients of `t/(e^t - 1)`.
    #[default]
    Minus,
    /// `B_1 = +1/2`.
    Plus,
}

impl B1Convention {
    pub fn parse(s: &str) -> Option<B1Convention> {
        match s {
            "-1/2" | "minus" => Some(B1Convention::Minus),
            "1/2" | "+1/2" | "plus" => Some(B1Convention::Plus),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            B1Convention::Minus => "-1/2",
            B1Convention::Plus => "+1/2",
        }
    }

    pub fn conventions(self) -> Conventions {
        Conventions {
            b1: self.as_str().into(),
            ..Conventions::default()
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Bernoulli numbers `B_0..B_n` from `sum_{k<=m} binom(m+1, k) B_k = 0`.
pub fn bernoulli_table(n: usize, conv: B1Convention) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s: Rational = (0..m).map(|k| Rational::from_integer(binomial(m + 1, k)) * &b[k]).sum();
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    if conv == B1Convention::Plus && n >= 1 {
        b[1] = -b[1].clone();
    }
    b
}

pub fn bernoulli(n: usize, conv: B1Convention) -> Rational {
    bernoulli_table(n, conv).pop().expect("table is nonempty")
}

/// `dupal(u_1..u_r) = (B_r/r!) (1/(u_1⋯u_r)) sum_{i<r} (-1)^i binom(r-1, i) u_{i+1}`,
/// with `dupal(∅) = 0`.
pub fn dupal(depth: usize, conv: B1Convention) -> Result<Mould> {
    let b = bernoulli_table(depth, conv);
    Mould::from_fn(Alphabet::U, depth, |r| {
        if r == 0 || b[r].is_zero() {
            return Ok(Lfd::zero(Alphabet::U));
        }
        let c = &b[r] / Rational::from_integer(factorial(r));
        let mut num = Poly::zero(Alphabet::U);
        for i in 0..r {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            num.add_term(Monomial::var(i), Rational::from_integer(sign * binomial(r - 1, i)) * &c);
        }
        let mut x = Lfd::from_poly(num);
        for i in 0..r {
            x = x.div_linear(&LinExpr::var(i))?;
        }
        Ok(x)
    })
}

/// `pal`, memoized per depth, from `dur·pal = mu(pal, dupal)` and
/// `pal(∅) = 1`.
#[derive(Clone, Debug)]
pub struct PalCache {
    conv: B1Convention,
    dupal: Mould,
    comps: Vec<Lfd>,
}

impl PalCache {
    pub fn new(depth: usize, conv: B1Convention) -> Result<PalCache> {
        let dupal = dupal(depth, conv)?;
        let mut comps = vec![Lfd::one(Alphabet::U)];
        for r in 1..=depth {
            let terms = (0..r)
                .into_par_iter()
                .map(|k| {
                    let right = dupal.eval(&letters(k, r))?;
                    Ok(&comps[k] * &right)
                })
                .collect::<Result<Vec<_>>>()?;
            let num = Lfd::sum(Alphabet::U, terms);
            comps.push(num.div_linear(&LinExpr::range_sum(0, r))?);
        }
        Ok(PalCache { conv, dupal, comps })
    }

    pub fn convention(&self) -> B1Convention {
        self.conv
    }

    pub fn depth(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn pal(&self) -> Mould {
        Mould::new(Alphabet::U, self.comps.clone()).expect("pal components are u-functions")
    }

    pub fn pil(&self) -> Result<Mould> {
        swap(&self.pal())
    }

    pub fn dupal(&self) -> &Mould {
        &self.dupal
    }

    /// Recomputes `dur·pal` and `mu(pal, dupal)` and compares them.
    pub fn verify(&self) -> Result<bool> {
        let pal = self.pal();
        Ok(dur(&pal)? == mu(&pal, &self.dupal)?)
    }
}

pub fn pal(depth: usize, conv: B1Convention) -> Result<Mould> {
    Ok(PalCache::new(depth, conv)?.pal())
}

pub fn pil(depth: usize, conv: B1Convention) -> Result<Mould> {
    PalCache::new(depth, conv)?.pil()
}

/// Symmetrality of `pal` and `pil` and the defining recursion.
pub fn check_pal_symmetrality(depth: usize, conv: B1Convention) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("pal-symmetrality").with_conventions(conv.conventions());
    rep.bound("depth", depth);
    let cache = PalCache::new(depth, conv)?;
    rep.check("dur·pal = mu(pal, dupal)", cache.verify()?, None);
    let pal = cache.pal();
    let pil = cache.pil()?;
    rep.check("pal in GARI", pal.in_gari(), None);
    rep.check_moulds("swap(pil) = pal", &swap(&pil)?, &pal);
    for (name, m) in [("pal", &pal), ("pil", &pil)] {
        let d = is_symmetral(m)?;
        rep.check(format!("{name} symmetral"), d.holds(), Some(d.summary()));
    }
    Ok(rep)
}

/// Whether `push(A) = A`.
pub fn is_push_invariant(a: &Mould) -> Result<bool> {
    Ok(push(a)? == *a)
}

/// `swap(adari(pal)·A) = ganit(pic)·(adari(pil)·swap(A))` for a
/// push-invariant u-mould `A`.
pub fn check_fundamental_identity(a: &Mould, conv: B1Convention) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("fundamental-identity").with_conventions(conv.conventions());
    a.require("fundamental identity", Alphabet::U)?;
    let d = a.max_depth();
    rep.bound("depth", d);
    if !is_push_invariant(a)? {
        rep.note("precondition", "input is not push-invariant");
    }
    let cache = PalCache::new(d, conv)?;
    let pal = cache.pal();
    let pil = cache.pil()?;
    let lhs = swap(&adari(&pal, a)?)?;
    let rhs = ganit_explicit(&pic(d), &adari(&pil, &swap(a)?)?)?;
    rep.check_moulds("swap(adari(pal)·A) = ganit(pic)·adari(pil)·swap(A)", &lhs, &rhs);
    Ok(rep)
}

/// `ganit(pic)·adari(pil)·C = C` for each constant mould given.
pub fn check_constant_fixed_points(constants: &[Mould], conv: B1Convention) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("constant-fixed-points").with_conventions(conv.conventions());
    let d = constants.iter().map(Mould::max_depth).max().unwrap_or(0);
    rep.bound("depth", d);
    rep.bound("cases", constants.len());
    let pil = pil(d, conv)?;
    let pc = pic(d);
    for (i, c) in constants.iter().enumerate() {
        let c = c.with_alphabet(Alphabet::V);
        let k = c.max_depth();
        let image = ganit_explicit(&pc.truncate(k), &adari(&pil.truncate(k), &c)?)?;
        rep.check_moulds(format!("case {i}: constant mould fixed"), &image, &c);
    }
    Ok(rep)
}

/// Standard constant moulds for the fixed-point check: all ones, zero,
/// and one concentrated in each depth `1..=depth`.
pub fn constant_cases(depth: usize) -> Vec<Mould> {
    let mut out = vec![
        Mould::constant(Alphabet::V, &vec![Rational::one(); depth + 1]),
        Mould::zero(Alphabet::V, depth),
    ];
    for r in 1..=depth {
        let mut v = vec![Rational::zero(); depth + 1];
        v[r] = Rational::one();
        out.push(Mould::constant(Alphabet::V, &v));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `adari(pal)·A` or `adari(invgari(pal))·A`.
pub fn adari_pal_map(a: &Mould, direction: Direction, conv: B1Convention) -> Result<Mould> {
    a.require("adari_pal_map", Alphabet::U)?;
    let p = pal(a.max_depth(), conv)?;
    match direction {
        Direction::Forward => adari(&p, a),
        Direction::Inverse => adari(&invgari(&p)?, a),
    }
}

/// Round trip through both directions, and the classification of the image.
pub fn check_adari_pal_roundtrip(a: &Mould, conv: B1Convention) -> Result<(VerificationReport, Membership)> {
    let mut rep = VerificationReport::new("adari(pal) round trip").with_conventions(conv.conventions());
    rep.bound("depth", a.max_depth());
    let fwd = adari_pal_map(a, Direction::Forward, conv)?;
    let back = adari_pal_map(&fwd, Direction::Inverse, conv)?;
    rep.check_moulds("inverse(forward(A)) = A", &back, a);
    let fwd_back = adari_pal_map(&adari_pal_map(a, Direction::Inverse, conv)?, Direction::Forward, conv)?;
    rep.check_moulds("forward(inverse(A)) = A", &fwd_back, a);
    let class = classify(&fwd)?;
    Ok((rep, class))
}

/// The polynomial `x - (t/(e^t - 1))(x)` with `t = ad(-y)`, through weight
/// `depth + 1`. The series fixes its own coefficients (`B_1 = -1/2`).
pub fn dar_dupal_series(depth: usize) -> NcPoly {
    let b = bernoulli_table(depth, B1Convention::Minus);
    let y = NcPoly::y();
    let mut out = NcPoly::zero();
    let mut t = NcPoly::x();
    for (n, bn) in b.iter().enumerate().skip(1) {
        // t = ad(-y)^n (x)
        t = y.bracket(&t).scale(&-Rational::one());
        let c = -bn / Rational::from_integer(factorial(n));
        out.add_scaled(&t, &c);
    }
    out
}

/// `dar·dupal = ma(x - (t/(e^t - 1))(x))`, `t = ad(-y)`.
pub fn check_dar_dupal_series(depth: usize, conv: B1Convention) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("dar-dupal").with_conventions(conv.conventions());
    rep.bound("depth", depth);
    let lhs = dar(&dupal(depth, conv)?)?;
    let rhs = ma(&dar_dupal_series(depth), depth)?;
    rep.check_moulds("dar·dupal = ma(x - ad(-y)/(exp(ad(-y)) - 1)(x))", &lhs, &rhs);
    Ok(rep)
}
