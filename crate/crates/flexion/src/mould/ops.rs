use num_traits::One;
use rayon::prelude::*;

use super::{letters, Alphabet, Mould, WordSplit};
use crate::error::Result;
use crate::exact::{Lfd, LinExpr, Poly, Rational};
use crate::report::VerificationReport;

fn build(a: &Mould, b: &Mould, f: impl Fn(usize) -> Result<Vec<Lfd>> + Sync) -> Result<Mould> {
    a.check_same(b)?;
    let alphabet = a.alphabet();
    let d = a.max_depth().min(b.max_depth());
    let comps = (0..=d)
        .into_par_iter()
        .map(|r| f(r).map(|ts| Lfd::sum(alphabet, ts)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mould::from_parts(alphabet, comps))
}

fn signed(x: Lfd, negate: bool) -> Lfd {
    if negate {
        -&x
    } else {
        x
    }
}

/// Terms of `mu(a, b)` at depth `r`.
pub(crate) fn mu_terms(a: &Mould, b: &Mould, r: usize, negate: bool) -> Result<Vec<Lfd>> {
    (0..=r)
        .into_par_iter()
        .filter(|&k| !a.component(k).is_zero() && !b.component(r - k).is_zero())
        .map(|k| {
            let left = a.component(k);
            let right = b.eval(&letters(k, r))?;
            Ok(signed(left * &right, negate))
        })
        .collect()
}

/// Terms of `amit(b)·a` at depth `r`.
pub(crate) fn amit_terms(b: &Mould, a: &Mould, r: usize, negate: bool) -> Result<Vec<Lfd>> {
    let splits: Vec<WordSplit> = WordSplit::all(r)
        .filter(|s| !s.b_empty() && !s.c_empty())
        .filter(|s| !b.component(s.l).is_zero() && !a.component(r - s.l).is_zero())
        .collect();
    splits
        .par_iter()
        .map(|s| {
            let (aw, bw) = match a.alphabet() {
                Alphabet::U => ([s.a(), s.lceil_c()].concat(), s.b()),
                Alphabet::V => ([s.a(), s.c()].concat(), s.b_rfloor()),
            };
            let x = a.eval(&aw)?;
            let y = b.eval(&bw)?;
            Ok(signed(&x * &y, negate))
        })
        .collect()
}

/// Terms of `anit(b)·a` at depth `r`.
pub(crate) fn anit_terms(b: &Mould, a: &Mould, r: usize, negate: bool) -> Result<Vec<Lfd>> {
    let splits: Vec<WordSplit> = WordSplit::all(r)
        .filter(|s| !s.a_empty() && !s.b_empty())
        .filter(|s| !b.component(s.l).is_zero() && !a.component(r - s.l).is_zero())
        .collect();
    splits
        .par_iter()
        .map(|s| {
            let (aw, bw) = match a.alphabet() {
                Alphabet::U => ([s.a_rceil(), s.c()].concat(), s.b()),
                Alphabet::V => ([s.a(), s.c()].concat(), s.lfloor_b()),
            };
            let x = a.eval(&aw)?;
            let y = b.eval(&bw)?;
            Ok(signed(&x * &y, negate))
        })
        .collect()
}

pub fn mu(a: &Mould, b: &Mould) -> Result<Mould> {
    build(a, b, |r| mu_terms(a, b, r, false))
}

pub fn lu(a: &Mould, b: &Mould) -> Result<Mould> {
    build(a, b, |r| {
        let mut t = mu_terms(a, b, r, false)?;
        t.extend(mu_terms(b, a, r, true)?);
        Ok(t)
    })
}

/// `amit(b)·a`.
pub fn amit(b: &Mould, a: &Mould) -> Result<Mould> {
    build(a, b, |r| amit_terms(b, a, r, false))
}

/// `anit(b)·a`.
pub fn anit(b: &Mould, a: &Mould) -> Result<Mould> {
    build(a, b, |r| anit_terms(b, a, r, false))
}

/// `arit(b)·a = amit(b)·a - anit(b)·a`.
pub fn arit(b: &Mould, a: &Mould) -> Result<Mould> {
    build(a, b, |r| {
        let mut t = amit_terms(b, a, r, false)?;
        t.extend(anit_terms(b, a, r, true)?);
        Ok(t)
    })
}

/// `axit(b, c)·a = amit(b)·a + anit(c)·a`.
pub fn axit(b: &Mould, c: &Mould, a: &Mould) -> Result<Mould> {
    b.check_same(c)?;
    let bc = b.truncate(c.max_depth());
    let cb = c.truncate(b.max_depth());
    build(a, &bc, |r| {
        let mut t = amit_terms(&bc, a, r, false)?;
        t.extend(anit_terms(&cb, a, r, false)?);
        Ok(t)
    })
}

/// `ari(a, b) = arit(b)·a + lu(a, b) - arit(a)·b`.
pub fn ari(a: &Mould, b: &Mould) -> Result<Mould> {
    build(a, b, |r| {
        let mut t = amit_terms(b, a, r, false)?;
        t.extend(anit_terms(b, a, r, true)?);
        t.extend(mu_terms(a, b, r, false)?);
        t.extend(mu_terms(b, a, r, true)?);
        t.extend(amit_terms(a, b, r, true)?);
        t.extend(anit_terms(a, b, r, false)?);
        Ok(t)
    })
}

/// `preari(a, b) = arit(b)·a + mu(a, b)`.
pub fn preari(a: &Mould, b: &Mould) -> Result<Mould> {
    build(a, b, |r| {
        let mut t = amit_terms(b, a, r, false)?;
        t.extend(anit_terms(b, a, r, true)?);
        t.extend(mu_terms(a, b, r, false)?);
        Ok(t)
    })
}

/// `preani(a, b) = anit(b)·a + mu(a, b)`, the pre-Lie law whose exponential
/// reproduces the explicit ganit formula.
pub fn preani(a: &Mould, b: &Mould) -> Result<Mould> {
    build(a, b, |r| {
        let mut t = anit_terms(b, a, r, false)?;
        t.extend(mu_terms(a, b, r, false)?);
        Ok(t)
    })
}

fn substitute_each(
    a: &Mould,
    target: Alphabet,
    images: impl Fn(usize) -> Vec<LinExpr> + Sync,
    sign: impl Fn(usize) -> bool + Sync,
) -> Result<Mould> {
    let comps = (0..=a.max_depth())
        .into_par_iter()
        .map(|r| {
            let c = a.component(r);
            let v = if r == 0 {
                c.with_alphabet(target)
            } else {
                c.substitute(target, &images(r))?
            };
            Ok(signed(v, sign(r)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mould::from_parts(target, comps))
}

/// `neg·A(u_1..u_r) = A(-u_1, .., -u_r)`.
pub fn neg(a: &Mould) -> Result<Mould> {
    a.require("neg", Alphabet::U)?;
    substitute_each(
        a,
        Alphabet::U,
        |r| (0..r).map(|i| LinExpr::var(i).neg()).collect(),
        |_| false,
    )
}

/// `push·A(u_1..u_r) = A(-u_1-..-u_r, u_1, .., u_{r-1})`.
pub fn push(a: &Mould) -> Result<Mould> {
    a.require("push", Alphabet::U)?;
    substitute_each(a, Alphabet::U, push_images, |_| false)
}

fn push_images(r: usize) -> Vec<LinExpr> {
    let mut w = vec![LinExpr::range_sum(0, r).neg()];
    w.extend(letters(0, r - 1));
    w
}

/// `mantar·A(x_1..x_r) = (-1)^{r-1} A(x_r, .., x_1)`, either alphabet.
pub fn mantar(a: &Mould) -> Result<Mould> {
    substitute_each(
        a,
        a.alphabet(),
        |r| (0..r).rev().map(LinExpr::var).collect(),
        |r| r > 0 && r % 2 == 0,
    )
}

/// Exchanges the alphabets through the triangular substitutions
/// `u -> (v_r, v_{r-1}-v_r, .., v_1-v_2)` and `v -> (u_1+..+u_r, .., u_1)`.
pub fn swap(a: &Mould) -> Result<Mould> {
    match a.alphabet() {
        Alphabet::U => substitute_each(a, Alphabet::V, swap_u_images, |_| false),
        Alphabet::V => substitute_each(
            a,
            Alphabet::U,
            |r| (0..r).map(|k| LinExpr::range_sum(0, r - k)).collect(),
            |_| false,
        ),
    }
}

fn swap_u_images(r: usize) -> Vec<LinExpr> {
    let mut w = vec![LinExpr::var(r - 1)];
    for k in 1..r {
        w.push(LinExpr::var(r - 1 - k).sub(&LinExpr::var(r - k)));
    }
    w
}

fn multiply_each(a: &Mould, op: &'static str, factor: impl Fn(usize) -> Poly + Sync) -> Result<Mould> {
    a.require(op, Alphabet::U)?;
    let comps = (0..=a.max_depth())
        .into_par_iter()
        .map(|r| a.component(r).mul_poly(&factor(r)))
        .collect();
    Ok(Mould::from_parts(Alphabet::U, comps))
}

/// Multiplication by `u_1 + .. + u_r` (the empty sum kills depth 0).
pub fn dur(a: &Mould) -> Result<Mould> {
    multiply_each(a, "dur", |r| Poly::from_linear(Alphabet::U, &LinExpr::range_sum(0, r)))
}

/// Multiplication by `u_1 ⋯ u_r`.
pub fn dar(a: &Mould) -> Result<Mould> {
    multiply_each(a, "dar", |r| {
        (0..r).fold(Poly::one(Alphabet::U), |p, i| &p * &Poly::var(Alphabet::U, i))
    })
}

/// Replaces each component by the average of its push-orbit.
pub fn push_symmetrize(a: &Mould) -> Result<Mould> {
    a.require("push_symmetrize", Alphabet::U)?;
    let comps = (0..=a.max_depth())
        .into_par_iter()
        .map(|r| {
            let mut cur = a.component(r).clone();
            let mut orbit = vec![cur.clone()];
            if r > 0 {
                let imgs = push_images(r);
                for _ in 0..r {
                    cur = cur.substitute(Alphabet::U, &imgs)?;
                    orbit.push(cur.clone());
                }
            }
            Ok(Lfd::sum(Alphabet::U, orbit).scale(&Rational::new(1.into(), (r as i64 + 1).into())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mould::from_parts(Alphabet::U, comps))
}

/// Checks `swap(ari(swap A, swap B)) = axit(B,-push B)·A - axit(A,-push A)·B + lu(A,B)`
/// on the given moulds, and the push-invariant reduction to `ari(A,B)` after
/// push-symmetrizing both.
pub fn swap_ari_identity_check(a: &Mould, b: &Mould) -> Result<VerificationReport> {
    a.require("swap_ari_identity_check", Alphabet::U)?;
    b.require("swap_ari_identity_check", Alphabet::U)?;
    let mut rep = VerificationReport::new("swap-ari identity");
    rep.bound("depth", a.max_depth().min(b.max_depth()));

    let lhs = swap(&ari(&swap(a)?, &swap(b)?)?)?;
    let pb = push(b)?.neg_values();
    let pa = push(a)?.neg_values();
    let rhs = Mould::linear_combination(
        Alphabet::U,
        &[
            (Rational::one(), &axit(b, &pb, a)?),
            (-Rational::one(), &axit(a, &pa, b)?),
            (Rational::one(), &lu(a, b)?),
        ],
    )?;
    rep.check_moulds("general flexion identity", &lhs, &rhs);

    let sa = push_symmetrize(a)?;
    let sb = push_symmetrize(b)?;
    let lhs = swap(&ari(&swap(&sa)?, &swap(&sb)?)?)?;
    rep.check_moulds("push-invariant reduction", &lhs, &ari(&sa, &sb)?);
    Ok(rep)
}
