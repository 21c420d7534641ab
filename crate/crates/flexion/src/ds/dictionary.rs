use num_traits::{One, Zero};

use super::cpoly::{from_c_basis, to_c_basis, CPoly};
use super::lie::poisson;
use super::ncpoly::NcPoly;
use super::ypoly::{xy_word, YPoly};
use crate::error::{Error, Result};
use crate::exact::{Alphabet, Lfd, Monomial, Poly, Rational};
use crate::mould::{ari, swap, Mould};
use crate::report::VerificationReport;

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `ma` on a polynomial already written in the `C_i`.
pub fn ma_c(g: &CPoly, depth: usize) -> Result<Mould> {
    if !g.x.is_zero() {
        return Err(Error::InvalidArgument("ma is not defined on the x component".into()));
    }
    let mut comps: Vec<Poly> = vec![Poly::zero(Alphabet::U); depth + 1];
    for (w, c) in g.terms() {
        let r = w.len();
        if r > depth {
            continue;
        }
        let exps: Vec<u16> = w.iter().map(|&a| (a - 1) as u16).collect();
        let total: usize = exps.iter().map(|&e| e as usize).sum();
        comps[r].add_term(Monomial::from_exponents(&exps), c * sign(total));
    }
    Mould::new(Alphabet::U, comps.into_iter().map(Lfd::from_poly).collect())
}

/// `ma: C_{a_1}..C_{a_r} -> (-1)^{a_1+..+a_r-r} u_1^{a_1-1}..u_r^{a_r-1}`,
/// truncated at `depth`.
pub fn ma(f: &NcPoly, depth: usize) -> Result<Mould> {
    ma_c(&to_c_basis(f)?, depth)
}

/// `mi = swap ∘ ma`.
pub fn mi(f: &NcPoly, depth: usize) -> Result<Mould> {
    swap(&ma(f, depth)?)
}

/// Inverse of `ma` on polynomial u-moulds.
pub fn ma_inverse(a: &Mould) -> Result<NcPoly> {
    a.require("ma_inverse", Alphabet::U)?;
    let mut g = CPoly::zero();
    for r in 0..=a.max_depth() {
        let c = a.component(r);
        if !c.is_polynomial() {
            return Err(Error::NotPolynomial(r));
        }
        for (m, coef) in c.numerator().terms() {
            let w: Vec<u32> = (0..r).map(|i| m.exponent(i) as u32 + 1).collect();
            g.add_term(w, coef * sign(m.degree() as usize));
        }
    }
    Ok(from_c_basis(&g))
}

/// The constant v-mould concentrated in depth `n` with value
/// `((-1)^{n-1}/n) (f|x^{n-1}y)`, for `f` homogeneous of weight `n`.
pub fn correction_mould(f: &NcPoly, depth: usize) -> Result<Mould> {
    let mut values = vec![Rational::zero(); depth + 1];
    if f.is_zero() {
        return Ok(Mould::constant(Alphabet::V, &values));
    }
    let n = f.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
    let c = f.coeff(&xy_word(&[n as u32]));
    if n <= depth && n > 0 {
        values[n] = c * sign(n - 1) / Rational::from_integer((n as i64).into());
    }
    Ok(Mould::constant(Alphabet::V, &values))
}

/// Reads `y_{a_1}..y_{a_r}` as `v_1^{a_1-1}..v_r^{a_r-1}`.
pub fn transcription(fs: &YPoly, depth: usize) -> Result<Mould> {
    let mut comps: Vec<Poly> = vec![Poly::zero(Alphabet::V); depth + 1];
    for (w, c) in fs.terms() {
        if w.len() > depth {
            continue;
        }
        let exps: Vec<u16> = w.iter().map(|&a| (a - 1) as u16).collect();
        comps[w.len()].add_term(Monomial::from_exponents(&exps), c.clone());
    }
    Mould::new(Alphabet::V, comps.into_iter().map(Lfd::from_poly).collect())
}

/// Drops the monomials of a polynomial mould whose weight (degree plus
/// depth) exceeds `max_weight`; this matches truncating the polynomial side
/// by word length.
pub fn truncate_weight(a: &Mould, max_weight: usize) -> Result<Mould> {
    let comps = (0..=a.max_depth().min(max_weight))
        .map(|r| {
            let c = a.component(r);
            if !c.is_polynomial() {
                return Err(Error::NotPolynomial(r));
            }
            let kept = c
                .numerator()
                .terms()
                .filter(|(m, _)| m.degree() as usize + r <= max_weight)
                .map(|(m, c)| (m.clone(), c.clone()));
            Ok(Lfd::from_poly(Poly::from_terms(a.alphabet(), kept)))
        })
        .collect::<Result<Vec<_>>>()?;
    Mould::new(a.alphabet(), comps)
}

/// Depth bound sufficient for `ma` of a polynomial of the given weight.
pub fn depth_for(f: &NcPoly) -> usize {
    f.weight_range().map_or(0, |(_, hi)| hi)
}

/// Checks `ma({f,g}) = ari(ma f, ma g)`.
pub fn check_ma_homomorphism(f: &NcPoly, g: &NcPoly) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("ma homomorphism");
    let d = depth_for(f) + depth_for(g);
    rep.bound("depth", d);
    let lhs = ma(&poisson(f, g), d)?;
    let rhs = ari(&ma(f, d)?, &ma(g, d)?)?;
    rep.check_moulds("ma({f,g}) = ari(ma f, ma g)", &lhs, &rhs);
    Ok(rep)
}

/// Checks `mi(f) + correction(f)` against the transcription of `f_*`.
pub fn check_transcription(f: &NcPoly) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("f_* transcription");
    let d = depth_for(f);
    rep.bound("depth", d);
    let lhs = mi(f, d)?.checked_add(&correction_mould(f, d)?)?;
    let rhs = transcription(&super::ypoly::f_star(f), d)?;
    rep.check_moulds("mi(f) + correction = transcription of f_*", &lhs, &rhs);
    Ok(rep)
}
