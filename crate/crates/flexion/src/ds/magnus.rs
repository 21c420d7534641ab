use num_traits::One;

use super::dictionary::{ma, truncate_weight};
use super::lie::{derivation, poisson};
use super::ncpoly::{NcPoly, Word};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::gari::{expari, gari};
use crate::report::VerificationReport;

/// The two printed forms of the pre-Lie law on `mt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OdotConvention {
    /// `f ⊙ g = fg - D_g(f)`.
    Right,
    /// `f ⊙ g = fg + D_f(g)`.
    Left,
}

impl OdotConvention {
    pub fn describe(self) -> &'static str {
        match self {
            OdotConvention::Right => "fg - D_g(f)",
            OdotConvention::Left => "fg + D_f(g)",
        }
    }
}

/// The pre-Lie product, truncated at `max_weight`.
pub fn prelie_odot(f: &NcPoly, g: &NcPoly, conv: OdotConvention, max_weight: usize) -> NcPoly {
    let mut out = f.mul_truncated(g, max_weight);
    let d = match conv {
        OdotConvention::Right => derivation(g, f).scale(&-Rational::one()),
        OdotConvention::Left => derivation(f, g),
    };
    out.add_scaled(&d.truncate(max_weight), &Rational::one());
    out
}

/// `exp^⊙(f) = sum_n f^{⊙n}/n!` with left-nested powers.
pub fn exp_odot(f: &NcPoly, conv: OdotConvention, max_weight: usize) -> NcPoly {
    let mut out = NcPoly::one();
    let mut pow = NcPoly::one();
    let mut fact = Rational::one();
    for n in 1..=max_weight {
        pow = if n == 1 {
            f.truncate(max_weight)
        } else {
            prelie_odot(&pow, f, conv, max_weight)
        };
        if pow.is_zero() {
            break;
        }
        fact *= Rational::from_integer((n as i64).into());
        out.add_scaled(&pow, &(Rational::one() / &fact));
    }
    out
}

fn require_group(op: &str, f: &NcPoly) -> Result<()> {
    if f.constant_term().is_one() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{op}: group elements need constant term 1, found {}",
            crate::exact::fmt_rational(&f.constant_term())
        )))
    }
}

/// Inverse of a series with constant term 1, truncated at `max_weight`.
pub fn series_inverse(g: &NcPoly, max_weight: usize) -> Result<NcPoly> {
    require_group("series_inverse", g)?;
    let mut h = g.clone();
    h.add_term(Word::empty(), -Rational::one());
    let h = h.scale(&-Rational::one());
    let mut out = NcPoly::one();
    let mut pow = NcPoly::one();
    for _ in 1..=max_weight {
        pow = pow.mul_truncated(&h, max_weight);
        if pow.is_zero() {
            break;
        }
        out.add_scaled(&pow, &Rational::one());
    }
    Ok(out)
}

/// The twisted Magnus law `F(x, G y G^{-1}) G(x, y)`, truncated.
pub fn mt_group_mul(f: &NcPoly, g: &NcPoly, max_weight: usize) -> Result<NcPoly> {
    require_group("mt_group_mul", f)?;
    require_group("mt_group_mul", g)?;
    let ginv = series_inverse(g, max_weight)?;
    let conj = g
        .mul_truncated(&NcPoly::y(), max_weight)
        .mul_truncated(&ginv, max_weight);
    let twisted = f.substitute(&NcPoly::x(), &conj, max_weight);
    Ok(twisted.mul_truncated(g, max_weight))
}

/// Tests both ⊙ conventions against `ma(exp^⊙ f) = expari(ma f)` and
/// `f ⊙ g - g ⊙ f = {f, g}` on the given Lie polynomials, and reports which
/// convention passes.
pub fn adjudicate_odot(
    samples: &[(NcPoly, NcPoly)],
    max_weight: usize,
) -> Result<(VerificationReport, Vec<OdotConvention>)> {
    let mut rep = VerificationReport::new("odot convention");
    rep.bound("weight", max_weight);
    let mut passing = Vec::new();
    for conv in [OdotConvention::Right, OdotConvention::Left] {
        let mut ok = true;
        for (i, (f, g)) in samples.iter().enumerate() {
            let e = exp_odot(f, conv, max_weight);
            let lhs = ma(&e, max_weight)?;
            let rhs = truncate_weight(&expari(&ma(f, max_weight)?)?, max_weight)?;
            let same = lhs == rhs;
            let comm = &prelie_odot(f, g, conv, max_weight) - &prelie_odot(g, f, conv, max_weight);
            let bracket = poisson(f, g).truncate(max_weight);
            let lie_ok = comm == bracket;
            ok &= same && lie_ok;
            rep.note(
                format!("{}: sample {i}", conv.describe()),
                format!(
                    "ma(exp f) = expari(ma f): {}; commutator = Poisson bracket: {}",
                    if same { "yes" } else { "no" },
                    if lie_ok { "yes" } else { "no" }
                ),
            );
        }
        if ok {
            passing.push(conv);
        }
    }
    rep.check(
        "exactly one convention passes",
        passing.len() == 1,
        Some(format!(
            "passing: [{}]",
            passing.iter().map(|c| c.describe()).collect::<Vec<_>>().join(", ")
        )),
    );
    Ok((rep, passing))
}

/// Checks that `ma` carries the twisted Magnus law to gari on exponentials
/// of the given Lie polynomials, for the adopted ⊙ convention.
pub fn check_group_isomorphism(f: &NcPoly, g: &NcPoly, max_weight: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("twisted Magnus group law");
    rep.bound("weight", max_weight);
    let conv = OdotConvention::Right;
    let ef = exp_odot(f, conv, max_weight);
    let eg = exp_odot(g, conv, max_weight);
    let prod = mt_group_mul(&ef, &eg, max_weight)?;
    let lhs = ma(&prod, max_weight)?;
    let mf = ma(&ef, max_weight)?;
    let mg = ma(&eg, max_weight)?;
    let fg = truncate_weight(&gari(&mf, &mg)?, max_weight)?;
    let gf = truncate_weight(&gari(&mg, &mf)?, max_weight)?;
    rep.check_moulds("ma(F*G) = gari(ma F, ma G)", &lhs, &fg);
    rep.note("ma(F*G) = gari(ma G, ma F)", if lhs == gf { "yes" } else { "no" });
    let unit = mt_group_mul(&NcPoly::one(), &eg, max_weight)?;
    rep.check("1 * G = G", unit == eg, None);
    if f.is_zero() {
        rep.check("f = 0 gives F = 1", ef.constant_term().is_one() && ef.len() == 1, None);
    }
    Ok(rep)
}
