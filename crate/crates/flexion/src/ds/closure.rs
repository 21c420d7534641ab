use rayon::prelude::*;

use super::basis::{ds_basis, ds_membership};
use super::dictionary::ma;
use super::lie::poisson;
use super::ncpoly::NcPoly;
use crate::error::Result;
use crate::mould::ari;
use crate::report::VerificationReport;
use crate::symmetry::classify;

/// Bracket closure of the double shuffle space between weights `w1` and
/// `w2`, along two routes: `{f,g}` is in ds, and `ari(ma f, ma g)` is
/// al*il with even depth-1 part; the routes are tied by `ma({f,g})`.
pub fn check_racinet_closure(w1: usize, w2: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("racinet-closure");
    rep.bound("w1", w1).bound("w2", w2);
    let b1 = ds_basis(w1)?;
    let b2 = ds_basis(w2)?;
    rep.note(format!("dim ds_{w1}"), b1.len().to_string());
    rep.note(format!("dim ds_{w2}"), b2.len().to_string());
    let mut pairs: Vec<(usize, usize, &NcPoly, &NcPoly)> = Vec::new();
    for (i, f) in b1.iter().enumerate() {
        for (j, g) in b2.iter().enumerate() {
            if w1 == w2 && j < i {
                continue;
            }
            pairs.push((i, j, f, g));
        }
    }
    let depth = w1 + w2;
    let results = pairs
        .par_iter()
        .map(|&(i, j, f, g)| pair_report(i, j, f, g, depth))
        .collect::<Result<Vec<_>>>()?;
    for r in results {
        rep.absorb(r);
    }
    Ok(rep)
}

fn pair_report(i: usize, j: usize, f: &NcPoly, g: &NcPoly, depth: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("pair ({i},{j})"));
    let p = poisson(f, g);
    let m = ari(&ma(f, depth)?, &ma(g, depth)?)?;
    rep.check_moulds("ma({f,g}) = ari(ma f, ma g)", &ma(&p, depth)?, &m);
    if p.is_zero() {
        rep.pass("{f,g} = 0, trivially in the closure");
        rep.check("ari(ma f, ma g) = 0", m.is_zero(), None);
        return Ok(rep);
    }
    let member = ds_membership(&p);
    rep.check(
        "{f,g} in ds",
        member.holds(),
        (!member.holds()).then(|| format!("{}; {}", member.shuffle.summary(), member.stuffle.summary())),
    );
    let class = classify(&m)?;
    rep.check(
        "ari(ma f, ma g) is al*il (underline)",
        class.al_star_il() && class.even,
        Some(class.to_string()),
    );
    Ok(rep)
}
