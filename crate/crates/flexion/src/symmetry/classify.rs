use std::fmt;

use super::relations::{is_alternal, is_alternal_up_to_constant, is_alternil};
use crate::error::{Error, Result};
use crate::exact::{Alphabet, LinExpr};
use crate::mould::{self, Mould};
use crate::report::VerificationReport;

/// Dimorphic memberships of a u-mould, verified up to `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub depth: usize,
    /// `A` alternal.
    pub al: bool,
    /// `swap(A)` alternal.
    pub swap_al: bool,
    /// `swap(A)` alternal up to a constant-valued mould.
    pub swap_al_const: bool,
    /// `swap(A)` alternil.
    pub swap_il: bool,
    /// `swap(A)` alternil up to a constant-valued mould.
    pub swap_il_const: bool,
    /// `A(u1)` even.
    pub even: bool,
}

impl Membership {
    pub fn al_al(&self) -> bool {
        self.al && self.swap_al
    }

    pub fn al_star_al(&self) -> bool {
        self.al && self.swap_al_const
    }

    pub fn al_il(&self) -> bool {
        self.al && self.swap_il
    }

    pub fn al_star_il(&self) -> bool {
        self.al && self.swap_il_const
    }

    pub fn classes(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.al_al() {
            v.push("al/al");
        }
        if self.al_star_al() {
            v.push("al*al");
        }
        if self.al_il() {
            v.push("al/il");
        }
        if self.al_star_il() {
            v.push("al*il");
        }
        if v.is_empty() && self.al {
            v.push("al");
        }
        v
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = self.classes();
        if classes.is_empty() {
            return write!(f, "no membership verified to depth {}", self.depth);
        }
        let underline = if self.even { " (underline)" } else { "" };
        write!(
            f,
            "{}{} verified to depth {}",
            classes.join(", "),
            underline,
            self.depth
        )
    }
}

/// Classifies a u-mould in ARI by alternality of `A` and of `swap(A)`.
pub fn classify(a: &Mould) -> Result<Membership> {
    a.require("classify", Alphabet::U)?;
    if !a.in_ari() {
        return Err(Error::DepthZero {
            op: "classify",
            expected: "0",
            found: a.component(0).to_string(),
        });
    }
    let s = mould::swap(a)?;
    let (al, (swap_al, swap_al_const), (swap_il, swap_il_const), even) = (
        is_alternal(a)?.holds(),
        (is_alternal(&s)?.holds(), is_alternal_up_to_constant(&s)?.holds()),
        (is_alternil(&s, false)?.holds(), is_alternil(&s, true)?.holds()),
        depth_one_even(a)?,
    );
    Ok(Membership {
        depth: a.max_depth(),
        al,
        swap_al,
        swap_al_const,
        swap_il,
        swap_il_const,
        even,
    })
}

fn depth_one_even(a: &Mould) -> Result<bool> {
    if a.max_depth() < 1 {
        return Ok(true);
    }
    Ok(a.eval(&[LinExpr::var(0).neg()])? == *a.component(1))
}

/// Componentwise mantar-, neg-, push- and neg∘push-invariance.
pub fn invariance_checks(a: &Mould) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("invariance");
    rep.bound("depth", a.max_depth());
    rep.check_moulds("mantar-invariant", &mould::mantar(a)?, a);
    if a.alphabet() == Alphabet::U {
        rep.check_moulds("neg-invariant", &mould::neg(a)?, a);
        rep.check_moulds("push-invariant", &mould::push(a)?, a);
        rep.check_moulds("neg∘push-invariant", &mould::neg(&mould::push(a)?)?, a);
    }
    Ok(rep)
}
