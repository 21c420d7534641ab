use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::unit::FlexionUnit;
use super::words::{shuffle_set, stuffle_set, Slot, StuffleWord};
use crate::error::{Error, Result};
use crate::exact::{int, Alphabet, Lfd, LinExpr, Rational};
use crate::mould::{letters, Mould};

/// A failed relation: the word pair and the exact value of its defining sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub left: String,
    pub right: String,
    pub value: Lfd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryDefect {
    pub relation: String,
    pub max_depth: usize,
    /// Number of word pairs tested.
    pub checked: usize,
    pub failures: Vec<Defect>,
    /// Constants `c_r` added before testing (alternality/alternility up to a constant).
    pub correction: Option<Vec<Rational>>,
}

#[derive(Serialize)]
struct DefectRow<'a> {
    left: &'a str,
    right: &'a str,
    value: String,
}

impl SymmetryDefect {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.holds() {
            format!(
                "{} holds for {} word pairs up to depth {}",
                self.relation, self.checked, self.max_depth
            )
        } else {
            let rows: Vec<String> = self
                .failures
                .iter()
                .map(|d| format!("{} | {} -> {}", d.left, d.right, d.value))
                .collect();
            format!("{} fails: {}", self.relation, rows.join("; "))
        }
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<DefectRow> = self
            .failures
            .iter()
            .map(|d| DefectRow {
                left: &d.left,
                right: &d.right,
                value: d.value.to_string(),
            })
            .collect();
        serde_json::json!({
            "relation": self.relation,
            "max_depth": self.max_depth,
            "checked": self.checked,
            "holds": self.holds(),
            "failures": rows,
        })
        .to_string()
    }
}

/// Relation family used for constant corrections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Alternal,
    Alternil,
}

fn word_label(a: Alphabet, lo: usize, hi: usize) -> String {
    let v: Vec<String> = (lo..hi).map(|i| format!("{}{}", a.letter(), i + 1)).collect();
    format!("({})", v.join(","))
}

fn pairs(max_depth: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for d in 2..=max_depth {
        for r in 1..=d / 2 {
            v.push((r, d - r));
        }
    }
    v
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(b)
}

/// `sum_{w in sh(x_1..x_r, x_{r+1}..x_{r+s})} A(w)`.
pub fn shuffle_sum(a: &Mould, r: usize, s: usize) -> Result<Lfd> {
    let words = shuffle_set(&letters(0, r), &letters(r, r + s));
    let vals = words.par_iter().map(|w| a.eval(w)).collect::<Result<Vec<_>>>()?;
    Ok(Lfd::sum(a.alphabet(), vals))
}

fn run(
    a: &Mould,
    relation: &str,
    correction: Option<Vec<Rational>>,
    value: impl Fn(usize, usize) -> Result<Lfd> + Sync,
) -> Result<SymmetryDefect> {
    let ps = pairs(a.max_depth());
    let vals = ps.par_iter().map(|&(r, s)| value(r, s)).collect::<Result<Vec<_>>>()?;
    let failures = ps
        .iter()
        .zip(vals)
        .filter(|(_, v)| !v.is_zero())
        .map(|(&(r, s), v)| Defect {
            left: word_label(a.alphabet(), 0, r),
            right: word_label(a.alphabet(), r, r + s),
            value: v,
        })
        .collect();
    Ok(SymmetryDefect {
        relation: relation.into(),
        max_depth: a.max_depth(),
        checked: ps.len(),
        failures,
        correction,
    })
}

/// Alternality: every shuffle sum of nonempty words vanishes.
pub fn is_alternal(a: &Mould) -> Result<SymmetryDefect> {
    run(a, "alternality", None, |r, s| shuffle_sum(a, r, s))
}

/// Symmetrality: shuffle sums equal products `A(u)A(v)`.
pub fn is_symmetral(a: &Mould) -> Result<SymmetryDefect> {
    if !a.in_gari() {
        return Err(Error::DepthZero {
            op: "is_symmetral",
            expected: "1",
            found: a.component(0).to_string(),
        });
    }
    run(a, "symmetrality", None, |r, s| {
        let sum = shuffle_sum(a, r, s)?;
        let prod = a.component(r) * &a.eval(&letters(r, r + s))?;
        Ok(&sum - &prod)
    })
}

/// Per-word terms of a stuffle sum and their total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StuffleSum {
    pub terms: Vec<(StuffleWord, Lfd)>,
    pub total: Lfd,
}

fn contraction_sum(
    a: &Mould,
    r: usize,
    s: usize,
    factor: impl Fn(&LinExpr) -> Result<Lfd> + Sync,
) -> Result<StuffleSum> {
    a.require("alternility", Alphabet::V)?;
    if r + s > a.max_depth() {
        return Err(Error::DepthExceeded {
            requested: r + s,
            max_depth: a.max_depth(),
        });
    }
    let words = stuffle_set(r, s);
    let terms = words
        .par_iter()
        .map(|w| {
            let mut fac = Lfd::one(Alphabet::V);
            let mut branches: Vec<(Vec<LinExpr>, bool)> = vec![(Vec::new(), false)];
            for slot in &w.slots {
                match *slot {
                    Slot::Left(i) => branches.iter_mut().for_each(|b| b.0.push(LinExpr::var(i))),
                    Slot::Right(j) => branches.iter_mut().for_each(|b| b.0.push(LinExpr::var(r + j))),
                    Slot::Pair(i, j) => {
                        let (x, y) = (LinExpr::var(i), LinExpr::var(r + j));
                        fac = &fac * &factor(&x.sub(&y))?;
                        let mut next = Vec::with_capacity(branches.len() * 2);
                        for (word, neg) in branches {
                            let mut keep_first = word.clone();
                            keep_first.push(x.clone());
                            let mut keep_second = word;
                            keep_second.push(y.clone());
                            next.push((keep_first, neg));
                            next.push((keep_second, !neg));
                        }
                        branches = next;
                    }
                }
            }
            let vals = branches
                .iter()
                .map(|(word, neg)| {
                    let v = a.eval(word)?;
                    Ok(if *neg { -&v } else { v })
                })
                .collect::<Result<Vec<_>>>()?;
            let val = &fac * &Lfd::sum(Alphabet::V, vals);
            Ok((w.clone(), val))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = Lfd::sum(Alphabet::V, terms.iter().map(|(_, v)| v.clone()));
    Ok(StuffleSum { terms, total })
}

/// The alternility sum `A_{r,s}`: stuffle words of `(v_1..v_r)` and
/// `(v_{r+1}..v_{r+s})`, each contraction `(v_i, v_j)` contributing the
/// divided difference `(A(..v_i..) - A(..v_j..))/(v_i - v_j)`.
pub fn alternility_sum(a: &Mould, r: usize, s: usize) -> Result<StuffleSum> {
    contraction_sum(a, r, s, |l| Lfd::recip_linear(Alphabet::V, l))
}

/// The e-alternality sum: as [`alternility_sum`] with `e(v_i - v_j)` in
/// place of `1/(v_i - v_j)`.
pub fn e_alternality_sum(c: &Mould, e: &FlexionUnit, r: usize, s: usize) -> Result<StuffleSum> {
    let rep = e.check();
    if !rep.passed() {
        let why: Vec<String> = rep.failures().map(|f| f.label.clone()).collect();
        return Err(Error::NotFlexionUnit(why.join(", ")));
    }
    contraction_sum(c, r, s, |l| e.at(l))
}

/// Per-depth constants `c_d` making the relation hold for `A + C`, if any.
pub fn solve_constant_correction(a: &Mould, relation: Relation) -> Result<Option<Mould>> {
    let d_max = a.max_depth();
    let mut consts = vec![Rational::from_integer(0.into()); d_max + 1];
    for d in 2..=d_max {
        let mut cand: Option<Rational> = None;
        for r in 1..=d / 2 {
            let sum = match relation {
                Relation::Alternal => shuffle_sum(a, r, d - r)?,
                Relation::Alternil => alternility_sum(a, r, d - r)?.total,
            };
            let Some(v) = sum.constant_value() else {
                return Ok(None);
            };
            let c = -v / binomial(d, r);
            match &cand {
                Some(prev) if *prev != c => return Ok(None),
                _ => cand = Some(c),
            }
        }
        consts[d] = cand.unwrap_or_else(|| int(0));
    }
    Ok(Some(Mould::constant(a.alphabet(), &consts)))
}

fn corrected(a: &Mould, relation: Relation) -> Result<Option<(Mould, Vec<Rational>)>> {
    Ok(solve_constant_correction(a, relation)?.map(|c| {
        let consts = c.components().iter().map(|x| x.constant_value().unwrap()).collect();
        (a.checked_add(&c).expect("same alphabet"), consts)
    }))
}

/// Alternility of a v-mould; with `up_to_constant`, first adds the solved
/// constant correction (and fails at every pair if none exists).
pub fn is_alternil(a: &Mould, up_to_constant: bool) -> Result<SymmetryDefect> {
    a.require("is_alternil", Alphabet::V)?;
    if !up_to_constant {
        return run(a, "alternility", None, |r, s| Ok(alternility_sum(a, r, s)?.total));
    }
    match corrected(a, Relation::Alternil)? {
        Some((b, consts)) => run(&b, "alternility up to a constant", Some(consts), |r, s| {
            Ok(alternility_sum(&b, r, s)?.total)
        }),
        None => run(
            a,
            "alternility up to a constant (no constant correction exists)",
            None,
            |r, s| Ok(alternility_sum(a, r, s)?.total),
        ),
    }
}

/// Alternality up to addition of a constant-valued mould.
pub fn is_alternal_up_to_constant(a: &Mould) -> Result<SymmetryDefect> {
    match corrected(a, Relation::Alternal)? {
        Some((b, consts)) => run(&b, "alternality up to a constant", Some(consts), |r, s| {
            shuffle_sum(&b, r, s)
        }),
        None => run(
            a,
            "alternality up to a constant (no constant correction exists)",
            None,
            |r, s| shuffle_sum(a, r, s),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(5, 0), int(1));
    }

    #[test]
    fn depth_two_pair_is_two_term() {
        let a = Mould::parse_components(Alphabet::U, &["0", "0", "u1 - u2"]).unwrap();
        assert!(is_alternal(&a).unwrap().holds());
        let b = Mould::parse_components(Alphabet::U, &["0", "0", "u1"]).unwrap();
        let d = is_alternal(&b).unwrap();
        assert_eq!(d.failures.len(), 1);
        assert_eq!(d.failures[0].value.to_string(), "u1 + u2");
    }
}
