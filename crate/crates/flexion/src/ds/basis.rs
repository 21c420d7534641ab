use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lie::{shuffle_relations_check, word_index, words_of_length};
use super::ncpoly::{NcPoly, Word};
use super::ypoly::{compositions, f_star, stuffle_relations_check, xy_word};
use crate::error::{Error, Result};
use crate::exact::{Echelon, Rational, SparseRow};
use crate::symmetry::{shuffle_set, stuffle_set, SymmetryDefect};

/// Outcome of the double shuffle membership test.
#[derive(Clone, Debug)]
pub struct DsMembership {
    /// All words have length at least 3 and `f` is nonzero.
    pub degree_ok: bool,
    pub constant_free: bool,
    pub shuffle: SymmetryDefect,
    pub stuffle: SymmetryDefect,
}

impl DsMembership {
    pub fn holds(&self) -> bool {
        self.degree_ok && self.constant_free && self.shuffle.holds() && self.stuffle.holds()
    }
}

pub fn ds_membership(f: &NcPoly) -> DsMembership {
    DsMembership {
        degree_ok: f.weight_range().is_some_and(|(lo, _)| lo >= 3),
        constant_free: f.constant_term().is_zero(),
        shuffle: shuffle_relations_check(f),
        stuffle: stuffle_relations_check(&f_star(f)),
    }
}

/// Double shuffle membership: degree at least 3, shuffle relations on `f`
/// and stuffle relations on `f_*`. The zero polynomial is not counted.
pub fn is_in_ds(f: &NcPoly) -> bool {
    ds_membership(f).holds()
}

fn shuffle_rows(n: usize) -> Vec<SparseRow> {
    let mut rows = Vec::new();
    for k in 1..=n / 2 {
        for u in words_of_length(k) {
            for v in words_of_length(n - k) {
                if k == n - k && u > v {
                    continue;
                }
                let mut row = SparseRow::new();
                for w in shuffle_set(u.letters(), v.letters()) {
                    *row.entry(word_index(&Word(w))).or_insert_with(Rational::zero) += Rational::one();
                }
                row.retain(|_, c| !c.is_zero());
                rows.push(row);
            }
        }
    }
    rows
}

fn stuffle_rows(n: usize) -> Vec<SparseRow> {
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let corr = Rational::new(sign.into(), (n as i64).into());
    let depth_one = word_index(&xy_word(&[n as u32]));
    let ones = vec![1u32; n];
    let mut rows = Vec::new();
    for k in 1..=n / 2 {
        for u in compositions(k) {
            for v in compositions(n - k) {
                if k == n - k && u > v {
                    continue;
                }
                let mut row = SparseRow::new();
                for s in stuffle_set(u.len(), v.len()) {
                    let w = s.apply(&u, &v, |a, b| a + b);
                    *row.entry(word_index(&xy_word(&w))).or_insert_with(Rational::zero) += Rational::one();
                    if w == ones {
                        *row.entry(depth_one).or_insert_with(Rational::zero) += &corr;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                rows.push(row);
            }
        }
    }
    rows
}

/// Scales a vector to coprime integers with positive leading entry.
fn primitive(v: &SparseRow) -> SparseRow {
    let mut den = num_bigint::BigInt::one();
    for c in v.values() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v
        .values()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = num_bigint::BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if v.values().next().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.keys()
        .zip(ints)
        .map(|(&j, i)| (j, Rational::from_integer(i / &g)))
        .collect()
}

/// Basis of the weight-`n` part of the double shuffle space, from the exact
/// null space of the shuffle and stuffle constraints on the `2^n`
/// coefficients. Output is in reduced echelon form (pivots on the smallest
/// words), scaled to primitive integer vectors.
pub fn ds_basis(weight: usize) -> Result<Vec<NcPoly>> {
    if weight < 3 {
        return Err(Error::InvalidArgument(format!(
            "ds basis needs weight >= 3, got {weight}"
        )));
    }
    let mut e = Echelon::new();
    for row in shuffle_rows(weight).into_iter().chain(stuffle_rows(weight)) {
        e.insert(row);
    }
    let null = e.null_space(1 << weight);
    let mut canon = Echelon::new();
    for v in null {
        canon.insert(v);
    }
    let words = words_of_length(weight);
    Ok(canon
        .rows()
        .map(|v| NcPoly::from_terms(primitive(v).into_iter().map(|(j, c)| (words[j].clone(), c))))
        .collect())
}
