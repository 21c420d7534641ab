use num_traits::Zero;

use super::ncpoly::{NcPoly, Word, X, Y};
use crate::exact::{Alphabet, Echelon, Lfd, Rational, SparseRow};
use crate::report::VerificationReport;
use crate::symmetry::{shuffle_set, Defect, SymmetryDefect};

/// All words of length `n`, in increasing order.
pub fn words_of_length(n: usize) -> Vec<Word> {
    (0..1usize << n)
        .map(|bits| Word((0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect()))
        .collect()
}

/// Position of a word among the words of its length.
pub fn word_index(w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, &c| (acc << 1) | c as usize)
}

/// `[f, g] = fg - gf`.
pub fn lie_bracket(f: &NcPoly, g: &NcPoly) -> NcPoly {
    f.bracket(g)
}

/// Shuffle relations `sum_{w in sh(u,v)} (f|w) = 0` for all nonempty `u`, `v`
/// with `|u| + |v|` at most the degree of `f`.
pub fn shuffle_relations_check(f: &NcPoly) -> SymmetryDefect {
    let max = f.weight_range().map_or(0, |(_, hi)| hi);
    let mut out = SymmetryDefect {
        relation: "shuffle".into(),
        max_depth: max,
        checked: 0,
        failures: Vec::new(),
        correction: None,
    };
    for n in 2..=max {
        let comp = f.component(n);
        for k in 1..=n / 2 {
            let left = words_of_length(k);
            let right = words_of_length(n - k);
            for u in &left {
                for v in &right {
                    if k == n - k && u > v {
                        continue;
                    }
                    out.checked += 1;
                    if comp.is_zero() {
                        continue;
                    }
                    let sum: Rational = shuffle_set(u.letters(), v.letters())
                        .into_iter()
                        .map(|w| comp.coeff(&Word(w)))
                        .sum();
                    if !sum.is_zero() {
                        out.failures.push(Defect {
                            left: u.to_string(),
                            right: v.to_string(),
                            value: Lfd::constant(Alphabet::U, sum),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Lie membership through the shuffle relations.
pub fn is_lie(f: &NcPoly) -> bool {
    f.constant_term().is_zero() && shuffle_relations_check(f).holds()
}

/// Lyndon words of length `n` over `x < y` (Duval's algorithm).
pub fn lyndon_words(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![X];
    loop {
        if w.len() == n {
            out.push(Word(w.clone()));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&Y) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c = Y,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    (1..w.len()).all(|i| w[i..] > *w)
}

/// Standard bracketing of a Lyndon word: `P(w) = [P(u), P(v)]` with `v`
/// the longest proper Lyndon suffix.
pub fn lyndon_bracket(w: &Word) -> NcPoly {
    let l = w.letters();
    if l.len() == 1 {
        return if l[0] == X { NcPoly::x() } else { NcPoly::y() };
    }
    let split = (1..l.len())
        .find(|&i| is_lyndon(&l[i..]))
        .expect("a single letter is Lyndon");
    let u = lyndon_bracket(&Word(l[..split].to_vec()));
    let v = lyndon_bracket(&Word(l[split..].to_vec()));
    u.bracket(&v)
}

/// Lyndon basis of the weight-`n` part of the free Lie algebra.
pub fn lie_basis(n: usize) -> Vec<NcPoly> {
    lyndon_words(n).iter().map(lyndon_bracket).collect()
}

fn coords(f: &NcPoly) -> SparseRow {
    f.terms().map(|(w, c)| (word_index(w), c.clone())).collect()
}

/// Lie membership through the span of the Lyndon basis (an oracle for
/// [`is_lie`]).
pub fn is_lie_lyndon(f: &NcPoly) -> bool {
    if !f.constant_term().is_zero() {
        return false;
    }
    let Some((_, hi)) = f.weight_range() else {
        return true;
    };
    (1..=hi).all(|n| {
        let comp = f.component(n);
        if comp.is_zero() {
            return true;
        }
        let mut e = Echelon::new();
        for b in lie_basis(n) {
            e.insert(coords(&b));
        }
        e.contains(coords(&comp))
    })
}

/// The derivation with `D_f(x) = 0`, `D_f(y) = [y, f]`.
pub fn derivation(f: &NcPoly, target: &NcPoly) -> NcPoly {
    let yf = NcPoly::y().bracket(f);
    let mut out = NcPoly::zero();
    for (w, c) in target.terms() {
        let l = w.letters();
        for i in 0..l.len() {
            if l[i] != Y {
                continue;
            }
            let pre = NcPoly::term(Word(l[..i].to_vec()), c.clone());
            let post = NcPoly::term(Word(l[i + 1..].to_vec()), Rational::from_integer(1.into()));
            let t = &(&pre * &yf) * &post;
            out.add_scaled(&t, &Rational::from_integer(1.into()));
        }
    }
    out
}

/// The Poisson bracket `{f,g} = [f,g] + D_f(g) - D_g(f)`.
pub fn poisson(f: &NcPoly, g: &NcPoly) -> NcPoly {
    let mut out = f.bracket(g);
    out.add_scaled(&derivation(f, g), &Rational::from_integer(1.into()));
    out.add_scaled(&derivation(g, f), &Rational::from_integer((-1).into()));
    out
}

/// Checks `[D_f, D_g] = D_{f,g}` on the generators `x` and `y`.
pub fn check_derivation_identity(f: &NcPoly, g: &NcPoly) -> VerificationReport {
    let mut rep = VerificationReport::new("derivation identity");
    let fg = poisson(f, g);
    for (name, t) in [("x", NcPoly::x()), ("y", NcPoly::y())] {
        let lhs = &derivation(f, &derivation(g, &t)) - &derivation(g, &derivation(f, &t));
        let rhs = derivation(&fg, &t);
        let diff = &lhs - &rhs;
        rep.check(
            format!("[D_f, D_g]({name}) = D_{{f,g}}({name})"),
            diff.is_zero(),
            (!diff.is_zero()).then(|| format!("difference {diff}")),
        );
    }
    rep
}
