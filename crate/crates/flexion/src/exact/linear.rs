use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use smallvec::SmallVec;

use super::Alphabet;

pub(crate) type Coeffs = SmallVec<[i64; 8]>;

fn trim(c: &mut Coeffs) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

/// Integer linear combination of variables, used as a substitution image.
/// Index `i` is the variable with subscript `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinExpr {
    coeffs: Coeffs,
}

impl LinExpr {
    pub fn zero() -> Self {
        LinExpr::default()
    }

    pub fn var(i: usize) -> Self {
        let mut coeffs: Coeffs = SmallVec::from_elem(0, i + 1);
        coeffs[i] = 1;
        LinExpr { coeffs }
    }

    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut coeffs: Coeffs = c.iter().copied().collect();
        trim(&mut coeffs);
        LinExpr { coeffs }
    }

    /// `x_lo + ... + x_{hi-1}`.
    pub fn range_sum(lo: usize, hi: usize) -> Self {
        let mut coeffs: Coeffs = SmallVec::from_elem(0, hi);
        for c in &mut coeffs[lo..hi] {
            *c = 1;
        }
        let mut e = LinExpr { coeffs };
        trim(&mut e.coeffs);
        e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some((i, c))` when the expression is `c * x_i`.
    pub fn single_var(&self) -> Option<(usize, i64)> {
        let mut found = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, c));
            }
        }
        found
    }

    pub fn add(&self, other: &LinExpr) -> LinExpr {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &LinExpr) -> LinExpr {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> LinExpr {
        LinExpr {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn combine(&self, other: &LinExpr, sign: i64) -> LinExpr {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs: Coeffs = SmallVec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + sign * other.coeff(i));
        }
        trim(&mut coeffs);
        LinExpr { coeffs }
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a LinExpr>) -> LinExpr {
        items.into_iter().fold(LinExpr::zero(), |acc, e| acc.add(e))
    }

    /// Substitute `images[i]` for `x_i`.
    pub fn substitute(&self, images: &[LinExpr]) -> Option<LinExpr> {
        let mut out = LinExpr::zero();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = images.get(i)?;
            let n = out.coeffs.len().max(img.coeffs.len());
            out.coeffs.resize(n, 0);
            for (j, &d) in img.coeffs.iter().enumerate() {
                out.coeffs[j] += c * d;
            }
        }
        trim(&mut out.coeffs);
        Some(out)
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        fmt_terms(alphabet, &self.coeffs)
    }
}

/// A nonzero linear form normalized so that its first nonzero coefficient is
/// positive and its coefficients are coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    alphabet: Alphabet,
    coeffs: Coeffs,
}

impl LinearForm {
    /// Splits `expr` as `scale * form`; `None` for the zero expression.
    pub fn normalize(alphabet: Alphabet, expr: &LinExpr) -> Option<(i64, LinearForm)> {
        let lead = *expr.coeffs.iter().find(|&&c| c != 0)?;
        let mut g = expr.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        if lead < 0 {
            g = -g;
        }
        let coeffs = expr.coeffs.iter().map(|c| c / g).collect();
        Some((g, LinearForm { alphabet, coeffs }))
    }

    pub fn var(alphabet: Alphabet, i: usize) -> Self {
        LinearForm {
            alphabet,
            coeffs: LinExpr::var(i).coeffs,
        }
    }

    /// Builds a form from coefficients that must already be normalized.
    pub fn from_normalized(alphabet: Alphabet, c: &[i64]) -> Option<Self> {
        let expr = LinExpr::from_coeffs(c);
        let (s, f) = LinearForm::normalize(alphabet, &expr)?;
        (s == 1 && f.coeffs.len() == c.len()).then_some(f)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn expr(&self) -> LinExpr {
        LinExpr {
            coeffs: self.coeffs.clone(),
        }
    }

    /// Index of the first nonzero coefficient.
    pub fn lead(&self) -> usize {
        self.coeffs.iter().position(|&c| c != 0).unwrap()
    }

    pub fn n_vars(&self) -> usize {
        self.coeffs.len()
    }

    fn support(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub(crate) fn with_alphabet(&self, alphabet: Alphabet) -> LinearForm {
        LinearForm {
            alphabet,
            coeffs: self.coeffs.clone(),
        }
    }
}

impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then(self.support().cmp(&other.support()))
            .then(self.lead().cmp(&other.lead()))
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| other.coeffs.cmp(&self.coeffs))
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_terms(self.alphabet, &self.coeffs))
    }
}

fn fmt_terms(alphabet: Alphabet, coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = format!("{}{}", alphabet.letter(), i + 1);
        let mag = c.unsigned_abs();
        let body = if mag == 1 { var } else { format!("{mag}*{var}") };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_extracts_sign_and_content() {
        let e = LinExpr::from_coeffs(&[0, -2, 4]);
        let (s, f) = LinearForm::normalize(Alphabet::V, &e).unwrap();
        assert_eq!(s, -2);
        assert_eq!(f.coeffs(), &[0, 1, -2]);
        assert_eq!(f.to_string(), "v2 - 2*v3");
        assert!(LinearForm::normalize(Alphabet::U, &LinExpr::zero()).is_none());
    }

    #[test]
    fn substitution_of_images() {
        let e = LinExpr::from_coeffs(&[1, -1]);
        let imgs = [LinExpr::range_sum(0, 2), LinExpr::var(0)];
        assert_eq!(e.substitute(&imgs).unwrap(), LinExpr::var(1));
        assert!(e.substitute(&imgs[..1]).is_none());
    }

    #[test]
    fn display_order_puts_variables_first() {
        let a = LinearForm::var(Alphabet::U, 1);
        let b = LinearForm::normalize(Alphabet::U, &LinExpr::range_sum(0, 2)).unwrap().1;
        let c = LinearForm::var(Alphabet::U, 0);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }
}
