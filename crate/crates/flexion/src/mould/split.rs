use crate::exact::LinExpr;

use super::letters;

/// A cut `w = a b c` of the identity word of length `r`, with the four
/// flexion images of its factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordSplit {
    pub r: usize,
    /// Length of `a`.
    pub k: usize,
    /// Length of `b`.
    pub l: usize,
}

impl WordSplit {
    /// All cuts of a word of length `r`, empty factors included.
    pub fn all(r: usize) -> impl Iterator<Item = WordSplit> {
        (0..=r).flat_map(move |k| (0..=r - k).map(move |l| WordSplit { r, k, l }))
    }

    fn c_start(&self) -> usize {
        self.k + self.l
    }

    pub fn a_empty(&self) -> bool {
        self.k == 0
    }

    pub fn b_empty(&self) -> bool {
        self.l == 0
    }

    pub fn c_empty(&self) -> bool {
        self.c_start() == self.r
    }

    pub fn a(&self) -> Vec<LinExpr> {
        letters(0, self.k)
    }

    pub fn b(&self) -> Vec<LinExpr> {
        letters(self.k, self.c_start())
    }

    pub fn c(&self) -> Vec<LinExpr> {
        letters(self.c_start(), self.r)
    }

    /// `a⌉`: the last letter of `a` absorbs the sum of `b` (when `a`, `b` nonempty).
    pub fn a_rceil(&self) -> Vec<LinExpr> {
        let mut a = self.a();
        if !self.a_empty() && !self.b_empty() {
            a[self.k - 1] = LinExpr::range_sum(self.k - 1, self.c_start());
        }
        a
    }

    /// `⌈c`: the first letter of `c` absorbs the sum of `b` (when `b`, `c` nonempty).
    pub fn lceil_c(&self) -> Vec<LinExpr> {
        let mut c = self.c();
        if !self.b_empty() && !self.c_empty() {
            c[0] = LinExpr::range_sum(self.k, self.c_start() + 1);
        }
        c
    }

    /// `b⌋`: each letter of `b` minus the first letter of `c` (when `b`, `c` nonempty).
    pub fn b_rfloor(&self) -> Vec<LinExpr> {
        let b = self.b();
        if self.b_empty() || self.c_empty() {
            return b;
        }
        let anchor = LinExpr::var(self.c_start());
        b.iter().map(|x| x.sub(&anchor)).collect()
    }

    /// `⌊b`: each letter of `b` minus the last letter of `a` (when `a`, `b` nonempty).
    pub fn lfloor_b(&self) -> Vec<LinExpr> {
        let b = self.b();
        if self.a_empty() || self.b_empty() {
            return b;
        }
        let anchor = LinExpr::var(self.k - 1);
        b.iter().map(|x| x.sub(&anchor)).collect()
    }
}
