/// All interleavings of `u` and `v` (as a multiset, in recursion order).
pub fn shuffle_set<T: Clone>(u: &[T], v: &[T]) -> Vec<Vec<T>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffle_set(&u[1..], v) {
        w.insert(0, u[0].clone());
        out.push(w);
    }
    for mut w in shuffle_set(u, &v[1..]) {
        w.insert(0, v[0].clone());
        out.push(w);
    }
    out
}

/// One slot of a stuffle word: a letter of the first or second sequence,
/// or a contraction of one letter from each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Left(usize),
    Right(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StuffleWord {
    pub slots: Vec<Slot>,
}

impl StuffleWord {
    pub fn contractions(&self) -> usize {
        self.slots.iter().filter(|s| matches!(s, Slot::Pair(..))).count()
    }

    /// Realizes the word on concrete sequences, merging contracted letters.
    pub fn apply<T: Clone>(&self, y1: &[T], y2: &[T], merge: impl Fn(&T, &T) -> T) -> Vec<T> {
        self.slots
            .iter()
            .map(|s| match *s {
                Slot::Left(i) => y1[i].clone(),
                Slot::Right(j) => y2[j].clone(),
                Slot::Pair(i, j) => merge(&y1[i], &y2[j]),
            })
            .collect()
    }
}

/// Stuffle words of two sequences of lengths `r` and `s`, with contraction
/// provenance, in the recursion order of the stuffle product.
pub fn stuffle_set(r: usize, s: usize) -> Vec<StuffleWord> {
    fn rec(i: usize, j: usize, r: usize, s: usize, prefix: &mut Vec<Slot>, out: &mut Vec<StuffleWord>) {
        if i == r && j == s {
            out.push(StuffleWord { slots: prefix.clone() });
            return;
        }
        if i < r {
            prefix.push(Slot::Left(i));
            rec(i + 1, j, r, s, prefix, out);
            prefix.pop();
        }
        if j < s {
            prefix.push(Slot::Right(j));
            rec(i, j + 1, r, s, prefix, out);
            prefix.pop();
        }
        if i < r && j < s {
            prefix.push(Slot::Pair(i, j));
            rec(i + 1, j + 1, r, s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, r, s, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_set(&[1], &[2]), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(shuffle_set(&['a', 'b'], &['c', 'd']).len(), 6);
        assert_eq!(shuffle_set(&[1, 2], &[]), vec![vec![1, 2]]);
    }

    #[test]
    fn stuffle_examples() {
        let st = stuffle_set(1, 1);
        let words: Vec<Vec<u32>> = st.iter().map(|w| w.apply(&[3], &[5], |a, b| a + b)).collect();
        assert_eq!(words, vec![vec![3, 5], vec![5, 3], vec![8]]);
        assert_eq!(stuffle_set(2, 2).len(), 13);
        assert_eq!(stuffle_set(3, 0).len(), 1);
        let st22 = stuffle_set(2, 2);
        let count = |k| st22.iter().filter(|w| w.contractions() == k).count();
        assert_eq!((count(0), count(1), count(2)), (6, 6, 1));
    }
}
