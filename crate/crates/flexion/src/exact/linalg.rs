//! Sparse exact Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Incrementally built echelon form; each stored row has leading
/// coefficient 1 at its pivot, and no stored row has a nonzero entry at
/// another row's pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

fn axpy(target: &mut SparseRow, c: &Rational, row: &SparseRow) {
    for (&j, v) in row {
        let e = target.entry(j).or_insert_with(Rational::zero);
        *e -= c * v;
        if e.is_zero() {
            target.remove(&j);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `row` against the stored rows.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|_, v| !v.is_zero());
        let pivots: Vec<usize> = row.keys().filter(|j| self.rows.contains_key(j)).copied().collect();
        // Stored rows are fully reduced, so eliminating the original pivot
        // entries cannot create new ones.
        for p in pivots {
            if let Some(c) = row.get(&p).cloned() {
                axpy(&mut row, &c, &self.rows[&p]);
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some((&p, lead)) = row.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(&p).cloned() {
                axpy(other, &c, &row);
            }
        }
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of `{x : row·x = 0 for all rows}` in `n` unknowns, one vector
    /// per free column, in increasing order of that column.
    pub fn null_space(&self, n: usize) -> Vec<SparseRow> {
        (0..n)
            .filter(|j| !self.rows.contains_key(j))
            .map(|free| {
                let mut v = SparseRow::new();
                v.insert(free, Rational::one());
                for (&p, row) in &self.rows {
                    if let Some(c) = row.get(&free) {
                        v.insert(p, -c.clone());
                    }
                }
                v
            })
            .collect()
    }

    /// Stored rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.rows.values()
    }
}
