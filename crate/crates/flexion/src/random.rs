//! Seeded generators for test inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ds::NcPoly;
use crate::error::{Error, Result};
use crate::exact::{Alphabet, Lfd, LinExpr, Monomial, Poly, Rational};
use crate::mould::{push_symmetrize, Mould};

/// Kinds of random objects the generator produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    Lie,
    Alternal,
    Lfd,
    PushInvariant,
    Constant,
}

impl RandomKind {
    pub fn parse(s: &str) -> Option<RandomKind> {
        Some(match s {
            "lie" => RandomKind::Lie,
            "alternal" => RandomKind::Alternal,
            "lfd" => RandomKind::Lfd,
            "push_invariant" | "push-invariant" => RandomKind::PushInvariant,
            "constant" => RandomKind::Constant,
            _ => return None,
        })
    }
}

/// Deterministic generator: the same seed gives the same sequence.
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn small_rational(&mut self) -> Rational {
        let mut n = 0;
        while n == 0 {
            n = self.rng.gen_range(-4i64..=4);
        }
        let d = self.rng.gen_range(1i64..=3);
        Rational::new(n.into(), d.into())
    }

    /// A random linear form of flexion type: consecutive sums on the
    /// u-side, letters and differences on the v-side.
    fn flexion_form(&mut self, alphabet: Alphabet, r: usize) -> LinExpr {
        match alphabet {
            Alphabet::U => {
                let i = self.rng.gen_range(0..r);
                let j = self.rng.gen_range(i + 1..=r);
                LinExpr::range_sum(i, j)
            }
            Alphabet::V => {
                let i = self.rng.gen_range(0..r);
                let j = self.rng.gen_range(0..r);
                if i == j {
                    LinExpr::var(i)
                } else {
                    LinExpr::var(i).sub(&LinExpr::var(j))
                }
            }
        }
    }

    /// Random sparse polynomial in `r` variables of degree at most `deg`.
    pub fn poly(&mut self, alphabet: Alphabet, r: usize, deg: usize) -> Poly {
        let n_terms = self.rng.gen_range(1..=3);
        let mut p = Poly::zero(alphabet);
        for _ in 0..n_terms {
            let d = self.rng.gen_range(0..=deg);
            let mut e = vec![0u16; r];
            if r > 0 {
                for _ in 0..d {
                    e[self.rng.gen_range(0..r)] += 1;
                }
            }
            p.add_term(Monomial::from_exponents(&e), self.small_rational());
        }
        p
    }

    /// Random rational function with flexion-type linear denominators.
    pub fn lfd(&mut self, alphabet: Alphabet, r: usize) -> Result<Lfd> {
        if r == 0 {
            return Ok(Lfd::constant(alphabet, self.small_rational()));
        }
        let mut x = Lfd::from_poly(self.poly(alphabet, r, 2));
        for _ in 0..self.rng.gen_range(0..=2) {
            let form = self.flexion_form(alphabet, r);
            x = x.div_linear(&form)?;
        }
        Ok(x)
    }

    /// Random mould in ARI (depth-0 component zero).
    pub fn lfd_mould(&mut self, alphabet: Alphabet, depth: usize) -> Result<Mould> {
        let mut comps = vec![Lfd::zero(alphabet)];
        for r in 1..=depth {
            comps.push(self.lfd(alphabet, r)?);
        }
        Mould::new(alphabet, comps)
    }

    /// Random mould in GARI (depth-0 component one).
    pub fn gari_mould(&mut self, alphabet: Alphabet, depth: usize) -> Result<Mould> {
        let mut m = self.lfd_mould(alphabet, depth)?;
        m.set_component(0, Lfd::one(alphabet))?;
        Ok(m)
    }

    /// Random constant-valued mould with zero depth-0 component.
    pub fn constant(&mut self, alphabet: Alphabet, depth: usize) -> Mould {
        let mut values = vec![Rational::from_integer(0.into())];
        values.extend((1..=depth).map(|_| self.small_rational()));
        Mould::constant(alphabet, &values)
    }

    /// Random push-invariant u-mould.
    pub fn push_invariant(&mut self, depth: usize) -> Result<Mould> {
        push_symmetrize(&self.lfd_mould(Alphabet::U, depth)?)
    }

    /// Random Lie polynomial: a combination of brackets of random shape,
    /// with weights in `min_weight..=max_weight` and at least one `y` in
    /// each bracket (so the result lies in `Lie[C]`).
    pub fn lie(&mut self, min_weight: usize, max_weight: usize) -> Result<NcPoly> {
        if min_weight < 2 || min_weight > max_weight {
            return Err(Error::InvalidArgument(format!(
                "infeasible Lie weight bounds {min_weight}..={max_weight}"
            )));
        }
        let mut f = NcPoly::zero();
        while f.is_zero() {
            for _ in 0..self.rng.gen_range(1..=3) {
                let w = self.rng.gen_range(min_weight..=max_weight);
                let b = self.bracket(w);
                f.add_scaled(&b, &self.small_rational());
            }
        }
        Ok(f)
    }

    /// Homogeneous random Lie polynomial of the given weight.
    pub fn lie_homogeneous(&mut self, weight: usize) -> Result<NcPoly> {
        self.lie(weight, weight)
    }

    fn bracket(&mut self, weight: usize) -> NcPoly {
        let mut letters: Vec<u8> = (0..weight).map(|_| self.rng.gen_range(0..=1)).collect();
        if !letters.contains(&1) {
            letters[0] = 1;
        }
        if !letters.contains(&0) {
            letters[weight - 1] = 0;
        }
        letters.shuffle(&mut self.rng);
        self.random_tree(&letters)
    }

    fn random_tree(&mut self, letters: &[u8]) -> NcPoly {
        if letters.len() == 1 {
            return if letters[0] == 0 { NcPoly::x() } else { NcPoly::y() };
        }
        let cut = self.rng.gen_range(1..letters.len());
        let l = self.random_tree(&letters[..cut]);
        let r = self.random_tree(&letters[cut..]);
        l.bracket(&r)
    }

    /// Random Lie bracket of the given weight with exactly `ys` letters `y`.
    fn bracket_with(&mut self, weight: usize, ys: usize) -> NcPoly {
        loop {
            let mut letters: Vec<u8> = (0..weight).map(|i| u8::from(i < ys)).collect();
            letters.shuffle(&mut self.rng);
            let b = self.random_tree(&letters);
            if !b.is_zero() {
                return b;
            }
        }
    }

    /// Random alternal u-mould: `ma` of a random Lie polynomial with a
    /// nonzero part in every depth `1..=depth` that the weight bound allows.
    pub fn alternal(&mut self, depth: usize, max_weight: usize) -> Result<Mould> {
        if max_weight < 2 {
            return Err(Error::InvalidArgument(format!(
                "infeasible Lie weight bound {max_weight}"
            )));
        }
        let mut f = NcPoly::zero();
        for r in 1..=depth.min(max_weight - 1) {
            for _ in 0..self.rng.gen_range(1..=2) {
                let w = self.rng.gen_range(r + 1..=max_weight);
                let b = self.bracket_with(w, r);
                f.add_scaled(&b, &self.small_rational());
            }
        }
        let m = crate::ds::ma(&f, depth)?;
        if m.is_zero() {
            return self.alternal(depth, max_weight);
        }
        Ok(m)
    }
}
