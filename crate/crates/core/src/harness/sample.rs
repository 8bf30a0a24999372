use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element, Letter, TriMono, Word};
use crate::cartan::RootVector;
use crate::scalars::Scalar;

/// Seeded sampler of words and linear combinations with small coefficients
/// from `{+-1, +-q, +-q^{-1}, q + q^{-1}, q - q^{-1}}`.
pub struct Sampler {
    rng: ChaCha8Rng,
    rank: usize,
}

impl Sampler {
    pub fn new(seed: u64, rank: usize) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), rank }
    }

    /// Independent stream for job `k`, so parallel jobs stay deterministic.
    pub fn fork(seed: u64, rank: usize, k: u64) -> Self {
        Self::new(seed ^ k.wrapping_mul(0x9e37_79b9_7f4a_7c15), rank)
    }

    pub fn coeff(&mut self) -> Scalar {
        let q = |e| Scalar::q_pow(e);
        match self.rng.gen_range(0..8) {
            0 => Scalar::one(),
            1 => -Scalar::one(),
            2 => q(1),
            3 => -q(1),
            4 => q(-1),
            5 => -q(-1),
            6 => &q(1) + &q(-1),
            _ => &q(1) - &q(-1),
        }
    }

    pub fn index(&mut self) -> usize {
        self.rng.gen_range(0..self.rank)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A uniformly shuffled word of weight `g`.
    pub fn word_of_weight(&mut self, g: &RootVector) -> Word {
        let mut w: Vec<u8> = g.0.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat(i as u8).take(n.max(0) as usize)).collect();
        w.shuffle(&mut self.rng);
        Word::from_vec(w)
    }

    pub fn word(&mut self, len: usize) -> Word {
        (0..len).map(|_| self.index() as u8).collect()
    }

    /// Nonzero weight in `Q+` with height between 1 and `max_height`.
    pub fn weight(&mut self, max_height: i32) -> RootVector {
        let h = self.rng.gen_range(1..=max_height.max(1));
        let mut g = RootVector::zero(self.rank);
        for _ in 0..h {
            g = g.add_simple(self.index(), 1);
        }
        g
    }

    fn torus(&mut self) -> RootVector {
        RootVector((0..self.rank).map(|_| self.rng.gen_range(-1..=1)).collect())
    }

    /// `sum c_j E_j` over `terms` random `e`-words of weight `g`.
    pub fn plus_of_weight(&mut self, g: &RootVector, terms: usize) -> Element {
        let mut x = Element::zero();
        for _ in 0..terms {
            let w = self.word_of_weight(g);
            x.add_term(TriMono::e_word(&w, self.rank), self.coeff());
        }
        x
    }

    pub fn minus_of_weight(&mut self, g: &RootVector, terms: usize) -> Element {
        let mut x = Element::zero();
        for _ in 0..terms {
            let w = self.word_of_weight(g);
            x.add_term(TriMono::f_word(&w, self.rank), self.coeff());
        }
        x
    }

    /// Random element of `U^{>=0}`: terms `k_gamma E` with `|E| <= max_len`.
    pub fn nonneg(&mut self, max_len: usize, terms: usize) -> Element {
        let mut x = Element::zero();
        for _ in 0..terms {
            let len = self.rng.gen_range(0..=max_len);
            let w = self.word(len);
            x.add_term(TriMono::new(Word::new(), self.torus(), w), self.coeff());
        }
        x
    }

    /// Random element of `U^{<=0}`: terms `F k_gamma`.
    pub fn nonpos(&mut self, max_len: usize, terms: usize) -> Element {
        let mut x = Element::zero();
        for _ in 0..terms {
            let len = self.rng.gen_range(0..=max_len);
            let w = self.word(len);
            x.add_term(TriMono::new(w, self.torus(), Word::new()), self.coeff());
        }
        x
    }

    /// Random element of `U` built from products of letters of total
    /// length at most `max_len`.
    pub fn mixed(&mut self, alg: &Algebra, max_len: usize, terms: usize) -> Element {
        let mut x = Element::zero();
        for _ in 0..terms {
            let len = self.rng.gen_range(0..=max_len);
            let letters: Vec<Letter> = (0..len)
                .map(|_| match self.rng.gen_range(0..5) {
                    0 | 1 => Letter::E(self.index() as u8),
                    2 | 3 => Letter::F(self.index() as u8),
                    _ => Letter::K(self.torus()),
                })
                .collect();
            x = &x + &alg.normal_form(&letters).scale(&self.coeff());
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    #[test]
    fn sampling_is_reproducible() {
        let alg = Algebra::new(CartanDatum::preset("B2").unwrap());
        let draw = |seed| {
            let mut s = Sampler::new(seed, 2);
            let g = s.weight(4);
            (s.plus_of_weight(&g, 3), s.mixed(&alg, 4, 3), s.nonpos(3, 2))
        };
        assert_eq!(draw(7), draw(7));
        let mut s = Sampler::new(1, 2);
        let g = RootVector(vec![2, 1]);
        assert_eq!(crate::algebra::word_weight(&s.word_of_weight(&g), 2), g);
    }
}
