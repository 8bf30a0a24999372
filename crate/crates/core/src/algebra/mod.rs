//! The quantized enveloping algebra `U` in triangular normal form, its Hopf
//! structure, the twist `Phi` and the braid automorphisms.

mod braid;
mod element;
mod expr;
mod hopf;
mod rewrite;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::cartan::{CartanDatum, RootVector};
use crate::scalars::{q_factorial_laurent, LaurentPoly, Scalar};

pub use element::{word, word_weight, Element, Tensor, TorusPoly, TriMono, Word};
pub use expr::ParseError;
pub use rewrite::Letter;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

type StraightenCache = RwLock<HashMap<(Word, Word), Arc<Vec<(TriMono, Scalar)>>>>;
type ImageCache = RwLock<HashMap<(usize, bool, Letter), Arc<Element>>>;

/// `U_q` attached to a Cartan datum, with memo tables for rewriting and for
/// braid images of generators.
pub struct Algebra {
    datum: CartanDatum,
    /// `1 / (q_i - q_i^{-1})`
    commutator_scale: Vec<Scalar>,
    straighten: StraightenCache,
    braid_images: ImageCache,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("datum", &self.datum).finish_non_exhaustive()
    }
}

impl Algebra {
    pub fn new(datum: CartanDatum) -> Self {
        let commutator_scale = (0..datum.rank())
            .map(|i| {
                let d = datum.d(i);
                (&Scalar::q_pow(d) - &Scalar::q_pow(-d)).inv().unwrap()
            })
            .collect();
        Self {
            datum,
            commutator_scale,
            straighten: RwLock::new(HashMap::new()),
            braid_images: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(AlgebraError::BadIndex(i))
        }
    }

    /// `1 / (q_i - q_i^{-1})`.
    pub fn commutator_scale(&self, i: usize) -> &Scalar {
        &self.commutator_scale[i]
    }

    /// `q_i^n`.
    pub fn qi_pow(&self, i: usize, n: i32) -> Scalar {
        Scalar::q_pow(self.datum.d(i) * n)
    }

    pub fn one(&self) -> Element {
        Element::one(self.rank())
    }

    pub fn e(&self, i: usize) -> Element {
        Element::e(i, self.rank())
    }

    pub fn f(&self, i: usize) -> Element {
        Element::f(i, self.rank())
    }

    pub fn k(&self, g: RootVector) -> Element {
        Element::torus(g)
    }

    pub fn simple(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank(), i)
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(c, self.rank())
    }

    /// `e_i^{(r)} = e_i^r / [r]!_{q_i}` (or the `f` version).
    pub fn divided_power(&self, i: usize, r: u32, positive: bool) -> Element {
        let w: Vec<u8> = vec![i as u8; r as usize];
        let c = Scalar::new(LaurentPoly::one(), q_factorial_laurent(r, self.datum.d(i)));
        let m = if positive { TriMono::e_word(&w, self.rank()) } else { TriMono::f_word(&w, self.rank()) };
        Element::term(m, c)
    }

    /// Quantum Serre element `sum_{r+s=1-a_ij} (-1)^r x_i^{(r)} x_j x_i^{(s)}`
    /// with `x = e` or `x = f`.
    pub fn serre_element(&self, i: usize, j: usize, positive: bool) -> Element {
        let n = (1 - self.datum.a(i, j)) as u32;
        let xj = if positive { self.e(j) } else { self.f(j) };
        let mut acc = Element::zero();
        for r in 0..=n {
            let t = self.mul(&self.mul(&self.divided_power(i, r, positive), &xj), &self.divided_power(i, n - r, positive));
            acc = if r % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    /// Projection onto `U^0` (terms with empty `e`- and `f`-words).
    pub fn projection_p(&self, x: &Element) -> TorusPoly {
        x.torus_part()
    }

    /// `prod_{r=1}^m (q_i^{-(r-1)} k_i - q_i^{r-1} k_i^{-1}) / (q_i^r - q_i^{-r})`
    /// expanded in the `k_gamma` basis.
    pub fn gaussian_binomial_k(&self, i: usize, m: u32) -> TorusPoly {
        let n = self.rank();
        let mut acc: TorusPoly = TorusPoly::new();
        acc.insert(RootVector::zero(n), Scalar::one());
        for r in 1..=m as i32 {
            let den = &self.qi_pow(i, r) - &self.qi_pow(i, -r);
            let plus = &self.qi_pow(i, -(r - 1)) / &den;
            let minus = -&(&self.qi_pow(i, r - 1) / &den);
            let mut next = TorusPoly::new();
            for (g, c) in &acc {
                for (shift, s) in [(1, &plus), (-1, &minus)] {
                    let key = g.add_simple(i, shift);
                    let v = c * s;
                    let entry = next.entry(key).or_default();
                    *entry = &*entry + &v;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_power_examples() {
        let a = Algebra::new(CartanDatum::preset("A1").unwrap());
        assert_eq!(a.divided_power(0, 0, true), a.one());
        assert_eq!(a.divided_power(0, 1, true), a.e(0));
        let two = &Scalar::q_pow(1) + &Scalar::q_pow(-1);
        let expected = Element::e_word(&[0, 0], 1).scale(&two.inv().unwrap());
        assert_eq!(a.divided_power(0, 2, true), expected);
    }

    #[test]
    fn gaussian_binomial_small() {
        let a = Algebra::new(CartanDatum::preset("A1").unwrap());
        let g0 = a.gaussian_binomial_k(0, 0);
        assert_eq!(g0.len(), 1);
        let g1 = a.gaussian_binomial_k(0, 1);
        let c = a.commutator_scale(0);
        assert_eq!(g1[&RootVector(vec![1])], *c);
        assert_eq!(g1[&RootVector(vec![-1])], -c);
        let g2 = a.gaussian_binomial_k(0, 2);
        // (k - k^-1)(q^-1 k - q k^-1) / ((q - q^-1)(q^2 - q^-2))
        let d = &(&Scalar::q_pow(1) - &Scalar::q_pow(-1)) * &(&Scalar::q_pow(2) - &Scalar::q_pow(-2));
        assert_eq!(g2[&RootVector(vec![2])], &Scalar::q_pow(-1) / &d);
        assert_eq!(g2[&RootVector(vec![-2])], &Scalar::q_pow(1) / &d);
        assert_eq!(g2[&RootVector(vec![0])], -&(&(&Scalar::q_pow(1) + &Scalar::q_pow(-1)) / &d));
    }
}
