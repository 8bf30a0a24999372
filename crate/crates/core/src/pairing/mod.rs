//! The Drinfeld pairing `tau`, Gram blocks per weight, coordinates in
//! pivot-word bases, and the equality and membership oracles built on
//! non-degeneracy of `tau` on each weight block.

mod canonical;
mod gram;
mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::algebra::{word_weight, Algebra, Element, Word};
use crate::cartan::RootVector;
use crate::scalars::{q_factorial_laurent, LaurentPoly, Scalar};

pub use gram::{words_of_weight, GramBlock};
pub use oracle::{Coordinates, Side, Direction, GradedSubspace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("left argument must lie in U^{{>=0}} (no f-letters), got term `{0}`")]
    NotNonNegative(String),
    #[error("right argument must lie in U^{{<=0}} (no e-letters), got term `{0}`")]
    NotNonPositive(String),
    #[error("weight {0} is not in Q+")]
    NotInCone(RootVector),
    #[error("restricted Gram block at weight {0} is singular")]
    Singular(RootVector),
}

type WordPairCache = RwLock<HashMap<(Word, Word), LaurentPoly>>;

/// The pairing `tau: U^{>=0} x U^{<=0} -> Q(q)` on an algebra.
pub struct Pairing {
    alg: Arc<Algebra>,
    normalized: WordPairCache,
    grams: RwLock<HashMap<RootVector, Arc<GramBlock>>>,
    plus_coords: RwLock<HashMap<Word, Arc<Vec<Scalar>>>>,
    minus_coords: RwLock<HashMap<Word, Arc<Vec<Scalar>>>>,
}

impl std::fmt::Debug for Pairing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pairing").field("alg", &self.alg).finish_non_exhaustive()
    }
}

impl Pairing {
    pub fn new(alg: Arc<Algebra>) -> Self {
        Self {
            alg,
            normalized: RwLock::new(HashMap::new()),
            grams: RwLock::new(HashMap::new()),
            plus_coords: RwLock::new(HashMap::new()),
            minus_coords: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn algebra_arc(&self) -> Arc<Algebra> {
        self.alg.clone()
    }

    fn rank(&self) -> usize {
        self.alg.rank()
    }

    /// `tau(e_i, f_i) = -1 / (q_i - q_i^{-1})`.
    pub fn generator_value(&self, i: usize) -> Scalar {
        -self.alg.commutator_scale(i)
    }

    /// `prod_j tau(e_j, f_j)^{n_j}` for `gamma = sum n_j alpha_j`.
    pub fn weight_scale(&self, g: &RootVector) -> Scalar {
        g.0.iter().enumerate().fold(Scalar::one(), |acc, (j, &n)| &acc * &self.generator_value(j).pow(n))
    }

    /// `tau(E, F) / weight_scale`, a Laurent polynomial with integer
    /// coefficients. Peels the leftmost `e`-letter:
    /// `tau(e_i E', F) = tau(e_i, f_i) sum_{F_p = i} q^{(alpha_i, |F_{<p}|)} tau(E', F \ p)`.
    pub fn tau_normalized(&self, e: &[u8], f: &[u8]) -> LaurentPoly {
        if e.len() != f.len() {
            return LaurentPoly::zero();
        }
        if e.is_empty() {
            return LaurentPoly::one();
        }
        let n = self.rank();
        if word_weight(e, n) != word_weight(f, n) {
            return LaurentPoly::zero();
        }
        let key = (Word::from_slice(e), Word::from_slice(f));
        if let Some(v) = self.normalized.read().unwrap().get(&key) {
            return v.clone();
        }
        let d = self.alg.datum();
        let i = e[0] as usize;
        let mut acc = LaurentPoly::zero();
        let mut prefix = RootVector::zero(n);
        for (p, &l) in f.iter().enumerate() {
            if l as usize == i {
                let mut rest = Word::from_slice(f);
                rest.remove(p);
                let sub = self.tau_normalized(&e[1..], &rest);
                if !sub.is_zero() {
                    acc = &acc + &sub.shift(d.form_with_simple(i, &prefix));
                }
            }
            prefix = prefix.add_simple(l as usize, 1);
        }
        self.normalized.write().unwrap().insert(key, acc.clone());
        acc
    }

    /// `tau(E, F)` on words.
    pub fn tau_words(&self, e: &[u8], f: &[u8]) -> Scalar {
        let t = self.tau_normalized(e, f);
        if t.is_zero() {
            return Scalar::zero();
        }
        &Scalar::from_laurent(t) * &self.weight_scale(&word_weight(e, self.rank()))
    }

    /// `tau(x, y)` for `x` in `U^{>=0}` (terms `k_gamma E`) and `y` in `U^{<=0}`
    /// (terms `F k_delta`), using
    /// `tau(k_gamma E, F k_delta) = q^{(gamma, |E|)} tau(E, F) q^{-(gamma, delta)}`.
    pub fn tau(&self, x: &Element, y: &Element) -> Result<Scalar, PairingError> {
        if let Some((m, _)) = x.terms().find(|(m, _)| !m.f.is_empty()) {
            return Err(PairingError::NotNonNegative(m.to_string()));
        }
        if let Some((m, _)) = y.terms().find(|(m, _)| !m.e.is_empty()) {
            return Err(PairingError::NotNonPositive(m.to_string()));
        }
        let d = self.alg.datum();
        let mut xs: BTreeMap<(RootVector, RootVector), Vec<(Word, Scalar)>> = BTreeMap::new();
        for (m, c) in x.terms() {
            xs.entry((m.e_weight(), m.k.clone())).or_default().push((m.e.clone(), c.clone()));
        }
        let mut ys: BTreeMap<(RootVector, RootVector), BTreeMap<Word, Scalar>> = BTreeMap::new();
        for (m, c) in y.terms() {
            ys.entry((m.f_weight(), m.k.clone())).or_default().insert(m.f.clone(), c.clone());
        }
        let mut acc = Scalar::zero();
        for ((w, g), ex) in &xs {
            for ((wy, dl), fy) in ys.range((w.clone(), RootVector::zero(0))..) {
                if wy != w {
                    break;
                }
                let t = self.tau_hat_sum(ex, fy);
                if t.is_zero() {
                    continue;
                }
                let shift = d.form(g, w) - d.form(g, dl);
                acc = &acc + &(&t * &self.weight_scale(w)).shift(shift);
            }
        }
        Ok(acc)
    }

    /// `sum c_E c_F tau(E, F) / weight_scale` over words of one weight. Walks
    /// the prefix tree of the `e`-words, applying the skew derivation
    /// `F -> sum_{F_p = i} q^{(alpha_i, |F_{<p}|)} F \ p` to the `f`-side.
    fn tau_hat_sum(&self, ex: &[(Word, Scalar)], fy: &BTreeMap<Word, Scalar>) -> Scalar {
        let mut ex = ex.to_vec();
        ex.sort_by(|a, b| a.0.cmp(&b.0));
        self.tau_hat_walk(&ex, 0, fy)
    }

    fn tau_hat_walk(&self, ex: &[(Word, Scalar)], depth: usize, fy: &BTreeMap<Word, Scalar>) -> Scalar {
        if ex.is_empty() || fy.is_empty() {
            return Scalar::zero();
        }
        if ex[0].0.len() == depth {
            let v = fy.get(&Word::new()).cloned().unwrap_or_default();
            return ex.iter().fold(Scalar::zero(), |acc, (_, c)| &acc + &(c * &v));
        }
        let mut acc = Scalar::zero();
        let mut start = 0;
        while start < ex.len() {
            let l = ex[start].0[depth];
            let end = start + ex[start..].iter().take_while(|(w, _)| w[depth] == l).count();
            let next = self.skew_derivation(l as usize, fy);
            acc = &acc + &self.tau_hat_walk(&ex[start..end], depth + 1, &next);
            start = end;
        }
        acc
    }

    fn skew_derivation(&self, i: usize, fy: &BTreeMap<Word, Scalar>) -> BTreeMap<Word, Scalar> {
        let d = self.alg.datum();
        let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (f, c) in fy {
            let mut prefix = RootVector::zero(self.rank());
            for (p, &l) in f.iter().enumerate() {
                if l as usize == i {
                    let mut rest = f.clone();
                    rest.remove(p);
                    let v = c.shift(d.form_with_simple(i, &prefix));
                    let e = out.entry(rest).or_default();
                    *e = &*e + &v;
                }
                prefix = prefix.add_simple(l as usize, 1);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Closed form `tau(e_i^m, f_i^n) = delta_{mn} q_i^{n(n-1)/2} [n]!_{q_i} / (q_i^{-1} - q_i)^n`.
    pub fn tau_power_closed(&self, i: usize, m: u32, n: u32) -> Scalar {
        if m != n {
            return Scalar::zero();
        }
        let di = self.alg.datum().d(i);
        let n_i = n as i32;
        let num = Scalar::from_laurent(q_factorial_laurent(n, di)).shift(di * n_i * (n_i - 1) / 2);
        let base = &Scalar::q_pow(-di) - &Scalar::q_pow(di);
        &num / &base.pow(n_i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn pairing(name: &str) -> Pairing {
        Pairing::new(Arc::new(Algebra::new(CartanDatum::preset(name).unwrap())))
    }

    #[test]
    fn generator_values() {
        let p = pairing("B2");
        let a = p.algebra();
        for i in 0..2 {
            for j in 0..2 {
                let v = p.tau(&a.e(i), &a.f(j)).unwrap();
                if i == j {
                    assert_eq!(v, -a.commutator_scale(i));
                } else {
                    assert!(v.is_zero());
                }
            }
        }
        let g = RootVector(vec![1, -1]);
        let dl = RootVector(vec![2, 1]);
        let expected = Scalar::q_pow(-a.datum().form(&g, &dl));
        assert_eq!(p.tau(&a.k(g.clone()), &a.k(dl)).unwrap(), expected);
        assert!(p.tau(&a.e(0), &a.k(g.clone())).unwrap().is_zero());
        assert!(p.tau(&a.k(g), &a.f(1)).unwrap().is_zero());
        assert!(p.tau(&a.f(0), &a.f(0)).is_err());
    }

    #[test]
    fn squares_match_closed_form() {
        let p = pairing("A1");
        let a = p.algebra();
        let q = |e| Scalar::q_pow(e);
        let d = &q(1) - &q(-1);
        let expected = &(&q(1) * &(&q(1) + &q(-1))) / &(&d * &d);
        assert_eq!(p.tau(&a.pow(&a.e(0), 2), &a.pow(&a.f(0), 2)).unwrap(), expected);
        for name in ["A2", "B2", "G2"] {
            let p = pairing(name);
            let a = p.algebra();
            for i in 0..2 {
                for m in 0..=4 {
                    for n in 0..=4 {
                        let lhs = p.tau(&a.pow(&a.e(i), m), &a.pow(&a.f(i), n)).unwrap();
                        assert_eq!(lhs, p.tau_power_closed(i, m, n), "{name} i={i} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn torus_factors_split_off() {
        let p = pairing("G2");
        let a = p.algebra();
        let x = a.parse("e1 e2 e1 + q e2 e1 e1").unwrap();
        let y = a.parse("f1 f1 f2 - f2 f1 f1").unwrap();
        let g = RootVector(vec![1, -2]);
        let dl = RootVector(vec![-1, 3]);
        let lhs = p.tau(&a.mul(&x, &a.k(g.clone())), &a.mul(&y, &a.k(dl.clone()))).unwrap();
        let rhs = &p.tau(&x, &y).unwrap() * &Scalar::q_pow(-a.datum().form(&g, &dl));
        assert_eq!(lhs, rhs);
    }
}
