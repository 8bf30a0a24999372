use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use super::element::{word_weight, Element, TriMono, Word};
use super::Algebra;
use crate::cartan::RootVector;
use crate::scalars::Scalar;

/// A letter of a free word in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    E(u8),
    F(u8),
    K(RootVector),
}

impl Algebra {
    /// `E * F` for an `e`-word `E` and an `f`-word `F`, as triangular terms.
    pub(crate) fn straighten(&self, e: &[u8], f: &[u8]) -> Arc<Vec<(TriMono, Scalar)>> {
        let n = self.rank();
        if f.is_empty() || e.is_empty() {
            let m = TriMono::new(Word::from_slice(f), RootVector::zero(n), Word::from_slice(e));
            return Arc::new(vec![(m, Scalar::one())]);
        }
        let key = (Word::from_slice(e), Word::from_slice(f));
        if let Some(v) = self.straighten.read().unwrap().get(&key) {
            return v.clone();
        }
        let prev = self.straighten(e, &f[..f.len() - 1]);
        let j = f[f.len() - 1] as usize;
        let mut acc: BTreeMap<TriMono, Scalar> = BTreeMap::new();
        for (m, c) in prev.iter() {
            for (m2, c2) in self.times_f(m, j) {
                let v = c * &c2;
                let entry = acc.entry(m2).or_default();
                *entry = &*entry + &v;
            }
        }
        let out: Vec<(TriMono, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let out = Arc::new(out);
        self.straighten.write().unwrap().insert(key, out.clone());
        out
    }

    /// `(F k_gamma E) f_j` in triangular form.
    fn times_f(&self, m: &TriMono, j: usize) -> Vec<(TriMono, Scalar)> {
        let d = &self.datum;
        let mut out = Vec::with_capacity(1 + 2 * m.e.len());
        let mut f = m.f.clone();
        f.push(j as u8);
        out.push((TriMono::new(f, m.k.clone(), m.e.clone()), Scalar::q_pow(-d.form_with_simple(j, &m.k))));
        let c = self.commutator_scale(j);
        let mut prefix = RootVector::zero(self.rank());
        for (p, &l) in m.e.iter().enumerate() {
            if l as usize == j {
                let x = d.form_with_simple(j, &prefix);
                let mut rest = m.e.clone();
                rest.remove(p);
                out.push((TriMono::new(m.f.clone(), m.k.add_simple(j, 1), rest.clone()), c.shift(-x)));
                out.push((TriMono::new(m.f.clone(), m.k.add_simple(j, -1), rest), -&c.shift(x)));
            }
            prefix = prefix.add_simple(l as usize, 1);
        }
        out
    }

    /// Product of two triangular monomials, accumulated into `acc` with
    /// extra factor `scale`.
    fn mul_mono_into(&self, a: &TriMono, b: &TriMono, scale: &Scalar, acc: &mut Element) {
        let d = &self.datum;
        let mid = self.straighten(&a.e, &b.f);
        for (m, c) in mid.iter() {
            let fw = word_weight(&m.f, self.rank());
            let ew = word_weight(&m.e, self.rank());
            let x = -d.form(&a.k, &fw) - d.form(&b.k, &ew);
            let mut f = a.f.clone();
            f.extend_from_slice(&m.f);
            let mut e = m.e.clone();
            e.extend_from_slice(&b.e);
            let k = &(&a.k + &m.k) + &b.k;
            acc.add_term(TriMono::new(f, k, e), (scale * c).shift(x));
        }
    }

    pub fn mul_mono(&self, a: &TriMono, b: &TriMono) -> Element {
        let mut acc = Element::zero();
        self.mul_mono_into(a, b, &Scalar::one(), &mut acc);
        acc
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut acc = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.mul_mono_into(ma, mb, &(ca * cb), &mut acc);
            }
        }
        acc
    }

    /// Left-to-right product of several factors.
    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn letter(&self, l: &Letter) -> Element {
        match l {
            Letter::E(i) => self.e(*i as usize),
            Letter::F(i) => self.f(*i as usize),
            Letter::K(g) => self.k(g.clone()),
        }
    }

    /// Normal form of a free word, multiplying letters left to right.
    pub fn normal_form(&self, w: &[Letter]) -> Element {
        w.iter().fold(self.one(), |acc, l| self.mul(&acc, &self.letter(l)))
    }

    /// Normal form of a free word by rewriting adjacent pairs in a random
    /// order. Independent of the memoized route; used as its oracle.
    pub fn normal_form_randomized<R: Rng>(&self, w: &[Letter], rng: &mut R) -> Element {
        let d = &self.datum;
        let n = self.rank();
        let mut pending: Vec<(Scalar, Vec<Letter>)> = vec![(Scalar::one(), w.to_vec())];
        let mut done = Element::zero();
        while let Some((c, w)) = pending.pop() {
            let spots: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&p| {
                    matches!(
                        (&w[p], &w[p + 1]),
                        (Letter::E(_), Letter::F(_)) | (Letter::E(_), Letter::K(_)) | (Letter::K(_), Letter::F(_)) | (Letter::K(_), Letter::K(_))
                    )
                })
                .collect();
            if spots.is_empty() {
                let mut f = Word::new();
                let mut e = Word::new();
                let mut k = RootVector::zero(n);
                for l in &w {
                    match l {
                        Letter::F(i) => f.push(*i),
                        Letter::E(i) => e.push(*i),
                        Letter::K(g) => k = g.clone(),
                    }
                }
                done.add_term(TriMono::new(f, k, e), c);
                continue;
            }
            let p = spots[rng.gen_range(0..spots.len())];
            let splice = |mid: Vec<Letter>| {
                let mut v = w[..p].to_vec();
                v.extend(mid);
                v.extend_from_slice(&w[p + 2..]);
                v
            };
            match (&w[p], &w[p + 1]) {
                (Letter::E(i), Letter::F(j)) => {
                    pending.push((c.clone(), splice(vec![Letter::F(*j), Letter::E(*i)])));
                    if i == j {
                        let s = self.commutator_scale(*i as usize);
                        let a = self.simple(*i as usize);
                        pending.push((&c * s, splice(vec![Letter::K(a.clone())])));
                        pending.push((-&(&c * s), splice(vec![Letter::K(-&a)])));
                    }
                }
                (Letter::E(i), Letter::K(g)) => {
                    let x = -d.form_with_simple(*i as usize, g);
                    pending.push((c.shift(x), splice(vec![Letter::K(g.clone()), Letter::E(*i)])));
                }
                (Letter::K(g), Letter::F(j)) => {
                    let x = -d.form_with_simple(*j as usize, g);
                    pending.push((c.shift(x), splice(vec![Letter::F(*j), Letter::K(g.clone())])));
                }
                (Letter::K(a), Letter::K(b)) => {
                    pending.push((c, splice(vec![Letter::K(a + b)])));
                }
                _ => unreachable!(),
            }
        }
        done
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::preset(name).unwrap())
    }

    #[test]
    fn commutator_relation() {
        let a = alg("A1");
        let ef = a.mul(&a.e(0), &a.f(0));
        let mut expected = Element::f_word(&[0], 1);
        let e = Element::e_word(&[0], 1);
        expected = a.mul(&expected, &e);
        let c = a.commutator_scale(0).clone();
        expected.add_term(TriMono::torus(RootVector(vec![1])), c.clone());
        expected.add_term(TriMono::torus(RootVector(vec![-1])), -c);
        assert_eq!(ef, expected);
    }

    #[test]
    fn torus_commutation() {
        let a = alg("A1");
        let x = a.normal_form(&[Letter::E(0), Letter::K(RootVector(vec![1]))]);
        let expected = Element::term(TriMono::new(Word::new(), RootVector(vec![1]), Word::from_slice(&[0])), Scalar::q_pow(-2));
        assert_eq!(x, expected);
        let kk = a.mul(&a.k(RootVector(vec![2])), &a.k(RootVector(vec![-5])));
        assert_eq!(kk, a.k(RootVector(vec![-3])));
        assert_eq!(a.mul(&a.one(), &x), x);
    }

    #[test]
    fn randomized_rewriting_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["A2", "B2", "G2"] {
            let a = alg(name);
            for _ in 0..30 {
                let len = rng.gen_range(0..=8);
                let w: Vec<Letter> = (0..len)
                    .map(|_| match rng.gen_range(0..5) {
                        0 | 1 => Letter::E(rng.gen_range(0..2)),
                        2 | 3 => Letter::F(rng.gen_range(0..2)),
                        _ => Letter::K(RootVector(vec![rng.gen_range(-1..=1), rng.gen_range(-1..=1)])),
                    })
                    .collect();
                let x = a.normal_form(&w);
                let y = a.normal_form_randomized(&w, &mut rng);
                assert_eq!(x, y, "{name} {w:?}");
            }
        }
    }

    #[test]
    fn associativity_on_monomials() {
        let a = alg("B2");
        let x = a.normal_form(&[Letter::E(0), Letter::F(1), Letter::E(1)]);
        let y = a.normal_form(&[Letter::F(0), Letter::E(0), Letter::K(RootVector(vec![1, -1]))]);
        let z = a.normal_form(&[Letter::F(1), Letter::F(0), Letter::E(1)]);
        assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }
}
