use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{words_of_weight, Pairing};
use crate::algebra::{word_weight, Element, Tensor, TriMono, Word};
use crate::cartan::RootVector;
use crate::scalars::{Matrix, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

/// Which of `T_i`, `T_i^{-1}` the intersection is taken with.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A subspace of `U^+_gamma` (coordinates over the pivot `e`-words) or of
/// `U^-_{-gamma}` (coordinates over the pivot `f`-words).
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pub weight: RootVector,
    pub side: Side,
    pub basis: Vec<Vec<Scalar>>,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Block of a triangular monomial `F k_gamma E`: `(gamma, |F|, |E|)`.
pub type BlockKey = (RootVector, RootVector, RootVector);

/// Coordinates of an element of `U^{(x)n}` in the tensor product of the
/// bases `(pivot f-word) k_gamma (pivot e-word)`. Two representatives are
/// equal in `U^{(x)n}` iff their coordinates coincide.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coordinates {
    pub entries: BTreeMap<(Vec<BlockKey>, Vec<usize>), Scalar>,
}

impl Coordinates {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn add(&mut self, key: (Vec<BlockKey>, Vec<usize>), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(key).or_default();
        *e = &*e + &c;
    }

    fn prune(&mut self) {
        self.entries.retain(|_, c| !c.is_zero());
    }
}

impl Pairing {
    /// Coordinates of an `e`-word over the pivot `e`-words of its weight.
    pub fn plus_word_coords(&self, e: &[u8]) -> Arc<Vec<Scalar>> {
        let key = Word::from_slice(e);
        if let Some(v) = self.plus_coords.read().unwrap().get(&key) {
            return v.clone();
        }
        let b = self.gram_block(&word_weight(e, self.rank())).unwrap();
        let v: Vec<Scalar> = b.pivot_fwords().map(|f| Scalar::from_laurent(self.tau_normalized(e, f))).collect();
        let c: Vec<Scalar> = (0..b.rank())
            .map(|a| {
                v.iter()
                    .enumerate()
                    .fold(Scalar::zero(), |acc, (bi, vb)| &acc + &(vb * b.normalized_inverse.get(bi, a)))
            })
            .collect();
        let c = Arc::new(c);
        self.plus_coords.write().unwrap().insert(key, c.clone());
        c
    }

    /// Coordinates of an `f`-word over the pivot `f`-words of its weight.
    pub fn minus_word_coords(&self, f: &[u8]) -> Arc<Vec<Scalar>> {
        let key = Word::from_slice(f);
        if let Some(v) = self.minus_coords.read().unwrap().get(&key) {
            return v.clone();
        }
        let b = self.gram_block(&word_weight(f, self.rank())).unwrap();
        let u: Vec<Scalar> = b.pivot_ewords().map(|e| Scalar::from_laurent(self.tau_normalized(e, f))).collect();
        let d = Arc::new(b.normalized_inverse.mul_vec(&u));
        self.minus_coords.write().unwrap().insert(key, d.clone());
        d
    }

    fn mono_coords(&self, m: &TriMono) -> (BlockKey, Vec<((usize, usize), Scalar)>) {
        let key = (m.k.clone(), m.f_weight(), m.e_weight());
        let dm = self.minus_word_coords(&m.f);
        let cp = self.plus_word_coords(&m.e);
        let mut out = Vec::new();
        for (b, x) in dm.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (a, y) in cp.iter().enumerate() {
                if !y.is_zero() {
                    out.push(((b, a), x * y));
                }
            }
        }
        (key, out)
    }

    pub fn coords(&self, x: &Element) -> Coordinates {
        let mut out = Coordinates::default();
        for (m, c) in x.terms() {
            let (key, vals) = self.mono_coords(m);
            for ((b, a), v) in vals {
                out.add((vec![key.clone()], vec![b, a]), c * &v);
            }
        }
        out.prune();
        out
    }

    pub fn tensor_coords(&self, t: &Tensor) -> Coordinates {
        let mut out = Coordinates::default();
        for (k, c) in t.terms() {
            let per_slot: Vec<(BlockKey, Vec<((usize, usize), Scalar)>)> = k.iter().map(|m| self.mono_coords(m)).collect();
            let keys: Vec<BlockKey> = per_slot.iter().map(|(bk, _)| bk.clone()).collect();
            let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c.clone())];
            for (_, vals) in &per_slot {
                let mut next = Vec::with_capacity(acc.len() * vals.len());
                for (idx, s) in &acc {
                    for ((b, a), v) in vals {
                        let mut i = idx.clone();
                        i.push(*b);
                        i.push(*a);
                        next.push((i, s * v));
                    }
                }
                acc = next;
            }
            for (idx, v) in acc {
                out.add((keys.clone(), idx), v);
            }
        }
        out.prune();
        out
    }

    /// Decides `x = y` in `U` for two representatives.
    pub fn equal(&self, x: &Element, y: &Element) -> bool {
        self.vanishes(&(x - y))
    }

    /// Decides `z = 0` in `U` without inverting Gram blocks: each block
    /// `sum c F k_gamma E` is paired on its `f`-side against every `e`-word,
    /// and each resulting element of `U^+` is tested by iterated skew
    /// derivations.
    pub fn vanishes(&self, z: &Element) -> bool {
        type Block = BTreeMap<Word, BTreeMap<Word, Scalar>>;
        let mut blocks: BTreeMap<BlockKey, Block> = BTreeMap::new();
        for (m, c) in z.terms() {
            let key = (m.k.clone(), m.f_weight(), m.e_weight());
            blocks.entry(key).or_default().entry(m.f.clone()).or_default().insert(m.e.clone(), c.clone());
        }
        blocks.iter().all(|((_, wf, we), block)| {
            words_of_weight(wf).iter().all(|test| {
                let mut y: BTreeMap<Word, Scalar> = BTreeMap::new();
                for (f, es) in block {
                    let t = self.tau_normalized(test, f);
                    if t.is_zero() {
                        continue;
                    }
                    let t = Scalar::from_laurent(t);
                    for (e, c) in es {
                        let v = y.entry(e.clone()).or_default();
                        *v = &*v + &(c * &t);
                    }
                }
                y.retain(|_, c| !c.is_zero());
                self.plus_vanishes(&y, we)
            })
        })
    }

    /// Whether `sum c_E E` is zero in `U^+_nu`.
    pub(crate) fn plus_vanishes(&self, y: &BTreeMap<Word, Scalar>, nu: &RootVector) -> bool {
        if y.is_empty() {
            return true;
        }
        if nu.is_zero() {
            return false;
        }
        (0..self.rank()).filter(|&i| nu.0[i] > 0).all(|i| self.plus_vanishes(&self.skew_derivation(i, y), &nu.add_simple(i, -1)))
    }

    /// Decides equality in `U^{(x)n}`.
    pub fn equal_tensor(&self, x: &Tensor, y: &Tensor) -> bool {
        self.tensor_coords(&(x - y)).is_zero()
    }

    /// `sum_j c_j tau(E', F_j) tau(E_j, F')` over the terms `c_j F_j k E_j` of `z`.
    pub fn dp_functional(&self, z: &Element, e_test: &[u8], f_test: &[u8]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in z.terms() {
            let l = self.tau_words(e_test, &m.f);
            if l.is_zero() {
                continue;
            }
            let r = self.tau_words(&m.e, f_test);
            acc = &acc + &(&(c * &l) * &r);
        }
        acc
    }

    fn single_block(&self, z: &Element, want: &BlockKey, side: Side) -> Option<Vec<Scalar>> {
        let dim = match side {
            Side::Plus => self.gram_block(&want.2).ok()?.rank(),
            Side::Minus => self.gram_block(&want.1).ok()?.rank(),
        };
        let mut v = vec![Scalar::zero(); dim];
        for ((keys, idx), c) in self.coords(z).entries {
            if keys.len() != 1 || &keys[0] != want {
                return None;
            }
            let pos = match side {
                Side::Plus => idx[1],
                Side::Minus => idx[0],
            };
            v[pos] = c;
        }
        Some(v)
    }

    /// Coordinates over the pivot `e`-words of weight `nu` when `z` lies in
    /// `U^+_nu`, otherwise `None`.
    pub fn membership_plus(&self, z: &Element, nu: &RootVector) -> Option<Vec<Scalar>> {
        let zero = RootVector::zero(self.rank());
        self.single_block(z, &(zero.clone(), zero, nu.clone()), Side::Plus)
    }

    /// Coordinates over the pivot `f`-words of weight `nu` when `z` lies in
    /// `U^-_{-nu}`, otherwise `None`.
    pub fn membership_minus(&self, z: &Element, nu: &RootVector) -> Option<Vec<Scalar>> {
        let zero = RootVector::zero(self.rank());
        self.single_block(z, &(zero.clone(), nu.clone(), zero), Side::Minus)
    }

    /// The pure `e`-word part of `z` when the remaining terms vanish in `U`,
    /// so that `z` lies in `U^+` without expanding it over a pivot basis.
    pub fn plus_part(&self, z: &Element) -> Option<Element> {
        self.split_part(z, |m| m.f.is_empty() && m.k.is_zero())
    }

    /// The pure `f`-word part of `z` when the remaining terms vanish in `U`.
    pub fn minus_part(&self, z: &Element) -> Option<Element> {
        self.split_part(z, |m| m.e.is_empty() && m.k.is_zero())
    }

    fn split_part(&self, z: &Element, keep: impl Fn(&TriMono) -> bool) -> Option<Element> {
        let (kept, rest): (Vec<_>, Vec<_>) = z.terms().map(|(m, c)| (m.clone(), c.clone())).partition(|(m, _)| keep(m));
        if !rest.is_empty() && !self.vanishes(&Element::from_terms(rest)) {
            return None;
        }
        Some(Element::from_terms(kept))
    }

    /// `sum_a c_a E_a` over the pivot `e`-words of weight `nu`.
    pub fn plus_element(&self, nu: &RootVector, coords: &[Scalar]) -> Element {
        let b = self.gram_block(nu).unwrap();
        Element::from_terms(b.pivot_ewords().zip(coords).map(|(w, c)| (TriMono::e_word(w, self.rank()), c.clone())))
    }

    pub fn minus_element(&self, nu: &RootVector, coords: &[Scalar]) -> Element {
        let b = self.gram_block(nu).unwrap();
        Element::from_terms(b.pivot_fwords().zip(coords).map(|(w, c)| (TriMono::f_word(w, self.rank()), c.clone())))
    }

    /// `tau(x, y)` for `x`, `y` given by coordinates over the pivot words of `nu`.
    pub fn tau_coords(&self, nu: &RootVector, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let b = self.gram_block(nu).unwrap();
        let mut acc = Scalar::zero();
        for (pa, xa) in b.pivot_rows.iter().zip(x) {
            if xa.is_zero() {
                continue;
            }
            for (pb, yb) in b.pivot_cols.iter().zip(y) {
                if !yb.is_zero() {
                    acc = &acc + &(&(xa * yb) * &Scalar::from_laurent(b.normalized[*pa][*pb].clone()));
                }
            }
        }
        &acc * &b.scale
    }

    /// `U^+_gamma cap T_i^{+-1}(U^+)` or `U^-_{-gamma} cap T_i^{+-1}(U^-)` as the
    /// orthogonal complement of `U^- f_i`, `f_i U^-`, `U^+ e_i` or `e_i U^+`.
    pub fn intersection_subspace(&self, g: &RootVector, i: usize, side: Side, dir: Direction) -> GradedSubspace {
        let b = self.gram_block(g).unwrap();
        let r = b.rank();
        let identity = || (0..r).map(|k| (0..r).map(|c| if c == k { Scalar::one() } else { Scalar::zero() }).collect()).collect();
        if g.0[i] == 0 {
            return GradedSubspace { weight: g.clone(), side, basis: identity() };
        }
        let rest = g.add_simple(i, -1);
        let tests = words_of_weight(&rest);
        let glue = |w: &Word| {
            let mut x = w.clone();
            match dir {
                Direction::Forward => x.push(i as u8),
                Direction::Inverse => x.insert(0, i as u8),
            }
            x
        };
        let basis_words: Vec<&Word> = match side {
            Side::Plus => b.pivot_ewords().collect(),
            Side::Minus => b.pivot_fwords().collect(),
        };
        let mut m = Matrix::zeros(tests.len(), r);
        for (t, w) in tests.iter().enumerate() {
            let wi = glue(w);
            for (c, bw) in basis_words.iter().enumerate() {
                let v = match side {
                    Side::Plus => self.tau_normalized(bw, &wi),
                    Side::Minus => self.tau_normalized(&wi, bw),
                };
                m.set(t, c, Scalar::from_laurent(v));
            }
        }
        GradedSubspace { weight: g.clone(), side, basis: m.nullspace() }
    }

    /// Basis elements of an intersection subspace as elements of `U`.
    pub fn subspace_elements(&self, s: &GradedSubspace) -> Vec<Element> {
        s.basis
            .iter()
            .map(|v| match s.side {
                Side::Plus => self.plus_element(&s.weight, v),
                Side::Minus => self.minus_element(&s.weight, v),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::cartan::CartanDatum;

    fn pairing(name: &str) -> Pairing {
        Pairing::new(Arc::new(Algebra::new(CartanDatum::preset(name).unwrap())))
    }

    #[test]
    fn serre_elements_vanish() {
        for name in ["A2", "B2", "G2"] {
            let p = pairing(name);
            let a = p.algebra();
            for (i, j) in [(0, 1), (1, 0)] {
                assert!(p.equal(&a.serre_element(i, j, true), &Element::zero()), "{name}");
                assert!(p.equal(&a.serre_element(i, j, false), &Element::zero()), "{name}");
            }
        }
    }

    #[test]
    fn vanishing_agrees_with_coordinates() {
        let p = pairing("B2");
        let a = p.algebra();
        let zs = [
            "e1 e2 e2 - (q^2 + q^-2) e2 e1 e2 + e2 e2 e1",
            "e1 e2 e2 - e2 e1 e2 + e2 e2 e1",
            "e1 f2 e2 f1 - f2 e1 f1 e2",
            "e1 f1 - f1 e1 - (k[1,0] - k[-1,0]) / (q^2 - q^-2)",
            "e1 f1 - f1 e1 - (k[1,0] - k[-1,0]) / (q - q^-1)",
        ];
        for z in zs {
            let z = a.parse(z).unwrap();
            assert_eq!(p.vanishes(&z), p.coords(&z).is_zero(), "{z}");
        }
        assert!(p.vanishes(&a.parse(zs[3]).unwrap()));
        assert!(!p.vanishes(&a.parse(zs[4]).unwrap()));
    }

    #[test]
    fn pairing_is_symmetric_on_words() {
        let p = pairing("G2");
        let ws = words_of_weight(&RootVector(vec![2, 2]));
        for e in &ws {
            for f in &ws {
                assert_eq!(p.tau_normalized(e, f), p.tau_normalized(f, e));
            }
        }
    }

    #[test]
    fn equality_basics() {
        let p = pairing("A2");
        let a = p.algebra();
        let z = a.parse("e1 f2 e2 + k[1,0] f1").unwrap();
        assert!(p.equal(&z, &z));
        assert!(!p.equal(&a.e(0), &a.f(0)));
        assert!(!p.equal(&a.k(RootVector(vec![1, 0])), &a.k(RootVector(vec![0, 1]))));
    }

    #[test]
    fn membership() {
        let p = pairing("A2");
        let a = p.algebra();
        let v = p.membership_plus(&a.e(0), &RootVector(vec![1, 0])).unwrap();
        assert_eq!(v, vec![Scalar::one()]);
        assert!(p.membership_plus(&a.f(0), &RootVector(vec![1, 0])).is_none());
        let t = a.braid_t(0, &a.e(1));
        let back = a.braid_t_inv(0, &t);
        let v = p.membership_plus(&back, &RootVector(vec![0, 1])).unwrap();
        assert_eq!(v, vec![Scalar::one()]);
    }

    #[test]
    fn intersection_examples() {
        let p = pairing("A1");
        assert_eq!(p.intersection_subspace(&RootVector(vec![1]), 0, Side::Plus, Direction::Forward).dim(), 0);
        assert_eq!(p.intersection_subspace(&RootVector(vec![0]), 0, Side::Plus, Direction::Forward).dim(), 1);
        let p = pairing("A2");
        let a = p.algebra();
        let s = p.intersection_subspace(&RootVector(vec![1, 1]), 0, Side::Plus, Direction::Forward);
        assert_eq!(s.dim(), 1);
        let x = &p.subspace_elements(&s)[0];
        let t = a.braid_t(0, &a.e(1));
        // proportional: x (x) t - t (x) x vanishes in coordinates
        let cx = p.membership_plus(x, &RootVector(vec![1, 1])).unwrap();
        let ct = p.membership_plus(&t, &RootVector(vec![1, 1])).unwrap();
        assert_eq!(&cx[0] * &ct[1], &cx[1] * &ct[0]);
    }

    #[test]
    fn dp_examples() {
        let p = pairing("A1");
        let a = p.algebra();
        assert_eq!(p.dp_functional(&a.e(0), &[], &[0]), -a.commutator_scale(0));
        assert!(p.dp_functional(&a.k(RootVector(vec![3])), &[], &[]).is_one());
    }
}
