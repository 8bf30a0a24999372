use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

use crate::cartan::RootVector;
use crate::scalars::Scalar;

/// A word in generator indices (all `e` or all `f` letters).
pub type Word = SmallVec<[u8; 8]>;

/// Weight-lattice part of `U^0`: a finite combination of `k_gamma`.
pub type TorusPoly = BTreeMap<RootVector, Scalar>;

pub fn word(letters: &[u8]) -> Word {
    Word::from_slice(letters)
}

/// `sum_{letters} alpha_i` for a word.
pub fn word_weight(w: &[u8], rank: usize) -> RootVector {
    let mut v = vec![0; rank];
    for &l in w {
        v[l as usize] += 1;
    }
    RootVector(v)
}

/// A triangular monomial `F k_gamma E`: `f`-letters, then one torus
/// element, then `e`-letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TriMono {
    pub f: Word,
    pub k: RootVector,
    pub e: Word,
}

impl TriMono {
    pub fn new(f: Word, k: RootVector, e: Word) -> Self {
        Self { f, k, e }
    }

    pub fn unit(rank: usize) -> Self {
        Self::torus(RootVector::zero(rank))
    }

    pub fn torus(k: RootVector) -> Self {
        Self { f: Word::new(), k, e: Word::new() }
    }

    pub fn e_word(e: &[u8], rank: usize) -> Self {
        Self { f: Word::new(), k: RootVector::zero(rank), e: word(e) }
    }

    pub fn f_word(f: &[u8], rank: usize) -> Self {
        Self { f: word(f), k: RootVector::zero(rank), e: Word::new() }
    }

    pub fn rank(&self) -> usize {
        self.k.rank()
    }

    pub fn is_torus(&self) -> bool {
        self.f.is_empty() && self.e.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.is_torus() && self.k.is_zero()
    }

    pub fn e_weight(&self) -> RootVector {
        word_weight(&self.e, self.rank())
    }

    pub fn f_weight(&self) -> RootVector {
        word_weight(&self.f, self.rank())
    }

    /// Weight in `Q`: `|E| - |F|`.
    pub fn weight(&self) -> RootVector {
        let r = self.rank();
        let mut v = vec![0; r];
        for &l in &self.e {
            v[l as usize] += 1;
        }
        for &l in &self.f {
            v[l as usize] -= 1;
        }
        RootVector(v)
    }
}

impl fmt::Display for TriMono {
    /// `f1 f2 k[1,0] e1` with 1-based indices; the unit renders as `1`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.f.iter().map(|i| format!("f{}", i + 1)).collect();
        if !self.k.is_zero() {
            let c: Vec<String> = self.k.0.iter().map(ToString::to_string).collect();
            parts.push(format!("k[{}]", c.join(",")));
        }
        parts.extend(self.e.iter().map(|i| format!("e{}", i + 1)));
        if parts.is_empty() {
            write!(out, "1")
        } else {
            write!(out, "{}", parts.join(" "))
        }
    }
}

/// A finite `Q(q)`-combination of triangular monomials.
///
/// Words are free (no Serre relations are imposed), so two different
/// `Element`s may represent the same element of the algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<TriMono, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::mono(TriMono::unit(rank))
    }

    pub fn mono(m: TriMono) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: TriMono, c: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn scalar(c: Scalar, rank: usize) -> Self {
        Self::term(TriMono::unit(rank), c)
    }

    pub fn torus(k: RootVector) -> Self {
        Self::mono(TriMono::torus(k))
    }

    pub fn e(i: usize, rank: usize) -> Self {
        Self::mono(TriMono::e_word(&[i as u8], rank))
    }

    pub fn f(i: usize, rank: usize) -> Self {
        Self::mono(TriMono::f_word(&[i as u8], rank))
    }

    pub fn e_word(w: &[u8], rank: usize) -> Self {
        Self::mono(TriMono::e_word(w, rank))
    }

    pub fn f_word(w: &[u8], rank: usize) -> Self {
        Self::mono(TriMono::f_word(w, rank))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TriMono, Scalar)>) -> Self {
        let mut x = Self::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub fn from_torus(p: &TorusPoly) -> Self {
        Self::from_terms(p.iter().map(|(k, c)| (TriMono::torus(k.clone()), c.clone())))
    }

    /// Adds `c * m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: TriMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TriMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (TriMono, Scalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &TriMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// The value when this is a multiple of `1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Split into weight components `|E| - |F|`.
    pub fn weight_components(&self) -> BTreeMap<RootVector, Element> {
        let mut out: BTreeMap<RootVector, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// True when every term is `k_gamma E` (so the element lies in `U^{>=0}`).
    pub fn is_nonneg_part(&self) -> bool {
        self.terms.keys().all(|m| m.f.is_empty())
    }

    /// True when every term is `F k_gamma`.
    pub fn is_nonpos_part(&self) -> bool {
        self.terms.keys().all(|m| m.e.is_empty())
    }

    /// True when every term is a pure `e`-word.
    pub fn is_plus(&self) -> bool {
        self.terms.keys().all(|m| m.f.is_empty() && m.k.is_zero())
    }

    pub fn is_minus(&self) -> bool {
        self.terms.keys().all(|m| m.e.is_empty() && m.k.is_zero())
    }

    /// Projection onto `U^0` along the triangular decomposition.
    pub fn torus_part(&self) -> TorusPoly {
        self.terms.iter().filter(|(m, _)| m.is_torus()).map(|(m, c)| (m.k.clone(), c.clone())).collect()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        Element::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if m.is_unit() { c.to_string() } else { format!("{c} {m}") })
            .collect();
        write!(out, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut x = self.clone();
        for (m, c) in &rhs.terms {
            x.add_term(m.clone(), c.clone());
        }
        x
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut x = self.clone();
        for (m, c) in &rhs.terms {
            x.add_term(m.clone(), -c);
        }
        x
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// A finite combination of pure tensors of triangular monomials, of fixed
/// arity (2 for `U (x) U`, `m + 1` for iterated coproducts).
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<TriMono>, Scalar>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    /// `x_1 (x) ... (x) x_n`.
    pub fn pure(slots: &[Element]) -> Self {
        let mut t = Tensor::zero(slots.len());
        let mut acc: Vec<(Vec<TriMono>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for x in slots {
            let mut next = Vec::new();
            for (key, c) in &acc {
                for (m, d) in x.terms() {
                    let mut k = key.clone();
                    k.push(m.clone());
                    next.push((k, c * d));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            t.add_term(k, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, key: Vec<TriMono>, c: Scalar) {
        debug_assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<TriMono>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut t = Tensor::zero(self.arity);
        for (k, x) in &self.terms {
            t.add_term(k.clone(), x * c);
        }
        t
    }

    /// Exchanges the two factors of a 2-fold tensor.
    pub fn swap(&self) -> Tensor {
        assert_eq!(self.arity, 2, "swap needs a 2-fold tensor");
        let mut t = Tensor::zero(2);
        for (k, c) in &self.terms {
            t.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
        }
        t
    }

    /// Applies a linear map to one factor.
    pub fn map_slot(&self, slot: usize, f: impl Fn(&TriMono) -> Element) -> Tensor {
        let mut t = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            for (m, d) in f(&k[slot]).terms() {
                let mut key = k.clone();
                key[slot] = m.clone();
                t.add_term(key, c * d);
            }
        }
        t
    }

    /// Applies a linear map to every factor.
    pub fn map_all(&self, f: impl Fn(&TriMono) -> Element) -> Tensor {
        let mut t = self.clone();
        for s in 0..self.arity {
            t = t.map_slot(s, &f);
        }
        t
    }

    /// Groups terms by the tuple of factor weights.
    pub fn weight_components(&self) -> BTreeMap<Vec<RootVector>, Tensor> {
        let mut out: BTreeMap<Vec<RootVector>, Tensor> = BTreeMap::new();
        for (k, c) in &self.terms {
            let w: Vec<RootVector> = k.iter().map(TriMono::weight).collect();
            out.entry(w).or_insert_with(|| Tensor::zero(self.arity)).add_term(k.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let slots: Vec<String> = k.iter().map(ToString::to_string).collect();
                format!("{c} [{}]", slots.join(" (x) "))
            })
            .collect();
        write!(out, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.arity, rhs.arity);
        let mut t = self.clone();
        for (k, c) in &rhs.terms {
            t.add_term(k.clone(), c.clone());
        }
        t
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.arity, rhs.arity);
        let mut t = self.clone();
        for (k, c) in &rhs.terms {
            t.add_term(k.clone(), -c);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let x = Element::e(0, 2);
        assert!((&x - &x).is_zero());
        let mut y = Element::zero();
        y.add_term(TriMono::unit(2), Scalar::zero());
        assert!(y.is_zero());
    }

    #[test]
    fn rendering() {
        let m = TriMono::new(word(&[0, 1]), RootVector(vec![1, -1]), word(&[1]));
        assert_eq!(m.to_string(), "f1 f2 k[1,-1] e2");
        assert_eq!(Element::one(2).to_string(), "(1)/(1)");
        assert_eq!(Element::zero().to_string(), "0");
    }

    #[test]
    fn weights() {
        let m = TriMono::new(word(&[0, 0]), RootVector(vec![3, 3]), word(&[1]));
        assert_eq!(m.weight(), RootVector(vec![-2, 1]));
    }

    #[test]
    fn pure_tensor_swap() {
        let t = Tensor::pure(&[Element::e(0, 1), Element::f(0, 1)]);
        let s = t.swap().swap();
        assert_eq!(s, t);
        assert_eq!(t.len(), 1);
    }
}
