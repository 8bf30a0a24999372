use std::sync::Arc;

use super::element::{Element, TriMono, Word};
use super::rewrite::Letter;
use super::Algebra;
use crate::scalars::Scalar;

impl Algebra {
    /// Image of a single generator under `T_i` (or `T_i^{-1}`).
    fn braid_generator(&self, i: usize, inverse: bool, l: &Letter) -> Arc<Element> {
        let key = (i, inverse, l.clone());
        if let Some(x) = self.braid_images.read().unwrap().get(&key) {
            return x.clone();
        }
        let x = Arc::new(self.compute_braid_generator(i, inverse, l));
        self.braid_images.write().unwrap().insert(key, x.clone());
        x
    }

    fn compute_braid_generator(&self, i: usize, inverse: bool, l: &Letter) -> Element {
        let ai = self.simple(i);
        let minus_one = -Scalar::one();
        match (l, inverse) {
            (Letter::K(g), _) => self.k(self.datum.reflect(i, g)),
            (Letter::E(j), false) if *j as usize == i => {
                // -f_i k_i
                Element::term(TriMono::new(Word::from_slice(&[i as u8]), ai, Word::new()), minus_one)
            }
            (Letter::F(j), false) if *j as usize == i => {
                // -k_i^{-1} e_i
                Element::term(TriMono::new(Word::new(), -&ai, Word::from_slice(&[i as u8])), minus_one)
            }
            (Letter::E(j), true) if *j as usize == i => {
                // -k_i^{-1} f_i
                self.mul(&self.k(-&ai), &self.f(i)).scale(&minus_one)
            }
            (Letter::F(j), true) if *j as usize == i => {
                // -e_i k_i
                self.mul(&self.e(i), &self.k(ai)).scale(&minus_one)
            }
            (Letter::E(j), _) | (Letter::F(j), _) => {
                let j = *j as usize;
                let positive = matches!(l, Letter::E(_));
                let m = (-self.datum.a(i, j)) as u32;
                let xj = if positive { self.e(j) } else { self.f(j) };
                let mut acc = Element::zero();
                for r in 0..=m {
                    let s = m - r;
                    // e: q_i^{-r}, f: q_i^{r}
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let exp = if positive { -(r as i32) } else { r as i32 };
                    let c = self.qi_pow(i, exp).scale_int(sign);
                    // T_i(e_j): e^(s) e_j e^(r)     T_i(f_j): f^(r) f_j f^(s)
                    // T_i^{-1}(e_j): e^(r) e_j e^(s)   T_i^{-1}(f_j): f^(s) f_j f^(r)
                    let (left, right) = match (positive, inverse) {
                        (true, false) | (false, true) => (s, r),
                        (false, false) | (true, true) => (r, s),
                    };
                    let t = self.product(&[
                        self.divided_power(i, left, positive),
                        xj.clone(),
                        self.divided_power(i, right, positive),
                    ]);
                    acc = &acc + &t.scale(&c);
                }
                acc
            }
        }
    }

    fn braid_mono(&self, i: usize, inverse: bool, m: &TriMono) -> Element {
        let mut acc = self.one();
        for &b in &m.f {
            acc = self.mul(&acc, &self.braid_generator(i, inverse, &Letter::F(b)));
        }
        acc = self.mul(&acc, &self.braid_generator(i, inverse, &Letter::K(m.k.clone())));
        for &a in &m.e {
            acc = self.mul(&acc, &self.braid_generator(i, inverse, &Letter::E(a)));
        }
        acc
    }

    fn braid(&self, i: usize, inverse: bool, x: &Element) -> Element {
        let mut acc = Element::zero();
        for (m, c) in x.terms() {
            for (m2, c2) in self.braid_mono(i, inverse, m).into_terms() {
                acc.add_term(m2, c * &c2);
            }
        }
        acc
    }

    /// Lusztig's automorphism `T_i`, applied as a substitution.
    pub fn braid_t(&self, i: usize, x: &Element) -> Element {
        self.braid(i, false, x)
    }

    /// `T_i^{-1}`, applied as a substitution.
    pub fn braid_t_inv(&self, i: usize, x: &Element) -> Element {
        self.braid(i, true, x)
    }

    /// `T_i` on a single triangular monomial.
    pub fn braid_t_mono(&self, i: usize, m: &TriMono) -> Element {
        self.braid_mono(i, false, m)
    }

    pub fn braid_t_inv_mono(&self, i: usize, m: &TriMono) -> Element {
        self.braid_mono(i, true, m)
    }

    /// `T_{w_1} ... T_{w_n}(x)`.
    pub fn braid_word(&self, w: &[usize], x: &Element) -> Element {
        w.iter().rev().fold(x.clone(), |acc, &i| self.braid_t(i, &acc))
    }

    /// PBW root vectors `T_{i_1} ... T_{i_{k-1}}(x_{i_k})` along a reduced word,
    /// with `x = e` or `x = f`.
    pub fn root_vectors(&self, reduced: &[usize], positive: bool) -> Vec<Element> {
        (0..reduced.len())
            .map(|k| {
                let g = if positive { self.e(reduced[k]) } else { self.f(reduced[k]) };
                self.braid_word(&reduced[..k], &g)
            })
            .collect()
    }
}
