use super::element::{word_weight, Element, Tensor, TriMono, Word};
use super::Algebra;
use crate::cartan::RootVector;
use crate::scalars::Scalar;

impl Algebra {
    /// `Delta(F k_gamma E)` with `Delta(e_i) = e_i (x) 1 + k_i (x) e_i`,
    /// `Delta(f_i) = f_i (x) k_i^{-1} + 1 (x) f_i`, `Delta(k) = k (x) k`.
    /// Every term is already triangular in both factors.
    pub fn coproduct_mono(&self, m: &TriMono) -> Vec<(TriMono, TriMono, Scalar)> {
        let d = &self.datum;
        let n = self.rank();
        let mut f_parts = Vec::with_capacity(1 << m.f.len());
        for mask in 0u32..(1 << m.f.len()) {
            // bit set: letter goes left as f (x) k^{-1}
            let mut left = Word::new();
            let mut right = Word::new();
            let mut left_wt = RootVector::zero(n);
            let mut x = 0;
            for (p, &b) in m.f.iter().enumerate() {
                if mask >> p & 1 == 1 {
                    left.push(b);
                    left_wt = left_wt.add_simple(b as usize, 1);
                } else {
                    right.push(b);
                    x += d.form_with_simple(b as usize, &left_wt);
                }
            }
            f_parts.push((left, right, left_wt, x));
        }
        let mut e_parts = Vec::with_capacity(1 << m.e.len());
        for mask in 0u32..(1 << m.e.len()) {
            // bit set: letter goes right as k (x) e
            let mut left = Word::new();
            let mut right = Word::new();
            let mut right_wt = RootVector::zero(n);
            let mut x = 0;
            for (p, &a) in m.e.iter().enumerate() {
                if mask >> p & 1 == 1 {
                    right.push(a);
                    right_wt = right_wt.add_simple(a as usize, 1);
                    let left_so_far = word_weight(&left, n);
                    x -= d.form_with_simple(a as usize, &left_so_far);
                } else {
                    left.push(a);
                }
            }
            e_parts.push((left, right, right_wt, x));
        }
        let mut out = Vec::with_capacity(f_parts.len() * e_parts.len());
        for (fl, fr, fl_wt, x1) in &f_parts {
            for (el, er, er_wt, x2) in &e_parts {
                let lk = &m.k + er_wt;
                let rk = &m.k - fl_wt;
                out.push((
                    TriMono::new(fl.clone(), lk, el.clone()),
                    TriMono::new(fr.clone(), rk, er.clone()),
                    Scalar::q_pow(x1 + x2),
                ));
            }
        }
        out
    }

    pub fn coproduct(&self, x: &Element) -> Tensor {
        let mut t = Tensor::zero(2);
        for (m, c) in x.terms() {
            for (a, b, s) in self.coproduct_mono(m) {
                t.add_term(vec![a, b], c * &s);
            }
        }
        t
    }

    /// Applies `Delta` to factor `slot`, raising the arity by one.
    pub fn coproduct_slot(&self, t: &Tensor, slot: usize) -> Tensor {
        let mut out = Tensor::zero(t.arity() + 1);
        for (key, c) in t.terms() {
            for (a, b, s) in self.coproduct_mono(&key[slot]) {
                let mut k = Vec::with_capacity(key.len() + 1);
                k.extend_from_slice(&key[..slot]);
                k.push(a);
                k.push(b);
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(k, c * &s);
            }
        }
        out
    }

    /// `Delta_m(x)` in `U^{(x)(m+1)}`; `Delta_0 = id`.
    pub fn iterated_coproduct(&self, x: &Element, m: usize) -> Tensor {
        let mut t = Tensor::zero(1);
        for (mono, c) in x.terms() {
            t.add_term(vec![mono.clone()], c.clone());
        }
        for _ in 0..m {
            t = self.coproduct_slot(&t, 0);
        }
        t
    }

    /// `S(F k_gamma E) = S(E) k_{-gamma} S(F)` with `S(e_i) = -k_i^{-1} e_i`,
    /// `S(f_i) = -f_i k_i`.
    pub fn antipode_mono(&self, m: &TriMono) -> Element {
        let n = self.rank();
        let mut acc = self.one();
        for &a in m.e.iter().rev() {
            let s = Element::term(
                TriMono::new(Word::new(), -&RootVector::simple(n, a as usize), Word::from_slice(&[a])),
                -Scalar::one(),
            );
            acc = self.mul(&acc, &s);
        }
        acc = self.mul(&acc, &self.k(-&m.k));
        for &b in m.f.iter().rev() {
            let s = Element::term(
                TriMono::new(Word::from_slice(&[b]), RootVector::simple(n, b as usize), Word::new()),
                -Scalar::one(),
            );
            acc = self.mul(&acc, &s);
        }
        acc
    }

    pub fn antipode(&self, x: &Element) -> Element {
        let mut acc = Element::zero();
        for (m, c) in x.terms() {
            for (m2, c2) in self.antipode_mono(m).into_terms() {
                acc.add_term(m2, c * &c2);
            }
        }
        acc
    }

    pub fn counit_mono(m: &TriMono) -> Scalar {
        if m.is_torus() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn counit(&self, x: &Element) -> Scalar {
        x.terms().filter(|(m, _)| m.is_torus()).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }

    /// `(F k_a E) k_b = q^{-(b, |E|)} F k_{a+b} E`.
    pub fn mono_times_torus(&self, m: &TriMono, b: &RootVector) -> (TriMono, i32) {
        let x = -self.datum.form(b, &m.e_weight());
        (TriMono::new(m.f.clone(), &m.k + b, m.e.clone()), x)
    }

    /// `k_b (F k_a E) = q^{-(b, |F|)} F k_{a+b} E`.
    pub fn torus_times_mono(&self, b: &RootVector, m: &TriMono) -> (TriMono, i32) {
        let x = -self.datum.form(b, &m.f_weight());
        (TriMono::new(m.f.clone(), &m.k + b, m.e.clone()), x)
    }

    /// `Phi(u (x) u') = q^{-(gamma, delta)} u k_{-delta} (x) u' k_{-gamma}` for
    /// `u` of weight `gamma`, `u'` of weight `delta`.
    pub fn phi_twist(&self, t: &Tensor) -> Tensor {
        self.phi_with_sign(t, -1)
    }

    /// `Phi^{-1}(u (x) u') = q^{(gamma, delta)} u k_delta (x) u' k_gamma`.
    pub fn phi_twist_inverse(&self, t: &Tensor) -> Tensor {
        self.phi_with_sign(t, 1)
    }

    fn phi_with_sign(&self, t: &Tensor, s: i32) -> Tensor {
        assert_eq!(t.arity(), 2, "Phi acts on 2-fold tensors");
        let mut out = Tensor::zero(2);
        for (key, c) in t.terms() {
            let g = key[0].weight();
            let dl = key[1].weight();
            let base = s * self.datum.form(&g, &dl);
            let (a, x1) = self.mono_times_torus(&key[0], &dl.scale(s));
            let (b, x2) = self.mono_times_torus(&key[1], &g.scale(s));
            out.add_term(vec![a, b], c.shift(base + x1 + x2));
        }
        out
    }

    /// Factorwise product in `U^{(x)n}`.
    pub fn tensor_mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.arity(), b.arity());
        let mut out = Tensor::zero(a.arity());
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let slots: Vec<Element> = ka.iter().zip(kb).map(|(x, y)| self.mul_mono(x, y)).collect();
                let p = Tensor::pure(&slots);
                let c = ca * cb;
                for (k, d) in p.terms() {
                    out.add_term(k.clone(), &c * d);
                }
            }
        }
        out
    }

    /// Sum of factorwise products, folding a tensor back into `U`:
    /// `x_1 (x) ... (x) x_n -> x_{order[0]} ... x_{order[n-1]}`.
    pub fn contract(&self, t: &Tensor, order: &[usize]) -> Element {
        let mut acc = Element::zero();
        for (k, c) in t.terms() {
            let mut x = Element::term(k[order[0]].clone(), c.clone());
            for &s in &order[1..] {
                x = self.mul(&x, &Element::mono(k[s].clone()));
            }
            acc = &acc + &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::word;
    use crate::cartan::CartanDatum;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::preset(name).unwrap())
    }

    fn tensor(a: &Algebra, x: &Element, y: &Element) -> Tensor {
        let _ = a;
        Tensor::pure(&[x.clone(), y.clone()])
    }

    #[test]
    fn generator_coproducts() {
        let a = alg("A2");
        let g = RootVector(vec![1, -2]);
        assert_eq!(a.coproduct(&a.k(g.clone())), tensor(&a, &a.k(g.clone()), &a.k(g)));
        let expected = &tensor(&a, &a.e(0), &a.one()) + &tensor(&a, &a.k(a.simple(0)), &a.e(0));
        assert_eq!(a.coproduct(&a.e(0)), expected);
        let expected = &tensor(&a, &a.f(1), &a.k(-&a.simple(1))) + &tensor(&a, &a.one(), &a.f(1));
        assert_eq!(a.coproduct(&a.f(1)), expected);
    }

    #[test]
    fn coproduct_is_multiplicative() {
        for name in ["A2", "B2"] {
            let a = alg(name);
            let gens = [a.e(0), a.f(1), a.e(1), a.f(0), a.k(RootVector(vec![1, 1]))];
            for x in &gens {
                for y in &gens {
                    let lhs = a.coproduct(&a.mul(x, y));
                    let rhs = a.tensor_mul(&a.coproduct(x), &a.coproduct(y));
                    assert_eq!(lhs, rhs, "{name} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn antipode_examples() {
        let a = alg("A2");
        let g = RootVector(vec![2, -1]);
        assert_eq!(a.antipode(&a.k(g.clone())), a.k(-&g));
        assert!(a.counit(&a.k(g)).is_one());
        let lhs = a.antipode(&a.mul(&a.e(0), &a.f(1)));
        let s_f2 = a.mul(&a.f(1), &a.k(a.simple(1))).scale(&-Scalar::one());
        let s_e1 = a.mul(&a.k(-&a.simple(0)), &a.e(0)).scale(&-Scalar::one());
        assert_eq!(lhs, a.mul(&s_f2, &s_e1));
    }

    #[test]
    fn phi_examples() {
        let a = alg("A1");
        let one = Tensor::pure(&[a.one(), a.one()]);
        assert_eq!(a.phi_twist(&one), one);
        let t = Tensor::pure(&[a.e(0), a.f(0)]);
        let ek = a.mul(&a.e(0), &a.k(RootVector(vec![1])));
        let fk = a.mul(&a.f(0), &a.k(RootVector(vec![-1])));
        let expected = Tensor::pure(&[ek, fk]).scale(&Scalar::q_pow(2));
        assert_eq!(a.phi_twist(&t), expected);
        let kk = Tensor::pure(&[a.k(RootVector(vec![3])), a.k(RootVector(vec![-1]))]);
        assert_eq!(a.phi_twist(&kk), kk);
        let mixed = Tensor::pure(&[Element::mono(TriMono::new(word(&[0]), RootVector(vec![1]), word(&[0, 0]))), a.f(0)]);
        assert_eq!(a.phi_twist_inverse(&a.phi_twist(&mixed)), mixed);
    }

    #[test]
    fn iterated_coproduct_arity() {
        let a = alg("A1");
        let t = a.iterated_coproduct(&a.e(0), 2);
        assert_eq!(t.arity(), 3);
        assert_eq!(t.len(), 3);
        assert_eq!(a.iterated_coproduct(&a.e(0), 0).arity(), 1);
    }
}
