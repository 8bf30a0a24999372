use super::{Direction, GradedSubspace, Pairing, PairingError, Side};
use crate::algebra::{Element, Tensor};
use crate::cartan::RootVector;
use crate::scalars::{Matrix, Scalar};

impl Pairing {
    /// The canonical element `Theta_gamma = sum_j x_j (x) y_j` of `tau` on
    /// `U^+_gamma x U^-_{-gamma}`, with `tau(x_j, y_k) = delta_jk`.
    pub fn theta(&self, g: &RootVector) -> Result<Tensor, PairingError> {
        let b = self.gram_block(g)?;
        let inv = b.inverse();
        let n = self.rank();
        let mut t = Tensor::zero(2);
        for (ai, e) in b.pivot_ewords().enumerate() {
            for (bi, f) in b.pivot_fwords().enumerate() {
                let c = inv.get(bi, ai);
                if c.is_zero() {
                    continue;
                }
                let x = Element::e_word(e, n);
                let y = Element::f_word(f, n);
                for (k, v) in Tensor::pure(&[x, y]).terms() {
                    t.add_term(k.clone(), v * c);
                }
            }
        }
        Ok(t)
    }

    /// Canonical element of `tau` restricted to the pair of subspaces.
    pub fn restricted_theta(&self, xs: &GradedSubspace, ys: &GradedSubspace) -> Result<Tensor, PairingError> {
        let g = &xs.weight;
        if xs.dim() != ys.dim() {
            return Err(PairingError::Singular(g.clone()));
        }
        let r = xs.dim();
        if r == 0 {
            return Ok(Tensor::zero(2));
        }
        let mut gm = Matrix::zeros(r, r);
        for (j, x) in xs.basis.iter().enumerate() {
            for (k, y) in ys.basis.iter().enumerate() {
                gm.set(j, k, self.tau_coords(g, x, y));
            }
        }
        let inv = gm.inverse().ok_or_else(|| PairingError::Singular(g.clone()))?;
        let xe = self.subspace_elements(xs);
        let ye = self.subspace_elements(ys);
        let mut t = Tensor::zero(2);
        for j in 0..r {
            for k in 0..r {
                let c = inv.get(k, j);
                if c.is_zero() {
                    continue;
                }
                for (key, v) in Tensor::pure(&[xe[j].clone(), ye[k].clone()]).terms() {
                    t.add_term(key.clone(), v * c);
                }
            }
        }
        Ok(t)
    }

    /// Canonical element on `(U^+_gamma cap T_i(U^+)) x (U^-_{-gamma} cap T_i(U^-))`.
    pub fn theta_prime(&self, g: &RootVector, i: usize) -> Result<Tensor, PairingError> {
        let xs = self.intersection_subspace(g, i, Side::Plus, Direction::Forward);
        let ys = self.intersection_subspace(g, i, Side::Minus, Direction::Forward);
        self.restricted_theta(&xs, &ys)
    }

    /// Canonical element on `(U^+_gamma cap T_i^{-1}(U^+)) x (U^-_{-gamma} cap T_i^{-1}(U^-))`.
    pub fn theta_dprime(&self, g: &RootVector, i: usize) -> Result<Tensor, PairingError> {
        let xs = self.intersection_subspace(g, i, Side::Plus, Direction::Inverse);
        let ys = self.intersection_subspace(g, i, Side::Minus, Direction::Inverse);
        self.restricted_theta(&xs, &ys)
    }

    /// Dual pairs check helper: `(tau (x) tau)`-contraction of a 2-fold tensor
    /// against `(e-word, f-word)`: `sum c tau(E, y) tau(x, F)`.
    pub fn contract_theta(&self, t: &Tensor, e: &[u8], f: &[u8]) -> Scalar {
        let n = self.rank();
        let ew = Element::e_word(e, n);
        let fw = Element::f_word(f, n);
        let mut acc = Scalar::zero();
        for (k, c) in t.terms() {
            let left = self.tau(&Element::mono(k[0].clone()), &fw).unwrap_or_default();
            if left.is_zero() {
                continue;
            }
            let right = self.tau(&ew, &Element::mono(k[1].clone())).unwrap_or_default();
            acc = &acc + &(&(c * &left) * &right);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::cartan::CartanDatum;
    use std::sync::Arc;

    fn pairing(name: &str) -> Pairing {
        Pairing::new(Arc::new(Algebra::new(CartanDatum::preset(name).unwrap())))
    }

    #[test]
    fn theta_small() {
        let p = pairing("A2");
        let a = p.algebra();
        let t0 = p.theta(&RootVector(vec![0, 0])).unwrap();
        assert_eq!(t0, Tensor::pure(&[a.one(), a.one()]));
        let t1 = p.theta(&RootVector(vec![1, 0])).unwrap();
        let c = -&(&Scalar::q_pow(1) - &Scalar::q_pow(-1));
        assert_eq!(t1, Tensor::pure(&[a.e(0), a.f(0)]).scale(&c));
        assert_eq!(p.theta(&RootVector(vec![1, 1])).unwrap().len(), 4);
    }

    #[test]
    fn theta_reproduces_gram_entries() {
        // sum_j tau(E, y_j) tau(x_j, F) = tau(E, F)
        let p = pairing("B2");
        let g = RootVector(vec![1, 2]);
        let t = p.theta(&g).unwrap();
        for e in super::super::words_of_weight(&g) {
            for f in super::super::words_of_weight(&g) {
                assert_eq!(p.contract_theta(&t, &e, &f), p.tau_words(&e, &f));
            }
        }
    }

    #[test]
    fn restricted_thetas_exist() {
        let p = pairing("G2");
        for g in p.algebra().datum().weights_up_to_height(4) {
            for i in 0..2 {
                p.theta_prime(&g, i).unwrap();
                p.theta_dprime(&g, i).unwrap();
            }
        }
    }
}
