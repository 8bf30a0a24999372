use super::{ReprError, WeightModule};
use crate::algebra::{Algebra, Element, Tensor};
use crate::cartan::RootVector;
use crate::pairing::{Pairing, PairingError};
use crate::scalars::{exp_coeff, Matrix, Scalar};

/// `exp_x(m) = sum_n x^{n(n-1)/2} / [n]!_x m^n` at `x = q^s`, for nilpotent `m`.
pub fn exp_series(s: i32, m: &Matrix) -> Matrix {
    let dim = m.rows();
    let mut out = Matrix::identity(dim);
    let mut p = Matrix::identity(dim);
    for n in 1..=dim as u32 {
        p = p.mul(m);
        if p.is_zero() {
            return out;
        }
        out = out.add(&p.scale(&exp_coeff(n, s)));
    }
    assert!(p.mul(m).is_zero(), "exponential of a non-nilpotent operator");
    out
}

fn qi(v: &WeightModule, i: usize, n: i32) -> Scalar {
    Scalar::q_pow(v.datum().d(i) * n)
}

fn k_power(v: &WeightModule, i: usize, n: i32) -> Matrix {
    v.torus(&RootVector::simple(v.datum().rank(), i).scale(n))
}

/// The three exponents of a factorization of `sigma_i(t)`, as operators.
fn sigma_factors(v: &WeightModule, i: usize, t: &Scalar, form: SigmaForm) -> Result<[Matrix; 3], ReprError> {
    let tinv = t.inv().ok_or(ReprError::ZeroParameter)?;
    let minus_tinv = -&tinv;
    let e = |c: Scalar, k: i32| k_power(v, i, k).mul(v.e(i)).scale(&c);
    let f = |c: Scalar, k: i32| k_power(v, i, k).mul(v.f(i)).scale(&c);
    Ok(match form {
        SigmaForm::Raising(n) => [
            e(t * &qi(v, i, -n - 1), n + 1),
            f(&minus_tinv * &qi(v, i, -n), -n),
            e(t * &qi(v, i, -n + 1), n - 1),
        ],
        SigmaForm::Lowering(n) => [
            f(&minus_tinv * &qi(v, i, -n - 1), -n - 1),
            e(t * &qi(v, i, -n), n),
            f(&minus_tinv * &qi(v, i, -n + 1), -n + 1),
        ],
    })
}

/// Which of the two families of three-term factorizations of `sigma_i(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaForm {
    /// `exp(t q_i^{-n-1} k_i^{n+1} e_i) exp(-t^{-1} q_i^{-n} k_i^{-n} f_i) exp(t q_i^{-n+1} k_i^{n-1} e_i)`
    Raising(i32),
    /// `exp(-t^{-1} q_i^{-n-1} k_i^{-n-1} f_i) exp(t q_i^{-n} k_i^n e_i) exp(-t^{-1} q_i^{-n+1} k_i^{-n+1} f_i)`
    Lowering(i32),
}

/// A factorization of `sigma_i(t)` evaluated on `V`.
pub fn sigma_factored(v: &WeightModule, i: usize, t: &Scalar, form: SigmaForm) -> Result<Matrix, ReprError> {
    let di = v.datum().d(i);
    let [a, b, c] = sigma_factors(v, i, t, form)?;
    Ok(exp_series(di, &a).mul(&exp_series(di, &b)).mul(&exp_series(di, &c)))
}

/// `sigma_i(t) = exp_{q_i}(t q_i^{-1} k_i e_i) exp_{q_i}(-t^{-1} f_i) exp_{q_i}(t q_i k_i^{-1} e_i)`.
pub fn sigma(v: &WeightModule, i: usize, t: &Scalar) -> Result<Matrix, ReprError> {
    sigma_factored(v, i, t, SigmaForm::Raising(0))
}

/// `sigma_i(t)^{-1}`, using `exp_x(y)^{-1} = exp_{x^{-1}}(-y)`.
fn sigma_inverse(v: &WeightModule, i: usize, t: &Scalar) -> Result<Matrix, ReprError> {
    let di = v.datum().d(i);
    let [a, b, c] = sigma_factors(v, i, t, SigmaForm::Raising(0))?;
    let inv = |m: &Matrix| exp_series(-di, &m.scale(&-Scalar::one()));
    Ok(inv(&c).mul(&inv(&b)).mul(&inv(&a)))
}

/// `T_i = sigma_i(-1)^{-1} q_i^{h_i(h_i+1)/2}` on `V`.
pub fn lusztig_t(v: &WeightModule, i: usize) -> Matrix {
    sigma_inverse(v, i, &-Scalar::one()).expect("t = -1").mul(&v.quadratic_diagonal(i, false))
}

/// `T_i^{-1} = q_i^{-h_i(h_i+1)/2} sigma_i(-1)`.
pub fn lusztig_t_inv(v: &WeightModule, i: usize) -> Matrix {
    v.quadratic_diagonal(i, true).mul(&sigma(v, i, &-Scalar::one()).expect("t = -1"))
}

fn power_pair(alg: &Algebra, i: usize, n: u32, e_first: bool) -> Tensor {
    let r = alg.rank();
    let w = vec![i as u8; n as usize];
    let (e, f) = (Element::e_word(&w, r), Element::f_word(&w, r));
    if e_first {
        Tensor::pure(&[e, f])
    } else {
        Tensor::pure(&[f, e])
    }
}

fn series(alg: &Algebra, i: usize, terms: u32, s: i32, base: Scalar, e_first: bool) -> Tensor {
    let mut t = Tensor::zero(2);
    for n in 0..=terms {
        let c = &exp_coeff(n, s) * &base.pow(n as i32);
        t = &t + &power_pair(alg, i, n, e_first).scale(&c);
    }
    t
}

fn q_diff(alg: &Algebra, i: usize) -> Scalar {
    let di = alg.datum().d(i);
    &Scalar::q_pow(di) - &Scalar::q_pow(-di)
}

/// `Z_i = exp_{q_i}((q_i - q_i^{-1}) f_i (x) e_i)`, truncated after `terms`.
pub fn z_series(alg: &Algebra, i: usize, terms: u32) -> Tensor {
    series(alg, i, terms, alg.datum().d(i), q_diff(alg, i), false)
}

/// `R_i = exp_{q_i^{-1}}(-(q_i - q_i^{-1}) e_i (x) f_i)`, truncated after `terms`.
pub fn r_series(alg: &Algebra, i: usize, terms: u32) -> Tensor {
    series(alg, i, terms, -alg.datum().d(i), -q_diff(alg, i), true)
}

/// `R_i^{-1} = exp_{q_i}((q_i - q_i^{-1}) e_i (x) f_i)`, truncated after `terms`.
pub fn r_inv_series(alg: &Algebra, i: usize, terms: u32) -> Tensor {
    series(alg, i, terms, alg.datum().d(i), q_diff(alg, i), true)
}

/// The flip `V (x) V' -> V' (x) V`.
pub fn swap_operator(v: &WeightModule, w: &WeightModule) -> Matrix {
    let (a, b) = (v.dim(), w.dim());
    let mut p = Matrix::zeros(a * b, a * b);
    for x in 0..a {
        for y in 0..b {
            p.set(y * a + x, x * b + y, Scalar::one());
        }
    }
    p
}

fn weights_below(bound: &RootVector) -> Vec<RootVector> {
    let mut out = vec![Vec::new()];
    for &c in &bound.0 {
        out = out.into_iter().flat_map(|p: Vec<i32>| (0..=c.max(0)).map(move |k| [p.clone(), vec![k]].concat())).collect();
    }
    out.into_iter().map(RootVector).collect()
}

fn theta_sum(
    v: &WeightModule,
    w: &WeightModule,
    part: impl Fn(&RootVector) -> Result<Tensor, PairingError>,
) -> Result<Matrix, PairingError> {
    let (dv, dw) = (v.diameter(), w.diameter());
    let bound = RootVector(dv.0.iter().zip(&dw.0).map(|(a, b)| *a.min(b)).collect());
    let mut out = Matrix::zeros(v.dim() * w.dim(), v.dim() * w.dim());
    for g in weights_below(&bound) {
        let t = part(&g)?;
        if !t.is_zero() {
            out = out.add(&WeightModule::act_tensor(&[v, w], &t));
        }
    }
    Ok(out)
}

/// `Theta = sum_gamma Theta_gamma` on `V (x) V'`, over the weights that can act.
pub fn theta_op(p: &Pairing, v: &WeightModule, w: &WeightModule) -> Result<Matrix, PairingError> {
    theta_sum(v, w, |g| p.theta(g))
}

/// `Theta' = sum_gamma Theta'_gamma` on `V (x) V'`.
pub fn theta_prime_op(p: &Pairing, v: &WeightModule, w: &WeightModule, i: usize) -> Result<Matrix, PairingError> {
    theta_sum(v, w, |g| p.theta_prime(g, i))
}

/// `Theta'' = sum_gamma Theta''_gamma` on `V (x) V'`.
pub fn theta_dprime_op(p: &Pairing, v: &WeightModule, w: &WeightModule, i: usize) -> Result<Matrix, PairingError> {
    theta_sum(v, w, |g| p.theta_dprime(g, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, Weight};
    use crate::repr::module_pairs;
    use std::sync::Arc;

    fn setup(name: &str) -> (CartanDatum, Algebra) {
        let d = CartanDatum::preset(name).unwrap();
        (d.clone(), Algebra::new(d))
    }

    fn q(e: i32) -> Scalar {
        Scalar::q_pow(e)
    }

    #[test]
    fn sigma_on_two_dimensional_module() {
        let (d, _) = setup("A1");
        let v = WeightModule::highest(&d, &Weight(vec![1])).unwrap();
        let s = sigma(&v, 0, &Scalar::one()).unwrap();
        // swaps the two weight lines
        assert!(s.get(0, 0).is_zero() && s.get(1, 1).is_zero());
        assert!(!s.get(0, 1).is_zero() && !s.get(1, 0).is_zero());
        let t = lusztig_t(&v, 0);
        let expected = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![-q(1), Scalar::zero()]]);
        assert_eq!(t, expected);
        assert_eq!(t.mul(&lusztig_t_inv(&v, 0)), Matrix::identity(2));
        let triv = WeightModule::trivial(&d);
        assert_eq!(sigma(&triv, 0, &q(3)).unwrap(), Matrix::identity(1));
        assert_eq!(sigma(&v, 0, &Scalar::zero()), Err(ReprError::ZeroParameter));
    }

    #[test]
    fn sigma_permutes_weight_spaces() {
        let (d, _) = setup("A2");
        let v = WeightModule::highest(&d, &Weight(vec![1, 0])).unwrap();
        for i in 0..2 {
            let s = sigma(&v, i, &q(-1)).unwrap();
            for (b, mu) in v.weights().iter().enumerate() {
                let target = d.reflect_weight(i, mu);
                for a in 0..v.dim() {
                    if !s.get(a, b).is_zero() {
                        assert_eq!(v.weights()[a], target);
                    }
                }
            }
        }
    }

    #[test]
    fn t_intertwines_braid_automorphism() {
        for name in ["A1", "A2", "B2"] {
            let (d, alg) = setup(name);
            for v in crate::repr::module_family(&d, 2).unwrap() {
                for i in 0..d.rank() {
                    let t = lusztig_t(&v, i);
                    let ti = lusztig_t_inv(&v, i);
                    assert_eq!(t.mul(&ti), Matrix::identity(v.dim()));
                    for j in 0..d.rank() {
                        for u in [alg.e(j), alg.f(j), alg.k(RootVector::simple(d.rank(), j))] {
                            let lhs = t.mul(&v.act(&u)).mul(&ti);
                            assert_eq!(lhs, v.act(&alg.braid_t(i, &u)), "{name} i={i} u={u}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn z_and_r_on_small_pair() {
        let (d, alg) = setup("A1");
        let v = WeightModule::highest(&d, &Weight(vec![1])).unwrap();
        let z = WeightModule::act_tensor(&[&v, &v], &z_series(&alg, 0, 2));
        let off: Vec<_> = (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).filter(|&(a, b)| a != b && !z.get(a, b).is_zero()).collect();
        assert_eq!(off.len(), 1);
        assert_eq!(z.get(off[0].0, off[0].1), &(&q(1) - &q(-1)));
        for (v, w) in module_pairs(&d).unwrap() {
            let n = v.dim().max(w.dim()) as u32;
            let z = WeightModule::act_tensor(&[&v, &w], &z_series(&alg, 0, n));
            let r = WeightModule::act_tensor(&[&v, &w], &r_series(&alg, 0, n));
            let ri = WeightModule::act_tensor(&[&v, &w], &r_inv_series(&alg, 0, n));
            let pr = WeightModule::act_tensor(&[&v, &w], &r_series(&alg, 0, n).swap());
            assert_eq!(r.mul(&ri), Matrix::identity(v.dim() * w.dim()));
            assert_eq!(z.mul(&pr), Matrix::identity(v.dim() * w.dim()));
            let r_wv = WeightModule::act_tensor(&[&w, &v], &r_series(&alg, 0, n));
            let conj = swap_operator(&w, &v).mul(&r_wv).mul(&swap_operator(&v, &w));
            assert_eq!(conj, pr);
        }
    }

    #[test]
    fn theta_on_small_pairs() {
        let (d, alg) = setup("A1");
        let p = Pairing::new(Arc::new(alg));
        let triv = WeightModule::trivial(&d);
        assert_eq!(theta_op(&p, &triv, &triv).unwrap(), Matrix::identity(1));
        let v = WeightModule::highest(&d, &Weight(vec![1])).unwrap();
        let th = theta_op(&p, &v, &v).unwrap();
        let ef = v.e(0).kron(v.f(0)).scale(&-&(&q(1) - &q(-1)));
        assert_eq!(th, Matrix::identity(4).add(&ef));
    }
}
