use std::sync::Arc;

use proptest::prelude::*;
use qpair::algebra::{Algebra, Element};
use qpair::cartan::CartanDatum;
use qpair::harness::Sampler;
use qpair::pairing::Pairing;
use qpair::repr::{module_family, WeightModule};

const TYPES: [&str; 4] = ["A2", "B2", "G2", "A1xA1"];

fn setup(t: usize) -> Pairing {
    Pairing::new(Arc::new(Algebra::new(CartanDatum::preset(TYPES[t]).unwrap())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn braid_automorphisms_are_mutually_inverse(t in 0..TYPES.len(), seed in any::<u64>()) {
        let p = setup(t);
        let a = p.algebra();
        let mut s = Sampler::new(seed, a.rank());
        let x = s.mixed(a, 3, 2);
        let i = s.index();
        prop_assert!(p.equal(&a.braid_t(i, &a.braid_t_inv(i, &x)), &x));
        prop_assert!(p.equal(&a.braid_t_inv(i, &a.braid_t(i, &x)), &x));
    }

    #[test]
    fn braid_automorphism_is_multiplicative(t in 0..TYPES.len(), seed in any::<u64>()) {
        let p = setup(t);
        let a = p.algebra();
        let mut s = Sampler::new(seed, a.rank());
        let (x, y) = (s.mixed(a, 2, 2), s.mixed(a, 2, 2));
        let i = s.index();
        prop_assert!(p.equal(&a.braid_t(i, &a.mul(&x, &y)), &a.mul(&a.braid_t(i, &x), &a.braid_t(i, &y))));
    }

    #[test]
    fn pairing_is_bilinear_and_graded(t in 0..TYPES.len(), seed in any::<u64>()) {
        let p = setup(t);
        let a = p.algebra();
        let mut s = Sampler::new(seed, a.rank());
        let g = s.weight(4);
        let (x1, x2, y) = (s.plus_of_weight(&g, 2), s.plus_of_weight(&g, 2), s.minus_of_weight(&g, 2));
        let c = s.coeff();
        let lhs = p.tau(&(&x1 + &x2.scale(&c)), &y).unwrap();
        let rhs = &p.tau(&x1, &y).unwrap() + &(&c * &p.tau(&x2, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
        let h = s.weight(4);
        if h != g {
            prop_assert!(p.tau(&x1, &s.minus_of_weight(&h, 2)).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_does_not_depend_on_rewrite_order(t in 0..TYPES.len(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let p = setup(t);
        let a = p.algebra();
        let mut s = Sampler::new(seed, a.rank());
        let letters: Vec<_> = (0..5)
            .map(|_| match s.below(3) {
                0 => qpair::algebra::Letter::E(s.index() as u8),
                1 => qpair::algebra::Letter::F(s.index() as u8),
                _ => qpair::algebra::Letter::K(s.weight(1)),
            })
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(a.normal_form(&letters), a.normal_form_randomized(&letters, &mut rng));
    }
}

#[test]
fn module_actions_respect_products() {
    for name in ["A2", "B2"] {
        let d = CartanDatum::preset(name).unwrap();
        let a = Algebra::new(d.clone());
        let mods: Vec<WeightModule> = module_family(&d, 2).unwrap();
        let mut s = Sampler::new(7, a.rank());
        for _ in 0..10 {
            let (x, y) = (s.mixed(&a, 3, 2), s.mixed(&a, 3, 2));
            let xy: Element = a.mul(&x, &y);
            for v in &mods {
                assert_eq!(v.act(&xy), v.act(&x).mul(&v.act(&y)));
            }
        }
    }
}
