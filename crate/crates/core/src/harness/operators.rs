use super::{Context, Tally};
use crate::algebra::{Element, Tensor};
use crate::cartan::RootVector;
use crate::pairing::{Direction, Side};
use crate::repr::{
    lusztig_t, lusztig_t_inv, r_inv_series, r_series, sigma, sigma_factored, theta_dprime_op, theta_op, theta_prime_op,
    z_series, SigmaForm, WeightModule,
};
use crate::scalars::{Matrix, Scalar};

fn series_len(v: &WeightModule, w: &WeightModule) -> u32 {
    v.dim().max(w.dim()) as u32
}

fn pair_name(v: &WeightModule, w: &WeightModule) -> String {
    format!("V{} (x) V{}", v.weights()[0], w.weights()[0])
}

fn generators(ctx: &Context) -> Vec<Element> {
    let a = &*ctx.alg;
    (0..ctx.rank()).flat_map(|j| [a.e(j), a.f(j), a.k(RootVector::simple(ctx.rank(), j))]).collect()
}

fn with_pairs(ctx: &Context, f: impl Fn(&WeightModule, &WeightModule) -> Tally + Sync + Send) -> Tally {
    match ctx.pairs() {
        Ok(pairs) => Tally::merge_all(ctx.map(pairs, |(v, w)| f(v, w))),
        Err(e) => {
            let mut t = Tally::default();
            t.fail(format!("module construction: {e}"));
            t
        }
    }
}

fn with_modules(ctx: &Context, f: impl Fn(&WeightModule) -> Tally + Sync + Send) -> Tally {
    match ctx.modules() {
        Ok(mods) => Tally::merge_all(ctx.map(mods, f)),
        Err(e) => {
            let mut t = Tally::default();
            t.fail(format!("module construction: {e}"));
            t
        }
    }
}

pub fn prop_t(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    with_pairs(ctx, |v, w| {
        let mut t = Tally::default();
        let vw = v.tensor(w);
        let n = series_len(v, w);
        for i in 0..ctx.rank() {
            let act = |x: &Tensor| WeightModule::act_tensor(&[v, w], x);
            let whole = lusztig_t(&vw, i);
            let tt = lusztig_t(v, i).kron(&lusztig_t(w, i));
            let z = act(&z_series(a, i, n));
            let r_inv = act(&a.phi_twist_inverse(&r_inv_series(a, i, n)));
            let name = pair_name(v, w);
            t.record(whole == tt.mul(&z), || format!("T_{} != (T (x) T) Z on {name}", i + 1));
            t.record(whole == r_inv.mul(&tt), || format!("T_{} != Phi^-1(R^-1) (T (x) T) on {name}", i + 1));
            let pr = act(&r_series(a, i, n).swap());
            t.record(z.mul(&pr) == Matrix::identity(vw.dim()), || format!("Z_{} P(R_{}) != 1 on {name}", i + 1, i + 1));
        }
        t
    })
}

pub fn t1_t2(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let mut us = generators(ctx);
    let mut s = ctx.sampler(0);
    for _ in 0..2 {
        us.push(s.mixed(a, 2, 2));
    }
    with_pairs(ctx, |v, w| {
        let mut t = Tally::default();
        let n = series_len(v, w);
        let act = |x: &Tensor| WeightModule::act_tensor(&[v, w], x);
        for i in 0..ctx.rank() {
            let z = act(&z_series(a, i, n));
            let Some(z_inv) = z.inverse() else {
                t.fail(format!("Z_{} is singular on {}", i + 1, pair_name(v, w)));
                return t;
            };
            let r_inv = act(&a.phi_twist_inverse(&r_inv_series(a, i, n)));
            let r = act(&a.phi_twist_inverse(&r_series(a, i, n)));
            for u in &us {
                let du = a.coproduct(u);
                let lhs = act(&a.coproduct(&a.braid_t_inv(i, u)));
                let rhs = z_inv.mul(&act(&du.map_all(|m| a.braid_t_inv_mono(i, m)))).mul(&z);
                t.record(lhs == rhs, || format!("Delta(T_{}^-1(u)) for u = {u} on {}", i + 1, pair_name(v, w)));
                let lhs = act(&a.coproduct(&a.braid_t(i, u)));
                let rhs = r_inv.mul(&act(&du.map_all(|m| a.braid_t_mono(i, m)))).mul(&r);
                t.record(lhs == rhs, || format!("Delta(T_{}(u)) for u = {u} on {}", i + 1, pair_name(v, w)));
            }
        }
        t
    })
}

pub fn prop_r(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let us = generators(ctx);
    let p = &ctx.pairing;
    with_pairs(ctx, |v, w| {
        let mut t = Tally::default();
        let theta = match theta_op(p, v, w) {
            Ok(m) => m,
            Err(e) => {
                t.fail(e.to_string());
                return t;
            }
        };
        let act = |x: &Tensor| WeightModule::act_tensor(&[v, w], x);
        for u in &us {
            let du = a.coproduct(u);
            let lhs = act(&du.swap()).mul(&theta);
            let rhs = theta.mul(&act(&a.phi_twist(&du)));
            t.record(lhs == rhs, || format!("Delta'(u) Theta != Theta Phi(Delta u) for u = {u} on {}", pair_name(v, w)));
        }
        t
    })
}

pub fn rel_theta(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let p = &ctx.pairing;
    with_pairs(ctx, |v, w| {
        let mut t = Tally::default();
        let name = pair_name(v, w);
        let n = series_len(v, w);
        let theta = match theta_op(p, v, w) {
            Ok(m) => m,
            Err(e) => {
                t.fail(e.to_string());
                return t;
            }
        };
        for i in 0..ctx.rank() {
            let r = WeightModule::act_tensor(&[v, w], &r_series(a, i, n));
            match (theta_prime_op(p, v, w, i), theta_dprime_op(p, v, w, i)) {
                (Ok(th1), Ok(th2)) => {
                    t.record(theta == th1.mul(&r), || format!("Theta != Theta' R_{} on {name}", i + 1));
                    t.record(theta == r.mul(&th2), || format!("Theta != R_{} Theta'' on {name}", i + 1));
                    // (T_i (x) T_i)(u) acts as the conjugate of u by T_i (x) T_i
                    let tt = lusztig_t(v, i).kron(&lusztig_t(w, i));
                    let tt_inv = lusztig_t_inv(v, i).kron(&lusztig_t_inv(w, i));
                    let moved = tt.mul(&th2).mul(&tt_inv);
                    t.record(theta == moved.mul(&r), || format!("Theta != (T_{0} (x) T_{0})(Theta'') R_{0} on {name}", i + 1));
                }
                (Err(e), _) | (_, Err(e)) => t.fail(e.to_string()),
            }
        }
        t
    })
}

fn test_parameters() -> [Scalar; 4] {
    [Scalar::one(), -Scalar::one(), Scalar::q_pow(1), Scalar::q_pow(-1)]
}

fn alternating(i: usize, j: usize, m: usize) -> Vec<usize> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

pub fn braid_relations(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let d = a.datum();
    let n = ctx.rank();
    let pairs: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| d.coxeter_order(i, j).map(|m| (i, j, m)))
        .collect();
    let mut t = with_modules(ctx, |v| {
        let mut t = Tally::default();
        for &(i, j, m) in &pairs {
            let (wi, wj) = (alternating(i, j, m), alternating(j, i, m));
            for ti in test_parameters() {
                for tj in test_parameters() {
                    let op = |w: &[usize]| -> Matrix {
                        w.iter().fold(Matrix::identity(v.dim()), |acc, &k| {
                            acc.mul(&sigma(v, k, if k == i { &ti } else { &tj }).expect("nonzero parameter"))
                        })
                    };
                    t.record(op(&wi) == op(&wj), || {
                        format!("sigma braid relation ({}, {}) with t = ({ti}, {tj}) on V{}", i + 1, j + 1, v.weights()[0])
                    });
                }
            }
            let op = |w: &[usize]| w.iter().fold(Matrix::identity(v.dim()), |acc, &k| acc.mul(&lusztig_t(v, k)));
            t.record(op(&wi) == op(&wj), || format!("T braid relation ({}, {}) on V{}", i + 1, j + 1, v.weights()[0]));
        }
        t
    });
    let jobs: Vec<(usize, usize, usize, Element)> =
        pairs.iter().flat_map(|&(i, j, m)| generators(ctx).into_iter().map(move |u| (i, j, m, u))).collect();
    let parts = ctx.map(&jobs, |(i, j, m, u)| {
        let mut t = Tally::default();
        let l = a.braid_word(&alternating(*i, *j, *m), u);
        let r = a.braid_word(&alternating(*j, *i, *m), u);
        t.record(ctx.pairing.equal(&l, &r), || format!("braid relation ({}, {}) on U fails at u = {u}", i + 1, j + 1));
        t
    });
    t = t.merge(Tally::merge_all(parts));
    t
}

pub fn sigma_factorizations(ctx: &Context) -> Tally {
    let d = ctx.alg.datum().clone();
    with_modules(ctx, |v| {
        let mut t = Tally::default();
        for i in 0..ctx.rank() {
            for s in test_parameters() {
                let base = sigma(v, i, &s).expect("nonzero parameter");
                for n in -2..=2 {
                    for form in [SigmaForm::Raising(n), SigmaForm::Lowering(n)] {
                        let m = sigma_factored(v, i, &s, form).expect("nonzero parameter");
                        t.record(m == base, || format!("{form:?} differs from sigma_{}({s}) on V{}", i + 1, v.weights()[0]));
                    }
                }
                let mut ok = true;
                for (b, mu) in v.weights().iter().enumerate() {
                    let target = d.reflect_weight(i, mu);
                    for r in 0..v.dim() {
                        if !base.get(r, b).is_zero() && v.weights()[r] != target {
                            ok = false;
                        }
                    }
                }
                t.record(ok, || format!("sigma_{}({s}) does not map V_mu to V_(s mu) on V{}", i + 1, v.weights()[0]));
            }
        }
        t
    })
}

pub fn prop_pos_forward(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let p = &ctx.pairing;
    let mut us = Vec::new();
    let mut s = ctx.sampler(1);
    for _ in 0..ctx.cfg.samples.div_ceil(10).max(1) {
        us.push(s.nonneg(3, 3));
    }
    for g in a.datum().weights_up_to_height(ctx.cfg.max_height.min(3)) {
        for i in 0..ctx.rank() {
            for x in p.subspace_elements(&p.intersection_subspace(&g, i, Side::Plus, Direction::Forward)) {
                us.push(a.braid_t_inv(i, &x));
            }
        }
    }
    let pairs = match ctx.modules() {
        Ok(m) => m.iter().flat_map(|v| m.iter().map(move |w| (v, w))).collect::<Vec<_>>(),
        Err(e) => {
            let mut t = Tally::default();
            t.fail(format!("module construction: {e}"));
            return t;
        }
    };
    let parts = ctx.map(&pairs, |(v, w)| {
        let mut t = Tally::default();
        let dw = w.dim();
        let vw = v.tensor(w);
        for u in &us {
            let m = vw.act(u);
            let mut ok = true;
            for c in (0..v.dim()).map(|x| x * dw) {
                for r in 0..m.rows() {
                    if r % dw != 0 && !m.get(r, c).is_zero() {
                        ok = false;
                    }
                }
            }
            t.record(ok, || format!("u = {u} moves V{} (x) v_lambda out, lambda = {}", v.weights()[0], w.weights()[0]));
        }
        t
    });
    Tally::merge_all(parts)
}

pub fn oracle_crosscheck(ctx: &Context) -> Tally {
    let a = &*ctx.alg;
    let p = &ctx.pairing;
    let n = ctx.rank();
    let mut claims: Vec<(Element, Element)> = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for positive in [true, false] {
                claims.push((a.serre_element(i, j, positive), Element::zero()));
            }
        }
    }
    let mut s = ctx.sampler(2);
    let mut us = generators(ctx);
    for _ in 0..ctx.cfg.samples.div_ceil(10).max(1) {
        us.push(s.mixed(a, 3, 2));
    }
    for i in 0..n {
        for u in &us {
            claims.push((a.braid_t(i, &a.braid_t_inv(i, u)), u.clone()));
            claims.push((a.braid_t_inv(i, &a.braid_t(i, u)), u.clone()));
        }
        for m in 0..=ctx.cfg.divided_power_bound.min(3) {
            let (e, f) = (a.divided_power(i, m, true), a.divided_power(i, m, false));
            claims.push((a.braid_t_inv(i, &a.mul(&f, &e)), a.mul(&e, &f)));
        }
    }
    for _ in 0..ctx.cfg.samples.div_ceil(10).max(1) {
        let x = s.mixed(a, 3, 2);
        let y = s.mixed(a, 3, 2);
        let z = s.mixed(a, 1, 1);
        claims.push((a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z))));
        claims.push((a.mul(&x, &y), a.mul(&y, &x)));
    }
    let mods = match ctx.modules() {
        Ok(m) => m,
        Err(e) => {
            let mut t = Tally::default();
            t.fail(format!("module construction: {e}"));
            return t;
        }
    };
    let parts = ctx.map(&claims, |(l, r)| {
        let mut t = Tally::default();
        if p.equal(l, r) {
            for v in mods {
                t.record(v.act(l) == v.act(r), || format!("oracle says {l} = {r}, but they differ on V{}", v.weights()[0]));
            }
        }
        t
    });
    let mut t = Tally::merge_all(parts);
    let pairs = ctx.pairs().unwrap_or(&[]);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let d = a.coproduct(&a.serre_element(i, j, true));
            if p.equal_tensor(&d, &Tensor::zero(2)) {
                for (v, w) in pairs {
                    t.record(WeightModule::act_tensor(&[v, w], &d).is_zero(), || {
                        format!("oracle says Delta(Serre({},{})) = 0, but it acts on {}", i + 1, j + 1, pair_name(v, w))
                    });
                }
            }
        }
    }
    t
}
