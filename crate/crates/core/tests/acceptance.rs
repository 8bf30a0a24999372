//! One line per acceptance criterion, with its time budget. Exits nonzero if
//! any criterion fails or overruns.

use std::sync::Arc;
use std::time::{Duration, Instant};

use qpair::algebra::Algebra;
use qpair::cartan::{CartanDatum, RootVector};
use qpair::harness::{run_check, CheckConfig, Context, Sampler, Tally};
use qpair::pairing::Pairing;
use qpair::scalars::Scalar;

const RANK2: [&str; 3] = ["A2", "B2", "G2"];
const ALL: [&str; 5] = ["A1", "A2", "B2", "G2", "A1xA1"];

fn datum(name: &str) -> CartanDatum {
    CartanDatum::preset(name).unwrap()
}

fn pairing(name: &str) -> Pairing {
    Pairing::new(Arc::new(Algebra::new(datum(name))))
}

fn harness(types: &[&str], check: &str, tweak: impl Fn(&mut CheckConfig)) -> Tally {
    let mut total = Tally::default();
    for t in types {
        let mut cfg = CheckConfig::new(datum(t));
        tweak(&mut cfg);
        let ctx = Context::new(cfg);
        let mut tally = run_check(&ctx, check).unwrap();
        if let Some(cx) = tally.counterexample.take() {
            tally.counterexample = Some(format!("{t}: {cx}"));
        }
        total = total.merge(tally);
    }
    total
}

fn box_weights(n: usize) -> Vec<RootVector> {
    let mut out = vec![RootVector::zero(n)];
    for i in 0..n {
        out = out.iter().flat_map(|g| [-2, -1, 0, 1, 2].map(|s| g.add_simple(i, s))).collect();
    }
    out
}

fn pairing_generators() -> Tally {
    let mut t = Tally::default();
    for name in ["A2", "B2", "G2", "A1xA1"] {
        let p = pairing(name);
        let a = p.algebra();
        let d = a.datum();
        let n = a.rank();
        for g in box_weights(n) {
            for dl in box_weights(n) {
                let v = p.tau(&a.k(g.clone()), &a.k(dl.clone())).unwrap();
                t.record(v == Scalar::q_pow(-d.form(&g, &dl)), || format!("{name}: tau(k_{g}, k_{dl}) = {v}"));
            }
            for i in 0..n {
                t.record(p.tau(&a.e(i), &a.k(g.clone())).unwrap().is_zero(), || format!("{name}: tau(e_{}, k_{g})", i + 1));
                t.record(p.tau(&a.k(g.clone()), &a.f(i)).unwrap().is_zero(), || format!("{name}: tau(k_{g}, f_{})", i + 1));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = p.tau(&a.e(i), &a.f(j)).unwrap();
                let want = if i == j { -&(&a.qi_pow(i, 1) - &a.qi_pow(i, -1)).inv().unwrap() } else { Scalar::zero() };
                t.record(v == want, || format!("{name}: tau(e_{}, f_{}) = {v}", i + 1, j + 1));
            }
        }
    }
    t
}

fn closed_form() -> Tally {
    let mut t = Tally::default();
    for name in ALL {
        let p = pairing(name);
        let n = p.algebra().rank();
        for i in 0..n {
            for m in 0..=4u32 {
                for k in 0..=4u32 {
                    let x = qpair::algebra::Element::e_word(&vec![i as u8; m as usize], n);
                    let y = qpair::algebra::Element::f_word(&vec![i as u8; k as usize], n);
                    let v = p.tau(&x, &y).unwrap();
                    t.record(v == p.tau_power_closed(i, m, k), || format!("{name}: tau(e_{0}^{m}, f_{0}^{k}) = {v}", i + 1));
                }
            }
        }
    }
    t
}

fn gram_ranks() -> Tally {
    let mut t = Tally::default();
    for name in RANK2 {
        let p = pairing(name);
        let d = p.algebra().datum().clone();
        for g in d.weights_up_to_height(6) {
            let r = p.gram_block(&g).unwrap().rank() as u64;
            let k = d.kostant_count(&g).unwrap();
            t.record(r == k, || format!("{name}: Gram rank {r} at {g}, Kostant count {k}"));
        }
    }
    t
}

fn antipode_invariance() -> Tally {
    let mut t = Tally::default();
    for name in ALL {
        let p = pairing(name);
        let a = p.algebra();
        let mut s = Sampler::new(42, a.rank());
        for _ in 0..50 {
            let (x, y) = (s.nonneg(3, 2), s.nonpos(3, 2));
            let l = p.tau(&a.antipode(&x), &a.antipode(&y)).unwrap();
            let r = p.tau(&x, &y).unwrap();
            t.record(l == r, || format!("{name}: tau(Sx, Sy) for x = {x}, y = {y}"));
        }
    }
    t
}

struct Criterion {
    id: u32,
    what: &'static str,
    limit: Option<Duration>,
    min_instances: u64,
    run: Box<dyn Fn() -> Tally>,
}

fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion { id: 1, what: "generator values of tau on rank-2 presets", limit: secs(1), min_instances: 1, run: Box::new(pairing_generators) },
        Criterion { id: 2, what: "closed form tau(e_i^m, f_i^n), m, n <= 4, all presets", limit: secs(5), min_instances: 1, run: Box::new(closed_form) },
        Criterion {
            id: 3,
            what: "Serre ideal pairs to zero with all opposite words, height <= 6",
            limit: secs(60),
            min_instances: 1,
            run: Box::new(|| harness(&RANK2, "serre_radical", |c| c.max_height = 6)),
        },
        Criterion { id: 4, what: "Gram rank equals Kostant count, height <= 6", limit: None, min_instances: 1, run: Box::new(gram_ranks) },
        Criterion {
            id: 5,
            what: "dimension decomposition along U cap T_i^{+-1}(U), height <= 5",
            limit: None,
            min_instances: 1,
            run: Box::new(|| harness(&RANK2, "lem_ten", |c| c.max_height = 5)),
        },
        Criterion { id: 6, what: "separation of e_i^m / f_i^n factors, m, n <= 3", limit: None, min_instances: 1, run: Box::new(|| harness(&RANK2, "lem_sep", |_| ())) },
        Criterion {
            id: 7,
            what: "tau(T_i^-1 x, T_i^-1 y) = tau(x, y): A2, B2 height <= 5, G2 height <= 4",
            limit: secs(300),
            min_instances: 1,
            run: Box::new(|| harness(&RANK2, "theorem", |_| ())),
        },
        Criterion {
            id: 8,
            what: "leading torus term of p(xy), >= 100 seeded pairs per preset",
            limit: None,
            min_instances: 100 * ALL.len() as u64,
            run: Box::new(|| harness(&ALL, "prop_DS", |c| c.samples = 100)),
        },
        Criterion { id: 9, what: "Gaussian binomial p(e^(m) f^(m)) = [k_i; m], m <= 4", limit: None, min_instances: 1, run: Box::new(|| harness(&ALL, "gauss_binomial", |_| ())) },
        Criterion {
            id: 10,
            what: "Hopf axioms, tau(Sx, Sy) = tau(x, y), xy and yx expansions via the equality oracle",
            limit: None,
            min_instances: 1,
            run: Box::new(|| harness(&ALL, "hopf_axioms", |_| ()).merge(antipode_invariance()).merge(harness(&ALL, "d10_d11", |_| ()))),
        },
        Criterion {
            id: 11,
            what: "operator identities on the module suite",
            limit: secs(300),
            min_instances: 1,
            run: Box::new(|| {
                ["prop_T", "t1_t2", "prop_R", "rel_theta", "sigma_factorizations", "braid_relations"]
                    .into_iter()
                    .fold(Tally::default(), |acc, c| acc.merge(harness(&["A1", "A2", "B2"], c, |_| ())))
            }),
        },
        Criterion { id: 12, what: "PBW monomials: orthogonality and product values, height <= 6", limit: None, min_instances: 1, run: Box::new(|| harness(&RANK2, "tef_rank2", |_| ())) },
        Criterion { id: 13, what: "equality oracle agrees with module actions", limit: None, min_instances: 1, run: Box::new(|| harness(&ALL, "oracle_crosscheck", |_| ())) },
    ]
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        for c in criteria() {
            println!("criterion_{}: test", c.id);
        }
        return;
    }
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let tally = (c.run)();
        let took = start.elapsed();
        let over = c.limit.is_some_and(|l| took > l);
        let few = tally.instances < c.min_instances;
        let ok = tally.passed() && !over && !few;
        let limit = c.limit.map(|l| format!(", limit {} s", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {:>2}: {} {} ({} instances, {} ms{limit})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.what,
            tally.instances,
            took.as_millis()
        );
        if let Some(cx) = &tally.counterexample {
            println!("    counterexample: {cx}");
        }
        if over {
            println!("    over the time limit");
        }
        if few {
            println!("    expected at least {} instances", c.min_instances);
        }
        failed += usize::from(!ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 13 criteria passed");
}
