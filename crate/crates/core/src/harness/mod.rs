//! Named checks over a Cartan datum, run with deterministic sampling and
//! collected into a report with one entry per check.

mod algebraic;
mod operators;
mod sample;

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::cartan::CartanDatum;
use crate::pairing::Pairing;
use crate::par::{self, ExecMode};
use crate::repr::{module_family, module_pairs, ReprError, WeightModule};

pub use sample::Sampler;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("max height must be at least 1, got {0}")]
    BadHeight(i32),
}

/// Every registered check with the statement it verifies.
pub const CHECKS: &[(&str, &str)] = &[
    ("hopf_axioms", "(Delta (x) 1)Delta = (1 (x) Delta)Delta, (eps (x) 1)Delta = id = (1 (x) eps)Delta, m(S (x) 1)Delta = eps = m(1 (x) S)Delta, Delta and S (anti)multiplicative, Delta kills the Serre relations"),
    ("pairing_axioms", "tau(k_g,k_d) = q^{-(g,d)}, tau(e_i,f_j) = -delta_ij/(q_i - q_i^{-1}), tau(e_i,k) = tau(k,f_i) = 0, tau(x,y1 y2) = (tau (x) tau)(Delta x, y1 (x) y2), tau(x1 x2,y) = (tau (x) tau)(x2 (x) x1, Delta y), tau(x k_g, y k_d) = tau(x,y) q^{-(g,d)}, weight orthogonality, non-degeneracy with dim U+_g = Kostant partition count, tau(Sx,Sy) = tau(x,y), tau(e_i^m,f_i^n) = delta_mn q_i^{n(n-1)/2}[n]!_{q_i}/(q_i^{-1} - q_i)^n"),
    ("d10_d11", "xy = sum tau(x0,y0) tau(x2,S y2) y1 x1 and yx = sum tau(S^{-1} x0,y0) tau(x2,y2) x1 y1 = sum tau(x0,S y0) tau(x2,y2) x1 y1"),
    ("serre_radical", "quantum Serre elements and the two-sided ideal they generate pair to zero with every opposite word"),
    ("lem_ten", "dim U+_g = sum_r dim(U+_{g - r alpha_i} cap T_i^{+-1}(U+)), and likewise for U-"),
    ("lem_sep", "tau(x e_i^m, y f_i^n) = tau(x,y) tau(e_i^m,f_i^n) on U+- cap T_i(U+-), tau(e_i^m x, f_i^n y) = tau(x,y) tau(e_i^m,f_i^n) on U+- cap T_i^{-1}(U+-)"),
    ("theorem", "tau(T_i^{-1}(x), T_i^{-1}(y)) = tau(x,y) for x in U+ cap T_i(U+), y in U- cap T_i(U-)"),
    ("prop_DS", "p(xy) in k_{-g}(tau(x,y) + sum_{d in Q+ \\ 0} F k_{2d}) for x in U+_g, y in U-_{-g}"),
    ("gauss_binomial", "p(e_i^(m) f_i^(m)) = [k_i; m] and T_i^{-1}(f_i^(m) e_i^(m)) = e_i^(m) f_i^(m)"),
    ("tef_rank2", "tau(e_b^m, f_b^n) over PBW monomials along a reduced longest word is delta_mn prod_k tau(e_{i_k}^{m_k}, f_{i_k}^{m_k})"),
    ("prop_T", "T_i = (T_i (x) T_i) Z_i = Phi^{-1}(R_i^{-1}) (T_i (x) T_i) on V (x) V', and Z_i^{-1} = P(R_i)"),
    ("t1_t2", "Delta(T_i^{-1}(u)) = Z_i^{-1} (T_i^{-1} (x) T_i^{-1})(Delta u) Z_i and Delta(T_i(u)) = Phi^{-1}(R_i^{-1}) (T_i (x) T_i)(Delta u) Phi^{-1}(R_i)"),
    ("prop_R", "Delta'(u) Theta = Theta Phi(Delta(u))"),
    ("rel_theta", "Theta = Theta' R_i = R_i Theta'' and Theta = (T_i (x) T_i)(Theta'') R_i"),
    ("braid_relations", "sigma_i(t_i), T_i on modules and T_i on U satisfy the braid relations"),
    ("sigma_factorizations", "sigma_i(t) equals both three-term exponential factorizations for every shift n, and sigma_i(t) V_mu = V_{s_i mu}"),
    ("prop_pos_forward", "u (V (x) v_lambda) in V (x) v_lambda for u in U^{>=0}, including u = T_i^{-1}(x) with x in U+ cap T_i(U+)"),
    ("oracle_crosscheck", "whenever the pairing oracle decides z1 = z2, z1 and z2 act identically on every module of the suite"),
];

pub fn statement(name: &str) -> Option<&'static str> {
    CHECKS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// What to verify and at which bounds.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub datum: CartanDatum,
    /// Largest weight height for Gram blocks, Serre ideal and dimension checks.
    pub max_height: i32,
    /// Largest height of the intersection blocks in the invariance check.
    pub theorem_height: i32,
    /// Largest divided power `m` in the Gaussian-binomial and closed-form checks.
    pub divided_power_bound: u32,
    /// Highest weights `0..=max_a1_weight` for rank one.
    pub max_a1_weight: i32,
    /// Random instances per sampled property.
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<String>,
    pub mode: ExecMode,
}

impl CheckConfig {
    /// Desk-scale defaults for a datum.
    pub fn new(datum: CartanDatum) -> Self {
        let theorem_height = if datum.name() == "G2" { 4 } else { 5 };
        Self {
            datum,
            max_height: 6,
            theorem_height,
            divided_power_bound: 4,
            max_a1_weight: 4,
            samples: 100,
            seed: 42,
            checks: CHECKS.iter().map(|(n, _)| n.to_string()).collect(),
            mode: ExecMode::default(),
        }
    }

    pub fn with_checks(mut self, names: &[&str]) -> Self {
        self.checks = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.max_height < 1 {
            return Err(HarnessError::BadHeight(self.max_height));
        }
        if let Some(bad) = self.checks.iter().find(|c| statement(c).is_none()) {
            return Err(HarnessError::UnknownCheck(bad.clone()));
        }
        Ok(())
    }
}

/// Instance count and first failure of one check.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Tally {
    pub instances: u64,
    pub counterexample: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        if self.counterexample.is_none() {
            self.counterexample = Some(msg.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }

    pub fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), Tally::merge)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub paper_ref: String,
    pub instances: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigSummary {
    pub cartan_type: String,
    pub gcm: Vec<Vec<i32>>,
    pub symmetrizer: Vec<i32>,
    pub max_height: i32,
    pub theorem_height: i32,
    pub divided_power_bound: u32,
    pub max_a1_weight: i32,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: ConfigSummary,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Drops wall times so that reports for a fixed configuration compare
    /// byte for byte.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.millis = None;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.config;
        let _ = writeln!(
            s,
            "type {} gcm {:?} d {:?} H={} theorem H={} M={} samples={} seed={}",
            c.cartan_type, c.gcm, c.symmetrizer, c.max_height, c.theorem_height, c.divided_power_bound, c.samples, c.seed
        );
        for r in &self.checks {
            let _ = writeln!(s, "  {:<21} {}", r.name, r.paper_ref);
        }
        for r in &self.checks {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let time = r.millis.map(|m| format!(" {m} ms")).unwrap_or_default();
            let _ = writeln!(s, "{status} {:<21} {} instances{time}", r.name, r.instances);
            if let Some(cx) = &r.counterexample {
                let _ = writeln!(s, "     counterexample: {cx}");
            }
        }
        let _ = writeln!(s, "{}", if self.passed() { "all checks passed" } else { "some checks FAILED" });
        s
    }
}

/// Shared state for one suite run.
pub struct Context {
    pub cfg: CheckConfig,
    pub alg: Arc<Algebra>,
    pub pairing: Pairing,
    family: OnceLock<Result<Vec<WeightModule>, ReprError>>,
    pairs: OnceLock<Result<Vec<(WeightModule, WeightModule)>, ReprError>>,
}

impl Context {
    pub fn new(cfg: CheckConfig) -> Self {
        let alg = Arc::new(Algebra::new(cfg.datum.clone()));
        let pairing = Pairing::new(alg.clone());
        Self { cfg, alg, pairing, family: OnceLock::new(), pairs: OnceLock::new() }
    }

    pub fn rank(&self) -> usize {
        self.alg.rank()
    }

    pub fn sampler(&self, job: u64) -> Sampler {
        Sampler::fork(self.cfg.seed, self.rank(), job)
    }

    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        par::map(self.cfg.mode, items, f)
    }

    /// Single modules: rank one `V(0..=max)`, otherwise the fundamental
    /// modules and the adjoint module (`G2`: the 7-dimensional module only).
    pub fn modules(&self) -> Result<&[WeightModule], String> {
        self.family
            .get_or_init(|| module_family(&self.cfg.datum, self.cfg.max_a1_weight))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(ToString::to_string)
    }

    /// Pairs for tensor-product identities.
    pub fn pairs(&self) -> Result<&[(WeightModule, WeightModule)], String> {
        self.pairs
            .get_or_init(|| module_pairs(&self.cfg.datum))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(ToString::to_string)
    }
}

pub fn run_check(ctx: &Context, name: &str) -> Result<Tally, HarnessError> {
    Ok(match name {
        "hopf_axioms" => algebraic::hopf_axioms(ctx),
        "pairing_axioms" => algebraic::pairing_axioms(ctx),
        "d10_d11" => algebraic::d10_d11(ctx),
        "serre_radical" => algebraic::serre_radical(ctx),
        "lem_ten" => algebraic::lem_ten(ctx),
        "lem_sep" => algebraic::lem_sep(ctx),
        "theorem" => algebraic::theorem(ctx),
        "prop_DS" => algebraic::prop_ds(ctx),
        "gauss_binomial" => algebraic::gauss_binomial(ctx),
        "tef_rank2" => algebraic::tef_rank2(ctx),
        "prop_T" => operators::prop_t(ctx),
        "t1_t2" => operators::t1_t2(ctx),
        "prop_R" => operators::prop_r(ctx),
        "rel_theta" => operators::rel_theta(ctx),
        "braid_relations" => operators::braid_relations(ctx),
        "sigma_factorizations" => operators::sigma_factorizations(ctx),
        "prop_pos_forward" => operators::prop_pos_forward(ctx),
        "oracle_crosscheck" => operators::oracle_crosscheck(ctx),
        other => return Err(HarnessError::UnknownCheck(other.to_string())),
    })
}

/// Runs the selected checks in registry order of the configuration.
pub fn run_suite(cfg: CheckConfig) -> Result<SuiteReport, HarnessError> {
    cfg.validate()?;
    let d = &cfg.datum;
    let config = ConfigSummary {
        cartan_type: d.name().to_string(),
        gcm: d.gcm().to_vec(),
        symmetrizer: d.symmetrizer().to_vec(),
        max_height: cfg.max_height,
        theorem_height: cfg.theorem_height,
        divided_power_bound: cfg.divided_power_bound,
        max_a1_weight: cfg.max_a1_weight,
        samples: cfg.samples,
        seed: cfg.seed,
    };
    let names = cfg.checks.clone();
    let ctx = Context::new(cfg);
    let mut checks = Vec::new();
    for name in names {
        let start = Instant::now();
        let tally = run_check(&ctx, &name)?;
        checks.push(CheckResult {
            paper_ref: statement(&name).unwrap_or_default().to_string(),
            instances: tally.instances,
            status: if tally.passed() { Status::Pass } else { Status::Fail },
            counterexample: tally.counterexample,
            millis: Some(start.elapsed().as_millis() as u64),
            name,
        });
    }
    Ok(SuiteReport { config, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_passes() {
        let cfg = CheckConfig::new(CartanDatum::preset("A2").unwrap()).with_checks(&[]);
        let r = run_suite(cfg).unwrap();
        assert!(r.passed() && r.checks.is_empty());
    }

    #[test]
    fn unknown_check_is_rejected() {
        let cfg = CheckConfig::new(CartanDatum::preset("A2").unwrap()).with_checks(&["nope"]);
        assert_eq!(run_suite(cfg).unwrap_err(), HarnessError::UnknownCheck("nope".into()));
    }

    #[test]
    fn registry_is_complete() {
        let ctx = Context::new(CheckConfig::new(CartanDatum::preset("A1").unwrap()));
        assert_eq!(CHECKS.len(), 18);
        for (name, _) in CHECKS {
            assert!(run_check(&ctx, name).is_ok());
        }
    }

    #[test]
    fn tally_keeps_first_failure() {
        let mut a = Tally::default();
        a.record(true, || "x".into());
        a.record(false, || "first".into());
        let mut b = Tally::default();
        b.record(false, || "second".into());
        let m = a.merge(b);
        assert_eq!((m.instances, m.counterexample.as_deref()), (3, Some("first")));
    }
}
