//! Finite-dimensional integrable modules `V_+(lambda)`, `V_-(-lambda)` and
//! their tensor products, with exact action matrices, and the operators
//! `sigma_i(t)`, `T_i`, `Z_i`, `R_i` and `Theta` acting on them.

mod ops;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::algebra::{Element, Tensor, TriMono, Word};
use crate::cartan::{CartanDatum, RootVector, Weight};
use crate::scalars::{q_int_laurent, LaurentPoly, Matrix, Scalar};

pub use ops::{
    exp_series, lusztig_t, lusztig_t_inv, r_inv_series, r_series, sigma, sigma_factored, swap_operator, theta_dprime_op,
    theta_op, theta_prime_op, z_series, SigmaForm,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReprError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} has the wrong rank")]
    BadRank(Weight),
    #[error("module construction needs a finite-type Cartan datum, got {0}")]
    NotFiniteType(String),
    #[error("sigma_i(t) needs t != 0")]
    ZeroParameter,
    #[error("module relation fails: {0}")]
    Relation(String),
}

type WordCache = RwLock<HashMap<(bool, Word), Arc<Matrix>>>;

/// A finite-dimensional weight module with exact action matrices.
pub struct WeightModule {
    datum: CartanDatum,
    labels: Vec<String>,
    weights: Vec<Weight>,
    /// Position of each basis vector in the root lattice, up to a common shift.
    positions: Vec<RootVector>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    words: WordCache,
}

impl Clone for WeightModule {
    fn clone(&self) -> Self {
        Self {
            datum: self.datum.clone(),
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            positions: self.positions.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
            words: RwLock::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for WeightModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightModule").field("type", &self.datum.name()).field("labels", &self.labels).finish()
    }
}

fn render_word(w: &[u8], letter: char) -> String {
    w.iter().map(|i| format!("{letter}{} ", i + 1)).collect()
}

impl WeightModule {
    /// The one-dimensional module where `e_i`, `f_i` act by zero and `k` by one.
    pub fn trivial(datum: &CartanDatum) -> Self {
        let n = datum.rank();
        Self::from_parts(
            datum.clone(),
            vec!["v".into()],
            vec![Weight::zero(n)],
            vec![RootVector::zero(n)],
            vec![Matrix::zeros(1, 1); n],
            vec![Matrix::zeros(1, 1); n],
        )
    }

    fn from_parts(
        datum: CartanDatum,
        labels: Vec<String>,
        weights: Vec<Weight>,
        positions: Vec<RootVector>,
        e: Vec<Matrix>,
        f: Vec<Matrix>,
    ) -> Self {
        Self { datum, labels, weights, positions, e, f, words: RwLock::new(HashMap::new()) }
    }

    /// The irreducible module `V_+(lambda)` with highest weight vector `v`.
    ///
    /// Weight spaces are spanned by `f`-words applied to `v`, modulo the
    /// radical of the contravariant form `B`; bases are the lexicographically
    /// first independent words reached by left multiplication.
    pub fn highest(datum: &CartanDatum, lambda: &Weight) -> Result<Self, ReprError> {
        let n = datum.rank();
        if lambda.0.len() != n {
            return Err(ReprError::BadRank(lambda.clone()));
        }
        if !lambda.is_dominant() {
            return Err(ReprError::NotDominant(lambda.clone()));
        }
        if !datum.is_finite_type() {
            return Err(ReprError::NotFiniteType(datum.name().to_string()));
        }
        let mut form = ContravariantForm::new(datum, lambda);
        let mut spaces: BTreeMap<RootVector, Space> = BTreeMap::new();
        let zero = RootVector::zero(n);
        spaces.insert(zero.clone(), Space::new(vec![Word::new()], &mut form));
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let mut candidates: BTreeMap<RootVector, Vec<Word>> = BTreeMap::new();
            for depth in &frontier {
                for w in &spaces[depth].words {
                    for k in 0..n {
                        let mut nw = Word::new();
                        nw.push(k as u8);
                        nw.extend_from_slice(w);
                        let entry = candidates.entry(depth.add_simple(k, 1)).or_default();
                        if !entry.contains(&nw) {
                            entry.push(nw);
                        }
                    }
                }
            }
            frontier.clear();
            for (depth, mut cands) in candidates {
                cands.sort();
                let gram = form.gram(&cands, &cands);
                let pivots = gram.clone().rref_in_place();
                if pivots.is_empty() {
                    continue;
                }
                let words = pivots.iter().map(|&c| cands[c].clone()).collect();
                spaces.insert(depth.clone(), Space::new(words, &mut form));
                frontier.push(depth);
            }
        }

        let mut index: HashMap<(RootVector, usize), usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut positions = Vec::new();
        let mut order: Vec<&RootVector> = spaces.keys().collect();
        order.sort_by_key(|d| (d.height(), (*d).clone()));
        for depth in &order {
            for (a, w) in spaces[*depth].words.iter().enumerate() {
                index.insert(((*depth).clone(), a), labels.len());
                labels.push(format!("{}v", render_word(w, 'f')));
                weights.push(lambda - &datum.root_to_weight(depth));
                positions.push(-*depth);
            }
        }
        let dim = labels.len();
        let mut e = vec![Matrix::zeros(dim, dim); n];
        let mut f = vec![Matrix::zeros(dim, dim); n];
        for depth in &order {
            let src = &spaces[*depth];
            for k in 0..n {
                // f_k b expands over the space one step deeper
                let down = depth.add_simple(k, 1);
                if let Some(dst) = spaces.get(&down) {
                    for (b, w) in src.words.iter().enumerate() {
                        let mut fw = Word::new();
                        fw.push(k as u8);
                        fw.extend_from_slice(w);
                        let rhs: Vec<Scalar> = dst.words.iter().map(|x| form.value(x, &fw)).collect();
                        for (a, c) in dst.inverse.mul_vec(&rhs).into_iter().enumerate() {
                            f[k].set(index[&(down.clone(), a)], index[&((*depth).clone(), b)], c);
                        }
                    }
                }
                // B(x, e_k w) = B(f_k x, w)
                if depth.0[k] > 0 {
                    let up = depth.add_simple(k, -1);
                    if let Some(dst) = spaces.get(&up) {
                        for (b, w) in src.words.iter().enumerate() {
                            let rhs: Vec<Scalar> = dst
                                .words
                                .iter()
                                .map(|x| {
                                    let mut fx = Word::new();
                                    fx.push(k as u8);
                                    fx.extend_from_slice(x);
                                    form.value(&fx, w)
                                })
                                .collect();
                            for (a, c) in dst.inverse.mul_vec(&rhs).into_iter().enumerate() {
                                e[k].set(index[&(up.clone(), a)], index[&((*depth).clone(), b)], c);
                            }
                        }
                    }
                }
            }
        }
        let m = Self::from_parts(datum.clone(), labels, weights, positions, e, f);
        m.check_relations()?;
        Ok(m)
    }

    /// The irreducible module `V_-(-lambda)` with lowest weight `-lambda`,
    /// spanned by `e`-words applied to its lowest weight vector.
    pub fn lowest(datum: &CartanDatum, lambda: &Weight) -> Result<Self, ReprError> {
        Ok(Self::highest(datum, lambda)?.twisted())
    }

    /// Twist by the automorphism `e_i <-> f_i`, `k_gamma -> k_{-gamma}`.
    pub fn twisted(&self) -> Self {
        let labels = self.labels.iter().map(|l| l.replace('f', "\u{1}").replace('e', "f").replace('\u{1}', "e")).collect();
        Self::from_parts(
            self.datum.clone(),
            labels,
            self.weights.iter().map(|w| -w).collect(),
            self.positions.iter().map(|p| -p).collect(),
            self.f.clone(),
            self.e.clone(),
        )
    }

    /// `V (x) V'` with the action through the coproduct.
    pub fn tensor(&self, other: &WeightModule) -> Self {
        let n = self.datum.rank();
        let (i1, i2) = (Matrix::identity(self.dim()), Matrix::identity(other.dim()));
        let mut e = Vec::with_capacity(n);
        let mut f = Vec::with_capacity(n);
        for i in 0..n {
            let ai = RootVector::simple(n, i);
            // e -> e (x) 1 + k_i (x) e,  f -> f (x) k_i^{-1} + 1 (x) f
            e.push(self.e[i].kron(&i2).add(&self.torus(&ai).kron(&other.e[i])));
            f.push(self.f[i].kron(&other.torus(&-&ai)).add(&i1.kron(&other.f[i])));
        }
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut positions = Vec::new();
        for a in 0..self.dim() {
            for b in 0..other.dim() {
                labels.push(format!("({}) (x) ({})", self.labels[a], other.labels[b]));
                weights.push(&self.weights[a] + &other.weights[b]);
                positions.push(&self.positions[a] + &other.positions[b]);
            }
        }
        Self::from_parts(self.datum.clone(), labels, weights, positions, e, f)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn e(&self, i: usize) -> &Matrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &Matrix {
        &self.f[i]
    }

    /// Basis indices of the weight space `V_mu`.
    pub fn weight_space(&self, mu: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&a| &self.weights[a] == mu).collect()
    }

    /// Componentwise spread of the basis in the root lattice. `e`-words of
    /// weight `gamma` act by zero unless `gamma` fits under it.
    pub fn diameter(&self) -> RootVector {
        let n = self.datum.rank();
        RootVector(
            (0..n)
                .map(|i| {
                    let hi = self.positions.iter().map(|p| p.0[i]).max().unwrap_or(0);
                    let lo = self.positions.iter().map(|p| p.0[i]).min().unwrap_or(0);
                    hi - lo
                })
                .collect(),
        )
    }

    /// `k_gamma` acts on `V_mu` by `q^{<mu, t_gamma>}`.
    pub fn torus(&self, g: &RootVector) -> Matrix {
        Matrix::diagonal(self.weights.iter().map(|w| Scalar::q_pow(self.datum.t_pairing(w, g))).collect())
    }

    /// `q_i^{<mu, h_i>(<mu, h_i> + 1)/2}` on `V_mu`, or its inverse.
    pub fn quadratic_diagonal(&self, i: usize, inverse: bool) -> Matrix {
        let di = self.datum.d(i);
        let sign = if inverse { -1 } else { 1 };
        Matrix::diagonal(
            self.weights
                .iter()
                .map(|w| {
                    let m = w.0[i];
                    Scalar::q_pow(sign * di * m * (m + 1) / 2)
                })
                .collect(),
        )
    }

    fn word_matrix(&self, positive: bool, w: &Word) -> Arc<Matrix> {
        let key = (positive, w.clone());
        if let Some(m) = self.words.read().unwrap().get(&key) {
            return m.clone();
        }
        let gens = if positive { &self.e } else { &self.f };
        let m = w.iter().fold(Matrix::identity(self.dim()), |acc, &l| acc.mul(&gens[l as usize]));
        let m = Arc::new(m);
        self.words.write().unwrap().insert(key, m.clone());
        m
    }

    /// Action of `F k_gamma E`.
    pub fn act_mono(&self, m: &TriMono) -> Matrix {
        let mut out = self.torus(&m.k);
        if !m.e.is_empty() {
            out = out.mul(&self.word_matrix(true, &m.e));
        }
        if !m.f.is_empty() {
            out = self.word_matrix(false, &m.f).mul(&out);
        }
        out
    }

    pub fn act(&self, x: &Element) -> Matrix {
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (m, c) in x.terms() {
            out = out.add(&self.act_mono(m).scale(c));
        }
        out
    }

    /// Action of an element of `U^{(x)n}` on `V_1 (x) ... (x) V_n`.
    pub fn act_tensor(mods: &[&WeightModule], t: &Tensor) -> Matrix {
        assert_eq!(mods.len(), t.arity(), "arity mismatch");
        let dim: usize = mods.iter().map(|m| m.dim()).product();
        let mut out = Matrix::zeros(dim, dim);
        let mut cache: Vec<HashMap<TriMono, Matrix>> = vec![HashMap::new(); mods.len()];
        for (key, c) in t.terms() {
            let mut acc = Matrix::identity(1).scale(c);
            for (s, m) in key.iter().enumerate() {
                let a = cache[s].entry(m.clone()).or_insert_with(|| mods[s].act_mono(m));
                acc = acc.kron(a);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Checks weights, `[e_i, f_j] = delta_ij (k_i - k_i^{-1})/(q_i - q_i^{-1})`
    /// and nilpotency of the generators.
    pub fn check_relations(&self) -> Result<(), ReprError> {
        let n = self.datum.rank();
        let dim = self.dim();
        for i in 0..n {
            let ai = self.datum.root_to_weight(&RootVector::simple(n, i));
            for a in 0..dim {
                for b in 0..dim {
                    if !self.e[i].get(a, b).is_zero() && self.weights[a] != &self.weights[b] + &ai {
                        return Err(ReprError::Relation(format!("e{} does not raise weight by alpha_{}", i + 1, i + 1)));
                    }
                    if !self.f[i].get(a, b).is_zero() && &self.weights[a] + &ai != self.weights[b] {
                        return Err(ReprError::Relation(format!("f{} does not lower weight by alpha_{}", i + 1, i + 1)));
                    }
                }
            }
            if self.e[i].nilpotency_index().is_none() || self.f[i].nilpotency_index().is_none() {
                return Err(ReprError::Relation(format!("generator {} is not nilpotent", i + 1)));
            }
            for j in 0..n {
                let lhs = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                let rhs = if i == j {
                    let ai = RootVector::simple(n, i);
                    let di = self.datum.d(i);
                    let c = (&Scalar::q_pow(di) - &Scalar::q_pow(-di)).inv().unwrap();
                    self.torus(&ai).sub(&self.torus(&-&ai)).scale(&c)
                } else {
                    Matrix::zeros(dim, dim)
                };
                if lhs != rhs {
                    return Err(ReprError::Relation(format!("[e{}, f{}]", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Basis labels with weights, then one matrix block per generator.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "type {} dim {}", self.datum.name(), self.dim());
        for (a, (l, w)) in self.labels.iter().zip(&self.weights).enumerate() {
            let _ = writeln!(s, "{a}: {l} weight {w}");
        }
        for (name, mats) in [("e", &self.e), ("f", &self.f)] {
            for (i, m) in mats.iter().enumerate() {
                let _ = writeln!(s, "{name}{}:", i + 1);
                let _ = write!(s, "{m}");
            }
        }
        s
    }
}

/// The contravariant form on `f`-words applied to a highest weight vector:
/// `B(f_j F, G) = sum_{G_p = j} [<lambda - |G_{>p}|, h_j>]_{q_j} B(F, G \ p)`.
struct ContravariantForm<'a> {
    datum: &'a CartanDatum,
    lambda: Weight,
    memo: HashMap<(Word, Word), LaurentPoly>,
}

impl<'a> ContravariantForm<'a> {
    fn new(datum: &'a CartanDatum, lambda: &Weight) -> Self {
        Self { datum, lambda: lambda.clone(), memo: HashMap::new() }
    }

    fn laurent(&mut self, x: &[u8], y: &[u8]) -> LaurentPoly {
        if x.len() != y.len() {
            return LaurentPoly::zero();
        }
        if x.is_empty() {
            return LaurentPoly::one();
        }
        let key = (Word::from_slice(x), Word::from_slice(y));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let n = self.datum.rank();
        let j = x[0] as usize;
        let dj = self.datum.d(j);
        let mut acc = LaurentPoly::zero();
        let mut suffix = RootVector::zero(n);
        for p in (0..y.len()).rev() {
            if y[p] as usize == j {
                let c = self.lambda.0[j] - self.datum.coroot_pairing(j, &suffix);
                if c != 0 {
                    let mut rest = Word::from_slice(y);
                    rest.remove(p);
                    let sub = self.laurent(&x[1..], &rest);
                    acc = &acc + &(&q_int_laurent(c as i64, dj) * &sub);
                }
            }
            suffix = suffix.add_simple(y[p] as usize, 1);
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    fn value(&mut self, x: &[u8], y: &[u8]) -> Scalar {
        Scalar::from_laurent(self.laurent(x, y))
    }

    fn gram(&mut self, rows: &[Word], cols: &[Word]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|x| cols.iter().map(|y| self.value(x, y)).collect()).collect())
    }
}

struct Space {
    words: Vec<Word>,
    inverse: Matrix,
}

impl Space {
    fn new(words: Vec<Word>, form: &mut ContravariantForm) -> Self {
        let inverse = form.gram(&words, &words).inverse().expect("pivot words are independent");
        Self { words, inverse }
    }
}

/// `B(F_1 v, F_2 v)` computed through the triangular decomposition:
/// `ev_lambda(p(omega(F_1) F_2))` with `omega` the anti-automorphism
/// swapping `e_i` and `f_i`.
pub fn contravariant_form_via_projection(
    alg: &crate::algebra::Algebra,
    lambda: &Weight,
    x: &[u8],
    y: &[u8],
) -> Scalar {
    let n = alg.rank();
    let rev: Vec<u8> = x.iter().rev().copied().collect();
    let prod = alg.mul(&Element::e_word(&rev, n), &Element::f_word(y, n));
    alg.projection_p(&prod)
        .iter()
        .fold(Scalar::zero(), |acc, (g, c)| &acc + &c.shift(alg.datum().t_pairing(lambda, g)))
}

/// Recursive form used by module construction, exposed for cross-checks.
pub fn contravariant_form(datum: &CartanDatum, lambda: &Weight, x: &[u8], y: &[u8]) -> Scalar {
    ContravariantForm::new(datum, lambda).value(x, y)
}

fn fundamental_modules(datum: &CartanDatum) -> Result<Vec<WeightModule>, ReprError> {
    let n = datum.rank();
    let mut out: Vec<WeightModule> =
        (0..n).map(|i| WeightModule::highest(datum, &Weight::fundamental(n, i))).collect::<Result<_, _>>()?;
    if datum.name() == "G2" {
        out.sort_by_key(WeightModule::dim);
        out.truncate(1);
    }
    Ok(out)
}

/// Irreducible modules used by the operator checks: `A1` highest weights
/// `0..=max_a1`; fundamentals and the adjoint module in rank 2 (`G2`: the
/// 7-dimensional module only); fundamentals elsewhere.
pub fn module_family(datum: &CartanDatum, max_a1: i32) -> Result<Vec<WeightModule>, ReprError> {
    let n = datum.rank();
    if n == 1 {
        return (0..=max_a1).map(|l| WeightModule::highest(datum, &Weight(vec![l]))).collect();
    }
    let mut out = fundamental_modules(datum)?;
    if n == 2 && datum.name() != "G2" && datum.coxeter_order(0, 1) != Some(2) {
        let roots = datum.positive_roots().map_err(|e| ReprError::NotFiniteType(e.to_string()))?;
        let top = roots.iter().max_by_key(|r| r.height()).expect("nonempty root system");
        out.push(WeightModule::highest(datum, &datum.root_to_weight(top))?);
    }
    Ok(out)
}

/// Pairs `(V, V')` for tensor-product checks: all ordered pairs of `A1`
/// modules with highest weight at most 2, or of the fundamental modules,
/// plus one pair with a lowest-weight factor.
pub fn module_pairs(datum: &CartanDatum) -> Result<Vec<(WeightModule, WeightModule)>, ReprError> {
    let n = datum.rank();
    let base = if n == 1 {
        (0..=2).map(|l| WeightModule::highest(datum, &Weight(vec![l]))).collect::<Result<Vec<_>, _>>()?
    } else {
        fundamental_modules(datum)?
    };
    let mut out = Vec::new();
    for a in &base {
        for b in &base {
            out.push((a.clone(), b.clone()));
        }
    }
    let lowest = if n == 1 { WeightModule::lowest(datum, &Weight(vec![1]))? } else { base[0].twisted() };
    out.push((lowest, base[base.len() - 1].clone()));
    Ok(out)
}
