//! Symmetrizable Cartan data, root and weight lattices, the invariant form
//! and Weyl group combinatorics.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("empty Cartan matrix")]
    Empty,
    #[error("Cartan matrix is not square")]
    NotSquare,
    #[error("diagonal entry a[{0}][{0}] must be 2")]
    Diagonal(usize),
    #[error("off-diagonal entry a[{0}][{1}] must be non-positive")]
    Positive(usize, usize),
    #[error("a[{0}][{1}] = 0 but a[{1}][{0}] != 0")]
    ZeroPattern(usize, usize),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("symmetrizer entries must be positive and satisfy d_i a_ij = d_j a_ji")]
    BadSymmetrizer,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("index {0} out of range")]
    BadIndex(usize),
    #[error("datum is not of finite type")]
    NotFiniteType,
    #[error("unknown Cartan type preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed GCM file: {0}")]
    Parse(String),
}

/// Element `sum n_i alpha_i` of the root lattice `Q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Membership in the non-negative cone `Q+` (which contains 0).
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add_simple(&self, i: usize, k: i32) -> Self {
        let mut v = self.0.clone();
        v[i] += k;
        Self(v)
    }

    /// All `delta` in `Q+` with `delta <= self` coordinatewise.
    pub fn sub_weights(&self) -> Vec<RootVector> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i32>| {
                    (0..=c.max(0)).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(RootVector).collect()
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integral weight, stored by its values `<lambda, h_i>` on the coroots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A symmetrizable generalized Cartan matrix `a_ij = <alpha_j, h_i>` with
/// symmetrizer `d_i = (alpha_i, alpha_i) / 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanDatum {
    name: String,
    gcm: Vec<Vec<i32>>,
    sym: Vec<i32>,
    /// `(alpha_i, alpha_j) = d_i a_ij`
    form: Vec<Vec<i32>>,
}

impl CartanDatum {
    /// Validates a GCM; infers the minimal symmetrizer when `sym` is `None`.
    pub fn new(name: impl Into<String>, gcm: Vec<Vec<i32>>, sym: Option<Vec<i32>>) -> Result<Self, CartanError> {
        let n = gcm.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        if gcm.iter().any(|row| row.len() != n) {
            return Err(CartanError::NotSquare);
        }
        for i in 0..n {
            if gcm[i][i] != 2 {
                return Err(CartanError::Diagonal(i));
            }
            for j in 0..n {
                if i != j {
                    if gcm[i][j] > 0 {
                        return Err(CartanError::Positive(i, j));
                    }
                    if (gcm[i][j] == 0) != (gcm[j][i] == 0) {
                        return Err(CartanError::ZeroPattern(i, j));
                    }
                }
            }
        }
        let sym = match sym {
            Some(d) => {
                if d.len() != n {
                    return Err(CartanError::RankMismatch { expected: n, got: d.len() });
                }
                if d.iter().any(|&x| x <= 0) {
                    return Err(CartanError::BadSymmetrizer);
                }
                for i in 0..n {
                    for j in 0..n {
                        if d[i] * gcm[i][j] != d[j] * gcm[j][i] {
                            return Err(CartanError::BadSymmetrizer);
                        }
                    }
                }
                d
            }
            None => infer_symmetrizer(&gcm)?,
        };
        let form = (0..n).map(|i| (0..n).map(|j| sym[i] * gcm[i][j]).collect()).collect();
        Ok(Self { name: name.into(), gcm, sym, form })
    }

    /// Named presets: `A1`, `A2`, `B2`, `G2`, `A1xA1`.
    ///
    /// `B2` has `alpha_1` long (`d = (2, 1)`), `G2` has `alpha_1` long (`d = (3, 1)`).
    pub fn preset(name: &str) -> Result<Self, CartanError> {
        let (gcm, sym) = match name {
            "A1" => (vec![vec![2]], vec![1]),
            "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            "G2" => (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            "A1xA1" => (vec![vec![2, 0], vec![0, 2]], vec![1, 1]),
            _ => return Err(CartanError::UnknownPreset(name.to_string())),
        };
        Self::new(name, gcm, Some(sym))
    }

    pub const PRESETS: [&'static str; 5] = ["A1", "A2", "B2", "G2", "A1xA1"];

    /// Parses the GCM file format: first line `n`, then `n` rows, then an
    /// optional line of symmetrizer entries. Blank lines and `#` comments are
    /// ignored.
    pub fn from_gcm_text(name: impl Into<String>, text: &str) -> Result<Self, CartanError> {
        let lines: Vec<Vec<i32>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i32>().map_err(|e| CartanError::Parse(format!("`{t}`: {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        let Some(first) = lines.first() else {
            return Err(CartanError::Parse("missing rank line".into()));
        };
        if first.len() != 1 || first[0] <= 0 {
            return Err(CartanError::Parse("first line must be a positive rank".into()));
        }
        let n = first[0] as usize;
        if lines.len() < n + 1 || lines.len() > n + 2 {
            return Err(CartanError::Parse(format!("expected {n} matrix rows and an optional symmetrizer line")));
        }
        let gcm: Vec<Vec<i32>> = lines[1..=n].to_vec();
        let sym = lines.get(n + 1).cloned();
        Self::new(name, gcm, sym)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.gcm.len()
    }

    /// `a_ij = <alpha_j, h_i>`.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.gcm[i][j]
    }

    pub fn gcm(&self) -> &[Vec<i32>] {
        &self.gcm
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.sym
    }

    /// `d_i`, so that `q_i = q^{d_i}`.
    pub fn d(&self, i: usize) -> i32 {
        self.sym[i]
    }

    /// `(alpha_i, alpha_j)`.
    pub fn form_simple(&self, i: usize, j: usize) -> i32 {
        self.form[i][j]
    }

    fn check_rank(&self, v: &[i32]) -> Result<(), CartanError> {
        if v.len() != self.rank() {
            return Err(CartanError::RankMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    /// `(gamma, delta) = sum n_i d_i a_ij m_j`.
    pub fn bilinear(&self, g: &RootVector, d: &RootVector) -> Result<i32, CartanError> {
        self.check_rank(&g.0)?;
        self.check_rank(&d.0)?;
        Ok(self.form(g, d))
    }

    /// Unchecked `(gamma, delta)`.
    pub fn form(&self, g: &RootVector, d: &RootVector) -> i32 {
        let mut acc = 0;
        for (i, &gi) in g.0.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &dj) in d.0.iter().enumerate() {
                acc += gi * self.form[i][j] * dj;
            }
        }
        acc
    }

    /// `(alpha_i, gamma)`.
    pub fn form_with_simple(&self, i: usize, g: &RootVector) -> i32 {
        g.0.iter().enumerate().map(|(j, &n)| self.form[i][j] * n).sum()
    }

    /// `<gamma, h_i> = sum_j n_j a_ij`.
    pub fn coroot_pairing(&self, i: usize, g: &RootVector) -> i32 {
        g.0.iter().enumerate().map(|(j, &n)| self.gcm[i][j] * n).sum()
    }

    /// The weight `gamma` viewed in `P`, i.e. its coroot values.
    pub fn root_to_weight(&self, g: &RootVector) -> Weight {
        Weight((0..self.rank()).map(|i| self.coroot_pairing(i, g)).collect())
    }

    pub fn simple_reflection(&self, i: usize, g: &RootVector) -> Result<RootVector, CartanError> {
        if i >= self.rank() {
            return Err(CartanError::BadIndex(i));
        }
        self.check_rank(&g.0)?;
        Ok(self.reflect(i, g))
    }

    /// Unchecked `s_i(gamma)`.
    pub fn reflect(&self, i: usize, g: &RootVector) -> RootVector {
        g.add_simple(i, -self.coroot_pairing(i, g))
    }

    /// `s_i(lambda) = lambda - <lambda, h_i> alpha_i`, on coroot coordinates.
    pub fn reflect_weight(&self, i: usize, l: &Weight) -> Weight {
        let c = l.0[i];
        Weight((0..self.rank()).map(|j| l.0[j] - c * self.gcm[j][i]).collect())
    }

    /// `<lambda, t_gamma> = sum_i n_i d_i <lambda, h_i>`.
    pub fn t_pairing(&self, l: &Weight, g: &RootVector) -> i32 {
        l.0.iter().zip(&g.0).zip(&self.sym).map(|((&li, &ni), &di)| li * ni * di).sum()
    }

    /// Order of `s_i s_j` in the Weyl group, `None` when infinite.
    pub fn coxeter_order(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return Some(1);
        }
        match self.gcm[i][j] * self.gcm[j][i] {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// Positive definiteness of the symmetrized matrix, by leading minors.
    pub fn is_finite_type(&self) -> bool {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = self
            .form
            .iter()
            .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        // Gaussian elimination without pivoting: every pivot is a ratio of
        // consecutive leading minors, so all pivots must be positive.
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for r in k + 1..n {
                let f = &m[r][k] / &m[k][k];
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = &f * &m[k][c];
                    m[r][c] -= v;
                }
            }
        }
        true
    }

    /// All positive roots by saturating simple reflections.
    pub fn positive_roots(&self) -> Result<Vec<RootVector>, CartanError> {
        if !self.is_finite_type() {
            return Err(CartanError::NotFiniteType);
        }
        let n = self.rank();
        let mut seen: BTreeSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        let mut queue: VecDeque<RootVector> = seen.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let s = self.reflect(i, &r);
                if s.is_nonneg() && !s.is_zero() && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        Ok(roots)
    }

    /// Number of ways to write `gamma` as a sum of positive roots with
    /// multiplicity (Kostant's partition function).
    pub fn kostant_count(&self, g: &RootVector) -> Result<u64, CartanError> {
        let roots = self.positive_roots()?;
        if !g.is_nonneg() {
            return Ok(0);
        }
        // classic coin-change over the finite box below gamma
        let mut table: HashMap<RootVector, u64> = HashMap::new();
        let boxes = g.sub_weights();
        for b in &boxes {
            table.insert(b.clone(), u64::from(b.is_zero()));
        }
        for r in &roots {
            let mut ordered = boxes.clone();
            ordered.sort_by_key(RootVector::height);
            for b in ordered {
                let prev = &b - r;
                if prev.is_nonneg() {
                    let add = table[&prev];
                    *table.get_mut(&b).unwrap() += add;
                }
            }
        }
        Ok(table[g])
    }

    /// Reduced word for the longest Weyl group element of a rank-2 datum,
    /// alternating `(0, 1, 0, ...)`.
    pub fn longest_word_rank2(&self) -> Result<Vec<usize>, CartanError> {
        if self.rank() != 2 {
            return Err(CartanError::RankMismatch { expected: 2, got: self.rank() });
        }
        let m = self.coxeter_order(0, 1).ok_or(CartanError::NotFiniteType)?;
        Ok((0..m).map(|k| k % 2).collect())
    }

    /// Every `gamma` in `Q+` of height exactly `h`.
    pub fn weights_of_height(&self, h: i32) -> Vec<RootVector> {
        compositions(h, self.rank()).into_iter().map(RootVector).collect()
    }

    /// Every `gamma` in `Q+` of height `1..=h`, ordered by height then coordinates.
    pub fn weights_up_to_height(&self, h: i32) -> Vec<RootVector> {
        (1..=h).flat_map(|k| self.weights_of_height(k)).collect()
    }
}

fn compositions(total: i32, parts: usize) -> Vec<Vec<i32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn infer_symmetrizer(gcm: &[Vec<i32>]) -> Result<Vec<i32>, CartanError> {
    let n = gcm.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || gcm[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Ratio::new(gcm[i][j] as i64, gcm[j][i] as i64);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => return Err(CartanError::NotSymmetrizable),
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| (x / g) as i32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i32]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn bilinear_examples() {
        let a1 = CartanDatum::preset("A1").unwrap();
        assert_eq!(a1.bilinear(&rv(&[1]), &rv(&[1])), Ok(2));
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.bilinear(&rv(&[1, 0]), &rv(&[0, 1])), Ok(-1));
        let b2 = CartanDatum::preset("B2").unwrap();
        assert_eq!(b2.bilinear(&rv(&[1, 0]), &rv(&[0, 1])), Ok(-2));
        assert!(matches!(a2.bilinear(&rv(&[1]), &rv(&[0, 1])), Err(CartanError::RankMismatch { .. })));
    }

    #[test]
    fn reflection_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.simple_reflection(0, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(a2.simple_reflection(0, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        assert!(a2.simple_reflection(5, &rv(&[0, 1])).is_err());
    }

    #[test]
    fn t_pairing_examples() {
        let a1 = CartanDatum::preset("A1").unwrap();
        assert_eq!(a1.t_pairing(&Weight(vec![1]), &rv(&[1])), 1);
        let b2 = CartanDatum::preset("B2").unwrap();
        assert_eq!(b2.t_pairing(&Weight(vec![0, 1]), &rv(&[1, 0])), 0);
        for name in CartanDatum::PRESETS {
            let c = CartanDatum::preset(name).unwrap();
            let n = c.rank();
            for i in 0..n {
                for j in 0..n {
                    let aj = RootVector::simple(n, j);
                    let ai = RootVector::simple(n, i);
                    assert_eq!(c.t_pairing(&c.root_to_weight(&aj), &ai), c.form(&aj, &ai));
                }
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A1xA1", 2)] {
            let c = CartanDatum::preset(name).unwrap();
            assert_eq!(c.positive_roots().unwrap().len(), count, "{name}");
        }
        let a2 = CartanDatum::preset("A2").unwrap();
        let roots: BTreeSet<_> = a2.positive_roots().unwrap().into_iter().collect();
        assert_eq!(roots, [rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])].into_iter().collect());
    }

    #[test]
    fn affine_is_rejected() {
        let a1_affine = CartanDatum::new("A1~", vec![vec![2, -2], vec![-2, 2]], None).unwrap();
        assert!(!a1_affine.is_finite_type());
        assert_eq!(a1_affine.positive_roots(), Err(CartanError::NotFiniteType));
    }

    #[test]
    fn symmetrizer_inference() {
        let g2 = CartanDatum::new("g", vec![vec![2, -1], vec![-3, 2]], None).unwrap();
        assert_eq!(g2.symmetrizer(), &[3, 1]);
        let c2 = CartanDatum::new("c", vec![vec![2, -2], vec![-1, 2]], None).unwrap();
        assert_eq!(c2.symmetrizer(), &[1, 2]);
        assert!(CartanDatum::new("x", vec![vec![2, -1], vec![0, 2]], None).is_err());
    }

    #[test]
    fn gcm_file_parsing() {
        let c = CartanDatum::from_gcm_text("f", "2\n2 -1\n-2 2\n").unwrap();
        assert_eq!(c.symmetrizer(), &[2, 1]);
        let c = CartanDatum::from_gcm_text("f", "# B2\n2\n2 -1\n-2 2\n4 2\n").unwrap();
        assert_eq!(c.symmetrizer(), &[4, 2]);
        assert!(CartanDatum::from_gcm_text("f", "2\n2 -1\n").is_err());
        assert!(CartanDatum::from_gcm_text("f", "2\n2 -1\n-2 2\n1 1\n").is_err());
    }

    #[test]
    fn kostant_counts() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.kostant_count(&rv(&[1, 1])).unwrap(), 2);
        assert_eq!(a2.kostant_count(&rv(&[2, 1])).unwrap(), 2);
        assert_eq!(a2.kostant_count(&rv(&[0, 0])).unwrap(), 1);
    }

    #[test]
    fn coxeter_relations_as_lattice_maps() {
        for name in ["A2", "B2", "G2", "A1xA1"] {
            let c = CartanDatum::preset(name).unwrap();
            let m = c.coxeter_order(0, 1).unwrap();
            for g in c.weights_up_to_height(3) {
                let mut v = g.clone();
                for _ in 0..m {
                    v = c.reflect(1, &c.reflect(0, &v));
                }
                assert_eq!(v, g, "{name}");
            }
            // no smaller power fixes both simple roots
            for k in 1..m {
                let moved = (0..2).any(|i| {
                    let probe = RootVector::simple(2, i);
                    let mut v = probe.clone();
                    for _ in 0..k {
                        v = c.reflect(1, &c.reflect(0, &v));
                    }
                    v != probe
                });
                assert!(moved, "{name}: order divides {k}");
            }
        }
    }
}
