use std::sync::Arc;

use super::{Pairing, PairingError};
use crate::algebra::Word;
use crate::cartan::RootVector;
use crate::scalars::linalg::laurent_pivots;
use crate::scalars::{LaurentPoly, Matrix, Scalar};

/// All words of weight `gamma`, in lexicographic order of generator indices.
pub fn words_of_weight(g: &RootVector) -> Vec<Word> {
    fn rec(rem: &mut Vec<i32>, cur: &mut Word, out: &mut Vec<Word>) {
        if rem.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if g.is_nonneg() {
        rec(&mut g.0.clone(), &mut Word::new(), &mut out);
    }
    out
}

/// `tau` on all `e`-words against all `f`-words of one weight.
///
/// Entries are stored divided by `scale = prod tau(e_j, f_j)^{n_j}`, which
/// makes them integral Laurent polynomials. Rows index `e`-words, columns
/// `f`-words; both use the list `words`.
#[derive(Debug)]
pub struct GramBlock {
    pub weight: RootVector,
    pub words: Vec<Word>,
    pub normalized: Vec<Vec<LaurentPoly>>,
    pub scale: Scalar,
    /// First independent rows; their `e`-words form a basis of `U^+_gamma`.
    pub pivot_rows: Vec<usize>,
    /// First independent columns; their `f`-words form a basis of `U^-_{-gamma}`.
    pub pivot_cols: Vec<usize>,
    /// Inverse of the normalized pivot submatrix, indexed `[col][row]`.
    pub normalized_inverse: Matrix,
}

impl GramBlock {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn entry(&self, a: usize, b: usize) -> Scalar {
        &Scalar::from_laurent(self.normalized[a][b].clone()) * &self.scale
    }

    /// Full matrix of pairing values.
    pub fn matrix(&self) -> Matrix {
        let n = self.words.len();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                m.set(a, b, self.entry(a, b));
            }
        }
        m
    }

    /// `G[P, Q]^{-1}` in true (unnormalized) values, indexed `[col][row]`.
    pub fn inverse(&self) -> Matrix {
        self.normalized_inverse.scale(&self.scale.inv().unwrap())
    }

    pub fn pivot_ewords(&self) -> impl Iterator<Item = &Word> {
        self.pivot_rows.iter().map(|&a| &self.words[a])
    }

    pub fn pivot_fwords(&self) -> impl Iterator<Item = &Word> {
        self.pivot_cols.iter().map(|&b| &self.words[b])
    }
}

impl Pairing {
    pub fn gram_block(&self, g: &RootVector) -> Result<Arc<GramBlock>, PairingError> {
        if !g.is_nonneg() {
            return Err(PairingError::NotInCone(g.clone()));
        }
        if let Some(b) = self.grams.read().unwrap().get(g) {
            return Ok(b.clone());
        }
        let words = words_of_weight(g);
        let normalized: Vec<Vec<LaurentPoly>> =
            words.iter().map(|e| words.iter().map(|f| self.tau_normalized(e, f)).collect()).collect();
        let (pivot_rows, pivot_cols) = laurent_pivots(&normalized);
        let sub = Matrix::from_rows(
            pivot_rows
                .iter()
                .map(|&a| pivot_cols.iter().map(|&b| Scalar::from_laurent(normalized[a][b].clone())).collect())
                .collect(),
        );
        let inv = if sub.rows() == 0 { Matrix::zeros(0, 0) } else { sub.inverse().ok_or_else(|| PairingError::Singular(g.clone()))? };
        // inverse of G[P,Q] is indexed [q-index][p-index]
        let block = Arc::new(GramBlock {
            weight: g.clone(),
            words,
            normalized,
            scale: self.weight_scale(g),
            pivot_rows,
            pivot_cols,
            normalized_inverse: inv,
        });
        self.grams.write().unwrap().entry(g.clone()).or_insert(block.clone());
        Ok(block)
    }

    /// Golden-file lines `gamma; eword; fword; value` for one block.
    pub fn gram_lines(&self, g: &RootVector) -> Result<Vec<String>, PairingError> {
        let b = self.gram_block(g)?;
        let render = |w: &Word| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        let mut lines = Vec::new();
        for (a, e) in b.words.iter().enumerate() {
            for (c, f) in b.words.iter().enumerate() {
                lines.push(format!("{g}; e[{}]; f[{}]; {}", render(e), render(f), b.entry(a, c)));
            }
        }
        lines.sort();
        Ok(lines)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::cartan::CartanDatum;

    fn pairing(name: &str) -> Pairing {
        Pairing::new(Arc::new(Algebra::new(CartanDatum::preset(name).unwrap())))
    }

    #[test]
    fn word_enumeration() {
        let w = words_of_weight(&RootVector(vec![2, 1]));
        let expected: Vec<Word> = [[0u8, 0, 1], [0, 1, 0], [1, 0, 0]].iter().map(|s| Word::from_slice(s)).collect();
        assert_eq!(w, expected);
        assert_eq!(words_of_weight(&RootVector(vec![0, 0])), vec![Word::new()]);
    }

    #[test]
    fn gram_examples() {
        let p = pairing("A2");
        let b0 = p.gram_block(&RootVector(vec![0, 0])).unwrap();
        assert_eq!(b0.rank(), 1);
        assert!(b0.entry(0, 0).is_one());
        let b = p.gram_block(&RootVector(vec![1, 1])).unwrap();
        assert_eq!((b.words.len(), b.rank()), (2, 2));
        let b = p.gram_block(&RootVector(vec![2, 1])).unwrap();
        assert_eq!((b.words.len(), b.rank()), (3, 2));
        assert!(p.gram_block(&RootVector(vec![-1, 1])).is_err());
    }

    #[test]
    fn inverse_is_inverse() {
        let p = pairing("B2");
        let b = p.gram_block(&RootVector(vec![1, 2])).unwrap();
        let m = b.matrix();
        let sub = Matrix::from_rows(
            b.pivot_rows.iter().map(|&a| b.pivot_cols.iter().map(|&c| m.get(a, c).clone()).collect()).collect(),
        );
        let prod = sub.mul(&b.inverse());
        assert_eq!(prod, Matrix::identity(b.rank()));
    }

    #[test]
    fn ranks_match_kostant_counts() {
        for name in ["A2", "B2", "G2"] {
            let p = pairing(name);
            let d = p.algebra().datum().clone();
            for g in d.weights_up_to_height(4) {
                let b = p.gram_block(&g).unwrap();
                assert_eq!(b.rank() as u64, d.kostant_count(&g).unwrap(), "{name} {g}");
            }
        }
    }
}
