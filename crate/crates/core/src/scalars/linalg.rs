//! Exact dense linear algebra over `Q(q)`, plus fraction-free elimination
//! over the Laurent ring for rank and pivot selection.

use std::fmt;

use super::{LaurentPoly, Scalar};

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let slot = &mut self.data[r * self.cols + c];
        *slot = &*slot + v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| if x.is_zero() { Scalar::zero() } else { x * s }).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product, rows and columns ordered lexicographically.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// True when some power of the matrix vanishes; returns the least such
    /// exponent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        let mut p = Matrix::identity(self.rows);
        for k in 0..=self.rows {
            if p.is_zero() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().unwrap();
            for c in col..self.cols {
                let v = self.get(row, c);
                if !v.is_zero() {
                    let nv = v * &inv;
                    self.set(row, c, nv);
                }
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let pv = self.get(row, c);
                    if !pv.is_zero() {
                        let nv = self.get(r, c) - &(&f * pv);
                        self.set(r, c, nv);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column, in the
    /// order of the free columns.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        Some(self.inverse()?.mul_vec(b))
    }
}

/// One row per line, entries separated by `; `.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join("; "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Fraction-free (Bareiss) forward elimination over `Q[q, q^{-1}]`.
///
/// Columns are scanned left to right and the first available nonzero row is
/// used as pivot, so the returned pivot columns are the lexicographically
/// first maximal independent set of columns.
pub fn fraction_free_pivot_columns(mut m: Vec<Vec<LaurentPoly>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = LaurentPoly::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let lhs = &m[row][col] * &m[r][c];
                let rhs = &m[r][col] * &m[row][c];
                let num = &lhs - &rhs;
                m[r][c] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[r][col] = LaurentPoly::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Lexicographically first independent rows and columns of a Laurent matrix.
pub fn laurent_pivots(m: &[Vec<LaurentPoly>]) -> (Vec<usize>, Vec<usize>) {
    let cols = fraction_free_pivot_columns(m.to_vec());
    let ncols = m.first().map_or(0, Vec::len);
    let t: Vec<Vec<LaurentPoly>> =
        (0..ncols).map(|c| m.iter().map(|row| row[c].clone()).collect()).collect();
    let rows = fraction_free_pivot_columns(t);
    (rows, cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Scalar {
        Scalar::q_pow(e)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![vec![q(1), Scalar::one()], vec![Scalar::one(), q(-1)]]);
        // det = 0 for this one
        assert!(m.inverse().is_none());
        let m = Matrix::from_rows(vec![vec![q(1), Scalar::one()], vec![Scalar::from_int(2), q(-1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_rows(vec![vec![q(1), Scalar::one()], vec![q(2), q(1)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn bareiss_rank_matches_field_rank() {
        let p = |e: i32| LaurentPoly::q_pow(e);
        let rows = vec![
            vec![p(1), p(0), &p(1) + &p(-1)],
            vec![p(2), p(1), &p(2) + &p(0)],
            vec![p(0), p(3), p(-2)],
        ];
        let (r, c) = laurent_pivots(&rows);
        let field = Matrix::from_rows(
            rows.iter().map(|row| row.iter().cloned().map(Scalar::from_laurent).collect()).collect(),
        );
        assert_eq!(c.len(), field.rank());
        assert_eq!(r, vec![0, 2]);
        assert_eq!(c, vec![0, 1]);
    }

    #[test]
    fn kron_shape() {
        let a = Matrix::identity(2);
        let b = Matrix::from_rows(vec![vec![q(1), q(2), q(3)]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k.get(1, 4), &q(2));
    }
}
