//! Dense matrices over a [`Scalar`] and row-reduction based linear algebra.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> =
                self.data[r * self.cols..(r + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect())
    }

    pub fn diag(entries: &[S]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::<S>::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn neg(&self) -> Matrix<S> {
        self.map(|x| -x.clone())
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Matrix<S> {
        self.map(|x| x.conj())
    }

    pub fn adjoint(&self) -> Matrix<S> {
        self.transpose().conj()
    }

    pub fn real_part(&self) -> Matrix<S> {
        self.map(|x| x.re())
    }

    pub fn imag_part(&self) -> Matrix<S> {
        self.map(|x| x.im())
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn kron(&self, other: &Matrix<S>) -> Matrix<S> {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self[(r / other.rows, c / other.cols)].clone() * other[(r % other.rows, c % other.cols)].clone()
        })
    }

    pub fn block_diag(blocks: &[Matrix<S>]) -> Matrix<S> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Square sub-block with the given row/column index set.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<S> {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![S::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let m = &self[(r, c)];
                if !m.is_zero() {
                    *o = o.clone() + x.clone() * m.clone();
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn approx_eq(&self, other: &Matrix<S>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.approx_eq(&Matrix::identity(self.rows))
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(Scalar::norm).fold(0.0, f64::max)
    }

    pub fn pow(&self, k: u32) -> Matrix<S> {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn det(&self) -> S {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = S::one();
        for col in 0..n {
            let Some(p) = pivot_row(&m, col, col) else {
                return S::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m[(col, col)].clone();
            det = det * pv.clone();
            let inv = pv.inv().expect("pivot is non-zero");
            for r in col + 1..n {
                let f = m[(r, col)].clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * m[(col, c)].clone();
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::<S>::identity(n);
        for col in 0..n {
            let p = pivot_row(&a, col, col)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pv = a[(col, col)].inv()?;
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() * pv.clone();
                inv[(col, c)] = inv[(col, c)].clone() * pv.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(col, c)].clone();
                    inv[(r, c)] = inv[(r, c)].clone() - f.clone() * inv[(col, c)].clone();
                }
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.clone()).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Exact backends take the first non-zero entry; the float backend takes the largest.
fn pivot_row<S: Scalar>(m: &Matrix<S>, col: usize, start: usize) -> Option<usize> {
    if S::EXACT {
        (start..m.rows).find(|&r| !m[(r, col)].is_zero())
    } else {
        let scale = m.max_norm().max(1.0);
        (start..m.rows)
            .map(|r| (r, m[(r, col)].norm()))
            .filter(|&(_, v)| v > 1e-11 * scale)
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(r, _)| r)
    }
}

/// Reduced row echelon form together with the pivot columns.
pub fn row_reduce<S: Scalar>(mut m: Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = pivot_row(&m, col, row) else {
            continue;
        };
        m.swap_rows(p, row);
        let inv = m[(row, col)].inv().expect("pivot is non-zero");
        for c in col..m.cols {
            m[(row, c)] = m[(row, c)].clone() * inv.clone();
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let f = m[(r, col)].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..m.cols {
                m[(r, c)] = m[(r, c)].clone() - f.clone() * m[(row, c)].clone();
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

/// A solution of `a·x = b` if one exists (free variables set to zero).
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let aug = Matrix::from_fn(a.rows(), n + 1, |r, c| if c < n { a[(r, c)].clone() } else { b[r].clone() });
    let (red, pivots) = row_reduce(aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = red[(row, n)].clone();
    }
    Some(x)
}

/// A basis of the kernel of `a`.
pub fn nullspace<S: Scalar>(a: &Matrix<S>) -> Vec<Vec<S>> {
    let n = a.cols();
    let (red, pivots) = row_reduce(a.clone());
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); n];
            v[f] = S::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -red[(row, f)].clone();
            }
            v
        })
        .collect()
}
