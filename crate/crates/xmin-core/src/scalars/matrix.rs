use std::fmt;

use serde::{Serialize, Serializer};

use super::{GaussQ, Ring};
use crate::error::XminError;

/// Dense row-major matrix over a commutative ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, XminError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(XminError::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix<T>) -> Result<Self, XminError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(XminError::Dimension(format!("stack {} vs {} columns", self.cols, other.cols)));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity_like(n: usize, one: &T) -> Self {
        let zero = one.zero_like();
        Matrix::from_fn(n, n, |r, c| if r == c { one.clone() } else { zero.clone() })
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Result<Self, XminError> {
        if self.cols != other.rows {
            return Err(XminError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.data.first().or(other.data.first()).map(|x| x.zero_like());
        let Some(zero) = zero else {
            return Err(XminError::Dimension("empty matrix product".into()));
        };
        Ok(Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(r, k);
                let b = other.get(k, c);
                if a.is_zero_elem() || b.is_zero_elem() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b));
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, XminError> {
        let col = Matrix::from_fn(v.len(), 1, |r, _| v[r].clone());
        Ok(self.matmul(&col)?.data)
    }

    /// Determinant of the square submatrix on the given rows and columns (Laplace expansion).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> T {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => self.data[0].one_like(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = self.data[0].zero_like();
                let sub_rows = &rows[1..];
                for (j, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero_elem() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect();
                    let term = a.mul_ref(&self.minor(sub_rows, &sub_cols));
                    acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
                }
                acc
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_elem())
    }
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix<GaussQ>,
    pub pivots: Vec<usize>,
}

impl Matrix<GaussQ> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| GaussQ::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { GaussQ::one() } else { GaussQ::zero() })
    }

    /// Row echelon form by Gaussian elimination, pivoting on the first nonzero entry of each
    /// column; rows whose leading entry is already zero are left untouched.
    pub fn echelon(&self) -> Echelon {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let piv_inv = a.get(r, c).inv().expect("nonzero pivot");
            let support: Vec<usize> = (c + 1..a.cols).filter(|&j| !a.get(r, j).is_zero()).collect();
            for i in r + 1..a.rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c) * &piv_inv;
                for &j in &support {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
                a.set(i, c, GaussQ::zero());
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right kernel, each vector scaled so its first nonzero entry is 1.
    pub fn kernel(&self) -> Vec<Vec<GaussQ>> {
        let Echelon { matrix: a, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![GaussQ::zero(); self.cols];
            x[f] = GaussQ::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut s = GaussQ::zero();
                for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                    if !xj.is_zero() && !a.get(r, j).is_zero() {
                        s += &(a.get(r, j) * xj);
                    }
                }
                x[pc] = -&(&s / a.get(r, pc));
            }
            basis.push(normalize_leading(x));
        }
        basis
    }

    /// Any `x` with `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[GaussQ]) -> Result<Option<Vec<GaussQ>>, XminError> {
        if b.len() != self.rows {
            return Err(XminError::Dimension(format!("rhs length {} for {} rows", b.len(), self.rows)));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let Echelon { matrix: e, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussQ::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = e.get(r, self.cols).clone();
            for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                if !xj.is_zero() {
                    s -= &(e.get(r, j) * xj);
                }
            }
            x[pc] = &s / e.get(r, pc);
        }
        Ok(Some(x))
    }

    /// Gauss–Jordan inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self, XminError> {
        if self.rows != self.cols {
            return Err(XminError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(XminError::Singular)?;
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
                inv.data.swap(p * n + j, c * n + j);
            }
            let s = a.get(c, c).inv()?;
            for j in 0..n {
                a.set(c, j, a.get(c, j) * &s);
                inv.set(c, j, inv.get(c, j) * &s);
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j) - &(&f * a.get(c, j)));
                    inv.set(i, j, inv.get(i, j) - &(&f * inv.get(c, j)));
                }
            }
        }
        Ok(inv)
    }

    /// Whether the two matrices have the same row space.
    pub fn same_row_space(&self, other: &Matrix<GaussQ>) -> Result<bool, XminError> {
        let r1 = self.rank();
        let r2 = other.rank();
        Ok(r1 == r2 && self.stack(other)?.rank() == r1)
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix<GaussQ>) -> Result<bool, XminError> {
        Ok(self.stack(other)?.rank() == self.rank())
    }
}

/// Scales a vector so that its first nonzero entry equals 1.
pub fn normalize_leading(v: Vec<GaussQ>) -> Vec<GaussQ> {
    match v.iter().find(|x| !x.is_zero()).cloned() {
        Some(lead) if !lead.is_one() => {
            let inv = lead.inv().expect("nonzero leading entry");
            v.iter().map(|x| x * &inv).collect()
        }
        _ => v,
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &self.data).finish()
    }
}

impl<T: Serialize + Clone> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussQ {
        GaussQ::from_int(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(7, 12).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel().is_empty());
        let m = Matrix::from_rows(vec![vec![q(1), q(1)]]).unwrap();
        assert_eq!(m.kernel(), vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn kernel_skips_zero_columns() {
        let m = Matrix::from_rows(vec![vec![q(0), q(2), q(4)], vec![q(0), q(1), q(2)]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel(), vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), GaussQ::ratio(-1, 2)]]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![q(0), GaussQ::i()], vec![q(2), q(1)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::<GaussQ>::zeros(2, 2).inverse().is_err());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        let x = m.solve(&[q(3), q(6)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q(3), q(6)]);
        assert_eq!(m.solve(&[q(3), q(5)]).unwrap(), None);
    }

    #[test]
    fn minor_is_determinant() {
        let m = Matrix::from_rows(vec![vec![q(2), q(0), q(1)], vec![q(1), q(3), q(2)], vec![q(1), q(1), q(2)]]).unwrap();
        assert_eq!(m.minor(&[0, 1, 2], &[0, 1, 2]), q(6));
    }
}
