//! Gaussian elimination over an exact field.

use crate::coeff::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<C>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Matrix<C>) -> Matrix<C> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = C::Acc::default();
                for k in 0..self.cols {
                    C::acc_add(&mut acc, self.get(i, k), o.get(k, j));
                }
                out.set(i, j, C::acc_finish(acc));
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<C>) -> Matrix<C> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &C) -> Matrix<C> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn trace(&self) -> C {
        (0..self.rows.min(self.cols)).fold(C::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else { continue };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, p * self.cols + j);
            }
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let f = self.get(i, col).clone();
                for j in col..self.cols {
                    let v = self.get(i, j).sub(&f.mul(self.get(row, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<C>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, C::one());
        }
        let pivots = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// `self · v`.
    pub fn apply(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = C::Acc::default();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !b.is_zero() {
                        C::acc_add(&mut acc, a, b);
                    }
                }
                C::acc_finish(acc)
            })
            .collect()
    }

    pub fn det(&self) -> C {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = C::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&i| !m.get(i, col).is_zero()) else { return C::zero() };
            if p != col {
                for j in 0..m.cols {
                    m.data.swap(col * m.cols + j, p * m.cols + j);
                }
                det = det.neg();
            }
            let piv = m.get(col, col).clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("pivot is nonzero");
            for i in col + 1..m.rows {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).mul(&inv);
                for j in col..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// Solves `Σ_i x_i · vectors[i] = target`; `None` when the target is outside the span
/// or the vectors are dependent.
pub fn express<C: Field>(vectors: &[Vec<C>], target: &[C]) -> Option<Vec<C>> {
    let k = vectors.len();
    let dim = target.len();
    // augmented system with the vectors as columns
    let mut m = Matrix::zeros(dim, k + 1);
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    for (i, x) in target.iter().enumerate() {
        m.set(i, k, x.clone());
    }
    let pivots = m.echelon();
    if pivots.len() != k || pivots.contains(&k) {
        return None;
    }
    Some((0..k).map(|i| m.get(i, k).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(v: i64) -> BigRational {
        <BigRational as Field>::from_i64(v)
    }

    #[test]
    fn rank_det_and_solve() {
        let m = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]);
        assert_eq!(m.det(), r(-2));
        assert_eq!(m.rank(), 2);
        let s = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]);
        assert_eq!(s.rank(), 1);
        assert!(s.det().is_zero());
        let x = express(&[vec![r(1), r(0)], vec![r(1), r(1)]], &[r(3), r(2)]).unwrap();
        assert_eq!(x, vec![r(1), r(2)]);
        assert!(express(&[vec![r(1), r(0)]], &[r(0), r(1)]).is_none());
        assert_eq!(m.mul(&Matrix::identity(2)), m);
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
        assert!(s.inverse().is_none());
        assert_eq!(m.apply(&[r(1), r(1)]), vec![r(3), r(7)]);
    }
}
