//! Dense matrices over a [`Field`], with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries(
                self.row_iter()
                    .map(|r| r.iter().map(|&a| self.field.format(a)).collect::<Vec<_>>()),
            )
            .finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|&a| self.field.format(a)).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` fixes the width
    /// when `rows` is empty.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Fe>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
            if r.iter().any(|&a| !field.contains(a)) {
                return Err(Error::MismatchedField);
            }
            data.extend(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, a: Fe) {
        self.data[i * self.cols + j] = a;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Fe]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        self.row_iter().map(<[Fe]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> Matrix {
        let k = k.min(self.rows);
        Matrix {
            field: self.field.clone(),
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// The submatrix formed by the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            data.extend(cols.iter().map(|&j| self.get(i, j)));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MismatchedField);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| f.sum(self.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b))))
            .collect())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // eliminate on the thinner orientation
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.rref().1.len()
    }

    /// A basis of the right nullspace `{v : M vᵀ = 0}`, one vector per row.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, Fe::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(i, fc)));
            }
        }
        basis
    }

    /// A basis of the row space in reduced echelon form.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.top_rows(pivots.len())
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_space_basis() == other.row_space_basis()
    }

    pub fn row_space_contains(&self, v: &[Fe]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let mut rows = self.to_rows();
        rows.push(v.to_vec());
        let ext = Matrix {
            field: self.field.clone(),
            rows: self.rows + 1,
            cols: self.cols,
            data: rows.concat(),
        };
        ext.rank() == self.rank()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fe::ONE);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::presets;

    fn f4() -> Field {
        Field::new(presets::f4())
    }

    #[test]
    fn identity_inverse_and_rank() {
        let f = f4();
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i3.rank(), 3);
        assert_eq!(i3.inverse().unwrap(), i3);
        let w = f.generator();
        let m = Matrix::from_rows(&f, vec![vec![w, Fe::ONE], vec![Fe::ONE, w]], 2).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 2));
    }

    #[test]
    fn singular_matrix() {
        let f = f4();
        let w = f.generator();
        let w2 = f.mul(w, w);
        // second row is w times the first
        let m = Matrix::from_rows(&f, vec![vec![Fe::ONE, w], vec![w, w2]], 2).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
    }

    #[test]
    fn nullspace_dimension() {
        let f = Field::new(presets::f8());
        let a = f.generator();
        let rows = vec![
            vec![Fe::ONE, a, Fe::ZERO, a, Fe::ONE],
            vec![Fe::ZERO, Fe::ONE, a, Fe::ONE, Fe::ZERO],
            vec![Fe::ONE, f.add(a, Fe::ONE), a, f.add(a, Fe::ONE), Fe::ONE],
        ];
        let m = Matrix::from_rows(&f, rows, 5).unwrap();
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 3);
        assert_eq!(ns.rank(), 3);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
        assert!(m.row_space_contains(&[Fe::ONE, f.add(a, Fe::ONE), a, f.add(a, Fe::ONE), Fe::ONE]));
        assert!(!m.row_space_contains(&[Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO]));
    }

    #[test]
    fn dimension_errors() {
        let f = f4();
        let a = Matrix::zeros(&f, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(Matrix::from_rows(&f, vec![vec![Fe::ONE]], 2).is_err());
        assert!(a.inverse().is_err());
    }
}
