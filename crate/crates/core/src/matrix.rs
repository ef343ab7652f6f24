//! Dense matrices over a prime field.

use crate::field::{PrimeField, Scalar};
use std::fmt;

/// Column vector of canonical residues.
pub type Vector = Vec<Scalar>;

/// A dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&a| a < field.p()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds from signed integer rows, reducing mod p.
    pub fn from_rows_i64(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&a| field.from_i64(a)));
        }
        Matrix::from_data(field, r, c, data)
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(field: PrimeField, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &a) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = a;
            }
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, a: Scalar) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = a;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, a: Scalar) {
        self.data[i * self.cols + j] = a;
    }
    pub fn add_at(&mut self, i: usize, j: usize, a: Scalar) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(self.data[k], a);
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Scalar))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; other.cols];
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        // entries < 2^31, so 4 products fit in u64 before reduction is needed
        let threshold = u64::MAX - (p - 1) * (p - 1);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (s, &b) in acc.iter_mut().zip(orow) {
                    *s += a * b as u64;
                    if *s >= threshold {
                        *s %= p;
                    }
                }
            }
            for (j, s) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = (s % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut s = 0u64;
                for (&a, &b) in row.iter().zip(v) {
                    s = (s + a as u64 * b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, c, b);
        }
    }

    /// Kronecker product with `self`'s index major.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] =
                            f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let rows = blocks[0].rows;
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + b.cols].copy_from_slice(b.row(i));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let cols = blocks[0].cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix::from_data(f, rows, cols, data)
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + k] = self.get(i, j);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix::from_data(self.field, idx.len(), self.cols, data)
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(0, |s, i| self.field.add(s, self.get(i, i)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over F_{} [",
            self.rows,
            self.cols,
            self.field.p()
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Vector helpers shared across modules.
pub mod vec_ops {
    use super::Vector;
    use crate::field::{PrimeField, Scalar};

    pub fn zero(n: usize) -> Vector {
        vec![0; n]
    }

    pub fn unit(n: usize, i: usize) -> Vector {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    pub fn add(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn sub(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn scale(f: &PrimeField, c: Scalar, a: &[Scalar]) -> Vector {
        a.iter().map(|&x| f.mul(c, x)).collect()
    }

    /// `a += c * b`
    pub fn axpy(f: &PrimeField, a: &mut [Scalar], c: Scalar, b: &[Scalar]) {
        if c == 0 {
            return;
        }
        for (x, &y) in a.iter_mut().zip(b) {
            *x = f.mul_add(*x, c, y);
        }
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn dot(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter().zip(b).fold(0, |s, (&x, &y)| f.mul_add(s, x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f17() -> PrimeField {
        PrimeField::new(17, 2).unwrap()
    }

    #[test]
    fn product_and_kron() {
        let f = f17();
        let a = Matrix::from_rows_i64(f, &[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows_i64(f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            a.mul(&b),
            Matrix::from_rows_i64(f, &[vec![2, 1], vec![4, 3]])
        );
        let k = a.kron(&Matrix::identity(f, 2));
        assert_eq!(k.get(0, 0), 1);
        assert_eq!(k.get(1, 1), 1);
        assert_eq!(k.get(2, 0), 3);
        assert_eq!(k.get(0, 2), 2);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn stacking() {
        let f = f17();
        let a = Matrix::identity(f, 2);
        let h = Matrix::hstack(&[&a, &a]);
        assert_eq!((h.rows(), h.cols()), (2, 4));
        let v = Matrix::vstack(&[&a, &a]);
        assert_eq!((v.rows(), v.cols()), (4, 2));
        let d = Matrix::block_diag(f, &[&a, &a]);
        assert!(d.is_identity());
    }
}
