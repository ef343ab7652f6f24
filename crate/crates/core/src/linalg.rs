//! Exact Gaussian elimination.
//!
//! Pivots are always the first nonzero entry in column order, so every basis
//! produced here is reproducible byte-for-byte.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::matrix::{vec_ops, Matrix, Vector};

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in place.
/// Returns the pivot columns; the first `pivots.len()` rows are the nonzero rows.
fn rref_in_place(f: &PrimeField, rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    rref_pivots_limited(f, rows, cols)
}

/// Full reduction data for a matrix `M`.
#[derive(Clone, Debug)]
pub struct RowReduction {
    field: PrimeField,
    rows: usize,
    cols: usize,
    rref: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// `transform * M = rref` (padded with zero rows)
    transform: Vec<Vec<Scalar>>,
    image: Vec<Vector>,
}

impl RowReduction {
    pub fn new(m: &Matrix) -> Self {
        let f = m.field();
        let (rows, cols) = (m.rows(), m.cols());
        // augment with the identity and reduce on the first `cols` columns only
        let mut aug: Vec<Vec<Scalar>> = (0..rows)
            .map(|i| {
                let mut r = m.row(i).to_vec();
                r.extend((0..rows).map(|j| (i == j) as Scalar));
                r
            })
            .collect();
        let pivots = rref_pivots_limited(&f, &mut aug, cols);
        let rank = pivots.len();
        let mut rref = Vec::with_capacity(rank);
        let mut transform = Vec::with_capacity(rows);
        for (i, row) in aug.into_iter().enumerate() {
            let (a, t) = row.split_at(cols);
            if i < rank {
                rref.push(a.to_vec());
            }
            transform.push(t.to_vec());
        }
        let image = pivots.iter().map(|&c| m.col(c)).collect();
        RowReduction {
            field: f,
            rows,
            cols,
            rref,
            pivots,
            transform,
            image,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rref_rows(&self) -> &[Vec<Scalar>] {
        &self.rref
    }

    /// Basis of the kernel, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        kernel_from_rref(&self.field, &self.rref, &self.pivots, self.cols)
    }

    /// Basis of the column space: the pivot columns of the original matrix.
    pub fn image_basis(&self) -> &[Vector] {
        &self.image
    }

    /// One solution of `M x = rhs`.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vector> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let f = &self.field;
        let y: Vec<Scalar> = self
            .transform
            .iter()
            .map(|t| vec_ops::dot(f, t, rhs))
            .collect();
        if y[self.rank()..].iter().any(|&a| a != 0) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![0; self.cols];
        for (i, &c) in self.pivots.iter().enumerate() {
            x[c] = y[i];
        }
        Ok(x)
    }
}

/// Like [`rref_in_place`] but only pivots within the first `limit` columns while
/// applying the row operations to the full rows (used for augmented systems).
fn rref_pivots_limited(f: &PrimeField, rows: &mut [Vec<Scalar>], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        if inv != 1 {
            for a in rows[r].iter_mut() {
                *a = f.mul(*a, inv);
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let a = other[c];
            if a != 0 {
                let m = f.neg(a);
                for (x, &y) in other[c..].iter_mut().zip(&prow[c..]) {
                    *x = f.mul_add(*x, m, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(
    f: &PrimeField,
    rref: &[Vec<Scalar>],
    pivots: &[usize],
    cols: usize,
) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = vec![0; cols];
            v[j] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(rref[i][j]);
            }
            v
        })
        .collect()
}

/// Free-function form: rank, kernel basis, image basis and a solver.
pub fn row_reduce(m: &Matrix) -> RowReduction {
    RowReduction::new(m)
}

/// Rank without keeping a transform.
pub fn rank(m: &Matrix) -> usize {
    let f = m.field();
    // eliminate along the shorter side
    let mt;
    let src = if m.rows() > m.cols() {
        mt = m.transpose();
        &mt
    } else {
        m
    };
    let mut rows = src.to_rows();
    rref_in_place(&f, &mut rows, src.cols()).len()
}

/// Kernel basis without keeping a transform.
pub fn kernel(m: &Matrix) -> Vec<Vector> {
    let f = m.field();
    let mut rows = m.to_rows();
    let pivots = rref_in_place(&f, &mut rows, m.cols());
    rows.truncate(pivots.len());
    kernel_from_rref(&f, &rows, &pivots, m.cols())
}

/// Kernel of the linear map given by a system of equation rows, built
/// incrementally so that very tall systems never materialise.
pub struct KernelBuilder {
    field: PrimeField,
    cols: usize,
    basis: Subspace,
}

impl KernelBuilder {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        KernelBuilder {
            field,
            cols,
            basis: Subspace::new(field, cols),
        }
    }

    pub fn push(&mut self, equation: Vector) {
        debug_assert_eq!(equation.len(), self.cols);
        self.basis.insert(equation);
    }

    pub fn rank(&self) -> usize {
        self.basis.dim()
    }

    pub fn finish(self) -> Vec<Vector> {
        kernel_from_rref(&self.field, &self.basis.rows, &self.basis.pivots, self.cols)
    }
}

/// A subspace of `F_p^n` held in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a>(
        field: PrimeField,
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a Vector>,
    ) -> Self {
        let mut s = Subspace::new(field, ambient);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residual of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = w[c];
            if a != 0 {
                vec_ops::axpy(f, &mut w, f.neg(a), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_ops::is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let f = self.field;
        let mut w = self.reduce(&v);
        let Some(c) = w.iter().position(|&a| a != 0) else {
            return false;
        };
        let inv = f.inv(w[c]);
        for a in w.iter_mut() {
            *a = f.mul(*a, inv);
        }
        for row in self.rows.iter_mut() {
            let a = row[c];
            if a != 0 {
                vec_ops::axpy(&f, row, f.neg(a), &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, w);
        true
    }

    /// Indices of standard basis vectors spanning a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Expresses each column of `targets` in terms of the columns of `basis`,
/// which must be linearly independent. Returns the coefficient matrix.
pub fn coordinates(basis: &Matrix, targets: &Matrix) -> Result<Matrix> {
    let rr = RowReduction::new(basis);
    if rr.rank() != basis.cols() {
        return Err(Error::Invariant("coordinate basis is dependent".into()));
    }
    let cols: Result<Vec<Vector>> = targets.columns().iter().map(|t| rr.solve(t)).collect();
    Ok(Matrix::from_cols(basis.field(), basis.cols(), &cols?))
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let rr = RowReduction::new(m);
    if rr.rank() != m.rows() {
        return None;
    }
    Some(Matrix::from_data(
        m.field(),
        m.rows(),
        m.rows(),
        rr.transform.concat(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn f17() -> PrimeField {
        PrimeField::new(17, 2).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = f17();
        let rr = row_reduce(&Matrix::identity(f, 3));
        assert_eq!(rr.rank(), 3);
        assert!(rr.kernel_basis().is_empty());
        let rr = row_reduce(&Matrix::zeros(f, 2, 5));
        assert_eq!(rr.rank(), 0);
        assert_eq!(rr.kernel_basis().len(), 5);
        assert!(matches!(
            rr.solve(&[0, 0, 0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn two_by_two_determinant_rank() {
        // [[a, b], [c, d]] has rank 2 iff ad - bc != 0, rank 1 otherwise (nonzero)
        let f = f17();
        for (a, b, c, d) in [(1, 2, 2, 4), (1, 2, 3, 4), (0, 1, 0, 5), (3, 0, 0, 7)] {
            let m = Matrix::from_rows_i64(f, &[vec![a, b], vec![c, d]]);
            let det = f.from_i64(a * d - b * c);
            assert_eq!(rank(&m), if det != 0 { 2 } else { 1 });
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f17();
        let m = Matrix::from_rows_i64(f, &[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inverse(&Matrix::from_rows_i64(f, &[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn subspace_ops() {
        let f = f17();
        let s = Subspace::spanned_by(f, 3, &[vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[1, 2, 1]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.complement_indices(), vec![2]);
    }

    fn random_matrix(seed: u64, rows: usize, cols: usize) -> Matrix {
        let f = f17();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        // low-rank products exercise nontrivial kernels
        let k = rng.gen_range(0..=rows.min(cols));
        let a = Matrix::from_data(
            f,
            rows,
            k,
            (0..rows * k).map(|_| rng.gen_range(0..17)).collect(),
        );
        let b = Matrix::from_data(
            f,
            k,
            cols,
            (0..k * cols).map(|_| rng.gen_range(0..17)).collect(),
        );
        if k == 0 {
            Matrix::zeros(f, rows, cols)
        } else {
            a.mul(&b)
        }
    }

    proptest! {
        #[test]
        fn rank_nullity_and_solve(seed in any::<u64>(), rows in 1usize..9, cols in 1usize..9) {
            let m = random_matrix(seed, rows, cols);
            let rr = row_reduce(&m);
            prop_assert_eq!(rr.rank() + rr.kernel_basis().len(), cols);
            prop_assert_eq!(rr.rank(), rank(&m));
            prop_assert_eq!(kernel(&m), rr.kernel_basis());
            for k in rr.kernel_basis() {
                prop_assert!(vec_ops::is_zero(&m.mul_vec(&k)));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
            let v: Vec<u32> = (0..cols).map(|_| rng.gen_range(0..17)).collect();
            let rhs = m.mul_vec(&v);
            let x = rr.solve(&rhs).unwrap();
            prop_assert_eq!(m.mul_vec(&x), rhs);
            let mut kb = KernelBuilder::new(m.field(), cols);
            for i in 0..rows { kb.push(m.row(i).to_vec()); }
            prop_assert_eq!(kb.finish().len(), cols - rr.rank());
        }
    }
}
