//! Center, Jacobson radical and central primitive idempotents.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Subspace};
use crate::matrix::{vec_ops, Matrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SPLIT_RETRIES: usize = 64;
const SPLIT_SEED: u64 = 0x0c3a_7e11;

/// `trace(L_{b_k})` for every basis element.
fn basis_traces(alg: &Algebra) -> Vec<Scalar> {
    let f = alg.field();
    (0..alg.dim())
        .map(|k| (0..alg.dim()).fold(0, |acc, m| f.add(acc, alg.product_of_basis(k, m)[m])))
        .collect()
}

/// Gram matrix of the trace form `(a, b) -> trace(L_{ab})` on the given vectors.
fn trace_form(alg: &Algebra, vs: &[Vector]) -> Matrix {
    let f = alg.field();
    let t = basis_traces(alg);
    let n = vs.len();
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in i..n {
            let c = vec_ops::dot(&f, &alg.mul(&vs[i], &vs[j]), &t);
            m.set(i, j, c);
            m.set(j, i, c);
        }
    }
    m
}

fn require_large_char(alg: &Algebra) -> Result<()> {
    if (alg.field().p() as usize) <= alg.dim() {
        return Err(Error::FieldTooSmall {
            p: alg.field().p(),
            needed: alg.dim() + 1,
        });
    }
    Ok(())
}

/// Basis of the Jacobson radical. Uses the attached table when present,
/// otherwise the kernel of the trace form (requires `p > dim`).
pub fn radical_basis(alg: &Algebra) -> Result<Vec<Vector>> {
    if let Some(t) = alg.tables() {
        return Ok(t.radical().to_vec());
    }
    trace_form_radical(alg)
}

/// Radical computed from the trace form, ignoring any attached tables.
pub fn trace_form_radical(alg: &Algebra) -> Result<Vec<Vector>> {
    require_large_char(alg)?;
    let basis: Vec<Vector> = (0..alg.dim()).map(|i| alg.basis(i)).collect();
    Ok(linalg::kernel(&trace_form(alg, &basis)))
}

/// Checks that `j` spans a nilpotent two-sided ideal with semisimple quotient.
pub fn verify_radical(alg: &Algebra, j: &[Vector]) -> Result<()> {
    let f = alg.field();
    let dim = alg.dim();
    let sub = Subspace::spanned_by(f, dim, j);
    for v in sub.basis() {
        for i in 0..dim {
            let b = alg.basis(i);
            if !sub.contains(&alg.mul(&b, v)) || !sub.contains(&alg.mul(v, &b)) {
                return Err(Error::Invariant("radical is not a two-sided ideal".into()));
            }
        }
    }
    // powers J^k
    let mut power = sub.basis().to_vec();
    for _ in 0..dim {
        if power.is_empty() {
            break;
        }
        let mut next = Subspace::new(f, dim);
        for a in &power {
            for b in sub.basis() {
                next.insert(alg.mul(a, b));
            }
        }
        power = next.basis().to_vec();
    }
    if !power.is_empty() {
        return Err(Error::Invariant("radical is not nilpotent".into()));
    }
    // trace form nondegenerate on a complement
    require_large_char(alg)?;
    let comp: Vec<Vector> = sub
        .complement_indices()
        .into_iter()
        .map(|i| alg.basis(i))
        .collect();
    let g = trace_form(alg, &comp);
    if linalg::rank(&g) != comp.len() {
        return Err(Error::Invariant(
            "quotient by radical is not semisimple".into(),
        ));
    }
    Ok(())
}

/// Basis of the center, from commutation with the generators.
pub fn center_basis(alg: &Algebra) -> Vec<Vector> {
    let blocks: Vec<Matrix> = alg
        .generators()
        .iter()
        .map(|g| alg.left_mult(&g.vector).sub(&alg.right_mult(&g.vector)))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    linalg::kernel(&Matrix::vstack(&refs))
}

/// The idempotent `e - (w)^N` with `N = (p-1) p^k`, `p^k >= bound`: the part of
/// `e` on which `w` is nilpotent, for `w` in a commutative subalgebra with unit `e`
/// or in a corner `eAe`.
pub(crate) fn nilpotent_part(alg: &Algebra, e: &[Scalar], w: &[Scalar], bound: usize) -> Vector {
    let p = alg.field().p() as u64;
    let mut pk = p;
    while (pk as usize) < bound {
        pk *= p;
    }
    let wn = alg.pow(w, (p - 1) * pk);
    // pow starts from the global unit; multiply into the corner
    alg.sub(e, &alg.mul(e, &wn))
}

/// Basis of `eZ` for a central idempotent `e` and center basis `z`.
fn corner_of_center(alg: &Algebra, e: &[Scalar], z: &[Vector]) -> Vec<Vector> {
    let prods: Vec<Vector> = z.iter().map(|c| alg.mul(e, c)).collect();
    Subspace::spanned_by(alg.field(), alg.dim(), &prods)
        .basis()
        .to_vec()
}

fn commutative_radical_dim(alg: &Algebra, basis: &[Vector]) -> usize {
    basis.len() - linalg::rank(&trace_form(alg, basis))
}

/// Matrix of multiplication by `z` on the span of `basis` (assumed stable).
fn restricted_left_mult(alg: &Algebra, z: &[Scalar], basis: &[Vector]) -> Result<Matrix> {
    let f = alg.field();
    let bm = Matrix::from_cols(f, alg.dim(), basis);
    let images: Vec<Vector> = basis.iter().map(|b| alg.mul(z, b)).collect();
    let im = Matrix::from_cols(f, alg.dim(), &images);
    linalg::coordinates(&bm, &im)
}

/// Field elements `λ` with `m - λ` singular.
pub(crate) fn eigenvalues(m: &Matrix) -> Vec<Scalar> {
    let f = m.field();
    let n = m.rows();
    f.elements()
        .filter(|&l| {
            let shifted = m.sub(&Matrix::scalar(f, n, l));
            linalg::rank(&shifted) < n
        })
        .collect()
}

/// Complete list of orthogonal central primitive idempotents summing to one.
pub fn central_primitive_idempotents(alg: &Algebra) -> Result<Vec<Vector>> {
    require_large_char(alg)?;
    let f = alg.field();
    let z = center_basis(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut queue = vec![alg.unit().clone()];
    let mut done = Vec::new();
    while let Some(e) = queue.pop() {
        let ez = corner_of_center(alg, &e, &z);
        if ez.len() - commutative_radical_dim(alg, &ez) == 1 {
            done.push(e);
            continue;
        }
        let mut split = None;
        for _ in 0..SPLIT_RETRIES {
            let mut c = vec![0; alg.dim()];
            for b in &ez {
                vec_ops::axpy(&f, &mut c, rng.gen_range(0..f.p()), b);
            }
            let lz = restricted_left_mult(alg, &c, &ez)?;
            let eig = eigenvalues(&lz);
            if eig.len() < 2 {
                continue;
            }
            let parts: Vec<Vector> = eig
                .iter()
                .map(|&l| {
                    let w = alg.sub(&c, &alg.scale(l, &e));
                    nilpotent_part(alg, &e, &w, ez.len())
                })
                .collect();
            let total: usize = parts
                .iter()
                .map(|p| corner_of_center(alg, p, &z).len())
                .sum();
            if total == ez.len() {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => queue.extend(parts),
            None => {
                return Err(Error::SplittingFailed(format!(
                    "center corner of dimension {} did not split over F_{}",
                    ez.len(),
                    f.p()
                )))
            }
        }
    }
    for e in &done {
        if !alg.is_idempotent(e) || !alg.commutes_with_generators(e) {
            return Err(Error::Invariant("central idempotent check failed".into()));
        }
    }
    done.sort();
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn matrix_algebras() {
        let f = PrimeField::new(17, 2).unwrap();
        let m2 = Algebra::matrix_algebra(f, 2).unwrap();
        assert!(radical_basis(&m2).unwrap().is_empty());
        assert_eq!(center_basis(&m2).len(), 1);
        assert_eq!(central_primitive_idempotents(&m2).unwrap().len(), 1);
        let prod = Algebra::direct_product("M2xM2", &[&m2, &m2]).unwrap();
        let ids = central_primitive_idempotents(&prod).unwrap();
        assert_eq!(ids.len(), 2);
        let sum = ids.iter().fold(vec![0; prod.dim()], |a, b| prod.add(&a, b));
        assert_eq!(&sum, prod.unit());
    }

    #[test]
    fn small_field_rejected() {
        let f = PrimeField::new(3, 2).unwrap();
        let m2 = Algebra::matrix_algebra(f, 2).unwrap();
        assert!(matches!(
            trace_form_radical(&m2),
            Err(Error::FieldTooSmall { .. })
        ));
    }
}
