//! Finite-dimensional modules given by generator matrices.

use crate::algebra::{Algebra, Presentation};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{self, Subspace};
use crate::matrix::{vec_ops, Matrix, Vector};
use std::fmt;
use std::sync::{Arc, OnceLock};

struct RepInner {
    alg: Arc<Algebra>,
    dim: usize,
    gens: Vec<Matrix>,
    basis_actions: OnceLock<Vec<Matrix>>,
}

/// A left module, cheap to clone.
#[derive(Clone)]
pub struct Rep(Arc<RepInner>);

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rep")
            .field("algebra", &self.0.alg)
            .field("dim", &self.0.dim)
            .finish()
    }
}

impl Rep {
    /// Builds a module from one matrix per generator, in any order, and
    /// checks the defining relations.
    pub fn from_generators(alg: &Arc<Algebra>, mats: Vec<(String, Matrix)>) -> Result<Rep> {
        let mut gens: Vec<Option<Matrix>> = vec![None; alg.generators().len()];
        let mut dim = None;
        for (name, m) in mats {
            let i = alg.generator_index(&name)?;
            if !m.is_square() {
                return Err(Error::DimensionMismatch {
                    expected: m.rows(),
                    got: m.cols(),
                });
            }
            match dim {
                None => dim = Some(m.rows()),
                Some(d) if d != m.rows() => {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: m.rows(),
                    })
                }
                _ => {}
            }
            gens[i] = Some(m);
        }
        let gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| {
                    Error::RelationViolated(format!(
                        "no matrix for generator {}",
                        alg.generators()[i].name
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Rep::new_unchecked(alg.clone(), dim.unwrap_or(0), gens);
        rep.check()?;
        Ok(rep)
    }

    /// Wraps generator matrices (in generator order) without checking relations.
    pub fn new_unchecked(alg: Arc<Algebra>, dim: usize, gens: Vec<Matrix>) -> Rep {
        Rep(Arc::new(RepInner {
            alg,
            dim,
            gens,
            basis_actions: OnceLock::new(),
        }))
    }

    /// Builds the module where each generator acts through `f(generator vector)`,
    /// e.g. multiplication in an ideal or an action on a quotient.
    pub fn from_action_fn(alg: &Arc<Algebra>, dim: usize, f: impl Fn(&[Scalar]) -> Matrix) -> Rep {
        let gens = alg.generators().iter().map(|g| f(&g.vector)).collect();
        Rep::new_unchecked(alg.clone(), dim, gens)
    }

    /// Checks every relation (or the full table for algebras without a
    /// presentation) on the generator matrices.
    pub fn check(&self) -> Result<()> {
        let alg = &self.0.alg;
        let f = alg.field();
        let id = Matrix::identity(f, self.dim());
        match alg.presentation() {
            Presentation::Relations(rels) => {
                for r in rels {
                    let mut acc = Matrix::zeros(f, self.dim(), self.dim());
                    for (c, w) in &r.terms {
                        acc.axpy(*c, &self.word_action(w));
                    }
                    if !acc.is_zero() {
                        return Err(Error::RelationViolated(r.name.clone()));
                    }
                }
                if self.action(alg.unit()) != id {
                    return Err(Error::RelationViolated("unit".into()));
                }
            }
            Presentation::FullTable => {
                let acts = self.basis_actions();
                if self.action(alg.unit()) != id {
                    return Err(Error::RelationViolated("unit".into()));
                }
                for i in 0..alg.dim() {
                    for j in 0..alg.dim() {
                        let lhs = acts[i].mul(&acts[j]);
                        if lhs != self.action(alg.product_of_basis(i, j)) {
                            return Err(Error::RelationViolated(format!(
                                "{} * {}",
                                alg.labels()[i],
                                alg.labels()[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.alg
    }

    pub fn field(&self) -> PrimeField {
        self.0.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn generator_matrices(&self) -> &[Matrix] {
        &self.0.gens
    }

    pub fn generator_matrix(&self, name: &str) -> Result<&Matrix> {
        Ok(&self.0.gens[self.0.alg.generator_index(name)?])
    }

    /// Product of generator matrices along a word.
    pub fn word_action(&self, w: &[usize]) -> Matrix {
        w.iter()
            .fold(Matrix::identity(self.field(), self.dim()), |acc, &g| {
                acc.mul(&self.0.gens[g])
            })
    }

    /// Actions of all basis elements, computed once.
    pub fn basis_actions(&self) -> &[Matrix] {
        self.0.basis_actions.get_or_init(|| {
            self.0
                .alg
                .basis_words()
                .iter()
                .map(|w| self.word_action(w))
                .collect()
        })
    }

    /// Action of an arbitrary algebra element.
    pub fn action(&self, a: &[Scalar]) -> Matrix {
        let f = self.field();
        let acts = self.basis_actions();
        let mut m = Matrix::zeros(f, self.dim(), self.dim());
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m.axpy(c, &acts[i]);
            }
        }
        m
    }

    pub fn act(&self, a: &[Scalar], v: &[Scalar]) -> Vector {
        self.action(a).mul_vec(v)
    }

    pub fn same_algebra(&self, other: &Rep) -> Result<()> {
        if Arc::ptr_eq(self.algebra(), other.algebra()) || self.algebra() == other.algebra() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Whether the generator matrices agree exactly.
    pub fn same_matrices(&self, other: &Rep) -> bool {
        self.dim() == other.dim() && self.0.gens == other.0.gens
    }

    pub fn zero(alg: &Arc<Algebra>) -> Rep {
        Rep::from_action_fn(alg, 0, |_| Matrix::zeros(alg.field(), 0, 0))
    }

    /// The left regular module.
    pub fn regular(alg: &Arc<Algebra>) -> Rep {
        Rep::from_action_fn(alg, alg.dim(), |a| alg.left_mult(a))
    }

    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[&Rep]) -> Rep {
        let f = alg.field();
        let dim = parts.iter().map(|r| r.dim()).sum();
        let gens = (0..alg.generators().len())
            .map(|g| {
                let blocks: Vec<&Matrix> = parts.iter().map(|r| &r.0.gens[g]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Rep::new_unchecked(alg.clone(), dim, gens)
    }

    /// The submodule generated by `vectors`.
    pub fn spin(&self, vectors: &[Vector]) -> Subspace {
        let mut sub = Subspace::new(self.field(), self.dim());
        let mut queue: Vec<Vector> = Vec::new();
        for v in vectors {
            if sub.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.0.gens {
                let w = g.mul_vec(&v);
                if sub.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        sub
    }

    /// The submodule on a stable subspace, in the basis given.
    pub fn submodule(&self, basis: &[Vector]) -> Result<(Rep, Matrix)> {
        let f = self.field();
        let b = Matrix::from_cols(f, self.dim(), basis);
        let gens = self
            .0
            .gens
            .iter()
            .map(|g| linalg::coordinates(&b, &g.mul(&b)))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::Invariant("subspace is not a submodule".into()))?;
        Ok((Rep::new_unchecked(self.0.alg.clone(), basis.len(), gens), b))
    }

    /// The quotient by a submodule, using the complement coordinates of the
    /// echelon form as basis. Returns the module and the projection matrix.
    pub fn quotient(&self, sub: &Subspace) -> (Rep, Matrix) {
        let f = self.field();
        let keep = sub.complement_indices();
        let q = keep.len();
        let project = |v: &[Scalar]| -> Vector {
            let r = sub.reduce(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let proj_cols: Vec<Vector> = (0..self.dim())
            .map(|i| project(&vec_ops::unit(self.dim(), i)))
            .collect();
        let proj = Matrix::from_cols(f, q, &proj_cols);
        let gens = self
            .0
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vector> = keep.iter().map(|&i| project(&g.col(i))).collect();
                Matrix::from_cols(f, q, &cols)
            })
            .collect();
        (Rep::new_unchecked(self.0.alg.clone(), q, gens), proj)
    }

    /// `JM` for the attached radical.
    pub fn radical_submodule(&self) -> Result<Subspace> {
        let t = self.algebra().require_tables()?;
        let mut s = Subspace::new(self.field(), self.dim());
        for r in t.radical_generators() {
            let a = self.action(r);
            for c in a.columns() {
                s.insert(c);
            }
        }
        Ok(s)
    }

    /// Image of the action of an element, as a subspace.
    pub fn image_of(&self, a: &[Scalar]) -> Subspace {
        Subspace::spanned_by(self.field(), self.dim(), &self.action(a).columns())
    }
}

/// A module homomorphism; `matrix` is `target.dim x source.dim`.
#[derive(Debug, Clone)]
pub struct ModHom {
    pub source: Rep,
    pub target: Rep,
    pub matrix: Matrix,
}

impl ModHom {
    /// Wraps a matrix after checking it intertwines the generator actions.
    pub fn new(source: &Rep, target: &Rep, matrix: Matrix) -> Result<ModHom> {
        let h = ModHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        };
        if !h.is_intertwiner() {
            return Err(Error::Invariant("matrix is not a module map".into()));
        }
        Ok(h)
    }

    pub fn is_intertwiner(&self) -> bool {
        self.matrix.rows() == self.target.dim()
            && self.matrix.cols() == self.source.dim()
            && self
                .source
                .generator_matrices()
                .iter()
                .zip(self.target.generator_matrices())
                .all(|(a, b)| self.matrix.mul(a) == b.mul(&self.matrix))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    pub fn compose(&self, after: &ModHom) -> ModHom {
        ModHom {
            source: self.source.clone(),
            target: after.target.clone(),
            matrix: after.matrix.mul(&self.matrix),
        }
    }
}

/// Basis of `Hom_A(M, N)`.
///
/// `M` is spun from a few module generators `m_j`, so a map is fixed by the
/// images `f(m_j)`; the unknowns are those images and the equations say that
/// the induced map commutes with every generator.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<ModHom>> {
    m.same_algebra(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let gens = m.generator_matrices();
    let ngens = n.generator_matrices();

    // spinning basis of M with, for each vector, how unknown images map to it
    let mut sub = Subspace::new(f, dm);
    let mut basis: Vec<Vector> = Vec::new();
    let mut parent: Vec<Option<(usize, usize)>> = Vec::new();
    let mut roots = 0usize;
    let mut root_of: Vec<usize> = Vec::new();
    for i in 0..dm {
        let e = vec_ops::unit(dm, i);
        if !sub.insert(e.clone()) {
            continue;
        }
        let start = basis.len();
        basis.push(e);
        parent.push(None);
        root_of.push(roots);
        roots += 1;
        let mut k = start;
        while k < basis.len() {
            for (s, g) in gens.iter().enumerate() {
                let w = g.mul_vec(&basis[k]);
                if sub.insert(w.clone()) {
                    basis.push(w);
                    parent.push(Some((k, s)));
                    root_of.push(usize::MAX);
                }
            }
            k += 1;
        }
    }
    let unknowns = roots * dn;
    // T_l: dn x unknowns with f(v_l) = T_l y
    let mut t: Vec<Matrix> = Vec::with_capacity(dm);
    for l in 0..dm {
        let tl = match parent[l] {
            None => {
                let mut z = Matrix::zeros(f, dn, unknowns);
                for i in 0..dn {
                    z.set(i, root_of[l] * dn + i, 1);
                }
                z
            }
            Some((k, s)) => ngens[s].mul(&t[k]),
        };
        t.push(tl);
    }
    let bm = Matrix::from_cols(f, dm, &basis);
    let binv = linalg::inverse(&bm).ok_or_else(|| Error::Invariant("spin basis".into()))?;
    let mut kb = linalg::KernelBuilder::new(f, unknowns);
    for (s, g) in gens.iter().enumerate() {
        let c = binv.mul(&g.mul(&bm));
        for l in 0..dm {
            // Σ_l' C[l'][l] T_l' - N_s T_l
            let mut eq = ngens[s].mul(&t[l]).scale(f.neg(1));
            for (lp, tl) in t.iter().enumerate() {
                let coef = c.get(lp, l);
                if coef != 0 {
                    eq.axpy(coef, tl);
                }
            }
            for r in 0..dn {
                kb.push(eq.row(r).to_vec());
            }
            if kb.rank() == unknowns {
                return Ok(Vec::new());
            }
        }
    }
    let sols = kb.finish();
    sols.into_iter()
        .map(|y| {
            let cols: Vec<Vector> = t.iter().map(|tl| tl.mul_vec(&y)).collect();
            let img = Matrix::from_cols(f, dn, &cols);
            Ok(ModHom {
                source: m.clone(),
                target: n.clone(),
                matrix: img.mul(&binv),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taft::build_drinfeld_double;

    fn d2() -> Arc<Algebra> {
        Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
    }

    fn one_dim(d: &Arc<Algebra>, s: i64) -> Result<Rep> {
        let f = d.field();
        let m = |v: i64| Matrix::from_rows_i64(f, &[vec![v]]);
        Rep::from_generators(
            d,
            vec![
                ("x".into(), m(0)),
                ("X".into(), m(0)),
                ("g".into(), m(s)),
                ("G".into(), m(s)),
            ],
        )
    }

    #[test]
    fn trivial_modules_and_relations() {
        let d = d2();
        let k = one_dim(&d, 1).unwrap();
        let km = one_dim(&d, -1).unwrap();
        assert!(matches!(one_dim(&d, 2), Err(Error::RelationViolated(_))));
        assert_eq!(hom_basis(&k, &k).unwrap().len(), 1);
        assert_eq!(hom_basis(&k, &km).unwrap().len(), 0);
        let reg = Rep::regular(&d);
        reg.check().unwrap();
        // Hom(A, M) = M
        assert_eq!(hom_basis(&reg, &k).unwrap().len(), 1);
        assert_eq!(hom_basis(&reg, &reg).unwrap().len(), 16);
    }

    #[test]
    fn hom_agrees_with_naive_solve() {
        let d = d2();
        let reg = Rep::regular(&d);
        let fp = d.named("f+").unwrap().clone();
        let sub = reg.spin(&[fp]);
        let (m, _) = reg.quotient(&reg.spin(&[d.named("e+").unwrap().clone()]));
        let (n, _) = reg.submodule(sub.basis()).unwrap();
        let fast = hom_basis(&m, &n).unwrap();
        // naive: all X with X M_s = N_s X
        let f = d.field();
        let (dm, dn) = (m.dim(), n.dim());
        let mut kb = linalg::KernelBuilder::new(f, dm * dn);
        for (a, b) in m.generator_matrices().iter().zip(n.generator_matrices()) {
            for i in 0..dn {
                for j in 0..dm {
                    let mut eq = vec![0; dm * dn];
                    for k in 0..dm {
                        eq[i * dm + k] = f.add(eq[i * dm + k], a.get(k, j));
                    }
                    for k in 0..dn {
                        eq[k * dm + j] = f.sub(eq[k * dm + j], b.get(i, k));
                    }
                    kb.push(eq);
                }
            }
        }
        assert_eq!(fast.len(), kb.finish().len());
        assert!(fast.iter().all(|h| h.is_intertwiner()));
    }
}
