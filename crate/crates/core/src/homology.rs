//! Projective covers, syzygies, minimal resolutions and Ext groups.

use crate::algebra::{Algebra, Family, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};
use crate::matrix::{vec_ops, Matrix, Vector};
use crate::modops::{self, ProjectiveSum};
use crate::rep::{ModHom, Rep};
use std::sync::Arc;

/// The projective cover `P → M`, built from vectors of `e_S M` spanning a
/// complement of `e_S JM` for each simple `S`.
pub fn projective_cover(m: &Rep) -> Result<(ProjectiveSum, ModHom)> {
    let alg = m.algebra().clone();
    let t = alg.require_tables()?.clone();
    let f = m.field();
    let jm = m.radical_submodule()?;
    let mut labels = Vec::new();
    let mut images = Vec::new();
    for s in t.simples() {
        let em = m.action(&s.idempotent);
        let mut sub = Subspace::spanned_by(
            f,
            m.dim(),
            &jm.basis().iter().map(|v| em.mul_vec(v)).collect::<Vec<_>>(),
        );
        for c in em.columns() {
            if sub.insert(c.clone()) {
                labels.push(s.label.clone());
                images.push(c);
            }
        }
    }
    let p = ProjectiveSum::new(&alg, labels)?;
    let epi = p.map_to(m, &images)?;
    if epi.rank() != m.dim() {
        return Err(Error::Invariant(
            "projective cover is not surjective".into(),
        ));
    }
    Ok((p, epi))
}

/// Kernel of a module map as a submodule, with its inclusion matrix.
pub fn kernel_module(h: &ModHom) -> Result<(Rep, Matrix)> {
    let basis = linalg::kernel(&h.matrix);
    if basis.is_empty() {
        let f = h.source.field();
        return Ok((
            Rep::zero(h.source.algebra()),
            Matrix::zeros(f, h.source.dim(), 0),
        ));
    }
    h.source.submodule(&basis)
}

/// `Ω^n(M)`, the `n`-th kernel of a minimal resolution.
pub fn syzygy(m: &Rep, n: usize) -> Result<Rep> {
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.dim() == 0 {
            break;
        }
        let (_, epi) = projective_cover(&cur)?;
        cur = kernel_module(&epi)?.0;
    }
    Ok(cur)
}

/// A projective resolution `… → P_1 → P_0 → M`.
///
/// `maps[0]` is the augmentation `P_0 → M`; `maps[i]` is `∂_i : P_i → P_{i-1}`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub target: Rep,
    pub terms: Vec<ProjectiveSum>,
    pub maps: Vec<Matrix>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Summand labels of each term.
    pub fn multiplicities(&self) -> Vec<Vec<String>> {
        self.terms.iter().map(|t| t.summands.clone()).collect()
    }

    /// Module at degree `i`, with degree `-1` the resolved module.
    pub fn module(&self, i: isize) -> &Rep {
        if i < 0 {
            &self.target
        } else {
            &self.terms[i as usize].rep
        }
    }

    /// Builds a resolution from the images of summand generators: entry
    /// `images[i][j]` is the image in `P_{i-1}` (or `M` for `i = 0`) of the
    /// generator of summand `j` of `P_i`.
    pub fn from_generator_images(
        target: Rep,
        labels: Vec<Vec<String>>,
        images: Vec<Vec<Vector>>,
    ) -> Result<Resolution> {
        let alg = target.algebra().clone();
        let mut terms = Vec::new();
        let mut maps = Vec::new();
        for (i, (l, imgs)) in labels.into_iter().zip(images).enumerate() {
            let p = ProjectiveSum::new(&alg, l)?;
            let tgt = if i == 0 {
                target.clone()
            } else {
                terms_rep(&terms, i - 1)
            };
            maps.push(p.map_to(&tgt, &imgs)?.matrix);
            terms.push(p);
        }
        let r = Resolution {
            target,
            terms,
            maps,
        };
        r.verify()?;
        Ok(r)
    }

    /// Exactness at every computed degree (by ranks and `∂∂ = 0`), the
    /// module-map property of every differential, and minimality.
    pub fn verify(&self) -> Result<()> {
        let n = self.terms.len();
        for i in 0..n {
            let h = ModHom {
                source: self.terms[i].rep.clone(),
                target: self.module(i as isize - 1).clone(),
                matrix: self.maps[i].clone(),
            };
            if !h.is_intertwiner() {
                return Err(Error::Invariant(format!("∂_{i} is not a module map")));
            }
        }
        if linalg::rank(&self.maps[0]) != self.target.dim() {
            return Err(Error::Invariant("augmentation is not surjective".into()));
        }
        for i in 1..n {
            if !self.maps[i - 1].mul(&self.maps[i]).is_zero() {
                return Err(Error::Invariant(format!("∂∂ ≠ 0 at degree {i}")));
            }
            let d = self.terms[i - 1].rep.dim();
            if linalg::rank(&self.maps[i - 1]) + linalg::rank(&self.maps[i]) != d {
                return Err(Error::Invariant(format!("not exact at degree {}", i - 1)));
            }
            let j = self.terms[i - 1].rep.radical_submodule()?;
            if !self.maps[i].columns().iter().all(|c| j.contains(c)) {
                return Err(Error::Invariant(format!("∂_{i} is not minimal")));
            }
        }
        Ok(())
    }

    /// The complex of underlying modules, for lifting maps into it.
    pub fn as_complex(&self) -> Complex {
        Complex {
            target: self.target.clone(),
            modules: self.terms.iter().map(|t| t.rep.clone()).collect(),
            maps: self.maps.clone(),
        }
    }

    /// The same complex restricted to a subalgebra.
    pub fn restricted(&self, emb: &SubalgebraEmbedding) -> Result<Complex> {
        Ok(Complex {
            target: modops::restrict(&self.target, emb)?,
            modules: self
                .terms
                .iter()
                .map(|t| modops::restrict(&t.rep, emb))
                .collect::<Result<Vec<_>>>()?,
            maps: self.maps.clone(),
        })
    }
}

fn terms_rep(terms: &[ProjectiveSum], i: usize) -> Rep {
    terms[i].rep.clone()
}

/// An exact complex `… → C_1 → C_0 → N` used as the target of chain lifts.
#[derive(Debug, Clone)]
pub struct Complex {
    pub target: Rep,
    pub modules: Vec<Rep>,
    pub maps: Vec<Matrix>,
}

impl Complex {
    /// Tensors every term and map on the left by a fixed module,
    /// `F ⊗ M` in the notation of the module's resolution `F`.
    pub fn tensor_right(&self, m: &Rep) -> Result<Complex> {
        let f = m.field();
        let id = Matrix::identity(f, m.dim());
        Ok(Complex {
            target: modops::tensor(&self.target, m)?,
            modules: self
                .modules
                .iter()
                .map(|c| modops::tensor(c, m))
                .collect::<Result<Vec<_>>>()?,
            maps: self.maps.iter().map(|d| d.kron(&id)).collect(),
        })
    }
}

/// Minimal projective resolution of `M` through degree `length`.
pub fn minimal_resolution(m: &Rep, length: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let (p0, epi) = projective_cover(m)?;
    let mut kernel = kernel_module(&epi)?;
    maps.push(epi.matrix);
    terms.push(p0);
    for _ in 0..length {
        let (k, incl) = kernel;
        if k.dim() == 0 {
            break;
        }
        let (p, epi) = projective_cover(&k)?;
        let next = kernel_module(&epi)?;
        maps.push(incl.mul(&epi.matrix));
        terms.push(p);
        kernel = next;
    }
    let r = Resolution {
        target: m.clone(),
        terms,
        maps,
    };
    r.verify()?;
    Ok(r)
}

/// The explicit resolution of `k` over `D(Λ_2)`: `P_i` is `P_+^{i+1}` for
/// even `i` and `P_-^{i+1}` for odd `i`, with
/// `∂(e^{(j)}) = x e^{(j)} + X e^{(j-1)}` (terms out of range dropped) and
/// `∂_0(e_+) = 1`.
pub fn canonical_resolution_k(d: &Arc<Algebra>, length: usize) -> Result<Resolution> {
    if !matches!(d.family(), Family::DTaft { n: 2, .. }) {
        return Err(Error::UnsupportedAlgebra(format!("{:?}", d.family())));
    }
    let k = modops::standard_module(d, "k")?;
    let x = d.generator("x")?.clone();
    let xu = d.generator("X")?.clone();
    let mut labels = Vec::new();
    let mut images = Vec::new();
    labels.push(vec!["k".to_string()]);
    images.push(vec![vec![1]]);
    let mut prev: Option<ProjectiveSum> = None;
    for i in 0..=length {
        let label = if i % 2 == 0 { "k" } else { "k-" };
        let cur = ProjectiveSum::new(d, vec![label.to_string(); i + 1])?;
        if let Some(p) = &prev {
            let mut imgs = Vec::new();
            for j in 0..=i {
                let mut v = vec![0; p.rep.dim()];
                if j < i {
                    v = vec_ops::add(&d.field(), &v, &p.rep.act(&x, &p.generator(j)));
                }
                if j > 0 {
                    v = vec_ops::add(&d.field(), &v, &p.rep.act(&xu, &p.generator(j - 1)));
                }
                imgs.push(v);
            }
            labels.push(vec![label.to_string(); i + 1]);
            images.push(imgs);
        }
        prev = Some(cur);
    }
    Resolution::from_generator_images(k, labels, images)
}

/// Cochains `Hom(P_i, N) = ⊕ e_j N`: a basis given by generator images.
fn cochain_basis(p: &ProjectiveSum, n: &Rep) -> Result<Vec<Vec<Vector>>> {
    let t = p.rep.algebra().require_tables()?.clone();
    let mut out = Vec::new();
    let k = p.summands.len();
    for (j, label) in p.summands.iter().enumerate() {
        let e = &t.simple(label)?.idempotent;
        for v in linalg::row_reduce(&n.action(e)).image_basis() {
            let mut imgs = vec![vec![0; n.dim()]; k];
            imgs[j] = v.clone();
            out.push(imgs);
        }
    }
    Ok(out)
}

/// `dim Ext^i(M, N)` for `0 ≤ i ≤ upto`, as homology of `Hom(P_•, N)`.
pub fn ext_dims(m: &Rep, n: &Rep, upto: usize) -> Result<Vec<usize>> {
    let res = minimal_resolution(m, upto + 1)?;
    ext_dims_from(&res, n, upto)
}

/// Ext dimensions using a given resolution of the source.
pub fn ext_dims_from(res: &Resolution, n: &Rep, upto: usize) -> Result<Vec<usize>> {
    m_same(res, n)?;
    let f = n.field();
    let mut dims_c = Vec::new();
    let mut ranks = Vec::new();
    for i in 0..=upto {
        if i >= res.terms.len() {
            dims_c.push(0);
            ranks.push(0);
            continue;
        }
        let basis = cochain_basis(&res.terms[i], n)?;
        dims_c.push(basis.len());
        // δ_i φ = φ ∘ ∂_{i+1}
        let rank = if i + 1 < res.terms.len() && !basis.is_empty() {
            let rows: Vec<Vector> = basis
                .iter()
                .map(|imgs| {
                    let phi = res.terms[i].map_to(n, imgs).map(|h| h.matrix);
                    phi.map(|p| p.mul(&res.maps[i + 1]).data().to_vec())
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Matrix::from_data(f, rows.len(), rows[0].len(), rows.concat());
            linalg::rank(&m)
        } else {
            0
        };
        ranks.push(rank);
    }
    Ok((0..=upto)
        .map(|i| dims_c[i] - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect())
}

fn m_same(res: &Resolution, n: &Rep) -> Result<()> {
    res.target.same_algebra(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::taft::build_drinfeld_double;

    #[test]
    fn syzygies_of_k() {
        let d = Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap());
        let k = modops::standard_module(&d, "k").unwrap();
        assert_eq!(syzygy(&k, 1).unwrap().dim(), 3);
        assert_eq!(syzygy(&k, 2).unwrap().dim(), 5);
        let pp = modops::standard_module(&d, "P+").unwrap();
        assert_eq!(syzygy(&pp, 1).unwrap().dim(), 0);
        let (p, epi) = projective_cover(&pp).unwrap();
        assert_eq!(p.summands, vec!["k".to_string()]);
        assert_eq!(epi.rank(), 4);
    }
}
