//! Restriction, induction, tensor products, isomorphism, tops and projectivity.

use crate::algebra::{Algebra, Family, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Subspace};
use crate::matrix::{vec_ops, Matrix, Vector};
use crate::rep::{hom_basis, ModHom, Rep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

const ISO_ATTEMPTS: usize = 32;

fn check_parent(m: &Rep, emb: &SubalgebraEmbedding) -> Result<()> {
    if Arc::ptr_eq(m.algebra(), &emb.parent) || **m.algebra() == *emb.parent {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

fn check_sub(n: &Rep, emb: &SubalgebraEmbedding) -> Result<()> {
    if Arc::ptr_eq(n.algebra(), &emb.sub) || **n.algebra() == *emb.sub {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `M` viewed as a module over the subalgebra.
pub fn restrict(m: &Rep, emb: &SubalgebraEmbedding) -> Result<Rep> {
    check_parent(m, emb)?;
    Ok(Rep::from_action_fn(&emb.sub, m.dim(), |a| {
        m.action(&emb.image(a))
    }))
}

/// `M ⊗ N` with the coproduct action; the `M` index is major.
pub fn tensor(m: &Rep, n: &Rep) -> Result<Rep> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let h = alg.hopf().ok_or(Error::MissingHopfData)?;
    let f = alg.field();
    let (ma, na) = (m.basis_actions(), n.basis_actions());
    Ok(Rep::from_action_fn(alg, m.dim() * n.dim(), |a| {
        let mut acc = Matrix::zeros(f, m.dim() * n.dim(), m.dim() * n.dim());
        for (&(i, j), &c) in &h.coproduct_of(&f, a) {
            acc.axpy(c, &ma[i].kron(&na[j]));
        }
        acc
    }))
}

/// The trivial module of an algebra with counit, or of a subalgebra of one.
pub fn trivial_module(alg: &Arc<Algebra>, parent: Option<&SubalgebraEmbedding>) -> Result<Rep> {
    let f = alg.field();
    let (counit, embed): (Vector, Option<&SubalgebraEmbedding>) = match parent {
        Some(emb) => (
            emb.parent
                .hopf()
                .ok_or(Error::MissingHopfData)?
                .counit()
                .clone(),
            Some(emb),
        ),
        None => (
            alg.hopf().ok_or(Error::MissingHopfData)?.counit().clone(),
            None,
        ),
    };
    Ok(Rep::from_action_fn(alg, 1, |a| {
        let v = match embed {
            Some(e) => e.image(a),
            None => a.to_vec(),
        };
        Matrix::scalar(f, 1, vec_ops::dot(&f, &counit, &v))
    }))
}

/// `Λ ⊗_Γ N` realized as a quotient of `Λ ⊗ N`.
#[derive(Debug, Clone)]
pub struct Induced {
    pub rep: Rep,
    /// Relation span, in reversed coordinates so that the quotient basis
    /// prefers low basis indices.
    relations: Subspace,
    keep: Vec<usize>,
    inner_dim: usize,
}

impl Induced {
    /// Coordinates of the class of `λ ⊗ v` for a parent element and vector of `N`.
    pub fn class_of(&self, lambda: &[Scalar], v: &[Scalar]) -> Vector {
        let f = self.relations_field();
        let n = self.inner_dim;
        let total = lambda.len() * n;
        let mut w = vec![0; total];
        for (i, &a) in lambda.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                let k = total - 1 - (i * n + j);
                w[k] = f.mul_add(w[k], a, b);
            }
        }
        let r = self.relations.reduce(&w);
        self.keep.iter().map(|&i| r[total - 1 - i]).collect()
    }

    fn relations_field(&self) -> crate::field::PrimeField {
        self.rep.field()
    }

    /// Pairs `(parent basis index, N basis index)` of the chosen quotient basis.
    pub fn section(&self) -> Vec<(usize, usize)> {
        self.keep
            .iter()
            .map(|&i| (i / self.inner_dim, i % self.inner_dim))
            .collect()
    }
}

/// Induction along a subalgebra embedding.
pub fn induce(emb: &SubalgebraEmbedding, n: &Rep) -> Result<Induced> {
    check_sub(n, emb)?;
    let parent = &emb.parent;
    let f = parent.field();
    let (dl, dn) = (parent.dim(), n.dim());
    let total = dl * dn;
    let mut rel = Subspace::new(f, total);
    for (gi, g) in emb.sub.generators().iter().enumerate() {
        let gamma = emb.image(&g.vector);
        let act = &n.generator_matrices()[gi];
        for l in 0..dl {
            let lgamma = parent.mul(&parent.basis(l), &gamma);
            for v in 0..dn {
                let mut w = vec![0; dl * dn];
                for (mu, &c) in lgamma.iter().enumerate() {
                    if c != 0 {
                        w[mu * dn + v] = f.add(w[mu * dn + v], c);
                    }
                }
                for u in 0..dn {
                    let c = act.get(u, v);
                    if c != 0 {
                        w[l * dn + u] = f.sub(w[l * dn + u], c);
                    }
                }
                w.reverse();
                rel.insert(w);
            }
        }
    }
    let mut keep: Vec<usize> = rel
        .complement_indices()
        .into_iter()
        .map(|i| total - 1 - i)
        .collect();
    keep.sort_unstable();
    let q = keep.len();
    let mut ind = Induced {
        rep: Rep::zero(parent),
        relations: rel,
        keep,
        inner_dim: dn,
    };
    let section = ind.section();
    let gens: Vec<Matrix> = parent
        .generators()
        .iter()
        .map(|g| {
            let cols: Vec<Vector> = section
                .iter()
                .map(|&(l, v)| {
                    let sl = parent.mul(&g.vector, &parent.basis(l));
                    ind.class_of(&sl, &vec_ops::unit(dn, v))
                })
                .collect();
            Matrix::from_cols(f, q, &cols)
        })
        .collect();
    ind.rep = Rep::new_unchecked(parent.clone(), q, gens);
    Ok(ind)
}

/// Result of [`is_isomorphic`].
#[derive(Debug, Clone)]
pub enum Isomorphism {
    Yes(ModHom),
    No,
    Inconclusive,
}

impl Isomorphism {
    pub fn is_yes(&self) -> bool {
        matches!(self, Isomorphism::Yes(_))
    }
}

/// Randomized isomorphism test with witness; never answers wrongly.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<Isomorphism> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(Isomorphism::No);
    }
    if m.dim() == 0 {
        return Ok(Isomorphism::Yes(ModHom {
            source: m.clone(),
            target: n.clone(),
            matrix: Matrix::zeros(m.field(), 0, 0),
        }));
    }
    if m.same_matrices(n) {
        return Ok(Isomorphism::Yes(ModHom {
            source: m.clone(),
            target: n.clone(),
            matrix: Matrix::identity(m.field(), m.dim()),
        }));
    }
    let hb = hom_basis(m, n)?;
    if hb.is_empty() {
        return Ok(Isomorphism::No);
    }
    // an isomorphism would identify Hom(M, M) with Hom(N, M)
    if hom_basis(m, m)?.len() != hom_basis(n, m)?.len() {
        return Ok(Isomorphism::No);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..ISO_ATTEMPTS {
        let mut acc = Matrix::zeros(f, n.dim(), m.dim());
        for h in &hb {
            acc.axpy(rng.gen_range(0..f.p()), &h.matrix);
        }
        if linalg::rank(&acc) == m.dim() {
            return Ok(Isomorphism::Yes(ModHom {
                source: m.clone(),
                target: n.clone(),
                matrix: acc,
            }));
        }
    }
    Ok(Isomorphism::Inconclusive)
}

/// The explicit isomorphism `(M|_Γ)↑ → M ⊗ (k_Γ↑)` and its inverse.
#[derive(Debug, Clone)]
pub struct ReciprocityWitness {
    pub forward: ModHom,
    pub inverse: ModHom,
}

/// `λ ⊗ m ↦ Σ λ₍₁₎ m ⊗ (λ₍₂₎ ⊗ 1)`, with inverse
/// `m ⊗ (λ ⊗ 1) ↦ Σ λ₍₂₎ ⊗ S⁻¹(λ₍₁₎) m`; both are checked.
///
/// This is well defined because `Δ(Γ) ⊂ Λ ⊗ Γ` for the subalgebras in scope.
pub fn reciprocity_witness(m: &Rep, emb: &SubalgebraEmbedding) -> Result<ReciprocityWitness> {
    check_parent(m, emb)?;
    let parent = &emb.parent;
    let h = parent.hopf().ok_or(Error::MissingHopfData)?;
    let f = parent.field();
    let s_inv = linalg::inverse(h.antipode()).ok_or(Error::WitnessNotBijective)?;
    let ind = induce(emb, &restrict(m, emb)?)?;
    let kup = induce(emb, &trivial_module(&emb.sub, Some(emb))?)?;
    let tens = tensor(m, &kup.rep)?;
    let (dm, dk) = (m.dim(), kup.rep.dim());
    let acts = m.basis_actions();

    let mut fwd_cols = Vec::new();
    for (l, v) in ind.section() {
        let mut col = vec![0; tens.dim()];
        for (&(a, b), &c) in h.coproduct(l) {
            let left = acts[a].col(v);
            let right = kup.class_of(&parent.basis(b), &[1]);
            for (i, &x) in left.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in right.iter().enumerate() {
                    col[i * dk + j] = f.add(col[i * dk + j], f.mul(c, f.mul(x, y)));
                }
            }
        }
        fwd_cols.push(col);
    }
    let forward = Matrix::from_cols(f, tens.dim(), &fwd_cols);

    let mut inv_cols = Vec::new();
    for mv in 0..dm {
        for (l, _) in kup.section() {
            let mut col = vec![0; ind.rep.dim()];
            for (&(a, b), &c) in h.coproduct(l) {
                let w = m.act(&s_inv.col(a), &vec_ops::unit(dm, mv));
                let cls = ind.class_of(&parent.basis(b), &w);
                vec_ops::axpy(&f, &mut col, c, &cls);
            }
            inv_cols.push(col);
        }
    }
    let inverse = Matrix::from_cols(f, ind.rep.dim(), &inv_cols);

    let fw = ModHom {
        source: ind.rep.clone(),
        target: tens.clone(),
        matrix: forward,
    };
    let iv = ModHom {
        source: tens,
        target: ind.rep.clone(),
        matrix: inverse,
    };
    if fw.target.dim() != fw.source.dim()
        || !fw.is_intertwiner()
        || !iv.is_intertwiner()
        || !iv.matrix.mul(&fw.matrix).is_identity()
        || !fw.matrix.mul(&iv.matrix).is_identity()
    {
        return Err(Error::WitnessNotBijective);
    }
    Ok(ReciprocityWitness {
        forward: fw,
        inverse: iv,
    })
}

/// Multiplicity of each simple in `M / JM`, in table order.
pub fn top_multiplicities(m: &Rep) -> Result<Vec<(String, usize)>> {
    let t = m.algebra().require_tables()?.clone();
    let jm = m.radical_submodule()?;
    let f = m.field();
    let mut out = Vec::new();
    for s in t.simples() {
        let em = m.action(&s.idempotent);
        let dim_em = linalg::rank(&em);
        let ejm: Vec<Vector> = jm.basis().iter().map(|v| em.mul_vec(v)).collect();
        let dim_ejm = Subspace::spanned_by(f, m.dim(), &ejm).dim();
        out.push((s.label.clone(), dim_em - dim_ejm));
    }
    Ok(out)
}

/// The projective indecomposable `Ae` for a simple label, in the PIM basis.
pub fn pim_rep(alg: &Arc<Algebra>, label: &str) -> Result<Rep> {
    let t = alg.require_tables()?;
    let s = t.simple(label)?;
    let f = alg.field();
    let b = Matrix::from_cols(f, alg.dim(), &s.pim_basis);
    let dim = s.pim_basis.len();
    let gens = alg
        .generators()
        .iter()
        .map(|g| linalg::coordinates(&b, &alg.left_mult(&g.vector).mul(&b)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Rep::new_unchecked(alg.clone(), dim, gens))
}

/// The simple module with the given label, as `Ae / Je`.
pub fn simple_rep(alg: &Arc<Algebra>, label: &str) -> Result<Rep> {
    let p = pim_rep(alg, label)?;
    let j = p.radical_submodule()?;
    Ok(p.quotient(&j).0)
}

/// A projective module with a record of its indecomposable summands.
#[derive(Debug, Clone)]
pub struct ProjectiveSum {
    pub rep: Rep,
    /// Simple label of each summand, in order.
    pub summands: Vec<String>,
    /// Offset of each summand inside `rep`.
    pub offsets: Vec<usize>,
}

impl ProjectiveSum {
    pub fn new(alg: &Arc<Algebra>, labels: Vec<String>) -> Result<ProjectiveSum> {
        let mut cache: BTreeMap<String, Rep> = BTreeMap::new();
        let mut parts = Vec::new();
        let mut offsets = Vec::new();
        let mut off = 0;
        for l in &labels {
            if !cache.contains_key(l) {
                cache.insert(l.clone(), pim_rep(alg, l)?);
            }
            let r = cache[l].clone();
            offsets.push(off);
            off += r.dim();
            parts.push(r);
        }
        let refs: Vec<&Rep> = parts.iter().collect();
        Ok(ProjectiveSum {
            rep: Rep::direct_sum(alg, &refs),
            summands: labels,
            offsets,
        })
    }

    /// The map `P → N` sending the idempotent generator of summand `j` to
    /// `images[j]`, which must lie in `e_j N`.
    pub fn map_to(&self, n: &Rep, images: &[Vector]) -> Result<ModHom> {
        let alg = self.rep.algebra();
        let t = alg.require_tables()?;
        let f = alg.field();
        let mut cols = Vec::with_capacity(self.rep.dim());
        for (j, label) in self.summands.iter().enumerate() {
            let s = t.simple(label)?;
            for w in &s.pim_basis {
                cols.push(n.act(w, &images[j]));
            }
        }
        Ok(ModHom {
            source: self.rep.clone(),
            target: n.clone(),
            matrix: Matrix::from_cols(f, n.dim(), &cols),
        })
    }

    /// Coordinates of the idempotent generator of summand `j` in `rep`.
    pub fn generator(&self, j: usize) -> Vector {
        // the first PIM basis vector is e itself
        vec_ops::unit(self.rep.dim(), self.offsets[j])
    }

    pub fn summand_dim(&self, j: usize) -> usize {
        let end = self.offsets.get(j + 1).copied().unwrap_or(self.rep.dim());
        end - self.offsets[j]
    }
}

/// `dim M` equals the dimension of its projective cover, which always
/// surjects onto `M`.
pub fn is_projective(m: &Rep) -> Result<bool> {
    let t = m.algebra().require_tables()?.clone();
    let tops = top_multiplicities(m)?;
    let cover_dim: usize = tops
        .iter()
        .zip(t.simples())
        .map(|((_, k), s)| k * s.pim_dim())
        .sum();
    Ok(cover_dim == m.dim())
}

/// A corner algebra `eAe` together with its embedding.
#[derive(Debug, Clone)]
pub struct Corner {
    pub alg: Arc<Algebra>,
    pub idempotent: Vector,
    /// Columns are the corner basis as parent vectors.
    pub embed: Matrix,
}

impl Corner {
    pub fn new(parent: &Algebra, e: &[Scalar]) -> Result<Corner> {
        let (alg, embed) = parent.corner(e)?;
        Ok(Corner {
            alg: Arc::new(alg),
            idempotent: e.to_vec(),
            embed,
        })
    }
}

/// `eM` as a module over `eAe`, with the inclusion `eM → M` as a matrix.
pub fn block_component(m: &Rep, corner: &Corner) -> Result<(Rep, Matrix)> {
    if *corner.alg.family() != Family::Corner {
        return Err(Error::UnsupportedAlgebra("not a corner algebra".into()));
    }
    let f = m.field();
    let em = m.action(&corner.idempotent);
    let basis = linalg::row_reduce(&em).image_basis().to_vec();
    let b = Matrix::from_cols(f, m.dim(), &basis);
    let d = basis.len();
    let gens = corner
        .alg
        .generators()
        .iter()
        .map(|g| {
            let a = corner.embed.mul_vec(&g.vector);
            linalg::coordinates(&b, &m.action(&a).mul(&b))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Rep::new_unchecked(corner.alg.clone(), d, gens), b))
}

/// `eM` for an idempotent of the algebra, via a freshly built corner.
pub fn block_component_for(m: &Rep, e: &[Scalar]) -> Result<(Rep, Matrix)> {
    let corner = Corner::new(m.algebra(), e)?;
    block_component(m, &corner)
}

/// Quotient of `A^r` by the submodule spun from `s` seeded random vectors,
/// each pushed into a random power `J^0..J^2` of the radical so that the
/// quotients are often non-projective. Zero quotients are re-drawn.
pub fn random_module(alg: &Arc<Algebra>, r: usize, s: usize, seed: u64) -> Result<Rep> {
    let f = alg.field();
    let dim = alg.dim();
    let free = {
        let one = Rep::regular(alg);
        let parts: Vec<&Rep> = std::iter::repeat_n(&one, r).collect();
        Rep::direct_sum(alg, &parts)
    };
    let radical: Vec<Vector> = match alg.tables() {
        Some(t) => t.radical().to_vec(),
        None => Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_elt = |rng: &mut ChaCha8Rng, span: &[Vector]| -> Vector {
        let mut v = vec![0; dim];
        for b in span {
            vec_ops::axpy(&f, &mut v, rng.gen_range(0..f.p()), b);
        }
        v
    };
    let all: Vec<Vector> = (0..dim).map(|i| alg.basis(i)).collect();
    for _ in 0..256 {
        let mut vs = Vec::new();
        for _ in 0..s {
            let depth = if radical.is_empty() {
                0
            } else {
                rng.gen_range(0..3)
            };
            let mut w = Vec::with_capacity(r * dim);
            for _ in 0..r {
                let mut c = random_elt(&mut rng, &all);
                for _ in 0..depth {
                    let j = random_elt(&mut rng, &radical);
                    c = alg.mul(&j, &c);
                }
                w.extend(c);
            }
            vs.push(w);
        }
        let sub = free.spin(&vs);
        if sub.dim() < free.dim() {
            return Ok(free.quotient(&sub).0);
        }
    }
    Err(Error::Invariant(
        "random module generation kept producing zero".into(),
    ))
}

/// Named standard modules: simples, their projective covers, and for
/// `D(Λ_2)` the simple projectives of the semisimple block.
pub fn standard_modules(alg: &Arc<Algebra>) -> Result<Vec<(String, Rep)>> {
    let labels: Vec<(&str, &str)> = match alg.family() {
        Family::DTaft { n: 2, .. } => vec![("k", "k"), ("k-", "k-")],
        Family::BasicA => vec![("k+", "k+"), ("k-", "k-")],
        other => return Err(Error::UnsupportedAlgebra(format!("{other:?}"))),
    };
    let t = alg.require_tables()?;
    let mut out = Vec::new();
    for (name, label) in &labels {
        out.push((name.to_string(), simple_rep(alg, label)?));
    }
    out.push(("P+".into(), pim_rep(alg, labels[0].1)?));
    out.push(("P-".into(), pim_rep(alg, labels[1].1)?));
    for s in t.simples().iter().skip(2) {
        out.push((s.label.clone(), pim_rep(alg, &s.label)?));
    }
    Ok(out)
}

/// Looks up one of the [`standard_modules`] by name.
pub fn standard_module(alg: &Arc<Algebra>, name: &str) -> Result<Rep> {
    standard_modules(alg)?
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
}
