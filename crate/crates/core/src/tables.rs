//! Structural tables attached to an algebra: radical, simples and their
//! projective covers.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::matrix::Vector;

/// One isomorphism class of simple modules.
#[derive(Debug, Clone)]
pub struct SimpleInfo {
    pub label: String,
    /// A primitive idempotent `e` with `Ae` the projective cover.
    pub idempotent: Vector,
    pub dim: usize,
    /// Basis of the left ideal `Ae`.
    pub pim_basis: Vec<Vector>,
}

impl SimpleInfo {
    pub fn pim_dim(&self) -> usize {
        self.pim_basis.len()
    }
}

#[derive(Debug, Clone)]
pub struct Tables {
    radical: Vec<Vector>,
    radical_generators: Vec<Vector>,
    simples: Vec<SimpleInfo>,
    central: Vec<(String, Vector)>,
}

fn span_dim(alg: &Algebra, vs: impl IntoIterator<Item = Vector>) -> usize {
    let mut s = Subspace::new(alg.field(), alg.dim());
    for v in vs {
        s.insert(v);
    }
    s.dim()
}

/// Basis of `Ae`, greedily from `b_i e` in basis order.
pub fn left_ideal_basis(alg: &Algebra, e: &[u32]) -> Vec<Vector> {
    let mut s = Subspace::new(alg.field(), alg.dim());
    let mut out = Vec::new();
    for i in 0..alg.dim() {
        let v = alg.mul(&alg.basis(i), e);
        if s.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

impl Tables {
    /// Assembles and checks the tables: each idempotent must be primitive,
    /// they must be pairwise inequivalent, and `A ≅ ⊕ P_S^{dim S}` must hold
    /// on dimensions.
    pub fn build(
        alg: &Algebra,
        radical: Vec<Vector>,
        idempotents: Vec<(String, Vector)>,
        central: Vec<(String, Vector)>,
    ) -> Result<Tables> {
        let f = alg.field();
        let dim = alg.dim();
        let j = Subspace::spanned_by(f, dim, &radical);
        let radical: Vec<Vector> = j.basis().to_vec();

        // small right-ideal generating set: J = sum r A
        let mut radical_generators = Vec::new();
        let mut covered = Subspace::new(f, dim);
        for r in &radical {
            if covered.contains(r) {
                continue;
            }
            radical_generators.push(r.clone());
            for i in 0..dim {
                covered.insert(alg.mul(r, &alg.basis(i)));
            }
            if covered.dim() == j.dim() {
                break;
            }
        }

        let mut simples: Vec<SimpleInfo> = Vec::new();
        for (label, e) in idempotents {
            if !alg.is_idempotent(&e) {
                return Err(Error::NotIdempotent);
            }
            let basis: Vec<Vector> = (0..dim).map(|i| alg.basis(i)).collect();
            let eae = span_dim(alg, basis.iter().map(|b| alg.mul(&alg.mul(&e, b), &e)));
            let eje = span_dim(alg, radical.iter().map(|r| alg.mul(&alg.mul(&e, r), &e)));
            if eae - eje != 1 {
                return Err(Error::Invariant(format!(
                    "idempotent for {label} is not primitive"
                )));
            }
            for s in &simples {
                // Hom(Ae', Ae) = e'Ae is nonzero modulo the radical iff the tops agree
                let e2 = &s.idempotent;
                let cross = span_dim(alg, basis.iter().map(|b| alg.mul(&alg.mul(e2, b), &e)));
                let cross_j = span_dim(alg, radical.iter().map(|r| alg.mul(&alg.mul(e2, r), &e)));
                if cross != cross_j {
                    return Err(Error::Invariant(format!(
                        "idempotents for {label} and {} are equivalent",
                        s.label
                    )));
                }
            }
            let pim_basis = left_ideal_basis(alg, &e);
            let je = span_dim(alg, radical.iter().map(|r| alg.mul(r, &e)));
            simples.push(SimpleInfo {
                label,
                dim: pim_basis.len() - je,
                idempotent: e,
                pim_basis,
            });
        }
        let total: usize = simples.iter().map(|s| s.dim * s.pim_dim()).sum();
        if total != dim {
            return Err(Error::Invariant(format!(
                "simples table incomplete: covers {total} of {dim} dimensions"
            )));
        }
        Ok(Tables {
            radical,
            radical_generators,
            simples,
            central,
        })
    }

    pub fn radical(&self) -> &[Vector] {
        &self.radical
    }

    /// Elements `r` with `J = Σ rA`, so `JM = Σ rM` for every module `M`.
    pub fn radical_generators(&self) -> &[Vector] {
        &self.radical_generators
    }

    pub fn simples(&self) -> &[SimpleInfo] {
        &self.simples
    }

    pub fn simple(&self, label: &str) -> Result<&SimpleInfo> {
        self.simples
            .iter()
            .find(|s| s.label == label)
            .ok_or_else(|| Error::UnknownSymbol(label.to_string()))
    }

    pub fn central_idempotents(&self) -> &[(String, Vector)] {
        &self.central
    }
}
