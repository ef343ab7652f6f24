//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::hopf::HopfData;
use crate::linalg::{self, Subspace};
use crate::matrix::{vec_ops, Matrix, Vector};
use crate::tables::Tables;
use std::fmt;
use std::sync::Arc;

/// Which construction an algebra came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The Drinfel'd double of the Taft algebra of order `n`, with root `q`.
    DTaft { n: usize, q: Scalar },
    /// The eight-dimensional basic algebra on `y1, y2, g`.
    BasicA,
    /// `<g, G, alpha x + beta X>` inside the `n = 2` double.
    SubH { alpha: Scalar, beta: Scalar },
    /// `<alpha y1 + beta y2, g>` inside the basic algebra.
    SubB { alpha: Scalar, beta: Scalar },
    /// A corner algebra `eAe` with unit `e`.
    Corner,
    /// Anything else, e.g. matrix algebras used in tests.
    Other(String),
}

impl Family {
    /// Tag used in the module file format.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::DTaft { .. } => "d-taft",
            Family::BasicA => "basic-A",
            Family::SubH { .. } => "sub-H",
            Family::SubB { .. } => "sub-B",
            Family::Corner => "corner",
            Family::Other(_) => "other",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub vector: Vector,
}

/// A defining relation: a linear combination of words in the generators
/// that must vanish.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

/// How module actions are validated.
#[derive(Debug, Clone)]
pub enum Presentation {
    /// Generators and a complete list of defining relations.
    Relations(Vec<Relation>),
    /// No presentation: every basis element is a generator and modules are
    /// checked against the full multiplication table.
    FullTable,
}

#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    family: Family,
    dim: usize,
    labels: Vec<String>,
    /// `mult[(i * dim + j) * dim + k]` is the coefficient of `b_k` in `b_i b_j`.
    mult: Vec<Scalar>,
    unit: Vector,
    generators: Vec<Generator>,
    /// Each basis element as a word in the generators.
    basis_words: Vec<Vec<usize>>,
    presentation: Presentation,
    named: Vec<(String, Vector)>,
    hopf: Option<HopfData>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("family", &self.family)
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.family == other.family
            && self.dim == other.dim
            && self.mult == other.mult
    }
}

/// Inputs for [`Algebra::from_table`].
pub struct AlgebraParts {
    pub field: PrimeField,
    pub family: Family,
    pub labels: Vec<String>,
    pub mult: Vec<Scalar>,
    pub unit: Vector,
    pub generators: Vec<Generator>,
    pub basis_words: Vec<Vec<usize>>,
    pub presentation: Presentation,
}

impl Algebra {
    /// Assembles an algebra and checks that the basis words reproduce the basis.
    pub fn from_table(parts: AlgebraParts) -> Result<Self> {
        let dim = parts.labels.len();
        if parts.mult.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: parts.mult.len(),
            });
        }
        let alg = Algebra {
            field: parts.field,
            family: parts.family,
            dim,
            labels: parts.labels,
            mult: parts.mult,
            unit: parts.unit,
            generators: parts.generators,
            basis_words: parts.basis_words,
            presentation: parts.presentation,
            named: Vec::new(),
            hopf: None,
            tables: None,
        };
        for (i, w) in alg.basis_words.iter().enumerate() {
            if alg.eval_word(w) != vec_ops::unit(dim, i) {
                return Err(Error::RelationCheckFailed(format!(
                    "basis word for `{}` does not evaluate to the basis element",
                    alg.labels[i]
                )));
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn family(&self) -> &Family {
        &self.family
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &Vector {
        &self.unit
    }
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
    pub fn basis_words(&self) -> &[Vec<usize>] {
        &self.basis_words
    }
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }
    pub fn hopf(&self) -> Option<&HopfData> {
        self.hopf.as_ref()
    }
    pub fn tables(&self) -> Option<&Arc<Tables>> {
        self.tables.as_ref()
    }
    pub fn require_tables(&self) -> Result<&Arc<Tables>> {
        self.tables.as_ref().ok_or(Error::MissingTables)
    }

    pub(crate) fn set_hopf(&mut self, hopf: HopfData) {
        self.hopf = Some(hopf);
    }
    pub(crate) fn set_tables(&mut self, tables: Tables) {
        self.tables = Some(Arc::new(tables));
    }
    pub(crate) fn add_named(&mut self, name: &str, v: Vector) {
        self.named.push((name.to_string(), v));
    }

    /// A named structural element such as `f+` or `e-`.
    pub fn named(&self, name: &str) -> Option<&Vector> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn named_elements(&self) -> &[(String, Vector)] {
        &self.named
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn generator(&self, name: &str) -> Result<&Vector> {
        Ok(&self.generators[self.generator_index(name)?].vector)
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> Vector {
        vec_ops::unit(self.dim, i)
    }

    /// Coefficients of `b_i b_j`.
    #[inline]
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim;
        &self.mult[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                vec_ops::axpy(&f, &mut out, f.mul(ai, bj), self.product_of_basis(i, j));
            }
        }
        out
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        vec_ops::add(&self.field, a, b)
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        vec_ops::sub(&self.field, a, b)
    }

    pub fn scale(&self, c: Scalar, a: &[Scalar]) -> Vector {
        vec_ops::scale(&self.field, c, a)
    }

    pub fn pow(&self, a: &[Scalar], mut e: u64) -> Vector {
        let mut base = a.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Product of the generators named by `word`.
    pub fn eval_word(&self, word: &[usize]) -> Vector {
        word.iter().fold(self.unit.clone(), |acc, &g| {
            self.mul(&acc, &self.generators[g].vector)
        })
    }

    /// Matrix of `v -> a v` in the basis.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(self.field, self.dim, &cols)
    }

    /// Matrix of `v -> v a` in the basis.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_cols(self.field, self.dim, &cols)
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    pub fn commutes_with_generators(&self, z: &[Scalar]) -> bool {
        self.generators
            .iter()
            .all(|g| self.mul(z, &g.vector) == self.mul(&g.vector, z))
    }

    /// Checks every defining relation in the structure constants.
    pub fn check_relations(&self) -> Result<()> {
        if let Presentation::Relations(rels) = &self.presentation {
            for r in rels {
                let mut acc = vec![0; self.dim];
                for (c, w) in &r.terms {
                    vec_ops::axpy(&self.field, &mut acc, *c, &self.eval_word(w));
                }
                if !vec_ops::is_zero(&acc) {
                    return Err(Error::RelationCheckFailed(r.name.clone()));
                }
            }
        }
        Ok(())
    }

    /// Associativity on all basis triples plus the unit law.
    pub fn check_associativity(&self) -> Result<()> {
        self.check_unit()?;
        let all: Vec<usize> = (0..self.dim).collect();
        self.check_associativity_against(&all)
    }

    /// `(a b) s = a (b s)` for all basis `a, b` and generators `s`. When every
    /// basis element is (prefix basis element) times (generator), which holds
    /// for word bases closed under prefixes, this is equivalent to full
    /// associativity by induction on word length.
    pub fn check_associativity_generators(&self) -> Result<()> {
        self.check_unit()?;
        for (i, w) in self.basis_words.iter().enumerate() {
            if let Some((&last, prefix)) = w.split_last() {
                let lhs = self.mul(&self.eval_word(prefix), &self.generators[last].vector);
                if lhs != self.basis(i) {
                    return Err(Error::RelationCheckFailed(
                        "basis words are not prefix-closed".into(),
                    ));
                }
            }
        }
        let gens: Vec<Vector> = self.generators.iter().map(|g| g.vector.clone()).collect();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let ab = self.product_of_basis(a, b).to_vec();
                for s in &gens {
                    let lhs = self.mul(&ab, s);
                    let bs = self.mul(&self.basis(b), s);
                    let rhs = self.mul(&self.basis(a), &bs);
                    if lhs != rhs {
                        return Err(Error::RelationCheckFailed(format!(
                            "associativity fails at ({}, {}, generator)",
                            self.labels[a], self.labels[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::RelationCheckFailed("unit law".into()));
            }
        }
        Ok(())
    }

    fn check_associativity_against(&self, third: &[usize]) -> Result<()> {
        for a in 0..self.dim {
            for b in 0..self.dim {
                let ab = self.product_of_basis(a, b).to_vec();
                for &c in third {
                    let lhs = self.mul(&ab, &self.basis(c));
                    let rhs = self.mul(&self.basis(a), self.product_of_basis(b, c));
                    if lhs != rhs {
                        return Err(Error::RelationCheckFailed(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Pretty-prints an element as a linear combination of basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = self.field.to_signed(c);
                if self.labels[i] == "1" {
                    format!("{c}")
                } else if c == 1 {
                    self.labels[i].clone()
                } else if c == -1 {
                    format!("-{}", self.labels[i])
                } else {
                    format!("{c}{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Builds an algebra on a subspace closed under multiplication. The
    /// subspace basis is given as parent vectors (columns of the embedding),
    /// each with a label and a word in the chosen generators.
    pub fn subalgebra(
        parent: &Algebra,
        family: Family,
        spec: SubalgebraSpec,
    ) -> Result<(Algebra, Matrix)> {
        let SubalgebraSpec {
            generators,
            basis_words,
            labels,
            relations,
            unit,
        } = spec;
        // evaluate basis words in the parent
        let basis: Vec<Vector> = basis_words
            .iter()
            .map(|w| {
                w.iter()
                    .fold(unit.clone(), |acc, &g| parent.mul(&acc, &generators[g].1))
            })
            .collect();
        let dim = basis.len();
        let embed = Matrix::from_cols(parent.field, parent.dim, &basis);
        let rr = linalg::row_reduce(&embed);
        if rr.rank() != dim {
            return Err(Error::Invariant("subalgebra basis is dependent".into()));
        }
        let f = parent.field;
        let mut mult = vec![0; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let prod = parent.mul(&basis[i], &basis[j]);
                let c = rr
                    .solve(&prod)
                    .map_err(|_| Error::Invariant("subspace not closed under products".into()))?;
                mult[(i * dim + j) * dim..(i * dim + j + 1) * dim].copy_from_slice(&c);
            }
        }
        let coords = |v: &Vector| rr.solve(v);
        let sub_unit =
            coords(&unit).map_err(|_| Error::Invariant("unit outside subspace".into()))?;
        let gens = generators
            .iter()
            .map(|(name, v)| {
                Ok(Generator {
                    name: name.clone(),
                    vector: coords(v).map_err(|_| {
                        Error::Invariant(format!("generator {name} outside subspace"))
                    })?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let presentation = match relations {
            Some(r) => Presentation::Relations(r),
            None => Presentation::FullTable,
        };
        let sub = Algebra::from_table(AlgebraParts {
            field: f,
            family,
            labels,
            mult,
            unit: sub_unit,
            generators: gens,
            basis_words,
            presentation,
        })?;
        Ok((sub, embed))
    }

    /// The corner algebra `e A e` with unit `e`; every basis element is a generator.
    pub fn corner(&self, e: &[Scalar]) -> Result<(Algebra, Matrix)> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let span: Vec<Vector> = (0..self.dim)
            .map(|i| self.mul(&self.mul(e, &self.basis(i)), e))
            .collect();
        let sub = Subspace::spanned_by(self.field, self.dim, &span);
        let basis: Vec<Vector> = sub.basis().to_vec();
        let n = basis.len();
        let generators: Vec<(String, Vector)> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| (format!("c{i}"), v.clone()))
            .collect();
        let spec = SubalgebraSpec {
            labels: (0..n).map(|i| format!("c{i}")).collect(),
            basis_words: (0..n).map(|i| vec![i]).collect(),
            generators,
            relations: None,
            unit: e.to_vec(),
        };
        Algebra::subalgebra(self, Family::Corner, spec)
    }

    /// Direct product of algebras (block-diagonal structure constants).
    pub fn direct_product(name: &str, parts: &[&Algebra]) -> Result<Algebra> {
        let f = parts[0].field;
        let dim: usize = parts.iter().map(|a| a.dim).sum();
        let mut mult = vec![0; dim * dim * dim];
        let mut unit = vec![0; dim];
        let mut labels = Vec::new();
        let mut off = 0;
        for (k, a) in parts.iter().enumerate() {
            for i in 0..a.dim {
                unit[off + i] = a.unit[i];
                labels.push(format!("{}_{k}", a.labels[i]));
                for j in 0..a.dim {
                    let src = a.product_of_basis(i, j);
                    let base = ((off + i) * dim + off + j) * dim + off;
                    mult[base..base + a.dim].copy_from_slice(src);
                }
            }
            off += a.dim;
        }
        let generators = (0..dim)
            .map(|i| Generator {
                name: labels[i].clone(),
                vector: vec_ops::unit(dim, i),
            })
            .collect();
        Algebra::from_table(AlgebraParts {
            field: f,
            family: Family::Other(name.into()),
            labels,
            mult,
            unit,
            generators,
            basis_words: (0..dim).map(|i| vec![i]).collect(),
            presentation: Presentation::FullTable,
        })
    }

    /// The full matrix algebra `M_m(F_p)` with matrix units as basis.
    pub fn matrix_algebra(field: PrimeField, m: usize) -> Result<Algebra> {
        let dim = m * m;
        let mut mult = vec![0; dim * dim * dim];
        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    // E_ij E_jl = E_il
                    let a = i * m + j;
                    let b = j * m + l;
                    mult[(a * dim + b) * dim + i * m + l] = 1;
                }
            }
        }
        let mut unit = vec![0; dim];
        for i in 0..m {
            unit[i * m + i] = 1;
        }
        let labels: Vec<String> = (0..dim).map(|a| format!("E{}{}", a / m, a % m)).collect();
        let generators = (0..dim)
            .map(|i| Generator {
                name: labels[i].clone(),
                vector: vec_ops::unit(dim, i),
            })
            .collect();
        Algebra::from_table(AlgebraParts {
            field,
            family: Family::Other(format!("M{m}")),
            labels,
            mult,
            unit,
            generators,
            basis_words: (0..dim).map(|i| vec![i]).collect(),
            presentation: Presentation::FullTable,
        })
    }
}

/// Description of a subalgebra for [`Algebra::subalgebra`].
pub struct SubalgebraSpec {
    /// Generator names with their parent vectors.
    pub generators: Vec<(String, Vector)>,
    pub basis_words: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub relations: Option<Vec<Relation>>,
    /// Parent vector acting as the unit (the parent unit for ordinary subalgebras).
    pub unit: Vector,
}

/// A subalgebra together with its embedding into the parent.
#[derive(Debug, Clone)]
pub struct SubalgebraEmbedding {
    pub sub: Arc<Algebra>,
    pub parent: Arc<Algebra>,
    /// `parent.dim x sub.dim`, columns are the images of the sub basis.
    pub embed: Matrix,
}

impl SubalgebraEmbedding {
    pub fn image(&self, v: &[Scalar]) -> Vector {
        self.embed.mul_vec(v)
    }

    /// Injective, unital and multiplicative on all basis pairs.
    pub fn verify(&self) -> Result<()> {
        let (sub, parent) = (&self.sub, &self.parent);
        if linalg::rank(&self.embed) != sub.dim() {
            return Err(Error::Invariant("embedding not injective".into()));
        }
        if self.image(sub.unit()) != *parent.unit() {
            return Err(Error::Invariant("embedding not unital".into()));
        }
        for i in 0..sub.dim() {
            for j in 0..sub.dim() {
                let lhs = self.image(sub.product_of_basis(i, j));
                let rhs = parent.mul(&self.embed.col(i), &self.embed.col(j));
                if lhs != rhs {
                    return Err(Error::Invariant("embedding not multiplicative".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_associative() {
        let f = PrimeField::new(17, 2).unwrap();
        let m2 = Algebra::matrix_algebra(f, 2).unwrap();
        m2.check_associativity().unwrap();
        let e00 = m2.basis(0);
        assert!(m2.is_idempotent(&e00));
        assert!(!m2.commutes_with_generators(&e00));
        let prod = Algebra::direct_product("M2xM2", &[&m2, &m2]).unwrap();
        assert_eq!(prod.dim(), 8);
        prod.check_associativity().unwrap();
    }
}
