//! Coproduct, counit and antipode tables and the Hopf axiom checker.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::matrix::{vec_ops, Matrix, Vector};
use std::collections::BTreeMap;

/// Sparse element of `A ⊗ A`, keyed by basis index pairs.
pub type Tensor = BTreeMap<(usize, usize), Scalar>;

fn tensor_add(f: &PrimeField, t: &mut Tensor, key: (usize, usize), c: Scalar) {
    if c == 0 {
        return;
    }
    let e = t.entry(key).or_insert(0);
    *e = f.add(*e, c);
    if *e == 0 {
        t.remove(&key);
    }
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, extended bilinearly.
pub fn tensor_mul(alg: &Algebra, s: &Tensor, t: &Tensor) -> Tensor {
    let f = alg.field();
    let mut out = Tensor::new();
    for (&(a, b), &c1) in s {
        for (&(c, d), &c2) in t {
            let left = alg.product_of_basis(a, c);
            let right = alg.product_of_basis(b, d);
            let coef = f.mul(c1, c2);
            for (i, &l) in left.iter().enumerate() {
                if l == 0 {
                    continue;
                }
                let lc = f.mul(coef, l);
                for (j, &r) in right.iter().enumerate() {
                    if r != 0 {
                        tensor_add(&f, &mut out, (i, j), f.mul(lc, r));
                    }
                }
            }
        }
    }
    out
}

/// Builds a tensor from `(coefficient, left basis index, right basis index)` triples.
pub fn tensor_from_terms(f: &PrimeField, terms: &[(Scalar, usize, usize)]) -> Tensor {
    let mut t = Tensor::new();
    for &(c, a, b) in terms {
        tensor_add(f, &mut t, (a, b), c);
    }
    t
}

/// Hopf structure stored as explicit tables on the basis.
#[derive(Debug, Clone)]
pub struct HopfData {
    coproduct: Vec<Tensor>,
    counit: Vector,
    /// Column `i` is `S(b_i)`.
    antipode: Matrix,
}

impl HopfData {
    /// Extends generator data multiplicatively along the basis words:
    /// `Δ` and `ε` as algebra maps, `S` as an anti-algebra map.
    pub fn from_generators(
        alg: &Algebra,
        coproducts: &[Tensor],
        counits: &[Scalar],
        antipodes: &[Vector],
    ) -> Self {
        let f = alg.field();
        let dim = alg.dim();
        let one = {
            let mut t = Tensor::new();
            for (i, &c) in alg.unit().iter().enumerate() {
                for (j, &d) in alg.unit().iter().enumerate() {
                    tensor_add(&f, &mut t, (i, j), f.mul(c, d));
                }
            }
            t
        };
        let mut coproduct = Vec::with_capacity(dim);
        let mut counit = Vec::with_capacity(dim);
        let mut antipode_cols = Vec::with_capacity(dim);
        for w in alg.basis_words() {
            let mut d = one.clone();
            let mut e = 1;
            let mut s = alg.unit().clone();
            for &g in w {
                d = tensor_mul(alg, &d, &coproducts[g]);
                e = f.mul(e, counits[g]);
                s = alg.mul(&antipodes[g], &s);
            }
            coproduct.push(d);
            counit.push(e);
            antipode_cols.push(s);
        }
        HopfData {
            coproduct,
            counit,
            antipode: Matrix::from_cols(f, dim, &antipode_cols),
        }
    }

    pub fn coproduct(&self, i: usize) -> &Tensor {
        &self.coproduct[i]
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// Coproduct of an arbitrary element.
    pub fn coproduct_of(&self, f: &PrimeField, v: &[Scalar]) -> Tensor {
        let mut out = Tensor::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (&k, &d) in &self.coproduct[i] {
                tensor_add(f, &mut out, k, f.mul(c, d));
            }
        }
        out
    }

    /// `Δ` as a `dim x dim²` matrix; row `i` holds `Δ(b_i)` with the left
    /// tensor factor major.
    pub fn coproduct_matrix(&self, f: PrimeField) -> Matrix {
        let dim = self.coproduct.len();
        let mut m = Matrix::zeros(f, dim, dim * dim);
        for (i, t) in self.coproduct.iter().enumerate() {
            for (&(a, b), &c) in t {
                m.set(i, a * dim + b, c);
            }
        }
        m
    }

    pub fn counit_of(&self, f: &PrimeField, v: &[Scalar]) -> Scalar {
        vec_ops::dot(f, &self.counit, v)
    }
}

/// Outcome of [`verify_hopf_axioms`].
#[derive(Debug, Clone)]
pub struct HopfReport {
    pub checked_elements: usize,
    /// Every failing check, in the order encountered.
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&str> {
        self.failures.first().map(|s| s.as_str())
    }
}

/// Checks coassociativity, the counit law, that `Δ` and `ε` are algebra maps
/// on all basis pairs, and the antipode law, on every basis element.
pub fn verify_hopf_axioms(alg: &Algebra) -> Result<HopfReport> {
    let h = alg.hopf().ok_or(Error::MissingHopfData)?;
    let f = alg.field();
    let dim = alg.dim();
    let mut failures = Vec::new();
    let label = |i: usize| alg.labels()[i].clone();

    for i in 0..dim {
        let d = h.coproduct(i);
        // coassociativity in A ⊗ A ⊗ A
        let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (&(a, b), &c) in d {
            for (&(a1, a2), &c1) in h.coproduct(a) {
                let e = left.entry((a1, a2, b)).or_insert(0);
                *e = f.mul_add(*e, c, c1);
            }
            for (&(b1, b2), &c2) in h.coproduct(b) {
                let e = right.entry((a, b1, b2)).or_insert(0);
                *e = f.mul_add(*e, c, c2);
            }
        }
        left.retain(|_, c| *c != 0);
        right.retain(|_, c| *c != 0);
        if left != right {
            failures.push(format!("coassociativity fails on {}", label(i)));
        }

        // counit
        let mut l = vec![0; dim];
        let mut r = vec![0; dim];
        for (&(a, b), &c) in d {
            l[b] = f.mul_add(l[b], c, h.counit()[a]);
            r[a] = f.mul_add(r[a], c, h.counit()[b]);
        }
        let bi = alg.basis(i);
        if l != bi || r != bi {
            failures.push(format!("counit law fails on {}", label(i)));
        }
    }

    // algebra maps
    let one_one = tensor_from_terms(&f, &[(1, 0, 0)]);
    if alg.unit() != &alg.basis(0) || h.coproduct(0) != &one_one || h.counit()[0] != 1 {
        failures.push("Δ or ε not unital".into());
    }
    'pairs: for i in 0..dim {
        for j in 0..dim {
            let prod = alg.product_of_basis(i, j);
            let lhs = h.coproduct_of(&f, prod);
            let rhs = tensor_mul(alg, h.coproduct(i), h.coproduct(j));
            if lhs != rhs {
                failures.push(format!(
                    "Δ is not multiplicative on ({}, {})",
                    label(i),
                    label(j)
                ));
                break 'pairs;
            }
            if h.counit_of(&f, prod) != f.mul(h.counit()[i], h.counit()[j]) {
                failures.push(format!(
                    "ε is not multiplicative on ({}, {})",
                    label(i),
                    label(j)
                ));
                break 'pairs;
            }
        }
    }

    // antipode
    for i in 0..dim {
        let eps_unit = alg.scale(h.counit()[i], alg.unit());
        let mut l = vec![0; dim];
        let mut r = vec![0; dim];
        for (&(a, b), &c) in h.coproduct(i) {
            let sa = h.antipode().col(a);
            let sb = h.antipode().col(b);
            vec_ops::axpy(&f, &mut l, c, &alg.mul(&sa, &alg.basis(b)));
            vec_ops::axpy(&f, &mut r, c, &alg.mul(&alg.basis(a), &sb));
        }
        if l != eps_unit || r != eps_unit {
            failures.push(format!("antipode law fails on {}", label(i)));
        }
    }

    Ok(HopfReport {
        checked_elements: dim,
        failures,
    })
}
