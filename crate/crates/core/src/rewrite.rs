//! Normal forms for words in the generators by confluent rewriting.
//!
//! A normal word is a nondecreasing sequence of symbols in which every symbol
//! occurs fewer times than its order. Out-of-order adjacent pairs are replaced
//! by their commutation rule, and full powers are replaced by zero or one.

use crate::algebra::{Algebra, AlgebraParts, Family, Generator, Presentation, Relation};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::matrix::Vector;
use std::collections::{BTreeMap, HashMap};

/// What a full power `s^order` rewrites to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerRule {
    Zero,
    One,
}

/// A linear combination of words.
type Combination = Vec<(Scalar, Vec<usize>)>;

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    field: PrimeField,
    symbols: Vec<String>,
    orders: Vec<usize>,
    powers: Vec<PowerRule>,
    /// `(a, b)` with `a > b`: the word `a b` rewrites to this combination.
    swaps: HashMap<(usize, usize), Combination>,
}

impl RewriteSystem {
    pub fn new(
        field: PrimeField,
        symbols: &[&str],
        orders: &[usize],
        powers: &[PowerRule],
    ) -> Self {
        RewriteSystem {
            field,
            symbols: symbols.iter().map(|s| s.to_string()).collect(),
            orders: orders.to_vec(),
            powers: powers.to_vec(),
            swaps: HashMap::new(),
        }
    }

    /// Registers `a b -> sum c_i w_i` for a pair with `a > b`.
    pub fn swap(mut self, a: usize, b: usize, rhs: Vec<(Scalar, Vec<usize>)>) -> Self {
        assert!(a > b, "swap rules only reorder descending pairs");
        self.swaps.insert((a, b), rhs);
        self
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Number of normal monomials.
    pub fn basis_size(&self) -> usize {
        self.orders.iter().product()
    }

    /// Position of an exponent vector in the lexicographic monomial order.
    pub fn monomial_index(&self, exps: &[usize]) -> usize {
        exps.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&e, &o)| acc * o + e)
    }

    pub fn monomial_exponents(&self, mut index: usize) -> Vec<usize> {
        let mut exps = vec![0; self.orders.len()];
        for (k, &o) in self.orders.iter().enumerate().rev() {
            exps[k] = index % o;
            index /= o;
        }
        exps
    }

    pub fn monomial_word(&self, exps: &[usize]) -> Vec<usize> {
        exps.iter()
            .enumerate()
            .flat_map(|(s, &e)| std::iter::repeat_n(s, e))
            .collect()
    }

    pub fn monomial_label(&self, exps: &[usize]) -> String {
        let s: String = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    self.symbols[k].clone()
                } else {
                    format!("{}^{e}", self.symbols[k])
                }
            })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// Expands a word into its normal form, keyed by monomial index.
    pub fn normal_form(&self, word: &[usize]) -> BTreeMap<usize, Scalar> {
        let f = self.field;
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut stack: Vec<(Scalar, Vec<usize>)> = vec![(1, word.to_vec())];
        'outer: while let Some((c, w)) = stack.pop() {
            if c == 0 {
                continue;
            }
            // first descending pair
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a > b {
                    let rhs = &self.swaps[&(a, b)];
                    for (rc, rw) in rhs {
                        let mut nw = Vec::with_capacity(w.len() + rw.len());
                        nw.extend_from_slice(&w[..i]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[i + 2..]);
                        stack.push((f.mul(c, *rc), nw));
                    }
                    continue 'outer;
                }
            }
            // sorted: look for a full power
            let mut i = 0;
            while i < w.len() {
                let s = w[i];
                let mut j = i;
                while j < w.len() && w[j] == s {
                    j += 1;
                }
                if j - i >= self.orders[s] {
                    match self.powers[s] {
                        PowerRule::Zero => {}
                        PowerRule::One => {
                            let mut nw = w[..i].to_vec();
                            nw.extend_from_slice(&w[i + self.orders[s]..]);
                            stack.push((c, nw));
                        }
                    }
                    continue 'outer;
                }
                i = j;
            }
            let mut exps = vec![0; self.orders.len()];
            for &s in &w {
                exps[s] += 1;
            }
            let e = out.entry(self.monomial_index(&exps)).or_insert(0);
            *e = f.add(*e, c);
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Normal form as a dense coefficient vector.
    pub fn normal_form_vector(&self, word: &[usize]) -> Vector {
        let mut v = vec![0; self.basis_size()];
        for (k, c) in self.normal_form(word) {
            v[k] = c;
        }
        v
    }

    /// Normal form of a word given by symbol names.
    pub fn normal_form_named(&self, word: &[&str]) -> Result<Vector> {
        let w = word
            .iter()
            .map(|s| self.symbol_index(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.normal_form_vector(&w))
    }

    /// Builds the structure-constant algebra on the normal monomials.
    pub fn build_algebra(&self, family: Family, relations: Vec<Relation>) -> Result<Algebra> {
        let dim = self.basis_size();
        let words: Vec<Vec<usize>> = (0..dim)
            .map(|k| self.monomial_word(&self.monomial_exponents(k)))
            .collect();
        let labels: Vec<String> = (0..dim)
            .map(|k| self.monomial_label(&self.monomial_exponents(k)))
            .collect();
        let mut mult = vec![0; dim * dim * dim];
        let mut buf = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                buf.clear();
                buf.extend_from_slice(&words[i]);
                buf.extend_from_slice(&words[j]);
                let base = (i * dim + j) * dim;
                for (k, c) in self.normal_form(&buf) {
                    mult[base + k] = c;
                }
            }
        }
        let generators = (0..self.symbols.len())
            .map(|s| {
                let mut exps = vec![0; self.symbols.len()];
                exps[s] = 1;
                let mut v = vec![0; dim];
                v[self.monomial_index(&exps)] = 1;
                Generator {
                    name: self.symbols[s].clone(),
                    vector: v,
                }
            })
            .collect();
        let mut unit = vec![0; dim];
        unit[0] = 1;
        Algebra::from_table(AlgebraParts {
            field: self.field,
            family,
            labels,
            mult,
            unit,
            generators,
            basis_words: words,
            presentation: Presentation::Relations(relations),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_toy() {
        // k[a]/(a^2) with b^2 = 1 and ba = -ab
        let f = PrimeField::new(17, 2).unwrap();
        let rs = RewriteSystem::new(f, &["a", "b"], &[2, 2], &[PowerRule::Zero, PowerRule::One])
            .swap(1, 0, vec![(16, vec![0, 1])]);
        assert_eq!(rs.basis_size(), 4);
        let v = rs.normal_form_named(&["b", "a", "b"]).unwrap();
        // b a b = -a b b = -a
        assert_eq!(v[rs.monomial_index(&[1, 0])], 16);
        assert_eq!(rs.normal_form_named(&["a", "b", "a"]).unwrap(), vec![0; 4]);
        assert!(matches!(
            rs.normal_form_named(&["c"]),
            Err(Error::UnknownSymbol(_))
        ));
    }
}
