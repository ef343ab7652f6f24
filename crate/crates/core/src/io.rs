//! The JSON module file format: `{"p", "family", "n", "dim", "generators"}`
//! with row-major matrices of canonical residues.

use crate::algebra::{Algebra, Family};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::rep::Rep;
use crate::taft;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub p: u64,
    pub family: String,
    pub n: u64,
    pub dim: usize,
    pub generators: BTreeMap<String, Vec<Vec<u64>>>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

impl ModuleFile {
    pub fn from_rep(m: &Rep) -> Result<ModuleFile> {
        let alg = m.algebra();
        let n = match alg.family() {
            Family::DTaft { n, .. } => *n as u64,
            Family::BasicA => 2,
            other => {
                return Err(Error::UnsupportedAlgebra(format!(
                    "no file format for {}",
                    other.tag()
                )))
            }
        };
        let generators = alg
            .generators()
            .iter()
            .zip(m.generator_matrices())
            .map(|(g, mat)| {
                let rows = mat
                    .to_rows()
                    .into_iter()
                    .map(|r| r.into_iter().map(u64::from).collect())
                    .collect();
                (g.name.clone(), rows)
            })
            .collect();
        Ok(ModuleFile {
            p: m.field().p() as u64,
            family: alg.family().tag().into(),
            n,
            dim: m.dim(),
            generators,
        })
    }

    pub fn parse(text: &str) -> Result<ModuleFile> {
        serde_json::from_str(text).map_err(|e| {
            parse_err(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module file serializes")
    }

    /// Builds the algebra named by the header.
    pub fn build_algebra(&self) -> Result<Arc<Algebra>> {
        let field = PrimeField::new(self.p, self.n)?;
        let alg = match self.family.as_str() {
            "d-taft" => taft::build_drinfeld_double(self.n as usize, field)?,
            "basic-A" => taft::build_basic_algebra_a(field)?,
            other => return Err(parse_err("family", format!("unknown family {other:?}"))),
        };
        Ok(Arc::new(alg))
    }

    /// Checks the header against `alg` and the matrices, then verifies the
    /// defining relations.
    pub fn to_rep(&self, alg: &Arc<Algebra>) -> Result<Rep> {
        let f = alg.field();
        if self.p != f.p() as u64 || self.family != alg.family().tag() {
            return Err(parse_err(
                "header",
                format!(
                    "file is over {} mod {}, algebra is {} mod {}",
                    self.family,
                    self.p,
                    alg.family().tag(),
                    f.p()
                ),
            ));
        }
        if let Family::DTaft { n, .. } = alg.family() {
            if *n as u64 != self.n {
                return Err(parse_err("n", format!("expected {n}, got {}", self.n)));
            }
        }
        let mut mats = Vec::new();
        for g in alg.generators() {
            let rows = self
                .generators
                .get(&g.name)
                .ok_or_else(|| parse_err(format!("generators.{}", g.name), "missing"))?;
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(parse_err(
                    format!("generators.{}", g.name),
                    format!("expected a {0}x{0} matrix", self.dim),
                ));
            }
            let mut data = Vec::with_capacity(self.dim * self.dim);
            for (i, r) in rows.iter().enumerate() {
                for (j, &x) in r.iter().enumerate() {
                    if x >= self.p {
                        return Err(parse_err(
                            format!("generators.{}[{i}][{j}]", g.name),
                            format!("{x} is not a residue in [0, {})", self.p),
                        ));
                    }
                    data.push(x as u32);
                }
            }
            mats.push((
                g.name.clone(),
                Matrix::from_data(f, self.dim, self.dim, data),
            ));
        }
        if let Some(extra) = self
            .generators
            .keys()
            .find(|k| alg.generator_index(k).is_err())
        {
            return Err(parse_err(
                format!("generators.{extra}"),
                "unknown generator",
            ));
        }
        if self.dim == 0 {
            return Ok(Rep::zero(alg));
        }
        Rep::from_generators(alg, mats)
    }
}

/// Parses a module file, building its algebra.
pub fn parse_module(text: &str) -> Result<Rep> {
    let file = ModuleFile::parse(text)?;
    let alg = file.build_algebra()?;
    file.to_rep(&alg)
}

/// Parses a module file over a given algebra.
pub fn parse_module_over(text: &str, alg: &Arc<Algebra>) -> Result<Rep> {
    ModuleFile::parse(text)?.to_rep(alg)
}

pub fn write_module(m: &Rep) -> Result<String> {
    Ok(ModuleFile::from_rep(m)?.to_json())
}
