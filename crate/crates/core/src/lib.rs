//! Exact computations with the Drinfel'd doubles of Taft algebras over prime
//! fields: structure constants, modules, projective resolutions, Ext groups,
//! and rank and support varieties.

pub mod algebra;
pub mod error;
pub mod ext;
pub mod field;
pub mod homology;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod modops;
pub mod pline;
pub mod rep;
pub mod rewrite;
pub mod structure;
pub mod suites;
pub mod tables;
pub mod taft;
pub mod variety;

pub use algebra::{Algebra, Family, SubalgebraEmbedding};
pub use error::{Error, Result};
pub use field::{PrimeField, Scalar};
pub use matrix::{Matrix, Vector};
pub use pline::{projective_line, ProjPoint};
pub use rep::{ModHom, Rep};
pub use variety::VarietySet;

// The guide's code blocks run as doctests, one module per chapter so a
// failure names its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/varieties.md")]
    mod varieties {}
    #[doc = include_str!("../../../book/src/basic.md")]
    mod basic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
