//! Exact representation theory of the centrally extended Lie superalgebra
//! psl(2|2) ⋉ ℂ³.

pub mod algebra;
pub mod analysis;
pub mod classify;
pub mod cli;
pub mod error;
pub mod export;
pub mod kac;
pub mod linalg;
pub mod module;
pub mod mz;
pub mod poly;
pub mod rational;

pub use algebra::{CentralCharges, GeneratorId, LieElement, Sl2};
pub use error::{Error, Result};
pub use kac::{build_kac, build_l0, kac};
pub use linalg::{EchelonBasis, SparseMatrix, SparseVec};
pub use module::{BasisLabel, ModuleRep, Weight};
pub use rational::Rational;
