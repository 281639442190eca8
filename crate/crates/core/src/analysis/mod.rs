//! Invariants, submodules, irreducibility and intertwiners.

pub mod appendix_c;
pub mod hom;
pub mod invariants;
pub mod irreducible;
pub mod prop33;
pub mod sn_tn;
pub mod spin;

pub use appendix_c::verify_appendix_c;
pub use hom::{hom_space, HomBasis};
pub use invariants::{kplus_invariants, restriction_multiplicities, InvariantSpace};
pub use irreducible::{certify, is_irreducible, IrreducibilityCertificate};
pub use prop33::{prop33_linear_relations, Prop33Relations};
pub use sn_tn::{build_s, build_t, psl_decomposition, verify_prop36, PslDecomposition};
pub use spin::{quotient, spin, SubmoduleBasis};
