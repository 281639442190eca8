//! Extremal projector, Mickelsson–Zhelobenko operators and the suites that
//! check their relation tables.

pub mod appendix_b;
pub mod paths;
pub mod projector;
pub mod relations;
pub mod report;
pub mod zops;

pub use appendix_b::verify_appendix_b;
pub use paths::{admissible_table, AdmissibleTable};
pub use projector::extremal_projector;
pub use relations::{verify_appendix_a, verify_z_squares};
pub use report::{verify_projector, SuiteReport, VerificationRecord};
pub use zops::{apply_z, apply_z_word, reconstruct_e, ZId};
