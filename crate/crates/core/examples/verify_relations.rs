//! Run the quadratic-relation, z², projector and action-table suites on one
//! module and print a summary per suite.
//!
//! ```bash
//! cargo run --example verify_relations -- 2 3
//! ```

use psl22::kac;
use psl22::mz::appendix_b::FormulaSet;
use psl22::mz::{verify_appendix_a, verify_appendix_b, verify_projector, verify_z_squares, SuiteReport};
use psl22::rational::int;

fn show(rep: &SuiteReport) {
    let status = if rep.passed() { "ok" } else { "FAILED" };
    println!("{:<22} {status:>6}  {} checks, {} skipped", rep.suite, rep.checked(), rep.skipped);
    for f in rep.failures().take(3) {
        println!("    {} on {}: {} != {}", f.relation_id, f.vector_label, f.lhs, f.rhs);
    }
}

fn main() -> psl22::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n, ..] => (m, n),
        _ => (2, 2),
    };
    let k = kac(m, n);
    println!("{} (dim {})", k.name, k.dim());
    show(&verify_appendix_a(&k)?);
    show(&verify_z_squares(&k)?);
    show(&verify_projector(&k)?);
    // the printed table has known misprints; the corrected one should pass
    show(&verify_appendix_b(m, n, &int(1), FormulaSet::Printed)?);
    show(&verify_appendix_b(m, n, &int(1), FormulaSet::Corrected)?);
    Ok(())
}
