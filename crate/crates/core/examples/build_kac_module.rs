//! Build a Kac module and look at its shape.
//!
//! ```bash
//! cargo run --example build_kac_module
//! ```

use psl22::linalg::SparseMatrix;
use psl22::{build_kac, kac, CentralCharges, GeneratorId, LieElement};
use psl22::rational::{frac, int};

fn main() -> psl22::Result<()> {
    let k = kac(2, 1);
    println!("{}: dim {}, {} nonzero matrix entries", k.name, k.dim(), k.nnz());

    // weight multiplicities: 16 weights of ∧(odd lowering) times L0(2,1)
    for (w, idx) in k.weight_spaces().iter().take(6) {
        println!("  weight {w}: {} vectors", idx.len());
    }

    let report = k.verify_structure();
    println!("bracket identities on {} pairs: {}", report.pairs_checked, report.passed());

    // any charges with k = 0 are allowed
    let ch = CentralCharges::new(frac(3, 2), int(0), int(-2));
    let k2 = build_kac(1, 1, &ch)?;
    let c = k2.element_matrix(&LieElement::c_combination())?;
    println!("{}: C acts by {}: {}", k2.name, ch.c, c == SparseMatrix::scalar(k2.dim(), &ch.c));
    println!("{}: P acts by {}: {}", k2.name, ch.p, k2.acts_as_scalar(GeneratorId::P, &ch.p));
    println!("trace of H1 on {}: {}", k2.name, k2.trace(GeneratorId::H1).unwrap());
    Ok(())
}
