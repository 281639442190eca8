//! The psl(2|2) irreducibles `L°(n,n)` as quotients of `K°(n,n)` (all
//! central charges zero).

use psl22::analysis::psl_decomposition;
use psl22::analysis::certify;

fn main() -> psl22::Result<()> {
    for n in 0..=2 {
        let d = psl_decomposition(n)?;
        println!(
            "n = {n}: K° {} | S° {} T° {} | U {} (U+ {}) | R {} | extra {} | L° {}",
            d.kac_dim, d.s_dim, d.t_dim, d.u_dim, d.uplus_dim, d.r_dim, d.extra_dim, d.quotient.dim()
        );
        if n > 0 {
            println!(
                "  U+ spanned by the four listed vectors: {}; L°+ basis w, z31 w, z42 w, z31 z42 w: {}",
                d.uplus_spanned_by_listed, d.lplus_basis_ok
            );
        }
        println!("  quotient irreducible: {}", certify(&d.quotient)?.irreducible);
    }
    Ok(())
}
