//! Certify irreducibility, or exhibit a proper submodule, for a few Kac
//! modules.

use psl22::analysis::certify;
use psl22::kac;

fn main() -> psl22::Result<()> {
    for (m, n) in [(1, 0), (2, 1), (1, 1), (2, 2)] {
        let cert = certify(&kac(m, n))?;
        print!(
            "{}: irreducible = {}, dim V+ = {}, Burnside dim = {}",
            cert.module, cert.irreducible, cert.vplus_dim, cert.burnside_dim
        );
        match cert.witnesses.first() {
            Some(w) => println!(", submodule of dim {} from {}", w.dimension, w.seed),
            None => println!(),
        }
    }
    Ok(())
}
