//! Finite-dimensional irreducibles of the centrally extended algebra with
//! charges `(0, 0, 1)`, by highest weight `(μ1, μ3)`.

use psl22::classify::{classify_g, t_module};

fn main() -> psl22::Result<()> {
    for (mu1, mu3) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)] {
        println!("({mu1}, {mu3}): {}", classify_g(mu1, mu3)?);
    }
    // T_n duplicates S_{n-1}
    let t = t_module(2)?;
    println!("T2: dim {:?}, irreducible {:?}", t.dimension, t.irreducible);
    Ok(())
}
