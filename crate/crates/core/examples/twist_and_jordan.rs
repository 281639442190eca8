//! SL(2) acts on the central charges by automorphisms. Normalize a charge
//! triple, then twist a module by the normalizing element.

use psl22::algebra::twist_charges;
use psl22::classify::twist::bracket_defects;
use psl22::classify::{derive_twist_map, jordan_normalize, twist_module};
use psl22::rational::{frac, int};
use psl22::{kac, CentralCharges, Sl2};

fn main() -> psl22::Result<()> {
    let g = Sl2::new(int(2), frac(1, 3), int(3), int(1))?;
    let phi = derive_twist_map(&g)?;
    println!("twist by {g}: {} bracket defects", bracket_defects(&phi).len());

    let k = kac(1, 0);
    let t = twist_module(&k, &g)?;
    println!("{} has charges {}, c² - kp = {}", t.name, t.charges, t.charges.discriminant());

    for ch in [
        CentralCharges::new(int(1), int(1), int(1)),
        CentralCharges::new(int(2), int(-5), int(1)),
        CentralCharges::new(int(1), int(1), int(-1)),
    ] {
        match jordan_normalize(&ch) {
            Ok(j) => {
                assert_eq!(twist_charges(&ch, &j.transform), j.canonical);
                println!("{ch} -> {} via {}", j.canonical, j.transform);
            }
            Err(e) => println!("{ch}: {e}"),
        }
    }
    Ok(())
}
