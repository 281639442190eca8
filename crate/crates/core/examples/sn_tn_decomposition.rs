//! Split `K(n,n)` into `S_n ⊕ T_n` and check the pieces.

use psl22::analysis::sn_tn::{plus_weights, s_dim, t_dim};
use psl22::analysis::{build_s, build_t, verify_prop36};
use psl22::kac;

fn main() -> psl22::Result<()> {
    for n in 0..=3 {
        let k = kac(n, n);
        let s = build_s(&k)?;
        let t = build_t(&k)?;
        println!(
            "K({n},{n}): dim {} = {} + {} (expected {} + {}), S∩T = {}",
            k.dim(),
            s.dim(),
            t.dim(),
            s_dim(n),
            t_dim(n),
            s.intersection(&t).dim()
        );
        let sw: Vec<String> = plus_weights(&k, &s)?.iter().map(|(w, c)| format!("{w}×{c}")).collect();
        println!("  S+ weights: {}", sw.join(" "));
        let rep = verify_prop36(n)?;
        println!("  checks: {} of {} pass", rep.checked() - rep.failures().count(), rep.checked());
    }
    Ok(())
}
