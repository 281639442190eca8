//! The k⁺-invariants of a Kac module, their sl(2) ⊕ sl(2) weights, and the
//! admissible lowering words that produce a basis of them from `w`.

use psl22::analysis::{kplus_invariants, restriction_multiplicities, verify_appendix_c};
use psl22::kac;
use psl22::mz::admissible_table;
use psl22::mz::zops::word_name;

fn main() -> psl22::Result<()> {
    for (m, n) in [(1, 1), (3, 2)] {
        let k = kac(m, n);
        let vplus = kplus_invariants(&k)?;
        let table = admissible_table(m, n);
        println!("{}: dim V+ = {}, regime {}", k.name, vplus.dim(), table.regime);

        for ((da, db), words) in &table.rows {
            let names: Vec<String> = words.iter().map(|w| word_name(w)).collect();
            println!("  [{}, {}]  {}", m as i64 + da, n as i64 + db, names.join(", "));
        }

        let mult = restriction_multiplicities(&k)?;
        let parts: Vec<String> = mult.iter().map(|(w, c)| format!("{c}·L0{w}")).collect();
        println!("  restriction: {}", parts.join(" + "));

        let rep = verify_appendix_c(&k)?;
        println!("  basis check: {} ({} checks)", rep.passed(), rep.checked());
    }
    Ok(())
}
