//! Irreducible sl(2|2) modules with `C ↦ c ≠ 0`: walk a small grid of
//! `(m, n, 2c)` and print the family and dimension of each.

use psl22::classify::classify_sl2;
use psl22::rational::{display_rational, frac};

fn main() -> psl22::Result<()> {
    for m in 0..=2u32 {
        for n in 0..=2u32 {
            let (mi, ni) = (m as i64, n as i64);
            let mut cs: Vec<_> = [mi - ni, ni - mi, mi + ni + 2, -(mi + ni + 2)]
                .into_iter()
                .filter(|&x| x != 0)
                .map(|x| frac(x, 2))
                .collect();
            cs.sort();
            cs.dedup();
            // off every atypical line
            cs.push(frac(1, 3));
            for c in cs {
                let r = classify_sl2(m, n, &c)?;
                println!("m={m} n={n} c={:>4}: {r}", display_rational(&c));
            }
        }
    }
    Ok(())
}
