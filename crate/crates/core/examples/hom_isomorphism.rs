//! Hom spaces between modules: Schur's lemma, non-isomorphic typicals, and
//! the isomorphism `S_{n-1} ≅ T_n`.

use psl22::analysis::hom_space;
use psl22::analysis::sn_tn::prop35_isomorphism;
use psl22::kac;
use psl22::rational::display_rational;

fn main() -> psl22::Result<()> {
    let a = kac(1, 2);
    let b = kac(2, 1);
    println!("dim Hom({0}, {0}) = {1}", a.name, hom_space(&a, &a)?.dim());
    println!("dim Hom({}, {}) = {}", a.name, b.name, hom_space(&a, &b)?.dim());
    let d = kac(1, 1);
    println!("dim End({}) = {}", d.name, hom_space(&d, &d)?.dim());

    for n in 1..=3 {
        let c = prop35_isomorphism(n)?;
        let scale = c.seed_scale.as_ref().map(display_rational).unwrap_or_else(|| "-".into());
        println!(
            "S{} -> T{n}: dim Hom = {}, invertible = {}, z32 w' ↦ {scale}·z32 z41 w",
            n - 1,
            c.hom_dim,
            c.invertible
        );
    }
    Ok(())
}
