//! Write a module to JSON and read it back.

use psl22::export::{read_json, write_json};
use psl22::kac;

fn main() -> psl22::Result<()> {
    let k = kac(1, 0);
    let path = std::env::temp_dir().join("psl22-k10.json");
    write_json(&k, &path)?;
    let back = read_json(&path)?;
    println!("wrote {} ({} bytes)", path.display(), std::fs::metadata(&path)?.len());
    println!("read back {}: dim {}, structure ok = {}", back.name, back.dim(), back.verify_structure().passed());
    for (g, m) in k.matrices() {
        assert_eq!(back.matrix(g), Some(m));
    }
    Ok(())
}
