//! Bases of `K⁺(m,n)` from admissible words.

use std::collections::BTreeMap;

use crate::analysis::invariants::kplus_invariants;
use crate::error::{Error, Result};
use crate::kac::highest_vector;
use crate::linalg::{intersect, EchelonBasis};
use crate::module::{ModuleRep, Weight};
use crate::mz::paths::admissible_table;
use crate::mz::report::{SuiteReport, VerificationRecord};
use crate::mz::zops::{apply_z_word, word_name};

fn record(module: &ModuleRep, id: impl Into<String>, label: impl Into<String>, lhs: String, rhs: String) -> VerificationRecord {
    let pass = lhs == rhs;
    VerificationRecord { relation_id: id.into(), module: module.name.clone(), vector_label: label.into(), lhs, rhs, pass }
}

fn format_mult(m: &BTreeMap<Weight, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks that the listed admissible words applied to `w` are nonzero
/// vectors of `V⁺` of the listed weights, and that together they form a
/// basis of `V⁺`.
pub fn verify_appendix_c(module: &ModuleRep) -> Result<SuiteReport> {
    let (m, n) = module
        .highest
        .ok_or_else(|| Error::Parameter(format!("{} is not a Kac module", module.name)))?;
    let table = admissible_table(m, n);
    let mut rep = SuiteReport::new("appendix-c");
    rep.notes.push(format!("regime {}", table.regime));
    let w = highest_vector();
    let vplus = kplus_invariants(module)?;
    let vplus_space = vplus.echelon();

    let mut span = EchelonBasis::new();
    let mut independent = true;
    let mut listed: BTreeMap<Weight, usize> = BTreeMap::new();
    for ((da, db), words) in &table.rows {
        let expected = Weight { a: m as i64 + da, b: n as i64 + db };
        for word in words {
            let name = word_name(word);
            let v = apply_z_word(module, word, &w)?;
            let got = if v.is_zero() {
                "0".to_string()
            } else {
                module.weight_of(&v).map_or("inhomogeneous".into(), |x| x.to_string())
            };
            rep.push(record(module, "weight", &name, got, expected.to_string()));
            rep.push(record(
                module,
                "in V+",
                &name,
                vplus_space.contains(&v).to_string(),
                "true".into(),
            ));
            independent &= !v.is_zero() && span.insert(v).is_some();
            *listed.entry(expected).or_default() += 1;
        }
    }
    rep.push(record(module, "independent", "all words", independent.to_string(), "true".into()));
    let common = intersect(&span, &vplus_space, module.dim()).len();
    rep.push(record(
        module,
        "span V+",
        "all words",
        format!("{} of {}", common, span.len()),
        format!("{} of {}", vplus.dim(), vplus.dim()),
    ));
    rep.push(record(
        module,
        "weight table",
        "V+",
        format_mult(&vplus.multiplicities()),
        format_mult(&listed),
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::kac;

    #[test]
    fn every_regime_on_small_modules() {
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (2, 2)] {
            let rep = verify_appendix_c(&kac(m, n)).unwrap();
            assert!(rep.passed(), "({m},{n}): {:?}", rep.failures().next());
        }
    }

    #[test]
    fn dimensions_of_vplus() {
        assert_eq!(kplus_invariants(&kac(0, 0)).unwrap().dim(), 6);
        assert_eq!(kplus_invariants(&kac(1, 1)).unwrap().dim(), 14);
        assert_eq!(kplus_invariants(&kac(2, 3)).unwrap().dim(), 16);
    }
}
