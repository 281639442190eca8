//! Exact JSON export and import of modules.
//!
//! Rationals are written as `"num/den"` in lowest terms with a positive
//! denominator. Basis entries keep the module's order; matrix entries are
//! listed row-major. Exporting an imported document reproduces it byte for
//! byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{CentralCharges, GeneratorId};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::module::{BasisLabel, ModuleRep, Weight};
use crate::rational::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargesDoc {
    pub c: String,
    pub k: String,
    pub p: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<[u8; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    /// Set for bases of derived modules instead of `theta, k, l`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub weight: [i64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub charges: ChargesDoc,
    pub dimension: usize,
    pub basis: Vec<BasisDoc>,
    /// Generator ↦ `[row, col, "num/den"]` triplets.
    pub action: BTreeMap<GeneratorId, Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ModuleDoc {
    pub fn from_module(module: &ModuleRep) -> Self {
        let basis = module
            .labels
            .iter()
            .zip(&module.weights)
            .map(|(label, w)| {
                let weight = [w.a, w.b];
                match label {
                    BasisLabel::Kac { theta, k, l } => {
                        BasisDoc { theta: Some(*theta), k: Some(*k), l: Some(*l), index: None, weight }
                    }
                    BasisLabel::Index(i) => BasisDoc { theta: None, k: None, l: None, index: Some(*i), weight },
                }
            })
            .collect();
        let action = module
            .matrices()
            .map(|(g, m)| {
                let entries = m.triplets().into_iter().map(|(r, c, x)| (r, c, format_rational(&x))).collect();
                (g, entries)
            })
            .collect();
        let is_kac = module.labels.iter().all(|l| matches!(l, BasisLabel::Kac { .. }));
        Self {
            m: module.highest.map(|h| h.0),
            n: module.highest.map(|h| h.1),
            charges: ChargesDoc {
                c: format_rational(&module.charges.c),
                k: format_rational(&module.charges.k),
                p: format_rational(&module.charges.p),
            },
            dimension: module.dim(),
            basis,
            action,
            name: (!is_kac).then(|| module.name.clone()),
        }
    }

    pub fn to_module(&self) -> Result<ModuleRep> {
        let charges = CentralCharges::new(
            parse_rational(&self.charges.c)?,
            parse_rational(&self.charges.k)?,
            parse_rational(&self.charges.p)?,
        );
        if self.basis.len() != self.dimension {
            return Err(Error::Parse(format!(
                "dimension {} but {} basis entries",
                self.dimension,
                self.basis.len()
            )));
        }
        let mut labels = Vec::with_capacity(self.dimension);
        let mut weights = Vec::with_capacity(self.dimension);
        for (i, b) in self.basis.iter().enumerate() {
            let label = match (b.theta, b.k, b.l, b.index) {
                (Some(theta), Some(k), Some(l), None) => BasisLabel::Kac { theta, k, l },
                (None, None, None, Some(ix)) => BasisLabel::Index(ix),
                _ => return Err(Error::Parse(format!("basis entry {i} mixes label kinds"))),
            };
            labels.push(label);
            weights.push(Weight { a: b.weight[0], b: b.weight[1] });
        }
        let mut action = BTreeMap::new();
        for (g, entries) in &self.action {
            let mut cols = vec![SparseVec::new(); self.dimension];
            for (r, c, x) in entries {
                if *r >= self.dimension || *c >= self.dimension {
                    return Err(Error::Parse(format!("{g} entry ({r},{c}) out of range")));
                }
                let v = parse_rational(x)?;
                if format_rational(&v) != *x {
                    return Err(Error::Parse(format!("{g} entry {x:?} is not of the form \"num/den\" in lowest terms")));
                }
                cols[*c].add_at(*r, &v);
            }
            action.insert(*g, SparseMatrix::from_columns(self.dimension, cols));
        }
        let highest = match (self.m, self.n) {
            (Some(m), Some(n)) => Some((m, n)),
            _ => None,
        };
        let name = match (&self.name, highest) {
            (Some(name), _) => name.clone(),
            (None, Some((m, n))) if charges == CentralCharges::standard() => format!("K({m},{n})"),
            (None, Some((m, n))) => format!("K({m},{n};{charges})"),
            (None, None) => "imported".to_string(),
        };
        Ok(ModuleRep::new(name, highest, charges, labels, weights, action))
    }
}

pub fn to_json_string(module: &ModuleRep) -> Result<String> {
    let mut s = serde_json::to_string(&ModuleDoc::from_module(module))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json_str(s: &str) -> Result<ModuleRep> {
    let doc: ModuleDoc = serde_json::from_str(s)?;
    doc.to_module()
}

pub fn write_json(module: &ModuleRep, path: &Path) -> Result<()> {
    std::fs::write(path, to_json_string(module)?)?;
    Ok(())
}

pub fn read_json(path: &Path) -> Result<ModuleRep> {
    from_json_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::kac;

    #[test]
    fn kac_00_round_trip() {
        let k = kac(0, 0);
        let s = to_json_string(&k).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["dimension"], 16);
        assert_eq!(v["basis"][0]["theta"], serde_json::json!([0, 0, 0, 0]));
        let back = from_json_str(&s).unwrap();
        assert_eq!(to_json_string(&back).unwrap(), s);
        for (g, m) in k.matrices() {
            assert_eq!(back.matrix(g).unwrap(), m);
        }
        assert!(v["action"]["K"].as_array().unwrap().iter().all(|e| e[2] == "0/1"));
    }
}
