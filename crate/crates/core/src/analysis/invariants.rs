//! The space `V⁺` of vectors killed by `E12` and `E34`, graded by weight.

use std::collections::BTreeMap;

use crate::algebra::GeneratorId::{E12, E34};
use crate::error::Result;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::module::{ModuleRep, Weight};

#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub vectors: Vec<SparseVec>,
    pub weights: Vec<Weight>,
    /// Weight ↦ indices into `vectors`.
    pub by_weight: BTreeMap<Weight, Vec<usize>>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn multiplicities(&self) -> BTreeMap<Weight, usize> {
        self.by_weight.iter().map(|(&w, v)| (w, v.len())).collect()
    }

    /// Echelon form of the whole space, for membership tests.
    pub fn echelon(&self) -> EchelonBasis {
        let mut e = EchelonBasis::new();
        for v in &self.vectors {
            e.insert(v.clone());
        }
        e
    }

    /// Highest weight present, ordered by `a + b` then `a`.
    pub fn top_weight(&self) -> Option<Weight> {
        self.by_weight.keys().copied().max_by_key(|w| (w.a + w.b, w.a))
    }
}

/// Exact kernel of `E12` and `E34`, computed weight space by weight space.
pub fn kplus_invariants(module: &ModuleRep) -> Result<InvariantSpace> {
    let e12 = module.matrix(E12);
    let e34 = module.matrix(E34);
    let mut out = InvariantSpace {
        vectors: Vec::new(),
        weights: Vec::new(),
        by_weight: BTreeMap::new(),
    };
    for (wt, idx) in module.weight_spaces() {
        // rows of the restricted map, columns renumbered 0..idx.len()
        let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (local, &j) in idx.iter().enumerate() {
            for (tag, m) in [(0usize, e12), (1, e34)] {
                let Some(m) = m else { continue };
                for (i, x) in m.col(j).iter() {
                    rows.entry((tag, i)).or_default().add_at(local, x);
                }
            }
        }
        let mut ech = EchelonBasis::new();
        for r in rows.into_values() {
            ech.insert(r);
        }
        for v in ech.nullspace(idx.len()) {
            let global = v.remapped(|l| Some(idx[l]));
            out.by_weight.entry(wt).or_default().push(out.vectors.len());
            out.vectors.push(global);
            out.weights.push(wt);
        }
    }
    Ok(out)
}

/// `c_{r,s} = dim V⁺_{[r,s]}`: multiplicities of the irreducible
/// sl(2) ⊕ sl(2) summands.
pub fn restriction_multiplicities(module: &ModuleRep) -> Result<BTreeMap<Weight, usize>> {
    Ok(kplus_invariants(module)?.multiplicities())
}

/// `Σ c_{r,s} (r+1)(s+1)`; equals the module dimension.
pub fn multiplicity_dimension(mult: &BTreeMap<Weight, usize>) -> usize {
    mult.iter().map(|(w, c)| c * w.l0_dim()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::kac;

    #[test]
    fn invariants_of_small_kac_modules() {
        let v = kplus_invariants(&kac(0, 0)).unwrap();
        assert_eq!(v.dim(), 6);
        let mult = v.multiplicities();
        assert_eq!(mult[&Weight::new(0, 0)], 2);
        assert_eq!(mult[&Weight::new(1, 1)], 2);
        assert_eq!(mult[&Weight::new(2, 0)], 1);
        assert_eq!(mult[&Weight::new(0, 2)], 1);
        assert_eq!(multiplicity_dimension(&mult), 16);
        assert_eq!(kplus_invariants(&kac(1, 1)).unwrap().dim(), 14);
    }
}
