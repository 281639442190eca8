//! Invariant subspaces: generation by seeds, sums, intersections, and the
//! induced representations on a submodule and on a quotient.

use std::collections::{BTreeMap, VecDeque};

use crate::algebra::GeneratorId;
use crate::error::{Error, Result};
use crate::linalg::{intersect, EchelonBasis, SparseMatrix, SparseVec};
use crate::module::{BasisLabel, ModuleRep, Weight};

/// Echelonized basis of a subspace of a module.
///
/// Rows are homogeneous whenever the subspace is spanned by weight vectors,
/// which is the case for everything built by [`spin`].
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    pub parent: String,
    pub parent_dim: usize,
    pub basis: EchelonBasis,
}

impl SubmoduleBasis {
    pub fn zero(module: &ModuleRep) -> Self {
        Self { parent: module.name.clone(), parent_dim: module.dim(), basis: EchelonBasis::new() }
    }

    pub fn from_vectors(module: &ModuleRep, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Self::zero(module);
        for v in vectors {
            s.basis.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.parent_dim
    }

    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_whole()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.basis.contains(v)
    }

    pub fn rows(&self) -> &[SparseVec] {
        self.basis.rows()
    }

    pub fn sum(&self, other: &SubmoduleBasis) -> SubmoduleBasis {
        let mut out = self.clone();
        for r in other.rows() {
            out.basis.insert(r.clone());
        }
        out
    }

    pub fn intersection(&self, other: &SubmoduleBasis) -> SubmoduleBasis {
        SubmoduleBasis {
            parent: self.parent.clone(),
            parent_dim: self.parent_dim,
            basis: intersect(&self.basis, &other.basis, self.parent_dim),
        }
    }

    /// Closed under every generator that acts on `module`.
    pub fn is_invariant(&self, module: &ModuleRep) -> Result<bool> {
        Ok(self.first_escape(module)?.is_none())
    }

    fn first_escape(&self, module: &ModuleRep) -> Result<Option<(GeneratorId, usize)>> {
        for (g, m) in module.matrices() {
            for (i, r) in self.rows().iter().enumerate() {
                if !self.basis.contains(&m.apply(r)) {
                    return Ok(Some((g, i)));
                }
            }
        }
        Ok(None)
    }

    pub fn check_invariant(&self, module: &ModuleRep) -> Result<()> {
        match self.first_escape(module)? {
            None => Ok(()),
            Some((g, i)) => Err(Error::Invariance(format!(
                "{g} maps basis vector {i} out of the subspace of {}",
                self.parent
            ))),
        }
    }

    /// Weight of each row (rows are assumed homogeneous).
    pub fn row_weights(&self, module: &ModuleRep) -> Result<Vec<Weight>> {
        self.rows()
            .iter()
            .map(|r| {
                module
                    .weight_of(r)
                    .ok_or_else(|| Error::Internal("submodule basis row is not a weight vector".into()))
            })
            .collect()
    }

    /// Coordinates of a vector of the subspace with respect to the rows.
    pub fn coordinates(&self, v: &SparseVec) -> Result<SparseVec> {
        if !self.contains(v) {
            return Err(Error::Invariance("vector is not in the subspace".into()));
        }
        Ok(self.basis.coordinates_sparse(v))
    }

    /// The subrepresentation, with the rows as its basis.
    pub fn as_module(&self, module: &ModuleRep, name: impl Into<String>) -> Result<ModuleRep> {
        self.check_invariant(module)?;
        let weights = self.row_weights(module)?;
        let d = self.dim();
        let mut action = BTreeMap::new();
        for (g, m) in module.matrices() {
            let cols = self.rows().iter().map(|r| self.basis.coordinates_sparse(&m.apply(r))).collect();
            action.insert(g, SparseMatrix::from_columns(d, cols));
        }
        Ok(ModuleRep::new(
            name,
            module.highest,
            module.charges.clone(),
            (0..d).map(BasisLabel::Index).collect(),
            weights,
            action,
        ))
    }
}

/// The smallest invariant subspace containing the seeds.
pub fn spin(module: &ModuleRep, seeds: &[SparseVec]) -> Result<SubmoduleBasis> {
    let mut sub = SubmoduleBasis::zero(module);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for s in seeds {
        if sub.basis.insert(s.clone()).is_some() {
            queue.push_back(s.clone());
        }
    }
    let mats: Vec<&SparseMatrix> = module.matrices().map(|(_, m)| m).collect();
    while let Some(v) = queue.pop_front() {
        for m in &mats {
            let img = m.apply(&v);
            if !img.is_zero() && sub.basis.insert(img.clone()).is_some() {
                queue.push_back(img);
            }
        }
    }
    Ok(sub)
}

/// `module / sub` on the complement spanned by the standard basis vectors
/// that are not pivots of `sub`, in increasing order; labels are inherited.
pub fn quotient(module: &ModuleRep, sub: &SubmoduleBasis, name: impl Into<String>) -> Result<ModuleRep> {
    sub.check_invariant(module)?;
    let keep: Vec<usize> = (0..module.dim()).filter(|&i| !sub.basis.is_pivot(i)).collect();
    let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let d = keep.len();
    let mut action = BTreeMap::new();
    for (g, m) in module.matrices() {
        let cols = keep
            .iter()
            .map(|&i| sub.basis.reduce(m.col(i)).remapped(|j| new_index.get(&j).copied()))
            .collect();
        action.insert(g, SparseMatrix::from_columns(d, cols));
    }
    Ok(ModuleRep::new(
        name,
        module.highest,
        module.charges.clone(),
        keep.iter().map(|&i| module.labels[i].clone()).collect(),
        keep.iter().map(|&i| module.weights[i]).collect(),
        action,
    ))
}

/// Image of a parent vector in [`quotient`] coordinates.
pub fn project_to_quotient(module: &ModuleRep, sub: &SubmoduleBasis, v: &SparseVec) -> SparseVec {
    let keep: BTreeMap<usize, usize> = (0..module.dim())
        .filter(|&i| !sub.basis.is_pivot(i))
        .enumerate()
        .map(|(k, i)| (i, k))
        .collect();
    sub.basis.reduce(v).remapped(|j| keep.get(&j).copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::{highest_vector, kac};
    use crate::mz::zops::{apply_z, ZId};

    #[test]
    fn spin_of_w_in_typical_kac_module_is_everything() {
        let k = kac(1, 2);
        let s = spin(&k, &[highest_vector()]).unwrap();
        assert_eq!(s.dim(), k.dim());
        let again = spin(&k, s.rows()).unwrap();
        assert_eq!(again.dim(), s.dim());
    }

    #[test]
    fn s2_has_dimension_96() {
        let k = kac(2, 2);
        let v = apply_z(&k, ZId::Z32, &highest_vector()).unwrap();
        let s = spin(&k, &[v]).unwrap();
        assert_eq!(s.dim(), 96);
        assert!(s.is_invariant(&k).unwrap());
        let sm = s.as_module(&k, "S2").unwrap();
        assert!(sm.verify_structure().passed());
        let q = quotient(&k, &s, "K/S").unwrap();
        assert_eq!(q.dim(), 48);
        assert!(q.verify_structure().passed());
    }

    #[test]
    fn quotient_by_zero_is_a_copy() {
        let k = kac(1, 0);
        let q = quotient(&k, &SubmoduleBasis::zero(&k), "copy").unwrap();
        assert_eq!(q.dim(), k.dim());
        for (g, m) in k.matrices() {
            assert_eq!(q.matrix(g).unwrap(), m);
        }
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let k = kac(1, 0);
        let sub = SubmoduleBasis::from_vectors(&k, [highest_vector()]);
        assert!(matches!(quotient(&k, &sub, "bad"), Err(Error::Invariance(_))));
    }
}
