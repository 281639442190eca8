//! Exact irreducibility certificates.
//!
//! A module is reported irreducible when
//!  1. the algebra generated on `V⁺` by the eight z-operators and the weight
//!     projectors is the full matrix algebra (Burnside), and
//!  2. a top-weight vector of `V⁺` generates the whole module.
//!
//! Every submodule `N` satisfies `N = U(𝔨) N⁺`, so (1) leaves `N⁺ = 0` or
//! `N⁺ = V⁺`, and (2) rules out the second case for a proper `N`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::invariants::kplus_invariants;
use crate::analysis::spin::{spin, SubmoduleBasis};
use crate::error::Result;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::module::{ModuleRep, Weight};
use crate::mz::zops::{apply_z, ZId};

/// A proper invariant subspace, found by spinning `seed`.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub seed: String,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityCertificate {
    pub module: String,
    pub irreducible: bool,
    pub burnside_dim: usize,
    pub vplus_dim: usize,
    pub spin_dim: usize,
    pub witnesses: Vec<Witness>,
}

/// `V⁺` in an echelon basis, with the z-operators as matrices on it.
pub struct ReducedSpace {
    pub basis: Vec<SparseVec>,
    pub weights: Vec<Weight>,
    pub echelon: EchelonBasis,
    /// `z ↦ columns`: images of basis vectors in basis coordinates.
    pub z_matrices: Vec<(ZId, Vec<SparseVec>)>,
}

impl ReducedSpace {
    pub fn new(module: &ModuleRep) -> Result<Self> {
        let vplus = kplus_invariants(module)?;
        let echelon = vplus.echelon();
        let basis = echelon.rows().to_vec();
        let weights = basis.iter().map(|v| module.weight_of(v).expect("homogeneous")).collect();
        let mut z_matrices = Vec::new();
        for z in ZId::ALL {
            let cols = basis
                .iter()
                .map(|v| Ok(echelon.coordinates_sparse(&apply_z(module, z, v)?)))
                .collect::<Result<Vec<_>>>()?;
            z_matrices.push((z, cols));
        }
        Ok(Self { basis, weights, echelon, z_matrices })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn blocks(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(*w).or_default().push(i);
        }
        out
    }

    /// `Σ_λ dim(A·E_λ)` where `A` is the algebra generated by the
    /// z-matrices and the weight projectors `E_λ`.
    pub fn burnside_dim(&self) -> usize {
        let d = self.dim();
        let mut total = 0;
        for idx in self.blocks().values() {
            // elements of A·E_λ as d×|λ| matrices, flattened column-major
            let flatten = |cols: &[SparseVec]| {
                let mut out = SparseVec::new();
                for (c, col) in cols.iter().enumerate() {
                    for (r, x) in col.iter() {
                        out.add_at(c * d + r, x);
                    }
                }
                out
            };
            let mut span = EchelonBasis::new();
            let start: Vec<SparseVec> = idx.iter().map(|&i| SparseVec::unit(i)).collect();
            let mut queue = vec![start];
            span.insert(flatten(&queue[0]));
            while let Some(cols) = queue.pop() {
                for (_, zm) in &self.z_matrices {
                    let img: Vec<SparseVec> = cols
                        .iter()
                        .map(|c| {
                            let mut out = SparseVec::new();
                            for (j, x) in c.iter() {
                                out.axpy(x, &zm[j]);
                            }
                            out
                        })
                        .collect();
                    if img.iter().all(SparseVec::is_zero) {
                        continue;
                    }
                    if span.insert(flatten(&img)).is_some() {
                        queue.push(img);
                    }
                }
            }
            total += span.len();
        }
        total
    }
}

fn top_vector(space: &ReducedSpace) -> Option<(Weight, SparseVec)> {
    space
        .weights
        .iter()
        .zip(&space.basis)
        .max_by_key(|(w, _)| (w.a + w.b, w.a))
        .map(|(w, v)| (*w, v.clone()))
}

/// Decides irreducibility and returns the certificate.
pub fn certify(module: &ModuleRep) -> Result<IrreducibilityCertificate> {
    let space = ReducedSpace::new(module)?;
    let d = space.dim();
    let burnside_dim = space.burnside_dim();
    let (spin_dim, top_witness) = match top_vector(&space) {
        None => (0, None),
        Some((w, v)) => {
            let s = spin(module, &[v])?;
            let wit = s.is_proper().then(|| Witness { seed: format!("top V+ vector of weight {w}"), dimension: s.dim() });
            (s.dim(), wit)
        }
    };
    let irreducible = module.dim() > 0 && burnside_dim == d * d && spin_dim == module.dim();
    let mut witnesses = Vec::new();
    if !irreducible {
        witnesses.extend(top_witness);
        if let Some(w) = find_witness(module, &space)? {
            witnesses.push(w);
        }
    }
    Ok(IrreducibilityCertificate {
        module: module.name.clone(),
        irreducible,
        burnside_dim,
        vplus_dim: d,
        spin_dim,
        witnesses,
    })
}

pub fn is_irreducible(module: &ModuleRep) -> Result<bool> {
    Ok(certify(module)?.irreducible)
}

/// Spins `V⁺` basis vectors and their z-images until one generates a
/// proper submodule.
fn find_witness(module: &ModuleRep, space: &ReducedSpace) -> Result<Option<Witness>> {
    let mut candidates: Vec<(String, SparseVec)> = space
        .basis
        .iter()
        .zip(&space.weights)
        .enumerate()
        .map(|(i, (v, w))| (format!("V+ basis vector {i} of weight {w}"), v.clone()))
        .collect();
    for (i, v) in space.basis.iter().enumerate() {
        for z in ZId::ALL {
            let img = apply_z(module, z, v)?;
            if !img.is_zero() {
                candidates.push((format!("{z} applied to V+ basis vector {i}"), img));
            }
        }
    }
    let mut tried: Vec<SparseVec> = Vec::new();
    for (label, v) in candidates {
        if tried.iter().any(|t| t.is_parallel_to(&v).is_some()) {
            continue;
        }
        let s: SubmoduleBasis = spin(module, std::slice::from_ref(&v))?;
        tried.push(v);
        if s.is_proper() {
            return Ok(Some(Witness { seed: label, dimension: s.dim() }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::kac;

    #[test]
    fn typical_and_atypical_kac_modules() {
        let c = certify(&kac(1, 2)).unwrap();
        assert!(c.irreducible);
        assert_eq!(c.burnside_dim, c.vplus_dim * c.vplus_dim);
        let c = certify(&kac(2, 2)).unwrap();
        assert!(!c.irreducible);
        assert!(c.witnesses.iter().any(|w| w.dimension == 96 || w.dimension == 48));
        assert!(certify(&kac(0, 0)).unwrap().irreducible);
    }
}
