//! The extremal projector of sl(2) ⊕ sl(2), truncated on finite-dimensional
//! modules.

use num_traits::{One, Zero};

use crate::algebra::GeneratorId::{self, *};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::module::{ModuleRep, Weight};
use crate::rational::{factorial, int, Rational};

/// Number of series terms that can possibly be nonzero on this module.
fn series_cap(module: &ModuleRep, first: bool) -> usize {
    let coord = |w: &Weight| if first { w.a } else { w.b };
    let hi = module.weights.iter().map(coord).max().unwrap_or(0);
    let lo = module.weights.iter().map(coord).min().unwrap_or(0);
    ((hi - lo) / 2 + 1) as usize
}

/// `Σ_k (-1)^k / k! · F^k E^k · 1/((h+2)…(h+k+1))` on a homogeneous vector
/// whose `h` eigenvalue is `h`.
fn sl2_projector(
    module: &ModuleRep,
    v: &SparseVec,
    weight: Weight,
    raise: GeneratorId,
    lower: GeneratorId,
    first: bool,
) -> Result<SparseVec> {
    let h = if first { weight.a } else { weight.b };
    let cap = series_cap(module, first);
    let mut out = v.clone();
    let mut ek = v.clone();
    let mut denom = Rational::one();
    for k in 1..=cap + 1 {
        ek = module.act(raise, &ek)?;
        if ek.is_zero() {
            return Ok(out);
        }
        if k > cap {
            break;
        }
        let factor = h + k as i64 + 1;
        if factor == 0 {
            return Err(Error::WeightSingularity {
                weight,
                detail: format!("projector denominator h+{} vanishes at term {k}", k + 1),
            });
        }
        denom *= int(factor);
        let mut term = ek.clone();
        for _ in 0..k {
            term = module.act(lower, &term)?;
        }
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        out.axpy(&(sign / (factorial(k as u32) * &denom)), &term);
    }
    Err(Error::Internal(format!(
        "projector series on {} did not terminate within {cap} terms",
        module.name
    )))
}

/// `p · v`. Each weight component is projected separately.
pub fn extremal_projector(module: &ModuleRep, v: &SparseVec) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (wt, comp) in module.weight_components(v) {
        let x = sl2_projector(module, &comp, wt, E34, E43, false)?;
        let y = sl2_projector(module, &x, wt, E12, E21, true)?;
        out.axpy(&Rational::one(), &y);
    }
    debug_assert!(out.iter().all(|(_, c)| !c.is_zero()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::{highest_vector, kac};
    use crate::mz::zops::{apply_z, ZId};

    #[test]
    fn fixes_w_and_kills_lowered_vectors() {
        let k = kac(2, 1);
        let w = highest_vector();
        assert_eq!(extremal_projector(&k, &w).unwrap(), w);
        let e21w = k.act(E21, &w).unwrap();
        assert!(extremal_projector(&k, &e21w).unwrap().is_zero());
    }

    #[test]
    fn agrees_with_z_operators() {
        let k = kac(2, 2);
        let w = highest_vector();
        for z in ZId::ALL {
            let lhs = extremal_projector(&k, &k.act(z.generator(), &w).unwrap()).unwrap();
            assert_eq!(lhs, apply_z(&k, z, &w).unwrap(), "{z}");
        }
    }

    #[test]
    fn negative_weights_can_be_singular() {
        // E21^2 w in K(2,0) has h1 = -2: the first denominator h1+2 vanishes
        let k = kac(2, 0);
        let v = k.apply_word(&[E21, E21], &highest_vector()).unwrap();
        assert!(matches!(
            extremal_projector(&k, &v),
            Err(Error::WeightSingularity { .. })
        ));
    }
}
