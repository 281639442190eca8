//! The eight Mickelsson–Zhelobenko operators as explicit words in the
//! generators with rational weight coefficients, and the inverse formulas
//! expressing the odd generators through them.
//!
//! Coefficients are evaluated at the weight of the vector the whole operator
//! is applied to (they stand to the right of the word).

use std::fmt;
use std::str::FromStr;

use crate::algebra::GeneratorId::{self, *};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::module::ModuleRep;
use crate::poly::WeightFunction as W;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZId {
    Z14,
    Z13,
    Z24,
    Z23,
    Z41,
    Z31,
    Z42,
    Z32,
}

impl ZId {
    pub const ALL: [ZId; 8] = [ZId::Z14, ZId::Z13, ZId::Z24, ZId::Z23, ZId::Z41, ZId::Z31, ZId::Z42, ZId::Z32];
    pub const RAISING: [ZId; 4] = [ZId::Z14, ZId::Z24, ZId::Z13, ZId::Z23];
    /// Lowering operators in the order used for basis words.
    pub const LOWERING: [ZId; 4] = [ZId::Z41, ZId::Z31, ZId::Z42, ZId::Z32];

    /// The odd generator `E_ik` with `z_ik = p E_ik`.
    pub fn generator(self) -> GeneratorId {
        match self {
            ZId::Z14 => E14,
            ZId::Z13 => E13,
            ZId::Z24 => E24,
            ZId::Z23 => E23,
            ZId::Z41 => E41,
            ZId::Z31 => E31,
            ZId::Z42 => E42,
            ZId::Z32 => E32,
        }
    }

    pub fn from_generator(g: GeneratorId) -> Option<ZId> {
        Self::ALL.iter().copied().find(|z| z.generator() == g)
    }

    pub fn is_raising(self) -> bool {
        matches!(self, ZId::Z14 | ZId::Z13 | ZId::Z24 | ZId::Z23)
    }

    pub fn name(self) -> &'static str {
        match self {
            ZId::Z14 => "z14",
            ZId::Z13 => "z13",
            ZId::Z24 => "z24",
            ZId::Z23 => "z23",
            ZId::Z41 => "z41",
            ZId::Z31 => "z31",
            ZId::Z42 => "z42",
            ZId::Z32 => "z32",
        }
    }
}

impl fmt::Display for ZId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ZId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|z| z.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown z-operator {s:?}")))
    }
}

/// Formats a word of z-operators followed by `w`, e.g. `z41 z32 w`.
pub fn word_name(word: &[ZId]) -> String {
    let mut parts: Vec<&str> = word.iter().map(|z| z.name()).collect();
    parts.push("w");
    parts.join(" ")
}

/// `Σ word · f(h)`, words applied rightmost letter first.
#[derive(Clone, Debug)]
pub struct ZOperatorFormula {
    pub id: ZId,
    pub terms: Vec<(Vec<GeneratorId>, W)>,
}

fn h1p1() -> W {
    W::inv_h1_plus(1)
}

fn h3p1() -> W {
    W::inv_h3_plus(1)
}

impl ZOperatorFormula {
    pub fn of(id: ZId) -> Self {
        let one = W::one;
        let terms = match id {
            ZId::Z14 => vec![(vec![E14], one())],
            ZId::Z13 => vec![(vec![E13], one()), (vec![E43, E14], h3p1())],
            ZId::Z24 => vec![(vec![E24], one()), (vec![E21, E14], -h1p1())],
            ZId::Z23 => vec![
                (vec![E23], one()),
                (vec![E21, E13], -h1p1()),
                (vec![E43, E24], h3p1()),
                (vec![E21, E43, E14], -(h1p1() * h3p1())),
            ],
            ZId::Z41 => vec![
                (vec![E41], one()),
                (vec![E21, E42], h1p1()),
                (vec![E43, E31], -h3p1()),
                (vec![E21, E43, E32], -(h1p1() * h3p1())),
            ],
            ZId::Z31 => vec![(vec![E31], one()), (vec![E21, E32], h1p1())],
            ZId::Z42 => vec![(vec![E42], one()), (vec![E43, E32], -h3p1())],
            ZId::Z32 => vec![(vec![E32], one())],
        };
        Self { id, terms }
    }

    /// Applies the formula to a homogeneous vector without any domain check.
    pub fn apply_raw(&self, module: &ModuleRep, v: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (wt, comp) in module.weight_components(v) {
            for (word, f) in &self.terms {
                let c = f.eval(wt)?;
                out.axpy(&c, &module.apply_word(word, &comp)?);
            }
        }
        Ok(out)
    }
}

fn check_domain(module: &ModuleRep, v: &SparseVec) -> Result<()> {
    if !module.is_kplus_invariant(v)? {
        return Err(Error::Domain(format!(
            "vector is not annihilated by E12 and E34 in {}",
            module.name
        )));
    }
    Ok(())
}

/// `z · v` for `v` in the space of `E12`, `E34` invariants. Mixed-weight
/// vectors are handled componentwise.
pub fn apply_z(module: &ModuleRep, z: ZId, v: &SparseVec) -> Result<SparseVec> {
    if v.is_zero() {
        return Ok(SparseVec::new());
    }
    check_domain(module, v)?;
    ZOperatorFormula::of(z).apply_raw(module, v)
}

/// Applies a word of z-operators, rightmost first.
pub fn apply_z_word(module: &ModuleRep, word: &[ZId], v: &SparseVec) -> Result<SparseVec> {
    let mut out = v.clone();
    for &z in word.iter().rev() {
        if out.is_zero() {
            break;
        }
        out = apply_z(module, z, &out)?;
    }
    Ok(out)
}

/// One term `prefix · z · f(h)` of an inverse formula.
struct InverseTerm {
    prefix: Vec<GeneratorId>,
    z: ZId,
    coeff: W,
}

fn inverse_terms(gen: GeneratorId) -> Option<Vec<InverseTerm>> {
    let t = |prefix: Vec<GeneratorId>, z: ZId, coeff: W| InverseTerm { prefix, z, coeff };
    let one = W::one;
    Some(match gen {
        E14 => vec![t(vec![], ZId::Z14, one())],
        E13 => vec![t(vec![], ZId::Z13, one()), t(vec![E43], ZId::Z14, -h3p1())],
        E24 => vec![t(vec![], ZId::Z24, one()), t(vec![E21], ZId::Z14, h1p1())],
        E23 => vec![
            t(vec![], ZId::Z23, one()),
            t(vec![E21], ZId::Z13, h1p1()),
            t(vec![E43], ZId::Z24, -h3p1()),
            t(vec![E21, E43], ZId::Z14, -(h1p1() * h3p1())),
        ],
        E41 => vec![
            t(vec![], ZId::Z41, one()),
            t(vec![E21], ZId::Z42, -h1p1()),
            t(vec![E43], ZId::Z31, h3p1()),
            t(vec![E21, E43], ZId::Z32, -(h1p1() * h3p1())),
        ],
        E31 => vec![t(vec![], ZId::Z31, one()), t(vec![E21], ZId::Z32, -h1p1())],
        E42 => vec![t(vec![], ZId::Z42, one()), t(vec![E43], ZId::Z32, h3p1())],
        E32 => vec![t(vec![], ZId::Z32, one())],
        _ => return None,
    })
}

/// Evaluates the expression of an odd generator through the z-operators on
/// an invariant vector. The result must equal the direct action.
pub fn reconstruct_e(module: &ModuleRep, gen: GeneratorId, v: &SparseVec) -> Result<SparseVec> {
    let terms = inverse_terms(gen)
        .ok_or_else(|| Error::Parameter(format!("{gen} is not an odd generator")))?;
    if v.is_zero() {
        return Ok(SparseVec::new());
    }
    check_domain(module, v)?;
    let mut out = SparseVec::new();
    for (wt, comp) in module.weight_components(v) {
        for term in &terms {
            let c = term.coeff.eval(wt)?;
            let zv = apply_z(module, term.z, &comp)?;
            out.axpy(&c, &module.apply_word(&term.prefix, &zv)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::{highest_vector, kac};
    use crate::rational::frac;

    #[test]
    fn raising_operators_kill_w() {
        let k = kac(2, 1);
        for z in ZId::RAISING {
            assert!(apply_z(&k, z, &highest_vector()).unwrap().is_zero());
        }
    }

    #[test]
    fn z23_on_z32_w() {
        let (m, n) = (3, 1);
        let k = kac(m, n);
        let w = highest_vector();
        let v = apply_z(&k, ZId::Z32, &w).unwrap();
        let r = apply_z(&k, ZId::Z23, &v).unwrap();
        assert_eq!(r, w.scaled(&frac(-(m as i64 - n as i64), 2)));
    }

    #[test]
    fn domain_is_checked() {
        let k = kac(1, 1);
        let e21w = k.act(E21, &highest_vector()).unwrap();
        assert!(matches!(apply_z(&k, ZId::Z32, &e21w), Err(Error::Domain(_))));
    }

    #[test]
    fn reconstruction_of_e32_is_exact() {
        let k = kac(2, 2);
        let w = highest_vector();
        let v = apply_z(&k, ZId::Z32, &w).unwrap();
        for g in GeneratorId::ODD {
            assert_eq!(reconstruct_e(&k, g, &v).unwrap(), k.act(g, &v).unwrap(), "{g}");
        }
    }
}
