//! The finite-dimensional irreducibles of 𝔤, psl(2|2) and sl(2|2), each
//! delivered as a constructed and certified witness module.

pub mod jordan;
pub mod twist;

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::CentralCharges;
use crate::analysis::irreducible::certify;
use crate::analysis::sn_tn::{build_s, build_t, l0_dim, psl_decomposition, s_dim, t_dim};
use crate::analysis::spin::{quotient, spin};
use crate::error::{Error, Result};
use crate::kac::{build_kac, highest_vector, kac};
use crate::module::ModuleRep;
use crate::mz::zops::{apply_z_word, ZId};
use crate::rational::{display_rational, format_rational, int, Rational};

pub use jordan::{jordan_normalize, JordanForm};
pub use twist::{derive_twist_map, twist_module, AlgebraMap};

/// The four atypical submodules of an sl(2|2) Kac module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlSubmodule {
    S,
    T,
    X,
    Y,
}

impl SlSubmodule {
    /// Words whose value on `w` generates the submodule, in order of
    /// preference. The one-letter word vanishes on a boundary weight
    /// (`z31 w` at `m = 0`, `z42 w` at `n = 0`, `z41 w` at `m = 0` or
    /// `n = 0`); the later words take over there.
    pub fn seeds(self) -> Vec<Vec<ZId>> {
        use ZId::*;
        match self {
            SlSubmodule::S => vec![vec![Z32]],
            SlSubmodule::T => vec![vec![Z41], vec![Z41, Z42, Z32], vec![Z41, Z31, Z32]],
            SlSubmodule::X => vec![vec![Z31], vec![Z31, Z32]],
            SlSubmodule::Y => vec![vec![Z42], vec![Z42, Z32]],
        }
    }

    pub fn quotient_dim(self, m: u32, n: u32) -> usize {
        let (m, n) = (m as usize, n as usize);
        4 * match self {
            SlSubmodule::S => m * (n + 1) + (m + 1) * n,
            SlSubmodule::T => (m + 1) * (n + 2) + (m + 2) * (n + 1),
            SlSubmodule::X => (m + 2) * (n + 1) + (m + 1) * n,
            SlSubmodule::Y => (m + 1) * (n + 2) + m * (n + 1),
        }
    }
}

impl fmt::Display for SlSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `L̄(μ)` with `μ3 ≤ 1`.
    InfiniteDimensional { mu1: i64, mu3: i64 },
    KacTypical { m: u32, n: u32 },
    S { n: u32 },
    /// `T_n ≅ S_{n-1}`.
    T { n: u32 },
    PslKacTypical { m: u32, n: u32 },
    PslShort { n: u32 },
    PslTrivial,
    SlTypical { m: u32, n: u32, c: Rational },
    SlAtypicalQuotient { m: u32, n: u32, c: Rational, by: SlSubmodule },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::InfiniteDimensional { mu1, mu3 } => write!(f, "L({mu1},{mu3}) infinite-dimensional"),
            Family::KacTypical { m, n } => write!(f, "K({m},{n})"),
            Family::S { n } => write!(f, "S{n}"),
            Family::T { n } => write!(f, "T{n}"),
            Family::PslKacTypical { m, n } => write!(f, "K°({m},{n})"),
            Family::PslShort { n } => write!(f, "L°({n},{n})"),
            Family::PslTrivial => write!(f, "L°(0,0) trivial"),
            Family::SlTypical { m, n, c } => write!(f, "K({m},{n};{})", display_rational(&(c * int(2)))),
            Family::SlAtypicalQuotient { m, n, c, by } => {
                write!(f, "K({m},{n};{})/{by}", display_rational(&(c * int(2))))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub family: Family,
    /// `None` for infinite-dimensional answers.
    pub dimension: Option<usize>,
    /// The dimension predicted by the family formula.
    pub expected_dimension: Option<usize>,
    pub irreducible: Option<bool>,
    pub witness: Option<ModuleRep>,
}

impl ClassificationResult {
    fn infinite(mu1: i64, mu3: i64) -> Self {
        Self {
            family: Family::InfiniteDimensional { mu1, mu3 },
            dimension: None,
            expected_dimension: None,
            irreducible: None,
            witness: None,
        }
    }

    fn finite(family: Family, witness: ModuleRep, expected: usize) -> Result<Self> {
        let cert = certify(&witness)?;
        Ok(Self {
            family,
            dimension: Some(witness.dim()),
            expected_dimension: Some(expected),
            irreducible: Some(cert.irreducible),
            witness: Some(witness),
        })
    }

    /// Certified irreducible with the predicted dimension.
    pub fn is_consistent(&self) -> bool {
        match self.family {
            Family::InfiniteDimensional { .. } => true,
            _ => self.irreducible == Some(true) && self.dimension == self.expected_dimension,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, params) = match &self.family {
            Family::InfiniteDimensional { mu1, mu3 } => ("InfiniteDimensional", json!({"mu1": mu1, "mu3": mu3})),
            Family::KacTypical { m, n } => ("KacTypical", json!({"m": m, "n": n})),
            Family::S { n } => ("S_n", json!({"n": n})),
            Family::T { n } => ("T_n", json!({"n": n})),
            Family::PslKacTypical { m, n } => ("PslKacTypical", json!({"m": m, "n": n})),
            Family::PslShort { n } => ("PslShort", json!({"n": n})),
            Family::PslTrivial => ("PslTrivial", json!({})),
            Family::SlTypical { m, n, c } => ("SlTypical", json!({"m": m, "n": n, "c": format_rational(c)})),
            Family::SlAtypicalQuotient { m, n, c, by } => (
                "SlAtypicalQuotient",
                json!({"m": m, "n": n, "c": format_rational(c), "submodule": by.to_string()}),
            ),
        };
        json!({
            "family": kind,
            "label": self.family.to_string(),
            "parameters": params,
            "dimension": self.dimension,
            "irreducible": self.irreducible,
            "witness": self.witness.as_ref().map(|w| w.name.clone()),
        })
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.family, self.dimension) {
            (Family::SlAtypicalQuotient { by, .. }, Some(d)) => write!(f, "atypical: K/{by}, dim {d}")?,
            (Family::SlTypical { .. }, Some(d)) => write!(f, "typical: {}, dim {d}", self.family)?,
            (fam, Some(d)) => write!(f, "{fam}, dim {d}")?,
            (fam, None) => write!(f, "{fam}")?,
        }
        if self.irreducible == Some(false) {
            write!(f, " (NOT certified irreducible)")?;
        }
        Ok(())
    }
}

/// Irreducible finite-dimensional 𝔤-module with highest weight `(μ1, μ3)`
/// (charges `(0,0,1)`).
pub fn classify_g(mu1: i64, mu3: i64) -> Result<ClassificationResult> {
    if mu1 < 0 || mu3 <= 1 {
        return Ok(ClassificationResult::infinite(mu1, mu3));
    }
    let (m, n) = (mu1 as u32, (mu3 - 2) as u32);
    if m != n {
        return ClassificationResult::finite(Family::KacTypical { m, n }, kac(m, n), kac_dim(m, n));
    }
    let k = kac(n, n);
    let s = build_s(&k)?.as_module(&k, format!("S{n}"))?;
    ClassificationResult::finite(Family::S { n }, s, s_dim(n))
}

/// `T_n` as a module, `n ≥ 1`.
pub fn t_module(n: u32) -> Result<ClassificationResult> {
    if n == 0 {
        return Err(Error::Parameter("T_0 = 0".into()));
    }
    let k = kac(n, n);
    let t = build_t(&k)?.as_module(&k, format!("T{n}"))?;
    ClassificationResult::finite(Family::T { n }, t, t_dim(n))
}

pub fn kac_dim(m: u32, n: u32) -> usize {
    16 * (m as usize + 1) * (n as usize + 1)
}

/// Irreducible psl(2|2)-module of highest weight `(m, n)` (charges `(0,0,0)`).
pub fn classify_psl(m: u32, n: u32) -> Result<ClassificationResult> {
    if m != n {
        let k = build_kac(m, n, &CentralCharges::zero())?.renamed(format!("K°({m},{n})"));
        return ClassificationResult::finite(Family::PslKacTypical { m, n }, k, kac_dim(m, n));
    }
    let d = psl_decomposition(n)?;
    let family = if n == 0 { Family::PslTrivial } else { Family::PslShort { n } };
    ClassificationResult::finite(family, d.quotient, l0_dim(n))
}

/// Which atypicality condition `(m, n, c)` satisfies, if any.
pub fn sl_atypicality(m: u32, n: u32, c: &Rational) -> Option<SlSubmodule> {
    let two_c = c * int(2);
    let (m, n) = (m as i64, n as i64);
    if two_c == int(m - n) {
        Some(SlSubmodule::S)
    } else if two_c == int(n - m) {
        Some(SlSubmodule::T)
    } else if two_c == int(-(m + n + 2)) {
        Some(SlSubmodule::X)
    } else if two_c == int(m + n + 2) {
        Some(SlSubmodule::Y)
    } else {
        None
    }
}

/// Irreducible sl(2|2)-module of highest weight `(m, n)` with `C ↦ c ≠ 0`.
pub fn classify_sl2(m: u32, n: u32, c: &Rational) -> Result<ClassificationResult> {
    if c.is_zero() {
        return Err(Error::Parameter("c = 0: use the psl(2|2) or 𝔤 classification".into()));
    }
    let k = build_kac(m, n, &CentralCharges::sl(c.clone()))?;
    match sl_atypicality(m, n, c) {
        None => ClassificationResult::finite(Family::SlTypical { m, n, c: c.clone() }, k, kac_dim(m, n)),
        Some(by) => {
            let mut seed = None;
            for word in by.seeds() {
                let v = apply_z_word(&k, &word, &highest_vector())?;
                if !v.is_zero() {
                    seed = Some(v);
                    break;
                }
            }
            let seed = seed.ok_or_else(|| Error::Internal(format!("no nonzero seed for {by} in {}", k.name)))?;
            let sub = spin(&k, &[seed])?;
            let name = format!("{}/{by}", k.name);
            let q = quotient(&k, &sub, name)?;
            ClassificationResult::finite(
                Family::SlAtypicalQuotient { m, n, c: c.clone(), by },
                q,
                by.quotient_dim(m, n),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn g_examples() {
        let r = classify_g(1, 4).unwrap();
        assert_eq!(r.family, Family::KacTypical { m: 1, n: 2 });
        assert_eq!(r.dimension, Some(96));
        assert!(r.is_consistent());
        let r = classify_g(2, 4).unwrap();
        assert_eq!(r.family, Family::S { n: 2 });
        assert_eq!(r.dimension, Some(96));
        assert!(r.is_consistent());
        assert!(matches!(classify_g(0, 1).unwrap().family, Family::InfiniteDimensional { .. }));
    }

    #[test]
    fn psl_examples() {
        let r = classify_psl(1, 1).unwrap();
        assert_eq!(r.dimension, Some(14));
        assert!(r.is_consistent());
        assert_eq!(classify_psl(0, 0).unwrap().dimension, Some(1));
        assert!(classify_psl(1, 0).unwrap().is_consistent());
    }

    #[test]
    fn sl_examples() {
        let r = classify_sl2(1, 1, &int(1)).unwrap();
        assert!(matches!(r.family, Family::SlTypical { .. }));
        assert_eq!(r.dimension, Some(64));
        let r = classify_sl2(2, 1, &frac(1, 2)).unwrap();
        assert_eq!(r.to_string(), "atypical: K/S, dim 28");
        assert!(r.is_consistent());
        let r = classify_sl2(0, 0, &int(-1)).unwrap();
        assert!(matches!(r.family, Family::SlAtypicalQuotient { by: SlSubmodule::X, .. }));
        assert_eq!(r.dimension, Some(8));
        assert!(r.is_consistent());
        assert!(matches!(classify_sl2(1, 1, &int(0)), Err(Error::Parameter(_))));
    }

    #[test]
    fn every_atypical_line_near_the_origin() {
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                let (mi, ni) = (m as i64, n as i64);
                for two_c in [mi - ni, ni - mi, mi + ni + 2, -(mi + ni + 2)] {
                    if two_c == 0 {
                        continue;
                    }
                    let c = frac(two_c, 2);
                    let r = classify_sl2(m, n, &c).unwrap();
                    assert!(r.is_consistent(), "({m},{n},{c}): {r}");
                }
            }
        }
    }
}
