//! Quadratic relations between the z-operators, with the central charges
//! substituted from the module and `h`-factors evaluated at the weight of
//! the vector the relation is applied to.

use num_traits::Zero;

use crate::analysis::invariants::kplus_invariants;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::module::{ModuleRep, Weight};
use crate::mz::report::{SuiteReport, VerificationRecord};
use crate::mz::zops::{apply_z_word, ZId, ZId::*};
use crate::rational::{int, Rational};

/// Evaluation context: the weight of the input vector and the charges.
pub struct Ctx {
    pub weight: Weight,
    pub h1: Rational,
    pub h3: Rational,
    pub c: Rational,
    pub k: Rational,
    pub p: Rational,
}

impl Ctx {
    pub fn new(weight: Weight, module: &ModuleRep) -> Self {
        Self {
            weight,
            h1: int(weight.a),
            h3: int(weight.b),
            c: module.charges.c.clone(),
            k: module.charges.k.clone(),
            p: module.charges.p.clone(),
        }
    }

    fn inv(&self, x: Rational, what: &str) -> Result<Rational> {
        if x.is_zero() {
            return Err(Error::WeightSingularity { weight: self.weight, detail: format!("{what} = 0") });
        }
        Ok(x.recip())
    }

    /// `1/(h1+a)`
    pub fn i1(&self, a: i64) -> Result<Rational> {
        self.inv(&self.h1 + int(a), "h1 + a")
    }

    /// `1/(h3+a)`
    pub fn i3(&self, a: i64) -> Result<Rational> {
        self.inv(&self.h3 + int(a), "h3 + a")
    }

    fn h1(&self) -> Rational {
        self.h1.clone()
    }

    fn h3(&self) -> Rational {
        self.h3.clone()
    }
}

pub type Coef = fn(&Ctx) -> Result<Rational>;

/// `lhs[0] lhs[1] = Σ word · coef(h)`.
pub struct Relation {
    pub id: &'static str,
    pub lhs: [ZId; 2],
    pub rhs: Vec<(Vec<ZId>, Coef)>,
}

impl Relation {
    pub fn apply_lhs(&self, module: &ModuleRep, v: &SparseVec) -> Result<SparseVec> {
        apply_z_word(module, &self.lhs, v)
    }

    /// Right-hand side on a homogeneous vector of weight `weight`.
    pub fn apply_rhs(&self, module: &ModuleRep, weight: Weight, v: &SparseVec) -> Result<SparseVec> {
        let ctx = Ctx::new(weight, module);
        let mut out = SparseVec::new();
        for (word, coef) in &self.rhs {
            let c = coef(&ctx)?;
            if !c.is_zero() {
                out.axpy(&c, &apply_z_word(module, word, v)?);
            }
        }
        Ok(out)
    }
}

fn rel(id: &'static str, lhs: [ZId; 2], rhs: Vec<(Vec<ZId>, Coef)>) -> Relation {
    Relation { id, lhs, rhs }
}

/// Relations among the lowering operators.
pub fn lowering_relations() -> Vec<Relation> {
    vec![
        rel("z31z41", [Z31, Z41], vec![(vec![Z41, Z31], |x| Ok(-x.h3() * x.i3(1)?))]),
        rel("z42z41", [Z42, Z41], vec![(vec![Z41, Z42], |x| Ok(-x.h1() * x.i1(1)?))]),
        rel(
            "z32z41",
            [Z32, Z41],
            vec![
                (vec![], |x| Ok(-&x.p * x.h3() * x.i3(1)?)),
                (vec![Z31, Z42], |x| Ok(-(x.h1() - x.h3()) * x.i1(1)? * x.i3(1)?)),
                (vec![Z41, Z32], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i3(1)?.pow(2))),
            ],
        ),
        rel(
            "z42z31",
            [Z42, Z31],
            vec![
                (vec![], |x| Ok(x.p.clone())),
                (vec![Z31, Z42], |_| Ok(int(-1))),
                (vec![Z41, Z32], |x| Ok((x.h1() + x.h3() + int(2)) * x.i1(1)? * x.i3(1)?)),
            ],
        ),
        rel("z32z31", [Z32, Z31], vec![(vec![Z31, Z32], |x| Ok(-x.h1() * x.i1(1)?))]),
        rel("z32z42", [Z32, Z42], vec![(vec![Z42, Z32], |x| Ok(-x.h3() * x.i3(1)?))]),
    ]
}

/// Relations among the raising operators.
pub fn raising_relations() -> Vec<Relation> {
    vec![
        rel("z14z13", [Z14, Z13], vec![(vec![Z13, Z14], |x| Ok(-x.h3() * x.i3(1)?))]),
        rel("z14z24", [Z14, Z24], vec![(vec![Z24, Z14], |x| Ok(-x.h1() * x.i1(1)?))]),
        rel(
            "z14z23",
            [Z14, Z23],
            vec![
                (vec![], |x| Ok(-&x.k * x.h3() * x.i3(1)?)),
                (vec![Z24, Z13], |x| Ok(-(x.h1() - x.h3()) * x.i1(1)? * x.i3(1)?)),
                (vec![Z23, Z14], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i3(1)?.pow(2))),
            ],
        ),
        rel(
            "z13z24",
            [Z13, Z24],
            vec![
                (vec![], |x| Ok(x.k.clone())),
                (vec![Z24, Z13], |_| Ok(int(-1))),
                (vec![Z23, Z14], |x| Ok((x.h1() + x.h3() + int(2)) * x.i1(1)? * x.i3(1)?)),
            ],
        ),
        rel("z13z23", [Z13, Z23], vec![(vec![Z23, Z13], |x| Ok(-x.h1() * x.i1(1)?))]),
        rel("z24z23", [Z24, Z23], vec![(vec![Z23, Z24], |x| Ok(-x.h3() * x.i3(1)?))]),
    ]
}

/// Relations between a raising and a lowering operator.
pub fn mixed_relations() -> Vec<Relation> {
    vec![
        rel(
            "z14z41",
            [Z14, Z41],
            vec![
                (vec![], |x| {
                    let two_c = int(2) * &x.c;
                    Ok(x.h1() * x.h3() * (x.h1() - x.h3() + two_c) / int(2) * x.i1(1)? * x.i3(1)?)
                }),
                (vec![Z31, Z13], |x| Ok(x.h1() * (x.h1() + int(2)) * x.i1(1)?.pow(2) * x.i3(1)?)),
                (vec![Z32, Z23], |x| Ok(-x.i1(1)? * x.i3(1)?)),
                (vec![Z41, Z14], |x| {
                    Ok(-x.h1() * x.h3() * (x.h1() + int(2)) * (x.h3() + int(2)) * x.i1(1)?.pow(2) * x.i3(1)?.pow(2))
                }),
                (vec![Z42, Z24], |x| Ok(x.h3() * (x.h3() + int(2)) * x.i1(1)? * x.i3(1)?.pow(2))),
            ],
        ),
        rel(
            "z14z31",
            [Z14, Z31],
            vec![
                (vec![Z31, Z14], |x| Ok(-x.h1() * (x.h1() + int(2)) * x.i1(1)?.pow(2))),
                (vec![Z32, Z24], |x| x.i1(1)),
            ],
        ),
        rel(
            "z14z42",
            [Z14, Z42],
            vec![
                (vec![Z42, Z14], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i3(1)?.pow(2))),
                (vec![Z32, Z13], |x| x.i3(1)),
            ],
        ),
        rel("z14z32", [Z14, Z32], vec![(vec![Z32, Z14], |_| Ok(int(-1)))]),
        rel(
            "z13z41",
            [Z13, Z41],
            vec![
                (vec![Z41, Z13], |x| Ok(-x.h1() * (x.h1() + int(2)) * x.i1(1)?.pow(2))),
                (vec![Z42, Z23], |x| x.i1(1)),
            ],
        ),
        rel(
            "z13z31",
            [Z13, Z31],
            vec![
                (vec![], |x| {
                    let two_c = int(2) * &x.c;
                    Ok(x.h1() * (x.h1() + x.h3() + int(2) + two_c) / int(2) * x.i1(1)?)
                }),
                (vec![Z31, Z13], |x| Ok(-x.h1() * (x.h1() + int(2)) * x.i1(1)?.pow(2))),
                (vec![Z32, Z23], |x| x.i1(1)),
                (vec![Z41, Z14], |x| Ok(-x.h1() * (x.h1() + int(2)) * x.i1(1)?.pow(2) * x.i3(1)?)),
                (vec![Z42, Z24], |x| Ok(x.i1(1)? * x.i3(1)?)),
            ],
        ),
        rel("z13z42", [Z13, Z42], vec![(vec![Z42, Z13], |_| Ok(int(-1)))]),
        rel(
            "z13z32",
            [Z13, Z32],
            vec![(vec![Z32, Z13], |_| Ok(int(-1))), (vec![Z42, Z14], |x| Ok(-x.i3(1)?))],
        ),
        rel(
            "z24z41",
            [Z24, Z41],
            vec![
                (vec![Z41, Z24], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i3(1)?.pow(2))),
                (vec![Z31, Z23], |x| x.i3(1)),
            ],
        ),
        rel("z24z31", [Z24, Z31], vec![(vec![Z31, Z24], |_| Ok(int(-1)))]),
        rel(
            "z24z42",
            [Z24, Z42],
            vec![
                (vec![], |x| {
                    let two_c = int(2) * &x.c;
                    Ok(-x.h3() * (x.h1() + x.h3() + int(2) - two_c) / int(2) * x.i3(1)?)
                }),
                (vec![Z31, Z13], |x| Ok(x.i1(1)? * x.i3(1)?)),
                (vec![Z32, Z23], |x| x.i3(1)),
                (vec![Z41, Z14], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i1(1)? * x.i3(1)?.pow(2))),
                (vec![Z42, Z24], |x| Ok(-x.h3() * (x.h3() + int(2)) * x.i3(1)?.pow(2))),
            ],
        ),
        rel(
            "z24z32",
            [Z24, Z32],
            vec![(vec![Z32, Z24], |_| Ok(int(-1))), (vec![Z31, Z14], |x| Ok(-x.i1(1)?))],
        ),
        rel("z23z41", [Z23, Z41], vec![(vec![Z41, Z23], |_| Ok(int(-1)))]),
        rel(
            "z23z31",
            [Z23, Z31],
            vec![(vec![Z31, Z23], |_| Ok(int(-1))), (vec![Z41, Z24], |x| Ok(-x.i3(1)?))],
        ),
        rel(
            "z23z42",
            [Z23, Z42],
            vec![(vec![Z42, Z23], |_| Ok(int(-1))), (vec![Z41, Z13], |x| Ok(-x.i1(1)?))],
        ),
        rel(
            "z23z32",
            [Z23, Z32],
            vec![
                (vec![], |x| {
                    let two_c = int(2) * &x.c;
                    Ok(-(x.h1() - x.h3() - two_c) / int(2))
                }),
                (vec![Z31, Z13], |x| Ok(-x.i1(1)?)),
                (vec![Z32, Z23], |_| Ok(int(-1))),
                (vec![Z41, Z14], |x| Ok(-x.i1(1)? * x.i3(1)?)),
                (vec![Z42, Z24], |x| Ok(-x.i3(1)?)),
            ],
        ),
    ]
}

/// Every quadratic relation, grouped as lowering, raising, mixed.
pub fn all_relations() -> Vec<(&'static str, Relation)> {
    let mut out = Vec::new();
    out.extend(lowering_relations().into_iter().map(|r| ("lowering", r)));
    out.extend(raising_relations().into_iter().map(|r| ("raising", r)));
    out.extend(mixed_relations().into_iter().map(|r| ("mixed", r)));
    out
}

fn vplus_labelled(module: &ModuleRep) -> Result<Vec<(String, Weight, SparseVec)>> {
    let vplus = kplus_invariants(module)?;
    Ok(vplus
        .vectors
        .into_iter()
        .zip(vplus.weights)
        .enumerate()
        .map(|(j, (v, w))| (format!("V+{w}#{j}"), w, v))
        .collect())
}

/// Checks every quadratic relation on every basis vector of `V⁺`.
pub fn verify_appendix_a(module: &ModuleRep) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("appendix-a");
    let basis = vplus_labelled(module)?;
    for (group, r) in all_relations() {
        for (label, wt, v) in &basis {
            let lhs = r.apply_lhs(module, v)?;
            let rhs = r.apply_rhs(module, *wt, v)?;
            rep.push(VerificationRecord::compare(format!("{group}:{}", r.id), module, label, &lhs, &rhs));
        }
    }
    Ok(rep)
}

/// `z² = 0` for all eight operators on every basis vector of `V⁺`.
pub fn verify_z_squares(module: &ModuleRep) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("z-squares");
    let zero = SparseVec::new();
    for (label, _, v) in &vplus_labelled(module)? {
        for z in ZId::ALL {
            let lhs = apply_z_word(module, &[z, z], v)?;
            rep.push(VerificationRecord::compare(format!("{z}^2"), module, label, &lhs, &zero));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CentralCharges;
    use crate::kac::{build_kac, kac};

    #[test]
    fn relation_count() {
        assert_eq!(all_relations().len(), 6 + 6 + 16);
    }

    #[test]
    fn relations_hold_on_small_kac_modules() {
        for (m, n) in [(1, 1), (2, 0), (0, 2)] {
            let rep = verify_appendix_a(&kac(m, n)).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().next());
        }
    }

    #[test]
    fn relations_hold_with_nonzero_c() {
        let k = build_kac(2, 1, &CentralCharges::new(int(3) / int(2), int(0), int(2))).unwrap();
        let rep = verify_appendix_a(&k).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().next());
    }

    #[test]
    fn squares_vanish() {
        assert!(verify_z_squares(&kac(3, 1)).unwrap().passed());
    }
}
