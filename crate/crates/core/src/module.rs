//! Finite-dimensional representations as labeled bases plus exact action
//! matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{parity_sign, supercommutator, CentralCharges, GeneratorId, LieElement};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rational::{int, Rational};

/// `(h1, h3)` eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn shift(self, da: i64, db: i64) -> Self {
        Self::new(self.a + da, self.b + db)
    }

    /// Both entries nonnegative: a highest weight of a finite-dimensional
    /// sl(2) ⊕ sl(2) module.
    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// Dimension of the irreducible sl(2) ⊕ sl(2) module with this highest weight.
    pub fn l0_dim(self) -> usize {
        assert!(self.is_dominant());
        ((self.a + 1) * (self.b + 1)) as usize
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Weight shift `(Δh1, Δh3)` produced by a generator.
pub fn generator_shift(g: GeneratorId) -> (i64, i64) {
    use GeneratorId::*;
    match g {
        E12 => (2, 0),
        E21 => (-2, 0),
        E34 => (0, 2),
        E43 => (0, -2),
        E13 => (1, -1),
        E14 => (1, 1),
        E23 => (-1, -1),
        E24 => (-1, 1),
        E31 => (-1, 1),
        E32 => (1, 1),
        E41 => (-1, -1),
        E42 => (1, -1),
        H1 | H2 | H3 | K | P => (0, 0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisLabel {
    /// `E41^θ1 E31^θ2 E42^θ3 E32^θ4 E21^k E43^l w`
    Kac { theta: [u8; 4], k: u32, l: u32 },
    /// Opaque label of a derived module, usually the parent index it came from.
    Index(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Kac { theta, k, l } => {
                let mut parts = Vec::new();
                for (bit, name) in theta.iter().zip(["E41", "E31", "E42", "E32"]) {
                    if *bit == 1 {
                        parts.push(name.to_string());
                    }
                }
                if *k > 0 {
                    parts.push(if *k == 1 { "E21".into() } else { format!("E21^{k}") });
                }
                if *l > 0 {
                    parts.push(if *l == 1 { "E43".into() } else { format!("E43^{l}") });
                }
                parts.push("w".into());
                write!(f, "{}", parts.join(" "))
            }
            BasisLabel::Index(i) => write!(f, "#{i}"),
        }
    }
}

/// A representation: basis labels, weights, charges and one matrix per
/// generator. Generators without a matrix (odd ones on an even-only module)
/// are simply absent.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub name: String,
    /// `(m, n)` for Kac-type modules; `None` for abstract derived ones.
    pub highest: Option<(u32, u32)>,
    pub charges: CentralCharges,
    pub labels: Vec<BasisLabel>,
    pub weights: Vec<Weight>,
    action: Vec<Option<SparseMatrix>>,
}

/// Result of the exhaustive bracket check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureReport {
    pub pairs_checked: usize,
    pub failures: Vec<(GeneratorId, GeneratorId)>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl ModuleRep {
    pub fn new(
        name: impl Into<String>,
        highest: Option<(u32, u32)>,
        charges: CentralCharges,
        labels: Vec<BasisLabel>,
        weights: Vec<Weight>,
        action: BTreeMap<GeneratorId, SparseMatrix>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(weights.len(), dim);
        let mut slots = vec![None; GeneratorId::ALL.len()];
        for (g, m) in action {
            assert_eq!((m.nrows(), m.ncols()), (dim, dim), "matrix of {g} has wrong shape");
            slots[g.index()] = Some(m);
        }
        Self {
            name: name.into(),
            highest,
            charges,
            labels,
            weights,
            action: slots,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix(&self, g: GeneratorId) -> Option<&SparseMatrix> {
        self.action[g.index()].as_ref()
    }

    pub fn has(&self, g: GeneratorId) -> bool {
        self.action[g.index()].is_some()
    }

    /// Generators carrying a matrix, in canonical order.
    pub fn generators(&self) -> Vec<GeneratorId> {
        GeneratorId::ALL.iter().copied().filter(|&g| self.has(g)).collect()
    }

    pub fn matrices(&self) -> impl Iterator<Item = (GeneratorId, &SparseMatrix)> + '_ {
        GeneratorId::ALL
            .iter()
            .filter_map(move |&g| self.matrix(g).map(|m| (g, m)))
    }

    fn require(&self, g: GeneratorId) -> Result<&SparseMatrix> {
        self.matrix(g)
            .ok_or_else(|| Error::Parameter(format!("{g} does not act on {}", self.name)))
    }

    /// `ρ(g) v`
    pub fn act(&self, g: GeneratorId, v: &SparseVec) -> Result<SparseVec> {
        Ok(self.require(g)?.apply(v))
    }

    /// `ρ(e) v` for a linear combination of generators.
    pub fn act_element(&self, e: &LieElement, v: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (g, c) in e.iter() {
            out.axpy(c, &self.act(g, v)?);
        }
        Ok(out)
    }

    /// Applies a word of generators, rightmost letter first.
    pub fn apply_word(&self, word: &[GeneratorId], v: &SparseVec) -> Result<SparseVec> {
        let mut out = v.clone();
        for &g in word.iter().rev() {
            if out.is_zero() {
                break;
            }
            out = self.act(g, &out)?;
        }
        Ok(out)
    }

    /// `ρ(e)` as a matrix.
    pub fn element_matrix(&self, e: &LieElement) -> Result<SparseMatrix> {
        let mut m = SparseMatrix::zero(self.dim(), self.dim());
        for (g, c) in e.iter() {
            m.axpy(c, self.require(g)?);
        }
        Ok(m)
    }

    pub fn weight_of_index(&self, i: usize) -> Weight {
        self.weights[i]
    }

    /// Common weight of a homogeneous vector; `None` for zero or mixed vectors.
    pub fn weight_of(&self, v: &SparseVec) -> Option<Weight> {
        let mut it = v.support().map(|i| self.weights[i]);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, &w) in self.weights.iter().enumerate() {
            out.entry(w).or_default().push(i);
        }
        out
    }

    /// Splits a vector into its weight components.
    pub fn weight_components(&self, v: &SparseVec) -> BTreeMap<Weight, SparseVec> {
        let mut out: BTreeMap<Weight, SparseVec> = BTreeMap::new();
        for (i, x) in v.iter() {
            out.entry(self.weights[i]).or_default().add_at(i, x);
        }
        out
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis vector for a Kac label.
    pub fn kac_vector(&self, theta: [u8; 4], k: u32, l: u32) -> Option<SparseVec> {
        self.index_of(&BasisLabel::Kac { theta, k, l }).map(SparseVec::unit)
    }

    /// Checks `ρ([x,y]) = ρ(x)ρ(y) - (-1)^{|x||y|} ρ(y)ρ(x)` for all pairs of
    /// generators that act, and that `H1`, `H3` and the centre act as the
    /// stored weights and charges.
    pub fn verify_structure(&self) -> StructureReport {
        let mut report = StructureReport::default();
        let gens = self.generators();
        let products: BTreeMap<(GeneratorId, GeneratorId), SparseMatrix> = gens
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| ((x, y), self.action[x.index()].as_ref().unwrap().mul(self.action[y.index()].as_ref().unwrap())))
            .collect();
        for &x in &gens {
            for &y in &gens {
                let br = supercommutator(x, y);
                let Ok(rhs) = self.element_matrix(&br) else {
                    continue;
                };
                report.pairs_checked += 1;
                let lhs = products[&(x, y)].sub(&products[&(y, x)].scaled(&int(parity_sign(x, y))));
                if lhs != rhs {
                    report.failures.push((x, y));
                }
            }
        }
        // Cartan and central elements act diagonally by the recorded data.
        let n = self.dim();
        let checks: [(LieElement, Box<dyn Fn(usize) -> Rational>); 5] = [
            (LieElement::gen(GeneratorId::H1), Box::new(|i| int(self.weights[i].a))),
            (LieElement::gen(GeneratorId::H3), Box::new(|i| int(self.weights[i].b))),
            (LieElement::gen(GeneratorId::K), Box::new(|_| self.charges.k.clone())),
            (LieElement::gen(GeneratorId::P), Box::new(|_| self.charges.p.clone())),
            (LieElement::c_combination(), Box::new(|_| self.charges.c.clone())),
        ];
        for (e, expect) in checks.iter() {
            let Ok(m) = self.element_matrix(e) else {
                continue;
            };
            let mut d = SparseMatrix::zero(n, n);
            for i in 0..n {
                d.add_entry(i, i, &expect(i));
            }
            if m != d {
                let g = e.iter().next().map(|(g, _)| g).unwrap_or(GeneratorId::H2);
                report.failures.push((g, g));
            }
        }
        report
    }

    /// [`verify_structure`](Self::verify_structure) as a `Result`.
    pub fn check_structure(&self) -> Result<()> {
        match self.verify_structure().failures.first() {
            None => Ok(()),
            Some(&(x, y)) => Err(Error::StructureViolation { x, y }),
        }
    }

    /// Kernel of `E12` and `E34`: the basis-free check used by many suites.
    pub fn is_kplus_invariant(&self, v: &SparseVec) -> Result<bool> {
        Ok(self.act(GeneratorId::E12, v)?.is_zero() && self.act(GeneratorId::E34, v)?.is_zero())
    }

    /// Rebuilds the module with a new name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the action by `g ↦ ρ(φ(g))`.
    pub fn with_action<F>(&self, name: impl Into<String>, charges: CentralCharges, f: F) -> Result<Self>
    where
        F: Fn(GeneratorId) -> Option<LieElement>,
    {
        let mut action = BTreeMap::new();
        for g in self.generators() {
            let e = f(g).unwrap_or_else(|| LieElement::gen(g));
            action.insert(g, self.element_matrix(&e)?);
        }
        Ok(Self::new(name, self.highest, charges, self.labels.clone(), self.weights.clone(), action))
    }

    /// Is `ρ(g) = c·Id` for the given scalar.
    pub fn acts_as_scalar(&self, g: GeneratorId, c: &Rational) -> bool {
        self.matrix(g).is_some_and(|m| *m == SparseMatrix::scalar(self.dim(), c))
    }

    /// Count of nonzero matrix entries across all generators.
    pub fn nnz(&self) -> usize {
        self.action.iter().flatten().map(SparseMatrix::nnz).sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.dim() == 0
    }

    /// Vector with all coordinates zero; present for readability at call sites.
    pub fn zero_vector(&self) -> SparseVec {
        SparseVec::new()
    }

    pub fn trace(&self, g: GeneratorId) -> Option<Rational> {
        let m = self.matrix(g)?;
        Some((0..self.dim()).map(|i| m.get(i, i)).fold(Rational::zero(), |a, b| a + b))
    }
}
