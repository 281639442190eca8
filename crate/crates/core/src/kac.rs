//! `L⁰(m,n)` and the Kac modules `K(m,n)`.
//!
//! The Kac module is induced from `L⁰(m,n)` with the odd raising generators
//! acting by zero. Its basis is
//! `E41^θ1 E31^θ2 E42^θ3 E32^θ4 E21^k E43^l w`; a generator acts by being
//! commuted leftward through the odd letters until it reaches `L⁰`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{supercommutator, CentralCharges, GeneratorId};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::module::{BasisLabel, ModuleRep, Weight};
use crate::rational::{display_rational, frac, int, Rational};

use GeneratorId::*;

/// Odd lowering letters in PBW order.
pub const LETTERS: [GeneratorId; 4] = [E41, E31, E42, E32];

fn letter_position(g: GeneratorId) -> Option<usize> {
    LETTERS.iter().position(|&x| x == g)
}

/// Index arithmetic for the Kac basis of fixed `(m, n)`.
#[derive(Clone, Copy, Debug)]
pub struct KacIndexer {
    pub m: u32,
    pub n: u32,
}

impl KacIndexer {
    fn block(&self) -> usize {
        ((self.m + 1) * (self.n + 1)) as usize
    }

    pub fn dim(&self) -> usize {
        16 * self.block()
    }

    /// θ as a 4-bit number, `θ1` most significant, so that index order is
    /// lexicographic in `(θ, k, l)`.
    pub fn index(&self, theta: u8, k: u32, l: u32) -> usize {
        theta as usize * self.block() + (k * (self.n + 1) + l) as usize
    }

    pub fn decode(&self, idx: usize) -> (u8, u32, u32) {
        let theta = (idx / self.block()) as u8;
        let r = (idx % self.block()) as u32;
        (theta, r / (self.n + 1), r % (self.n + 1))
    }

    pub fn theta_bits(theta: u8) -> [u8; 4] {
        [(theta >> 3) & 1, (theta >> 2) & 1, (theta >> 1) & 1, theta & 1]
    }

    fn bit(pos: usize) -> u8 {
        1 << (3 - pos)
    }

    pub fn weight(&self, idx: usize) -> Weight {
        let (theta, k, l) = self.decode(idx);
        let t = Self::theta_bits(theta).map(i64::from);
        Weight::new(
            self.m as i64 - t[0] - t[1] + t[2] + t[3] - 2 * k as i64,
            self.n as i64 - t[0] + t[1] - t[2] + t[3] - 2 * l as i64,
        )
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        let (theta, k, l) = self.decode(idx);
        BasisLabel::Kac { theta: Self::theta_bits(theta), k, l }
    }
}

struct KacBuilder<'a> {
    ix: KacIndexer,
    charges: &'a CentralCharges,
    memo: HashMap<(GeneratorId, usize), SparseVec>,
}

impl KacBuilder<'_> {
    fn act_vec(&mut self, g: GeneratorId, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            let img = self.act_basis(g, i);
            out.axpy(c, &img);
        }
        out
    }

    fn act_basis(&mut self, g: GeneratorId, idx: usize) -> SparseVec {
        if let Some(v) = self.memo.get(&(g, idx)) {
            return v.clone();
        }
        let v = self.compute(g, idx);
        self.memo.insert((g, idx), v.clone());
        v
    }

    fn compute(&mut self, g: GeneratorId, idx: usize) -> SparseVec {
        let (theta, k, l) = self.ix.decode(idx);
        if theta == 0 {
            return self.act_l0(g, k, l);
        }
        let first = (0..4).find(|&p| theta & KacIndexer::bit(p) != 0).unwrap();
        let y = LETTERS[first];
        let rest = self.ix.index(theta & !KacIndexer::bit(first), k, l);

        if let Some(pos) = letter_position(g) {
            if pos < first {
                return SparseVec::unit(self.ix.index(theta | KacIndexer::bit(pos), k, l));
            }
            if pos == first {
                // g² = ½[g,g], and [g,g] = 0 for every lowering letter
                return SparseVec::new();
            }
        }
        // g·(Y·rest) = ±Y·(g·rest) + [g,Y]·rest
        let g_rest = self.act_basis(g, rest);
        let mut out = self.act_vec(y, &g_rest);
        if g.is_odd() {
            out = out.neg();
        }
        let rest_vec = SparseVec::unit(rest);
        for (h, c) in supercommutator(g, y).iter() {
            let img = self.act_vec(h, &rest_vec);
            out.axpy(c, &img);
        }
        out
    }

    /// Action on `E21^k E43^l w`.
    fn act_l0(&self, g: GeneratorId, k: u32, l: u32) -> SparseVec {
        let (m, n) = (self.ix.m, self.ix.n);
        let at = |kk: u32, ll: u32, c: Rational| {
            SparseVec::from_pairs([(self.ix.index(0, kk, ll), c)])
        };
        let h1 = m as i64 - 2 * k as i64;
        let h3 = n as i64 - 2 * l as i64;
        match g {
            E21 if k < m => at(k + 1, l, int(1)),
            E43 if l < n => at(k, l + 1, int(1)),
            E21 | E43 => SparseVec::new(),
            E12 if k > 0 => at(k - 1, l, int((k * (m - k + 1)) as i64)),
            E34 if l > 0 => at(k, l - 1, int((l * (n - l + 1)) as i64)),
            E12 | E34 => SparseVec::new(),
            H1 => at(k, l, int(h1)),
            H3 => at(k, l, int(h3)),
            // C = h1/2 + h2 - h3/2
            H2 => at(k, l, &self.charges.c - frac(h1, 2) + frac(h3, 2)),
            K => at(k, l, self.charges.k.clone()),
            P => at(k, l, self.charges.p.clone()),
            E13 | E14 | E23 | E24 => SparseVec::new(),
            E41 | E31 | E42 | E32 => {
                let pos = letter_position(g).unwrap();
                SparseVec::unit(self.ix.index(KacIndexer::bit(pos), k, l))
            }
        }
    }
}

fn materialize(
    ix: KacIndexer,
    charges: &CentralCharges,
    gens: &[GeneratorId],
    dim: usize,
) -> BTreeMap<GeneratorId, SparseMatrix> {
    let mut b = KacBuilder { ix, charges, memo: HashMap::new() };
    gens.iter()
        .map(|&g| {
            let cols = (0..dim).map(|i| b.act_basis(g, i)).collect();
            (g, SparseMatrix::from_columns(dim, cols))
        })
        .collect()
}

/// The `(m+1)(n+1)`-dimensional module of the even subalgebra with basis
/// `E21^k E43^l w`. Odd generators do not act.
pub fn build_l0(m: u32, n: u32) -> ModuleRep {
    build_l0_with_charges(m, n, &CentralCharges::standard())
}

pub fn build_l0_with_charges(m: u32, n: u32, charges: &CentralCharges) -> ModuleRep {
    let ix = KacIndexer { m, n };
    let dim = ix.block();
    let gens: Vec<GeneratorId> = GeneratorId::ALL.iter().copied().filter(|g| !g.is_odd()).collect();
    let action = materialize(ix, charges, &gens, dim);
    ModuleRep::new(
        format!("L0({m},{n})"),
        Some((m, n)),
        charges.clone(),
        (0..dim).map(|i| ix.label(i)).collect(),
        (0..dim).map(|i| ix.weight(i)).collect(),
        action,
    )
}

/// `K(m,n)` with the given central charges.
///
/// The charge of `K` must vanish: the odd raising generators act by zero on
/// the inducing module, while `[E13, E24] = K`.
pub fn build_kac(m: u32, n: u32, charges: &CentralCharges) -> Result<ModuleRep> {
    if !charges.k.is_zero() {
        return Err(Error::Parameter(format!(
            "Kac module needs K to act by 0 (got {}); twist to a charge with k = 0 first",
            display_rational(&charges.k)
        )));
    }
    let ix = KacIndexer { m, n };
    let dim = ix.dim();
    let action = materialize(ix, charges, &GeneratorId::ALL, dim);
    Ok(ModuleRep::new(
        kac_name(m, n, charges),
        Some((m, n)),
        charges.clone(),
        (0..dim).map(|i| ix.label(i)).collect(),
        (0..dim).map(|i| ix.weight(i)).collect(),
        action,
    ))
}

/// `K(m,n)` with the standard charges `(0,0,1)`.
pub fn kac(m: u32, n: u32) -> ModuleRep {
    build_kac(m, n, &CentralCharges::standard()).expect("standard charges have k = 0")
}

fn kac_name(m: u32, n: u32, ch: &CentralCharges) -> String {
    if *ch == CentralCharges::standard() {
        format!("K({m},{n})")
    } else {
        format!("K({m},{n};{ch})")
    }
}

/// The highest vector `w`, always basis index 0.
pub fn highest_vector() -> SparseVec {
    SparseVec::unit(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l0_dimensions_and_ladder() {
        assert_eq!(build_l0(0, 0).dim(), 1);
        assert_eq!(build_l0(2, 1).dim(), 6);
        let l = build_l0(3, 0);
        let e21w = l.act(E21, &highest_vector()).unwrap();
        let back = l.act(E12, &e21w).unwrap();
        assert_eq!(back, SparseVec::from_pairs([(0, int(3))]));
        assert!(l.check_structure().is_ok());
    }

    #[test]
    fn kac_dimensions() {
        assert_eq!(kac(2, 1).dim(), 96);
        assert_eq!(kac(0, 0).dim(), 16);
    }

    #[test]
    fn highest_vector_properties() {
        let k = kac(2, 1);
        let w = highest_vector();
        for g in [E12, E34, E13, E14, E23, E24] {
            assert!(k.act(g, &w).unwrap().is_zero(), "{g} w != 0");
        }
        assert_eq!(k.act(H1, &w).unwrap(), SparseVec::from_pairs([(0, int(2))]));
        let k11 = kac(1, 1);
        assert_eq!(k11.act(E32, &w).unwrap(), k11.kac_vector([0, 0, 0, 1], 0, 0).unwrap());
        let k10 = kac(1, 0);
        let e21w = k10.act(E21, &w).unwrap();
        assert!(k10.act(E21, &e21w).unwrap().is_zero());
    }

    #[test]
    fn structure_small() {
        let k = kac(0, 0);
        assert_eq!(k.verify_structure().failures, vec![]);
        let k = build_kac(1, 2, &CentralCharges::sl(frac(1, 2))).unwrap();
        assert_eq!(k.verify_structure().failures, vec![]);
    }

    #[test]
    fn nonzero_k_charge_is_rejected() {
        let ch = CentralCharges::new(int(0), int(1), int(0));
        assert!(matches!(build_kac(1, 1, &ch), Err(Error::Parameter(_))));
    }

    #[test]
    fn weights_follow_label_formula() {
        let ix = KacIndexer { m: 2, n: 3 };
        for i in 0..ix.dim() {
            assert_eq!(ix.index(ix.decode(i).0, ix.decode(i).1, ix.decode(i).2), i);
        }
        assert_eq!(ix.weight(ix.index(0b1000, 0, 0)), Weight::new(1, 2));
    }
}
