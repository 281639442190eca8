//! Intertwiner spaces `Hom_𝔤(A, B)`.
//!
//! A homomorphism is determined by its restriction `A⁺ → B⁺`, a weight
//! preserving map, and is recovered on all of `A` from the basis
//! `E21^p E43^q a` (a ∈ A⁺) adapted to the sl(2) ⊕ sl(2) decomposition.
//! Since the set of vectors on which a 𝔨-equivariant map commutes with
//! `𝔤` is a 𝔨-submodule, it is enough to impose `T(x a) = x T(a)` for the
//! generators `x` and `a` in a basis of `A⁺`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::GeneratorId::{self, E21, E43};
use crate::analysis::invariants::kplus_invariants;
use crate::error::{Error, Result};
use crate::linalg::{invert_dense, EchelonBasis, SparseMatrix, SparseVec};
use crate::module::{ModuleRep, Weight};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: String,
    pub target: String,
    /// `dim B × dim A` matrices.
    pub maps: Vec<SparseMatrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Whether the first basis map is invertible.
    pub fn has_invertible_representative(&self) -> bool {
        self.maps
            .first()
            .is_some_and(|m| m.nrows() == m.ncols() && m.rank() == m.ncols())
    }
}

/// Adapted basis of a module: for every weight, the vectors
/// `E21^p E43^q a` of that weight, and the inverse of the square matrix
/// they form inside the weight space.
struct Adapted {
    /// Per weight: (basis indices of the weight space, generating data of
    /// each adapted vector `(p, q, j)`, inverse matrix).
    blocks: BTreeMap<Weight, (Vec<usize>, Vec<(u32, u32, usize)>, Vec<Vec<Rational>>)>,
}

impl Adapted {
    fn new(module: &ModuleRep, plus: &[SparseVec], plus_weights: &[Weight]) -> Result<Self> {
        let mut vectors: BTreeMap<Weight, Vec<((u32, u32, usize), SparseVec)>> = BTreeMap::new();
        for (j, (a, w)) in plus.iter().zip(plus_weights).enumerate() {
            if w.a < 0 || w.b < 0 {
                return Err(Error::Internal(format!("invariant of non-dominant weight {w}")));
            }
            let mut vp = a.clone();
            for p in 0..=w.a as u32 {
                let mut vq = vp.clone();
                for q in 0..=w.b as u32 {
                    vectors.entry(w.shift(-2 * p as i64, -2 * q as i64)).or_default().push(((p, q, j), vq.clone()));
                    vq = module.act(E43, &vq)?;
                }
                vp = module.act(E21, &vp)?;
            }
        }
        let spaces = module.weight_spaces();
        let mut blocks = BTreeMap::new();
        for (wt, idx) in spaces {
            let vs = vectors.remove(&wt).unwrap_or_default();
            if vs.len() != idx.len() {
                return Err(Error::Internal(format!(
                    "adapted basis has {} vectors at weight {wt}, weight space has dimension {}",
                    vs.len(),
                    idx.len()
                )));
            }
            let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let n = idx.len();
            let mut mat = vec![vec![Rational::zero(); n]; n];
            for (c, (_, v)) in vs.iter().enumerate() {
                for (i, x) in v.iter() {
                    mat[pos[&i]][c] = x.clone();
                }
            }
            let inv = invert_dense(&mat)
                .ok_or_else(|| Error::Internal(format!("adapted vectors at weight {wt} are dependent")))?;
            blocks.insert(wt, (idx, vs.into_iter().map(|(t, _)| t).collect(), inv));
        }
        Ok(Self { blocks })
    }

    /// Adapted coordinates `(p, q, j) ↦ c` of an arbitrary vector.
    fn coordinates(&self, module: &ModuleRep, v: &SparseVec) -> Vec<((u32, u32, usize), Rational)> {
        let mut out = Vec::new();
        for (wt, comp) in module.weight_components(v) {
            let (idx, tags, inv) = &self.blocks[&wt];
            let local: Vec<Rational> = idx.iter().map(|&i| comp.get(i)).collect();
            for (r, tag) in tags.iter().enumerate() {
                let c: Rational = inv[r].iter().zip(&local).map(|(a, b)| a * b).sum();
                if !c.is_zero() {
                    out.push((*tag, c));
                }
            }
        }
        out
    }
}

/// Basis of `Hom_𝔤(A, B)`.
pub fn hom_space(a: &ModuleRep, b: &ModuleRep) -> Result<HomBasis> {
    let ap = kplus_invariants(a)?;
    let bp = kplus_invariants(b)?;
    let adapted = Adapted::new(a, &ap.vectors, &ap.weights)?;

    // unknown (i, j): coefficient of b⁺_i in T(a⁺_j), same weight only
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for (wt, js) in &ap.by_weight {
        if let Some(is) = bp.by_weight.get(wt) {
            for &j in js {
                for &i in is {
                    unknowns.push((i, j));
                }
            }
        }
    }
    let out = |maps| HomBasis { source: a.name.clone(), target: b.name.clone(), maps };
    if unknowns.is_empty() {
        return Ok(out(Vec::new()));
    }
    let by_source: BTreeMap<usize, Vec<(usize, usize)>> = unknowns.iter().enumerate().fold(
        BTreeMap::new(),
        |mut acc, (u, &(i, j))| {
            acc.entry(j).or_insert_with(Vec::new).push((u, i));
            acc
        },
    );

    // E21^p E43^q b⁺_i, cached
    let mut lifts: HashMap<(u32, u32, usize), SparseVec> = HashMap::new();
    let mut lift = |p: u32, q: u32, i: usize| -> Result<SparseVec> {
        if let Some(v) = lifts.get(&(p, q, i)) {
            return Ok(v.clone());
        }
        let mut v = bp.vectors[i].clone();
        for _ in 0..q {
            v = b.act(E43, &v)?;
        }
        for _ in 0..p {
            v = b.act(E21, &v)?;
        }
        lifts.insert((p, q, i), v.clone());
        Ok(v)
    };

    // T(v) as a map unknown ↦ vector in B
    let mut image_of = |v: &SparseVec| -> Result<BTreeMap<usize, SparseVec>> {
        let mut res: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for ((p, q, j), c) in adapted.coordinates(a, v) {
            for &(u, i) in by_source.get(&j).map(Vec::as_slice).unwrap_or(&[]) {
                res.entry(u).or_default().axpy(&c, &lift(p, q, i)?);
            }
        }
        Ok(res)
    };

    let gens: Vec<GeneratorId> = a.generators().into_iter().filter(|g| b.has(*g)).collect();
    let mut system = EchelonBasis::new();
    for (j, aj) in ap.vectors.iter().enumerate() {
        for &x in &gens {
            // T(x a_j) - x T(a_j), one linear form per coordinate of B
            let mut forms: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for (u, v) in image_of(&a.act(x, aj)?)? {
                for (r, c) in v.iter() {
                    forms.entry(r).or_default().add_at(u, c);
                }
            }
            for &(u, i) in by_source.get(&j).map(Vec::as_slice).unwrap_or(&[]) {
                let xb = b.act(x, &bp.vectors[i])?;
                for (r, c) in xb.iter() {
                    forms.entry(r).or_default().add_at(u, &-c.clone());
                }
            }
            for f in forms.into_values() {
                if !f.is_zero() {
                    system.insert(f);
                }
            }
        }
    }

    let mut maps = Vec::new();
    for sol in system.nullspace(unknowns.len()) {
        let mut cols = Vec::with_capacity(a.dim());
        for k in 0..a.dim() {
            let mut col = SparseVec::new();
            for (u, v) in image_of(&SparseVec::unit(k))? {
                let c = sol.get(u);
                if !c.is_zero() {
                    col.axpy(&c, &v);
                }
            }
            cols.push(col);
        }
        let t = SparseMatrix::from_columns(b.dim(), cols);
        for (g, ma) in a.matrices() {
            if let Some(mb) = b.matrix(g) {
                if t.mul(ma) != mb.mul(&t) {
                    return Err(Error::Internal(format!("intertwiner fails to commute with {g}")));
                }
            }
        }
        maps.push(t);
    }
    Ok(out(maps))
}
