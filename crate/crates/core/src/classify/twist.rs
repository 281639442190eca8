//! SL(2) automorphisms of the algebra and twisted modules.
//!
//! The automorphism is prescribed on `E13` and `E42` and fixes the even
//! sl(2) ⊕ sl(2) pointwise. Every other odd generator is reached from one of
//! these two by brackets with `E12, E21, E34, E43`, so equivariance pins its
//! image down; the central elements and `H2` follow from odd brackets.
//! The result is checked on all pairs of generators.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{supercommutator, twist_charges, GeneratorId, LieElement, Sl2};
use crate::algebra::GeneratorId::*;
use crate::error::{Error, Result};
use crate::module::ModuleRep;

pub type AlgebraMap = BTreeMap<GeneratorId, LieElement>;

const EVEN_ROOTS: [GeneratorId; 4] = [E12, E21, E34, E43];

fn lin(terms: &[(GeneratorId, &crate::rational::Rational)]) -> LieElement {
    let mut e = LieElement::zero();
    for (g, c) in terms {
        e.add_term(*g, c);
    }
    e
}

/// Applies a generator map linearly.
pub fn apply_map(phi: &AlgebraMap, x: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (g, c) in x.iter() {
        let img = phi.get(&g).cloned().unwrap_or_else(|| LieElement::gen(g));
        out = &out + &img.scaled(c);
    }
    out
}

/// Pairs `(x, y)` with `φ([x, y]) ≠ [φ(x), φ(y)]`.
pub fn bracket_defects(phi: &AlgebraMap) -> Vec<(GeneratorId, GeneratorId)> {
    let mut bad = Vec::new();
    for x in GeneratorId::ALL {
        for y in GeneratorId::ALL {
            let lhs = apply_map(phi, &supercommutator(x, y));
            let rhs = apply_map(phi, &LieElement::gen(x)).bracket(&apply_map(phi, &LieElement::gen(y)));
            if lhs != rhs {
                bad.push((x, y));
            }
        }
    }
    bad
}

/// The automorphism with `E13 ↦ uE13 + vE42`, `E42 ↦ wE13 + zE42`.
pub fn derive_twist_map(g: &Sl2) -> Result<AlgebraMap> {
    let mut phi: AlgebraMap = BTreeMap::new();
    for x in [E12, E21, E34, E43, H1, H3] {
        phi.insert(x, LieElement::gen(x));
    }
    phi.insert(E13, lin(&[(E13, &g.u), (E42, &g.v)]));
    phi.insert(E42, lin(&[(E13, &g.w), (E42, &g.z)]));

    // propagate along [k, x] = c·y
    let mut frontier = vec![E13, E42];
    while let Some(x) = frontier.pop() {
        for k in EVEN_ROOTS {
            let br = supercommutator(k, x);
            if br.len() != 1 {
                continue;
            }
            let (y, c) = br.iter().next().map(|(y, c)| (y, c.clone())).expect("one term");
            if phi.contains_key(&y) || !y.is_odd() {
                continue;
            }
            let img = phi[&k].bracket(&phi[&x]).scaled(&(crate::rational::one() / c));
            phi.insert(y, img);
            frontier.push(y);
        }
    }
    if let Some(missing) = GeneratorId::ODD.iter().find(|x| !phi.contains_key(x)) {
        return Err(Error::NoExtension(format!("{missing} is not reached from E13, E42")));
    }

    let image = |a: GeneratorId, phi: &AlgebraMap| phi[&a].clone();
    phi.insert(K, image(E13, &phi).bracket(&image(E24, &phi)));
    phi.insert(P, image(E31, &phi).bracket(&image(E42, &phi)));
    // [E13, E31] = H1 + H2
    let h2 = &image(E13, &phi).bracket(&image(E31, &phi)) - &LieElement::gen(H1);
    phi.insert(H2, h2);

    let defects = bracket_defects(&phi);
    if let Some((x, y)) = defects.first() {
        return Err(Error::NoExtension(format!(
            "bracket [{x}, {y}] not preserved ({} pairs fail)",
            defects.len()
        )));
    }
    Ok(phi)
}

/// `φ₁ ∘ φ₂`.
pub fn compose(phi1: &AlgebraMap, phi2: &AlgebraMap) -> AlgebraMap {
    GeneratorId::ALL
        .iter()
        .map(|&g| (g, apply_map(phi1, &apply_map(phi2, &LieElement::gen(g)))))
        .collect()
}

pub fn is_identity(phi: &AlgebraMap) -> bool {
    GeneratorId::ALL
        .iter()
        .all(|&g| apply_map(phi, &LieElement::gen(g)) == LieElement::gen(g))
}

/// `ρ' = ρ ∘ φ`, with the charges transformed accordingly.
pub fn twist_module(module: &ModuleRep, g: &Sl2) -> Result<ModuleRep> {
    let phi = derive_twist_map(g)?;
    let charges = twist_charges(&module.charges, g);
    let name = if g.is_identity() { module.name.clone() } else { format!("{}^{g}", module.name) };
    let out = module.with_action(name, charges.clone(), |x| phi.get(&x).cloned())?;
    let c = out.element_matrix(&LieElement::c_combination())?;
    let consistent = c == crate::linalg::SparseMatrix::scalar(out.dim(), &charges.c)
        && out.acts_as_scalar(K, &charges.k)
        && out.acts_as_scalar(P, &charges.p);
    if !consistent && !out.dim().is_zero() {
        return Err(Error::Internal(format!("twisted charges of {} differ from {charges}", module.name)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CentralCharges;
    use crate::kac::kac;
    use crate::rational::{frac, int};

    #[test]
    fn identity_parameters_give_the_identity() {
        assert!(is_identity(&derive_twist_map(&Sl2::identity()).unwrap()));
    }

    #[test]
    fn inverse_parameters_compose_to_identity() {
        let g = Sl2::new(int(2), frac(1, 3), int(3), int(1)).unwrap();
        let a = derive_twist_map(&g).unwrap();
        let b = derive_twist_map(&g.inverse()).unwrap();
        assert!(is_identity(&compose(&a, &b)));
        assert_eq!(a[&E13], lin(&[(E13, &int(2)), (E42, &frac(1, 3))]));
    }

    #[test]
    fn twisted_kac_module() {
        let k = kac(1, 0);
        let g = Sl2::new(int(1), int(1), int(0), int(1)).unwrap();
        let t = twist_module(&k, &g).unwrap();
        assert_eq!(t.charges, CentralCharges::new(int(1), int(1), int(1)));
        assert!(t.verify_structure().passed());
        let same = twist_module(&k, &Sl2::identity()).unwrap();
        for (x, m) in k.matrices() {
            assert_eq!(same.matrix(x).unwrap(), m);
        }
    }
}
