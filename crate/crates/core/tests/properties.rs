use num_traits::Zero;
use proptest::prelude::*;

use psl22::algebra::{parity_sign, supercommutator, twist_charges};
use psl22::analysis::{hom_space, is_irreducible, restriction_multiplicities};
use psl22::classify::twist::{compose, is_identity};
use psl22::classify::{classify_sl2, derive_twist_map, sl_atypicality};
use psl22::error::Error;
use psl22::export::{from_json_str, to_json_string};
use psl22::module::generator_shift;
use psl22::mz::extremal_projector;
use psl22::rational::{frac, int};
use psl22::{build_kac, kac, CentralCharges, GeneratorId, LieElement, Rational, Sl2, SparseVec};

fn generator() -> impl Strategy<Value = GeneratorId> {
    (0..GeneratorId::ALL.len()).prop_map(|i| GeneratorId::ALL[i])
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn sl2() -> impl Strategy<Value = Sl2> {
    (nonzero_rational(), small_rational(), small_rational()).prop_map(|(u, v, w)| {
        let z = (int(1) + &v * &w) / &u;
        Sl2::new(u, v, w, z).unwrap()
    })
}

/// Charges with `k = 0`, which every Kac module accepts.
fn kac_charges() -> impl Strategy<Value = CentralCharges> {
    (small_rational(), small_rational()).prop_map(|(c, p)| CentralCharges::new(c, int(0), p))
}

fn element() -> impl Strategy<Value = LieElement> {
    prop::collection::vec((generator(), small_rational()), 0..4).prop_map(|terms| {
        let mut e = LieElement::zero();
        for (g, c) in terms {
            e.add_term(g, &c);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_super_antisymmetric(x in generator(), y in generator()) {
        let sign = int(-parity_sign(x, y));
        prop_assert_eq!(supercommutator(x, y), supercommutator(y, x).scaled(&sign));
    }

    #[test]
    fn super_jacobi(x in generator(), y in generator(), z in generator()) {
        let (gx, gy, gz) = (LieElement::gen(x), LieElement::gen(y), LieElement::gen(z));
        let lhs = gx.bracket(&gy.bracket(&gz));
        let rhs = &gx.bracket(&gy).bracket(&gz) + &gy.bracket(&gx.bracket(&gz)).scaled(&int(parity_sign(x, y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_bilinear(a in element(), b in element(), c in element(), t in small_rational()) {
        let lhs = (&a + &b.scaled(&t)).bracket(&c);
        let rhs = &a.bracket(&c) + &b.bracket(&c).scaled(&t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_shift_weights(m in 0u32..=2, n in 0u32..=2, g in generator(), seed in any::<usize>()) {
        let k = kac(m, n);
        let i = seed % k.dim();
        let image = k.act(g, &SparseVec::unit(i)).unwrap();
        let (da, db) = generator_shift(g);
        let expected = k.weight_of_index(i).shift(da, db);
        for (j, _) in image.iter() {
            prop_assert_eq!(k.weight_of_index(j), expected);
        }
    }

    #[test]
    fn twisting_preserves_discriminant(ch in kac_charges(), g in sl2()) {
        prop_assert_eq!(twist_charges(&ch, &g).discriminant(), ch.discriminant());
    }

    #[test]
    fn twist_by_inverse_is_identity(g in sl2()) {
        let a = derive_twist_map(&g).unwrap();
        let b = derive_twist_map(&g.inverse()).unwrap();
        prop_assert!(is_identity(&compose(&a, &b)));
        prop_assert!(is_identity(&compose(&b, &a)));
    }

    #[test]
    fn projector_is_idempotent(m in 0u32..=2, n in 0u32..=2, coeffs in prop::collection::vec(small_rational(), 1..6), seed in any::<usize>()) {
        let k = kac(m, n);
        let v = SparseVec::from_pairs(coeffs.into_iter().enumerate().map(|(j, c)| ((seed + 7 * j) % k.dim(), c)));
        match extremal_projector(&k, &v) {
            Err(Error::WeightSingularity { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
            Ok(pv) => {
                prop_assert!(k.is_kplus_invariant(&pv).unwrap());
                if let Ok(ppv) = extremal_projector(&k, &pv) {
                    prop_assert_eq!(ppv, pv);
                }
            }
        }
    }

    #[test]
    fn export_round_trip(m in 0u32..=2, n in 0u32..=1, ch in kac_charges()) {
        let k = build_kac(m, n, &ch).unwrap();
        let s = to_json_string(&k).unwrap();
        let back = from_json_str(&s).unwrap();
        prop_assert_eq!(&back.charges, &ch);
        prop_assert_eq!(to_json_string(&back).unwrap(), s);
    }

    #[test]
    fn sl_typicality_matches_irreducibility(m in 0u32..=1, n in 0u32..=1, c in nonzero_rational()) {
        let k = build_kac(m, n, &CentralCharges::sl(c.clone())).unwrap();
        let atypical = sl_atypicality(m, n, &c).is_some();
        prop_assert_eq!(is_irreducible(&k).unwrap(), !atypical);
        prop_assert!(classify_sl2(m, n, &c).unwrap().is_consistent());
    }
}

#[test]
fn restriction_accounts_for_every_vector() {
    for m in 0..=3 {
        for n in 0..=3 {
            let k = kac(m, n);
            let total: usize = restriction_multiplicities(&k).unwrap().iter().map(|(w, c)| c * w.l0_dim()).sum();
            assert_eq!(total, k.dim(), "K({m},{n})");
        }
    }
}

#[test]
fn typical_kac_modules_have_scalar_endomorphisms() {
    for (m, n) in [(1, 0), (0, 1), (2, 1), (1, 2)] {
        let k = kac(m, n);
        assert!(is_irreducible(&k).unwrap());
        let h = hom_space(&k, &k).unwrap();
        assert_eq!(h.dim(), 1, "K({m},{n})");
        assert!(h.has_invertible_representative());
    }
}

#[test]
fn distinct_typical_weights_are_not_isomorphic() {
    let mods = [kac(1, 0), kac(0, 1), kac(2, 0), kac(0, 2)];
    for (i, a) in mods.iter().enumerate() {
        for (j, b) in mods.iter().enumerate() {
            if i != j {
                assert_eq!(hom_space(a, b).unwrap().dim(), 0, "{} -> {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn atypical_diagonal_has_two_endomorphisms() {
    // K(n,n) = S_n ⊕ T_n with S_n ≇ T_n
    assert_eq!(hom_space(&kac(1, 1), &kac(1, 1)).unwrap().dim(), 2);
}
