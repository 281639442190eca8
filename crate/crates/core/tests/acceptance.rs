//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero on any unexpected failure. A criterion that fails in
//! exactly the documented way prints FAIL with the reason attached and does
//! not affect the exit code.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use psl22::algebra::twist_charges;
use psl22::analysis::invariants::multiplicity_dimension;
use psl22::analysis::prop33::{displayed_rows, matches_displayed};
use psl22::analysis::sn_tn::prop35_isomorphism;
use psl22::analysis::{
    build_s, build_t, certify, is_irreducible, prop33_linear_relations, psl_decomposition, restriction_multiplicities,
    verify_appendix_c, verify_prop36,
};
use psl22::classify::twist::bracket_defects;
use psl22::classify::{classify_sl2, derive_twist_map, twist_module};
use psl22::mz::appendix_b::FormulaSet;
use psl22::mz::{verify_appendix_a, verify_appendix_b, verify_projector, SuiteReport};
use psl22::rational::{frac, int};
use psl22::{build_kac, kac, CentralCharges, Rational, Result, Sl2, Weight};

enum Verdict {
    Pass(String),
    /// Fails exactly as documented; the reason is printed.
    Known(&'static str, String),
    Fail(String),
}

const APPENDIX_GRID: [(u32, u32); 7] = [(1, 1), (2, 2), (2, 3), (3, 2), (1, 3), (0, 2), (2, 0)];

type Outcome = Result<Verdict>;

use Verdict::{Fail, Known, Pass};

fn suite_summary(rep: &SuiteReport) -> String {
    match rep.failures().next() {
        None => format!("{} checks", rep.checked()),
        Some(f) => format!(
            "{} of {} failed, first {} on {} in {}",
            rep.failures().count(),
            rep.checked(),
            f.relation_id,
            f.vector_label,
            f.module
        ),
    }
}

fn c1_structure() -> Outcome {
    let mut checks = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            let r = kac(m, n).verify_structure();
            if !r.passed() {
                return Ok(Fail(format!("K({m},{n}): {:?}", r.failures.first())));
            }
            checks += r.pairs_checked;
        }
    }
    Ok(Pass(format!("16 modules, {checks} generator pairs")))
}

fn c2_dimensions() -> Outcome {
    for m in 0..=4u32 {
        for n in 0..=4u32 {
            let d = kac(m, n).dim();
            if d != 16 * (m as usize + 1) * (n as usize + 1) {
                return Ok(Fail(format!("dim K({m},{n}) = {d}")));
            }
        }
    }
    for n in 0..=3u32 {
        let k = kac(n, n);
        let (s, t) = (build_s(&k)?.dim(), build_t(&k)?.dim());
        let n = n as usize;
        if s != 8 * (n + 1) * (n + 2) || t != 8 * n * (n + 1) {
            return Ok(Fail(format!("n={n}: dim S = {s}, dim T = {t}")));
        }
    }
    Ok(Pass("K up to (4,4); S_n, T_n up to n = 3".into()))
}

fn displayed_restriction(m: i64, n: i64) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    let mut add = |a: i64, b: i64, c: usize| *out.entry(Weight { a, b }).or_insert(0) += c;
    add(m, n, 4);
    for (da, db) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        add(m + da, n + db, 2);
    }
    for (da, db) in [(2, 0), (0, 2), (-2, 0), (0, -2)] {
        add(m + da, n + db, 1);
    }
    out
}

fn c3_restriction() -> Outcome {
    for (m, n) in [(2, 2), (3, 2), (2, 3)] {
        let got = restriction_multiplicities(&kac(m, n))?;
        if got != displayed_restriction(m as i64, n as i64) {
            return Ok(Fail(format!("K({m},{n}): {got:?}")));
        }
    }
    for m in 0..=3 {
        for n in 0..=3 {
            let k = kac(m, n);
            let total: usize = restriction_multiplicities(&k)?
                .iter()
                .map(|(w, c)| c * (w.a as usize + 1) * (w.b as usize + 1))
                .sum();
            if total != k.dim() || multiplicity_dimension(&restriction_multiplicities(&k)?) != total {
                return Ok(Fail(format!("K({m},{n}): Σ = {total}")));
            }
        }
    }
    Ok(Pass("display at (2,2),(3,2),(2,3); sums on {0..3}²".into()))
}

fn c4_projector() -> Outcome {
    let (mut checks, mut skipped) = (0, 0);
    for m in 0..=3 {
        for n in 0..=3 {
            let rep = verify_projector(&kac(m, n))?;
            if !rep.passed() {
                return Ok(Fail(suite_summary(&rep)));
            }
            checks += rep.checked();
            skipped += rep.skipped;
        }
    }
    Ok(Pass(format!("{checks} checks, {skipped} singular projector evaluations skipped")))
}

fn c5_appendix_a() -> Outcome {
    let mut checks = 0;
    for p in [1, 3] {
        let ch = CentralCharges::new(int(0), int(0), int(p));
        for (m, n) in APPENDIX_GRID {
            let rep = verify_appendix_a(&build_kac(m, n, &ch)?)?;
            if !rep.passed() {
                return Ok(Fail(suite_summary(&rep)));
            }
            checks += rep.checked();
        }
    }
    Ok(Pass(format!("{checks} checks, P = 1 and P = 3")))
}

fn appendix_b(set: FormulaSet) -> Result<SuiteReport> {
    let mut all = SuiteReport::new("appendix-b");
    for p in [1, 3] {
        for (m, n) in APPENDIX_GRID {
            all.merge(verify_appendix_b(m, n, &int(p), set)?);
        }
    }
    Ok(all)
}

fn c6_appendix_b() -> Outcome {
    let printed = appendix_b(FormulaSet::Printed)?;
    let corrected = appendix_b(FormulaSet::Corrected)?;
    let detail = format!(
        "printed: {}; corrected: {}",
        suite_summary(&printed),
        if corrected.passed() { format!("all {} pass", corrected.checked()) } else { suite_summary(&corrected) }
    );
    Ok(match (printed.passed(), corrected.passed()) {
        (true, _) => Pass(detail),
        (false, true) => Known("printed action formulas with errata; the corrected table passes", detail),
        (false, false) => Fail(detail),
    })
}

fn c7_appendix_c() -> Outcome {
    let mut checks = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            let rep = verify_appendix_c(&kac(m, n))?;
            if !rep.passed() {
                return Ok(Fail(suite_summary(&rep)));
            }
            checks += rep.checked();
        }
    }
    let k11 = psl22::analysis::kplus_invariants(&kac(1, 1))?.dim();
    let k22 = psl22::analysis::kplus_invariants(&kac(2, 3))?.dim();
    if k11 != 14 || k22 != 16 {
        return Ok(Fail(format!("dim K⁺(1,1) = {k11}, dim K⁺(2,3) = {k22}")));
    }
    Ok(Pass(format!("all nine regimes on {{0..3}}², {checks} checks")))
}

fn c8_irreducibility() -> Outcome {
    let mut mismatches = Vec::new();
    for m in 0..=3 {
        for n in 0..=3 {
            if is_irreducible(&kac(m, n))? != (m != n) {
                mismatches.push((m, n));
            }
        }
    }
    for n in 0..=3 {
        let rep = verify_prop36(n)?;
        if !rep.passed() {
            return Ok(Fail(suite_summary(&rep)));
        }
    }
    let detail = format!("K(n,n) = S_n ⊕ T_n for n ≤ 3; irreducibility differs from m ≠ n at {mismatches:?}");
    Ok(match mismatches.as_slice() {
        [] => Pass("typical iff m ≠ n; K(n,n) = S_n ⊕ T_n for n ≤ 3".into()),
        // T_0 = 0, so K(0,0) = S_0 is irreducible
        [(0, 0)] => Known("K(0,0) = S_0 ⊕ T_0 with T_0 = 0 is irreducible", detail),
        _ => Fail(detail),
    })
}

fn c9_isomorphism() -> Outcome {
    let mut scales = Vec::new();
    for n in 1..=3 {
        let c = prop35_isomorphism(n)?;
        if !c.passed() {
            return Ok(Fail(format!("{c:?}")));
        }
        scales.push(psl22::rational::display_rational(&c.seed_scale.unwrap()));
    }
    Ok(Pass(format!("S_(n-1) ≅ T_n for n = 1..3, seed scales {}", scales.join(", "))))
}

fn c10_psl() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=2u32 {
        let d = psl_decomposition(n)?;
        let expected = 4 * n as usize * (n as usize + 2) + 2;
        let irreducible = certify(&d.quotient)?.irreducible;
        if d.quotient.dim() != expected || !irreducible || d.uplus_dim != 4 || !d.uplus_spanned_by_listed || !d.lplus_basis_ok {
            return Ok(Fail(format!("n={n}: {d:?}")));
        }
        if d.extra_dim > 0 {
            notes.push(format!("n={n}: K°/R has an extra {}-dim submodule", d.extra_dim));
        }
    }
    let mut detail = "dims 14, 34; U⁺ and L⁺ bases as listed".to_string();
    if !notes.is_empty() {
        detail = format!("{detail} ({})", notes.join("; "));
    }
    Ok(Pass(detail))
}

fn c11_sl() -> Outcome {
    let mut cases = 0;
    for m in 0..=2u32 {
        for n in 0..=2u32 {
            let (mi, ni) = (m as i64, n as i64);
            let mut twice_c: Vec<i64> = vec![mi - ni, ni - mi, mi + ni + 2, -(mi + ni + 2)];
            twice_c.retain(|x| *x != 0);
            twice_c.sort();
            twice_c.dedup();
            let mut values: Vec<Rational> = twice_c.iter().map(|x| frac(*x, 2)).collect();
            values.push(frac(1, 3));
            values.push(frac(2 * (mi + ni) + 7, 4));
            for c in values {
                let two_c = &c * int(2);
                let typical = ![int(mi - ni), int(ni - mi), int(mi + ni + 2), int(-(mi + ni + 2))].contains(&two_c);
                let k = build_kac(m, n, &CentralCharges::sl(c.clone()))?;
                if is_irreducible(&k)? != typical {
                    return Ok(Fail(format!("K({m},{n};{two_c}) typicality")));
                }
                let r = classify_sl2(m, n, &c)?;
                let (m, n) = (m as usize, n as usize);
                let expected = if typical {
                    16 * (m + 1) * (n + 1)
                } else if two_c == int(mi - ni) {
                    4 * (m * (n + 1) + (m + 1) * n)
                } else if two_c == int(ni - mi) {
                    4 * ((m + 1) * (n + 2) + (m + 2) * (n + 1))
                } else if two_c == int(-(mi + ni + 2)) {
                    4 * ((m + 2) * (n + 1) + (m + 1) * n)
                } else {
                    4 * ((m + 1) * (n + 2) + m * (n + 1))
                };
                if r.dimension != Some(expected) || r.irreducible != Some(true) {
                    return Ok(Fail(format!("({m},{n}), 2c = {two_c}: {r}")));
                }
                cases += 1;
            }
        }
    }
    Ok(Pass(format!("{cases} (m, n, c) cases")))
}

fn random_sl2(rng: &mut ChaCha8Rng) -> Sl2 {
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let x = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if !x.is_zero() {
            return x;
        }
    };
    let u = nonzero(rng);
    let v = nonzero(rng);
    let w = nonzero(rng);
    // uz - vw = 1
    let z = (Rational::one() + &v * &w) / &u;
    Sl2::new(u, v, w, z).expect("determinant one")
}

fn c12_twisting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mixed = CentralCharges::new(frac(1, 2), int(0), int(-3));
    let base = [(kac(1, 0), CentralCharges::standard()), (build_kac(0, 1, &mixed)?, mixed)];
    for i in 0..5 {
        let g = random_sl2(&mut rng);
        let phi = derive_twist_map(&g)?;
        let defects = bracket_defects(&phi);
        if !defects.is_empty() {
            return Ok(Fail(format!("{g}: {} pairs fail", defects.len())));
        }
        let (module, ch) = &base[i % base.len()];
        let twisted = twist_module(module, &g)?;
        let conj = twist_charges(ch, &g);
        if twisted.charges != conj || conj.discriminant() != ch.discriminant() || !twisted.verify_structure().passed() {
            return Ok(Fail(format!("{g}: twisted charges {}", twisted.charges)));
        }
    }
    Ok(Pass("5 seeded SL(2, ℚ) elements, all 17² pairs".into()))
}

fn c13_prop33() -> Outcome {
    let r = prop33_linear_relations(3, 2)?;
    let shown = displayed_rows(3, 2);
    // oracle at (3,2): ((m-n)/2, (m+n+2)/(2(n+1))) and (-(m-n)/(2(n+2)), n(m+n+2)/(2(n+1)))
    let expected = [[frac(1, 2), frac(7, 6)], [frac(-1, 8), frac(7, 3)]];
    if r.z23_row != expected[0] || r.z24_row != expected[1] || shown != expected || !matches_displayed(&r) {
        return Ok(Fail(format!("rows {:?}, {:?}", r.z23_row, r.z24_row)));
    }
    for m in 2..=4 {
        for n in 2..=4 {
            if prop33_linear_relations(m, n)?.is_singular() != (m == n) {
                return Ok(Fail(format!("singularity wrong at ({m},{n})")));
            }
        }
    }
    Ok(Pass("rows at (3,2) exact; singular iff m = n on {2..4}²".into()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 13] = [
        (1, "structure", c1_structure),
        (2, "dimensions", c2_dimensions),
        (3, "restriction", c3_restriction),
        (4, "projector", c4_projector),
        (5, "appendix-a", c5_appendix_a),
        (6, "appendix-b", c6_appendix_b),
        (7, "appendix-c", c7_appendix_c),
        (8, "irreducibility", c8_irreducibility),
        (9, "isomorphism", c9_isomorphism),
        (10, "psl", c10_psl),
        (11, "sl", c11_sl),
        (12, "twisting", c12_twisting),
        (13, "linear-relations", c13_prop33),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let verdict = run().unwrap_or_else(|e| Fail(format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Pass(detail) => println!("PASS {id:>2} {name}: {detail} [{secs:.1}s]"),
            Known(why, detail) => println!("FAIL {id:>2} {name} (known: {why}): {detail} [{secs:.1}s]"),
            Fail(detail) => {
                unexpected += 1;
                println!("FAIL {id:>2} {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
