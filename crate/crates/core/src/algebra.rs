//! The superalgebra psl(2|2) ⋉ ℂ³ by structure constants.
//!
//! Generators are the off-diagonal matrix units `E_ij` of gl(2|2), the
//! Cartan elements `H1 = E11 - E22`, `H2 = E22 + E33`, `H3 = E33 - E44`,
//! and the central `K`, `P`. The third central element
//! `C = H1/2 + H2 - H3/2` is a combination, not a basis element.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{display_rational, frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorId {
    E12,
    E21,
    E34,
    E43,
    E13,
    E14,
    E23,
    E24,
    E31,
    E32,
    E41,
    E42,
    H1,
    H2,
    H3,
    K,
    P,
}

use GeneratorId::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 17] = [
        E12, E21, E34, E43, E13, E14, E23, E24, E31, E32, E41, E42, H1, H2, H3, K, P,
    ];

    /// The eight odd generators, raising ones first.
    pub const ODD: [GeneratorId; 8] = [E13, E14, E23, E24, E31, E32, E41, E42];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<GeneratorId> {
        Self::ALL.get(i).copied()
    }

    /// Matrix indices `(i, j)` (1-based) of an `E_ij` generator.
    pub fn indices(self) -> Option<(usize, usize)> {
        Some(match self {
            E12 => (1, 2),
            E21 => (2, 1),
            E34 => (3, 4),
            E43 => (4, 3),
            E13 => (1, 3),
            E14 => (1, 4),
            E23 => (2, 3),
            E24 => (2, 4),
            E31 => (3, 1),
            E32 => (3, 2),
            E41 => (4, 1),
            E42 => (4, 2),
            _ => return None,
        })
    }

    pub fn from_indices(i: usize, j: usize) -> Option<GeneratorId> {
        Self::ALL.iter().copied().find(|g| g.indices() == Some((i, j)))
    }

    pub fn parity(self) -> Parity {
        match self.indices() {
            Some((i, j)) if grade(i) != grade(j) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() == Parity::Odd
    }

    pub fn is_central(self) -> bool {
        matches!(self, K | P)
    }

    pub fn name(self) -> &'static str {
        match self {
            E12 => "E12",
            E21 => "E21",
            E34 => "E34",
            E43 => "E43",
            E13 => "E13",
            E14 => "E14",
            E23 => "E23",
            E24 => "E24",
            E31 => "E31",
            E32 => "E32",
            E41 => "E41",
            E42 => "E42",
            H1 => "H1",
            H2 => "H2",
            H3 => "H3",
            K => "K",
            P => "P",
        }
    }

    /// Diagonal entries of a Cartan generator as a gl(2|2) matrix.
    fn diagonal(self) -> Option<[i64; 4]> {
        match self {
            H1 => Some([1, -1, 0, 0]),
            H2 => Some([0, 1, 1, 0]),
            H3 => Some([0, 0, 1, -1]),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// `0` for indices 1, 2 and `1` for indices 3, 4.
fn grade(i: usize) -> usize {
    usize::from(i > 2)
}

/// `-1` when both arguments are odd, else `1`.
pub fn parity_sign(x: GeneratorId, y: GeneratorId) -> i64 {
    if x.is_odd() && y.is_odd() {
        -1
    } else {
        1
    }
}

/// ε and ε̄ of the central extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonTables {
    pub eps: [[i64; 4]; 4],
    pub eps_bar: [[i64; 4]; 4],
}

impl EpsilonTables {
    pub fn standard() -> Self {
        let mut eps = [[0; 4]; 4];
        let mut eps_bar = [[0; 4]; 4];
        eps[0][1] = 1;
        eps[1][0] = -1;
        eps_bar[2][3] = 1;
        eps_bar[3][2] = -1;
        Self { eps, eps_bar }
    }

    /// 1-based lookup.
    pub fn e(&self, i: usize, j: usize) -> i64 {
        self.eps[i - 1][j - 1]
    }

    pub fn ebar(&self, i: usize, j: usize) -> i64 {
        self.eps_bar[i - 1][j - 1]
    }
}

/// Finite linear combination of generators; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<GeneratorId, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(g: GeneratorId) -> Self {
        Self::term(g, Rational::one())
    }

    pub fn term(g: GeneratorId, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(g, &c);
        e
    }

    /// The central element `C = H1/2 + H2 - H3/2`.
    pub fn c_combination() -> Self {
        let mut e = Self::zero();
        e.add_term(H1, &frac(1, 2));
        e.add_term(H2, &int(1));
        e.add_term(H3, &frac(-1, 2));
        e
    }

    /// `Σ a_i E_ii` with vanishing supertrace, rewritten in the H basis.
    fn from_diagonal(a: &[Rational; 4]) -> Self {
        debug_assert!((&a[0] + &a[1] - &a[2] - &a[3]).is_zero(), "supertrace must vanish");
        let mut e = Self::zero();
        e.add_term(H1, &a[0]);
        e.add_term(H2, &(&a[0] + &a[1]));
        e.add_term(H3, &-a[3].clone());
        e
    }

    pub fn add_term(&mut self, g: GeneratorId, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn coeff(&self, g: GeneratorId) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorId, &Rational)> + '_ {
        self.terms.iter().map(|(&g, c)| (g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (g, x) in self.iter() {
            out.add_term(g, &(x * c));
        }
        out
    }

    /// Parity of a homogeneous element; `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|g| g.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Super bracket extended bilinearly.
    pub fn bracket(&self, other: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (x, a) in self.iter() {
            for (y, b) in other.iter() {
                let ab = a * b;
                for (g, c) in supercommutator(x, y).iter() {
                    out.add_term(g, &(c * &ab));
                }
            }
        }
        out
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, o: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in o.iter() {
            out.add_term(g, c);
        }
        out
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        self + &(-o)
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scaled(&-Rational::one())
    }
}

impl Mul<&LieElement> for &Rational {
    type Output = LieElement;
    fn mul(self, e: &LieElement) -> LieElement {
        e.scaled(self)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(g, c)| {
                if c.is_one() {
                    g.to_string()
                } else {
                    format!("{}*{}", display_rational(c), g)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[x, y]` for basis generators.
pub fn supercommutator(x: GeneratorId, y: GeneratorId) -> LieElement {
    if x.is_central() || y.is_central() {
        return LieElement::zero();
    }
    match (x.indices(), y.indices()) {
        (Some((i, j)), Some((k, l))) => bracket_units(i, j, k, l),
        (None, None) => LieElement::zero(),
        // [D, E_kl] = (d_k - d_l) E_kl for diagonal D
        (None, Some((k, l))) => {
            let d = x.diagonal().expect("Cartan generator");
            LieElement::term(y, int(d[k - 1] - d[l - 1]))
        }
        (Some((i, j)), None) => {
            let d = y.diagonal().expect("Cartan generator");
            LieElement::term(x, int(d[j - 1] - d[i - 1]))
        }
    }
}

fn bracket_units(i: usize, j: usize, k: usize, l: usize) -> LieElement {
    let eps = EpsilonTables::standard();
    let mut diag: [Rational; 4] = Default::default();
    let mut out = LieElement::zero();
    let mut push = |a: usize, b: usize, c: i64| {
        if a == b {
            diag[a - 1] += int(c);
        } else {
            let g = GeneratorId::from_indices(a, b).expect("off-diagonal unit");
            out.add_term(g, &int(c));
        }
    };
    if k == j {
        push(i, l, 1);
    }
    if i == l {
        let s = if (grade(i) + grade(j)) * (grade(k) + grade(l)) % 2 == 1 { -1 } else { 1 };
        push(k, j, -s);
    }
    out = &out + &LieElement::from_diagonal(&diag);
    out.add_term(P, &int(eps.ebar(i, k) * eps.e(j, l)));
    out.add_term(K, &int(eps.e(i, k) * eps.ebar(j, l)));
    out
}

/// Eigenvalues of `C`, `K`, `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralCharges {
    pub c: Rational,
    pub k: Rational,
    pub p: Rational,
}

impl CentralCharges {
    pub fn new(c: Rational, k: Rational, p: Rational) -> Self {
        Self { c, k, p }
    }

    /// `(0, 0, 1)`, the normalization used for Kac modules of the full algebra.
    pub fn standard() -> Self {
        Self::new(int(0), int(0), int(1))
    }

    pub fn zero() -> Self {
        Self::new(int(0), int(0), int(0))
    }

    pub fn sl(c: Rational) -> Self {
        Self::new(c, int(0), int(0))
    }

    /// `c² - kp`, the invariant of the charge matrix under conjugation.
    pub fn discriminant(&self) -> Rational {
        &self.c * &self.c - &self.k * &self.p
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.k.is_zero() && self.p.is_zero()
    }
}

impl fmt::Display for CentralCharges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            display_rational(&self.c),
            display_rational(&self.k),
            display_rational(&self.p)
        )
    }
}

pub type Mat2 = [[Rational; 2]; 2];

/// `[[c, -k], [p, -c]]`
pub fn charge_matrix(ch: &CentralCharges) -> Mat2 {
    [
        [ch.c.clone(), -ch.k.clone()],
        [ch.p.clone(), -ch.c.clone()],
    ]
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// An element `[[u, v], [w, z]]` of SL(2) over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sl2 {
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
    pub z: Rational,
}

impl Sl2 {
    pub fn new(u: Rational, v: Rational, w: Rational, z: Rational) -> Result<Self> {
        let det = &u * &z - &v * &w;
        if !det.is_one() {
            return Err(Error::Determinant(display_rational(&det)));
        }
        Ok(Self { u, v, w, z })
    }

    pub fn identity() -> Self {
        Self { u: int(1), v: int(0), w: int(0), z: int(1) }
    }

    pub fn inverse(&self) -> Self {
        Self {
            u: self.z.clone(),
            v: -self.v.clone(),
            w: -self.w.clone(),
            z: self.u.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn matrix(&self) -> Mat2 {
        [
            [self.u.clone(), self.v.clone()],
            [self.w.clone(), self.z.clone()],
        ]
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            display_rational(&self.u),
            display_rational(&self.v),
            display_rational(&self.w),
            display_rational(&self.z)
        )
    }
}

/// Charges after twisting by `g`: read off `g M g⁻¹`.
pub fn twist_charges(ch: &CentralCharges, g: &Sl2) -> CentralCharges {
    let m = mat2_mul(&mat2_mul(&g.matrix(), &charge_matrix(ch)), &g.inverse().matrix());
    debug_assert_eq!(m[0][0], -m[1][1].clone());
    CentralCharges::new(m[0][0].clone(), -m[0][1].clone(), m[1][0].clone())
}

/// Convenience form of [`twist_charges`] that validates the determinant.
pub fn twist_charges_checked(
    ch: &CentralCharges,
    u: Rational,
    v: Rational,
    w: Rational,
    z: Rational,
) -> Result<CentralCharges> {
    Ok(twist_charges(ch, &Sl2::new(u, v, w, z)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(x: GeneratorId, y: GeneratorId) -> LieElement {
        supercommutator(x, y)
    }

    #[test]
    fn parities() {
        assert_eq!(E12.parity(), Parity::Even);
        assert_eq!(E13.parity(), Parity::Odd);
        assert_eq!(P.parity(), Parity::Even);
        assert_eq!(GeneratorId::ALL.iter().filter(|g| g.is_odd()).count(), 8);
    }

    #[test]
    fn central_brackets() {
        assert_eq!(br(E13, E24), LieElement::gen(K));
        assert_eq!(br(E23, E14), -&LieElement::gen(K));
        assert_eq!(br(E31, E42), LieElement::gen(P));
        assert_eq!(br(E32, E41), -&LieElement::gen(P));
    }

    #[test]
    fn even_and_diagonal_brackets() {
        assert_eq!(br(E12, E21), LieElement::gen(H1));
        assert_eq!(br(E34, E43), LieElement::gen(H3));
        assert_eq!(br(E41, E41), LieElement::zero());
        // E11 + E33 = H1 + H2
        assert_eq!(br(E13, E31), &LieElement::gen(H1) + &LieElement::gen(H2));
        assert_eq!(br(E34, E13), -&LieElement::gen(E14));
        assert_eq!(br(H1, E12), LieElement::term(E12, int(2)));
        assert_eq!(br(E12, H1), LieElement::term(E12, int(-2)));
    }

    #[test]
    fn c_is_central() {
        let c = LieElement::c_combination();
        for g in GeneratorId::ALL {
            assert!(c.bracket(&LieElement::gen(g)).is_zero(), "[C, {g}] != 0");
        }
    }

    #[test]
    fn charge_matrix_shapes() {
        let m = charge_matrix(&CentralCharges::standard());
        assert_eq!(m, [[int(0), int(0)], [int(1), int(0)]]);
        let d = charge_matrix(&CentralCharges::sl(int(3)));
        assert_eq!(d, [[int(3), int(0)], [int(0), int(-3)]]);
    }

    #[test]
    fn twisting_charges() {
        let ch = CentralCharges::standard();
        assert_eq!(twist_charges(&ch, &Sl2::identity()), ch);
        // g = [[1,1],[0,1]]: k' = u²k + 2uvc + v²p = 1
        let g = Sl2::new(int(1), int(1), int(0), int(1)).unwrap();
        assert_eq!(twist_charges(&ch, &g), CentralCharges::new(int(1), int(1), int(1)));
        assert!(matches!(
            Sl2::new(int(2), int(0), int(0), int(1)),
            Err(Error::Determinant(_))
        ));
    }

    #[test]
    fn generator_names_round_trip() {
        for g in GeneratorId::ALL {
            assert_eq!(g.name().parse::<GeneratorId>().unwrap(), g);
            assert_eq!(GeneratorId::from_index(g.index()), Some(g));
        }
    }
}
