//! Rational functions of the two Cartan eigenvalues `h1`, `h3`.
//!
//! These carry the denominators of the Mickelsson–Zhelobenko operators and
//! of the relation tables. They are never simplified symbolically; they are
//! only ever evaluated at integer weights, and a vanishing denominator is an
//! error rather than a silent zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::module::Weight;
use crate::rational::{display_rational, int, Rational};

/// Polynomial in `h1`, `h3` with rational coefficients, keyed by exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term((0, 0), c);
        p
    }

    pub fn h1() -> Self {
        let mut p = Self::default();
        p.add_term((1, 0), Rational::one());
        p
    }

    pub fn h3() -> Self {
        let mut p = Self::default();
        p.add_term((0, 1), Rational::one());
        p
    }

    fn add_term(&mut self, e: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, h1: &Rational, h3: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= h1;
            }
            for _ in 0..j {
                t *= h3;
            }
            acc += t;
        }
        acc
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, o: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, o: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = Vec::new();
                    if i > 0 {
                        s.push(if i == 1 { "h1".to_string() } else { format!("h1^{i}") });
                    }
                    if j > 0 {
                        s.push(if j == 1 { "h3".to_string() } else { format!("h3^{j}") });
                    }
                    s.join("*")
                }
            };
            if mono.is_empty() {
                write!(f, "{}", display_rational(c))?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", display_rational(c))?;
            }
        }
        Ok(())
    }
}

/// `numerator / denominator`, evaluated lazily at a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    num: Poly2,
    den: Poly2,
}

impl WeightFunction {
    pub fn new(num: Poly2, den: Poly2) -> Self {
        assert!(!den.is_zero(), "weight function with zero denominator polynomial");
        Self { num, den }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(Poly2::constant(c), Poly2::constant(Rational::one()))
    }

    pub fn int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn h1() -> Self {
        Self::new(Poly2::h1(), Poly2::constant(Rational::one()))
    }

    pub fn h3() -> Self {
        Self::new(Poly2::h3(), Poly2::constant(Rational::one()))
    }

    /// `1 / (h1 + a)`
    pub fn inv_h1_plus(a: i64) -> Self {
        Self::one() / (Self::h1() + Self::int(a))
    }

    /// `1 / (h3 + a)`
    pub fn inv_h3_plus(a: i64) -> Self {
        Self::one() / (Self::h3() + Self::int(a))
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, w: Weight) -> Result<Rational> {
        let (h1, h3) = (int(w.a), int(w.b));
        let d = self.den.eval(&h1, &h3);
        if d.is_zero() {
            return Err(Error::WeightSingularity {
                weight: w,
                detail: format!("denominator {} vanishes", self.den),
            });
        }
        Ok(self.num.eval(&h1, &h3) / d)
    }
}

impl Add for WeightFunction {
    type Output = WeightFunction;
    fn add(self, o: WeightFunction) -> WeightFunction {
        if self.den == o.den {
            return WeightFunction::new(&self.num + &o.num, self.den);
        }
        WeightFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for WeightFunction {
    type Output = WeightFunction;
    fn sub(self, o: WeightFunction) -> WeightFunction {
        self + (-o)
    }
}

impl Neg for WeightFunction {
    type Output = WeightFunction;
    fn neg(self) -> WeightFunction {
        WeightFunction::new(-&self.num, self.den)
    }
}

impl Mul for WeightFunction {
    type Output = WeightFunction;
    fn mul(self, o: WeightFunction) -> WeightFunction {
        WeightFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for WeightFunction {
    type Output = WeightFunction;
    fn div(self, o: WeightFunction) -> WeightFunction {
        assert!(!o.num.is_zero(), "division by the zero weight function");
        WeightFunction::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Mul<Rational> for WeightFunction {
    type Output = WeightFunction;
    fn mul(self, c: Rational) -> WeightFunction {
        self * WeightFunction::constant(c)
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly2::constant(Rational::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn evaluates_at_weights() {
        let f = WeightFunction::h1() * WeightFunction::h3() / (WeightFunction::h1() + WeightFunction::int(1));
        assert_eq!(f.eval(Weight::new(2, 3)).unwrap(), int(2));
        assert_eq!(
            (WeightFunction::inv_h1_plus(1) + WeightFunction::inv_h3_plus(1))
                .eval(Weight::new(1, 0))
                .unwrap(),
            frac(3, 2)
        );
    }

    #[test]
    fn singular_denominator_is_an_error() {
        let f = WeightFunction::inv_h1_plus(1);
        match f.eval(Weight::new(-1, 5)) {
            Err(Error::WeightSingularity { weight, .. }) => assert_eq!(weight, Weight::new(-1, 5)),
            other => panic!("expected singularity, got {other:?}"),
        }
    }

    #[test]
    fn display_is_readable() {
        let f = WeightFunction::inv_h3_plus(1);
        assert_eq!(f.to_string(), "(1)/(h3 + 1)");
    }
}
