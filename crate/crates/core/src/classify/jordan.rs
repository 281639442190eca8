//! SL(2) conjugation of the charge matrix to a canonical form.

use num_traits::{One, Zero};

use crate::algebra::{charge_matrix, twist_charges, CentralCharges, Mat2, Sl2};
use crate::error::{Error, Result};
use crate::rational::{display_rational, int, rational_sqrt, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct JordanForm {
    pub transform: Sl2,
    pub canonical: CentralCharges,
}

/// A nonzero `y` with `y M = λ y`.
fn left_eigenvector(m: &Mat2, lambda: &Rational) -> [Rational; 2] {
    let a = [&m[0][0] - lambda, m[0][1].clone()];
    let b = [m[1][0].clone(), &m[1][1] - lambda];
    // y (M - λ) = 0 ⇔ y0·row0 + y1·row1 = 0
    if !a[0].is_zero() || !b[0].is_zero() {
        [b[0].clone(), -a[0].clone()]
    } else {
        [b[1].clone(), -a[1].clone()]
    }
}

fn det(r0: &[Rational; 2], r1: &[Rational; 2]) -> Rational {
    &r0[0] * &r1[1] - &r0[1] * &r1[0]
}

/// Finds `g ∈ SL(2, ℚ)` with `twist_charges(ch, g)` in canonical form:
/// `(d, 0, 0)` when `d² = c² - kp ≠ 0`, `(0, 0, 1)` in the nonzero nilpotent
/// case, and `(0, 0, 0)` for zero charges.
pub fn jordan_normalize(ch: &CentralCharges) -> Result<JordanForm> {
    if ch.is_zero() {
        return Ok(JordanForm { transform: Sl2::identity(), canonical: ch.clone() });
    }
    let m = charge_matrix(ch);
    let disc = ch.discriminant();
    let (r0, r1) = if !disc.is_zero() {
        let d = rational_sqrt(&disc).ok_or_else(|| {
            Error::IrrationalEigenvalue(format!("c² - kp = {} is not a rational square", display_rational(&disc)))
        })?;
        let y0 = left_eigenvector(&m, &d);
        let y1 = left_eigenvector(&m, &-d.clone());
        let s = det(&y0, &y1);
        ([&y0[0] / &s, &y0[1] / &s], y1)
    } else {
        // g = [y; x] with y M = 0, x M = y; det scales by squares only
        let y = left_eigenvector(&m, &Rational::zero());
        let x = solve_left(&m, &y)?;
        let s = det(&y, &x);
        let root = rational_sqrt(&s).ok_or_else(|| {
            Error::IrrationalEigenvalue(format!(
                "nilpotent normalization needs √{}",
                display_rational(&s)
            ))
        })?;
        ([&y[0] / &root, &y[1] / &root], [&x[0] / &root, &x[1] / &root])
    };
    let g = Sl2::new(r0[0].clone(), r0[1].clone(), r1[0].clone(), r1[1].clone())?;
    let canonical = twist_charges(ch, &g);
    let expected = if disc.is_zero() {
        CentralCharges::new(int(0), int(0), int(1))
    } else {
        CentralCharges::new(canonical.c.clone(), int(0), int(0))
    };
    if canonical != expected {
        return Err(Error::Internal(format!("normalization of {ch} produced {canonical}")));
    }
    Ok(JordanForm { transform: g, canonical })
}

/// Some `x` with `x M = y`, for nilpotent nonzero `M` and `y` in its image.
fn solve_left(m: &Mat2, y: &[Rational; 2]) -> Result<[Rational; 2]> {
    // x M = y: x0 m00 + x1 m10 = y0, x0 m01 + x1 m11 = y1
    for (x0, x1) in [(Rational::one(), Rational::zero()), (Rational::zero(), Rational::one())] {
        let img = [&x0 * &m[0][0] + &x1 * &m[1][0], &x0 * &m[0][1] + &x1 * &m[1][1]];
        // y is a multiple of every nonzero image of a nilpotent rank-one M
        let scale = if !img[0].is_zero() {
            Some(&y[0] / &img[0])
        } else if !img[1].is_zero() {
            Some(&y[1] / &img[1])
        } else {
            None
        };
        if let Some(s) = scale {
            if [&img[0] * &s, &img[1] * &s] == *y {
                return Ok([x0 * &s, x1 * &s]);
            }
        }
    }
    Err(Error::Internal("charge matrix is not nilpotent of rank one".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ch(c: i64, k: i64, p: i64) -> CentralCharges {
        CentralCharges::new(int(c), int(k), int(p))
    }

    #[test]
    fn canonical_inputs_stay_put() {
        assert_eq!(jordan_normalize(&ch(0, 0, 1)).unwrap().canonical, ch(0, 0, 1));
        let d = jordan_normalize(&ch(1, 0, 0)).unwrap().canonical;
        assert_eq!(d.discriminant(), int(1));
        assert!(d.k.is_zero() && d.p.is_zero());
    }

    #[test]
    fn nilpotent_111() {
        let j = jordan_normalize(&ch(1, 1, 1)).unwrap();
        assert_eq!(j.canonical, ch(0, 0, 1));
        assert_eq!(twist_charges(&ch(1, 1, 1), &j.transform), ch(0, 0, 1));
    }

    #[test]
    fn diagonalizable_and_irrational() {
        // c² - kp = 4 - (-5) = 9
        let j = jordan_normalize(&ch(2, -5, 1)).unwrap();
        assert_eq!(j.canonical.discriminant(), int(9));
        assert!(matches!(jordan_normalize(&ch(1, 1, -1)), Err(Error::IrrationalEigenvalue(_))));
        assert!(matches!(
            jordan_normalize(&CentralCharges::new(int(0), int(0), int(2))),
            Err(Error::IrrationalEigenvalue(_))
        ));
        let j = jordan_normalize(&CentralCharges::new(frac(1, 2), int(0), int(3))).unwrap();
        assert_eq!(j.canonical.k, int(0));
    }
}
