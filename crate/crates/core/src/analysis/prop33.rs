//! The two linear constraints on a `V⁺` vector of weight `[m,n]` in a
//! submodule, obtained by applying `z23` and `z24`.
//!
//! Write the vector as `c1 w + c2 z41 z32 w + c3 z31 z42 w + c4 z41 z31 z42 z32 w`.
//! `z23` sends it into the span of `z41 w, z41 z31 z42 w` and `z24` into the
//! span of `z31 w, z41 z31 z32 w`. The coefficients of `z41 w` and `z31 w`
//! depend on `(c2, c3)` only; those of the second vectors on `c4` only.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kac::{highest_vector, kac};
use crate::linalg::coordinates_in;
use crate::mz::zops::{apply_z, apply_z_word, ZId::{self, *}};
use crate::rational::{frac, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Prop33Relations {
    pub m: u32,
    pub n: u32,
    /// `(c2, c3)` coefficients of `z41 w` in `z23 v`.
    pub z23_row: Vec<Rational>,
    /// `(c2, c3)` coefficients of `z31 w` in `z24 v`.
    pub z24_row: Vec<Rational>,
    /// Coefficients of `c4` in the second target vectors of `z23 v`, `z24 v`.
    pub c4_coefficients: Vec<Rational>,
}

impl Prop33Relations {
    pub fn determinant(&self) -> Rational {
        &self.z23_row[0] * &self.z24_row[1] - &self.z23_row[1] * &self.z24_row[0]
    }

    pub fn is_singular(&self) -> bool {
        self.determinant().is_zero()
    }

    /// `c4 = 0` is forced when some `c4` coefficient is nonzero.
    pub fn forces_c4(&self) -> bool {
        self.c4_coefficients.iter().any(|c| !c.is_zero())
    }
}

/// The closed-form rows `((m-n)/2, (m+n+2)/(2(n+1)))` and
/// `(-(m-n)/(2(n+2)), n(m+n+2)/(2(n+1)))`.
pub fn displayed_rows(m: u32, n: u32) -> [[Rational; 2]; 2] {
    let (m, n) = (m as i64, n as i64);
    [
        [frac(m - n, 2), frac(m + n + 2, 2 * (n + 1))],
        [frac(-(m - n), 2 * (n + 2)), frac(n * (m + n + 2), 2 * (n + 1))],
    ]
}

/// Computes the constraint rows on `K(m,n)`, `m, n ≥ 2`.
pub fn prop33_linear_relations(m: u32, n: u32) -> Result<Prop33Relations> {
    if m < 2 || n < 2 {
        return Err(Error::Parameter(format!("need m, n >= 2, got ({m},{n})")));
    }
    let k = kac(m, n);
    let w = highest_vector();
    let source: Vec<Vec<ZId>> = vec![vec![], vec![Z41, Z32], vec![Z31, Z42], vec![Z41, Z31, Z42, Z32]];
    let source = source
        .iter()
        .map(|word| apply_z_word(&k, word, &w))
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    let mut c4 = Vec::new();
    for (z, target) in [(Z23, [vec![Z41], vec![Z41, Z31, Z42]]), (Z24, [vec![Z31], vec![Z41, Z31, Z32]])] {
        let target = target
            .iter()
            .map(|word| apply_z_word(&k, word, &w))
            .collect::<Result<Vec<_>>>()?;
        // columns: coordinates of z(source_i) in the target pair
        let mut cols = Vec::new();
        for s in &source {
            let img = apply_z(&k, z, s)?;
            let c = coordinates_in(&target, &img, k.dim())
                .ok_or_else(|| Error::Internal(format!("{z} image leaves the expected weight space")))?;
            cols.push(c);
        }
        let separated = cols[0].iter().all(Zero::is_zero)
            && cols[1][1].is_zero()
            && cols[2][1].is_zero()
            && cols[3][0].is_zero();
        if !separated {
            return Err(Error::Internal(format!("{z} mixes the c4 term with c2, c3")));
        }
        rows.push(vec![cols[1][0].clone(), cols[2][0].clone()]);
        c4.push(cols[3][1].clone());
    }
    let z24_row = rows.pop().unwrap_or_default();
    let z23_row = rows.pop().unwrap_or_default();
    Ok(Prop33Relations { m, n, z23_row, z24_row, c4_coefficients: c4 })
}

/// Whether the computed rows equal [`displayed_rows`].
pub fn matches_displayed(r: &Prop33Relations) -> bool {
    let d = displayed_rows(r.m, r.n);
    r.z23_row == d[0] && r.z24_row == d[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rows_at_3_2() {
        let r = prop33_linear_relations(3, 2).unwrap();
        assert_eq!(r.z23_row, vec![frac(1, 2), frac(7, 6)]);
        assert_eq!(r.z24_row, vec![frac(-1, 8), frac(7, 3)]);
        assert!(matches_displayed(&r));
        assert!(r.forces_c4());
        assert!(!r.is_singular());
    }

    #[test]
    fn singular_on_the_diagonal() {
        let r = prop33_linear_relations(2, 2).unwrap();
        assert_eq!(r.z23_row, vec![int(0), int(1)]);
        assert!(r.is_singular());
        assert!(r.forces_c4());
        // z24 on the four-letter word gives -(m+n+2)/2 z41 z31 z32 w
        assert_eq!(r.c4_coefficients, vec![int(0), int(-3)]);
    }
}
