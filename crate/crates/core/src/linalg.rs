//! Sparse exact linear algebra: vectors, column-stored matrices and an
//! incrementally maintained reduced row echelon basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{display_rational, Rational};

/// Sparse vector over the rationals. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(i, Rational::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (i, x) in pairs {
            v.add_at(i, &x);
        }
        v
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entry(&self, i: usize) -> Option<&Rational> {
        self.entries.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Smallest index carrying a nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, x)| (i, x))
    }

    pub fn add_at(&mut self, i: usize, x: &Rational) {
        if x.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(y) => {
                *y += x;
                if y.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, x.clone());
            }
        }
    }

    pub fn set(&mut self, i: usize, x: Rational) {
        if x.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, x);
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_at(i, &(c * x));
        }
    }

    pub fn scaled(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        self.scaled(&-Rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&-Rational::one(), other);
        out
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&Rational::one(), other);
        out
    }

    /// Keeps only the entries whose index satisfies `keep`.
    pub fn filtered<F: Fn(usize) -> bool>(&self, keep: F) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(&i, _)| keep(i))
                .map(|(&i, x)| (i, x.clone()))
                .collect(),
        }
    }

    /// Reindexes entries; entries mapped to `None` are dropped.
    pub fn remapped<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in self.iter() {
            if let Some(j) = f(i) {
                out.add_at(j, x);
            }
        }
        out
    }

    /// True when `self = c * other` for some nonzero `c`.
    pub fn is_parallel_to(&self, other: &SparseVec) -> Option<Rational> {
        let (i, x) = self.leading()?;
        let y = other.entry(i)?;
        let c = x / y;
        if other.scaled(&c) == *self {
            Some(c)
        } else {
            None
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, x) in self.iter() {
            out[i] = x.clone();
        }
        out
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(i, x)| format!("{}*e{}", display_rational(x), i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zero(n, n);
        for (j, col) in m.cols.iter_mut().enumerate() {
            col.add_at(j, c);
        }
        m
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.support().all(|i| i < nrows)));
        Self { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(i)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, x: &Rational) {
        self.cols[j].add_at(i, x);
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.axpy(x, &self.cols[j]);
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in product");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rational, other: &SparseMatrix) {
        assert_eq!(self.ncols(), other.ncols());
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.axpy(c, b);
        }
    }

    pub fn scaled(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|col| col.scaled(c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.axpy(&-Rational::one(), other);
        out
    }

    /// Nonzero entries as `(row, col, value)`, sorted row-major.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<(usize, usize, Rational)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (i, j, x.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = EchelonBasis::new();
        for c in &self.cols {
            ech.insert(c.clone());
        }
        ech.len()
    }
}

/// Reduced row echelon basis of a subspace, built incrementally.
///
/// Every row is normalized so that its pivot (the smallest index in its
/// support) carries coefficient one, and no other row has an entry in that
/// pivot column. Rows keep their insertion order.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_row.contains_key(&i)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (i, x) in v.iter() {
            if let Some(&r) = self.pivot_row.get(&i) {
                out.axpy(&-x.clone(), &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns the index of the new row, or `None`
    /// if `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let rem = self.reduce(&v);
        let (p, lead) = match rem.leading() {
            Some((p, lead)) => (p, lead.clone()),
            None => return None,
        };
        let rem = rem.scaled(&(Rational::one() / lead));
        for row in &mut self.rows {
            if let Some(x) = row.entry(p).cloned() {
                row.axpy(&-x, &rem);
            }
        }
        self.rows.push(rem);
        self.pivots.push(p);
        self.pivot_row.insert(p, self.rows.len() - 1);
        Some(self.rows.len() - 1)
    }

    /// Coordinates of `v` with respect to the rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    /// Coordinates as a sparse vector indexed by row; assumes `v` is in the span.
    pub fn coordinates_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in v.iter() {
            if let Some(&r) = self.pivot_row.get(&i) {
                out.add_at(r, x);
            }
        }
        out
    }

    /// Basis of the solution space of `row · x = 0` for all rows, where
    /// `x` has `ncols` coordinates.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.is_pivot(*c)) {
            let mut x = SparseVec::unit(free);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                let c = row.get(free);
                if !c.is_zero() {
                    x.set(p, -c);
                }
            }
            out.push(x);
        }
        out
    }

    /// Rows sorted by pivot, which is the canonical form of the subspace.
    pub fn canonical_rows(&self) -> Vec<SparseVec> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&r| self.pivots[r]);
        idx.into_iter().map(|r| self.rows[r].clone()).collect()
    }
}

/// Zassenhaus intersection of two subspaces of a space of dimension `dim`.
pub fn intersect(a: &EchelonBasis, b: &EchelonBasis, dim: usize) -> EchelonBasis {
    let mut big = EchelonBasis::new();
    for r in a.rows() {
        let mut v = r.clone();
        for (i, x) in r.iter() {
            v.add_at(dim + i, x);
        }
        big.insert(v);
    }
    for r in b.rows() {
        big.insert(r.clone());
    }
    let mut out = EchelonBasis::new();
    for r in big.rows() {
        if r.leading().is_some_and(|(i, _)| i >= dim) {
            out.insert(r.remapped(|i| i.checked_sub(dim)));
        }
    }
    out
}

/// Coordinates of `v` in the (linearly independent) family `basis`, or
/// `None` if `v` is outside its span. `dim` bounds every index in use.
pub fn coordinates_in(basis: &[SparseVec], v: &SparseVec, dim: usize) -> Option<Vec<Rational>> {
    // tag each basis vector with a unit vector in extra columns; reducing
    // `v` then leaves minus its coordinates in the tag block
    let mut ech = EchelonBasis::new();
    for (i, b) in basis.iter().enumerate() {
        let mut t = b.clone();
        t.add_at(dim + i, &Rational::one());
        ech.insert(t);
    }
    let rem = ech.reduce(v);
    if rem.iter().any(|(i, _)| i < dim) {
        return None;
    }
    Some((0..basis.len()).map(|i| -rem.get(dim + i)).collect())
}

/// Inverse of a small dense square matrix, or `None` if singular.
pub fn invert_dense(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn coordinates_in_a_given_family() {
        let b = [SparseVec::from_pairs([(0, int(1)), (1, int(1))]), SparseVec::from_pairs([(1, int(2))])];
        let v = SparseVec::from_pairs([(0, int(3)), (1, int(7))]);
        assert_eq!(coordinates_in(&b, &v, 2), Some(vec![int(3), int(2)]));
        assert_eq!(coordinates_in(&b[..1], &v, 2), None);
        let half = SparseVec::from_pairs([(1, int(1))]);
        assert_eq!(coordinates_in(&b, &half, 2), Some(vec![int(0), frac(1, 2)]));
    }

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_pairs(xs.iter().enumerate().map(|(i, &x)| (i, int(x))))
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut a = v(&[1, 2, 0]);
        a.axpy(&int(-1), &v(&[1, 0, 0]));
        assert_eq!(a.nnz(), 1);
        assert_eq!(a.leading(), Some((1, &int(2))));
    }

    #[test]
    fn echelon_detects_dependence_and_reduces_fully() {
        let mut e = EchelonBasis::new();
        assert!(e.insert(v(&[1, 2, 3])).is_some());
        assert!(e.insert(v(&[0, 1, 1])).is_some());
        assert!(e.insert(v(&[2, 5, 7])).is_none());
        assert_eq!(e.len(), 2);
        // fully reduced: pivot 1 is cleared from the first row
        assert_eq!(e.rows()[0].get(1), int(0));
        // coordinates are relative to the reduced rows (1,0,1), (0,1,1)
        assert_eq!(e.coordinates(&v(&[1, 3, 4])), Some(vec![int(1), int(3)]));
        assert_eq!(e.coordinates(&v(&[0, 0, 1])), None);
    }

    #[test]
    fn nullspace_of_rank_one_system() {
        let mut e = EchelonBasis::new();
        e.insert(v(&[1, 1, 1]));
        let ns = e.nullspace(3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            let dot: Rational = x.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(dot, int(0));
        }
    }

    #[test]
    fn zassenhaus_intersection() {
        let mut a = EchelonBasis::new();
        a.insert(v(&[1, 0, 0]));
        a.insert(v(&[0, 1, 0]));
        let mut b = EchelonBasis::new();
        b.insert(v(&[0, 1, 0]));
        b.insert(v(&[0, 0, 1]));
        let c = intersect(&a, &b, 3);
        assert_eq!(c.len(), 1);
        assert!(c.contains(&v(&[0, 1, 0])));
    }

    #[test]
    fn dense_inverse() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(1)]];
        let inv = invert_dense(&m).unwrap();
        assert_eq!(inv, vec![vec![int(1), int(-1)], vec![int(-1), int(2)]]);
        assert!(invert_dense(&[vec![int(1), int(2)], vec![int(2), int(4)]]).is_none());
        let h = invert_dense(&[vec![frac(1, 2)]]).unwrap();
        assert_eq!(h[0][0], int(2));
    }

    #[test]
    fn matrix_product_and_triplets() {
        let mut a = SparseMatrix::zero(2, 2);
        a.add_entry(0, 1, &int(1));
        let b = a.mul(&a);
        assert!(b.is_zero());
        assert_eq!(a.triplets(), vec![(0, 1, int(1))]);
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
    }
}
