//! Fraction-free row reduction with a final rational normalization.
//!
//! Rows are cleared of denominators and kept as primitive integer vectors while they are
//! reduced against the current echelon basis. Only the back-substitution into reduced
//! row-echelon form goes through rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use super::sparse::{LinComb, SparseMat, SparseVec};
use crate::error::{Error, Result};

type IntRow = BTreeMap<usize, BigInt>;

/// Clears denominators and divides out the content; the leading entry ends up positive.
fn primitive_int_row(row: &LinComb<usize>) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, c) in row.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(k, c)| (*k, c.numer() * (&lcm / c.denom())))
        .collect();
    normalize(&mut out);
    out
}

fn normalize(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = row.values().next().is_some_and(|v| v.is_negative());
    if g.is_zero() {
        return;
    }
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// Row-echelon basis of the row space of a matrix, keyed by pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_rows<'a>(cols: usize, rows: impl IntoIterator<Item = &'a LinComb<usize>>) -> Self {
        let mut e = Self::new(cols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn from_matrix(m: &SparseMat) -> Self {
        let rows = m.row_combinations();
        Self::from_rows(m.cols(), rows.iter())
    }

    /// Reduces `row` and adds it if it is independent. Returns whether the rank grew.
    pub fn insert(&mut self, row: &LinComb<usize>) -> bool {
        let mut r = primitive_int_row(row);
        loop {
            let Some((&lead, lead_val)) = r.iter().next() else {
                return false;
            };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, r);
                return true;
            };
            let pv = &p[&lead];
            let g = lead_val.gcd(pv);
            let a = pv / &g;
            let b = lead_val / &g;
            let mut next = IntRow::new();
            for (k, v) in &r {
                let nv = v * &a;
                if !nv.is_zero() {
                    next.insert(*k, nv);
                }
            }
            for (k, v) in p {
                let e = next.entry(*k).or_insert_with(BigInt::zero);
                *e -= v * &b;
                if e.is_zero() {
                    next.remove(k);
                }
            }
            normalize(&mut next);
            r = next;
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduced row-echelon rows (leading coefficient 1), keyed by pivot column.
    pub fn reduced(&self) -> BTreeMap<usize, LinComb<usize>> {
        let mut rows: BTreeMap<usize, LinComb<usize>> = self
            .pivots
            .iter()
            .map(|(&c, row)| {
                let lead = BigRational::from_integer(row[&c].clone());
                let lc: LinComb<usize> = row
                    .iter()
                    .map(|(k, v)| (*k, BigRational::from_integer(v.clone()) / &lead))
                    .collect();
                (c, lc)
            })
            .collect();
        let cols: Vec<usize> = rows.keys().rev().copied().collect();
        for c in cols {
            let pivot_row = rows[&c].clone();
            for (_, other) in rows.range_mut(..c) {
                let f = other.coeff(&c);
                if !f.is_zero() {
                    other.add_scaled(&pivot_row, &-f);
                }
            }
        }
        rows
    }
}

pub fn rank(m: &SparseMat) -> usize {
    Echelon::from_matrix(m).rank()
}

/// Basis of the null space `{v : m v = 0}`; one vector per free column, with a 1 there.
pub fn kernel_basis(m: &SparseMat) -> Vec<SparseVec> {
    kernel_from_echelon(&Echelon::from_matrix(m))
}

pub(crate) fn kernel_from_echelon(e: &Echelon) -> Vec<SparseVec> {
    let reduced = e.reduced();
    let cols = e.cols();
    (0..cols)
        .filter(|c| !reduced.contains_key(c))
        .map(|free| {
            let mut v = LinComb::basis(free);
            for (&p, row) in &reduced {
                let f = row.coeff(&free);
                if !f.is_zero() {
                    v.add_term(p, -f);
                }
            }
            SparseVec::from_lincomb(cols, v).expect("kernel vector in range")
        })
        .collect()
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve_linear(m: &SparseMat, b: &SparseVec) -> Result<Option<SparseVec>> {
    if b.dim() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.dim(),
        });
    }
    let aug = m.cols();
    let mut rows = m.row_combinations();
    for (r, v) in b.iter() {
        rows[r].add_term(aug, v.clone());
    }
    let e = Echelon::from_rows(aug + 1, rows.iter());
    if e.pivots.contains_key(&aug) {
        return Ok(None);
    }
    let mut x = LinComb::new();
    for (c, row) in e.reduced() {
        x.add_term(c, row.coeff(&aug));
    }
    Ok(Some(SparseVec::from_lincomb(aug, x)?))
}

/// Whether `v` lies in the span of `basis`.
pub fn membership(v: &SparseVec, basis: &[SparseVec]) -> Result<bool> {
    for b in basis {
        if b.dim() != v.dim() {
            return Err(Error::DimensionMismatch {
                expected: v.dim(),
                found: b.dim(),
            });
        }
    }
    if v.is_zero() {
        return Ok(true);
    }
    let m = SparseMat::from_column_vecs(v.dim(), basis)?;
    Ok(solve_linear(&m, v)?.is_some())
}

/// Coordinates of `v` in terms of `basis` (assumed independent), if it lies in the span.
pub fn coordinates(v: &SparseVec, basis: &[SparseVec]) -> Result<Option<SparseVec>> {
    let m = SparseMat::from_column_vecs(v.dim(), basis)?;
    solve_linear(&m, v)
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn inverse(m: &SparseMat) -> Result<Option<SparseMat>> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch {
            left: (m.rows(), m.cols()),
            right: (m.cols(), m.rows()),
        });
    }
    let n = m.rows();
    if rank(m) < n {
        return Ok(None);
    }
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let x = solve_linear(m, &SparseVec::unit(n, i))?.expect("full-rank system is solvable");
        cols.push(x.into_coeffs());
    }
    Ok(Some(SparseMat::from_columns(n, cols)?))
}

/// Returns a left inverse `l` with `l m = id` when `m` has full column rank.
pub fn left_inverse(m: &SparseMat) -> Result<Option<SparseMat>> {
    // Solve m^T y_i = e_i for each input coordinate; rows of l are the y_i.
    let mt = m.transpose();
    let mut rows = Vec::with_capacity(m.cols());
    for i in 0..m.cols() {
        match solve_linear(&mt, &SparseVec::unit(m.cols(), i))? {
            Some(y) => rows.push(y.to_dense()),
            None => return Ok(None),
        }
    }
    Ok(Some(SparseMat::from_dense_rows(&rows, m.rows())?))
}

/// Scalars `c` with `v = c * w` when `w != 0`.
pub fn proportionality(v: &SparseVec, w: &SparseVec) -> Option<Scalar> {
    let (i, wi) = w.iter().next()?;
    let c = v.get(i) / wi;
    (w.scale(&c) == *v).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, ratio};

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&SparseMat::identity(2)).is_empty());
    }

    #[test]
    fn one_by_two_kernel() {
        let m = SparseMat::from_int_rows(&[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![SparseVec::from_ints(&[-1, 1])]);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = SparseVec::from_dense(&[ratio(1, 3), int(-2)]);
        assert_eq!(solve_linear(&SparseMat::identity(2), &b).unwrap(), Some(b));
        let zero = SparseMat::zeros(1, 1);
        assert_eq!(
            solve_linear(&zero, &SparseVec::from_ints(&[1])).unwrap(),
            None
        );
        let m = SparseMat::from_int_rows(&[&[1, 1]]);
        let x = solve_linear(&m, &SparseVec::zeros(1)).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), SparseVec::zeros(1));
    }

    #[test]
    fn solve_rejects_bad_dimension() {
        let m = SparseMat::identity(2);
        assert!(matches!(
            solve_linear(&m, &SparseVec::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_cases() {
        let v = SparseVec::from_ints(&[2, 3]);
        assert!(membership(&v, std::slice::from_ref(&v)).unwrap());
        assert!(membership(&SparseVec::zeros(2), &[]).unwrap());
        assert!(!membership(
            &SparseVec::from_ints(&[1, 0]),
            &[SparseVec::from_ints(&[0, 1])]
        )
        .unwrap());
        assert!(membership(&v, &[SparseVec::zeros(3)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = SparseMat::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), SparseMat::identity(2));
        let singular = SparseMat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(inverse(&singular).unwrap(), None);
    }

    #[test]
    fn left_inverse_of_injection() {
        let m = SparseMat::from_int_rows(&[&[1], &[2], &[0]]);
        let l = left_inverse(&m).unwrap().unwrap();
        assert_eq!(l.mul(&m).unwrap(), SparseMat::identity(1));
    }
}
