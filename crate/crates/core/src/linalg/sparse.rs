//! Sparse vectors, matrices and formal linear combinations over [`Scalar`].

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use crate::error::{Error, Result};

/// A finite formal linear combination of basis keys. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scaled(&self, coeff: &Scalar) -> Self {
        if coeff.is_zero() {
            return Self::new();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    /// Extends `f` linearly: `sum c_k f(k)`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Extends the scalar-valued `f` linearly.
    pub fn eval_linear(&self, mut f: impl FnMut(&K) -> Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            let v = f(k);
            if !v.is_zero() {
                out += c * v;
            }
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", format_scalar(c), k)?;
        }
        Ok(())
    }
}

/// Products of two combinations over a tensor-product key.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::new();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_term((ka.clone(), kb.clone()), ca * cb);
        }
    }
    out
}

/// A vector of fixed dimension with sparse storage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec {
    dim: usize,
    coeffs: LinComb<usize>,
}

impl SparseVec {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            coeffs: LinComb::new(),
        }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} out of range {dim}");
        Self {
            dim,
            coeffs: LinComb::basis(index),
        }
    }

    pub fn from_lincomb(dim: usize, coeffs: LinComb<usize>) -> Result<Self> {
        if let Some(&k) = coeffs.keys().next_back() {
            if k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: k + 1,
                });
            }
        }
        Ok(Self { dim, coeffs })
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self {
            dim: values.len(),
            coeffs: values
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let dense: Vec<Scalar> = values.iter().map(|&v| super::scalar::int(v)).collect();
        Self::from_dense(&dense)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.coeffs.coeff(&index)
    }

    pub fn coeffs(&self) -> &LinComb<usize> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> LinComb<usize> {
        self.coeffs
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in self.coeffs.iter() {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            coeffs: self.coeffs.plus(&other.coeffs),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            coeffs: self.coeffs.minus(&other.coeffs),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            dim: self.dim,
            coeffs: self.coeffs.scaled(c),
        }
    }

    pub fn dot(&self, other: &Self) -> Result<Scalar> {
        self.check_dim(other)?;
        Ok(self.coeffs.eval_linear(|i| other.get(*i)))
    }
}

/// A `rows x cols` matrix stored column by column. Column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    columns: Vec<LinComb<usize>>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![LinComb::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(LinComb::basis).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<LinComb<usize>>) -> Result<Self> {
        for col in &columns {
            if let Some(&k) = col.keys().next_back() {
                if k >= rows {
                    return Err(Error::DimensionMismatch {
                        expected: rows,
                        found: k + 1,
                    });
                }
            }
        }
        Ok(Self {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn from_column_vecs(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        for c in columns {
            if c.dim() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.dim(),
                });
            }
        }
        Ok(Self {
            rows,
            cols: columns.len(),
            columns: columns.iter().map(|c| c.coeffs().clone()).collect(),
        })
    }

    /// Builds from row-major dense data; every row must have `cols` entries.
    pub fn from_dense_rows(rows: &[Vec<Scalar>], cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                m.columns[c].add_term(r, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| super::scalar::int(v)).collect())
            .collect();
        Self::from_dense_rows(&dense, cols).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].coeff(&r)
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let current = self.columns[c].coeff(&r);
        self.columns[c].add_term(r, value - current);
    }

    pub fn column(&self, c: usize) -> &LinComb<usize> {
        &self.columns[c]
    }

    pub fn column_vec(&self, c: usize) -> SparseVec {
        SparseVec {
            dim: self.rows,
            coeffs: self.columns[c].clone(),
        }
    }

    pub fn columns(&self) -> &[LinComb<usize>] {
        &self.columns
    }

    /// Row `r` as a combination of column indices.
    pub fn row(&self, r: usize) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (c, col) in self.columns.iter().enumerate() {
            out.add_term(c, col.coeff(&r));
        }
        out
    }

    pub fn row_combinations(&self) -> Vec<LinComb<usize>> {
        let mut rows = vec![LinComb::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[*r].add_term(c, v.clone());
            }
        }
        rows
    }

    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(SparseVec {
            dim: self.rows,
            coeffs: self.apply_lc(v.coeffs()),
        })
    }

    /// Applies to a combination of column indices without a dimension check.
    pub fn apply_lc(&self, v: &LinComb<usize>) -> LinComb<usize> {
        v.map_linear(|j| self.columns[*j].clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply_lc(c)).collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            columns: self.row_combinations(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|col| col.scaled(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(LinComb::is_zero)
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let shift = self.rows;
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| {
                    let mut col = a.clone();
                    col.add_assign(&b.map_keys(|r| r + shift));
                    col
                })
                .collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn lincomb_drops_zeros() {
        let mut a = LinComb::basis(3usize);
        a.add_term(3, int(-1));
        assert!(a.is_zero());
        a.add_term(1, int(0));
        assert!(a.is_empty());
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = SparseMat::from_int_rows(&[&[1, 2], &[0, 1], &[3, 0]]);
        let b = SparseMat::from_int_rows(&[&[1, 0, 1], &[2, 1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            SparseMat::from_int_rows(&[&[5, 2, 1], &[2, 1, 0], &[3, 0, 3]])
        );
        assert_eq!(b.transpose().transpose(), b, "transpose is an involution");
        let ab_t = b.transpose().mul(&a.transpose()).unwrap();
        assert_eq!(ab_t, ab.transpose());
    }

    #[test]
    fn apply_checks_dimension() {
        let a = SparseMat::identity(2);
        assert!(a.apply(&SparseVec::zeros(3)).is_err());
        let v = SparseVec::from_ints(&[4, -1]);
        assert_eq!(a.apply(&v).unwrap(), v);
    }

    #[test]
    fn vstack_shifts_rows() {
        let a = SparseMat::from_int_rows(&[&[1, 2]]);
        let b = SparseMat::from_int_rows(&[&[3, 4]]);
        let s = a.vstack(&b).unwrap();
        assert_eq!(s, SparseMat::from_int_rows(&[&[1, 2], &[3, 4]]));
    }
}
