//! Characteristic polynomials and rational eigenvalues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;
use super::sparse::SparseMat;
use crate::error::{Error, Result};

/// Coefficients of `det(x I - m)`, lowest degree first (Faddeev–LeVerrier).
pub fn charpoly(m: &SparseMat) -> Vec<Scalar> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "charpoly of a non-square matrix");
    let a = m.to_dense_rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    // acc = A * M_{k-1}
    let mut mk = vec![vec![Scalar::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = dense_mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let amk = dense_mul(&a, &mk);
        let trace: Scalar = (0..n).map(|i| amk[i][i].clone()).sum();
        coeffs[n - k] = -trace / Scalar::from_integer(BigInt::from(k));
    }
    coeffs
}

fn dense_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn horner(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - root)`, assuming it is a root.
fn deflate(poly: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let n = poly.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for i in (0..n).rev() {
        carry = &poly[i + 1] + carry * root;
        out[i] = carry.clone();
    }
    out
}

const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let root = n.sqrt();
    if root.to_u64().is_none_or(|r| r > TRIAL_DIVISION_LIMIT) {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while d <= root {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// All rational roots with multiplicity, plus the degree of the remaining factor
/// that has no rational roots.
pub fn rational_roots(poly: &[Scalar]) -> Result<(Vec<Scalar>, usize)> {
    let mut p: Vec<Scalar> = poly.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Scalar::zero());
        p.remove(0);
    }
    if p.len() <= 1 {
        return Ok((roots, 0));
    }
    let mut lcm = BigInt::one();
    for c in &p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let too_big = || Error::NotSplit("coefficients too large for rational root search".into());
    let num_divs = positive_divisors(&ints[0]).ok_or_else(too_big)?;
    let den_divs = positive_divisors(ints.last().expect("nonempty")).ok_or_else(too_big)?;
    let mut candidates: Vec<Scalar> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let c = BigRational::new(a.clone(), b.clone());
            if !candidates.contains(&c) {
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    }
    for c in candidates {
        while p.len() > 1 && horner(&p, &c).is_zero() {
            p = deflate(&p, &c);
            roots.push(c.clone());
        }
    }
    roots.sort();
    Ok((roots, p.len() - 1))
}

/// Distinct eigenvalues of `m`; fails with `NotSplit` if some eigenvalue is irrational.
pub fn rational_eigenvalues(m: &SparseMat) -> Result<Vec<Scalar>> {
    let (mut roots, rest) = rational_roots(&charpoly(m))?;
    if rest > 0 {
        return Err(Error::NotSplit(format!(
            "characteristic polynomial has an irreducible factor of degree {rest} over the rationals"
        )));
    }
    roots.dedup();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, ratio};

    #[test]
    fn charpoly_of_small_matrices() {
        // [[0,1],[1,0]] has x^2 - 1
        let m = SparseMat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(charpoly(&m), vec![int(-1), int(0), int(1)]);
        let t = SparseMat::from_int_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
        assert_eq!(charpoly(&t), vec![int(-12), int(16), int(-7), int(1)]);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (2x - 1)(x + 3)^2 x = 2x^4 + 11x^3 + 12x^2 - 9x
        let p = vec![int(0), int(-9), int(12), int(11), int(2)];
        let (roots, rest) = rational_roots(&p).unwrap();
        assert_eq!(rest, 0);
        assert_eq!(roots, vec![int(-3), int(-3), int(0), ratio(1, 2)]);
    }

    #[test]
    fn cube_roots_of_unity_are_not_split() {
        // cyclic permutation matrix of order 3
        let m = SparseMat::from_int_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let (roots, rest) = rational_roots(&charpoly(&m)).unwrap();
        assert_eq!(roots, vec![int(1)]);
        assert_eq!(rest, 2);
        assert!(matches!(rational_eigenvalues(&m), Err(Error::NotSplit(_))));
    }
}
