//! Characters, group-likes and primitives of finite-dimensional Hopf algebras.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::eigen::rational_eigenvalues;
use crate::linalg::{kernel_basis, one, Echelon, LinComb, Scalar, SparseMat, SparseVec};

use super::{FinDimHopf, HopfAlgebra};

/// All rational characters (algebra maps `H -> k`) as value vectors `φ(e_0), …, φ(e_{n-1})`.
///
/// A character is a common left eigenvector of the multiplication operators, with
/// eigenvalue `φ(e_b)` for `e_b`. Branches over the rational eigenvalues of each operator
/// in turn and keeps those with a nonzero common eigenspace. Fails with `NotSplit` when an
/// operator has an irrational eigenvalue, or when `H` is commutative but has fewer than
/// `dim H` characters (not split semisimple).
pub fn characters(h: &FinDimHopf) -> Result<Vec<Vec<Scalar>>> {
    let n = h.dim();
    let operators: Vec<SparseMat> = (0..n).map(|b| h.left_mult_matrix(b).transpose()).collect();
    // (constraint rows, eigenvalues so far)
    let mut branches: Vec<(Vec<LinComb<usize>>, Vec<Scalar>)> = vec![(Vec::new(), Vec::new())];
    for (b, op) in operators.iter().enumerate() {
        let eigenvalues = rational_eigenvalues(op)
            .map_err(|e| Error::NotSplit(format!("multiplication by {}: {e}", h.labels()[b])))?;
        let mut next = Vec::new();
        for (rows, values) in &branches {
            for lambda in &eigenvalues {
                let shifted = op
                    .sub(&SparseMat::identity(n).scale(lambda))
                    .expect("square");
                let mut new_rows = rows.clone();
                new_rows.extend(shifted.row_combinations());
                if Echelon::from_rows(n, new_rows.iter()).rank() < n {
                    let mut vals = values.clone();
                    vals.push(lambda.clone());
                    next.push((new_rows, vals));
                }
            }
        }
        branches = next;
    }
    let chars: Vec<Vec<Scalar>> = branches.into_iter().map(|(_, v)| v).collect();
    for phi in &chars {
        if let Some(w) = character_witness(h, phi) {
            return Err(Error::Inconsistent(format!(
                "eigenvalue vector is not multiplicative at {w}"
            )));
        }
    }
    if h.is_commutative() && chars.len() < n {
        return Err(Error::NotSplit(format!(
            "commutative algebra of dimension {n} has only {} rational characters",
            chars.len()
        )));
    }
    Ok(chars)
}

/// Witness where `phi` fails to be a character, if any.
pub fn character_witness(h: &FinDimHopf, phi: &[Scalar]) -> Option<String> {
    let eval = |x: &LinComb<usize>| x.eval_linear(|i| phi[*i].clone());
    if eval(&h.one()) != one() {
        return Some("unit".into());
    }
    let n = h.dim();
    for a in 0..n {
        for b in 0..n {
            if eval(&h.mul_basis(&a, &b)) != &phi[a] * &phi[b] {
                return Some(format!("({}, {})", h.labels()[a], h.labels()[b]));
            }
        }
    }
    None
}

/// Group-like elements, as the characters of the dual algebra.
///
/// The result is checked to be closed under multiplication.
pub fn grouplikes(h: &FinDimHopf) -> Result<Vec<SparseVec>> {
    let dual = h.dualize();
    let n = h.dim();
    let found: Vec<SparseVec> = characters(&dual)?
        .into_iter()
        .map(|phi| SparseVec::from_dense(&phi))
        .collect();
    for x in &found {
        if !super::is_grouplike(h, x.coeffs()) {
            return Err(Error::Inconsistent(format!(
                "{} is not group-like",
                h.label(x.coeffs())
            )));
        }
    }
    for x in &found {
        for y in &found {
            let xy = SparseVec::from_lincomb(n, h.mul(x.coeffs(), y.coeffs()))?;
            if !found.contains(&xy) {
                return Err(Error::Inconsistent(
                    "group-likes not closed under multiplication".into(),
                ));
            }
        }
    }
    Ok(found)
}

/// Basis of the primitive subspace `{x : Δx = 1 ⊗ x + x ⊗ 1}`.
pub fn primitives(h: &FinDimHopf) -> Vec<SparseVec> {
    let n = h.dim();
    let one = h.one();
    // column j: Δe_j - 1⊗e_j - e_j⊗1 over the tensor-square basis
    let columns: Vec<LinComb<usize>> = (0..n)
        .map(|j| {
            let ej = LinComb::basis(j);
            let mut col = h.comul_basis(&j);
            col.sub_assign(&crate::linalg::tensor(&one, &ej));
            col.sub_assign(&crate::linalg::tensor(&ej, &one));
            col.map_keys(|(a, b)| a * n + b)
        })
        .collect();
    let m = SparseMat::from_columns(n * n, columns).expect("in range");
    kernel_basis(&m)
}

/// Convolution of two functionals: `(φ ⋆ ψ)(x) = Σ φ(x') ψ(x'')`.
pub fn convolve(h: &FinDimHopf, phi: &[Scalar], psi: &[Scalar]) -> Vec<Scalar> {
    (0..h.dim())
        .map(|x| {
            h.comul_basis(&x)
                .iter()
                .fold(Scalar::zero(), |acc, ((a, b), c)| {
                    acc + c * &phi[*a] * &psi[*b]
                })
        })
        .collect()
}
