use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::linalg::{int, one, LinComb, Scalar, SparseMat, SparseVec};
use crate::report::CheckReport;

use super::{hopf_axioms, AxiomScope, HopfAlgebra, Tensor};

/// Raw structure tensors of a finite-dimensional Hopf algebra.
///
/// `mult[i * dim + j]` is `e_i e_j`; `comult[k]` is `Δ(e_k)` over the tensor-square basis
/// where `(i, j)` has index `i * dim + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfParts {
    pub dim: usize,
    pub mult: Vec<LinComb<usize>>,
    pub unit: LinComb<usize>,
    pub comult: Vec<LinComb<usize>>,
    pub counit: Vec<Scalar>,
    pub antipode: SparseMat,
    pub labels: Option<Vec<String>>,
}

/// A Hopf algebra on the basis `e_0 .. e_{dim-1}`; every law is verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimHopf {
    dim: usize,
    mult: Vec<LinComb<usize>>,
    unit: LinComb<usize>,
    comult: Vec<LinComb<usize>>,
    counit: Vec<Scalar>,
    antipode: SparseMat,
    labels: Vec<String>,
}

/// An element together with the algebra it lives in.
#[derive(Debug, Clone)]
pub struct HopfElement<'a> {
    pub algebra: &'a FinDimHopf,
    pub coords: SparseVec,
}

impl<'a> HopfElement<'a> {
    pub fn new(algebra: &'a FinDimHopf, coords: SparseVec) -> Result<Self> {
        if coords.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: coords.dim(),
            });
        }
        Ok(Self { algebra, coords })
    }

    pub fn basis(algebra: &'a FinDimHopf, i: usize) -> Self {
        Self {
            algebra,
            coords: SparseVec::unit(algebra.dim(), i),
        }
    }

    fn same_algebra(&self, other: &HopfElement<'_>) -> Result<()> {
        if std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn mul(&self, other: &HopfElement<'_>) -> Result<HopfElement<'a>> {
        self.same_algebra(other)?;
        let c = self
            .algebra
            .mul(self.coords.coeffs(), other.coords.coeffs());
        HopfElement::new(
            self.algebra,
            SparseVec::from_lincomb(self.algebra.dim(), c)?,
        )
    }

    /// `ad(self)(x)`.
    pub fn adjoint_action(&self, x: &HopfElement<'_>) -> Result<HopfElement<'a>> {
        self.same_algebra(x)?;
        let c = self
            .algebra
            .adjoint_action(self.coords.coeffs(), x.coords.coeffs());
        HopfElement::new(
            self.algebra,
            SparseVec::from_lincomb(self.algebra.dim(), c)?,
        )
    }

    /// `coad(self)` over the tensor-square basis.
    pub fn adjoint_coaction(&self) -> SparseVec {
        self.algebra
            .flatten(&self.algebra.adjoint_coaction(self.coords.coeffs()))
    }
}

impl FinDimHopf {
    /// Validates all Hopf laws; fails with the first violated law and its witness.
    pub fn new(parts: HopfParts) -> Result<Self> {
        let h = Self::from_parts_unchecked(parts)?;
        let report = h.verify_hopf();
        if let Some(c) = report.first_failure() {
            return Err(Error::invalid(
                "Hopf algebra",
                &c.name,
                c.witness.clone().unwrap_or_default(),
            ));
        }
        Ok(h)
    }

    fn from_parts_unchecked(parts: HopfParts) -> Result<Self> {
        let n = parts.dim;
        let shape = |what: &str, found: usize, expected: usize| -> Result<()> {
            if found != expected {
                return Err(Error::invalid(
                    "Hopf algebra",
                    what,
                    format!("{found} entries, expected {expected}"),
                ));
            }
            Ok(())
        };
        shape("multiplication table", parts.mult.len(), n * n)?;
        shape("comultiplication", parts.comult.len(), n)?;
        shape("counit", parts.counit.len(), n)?;
        if parts.antipode.rows() != n || parts.antipode.cols() != n {
            return Err(Error::invalid(
                "Hopf algebra",
                "antipode shape",
                format!("{}x{}", parts.antipode.rows(), parts.antipode.cols()),
            ));
        }
        let in_range = |lc: &LinComb<usize>, bound: usize| lc.keys().all(|&k| k < bound);
        if !parts.mult.iter().all(|m| in_range(m, n)) || !in_range(&parts.unit, n) {
            return Err(Error::invalid(
                "Hopf algebra",
                "basis index range",
                "multiplication",
            ));
        }
        if !parts.comult.iter().all(|m| in_range(m, n * n)) {
            return Err(Error::invalid(
                "Hopf algebra",
                "basis index range",
                "comultiplication",
            ));
        }
        let labels = match parts.labels {
            Some(l) => {
                shape("labels", l.len(), n)?;
                l
            }
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        Ok(Self {
            dim: n,
            mult: parts.mult,
            unit: parts.unit,
            comult: parts.comult,
            counit: parts.counit,
            antipode: parts.antipode,
            labels,
        })
    }

    pub fn parts(&self) -> HopfParts {
        HopfParts {
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            labels: Some(self.labels.clone()),
        }
    }

    /// The exhaustive law suite: associativity, unit, coassociativity, counit,
    /// bialgebra compatibility and the antipode convolution identity.
    pub fn verify_hopf(&self) -> CheckReport {
        let basis: Vec<usize> = (0..self.dim).collect();
        hopf_axioms(
            self,
            AxiomScope {
                elements: &basis,
                assoc_triples: None,
                pairs: None,
            },
        )
    }

    /// The ground field as a one-dimensional Hopf algebra.
    pub fn base_field() -> Self {
        Self::group_algebra(&FinGroup::trivial())
    }

    /// `kG`: basis the group elements, `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group_algebra(g: &FinGroup) -> Self {
        let n = g.order();
        let mult = (0..n * n)
            .map(|k| LinComb::basis(g.mul(k / n, k % n)))
            .collect();
        let comult = (0..n).map(|a| LinComb::basis(a * n + a)).collect();
        let antipode =
            SparseMat::from_columns(n, (0..n).map(|a| LinComb::basis(g.inv(a))).collect())
                .expect("inverse in range");
        Self::new(HopfParts {
            dim: n,
            mult,
            unit: LinComb::basis(g.unit()),
            comult,
            counit: vec![one(); n],
            antipode,
            labels: Some(g.labels().to_vec()),
        })
        .expect("group algebras satisfy the Hopf laws")
    }

    /// `k^G`: indicator functions `δ_g` with pointwise product and
    /// `Δ(δ_g) = Σ_h δ_h ⊗ δ_{h⁻¹g}`.
    pub fn function_algebra(g: &FinGroup) -> Self {
        let n = g.order();
        let mult = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    LinComb::basis(k / n)
                } else {
                    LinComb::new()
                }
            })
            .collect();
        let comult = (0..n)
            .map(|a| {
                (0..n)
                    .map(|h| (h * n + g.mul(g.inv(h), a), one()))
                    .collect()
            })
            .collect();
        let counit = (0..n)
            .map(|a| if a == g.unit() { one() } else { int(0) })
            .collect();
        let antipode =
            SparseMat::from_columns(n, (0..n).map(|a| LinComb::basis(g.inv(a))).collect())
                .expect("inverse in range");
        Self::new(HopfParts {
            dim: n,
            mult,
            unit: (0..n).map(|a| (a, one())).collect(),
            comult,
            counit,
            antipode,
            labels: Some(g.labels().iter().map(|l| format!("δ{l}")).collect()),
        })
        .expect("function algebras satisfy the Hopf laws")
    }

    /// Linear dual on the dual basis: product and coproduct swap roles by transposition.
    pub fn dualize(&self) -> Self {
        let n = self.dim;
        let mut mult = vec![LinComb::new(); n * n];
        for (k, d) in self.comult.iter().enumerate() {
            for (ij, c) in d.iter() {
                mult[*ij].add_term(k, c.clone());
            }
        }
        let comult = (0..n)
            .map(|k| (0..n * n).map(|ij| (ij, self.mult[ij].coeff(&k))).collect())
            .collect();
        let unit = self
            .counit
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let counit = (0..n).map(|i| self.unit.coeff(&i)).collect();
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            })
            .collect();
        Self::new(HopfParts {
            dim: n,
            mult,
            unit,
            comult,
            counit,
            antipode: self.antipode.transpose(),
            labels: Some(labels),
        })
        .expect("the dual of a finite-dimensional Hopf algebra is a Hopf algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn antipode_matrix(&self) -> &SparseMat {
        &self.antipode
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn unit_vec(&self) -> SparseVec {
        SparseVec::from_lincomb(self.dim, self.unit.clone()).expect("unit in range")
    }

    /// Matrix of left multiplication by `e_b`.
    pub fn left_mult_matrix(&self, b: usize) -> SparseMat {
        let n = self.dim;
        SparseMat::from_columns(n, (0..n).map(|j| self.mult[b * n + j].clone()).collect())
            .expect("in range")
    }

    /// `(i, j) -> i * dim + j`
    pub fn flatten(&self, t: &Tensor<usize>) -> SparseVec {
        SparseVec::from_lincomb(self.dim * self.dim, t.map_keys(|(i, j)| i * self.dim + j))
            .expect("in range")
    }

    pub fn unflatten(&self, v: &LinComb<usize>) -> Tensor<usize> {
        v.map_keys(|k| (k / self.dim, k % self.dim))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        self.comult.iter().all(|d| {
            let flipped: LinComb<usize> = d.map_keys(|k| (k % n) * n + k / n);
            &flipped == d
        })
    }
}

impl HopfAlgebra for FinDimHopf {
    type Basis = usize;

    fn one(&self) -> LinComb<usize> {
        self.unit.clone()
    }

    fn mul_basis(&self, a: &usize, b: &usize) -> LinComb<usize> {
        self.mult[a * self.dim + b].clone()
    }

    fn comul_basis(&self, a: &usize) -> Tensor<usize> {
        self.unflatten(&self.comult[*a])
    }

    fn counit_basis(&self, a: &usize) -> Scalar {
        self.counit[*a].clone()
    }

    fn antipode_basis(&self, a: &usize) -> LinComb<usize> {
        self.antipode.column(*a).clone()
    }

    fn test_basis(&self, _max_degree: usize) -> Vec<usize> {
        (0..self.dim).collect()
    }

    fn basis_label(&self, a: &usize) -> String {
        self.labels[*a].clone()
    }
}
