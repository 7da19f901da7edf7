//! Crossed modules of Lie algebras.

use crate::error::{Error, Result};
use crate::lie::{representation_witness, FinLieAlgebra, LieModule};
use crate::linalg::{inverse, LinComb, SparseMat};
use crate::report::CheckReport;

/// `μ: m -> n` with `n` acting on `m`; `action[i]` is the matrix of the basis element `n_i`.
///
/// Construction validates shapes only; [`check_lie_xmod`] reports the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieXMod {
    m: FinLieAlgebra,
    n: FinLieAlgebra,
    mu: SparseMat,
    action: Vec<SparseMat>,
}

impl LieXMod {
    pub fn new(
        m: FinLieAlgebra,
        n: FinLieAlgebra,
        mu: SparseMat,
        action: Vec<SparseMat>,
    ) -> Result<Self> {
        let (dm, dn) = (m.dim(), n.dim());
        if mu.rows() != dn || mu.cols() != dm {
            return Err(Error::ShapeMismatch {
                left: (dn, dm),
                right: (mu.rows(), mu.cols()),
            });
        }
        if action.len() != dn {
            return Err(Error::DimensionMismatch {
                expected: dn,
                found: action.len(),
            });
        }
        for a in &action {
            if a.rows() != dm || a.cols() != dm {
                return Err(Error::ShapeMismatch {
                    left: (dm, dm),
                    right: (a.rows(), a.cols()),
                });
            }
        }
        Ok(Self { m, n, mu, action })
    }

    /// `g -> g` with the adjoint action.
    pub fn identity(g: &FinLieAlgebra) -> Self {
        let action = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
        Self::new(g.clone(), g.clone(), SparseMat::identity(g.dim()), action).expect("shapes")
    }

    /// The zero map from an abelian algebra carrying a `g`-module structure.
    pub fn zero_from_module(g: &FinLieAlgebra, v: &LieModule) -> Self {
        let m = FinLieAlgebra::abelian(v.dim());
        Self::new(
            m,
            g.clone(),
            SparseMat::zeros(g.dim(), v.dim()),
            v.action().to_vec(),
        )
        .expect("shapes")
    }

    pub fn m(&self) -> &FinLieAlgebra {
        &self.m
    }

    pub fn n(&self) -> &FinLieAlgebra {
        &self.n
    }

    pub fn mu(&self) -> &SparseMat {
        &self.mu
    }

    pub fn action(&self) -> &[SparseMat] {
        &self.action
    }

    /// `x · v` for `x ∈ n`, `v ∈ m`.
    pub fn act(&self, x: &LinComb<usize>, v: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (i, c) in x.iter() {
            out.add_scaled(&self.action[*i].apply_lc(v), c);
        }
        out
    }

    /// Fails with the first violated axiom.
    pub fn validated(self) -> Result<Self> {
        let report = check_lie_xmod(&self);
        match report.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::AxiomFailure {
                structure: "Lie crossed module".into(),
                law: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
        }
    }
}

/// Verdicts for the Lie crossed-module axioms on all basis pairs.
pub fn check_lie_xmod(x: &LieXMod) -> CheckReport {
    let (m, n) = (&x.m, &x.n);
    let mut report = CheckReport::new();
    report.record("mu is a Lie morphism", m.morphism_witness(n, &x.mu));

    let derivation = (0..n.dim()).find_map(|i| {
        m.derivation_witness(&x.action[i])
            .map(|w| format!("{} on {w}", n.name(i)))
    });
    report.record("action by derivations", derivation);
    report.record(
        "action is a representation",
        representation_witness(n, &x.action),
    );

    let mut equivariance = None;
    'a: for i in 0..n.dim() {
        for j in 0..m.dim() {
            let lhs = x.mu.apply_lc(x.action[i].column(j));
            let rhs = n.bracket(&LinComb::basis(i), x.mu.column(j));
            if lhs != rhs {
                equivariance = Some(format!("n = {}, m = {}", n.name(i), m.name(j)));
                break 'a;
            }
        }
    }
    report.record("(a) mu is equivariant", equivariance);

    let mut peiffer = None;
    'b: for i in 0..m.dim() {
        for j in 0..m.dim() {
            let lhs = x.act(x.mu.column(i), &LinComb::basis(j));
            let rhs = m.bracket_basis(i, j);
            if &lhs != rhs {
                peiffer = Some(format!(
                    "m = {}, m' = {}: mu(m).m' = {}, [m, m'] = {}",
                    m.name(i),
                    m.name(j),
                    m.label(&lhs),
                    m.label(rhs)
                ));
                break 'b;
            }
        }
    }
    report.record("(b) Peiffer identity", peiffer);
    report
}

/// Witness where `(rho, sigma)` fails to be an isomorphism `x -> y`.
pub fn lie_xmod_iso_witness(
    x: &LieXMod,
    y: &LieXMod,
    rho: &SparseMat,
    sigma: &SparseMat,
) -> Option<String> {
    if let Some(w) = x.m.isomorphism_witness(&y.m, rho) {
        return Some(format!("on m: {w}"));
    }
    if let Some(w) = x.n.isomorphism_witness(&y.n, sigma) {
        return Some(format!("on n: {w}"));
    }
    let report = super::morphism::lie_xmod_morphism(x, y, rho, sigma);
    report
        .first_failure()
        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

/// Inverse pair of an isomorphism, for the reverse direction.
pub fn invert_pair(rho: &SparseMat, sigma: &SparseMat) -> Option<(SparseMat, SparseMat)> {
    Some((inverse(rho).ok()??, inverse(sigma).ok()??))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, SparseVec};

    pub(crate) fn center_heis3() -> LieXMod {
        let g = FinLieAlgebra::heis3();
        let (z, incl) = g.subalgebra(&[SparseVec::unit(3, 2)]).unwrap();
        // z is central, so every element acts by zero
        LieXMod::new(z, g, incl, vec![SparseMat::zeros(1, 1); 3]).unwrap()
    }

    #[test]
    fn center_inclusion_passes() {
        assert!(check_lie_xmod(&center_heis3()).all_passed());
    }

    #[test]
    fn zero_module_map_passes() {
        let g = FinLieAlgebra::sl2();
        let e = SparseMat::from_int_rows(&[&[0, 1], &[0, 0]]);
        let f = SparseMat::from_int_rows(&[&[0, 0], &[1, 0]]);
        let h = SparseMat::from_int_rows(&[&[1, 0], &[0, -1]]);
        let v = LieModule::new(&g, 2, vec![e, f, h]).unwrap();
        assert!(check_lie_xmod(&LieXMod::zero_from_module(&g, &v)).all_passed());
    }

    #[test]
    fn sl2_to_zero_fails_peiffer() {
        let g = FinLieAlgebra::sl2();
        let zero = FinLieAlgebra::abelian(0);
        let x = LieXMod::new(g, zero, SparseMat::zeros(0, 3), vec![]).unwrap();
        let report = check_lie_xmod(&x);
        let bad = report.first_failure().unwrap();
        assert_eq!(bad.name, "(b) Peiffer identity");
        assert!(bad.witness.as_ref().unwrap().starts_with("m = e, m' = f"));
    }

    #[test]
    fn identity_passes() {
        for g in [
            FinLieAlgebra::sl2(),
            FinLieAlgebra::heis3(),
            FinLieAlgebra::affine2(),
        ] {
            assert!(check_lie_xmod(&LieXMod::identity(&g)).all_passed());
        }
    }

    #[test]
    fn iso_witness_rejects_singular_maps() {
        let x = LieXMod::identity(&FinLieAlgebra::heis3());
        let id = SparseMat::identity(3);
        assert_eq!(lie_xmod_iso_witness(&x, &x, &id, &id), None);
        let zero = SparseMat::zeros(3, 3);
        assert!(lie_xmod_iso_witness(&x, &x, &zero, &zero).is_some());
        let scaled = id.scale(&int(2));
        // 2·id is not a Lie morphism of heis3
        assert!(lie_xmod_iso_witness(&x, &x, &scaled, &scaled).is_some());
    }
}
