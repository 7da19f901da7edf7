//! Crossed modules of Hopf algebras, finite-dimensional or enveloping.

use std::sync::Arc;

use rayon::prelude::*;

use crate::enveloping::{extend_generator_map, lie_map_images, EnvelopingAction, UEnvelope, UPoly};
use crate::error::{Error, Result};
use crate::hopf::{FinDimHopf, HopfAlgebra};
use crate::linalg::{tensor, LinComb, SparseMat};
use crate::report::CheckReport;

use super::lie_xmod::LieXMod;
use super::morphism::hopf_morphism_report;

/// A Hopf morphism `γ: B -> H` with an action `φ: H ⊗ B -> B`, both on finite bases.
///
/// `gamma` is `dim H × dim B`; `phi[h]` is the `dim B × dim B` matrix of `e_h · -`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHopfXMod {
    pub b: FinDimHopf,
    pub h: FinDimHopf,
    pub gamma: SparseMat,
    pub phi: Vec<SparseMat>,
}

impl FiniteHopfXMod {
    pub fn new(
        b: FinDimHopf,
        h: FinDimHopf,
        gamma: SparseMat,
        phi: Vec<SparseMat>,
    ) -> Result<Self> {
        let (db, dh) = (b.dim(), h.dim());
        if gamma.rows() != dh || gamma.cols() != db {
            return Err(Error::ShapeMismatch {
                left: (dh, db),
                right: (gamma.rows(), gamma.cols()),
            });
        }
        if phi.len() != dh {
            return Err(Error::DimensionMismatch {
                expected: dh,
                found: phi.len(),
            });
        }
        for p in &phi {
            if p.rows() != db || p.cols() != db {
                return Err(Error::ShapeMismatch {
                    left: (db, db),
                    right: (p.rows(), p.cols()),
                });
            }
        }
        Ok(Self { b, h, gamma, phi })
    }

    /// `id: H -> H` with the adjoint action.
    pub fn identity(h: &FinDimHopf) -> Self {
        let n = h.dim();
        let phi = (0..n)
            .map(|a| {
                let cols = (0..n)
                    .map(|x| h.adjoint_action(&LinComb::basis(a), &LinComb::basis(x)))
                    .collect();
                SparseMat::from_columns(n, cols).expect("in range")
            })
            .collect();
        Self::new(h.clone(), h.clone(), SparseMat::identity(n), phi).expect("shapes")
    }

    /// `k -> H` by the unit, with `H` acting on `k` through the counit.
    pub fn unit_inclusion(h: &FinDimHopf) -> Self {
        let gamma = SparseMat::from_columns(h.dim(), vec![h.one()]).expect("in range");
        let phi = h
            .counit_vec()
            .iter()
            .map(|c| SparseMat::identity(1).scale(c))
            .collect();
        Self::new(FinDimHopf::base_field(), h.clone(), gamma, phi).expect("shapes")
    }

    pub fn act(&self, h: &LinComb<usize>, b: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (i, c) in h.iter() {
            out.add_scaled(&self.phi[*i].apply_lc(b), c);
        }
        out
    }
}

/// `U(μ): U(m) -> U(n)` with the extended action, built from a Lie crossed module.
#[derive(Debug, Clone)]
pub struct EnvelopingHopfXMod {
    pub lie: LieXMod,
    pub b: Arc<UEnvelope>,
    pub h: Arc<UEnvelope>,
    pub gamma: Vec<UPoly>,
    pub action: EnvelopingAction,
}

impl EnvelopingHopfXMod {
    /// Fails when the action is not by derivations or does not respect brackets.
    pub fn new(lie: LieXMod) -> Result<Self> {
        let b = Arc::new(UEnvelope::new(lie.m().clone()));
        let h = Arc::new(UEnvelope::new(lie.n().clone()));
        let gamma = lie_map_images(&h, lie.mu());
        let action = EnvelopingAction::new(h.clone(), b.clone(), lie.action().to_vec())?;
        Ok(Self {
            lie,
            b,
            h,
            gamma,
            action,
        })
    }

    pub fn gamma_poly(&self, x: &UPoly) -> UPoly {
        x.map_linear(|m| extend_generator_map(&self.h, &self.gamma, m))
    }
}

#[derive(Debug, Clone)]
pub enum HopfXMod {
    Finite(FiniteHopfXMod),
    Enveloping(EnvelopingHopfXMod),
}

impl HopfXMod {
    pub fn kind(&self) -> &'static str {
        match self {
            HopfXMod::Finite(_) => "finite",
            HopfXMod::Enveloping(_) => "enveloping",
        }
    }
}

/// `γ` on basis elements.
pub type GammaFn<'a, B, H> =
    &'a (dyn Fn(&<B as HopfAlgebra>::Basis) -> LinComb<<H as HopfAlgebra>::Basis> + Sync);
/// `φ(h, b)` on basis elements.
pub type PhiFn<'a, B, H> = &'a (dyn Fn(
    &<H as HopfAlgebra>::Basis,
    &<B as HopfAlgebra>::Basis,
) -> LinComb<<B as HopfAlgebra>::Basis>
         + Sync);

/// The data of a Hopf crossed module as basis-level maps, for the generic checker.
pub struct XModLawData<'a, B: HopfAlgebra, H: HopfAlgebra> {
    pub b: &'a B,
    pub h: &'a H,
    pub gamma: GammaFn<'a, B, H>,
    pub phi: PhiFn<'a, B, H>,
    pub b_elems: &'a [B::Basis],
    pub h_elems: &'a [H::Basis],
}

impl<B: HopfAlgebra, H: HopfAlgebra> XModLawData<'_, B, H> {
    fn phi_lin(&self, h: &LinComb<H::Basis>, b: &LinComb<B::Basis>) -> LinComb<B::Basis> {
        let mut out = LinComb::new();
        for (x, c1) in h.iter() {
            for (y, c2) in b.iter() {
                out.add_scaled(&(self.phi)(x, y), &(c1 * c2));
            }
        }
        out
    }

    fn gamma_lin(&self, b: &LinComb<B::Basis>) -> LinComb<H::Basis> {
        b.map_linear(|k| (self.gamma)(k))
    }
}

/// Every law of a Hopf crossed module, on the given basis elements.
///
/// `γ` is checked to be a Hopf morphism; then (i) `B` is an `H`-module, module algebra and
/// module coalgebra, (ii) `γ(h·b) = ad_H(h)(γ b)`, (iii) `γ(b)·b' = ad_B(b)(b')`.
pub fn check_xmod_laws<B: HopfAlgebra, H: HopfAlgebra>(
    data: &XModLawData<'_, B, H>,
) -> CheckReport {
    let (b, h) = (data.b, data.h);
    let lb = |x: &B::Basis| b.basis_label(x);
    let lh = |x: &H::Basis| h.basis_label(x);
    let mut report = CheckReport::new();
    report.extend_prefixed(
        "gamma: ",
        hopf_morphism_report(b, h, data.gamma, data.b_elems),
    );

    let hb: Vec<(H::Basis, B::Basis)> = data
        .h_elems
        .iter()
        .flat_map(|x| data.b_elems.iter().map(move |y| (x.clone(), y.clone())))
        .collect();

    let unit_acts = data.b_elems.iter().find_map(|y| {
        let v = data.phi_lin(&h.one(), &LinComb::basis(y.clone()));
        (v != LinComb::basis(y.clone())).then(|| format!("1 acting on {}", lb(y)))
    });
    let module = unit_acts.or_else(|| {
        hb.par_iter().find_map_first(|(x2, y)| {
            let inner = (data.phi)(x2, y);
            data.h_elems.iter().find_map(|x1| {
                let lhs = data.phi_lin(&h.mul_basis(x1, x2), &LinComb::basis(y.clone()));
                let rhs = data.phi_lin(&LinComb::basis(x1.clone()), &inner);
                (lhs != rhs).then(|| format!("h = {}, h' = {}, b = {}", lh(x1), lh(x2), lb(y)))
            })
        })
    });
    report.record("(i) module", module);

    let unit_fixed = data.h_elems.iter().find_map(|x| {
        let v = data.phi_lin(&LinComb::basis(x.clone()), &b.one());
        (v != b.one().scaled(&h.counit_basis(x))).then(|| format!("{} acting on 1", lh(x)))
    });
    let module_algebra = unit_fixed.or_else(|| {
        hb.par_iter().find_map_first(|(x, y1)| {
            let dx = h.comul_basis(x);
            data.b_elems.iter().find_map(|y2| {
                let lhs = data.phi_lin(&LinComb::basis(x.clone()), &b.mul_basis(y1, y2));
                let mut rhs = LinComb::new();
                for ((x1, x2), c) in dx.iter() {
                    let left = (data.phi)(x1, y1);
                    let right = (data.phi)(x2, y2);
                    rhs.add_scaled(&b.mul(&left, &right), c);
                }
                (lhs != rhs).then(|| format!("h = {}, b = {}, b' = {}", lh(x), lb(y1), lb(y2)))
            })
        })
    });
    report.record("(i) module algebra", module_algebra);

    let module_coalgebra = hb.par_iter().find_map_first(|(x, y)| {
        let acted = (data.phi)(x, y);
        let lhs = b.comul(&acted);
        let mut rhs = LinComb::new();
        for ((x1, x2), c1) in h.comul_basis(x).iter() {
            for ((y1, y2), c2) in b.comul_basis(y).iter() {
                let t = tensor(&(data.phi)(x1, y1), &(data.phi)(x2, y2));
                rhs.add_scaled(&t, &(c1 * c2));
            }
        }
        let counit_ok = b.counit(&acted) == h.counit_basis(x) * b.counit_basis(y);
        (lhs != rhs || !counit_ok).then(|| format!("h = {}, b = {}", lh(x), lb(y)))
    });
    report.record("(i) module coalgebra", module_coalgebra);

    let equivariance = hb.par_iter().find_map_first(|(x, y)| {
        let lhs = data.gamma_lin(&(data.phi)(x, y));
        let rhs = h.adjoint_action(&LinComb::basis(x.clone()), &(data.gamma)(y));
        (lhs != rhs).then(|| format!("h = {}, b = {}", lh(x), lb(y)))
    });
    report.record("(ii) gamma is equivariant", equivariance);

    let bb: Vec<(B::Basis, B::Basis)> = data
        .b_elems
        .iter()
        .flat_map(|x| data.b_elems.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let peiffer = bb.par_iter().find_map_first(|(y1, y2)| {
        let lhs = data.phi_lin(&(data.gamma)(y1), &LinComb::basis(y2.clone()));
        let rhs = b.adjoint_action(&LinComb::basis(y1.clone()), &LinComb::basis(y2.clone()));
        (lhs != rhs).then(|| {
            format!(
                "b = {}, b' = {}: gamma(b).b' = {}, ad(b)(b') = {}",
                lb(y1),
                lb(y2),
                b.label(&lhs),
                b.label(&rhs)
            )
        })
    });
    report.record("(iii) Peiffer identity", peiffer);
    report
}

/// Crossed module law verdicts: every basis element for finite algebras, PBW monomials of degree at most
/// `d` for enveloping ones.
pub fn check_hopf_xmod(x: &HopfXMod, d: usize) -> CheckReport {
    match x {
        HopfXMod::Finite(f) => {
            let gamma = |i: &usize| f.gamma.column(*i).clone();
            let phi = |a: &usize, i: &usize| f.phi[*a].column(*i).clone();
            let b_elems: Vec<usize> = (0..f.b.dim()).collect();
            let h_elems: Vec<usize> = (0..f.h.dim()).collect();
            check_xmod_laws(&XModLawData {
                b: &f.b,
                h: &f.h,
                gamma: &gamma,
                phi: &phi,
                b_elems: &b_elems,
                h_elems: &h_elems,
            })
        }
        HopfXMod::Enveloping(e) => {
            let gamma =
                |m: &crate::enveloping::PbwMonomial| extend_generator_map(&e.h, &e.gamma, m);
            let phi = |a: &crate::enveloping::PbwMonomial, m: &crate::enveloping::PbwMonomial| {
                e.action.act_basis(a, m)
            };
            let b_elems = e.b.monomials_up_to(d);
            let h_elems = e.h.monomials_up_to(d);
            check_xmod_laws(&XModLawData {
                b: e.b.as_ref(),
                h: e.h.as_ref(),
                gamma: &gamma,
                phi: &phi,
                b_elems: &b_elems,
                h_elems: &h_elems,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;

    #[test]
    fn identity_on_group_algebra_passes() {
        let h = FinDimHopf::group_algebra(&FinGroup::symmetric(3));
        let report = check_hopf_xmod(&HopfXMod::Finite(FiniteHopfXMod::identity(&h)), 0);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn unit_inclusion_passes() {
        let h = FinDimHopf::group_algebra(&FinGroup::cyclic(3));
        let report = check_hopf_xmod(&HopfXMod::Finite(FiniteHopfXMod::unit_inclusion(&h)), 0);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn counit_to_base_field_breaks_peiffer() {
        let b = FinDimHopf::group_algebra(&FinGroup::symmetric(3));
        let h = FinDimHopf::base_field();
        let gamma = SparseMat::from_dense_rows(&[b.counit_vec().to_vec()], 6).unwrap();
        let x = FiniteHopfXMod::new(b, h, gamma, vec![SparseMat::identity(6)]).unwrap();
        let report = check_hopf_xmod(&HopfXMod::Finite(x), 0);
        let bad: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].name, "(iii) Peiffer identity");
    }

    #[test]
    fn center_of_heis3_envelope_passes() {
        let g = crate::lie::FinLieAlgebra::heis3();
        let (z, incl) = g
            .subalgebra(&[crate::linalg::SparseVec::unit(3, 2)])
            .unwrap();
        let lie = LieXMod::new(z, g, incl, vec![SparseMat::zeros(1, 1); 3]).unwrap();
        let x = HopfXMod::Enveloping(EnvelopingHopfXMod::new(lie).unwrap());
        let report = check_hopf_xmod(&x, 3);
        assert!(report.all_passed(), "{report:?}");
    }
}
