//! Crossed comodules of finite-dimensional Hopf algebras.

use crate::error::{Error, Result};
use crate::hopf::{FinDimHopf, HopfAlgebra, Tensor};
use crate::linalg::{tensor, LinComb, SparseMat};
use crate::report::CheckReport;

use super::morphism::hopf_morphism_report;

/// A Hopf morphism `ζ: K -> L` and a coaction `ρ: L -> K ⊗ L`.
///
/// `zeta` is `dim L × dim K`. `rho` is `(dim K · dim L) × dim L` with `(k, l)` at row
/// `k · dim L + l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfCoComod {
    pub k: FinDimHopf,
    pub l: FinDimHopf,
    pub zeta: SparseMat,
    pub rho: SparseMat,
}

impl HopfCoComod {
    pub fn new(k: FinDimHopf, l: FinDimHopf, zeta: SparseMat, rho: SparseMat) -> Result<Self> {
        let (dk, dl) = (k.dim(), l.dim());
        if zeta.rows() != dl || zeta.cols() != dk {
            return Err(Error::ShapeMismatch {
                left: (dl, dk),
                right: (zeta.rows(), zeta.cols()),
            });
        }
        if rho.rows() != dk * dl || rho.cols() != dl {
            return Err(Error::ShapeMismatch {
                left: (dk * dl, dl),
                right: (rho.rows(), rho.cols()),
            });
        }
        Ok(Self { k, l, zeta, rho })
    }

    /// `ζ = id: H -> H` with the adjoint coaction.
    pub fn identity(h: &FinDimHopf) -> Self {
        let n = h.dim();
        let cols = (0..n)
            .map(|i| {
                h.adjoint_coaction(&LinComb::basis(i))
                    .map_keys(|(a, b)| a * n + b)
            })
            .collect();
        let rho = SparseMat::from_columns(n * n, cols).expect("in range");
        Self::new(h.clone(), h.clone(), SparseMat::identity(n), rho).expect("shapes")
    }

    /// `ρ(e_l)` as a tensor over `K ⊗ L`.
    pub fn coact_basis(&self, l: usize) -> Tensor<usize> {
        let dl = self.l.dim();
        self.rho.column(l).map_keys(|i| (i / dl, i % dl))
    }

    pub fn coact(&self, x: &LinComb<usize>) -> Tensor<usize> {
        x.map_linear(|l| self.coact_basis(*l))
    }

    fn zeta_lin(&self, x: &LinComb<usize>) -> LinComb<usize> {
        self.zeta.apply_lc(x)
    }
}

/// Verdicts for the crossed-comodule laws on every basis element (and pair).
pub fn check_hopf_cocomod(x: &HopfCoComod) -> CheckReport {
    let (k, l) = (&x.k, &x.l);
    let lk = |i: usize| k.labels()[i].clone();
    let ll = |i: usize| l.labels()[i].clone();
    let dl = l.dim();
    let mut report = CheckReport::new();

    let zeta = |i: &usize| x.zeta.column(*i).clone();
    let k_elems: Vec<usize> = (0..k.dim()).collect();
    report.extend_prefixed("zeta: ", hopf_morphism_report(k, l, &zeta, &k_elems));

    let counit = (0..dl).find_map(|j| {
        let v: LinComb<usize> = x
            .coact_basis(j)
            .iter()
            .map(|((a, b), c)| (*b, c * k.counit_basis(a)))
            .collect();
        (v != LinComb::basis(j)).then(|| ll(j))
    });
    report.record("(i) comodule counit", counit);

    let coassoc = (0..dl).find_map(|j| {
        let mut lhs: LinComb<(usize, usize, usize)> = LinComb::new();
        let mut rhs: LinComb<(usize, usize, usize)> = LinComb::new();
        for ((a, b), c) in x.coact_basis(j).iter() {
            for ((a2, b2), c2) in x.coact_basis(*b).iter() {
                lhs.add_term((*a, *a2, *b2), c * c2);
            }
            for ((a1, a2), c2) in k.comul_basis(a).iter() {
                rhs.add_term((*a1, *a2, *b), c * c2);
            }
        }
        (lhs != rhs).then(|| ll(j))
    });
    report.record("(i) comodule coassociativity", coassoc);

    let unit_ok = x.coact(&l.one()) == tensor(&k.one(), &l.one());
    let mut algebra = (!unit_ok).then(|| "unit".to_string());
    'alg: for a in 0..dl {
        if algebra.is_some() {
            break;
        }
        for b in 0..dl {
            let lhs = x.coact(&l.mul_basis(&a, &b));
            let rhs = k.tensor_mul(&x.coact_basis(a), &x.coact_basis(b));
            if lhs != rhs {
                algebra = Some(format!("({}, {})", ll(a), ll(b)));
                break 'alg;
            }
        }
    }
    report.record("(i) comodule algebra", algebra);

    // ρ_{L⊗L}(a ⊗ b) = Σ a_{(-1)} b_{(-1)} ⊗ a_{(0)} ⊗ b_{(0)}
    let coalgebra = (0..dl).find_map(|j| {
        let mut lhs: LinComb<(usize, usize, usize)> = LinComb::new();
        for ((a, b), c) in l.comul_basis(&j).iter() {
            for ((ka, la), c1) in x.coact_basis(*a).iter() {
                for ((kb, lb), c2) in x.coact_basis(*b).iter() {
                    for (kk, c3) in k.mul_basis(ka, kb).iter() {
                        lhs.add_term((*kk, *la, *lb), c * c1 * c2 * c3);
                    }
                }
            }
        }
        let mut rhs: LinComb<(usize, usize, usize)> = LinComb::new();
        let mut counit_side = LinComb::new();
        for ((kk, lj), c) in x.coact_basis(j).iter() {
            for ((l1, l2), c2) in l.comul_basis(lj).iter() {
                rhs.add_term((*kk, *l1, *l2), c * c2);
            }
            counit_side.add_term(*kk, c * l.counit_basis(lj));
        }
        let counit_ok = counit_side == k.one().scaled(&l.counit_basis(&j));
        (lhs != rhs || !counit_ok).then(|| ll(j))
    });
    report.record("(i) comodule coalgebra", coalgebra);

    let equivariance = (0..k.dim()).find_map(|j| {
        let lhs = x.coact(&x.zeta_lin(&LinComb::basis(j)));
        let mut rhs = LinComb::new();
        for ((a, b), c) in k.adjoint_coaction(&LinComb::basis(j)).iter() {
            rhs.add_scaled(&tensor(&LinComb::basis(*a), x.zeta.column(*b)), c);
        }
        (lhs != rhs).then(|| lk(j))
    });
    report.record("(ii) coaction is equivariant", equivariance);

    let peiffer = (0..dl).find_map(|j| {
        let mut lhs = LinComb::new();
        for ((a, b), c) in x.coact_basis(j).iter() {
            lhs.add_scaled(&tensor(x.zeta.column(*a), &LinComb::basis(*b)), c);
        }
        (lhs != l.adjoint_coaction(&LinComb::basis(j))).then(|| ll(j))
    });
    report.record("(iii) coaction Peiffer identity", peiffer);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;
    use crate::linalg::int;

    #[test]
    fn adjoint_coaction_on_functions_of_c2() {
        let f = FinDimHopf::function_algebra(&FinGroup::cyclic(2));
        let report = check_hopf_cocomod(&HopfCoComod::identity(&f));
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn adjoint_coaction_on_functions_of_s3() {
        let f = FinDimHopf::function_algebra(&FinGroup::symmetric(3));
        let report = check_hopf_cocomod(&HopfCoComod::identity(&f));
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn corrupted_coaction_fails_counit() {
        let f = FinDimHopf::function_algebra(&FinGroup::cyclic(2));
        let mut x = HopfCoComod::identity(&f);
        x.rho = x.rho.scale(&int(2));
        let report = check_hopf_cocomod(&x);
        let c = report.get("(i) comodule counit").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some(f.labels()[0].as_str()));
    }
}
