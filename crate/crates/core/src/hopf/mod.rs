//! Hopf algebras on a (possibly infinite) basis, and the finite-dimensional case.

mod finite;
mod structure;

pub use finite::{FinDimHopf, HopfElement, HopfParts};
pub use structure::{character_witness, characters, convolve, grouplikes, primitives};

use std::fmt::Debug;
use std::hash::Hash;

use crate::linalg::{LinComb, Scalar};
use crate::report::CheckReport;

pub type Tensor<B> = LinComb<(B, B)>;
pub type Tensor3<B> = LinComb<(B, B, B)>;

/// Structure maps of a Hopf algebra given on basis elements and extended linearly.
///
/// `test_basis(d)` lists the basis elements exhaustive checks run over: all of them for
/// a finite-dimensional algebra, the PBW monomials of degree at most `d` otherwise.
pub trait HopfAlgebra: Send + Sync {
    type Basis: Clone + Ord + Hash + Debug + Send + Sync;

    fn one(&self) -> LinComb<Self::Basis>;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn comul_basis(&self, a: &Self::Basis) -> Tensor<Self::Basis>;
    fn counit_basis(&self, a: &Self::Basis) -> Scalar;
    fn antipode_basis(&self, a: &Self::Basis) -> LinComb<Self::Basis>;
    fn test_basis(&self, max_degree: usize) -> Vec<Self::Basis>;
    fn basis_label(&self, a: &Self::Basis) -> String;

    fn mul(&self, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::new();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_scaled(&self.mul_basis(ka, kb), &(ca * cb));
            }
        }
        out
    }

    fn comul(&self, a: &LinComb<Self::Basis>) -> Tensor<Self::Basis> {
        a.map_linear(|k| self.comul_basis(k))
    }

    fn counit(&self, a: &LinComb<Self::Basis>) -> Scalar {
        a.eval_linear(|k| self.counit_basis(k))
    }

    fn antipode(&self, a: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        a.map_linear(|k| self.antipode_basis(k))
    }

    /// Componentwise product in `H ⊗ H`.
    fn tensor_mul(&self, x: &Tensor<Self::Basis>, y: &Tensor<Self::Basis>) -> Tensor<Self::Basis> {
        let mut out = LinComb::new();
        for ((a1, a2), c1) in x.iter() {
            for ((b1, b2), c2) in y.iter() {
                let left = self.mul_basis(a1, b1);
                let right = self.mul_basis(a2, b2);
                out.add_scaled(&crate::linalg::tensor(&left, &right), &(c1 * c2));
            }
        }
        out
    }

    /// `ad(h)(x) = sum h' x S(h'')`.
    fn adjoint_action(
        &self,
        h: &LinComb<Self::Basis>,
        x: &LinComb<Self::Basis>,
    ) -> LinComb<Self::Basis> {
        let mut out = LinComb::new();
        for ((h1, h2), c) in self.comul(h).iter() {
            let left = self.mul(&LinComb::basis(h1.clone()), x);
            let right = self.antipode_basis(h2);
            out.add_scaled(&self.mul(&left, &right), c);
        }
        out
    }

    /// `coad(x) = sum x' S(x''') ⊗ x''`.
    fn adjoint_coaction(&self, x: &LinComb<Self::Basis>) -> Tensor<Self::Basis> {
        let mut out = LinComb::new();
        for ((x1, x23), c) in self.comul(x).iter() {
            for ((x2, x3), c2) in self.comul_basis(x23).iter() {
                let left = self.mul(&LinComb::basis(x1.clone()), &self.antipode_basis(x3));
                out.add_scaled(
                    &crate::linalg::tensor(&left, &LinComb::basis(x2.clone())),
                    &(c * c2),
                );
            }
        }
        out
    }

    fn label(&self, a: &LinComb<Self::Basis>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.iter()
            .map(|(k, c)| {
                let name = self.basis_label(k);
                if c == &crate::linalg::one() {
                    name
                } else {
                    format!("{}*{}", crate::linalg::scalar::format_scalar(c), name)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `(Δ ⊗ id) Δ` as a three-fold tensor.
pub fn comul_left<A: HopfAlgebra + ?Sized>(alg: &A, a: &LinComb<A::Basis>) -> Tensor3<A::Basis> {
    let mut out = LinComb::new();
    for ((x, y), c) in alg.comul(a).iter() {
        for ((x1, x2), c2) in alg.comul_basis(x).iter() {
            out.add_term((x1.clone(), x2.clone(), y.clone()), c * c2);
        }
    }
    out
}

/// `(id ⊗ Δ) Δ` as a three-fold tensor.
pub fn comul_right<A: HopfAlgebra + ?Sized>(alg: &A, a: &LinComb<A::Basis>) -> Tensor3<A::Basis> {
    let mut out = LinComb::new();
    for ((x, y), c) in alg.comul(a).iter() {
        for ((y1, y2), c2) in alg.comul_basis(y).iter() {
            out.add_term((x.clone(), y1.clone(), y2.clone()), c * c2);
        }
    }
    out
}

/// Applies `f ⊗ g` to a tensor.
pub fn tensor_map<A: Ord + Clone, B: Ord + Clone>(
    t: &LinComb<(A, A)>,
    mut f: impl FnMut(&A) -> LinComb<B>,
    mut g: impl FnMut(&A) -> LinComb<B>,
) -> LinComb<(B, B)> {
    let mut out = LinComb::new();
    for ((x, y), c) in t.iter() {
        out.add_scaled(&crate::linalg::tensor(&f(x), &g(y)), c);
    }
    out
}

/// Which of the Hopf laws to run over a list of test elements.
#[derive(Debug, Clone, Copy)]
pub struct AxiomScope<'a, B> {
    pub elements: &'a [B],
    /// Triples for associativity; `None` means all triples of `elements`.
    pub assoc_triples: Option<&'a [(B, B, B)]>,
    /// Pairs for bialgebra compatibility; `None` means all pairs of `elements`.
    pub pairs: Option<&'a [(B, B)]>,
}

/// Runs the full Hopf-algebra axiom suite on the given basis elements.
pub fn hopf_axioms<A: HopfAlgebra + ?Sized>(
    alg: &A,
    scope: AxiomScope<'_, A::Basis>,
) -> CheckReport {
    use rayon::prelude::*;

    let elems = scope.elements;
    let one = alg.one();
    let lbl = |b: &A::Basis| alg.basis_label(b);
    let mut report = CheckReport::new();

    let all_triples: Vec<(A::Basis, A::Basis, A::Basis)>;
    let triples = match scope.assoc_triples {
        Some(t) => t,
        None => {
            all_triples = elems
                .iter()
                .flat_map(|a| {
                    elems.iter().flat_map(move |b| {
                        elems.iter().map(move |c| (a.clone(), b.clone(), c.clone()))
                    })
                })
                .collect();
            &all_triples
        }
    };
    let assoc = triples.par_iter().find_map_first(|(a, b, c)| {
        let ab = alg.mul_basis(a, b);
        let bc = alg.mul_basis(b, c);
        let left = alg.mul(&ab, &LinComb::basis(c.clone()));
        let right = alg.mul(&LinComb::basis(a.clone()), &bc);
        (left != right).then(|| format!("({}, {}, {})", lbl(a), lbl(b), lbl(c)))
    });
    report.record("associativity", assoc);

    let unit = elems.par_iter().find_map_first(|a| {
        let x = LinComb::basis(a.clone());
        (alg.mul(&one, &x) != x || alg.mul(&x, &one) != x).then(|| lbl(a))
    });
    report.record("unit", unit);

    let coassoc = elems.par_iter().find_map_first(|a| {
        let x = LinComb::basis(a.clone());
        (comul_left(alg, &x) != comul_right(alg, &x)).then(|| lbl(a))
    });
    report.record("coassociativity", coassoc);

    let counit = elems.par_iter().find_map_first(|a| {
        let x = LinComb::basis(a.clone());
        let d = alg.comul(&x);
        let left: LinComb<A::Basis> = d
            .iter()
            .map(|((p, q), c)| (q.clone(), c * alg.counit_basis(p)))
            .collect();
        let right: LinComb<A::Basis> = d
            .iter()
            .map(|((p, q), c)| (p.clone(), c * alg.counit_basis(q)))
            .collect();
        (left != x || right != x).then(|| lbl(a))
    });
    report.record("counit", counit);

    let all_pairs: Vec<(A::Basis, A::Basis)>;
    let pairs = match scope.pairs {
        Some(p) => p,
        None => {
            all_pairs = elems
                .iter()
                .flat_map(|a| elems.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            &all_pairs
        }
    };
    let bialg = pairs.par_iter().find_map_first(|(a, b)| {
        let ab = alg.mul_basis(a, b);
        let lhs = alg.comul(&ab);
        let rhs = alg.tensor_mul(&alg.comul_basis(a), &alg.comul_basis(b));
        (lhs != rhs).then(|| format!("({}, {})", lbl(a), lbl(b)))
    });
    let unit_coalg = {
        let d1 = alg.comul(&one);
        let expected = crate::linalg::tensor(&one, &one);
        (d1 != expected || alg.counit(&one) != crate::linalg::one()).then(|| "unit".to_string())
    };
    report.record("comultiplication is multiplicative", bialg.or(unit_coalg));

    let counit_mult = pairs.par_iter().find_map_first(|(a, b)| {
        let ab = alg.mul_basis(a, b);
        (alg.counit(&ab) != alg.counit_basis(a) * alg.counit_basis(b))
            .then(|| format!("({}, {})", lbl(a), lbl(b)))
    });
    report.record("counit is multiplicative", counit_mult);

    let antipode = elems.par_iter().find_map_first(|a| {
        let x = LinComb::basis(a.clone());
        let d = alg.comul(&x);
        let expected = one.scaled(&alg.counit_basis(a));
        let mut left = LinComb::new();
        let mut right = LinComb::new();
        for ((p, q), c) in d.iter() {
            left.add_scaled(
                &alg.mul(&alg.antipode_basis(p), &LinComb::basis(q.clone())),
                c,
            );
            right.add_scaled(
                &alg.mul(&LinComb::basis(p.clone()), &alg.antipode_basis(q)),
                c,
            );
        }
        (left != expected || right != expected).then(|| lbl(a))
    });
    report.record("antipode convolution identity", antipode);

    report
}

/// Whether `x` is primitive: `Δx = 1 ⊗ x + x ⊗ 1`.
pub fn is_primitive<A: HopfAlgebra + ?Sized>(alg: &A, x: &LinComb<A::Basis>) -> bool {
    let one = alg.one();
    let mut expected = crate::linalg::tensor(&one, x);
    expected.add_assign(&crate::linalg::tensor(x, &one));
    alg.comul(x) == expected
}

/// Whether `x` is group-like: `Δx = x ⊗ x` and `ε(x) = 1`.
pub fn is_grouplike<A: HopfAlgebra + ?Sized>(alg: &A, x: &LinComb<A::Basis>) -> bool {
    !x.is_zero()
        && alg.counit(x) == crate::linalg::one()
        && alg.comul(x) == crate::linalg::tensor(x, x)
}
