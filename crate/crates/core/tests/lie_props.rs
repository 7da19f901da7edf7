//! Lie-algebra invariants and the Chevalley-Eilenberg complex.

use proptest::prelude::*;
use xmodkit_core::cohomology::{ce_differential, cohomology_dim, Cochain};
use xmodkit_core::lie::{FinLieAlgebra, LieModule};
use xmodkit_core::linalg::{int, LinComb, SparseMat};

fn algebra() -> impl Strategy<Value = FinLieAlgebra> {
    prop_oneof![
        Just(FinLieAlgebra::sl2()),
        Just(FinLieAlgebra::heis3()),
        Just(FinLieAlgebra::affine2()),
        Just(FinLieAlgebra::abelian(2)),
    ]
}

fn element(dim: usize) -> impl Strategy<Value = LinComb<usize>> {
    prop::collection::vec(-4i64..5, dim).prop_map(|v| {
        v.into_iter()
            .enumerate()
            .map(|(k, c)| (k, int(c)))
            .collect()
    })
}

fn with_elements() -> impl Strategy<
    Value = (
        FinLieAlgebra,
        LinComb<usize>,
        LinComb<usize>,
        LinComb<usize>,
    ),
> {
    algebra().prop_flat_map(|g| {
        let n = g.dim();
        (Just(g), element(n), element(n), element(n))
    })
}

/// Trivial or adjoint coefficients.
fn module(g: &FinLieAlgebra, adjoint: bool) -> LieModule {
    if adjoint {
        LieModule::adjoint(g)
    } else {
        LieModule::trivial(g, 2)
    }
}

fn cochain(g_dim: usize, m_dim: usize, degree: usize, seed: &[i64]) -> Cochain {
    let tuples = xmodkit_core::cohomology::index_tuples(g_dim, degree);
    let entries = tuples
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            let v = (0..m_dim)
                .map(|j| (j, int(seed[(k * m_dim + j) % seed.len()])))
                .collect();
            (t, v)
        })
        .collect();
    Cochain::new(degree, g_dim, m_dim, entries).unwrap()
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi((g, x, y, z) in with_elements()) {
        prop_assert_eq!(g.bracket(&x, &y), g.bracket(&y, &x).negated());
        let mut sum = g.bracket(&x, &g.bracket(&y, &z));
        sum.add_assign(&g.bracket(&y, &g.bracket(&z, &x)));
        sum.add_assign(&g.bracket(&z, &g.bracket(&x, &y)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn ad_is_a_representation((g, x, y, _z) in with_elements()) {
        let ad = |v: &LinComb<usize>| {
            v.iter().fold(SparseMat::zeros(g.dim(), g.dim()), |acc, (k, c)| acc.add(&g.ad_matrix(*k).scale(c)).unwrap())
        };
        let lhs = ad(&g.bracket(&x, &y));
        let rhs = ad(&x).mul(&ad(&y)).unwrap().sub(&ad(&y).mul(&ad(&x)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_squares_to_zero(g in algebra(), adjoint in any::<bool>(), degree in 0usize..2, seed in prop::collection::vec(-3i64..4, 1..12)) {
        let m = module(&g, adjoint);
        let c = cochain(g.dim(), m.dim(), degree, &seed);
        let dd = ce_differential(&g, &m, &ce_differential(&g, &m, &c).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }
}

#[test]
fn euler_characteristic_vanishes_for_trivial_coefficients() {
    // for a nonzero Lie algebra, Σ (-1)^n dim Hⁿ(g, k) = Σ (-1)^n C(dim g, n) = 0
    for g in [FinLieAlgebra::sl2(), FinLieAlgebra::heis3()] {
        let k = LieModule::trivial(&g, 1);
        let dims: Vec<i64> = (0..=3)
            .map(|n| cohomology_dim(&g, &k, n).unwrap() as i64)
            .collect();
        assert_eq!(dims[0] - dims[1] + dims[2] - dims[3], 0, "{dims:?}");
    }
}

#[test]
fn sl2_trivial_cohomology_is_that_of_the_three_sphere() {
    let g = FinLieAlgebra::sl2();
    let k = LieModule::trivial(&g, 1);
    let dims: Vec<usize> = (0..=3)
        .map(|n| cohomology_dim(&g, &k, n).unwrap())
        .collect();
    assert_eq!(dims, [1, 0, 0, 1]);
}
