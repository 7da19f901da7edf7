//! Hopf-algebra invariants on group algebras, function algebras and enveloping algebras.

use proptest::prelude::*;
use xmodkit_core::enveloping::{PbwMonomial, UEnvelope};
use xmodkit_core::group::FinGroup;
use xmodkit_core::hopf::{characters, grouplikes, primitives, FinDimHopf, HopfAlgebra};
use xmodkit_core::lie::FinLieAlgebra;
use xmodkit_core::linalg::LinComb;

fn small_group() -> impl Strategy<Value = FinGroup> {
    prop_oneof![
        (1usize..7).prop_map(FinGroup::cyclic),
        (1usize..4).prop_map(FinGroup::symmetric),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_and_function_algebras_are_hopf(g in small_group()) {
        let kg = FinDimHopf::group_algebra(&g);
        let fun = FinDimHopf::function_algebra(&g);
        prop_assert!(kg.verify_hopf().all_passed());
        prop_assert!(fun.verify_hopf().all_passed());
        prop_assert!(kg.is_cocommutative());
        prop_assert!(fun.is_commutative());
        prop_assert_eq!(kg.is_commutative(), g.is_commutative());
    }

    #[test]
    fn double_dual_is_the_identity(g in small_group()) {
        let kg = FinDimHopf::group_algebra(&g);
        prop_assert_eq!(kg.dualize().dualize(), kg);
    }

    #[test]
    fn grouplikes_and_characters_count_the_group(g in small_group()) {
        let kg = FinDimHopf::group_algebra(&g);
        prop_assert_eq!(grouplikes(&kg).unwrap().len(), g.order());
        prop_assert_eq!(characters(&FinDimHopf::function_algebra(&g)).unwrap().len(), g.order());
        // over the rationals a finite group algebra has no nonzero primitives
        prop_assert!(primitives(&kg).is_empty());
    }
}

fn monomial(dim: usize, max_len: usize) -> impl Strategy<Value = PbwMonomial> {
    prop::collection::vec(0..dim, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable();
        PbwMonomial::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn enveloping_coproduct_is_multiplicative(a in monomial(3, 2), b in monomial(3, 2)) {
        let u = UEnvelope::new(FinLieAlgebra::sl2());
        let (a, b) = (LinComb::basis(a), LinComb::basis(b));
        let lhs = u.comul(&u.mul(&a, &b));
        let rhs = u.tensor_mul(&u.comul(&a), &u.comul(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn enveloping_antipode_is_an_antihomomorphism(a in monomial(3, 2), b in monomial(3, 2)) {
        let u = UEnvelope::new(FinLieAlgebra::heis3());
        let (a, b) = (LinComb::basis(a), LinComb::basis(b));
        prop_assert_eq!(u.antipode(&u.mul(&a, &b)), u.mul(&u.antipode(&b), &u.antipode(&a)));
    }

    #[test]
    fn enveloping_multiplication_is_associative(a in monomial(3, 2), b in monomial(3, 2), c in monomial(3, 2)) {
        let u = UEnvelope::new(FinLieAlgebra::sl2());
        let (a, b, c) = (LinComb::basis(a), LinComb::basis(b), LinComb::basis(c));
        prop_assert_eq!(u.mul(&u.mul(&a, &b), &c), u.mul(&a, &u.mul(&b, &c)));
    }
}
