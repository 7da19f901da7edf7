//! Round trips between crossed modules, strict 2-objects and their Hopf linearizations,
//! over every normal subgroup of a few small groups.

use proptest::prelude::*;
use xmodkit_core::cohomology::{coboundary_change, splice, splice_report, Cochain, ModuleSES};
use xmodkit_core::crossed::morphism::group_xmod_morphism;
use xmodkit_core::crossed::{
    check_group_xmod, check_lie_two_alg, check_lie_xmod, check_two_group, group_xmod_iso_witness,
    lie_xmod_iso_witness, liexmod_round_trip_iso, liexmod_to_2lie, two_group_iso_witness,
    twogroup_round_trip_iso, twogroup_to_xmod, twolie_to_liexmod, xmod_round_trip_iso,
    xmod_to_2group, GroupXMod, LieXMod,
};
use xmodkit_core::functors::{
    fun_chi_round_trip, functor_kg, functor_p_finite, kg_round_trip, u_p_round_trip,
};
use xmodkit_core::group::FinGroup;
use xmodkit_core::lie::{FinLieAlgebra, LieModule};
use xmodkit_core::linalg::{int, LinComb, SparseMat};

/// Every normal subgroup, found by brute force over subsets closed under products and
/// conjugation.
fn normal_subgroups(g: &FinGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    (0u32..1 << n)
        .filter(|mask| mask & 1 << g.unit() != 0)
        .map(|mask| (0..n).filter(|&k| mask & 1 << k != 0).collect::<Vec<_>>())
        .filter(|s| {
            let has = |x: usize| s.contains(&x);
            s.iter().all(|&a| s.iter().all(|&b| has(g.mul(a, b))))
                && s.iter().all(|&a| g.elements().all(|x| has(g.conj(x, a))))
        })
        .collect()
}

fn inclusions() -> Vec<GroupXMod> {
    [
        FinGroup::symmetric(3),
        FinGroup::cyclic(4),
        FinGroup::cyclic(6),
    ]
    .iter()
    .flat_map(|g| {
        normal_subgroups(g)
            .into_iter()
            .map(move |s| GroupXMod::normal_inclusion(g, &s).unwrap())
    })
    .collect()
}

#[test]
fn brute_force_finds_the_normal_subgroups_of_s3() {
    assert_eq!(normal_subgroups(&FinGroup::symmetric(3)).len(), 3);
}

#[test]
fn group_xmods_survive_the_two_group_round_trip() {
    for x in inclusions() {
        assert!(check_group_xmod(&x).all_passed());
        let g = xmod_to_2group(&x).unwrap();
        assert!(check_two_group(&g).all_passed());
        let (y, incl) = twogroup_to_xmod(&g).unwrap();
        let (rho, sigma) = xmod_round_trip_iso(&x, &incl).unwrap();
        assert_eq!(group_xmod_iso_witness(&x, &y, &rho, &sigma), None);
        assert!(group_xmod_morphism(&x, &y, &rho, &sigma).all_passed());
        let (f0, f1) = twogroup_round_trip_iso(&g, &incl);
        assert_eq!(
            two_group_iso_witness(&xmod_to_2group(&y).unwrap(), &g, &f0, &f1),
            None
        );
    }
}

#[test]
fn linearizations_round_trip_and_have_no_primitives() {
    for x in inclusions() {
        assert!(kg_round_trip(&x).unwrap().is_some());
        assert!(fun_chi_round_trip(&x).unwrap().is_some());
        let p = functor_p_finite(&functor_kg(&x).unwrap()).unwrap();
        assert_eq!((p.m().dim(), p.n().dim()), (0, 0));
    }
}

#[test]
fn terminal_crossed_modules_of_abelian_groups_round_trip() {
    for n in 1..5 {
        let x = GroupXMod::to_trivial(&FinGroup::cyclic(n));
        assert!(check_group_xmod(&x).all_passed());
        assert!(kg_round_trip(&x).unwrap().is_some());
    }
}

fn lie_identity() -> impl Strategy<Value = LieXMod> {
    prop_oneof![
        Just(LieXMod::identity(&FinLieAlgebra::sl2())),
        Just(LieXMod::identity(&FinLieAlgebra::heis3())),
        Just(LieXMod::identity(&FinLieAlgebra::affine2())),
        Just(LieXMod::zero_from_module(
            &FinLieAlgebra::heis3(),
            &LieModule::adjoint(&FinLieAlgebra::heis3())
        )),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn lie_xmods_survive_the_two_algebra_round_trip(x in lie_identity()) {
        prop_assert!(check_lie_xmod(&x).all_passed());
        let g = liexmod_to_2lie(&x).unwrap();
        prop_assert!(check_lie_two_alg(&g).all_passed());
        let (y, incl) = twolie_to_liexmod(&g).unwrap();
        let (rho, sigma) = liexmod_round_trip_iso(&x, &incl).unwrap();
        prop_assert_eq!(lie_xmod_iso_witness(&x, &y, &rho, &sigma), None);
    }

    #[test]
    fn primitives_of_the_enveloping_xmod_recover_it(x in lie_identity()) {
        prop_assert!(u_p_round_trip(&x, 2).unwrap().all_passed());
    }
}

fn heis_nonsplit() -> (FinLieAlgebra, ModuleSES) {
    let g = FinLieAlgebra::heis3();
    let e12 = SparseMat::from_int_rows(&[&[0, 1], &[0, 0]]);
    let i = LieModule::new(
        &g,
        2,
        vec![e12, SparseMat::zeros(2, 2), SparseMat::zeros(2, 2)],
    )
    .unwrap();
    let v = LieModule::trivial(&g, 1);
    let q = LieModule::trivial(&g, 1);
    let inject = SparseMat::from_int_rows(&[&[1], &[0]]);
    let project = SparseMat::from_int_rows(&[&[0, 1]]);
    let ses = ModuleSES::new(&g, v, i, q, inject, project).unwrap();
    (g, ses)
}

#[test]
fn coboundary_change_gives_a_morphism_of_splices() {
    let (g, ses) = heis_nonsplit();
    let alpha = Cochain::new(2, 3, 1, vec![(vec![1, 2], LinComb::basis(0))]).unwrap();
    for b_values in [[1, 0, 0], [0, 2, -1], [3, 3, 3]] {
        let entries = (0..3)
            .map(|k| (vec![k], LinComb::term(0, int(b_values[k]))))
            .collect();
        let b = Cochain::new(1, 3, 1, entries).unwrap();
        let (x, y, report) = coboundary_change(&g, &ses, &alpha, &b).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(check_lie_xmod(&x).all_passed() && check_lie_xmod(&y).all_passed());
    }
}

#[test]
fn splice_of_the_zero_cocycle_is_split() {
    let (g, ses) = heis_nonsplit();
    let x = splice(&g, &ses, &Cochain::zero(2, 3, 1)).unwrap();
    assert!(check_lie_xmod(&x).all_passed());
    assert!(splice_report(&g, &ses, &x).all_passed());
}
