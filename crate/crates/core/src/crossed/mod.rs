//! Crossed modules, crossed comodules and their strict 2-object counterparts.

pub mod cocomod;
pub mod group_xmod;
pub mod hopf_xmod;
pub mod lie_two;
pub mod lie_xmod;
pub mod morphism;
pub mod precat1;
pub mod two_group;

pub use cocomod::{check_hopf_cocomod, HopfCoComod};
pub use group_xmod::{check_group_xmod, group_xmod_iso_witness, group_xmod_isomorphism, GroupXMod};
pub use hopf_xmod::{check_hopf_xmod, EnvelopingHopfXMod, FiniteHopfXMod, HopfXMod};
pub use lie_two::{
    check_lie_two_alg, compose_arrows_linear, liexmod_round_trip_iso, liexmod_to_2lie,
    two_lie_iso_witness, twolie_round_trip_iso, twolie_to_liexmod, LieTwoAlg,
};
pub use lie_xmod::{check_lie_xmod, lie_xmod_iso_witness, LieXMod};
pub use precat1::{check_precat1, primitive_two_alg, primitive_two_alg_with_bases, PreCat1Hopf};
pub use two_group::{
    check_two_group, compose_arrows_group, two_group_iso_witness, twogroup_round_trip_iso,
    twogroup_to_xmod, xmod_round_trip_iso, xmod_to_2group, TwoGroup,
};
