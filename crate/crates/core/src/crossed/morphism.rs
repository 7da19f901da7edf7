//! Morphisms of crossed structures.
//!
//! Every kind of crossed morphism is a pair of structure maps `(ρ, σ)` making two squares
//! commute: one with the boundary maps and one with the (co)actions. The shared checker
//! takes both squares as closures returning the two paths around each.

use rayon::prelude::*;

use crate::enveloping::{extend_generator_map, lie_map_images, PbwMonomial, UPoly};
use crate::hopf::HopfAlgebra;
use crate::linalg::{tensor, LinComb, SparseMat};
use crate::report::CheckReport;

use super::cocomod::HopfCoComod;
use super::group_xmod::GroupXMod;
use super::hopf_xmod::{EnvelopingHopfXMod, FiniteHopfXMod};
use super::lie_xmod::LieXMod;

/// Checks that the boundary square and the action square commute on the given elements.
///
/// `boundary(t)` and `action(b, t)` each return both paths around their square.
pub fn crossed_morphism_squares<T: Sync, B: Sync, V: PartialEq, W: PartialEq>(
    tops: &[T],
    bottoms: &[B],
    boundary: impl Fn(&T) -> (V, V) + Sync,
    action: impl Fn(&B, &T) -> (W, W) + Sync,
    label_top: impl Fn(&T) -> String + Sync,
    label_bottom: impl Fn(&B) -> String + Sync,
) -> CheckReport {
    let mut report = CheckReport::new();
    let w = tops.par_iter().find_map_first(|t| {
        let (a, b) = boundary(t);
        (a != b).then(|| label_top(t))
    });
    report.record("boundary square commutes", w);
    let pairs: Vec<(&B, &T)> = bottoms
        .iter()
        .flat_map(|b| tops.iter().map(move |t| (b, t)))
        .collect();
    let w = pairs.par_iter().find_map_first(|(b, t)| {
        let (x, y) = action(b, t);
        (x != y).then(|| format!("({}, {})", label_bottom(b), label_top(t)))
    });
    report.record("action square commutes", w);
    report
}

/// Verdicts for `f: A -> B` (given on basis elements) being a Hopf morphism.
pub fn hopf_morphism_report<A: HopfAlgebra, B: HopfAlgebra>(
    a: &A,
    b: &B,
    f: &(dyn Fn(&A::Basis) -> LinComb<B::Basis> + Sync),
    elems: &[A::Basis],
) -> CheckReport {
    let la = |x: &A::Basis| a.basis_label(x);
    let lin = |x: &LinComb<A::Basis>| x.map_linear(|k| f(k));
    let mut report = CheckReport::new();
    let pairs: Vec<(A::Basis, A::Basis)> = elems
        .iter()
        .flat_map(|x| elems.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let unit = (lin(&a.one()) != b.one()).then(|| "unit".to_string());
    let mult = unit.or_else(|| {
        pairs.par_iter().find_map_first(|(x, y)| {
            (lin(&a.mul_basis(x, y)) != b.mul(&f(x), &f(y)))
                .then(|| format!("({}, {})", la(x), la(y)))
        })
    });
    report.record("multiplicative", mult);
    let comul = elems.par_iter().find_map_first(|x| {
        let lhs = b.comul(&f(x));
        let mut rhs = LinComb::new();
        for ((p, q), c) in a.comul_basis(x).iter() {
            rhs.add_scaled(&tensor(&f(p), &f(q)), c);
        }
        (lhs != rhs).then(|| la(x))
    });
    report.record("comultiplicative", comul);
    let counit = elems
        .iter()
        .find(|x| b.counit(&f(x)) != a.counit_basis(x))
        .map(la);
    report.record("counit preserved", counit);
    let antipode = elems
        .par_iter()
        .find_map_first(|x| (b.antipode(&f(x)) != lin(&a.antipode_basis(x))).then(|| la(x)));
    report.record("antipode preserved", antipode);
    report
}

/// `(ρ: M -> M', σ: N -> N')` between group crossed modules.
pub fn group_xmod_morphism(
    x: &GroupXMod,
    y: &GroupXMod,
    rho: &[usize],
    sigma: &[usize],
) -> CheckReport {
    let mut report = CheckReport::new();
    report.record(
        "rho is a homomorphism",
        x.m().homomorphism_witness(y.m(), rho),
    );
    report.record(
        "sigma is a homomorphism",
        x.n().homomorphism_witness(y.n(), sigma),
    );
    if !report.all_passed() {
        return report;
    }
    let tops: Vec<usize> = x.m().elements().collect();
    let bottoms: Vec<usize> = x.n().elements().collect();
    report.extend(crossed_morphism_squares(
        &tops,
        &bottoms,
        |&m| (sigma[x.mu(m)], y.mu(rho[m])),
        |&n, &m| (rho[x.act(n, m)], y.act(sigma[n], rho[m])),
        |&m| x.m().label(m).to_string(),
        |&n| x.n().label(n).to_string(),
    ));
    report
}

/// `(ρ: m -> m', σ: n -> n')` between Lie crossed modules.
pub fn lie_xmod_morphism(
    x: &LieXMod,
    y: &LieXMod,
    rho: &SparseMat,
    sigma: &SparseMat,
) -> CheckReport {
    let mut report = CheckReport::new();
    report.record("rho is a Lie morphism", x.m().morphism_witness(y.m(), rho));
    report.record(
        "sigma is a Lie morphism",
        x.n().morphism_witness(y.n(), sigma),
    );
    if !report.all_passed() {
        return report;
    }
    let tops: Vec<usize> = (0..x.m().dim()).collect();
    let bottoms: Vec<usize> = (0..x.n().dim()).collect();
    report.extend(crossed_morphism_squares(
        &tops,
        &bottoms,
        |&j| {
            (
                sigma.apply_lc(x.mu().column(j)),
                y.mu().apply_lc(rho.column(j)),
            )
        },
        |&i, &j| {
            let acted = rho.apply_lc(x.action()[i].column(j));
            (acted, y.act(sigma.column(i), rho.column(j)))
        },
        |&j| x.m().name(j).to_string(),
        |&i| x.n().name(i).to_string(),
    ));
    report
}

/// `(f_B, f_H)` between finite Hopf crossed modules, as matrices.
pub fn finite_hopf_xmod_morphism(
    x: &FiniteHopfXMod,
    y: &FiniteHopfXMod,
    f_b: &SparseMat,
    f_h: &SparseMat,
) -> CheckReport {
    let mut report = CheckReport::new();
    let fb = |i: &usize| f_b.column(*i).clone();
    let fh = |i: &usize| f_h.column(*i).clone();
    let b_elems: Vec<usize> = (0..x.b.dim()).collect();
    let h_elems: Vec<usize> = (0..x.h.dim()).collect();
    report.extend_prefixed("f_B: ", hopf_morphism_report(&x.b, &y.b, &fb, &b_elems));
    report.extend_prefixed("f_H: ", hopf_morphism_report(&x.h, &y.h, &fh, &h_elems));
    report.extend(crossed_morphism_squares(
        &b_elems,
        &h_elems,
        |&j| {
            (
                f_h.apply_lc(x.gamma.column(j)),
                y.gamma.apply_lc(f_b.column(j)),
            )
        },
        |&i, &j| {
            (
                f_b.apply_lc(x.phi[i].column(j)),
                y.act(f_h.column(i), f_b.column(j)),
            )
        },
        |&j| x.b.labels()[j].clone(),
        |&i| x.h.labels()[i].clone(),
    ));
    report
}

/// `(U(ρ), U(σ))` between enveloping crossed modules, on PBW monomials of degree at most `d`.
pub fn enveloping_hopf_xmod_morphism(
    x: &EnvelopingHopfXMod,
    y: &EnvelopingHopfXMod,
    rho: &SparseMat,
    sigma: &SparseMat,
    d: usize,
) -> CheckReport {
    let mut report = lie_xmod_morphism(&x.lie, &y.lie, rho, sigma);
    if !report.all_passed() {
        return report;
    }
    let rho_images = lie_map_images(&y.b, rho);
    let sigma_images = lie_map_images(&y.h, sigma);
    let fb = |m: &PbwMonomial| extend_generator_map(&y.b, &rho_images, m);
    let fh = |m: &PbwMonomial| extend_generator_map(&y.h, &sigma_images, m);
    let b_elems = x.b.monomials_up_to(d);
    let h_elems = x.h.monomials_up_to(d);
    report.extend_prefixed(
        "U(rho): ",
        hopf_morphism_report(x.b.as_ref(), y.b.as_ref(), &fb, &b_elems),
    );
    report.extend_prefixed(
        "U(sigma): ",
        hopf_morphism_report(x.h.as_ref(), y.h.as_ref(), &fh, &h_elems),
    );
    let lin_b = |p: &UPoly| p.map_linear(|m| fb(m));
    let lin_h = |p: &UPoly| p.map_linear(|m| fh(m));
    let squares = crossed_morphism_squares(
        &b_elems,
        &h_elems,
        |m| {
            (
                lin_h(&x.gamma_poly(&LinComb::basis(m.clone()))),
                y.gamma_poly(&fb(m)),
            )
        },
        |a, m| {
            (
                lin_b(&x.action.act_basis(a, m)),
                y.action.act(&fh(a), &fb(m)),
            )
        },
        |m| x.b.basis_label(m),
        |a| x.h.basis_label(a),
    );
    report.extend_prefixed("Hopf level: ", squares);
    report
}

/// `(f_K, f_L)` between crossed comodules: `ζ' f_K = f_L ζ` and `ρ' f_L = (f_K ⊗ f_L) ρ`.
pub fn cocomod_morphism(
    x: &HopfCoComod,
    y: &HopfCoComod,
    f_k: &SparseMat,
    f_l: &SparseMat,
) -> CheckReport {
    let mut report = CheckReport::new();
    let fk = |i: &usize| f_k.column(*i).clone();
    let fl = |i: &usize| f_l.column(*i).clone();
    let k_elems: Vec<usize> = (0..x.k.dim()).collect();
    let l_elems: Vec<usize> = (0..x.l.dim()).collect();
    report.extend_prefixed("f_K: ", hopf_morphism_report(&x.k, &y.k, &fk, &k_elems));
    report.extend_prefixed("f_L: ", hopf_morphism_report(&x.l, &y.l, &fl, &l_elems));
    let mut w = None;
    for &j in &k_elems {
        if y.zeta.apply_lc(f_k.column(j)) != f_l.apply_lc(x.zeta.column(j)) {
            w = Some(x.k.labels()[j].clone());
            break;
        }
    }
    report.record("boundary square commutes", w);
    let mut w = None;
    for &j in &l_elems {
        let lhs = y.coact(f_l.column(j));
        let mut rhs = LinComb::new();
        for ((p, q), c) in x.coact_basis(j).iter() {
            rhs.add_scaled(&tensor(f_k.column(*p), f_l.column(*q)), c);
        }
        if lhs != rhs {
            w = Some(x.l.labels()[j].clone());
            break;
        }
    }
    report.record("coaction square commutes", w);
    report
}
