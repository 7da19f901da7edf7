//! Pre-cat¹ Hopf algebras of enveloping type.

use std::sync::Arc;

use crate::enveloping::{
    coords_in, extend_generator_map, lie_map_images, primitive_lie_algebra, vectorize,
};
use crate::enveloping::{PbwMonomial, UEnvelope, UPoly};
use crate::error::{Error, Result};
use crate::hopf::{is_primitive, HopfAlgebra};
use crate::linalg::{LinComb, SparseMat};
use crate::report::CheckReport;

use super::lie_two::LieTwoAlg;
use super::morphism::hopf_morphism_report;

/// Hopf morphisms `s, t: A -> H` and `e: H -> A` between enveloping algebras, each given
/// by the images of the Lie generators.
///
/// Images are primitive and respect brackets, so each map extends to a Hopf morphism.
#[derive(Debug, Clone)]
pub struct PreCat1Hopf {
    pub a: Arc<UEnvelope>,
    pub h: Arc<UEnvelope>,
    pub s: Vec<UPoly>,
    pub t: Vec<UPoly>,
    pub e: Vec<UPoly>,
}

fn check_generator_map(
    name: &str,
    src: &UEnvelope,
    dst: &UEnvelope,
    images: &[UPoly],
) -> Result<()> {
    let g = src.lie();
    if images.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: images.len(),
        });
    }
    if let Some(i) = (0..g.dim()).find(|&i| !is_primitive(dst, &images[i])) {
        return Err(Error::invalid(
            "pre-cat1 Hopf algebra",
            &format!("{name} maps generators to primitives"),
            g.name(i),
        ));
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = g.bracket_basis(i, j).map_linear(|k| images[*k].clone());
            let rhs = dst
                .mul(&images[i], &images[j])
                .minus(&dst.mul(&images[j], &images[i]));
            if lhs != rhs {
                return Err(Error::invalid(
                    "pre-cat1 Hopf algebra",
                    &format!("{name} preserves brackets"),
                    format!("({}, {})", g.name(i), g.name(j)),
                ));
            }
        }
    }
    Ok(())
}

impl PreCat1Hopf {
    pub fn new(
        a: Arc<UEnvelope>,
        h: Arc<UEnvelope>,
        s: Vec<UPoly>,
        t: Vec<UPoly>,
        e: Vec<UPoly>,
    ) -> Result<Self> {
        check_generator_map("s", &a, &h, &s)?;
        check_generator_map("t", &a, &h, &t)?;
        check_generator_map("e", &h, &a, &e)?;
        Ok(Self { a, h, s, t, e })
    }

    /// `U(g1) ⇉ U(g0)` with `U(s), U(t), U(i)`.
    pub fn from_lie_two(g: &LieTwoAlg) -> Self {
        let a = Arc::new(UEnvelope::new(g.g1().clone()));
        let h = Arc::new(UEnvelope::new(g.g0().clone()));
        let s = lie_map_images(&h, g.s());
        let t = lie_map_images(&h, g.t());
        let e = lie_map_images(&a, g.i());
        Self { a, h, s, t, e }
    }

    pub fn apply_s(&self, x: &UPoly) -> UPoly {
        x.map_linear(|m| extend_generator_map(&self.h, &self.s, m))
    }

    pub fn apply_t(&self, x: &UPoly) -> UPoly {
        x.map_linear(|m| extend_generator_map(&self.h, &self.t, m))
    }

    pub fn apply_e(&self, x: &UPoly) -> UPoly {
        x.map_linear(|m| extend_generator_map(&self.a, &self.e, m))
    }
}

/// Hopf-morphism verdicts for `s, t, e` and the laws `s∘e = t∘e = id` on PBW monomials of
/// degree at most `d`.
pub fn check_precat1(p: &PreCat1Hopf, d: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let a_elems = p.a.monomials_up_to(d);
    let h_elems = p.h.monomials_up_to(d);
    let s = |m: &PbwMonomial| extend_generator_map(&p.h, &p.s, m);
    let t = |m: &PbwMonomial| extend_generator_map(&p.h, &p.t, m);
    let e = |m: &PbwMonomial| extend_generator_map(&p.a, &p.e, m);
    report.extend_prefixed(
        "s: ",
        hopf_morphism_report(p.a.as_ref(), p.h.as_ref(), &s, &a_elems),
    );
    report.extend_prefixed(
        "t: ",
        hopf_morphism_report(p.a.as_ref(), p.h.as_ref(), &t, &a_elems),
    );
    report.extend_prefixed(
        "e: ",
        hopf_morphism_report(p.h.as_ref(), p.a.as_ref(), &e, &h_elems),
    );
    for (name, f) in [("s∘e = id", &p.s), ("t∘e = id", &p.t)] {
        let w = h_elems.iter().find_map(|m| {
            let back = p
                .apply_e(&LinComb::basis(m.clone()))
                .map_linear(|x| extend_generator_map(&p.h, f, x));
            (back != LinComb::basis(m.clone())).then(|| p.h.basis_label(m))
        });
        report.record(name, w);
    }
    report
}

/// The Lie 2-algebra `P(A) ⇉ P(H)` of primitives of degree at most `d`.
pub fn primitive_two_alg(p: &PreCat1Hopf, d: usize) -> Result<LieTwoAlg> {
    primitive_two_alg_with_bases(p, d).map(|(g, _, _)| g)
}

/// As [`primitive_two_alg`], also returning the primitive bases of `A` and `H`.
pub fn primitive_two_alg_with_bases(
    p: &PreCat1Hopf,
    d: usize,
) -> Result<(LieTwoAlg, Vec<UPoly>, Vec<UPoly>)> {
    let (pa, basis_a) = primitive_lie_algebra(&p.a, d)?;
    let (ph, basis_h) = primitive_lie_algebra(&p.h, d)?;
    let restrict = |basis: &[UPoly], target: &[UPoly], f: &dyn Fn(&UPoly) -> UPoly, name: &str| {
        let (vectors, index) = vectorize(target);
        let cols = basis
            .iter()
            .map(|x| {
                coords_in(&f(x), &vectors, &index).ok_or_else(|| {
                    Error::Inconsistent(format!("{name} does not map primitives to primitives"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SparseMat::from_columns(target.len(), cols)
    };
    let s = restrict(&basis_a, &basis_h, &|x| p.apply_s(x), "s")?;
    let t = restrict(&basis_a, &basis_h, &|x| p.apply_t(x), "t")?;
    let e = restrict(&basis_h, &basis_a, &|x| p.apply_e(x), "e")?;
    Ok((LieTwoAlg::new(ph, pa, s, t, e)?, basis_a, basis_h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::lie_two::liexmod_to_2lie;
    use crate::crossed::lie_xmod::LieXMod;
    use crate::lie::FinLieAlgebra;
    use crate::linalg::SparseVec;

    fn heis_precat1() -> PreCat1Hopf {
        let g = FinLieAlgebra::heis3();
        let (z, incl) = g.subalgebra(&[SparseVec::unit(3, 2)]).unwrap();
        let x = LieXMod::new(z, g, incl, vec![SparseMat::zeros(1, 1); 3]).unwrap();
        PreCat1Hopf::from_lie_two(&liexmod_to_2lie(&x).unwrap())
    }

    #[test]
    fn enveloping_precat1_satisfies_its_laws() {
        let report = check_precat1(&heis_precat1(), 2);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn primitives_recover_the_lie_two_algebra() {
        let g = primitive_two_alg(&heis_precat1(), 3).unwrap();
        assert_eq!((g.g0().dim(), g.g1().dim()), (3, 4));
        assert_eq!(g.s().mul(g.i()).unwrap(), SparseMat::identity(3));
    }

    #[test]
    fn non_primitive_image_is_rejected() {
        let u = Arc::new(UEnvelope::new(FinLieAlgebra::abelian(1)));
        let sq = u.word(&[0, 0]);
        let id = vec![u.generator(0)];
        let err = PreCat1Hopf::new(u.clone(), u.clone(), vec![sq], id.clone(), id).unwrap_err();
        assert!(matches!(err, Error::InvalidStructure { .. }));
    }
}
