//! Strict Lie 2-algebras and their equivalence with Lie crossed modules.

use crate::error::{Error, Result};
use crate::lie::FinLieAlgebra;
use crate::linalg::{coordinates, kernel_basis, LinComb, SparseMat, SparseVec};
use crate::report::CheckReport;

use super::lie_xmod::{check_lie_xmod, LieXMod};

/// Objects `g0`, arrows `g1`, Lie morphisms `s, t: g1 -> g0` and `i: g0 -> g1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieTwoAlg {
    g0: FinLieAlgebra,
    g1: FinLieAlgebra,
    s: SparseMat,
    t: SparseMat,
    i: SparseMat,
}

impl LieTwoAlg {
    /// Checks that `s`, `t`, `i` are Lie morphisms with `s∘i = t∘i = id`.
    pub fn new(
        g0: FinLieAlgebra,
        g1: FinLieAlgebra,
        s: SparseMat,
        t: SparseMat,
        i: SparseMat,
    ) -> Result<Self> {
        for (name, map, src, dst) in [
            ("s", &s, &g1, &g0),
            ("t", &t, &g1, &g0),
            ("i", &i, &g0, &g1),
        ] {
            if let Some(w) = src.morphism_witness(dst, map) {
                return Err(Error::invalid(
                    "Lie 2-algebra",
                    &format!("{name} is a Lie morphism"),
                    w,
                ));
            }
        }
        let id = SparseMat::identity(g0.dim());
        if s.mul(&i)? != id || t.mul(&i)? != id {
            return Err(Error::invalid(
                "Lie 2-algebra",
                "s∘i = t∘i = id",
                "matrix products",
            ));
        }
        Ok(Self { g0, g1, s, t, i })
    }

    pub fn g0(&self) -> &FinLieAlgebra {
        &self.g0
    }

    pub fn g1(&self) -> &FinLieAlgebra {
        &self.g1
    }

    pub fn s(&self) -> &SparseMat {
        &self.s
    }

    pub fn t(&self) -> &SparseMat {
        &self.t
    }

    pub fn i(&self) -> &SparseMat {
        &self.i
    }

    /// First pair of kernel basis vectors with `[a, b] ≠ 0`, for `a ∈ ker s`, `b ∈ ker t`.
    pub fn kernels_commute_witness(&self) -> Option<String> {
        let ks = kernel_basis(&self.s);
        let kt = kernel_basis(&self.t);
        for a in &ks {
            for b in &kt {
                let br = self.g1.bracket(a.coeffs(), b.coeffs());
                if !br.is_zero() {
                    return Some(format!(
                        "[{}, {}] = {}",
                        self.g1.label(a.coeffs()),
                        self.g1.label(b.coeffs()),
                        self.g1.label(&br)
                    ));
                }
            }
        }
        None
    }

    /// `h ∘ f = i(s(f)) + (f - i(s(f))) + (h - i(s(h)))` for `t(f) = s(h)`.
    pub fn compose(&self, f: &LinComb<usize>, h: &LinComb<usize>) -> Result<LinComb<usize>> {
        let tf = self.t.apply_lc(f);
        let sh = self.s.apply_lc(h);
        if tf != sh {
            return Err(Error::NonComposable(format!(
                "t(f) = {} but s(h) = {}",
                self.g0.label(&tf),
                self.g0.label(&sh)
            )));
        }
        let isf = self.i.apply_lc(&self.s.apply_lc(f));
        let ish = self.i.apply_lc(&sh);
        Ok(isf.plus(&f.minus(&isf)).plus(&h.minus(&ish)))
    }
}

/// `h ∘ f` in a strict Lie 2-algebra.
pub fn compose_arrows_linear(
    g: &LieTwoAlg,
    f: &LinComb<usize>,
    h: &LinComb<usize>,
) -> Result<LinComb<usize>> {
    g.compose(f, h)
}

/// Verdicts for a Lie 2-algebra: `s∘i = t∘i = id` and `[ker s, ker t] = 0`.
pub fn check_lie_two_alg(g: &LieTwoAlg) -> CheckReport {
    let mut report = CheckReport::new();
    let id = SparseMat::identity(g.g0.dim());
    let si = g.s.mul(&g.i).ok();
    let ti = g.t.mul(&g.i).ok();
    report.record(
        "s∘i = id",
        (si.as_ref() != Some(&id)).then(|| "s∘i".to_string()),
    );
    report.record(
        "t∘i = id",
        (ti.as_ref() != Some(&id)).then(|| "t∘i".to_string()),
    );
    report.record("[ker s, ker t] = 0", g.kernels_commute_witness());
    report
}

fn axiom_failure(structure: &str, report: &CheckReport) -> Option<Error> {
    report.first_failure().map(|c| Error::AxiomFailure {
        structure: structure.into(),
        law: c.name.clone(),
        witness: c.witness.clone().unwrap_or_default(),
    })
}

/// `n ⋉ m ⇉ n` on the basis `n_0 .. n_{a-1}, m_0 .. m_{b-1}`.
///
/// The bracket is `[(n1,m1),(n2,m2)] = ([n1,n2], [m1,m2] + n1·m2 - n2·m1)`;
/// `s(n,m) = n`, `t(n,m) = μ(m) + n`, `i(n) = (n,0)`.
pub fn liexmod_to_2lie(x: &LieXMod) -> Result<LieTwoAlg> {
    if let Some(e) = axiom_failure("Lie crossed module", &check_lie_xmod(x)) {
        return Err(e);
    }
    let (n, m) = (x.n(), x.m());
    let (dn, dm) = (n.dim(), m.dim());
    let d = dn + dm;
    let shift = |v: &LinComb<usize>| v.map_keys(|k| k + dn);
    let mut table = vec![LinComb::new(); d * d];
    for a in 0..dn {
        for b in 0..dn {
            table[a * d + b] = n.bracket_basis(a, b).clone();
        }
        for j in 0..dm {
            let v = shift(x.action()[a].column(j));
            table[(j + dn) * d + a] = v.negated();
            table[a * d + j + dn] = v;
        }
    }
    for i in 0..dm {
        for j in 0..dm {
            table[(i + dn) * d + j + dn] = shift(m.bracket_basis(i, j));
        }
    }
    let mut names: Vec<String> = n.names().to_vec();
    for name in m.names() {
        names.push(if n.names().contains(name) {
            format!("{name}'")
        } else {
            name.clone()
        });
    }
    let g1 = FinLieAlgebra::new(d, table, Some(names))?;
    let mut s = SparseMat::zeros(dn, d);
    let mut t = SparseMat::zeros(dn, d);
    let mut i = SparseMat::zeros(d, dn);
    for a in 0..dn {
        s.set(a, a, crate::linalg::one());
        t.set(a, a, crate::linalg::one());
        i.set(a, a, crate::linalg::one());
    }
    for j in 0..dm {
        for (r, c) in x.mu().column(j).iter() {
            t.set(*r, j + dn, c.clone());
        }
    }
    LieTwoAlg::new(n.clone(), g1, s, t, i)
}

/// `m = ker s`, `n = g0`, `μ = t|_m`, `n · m = [i(n), m]`.
///
/// Also returns the inclusion `m -> g1`. Fails when `[ker s, ker t] ≠ 0`.
pub fn twolie_to_liexmod(g: &LieTwoAlg) -> Result<(LieXMod, SparseMat)> {
    if let Some(w) = g.kernels_commute_witness() {
        return Err(Error::AxiomFailure {
            structure: "Lie 2-algebra".into(),
            law: "[ker s, ker t] = 0".into(),
            witness: w,
        });
    }
    let basis = kernel_basis(&g.s);
    let (m, incl) = g.g1.subalgebra(&basis)?;
    let mu = g.t.mul(&incl)?;
    let mut action = Vec::with_capacity(g.g0.dim());
    for a in 0..g.g0.dim() {
        let ia = g.i.column(a);
        let cols = basis
            .iter()
            .map(|k| {
                let br = SparseVec::from_lincomb(g.g1.dim(), g.g1.bracket(ia, k.coeffs()))?;
                coordinates(&br, &basis)?
                    .map(SparseVec::into_coeffs)
                    .ok_or_else(|| Error::Inconsistent("ker s is not an ideal".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        action.push(SparseMat::from_columns(basis.len(), cols)?);
    }
    Ok((LieXMod::new(m, g.g0.clone(), mu, action)?, incl))
}

/// The carried isomorphism `x -> twolie_to_liexmod(liexmod_to_2lie(x))`: `m_j` goes to the
/// coordinates of `(0, m_j)` in the kernel basis; identity on `n`.
pub fn liexmod_round_trip_iso(x: &LieXMod, incl: &SparseMat) -> Result<(SparseMat, SparseMat)> {
    let dn = x.n().dim();
    let basis: Vec<SparseVec> = (0..incl.cols()).map(|c| incl.column_vec(c)).collect();
    let cols = (0..x.m().dim())
        .map(|j| {
            coordinates(&SparseVec::unit(incl.rows(), dn + j), &basis)?
                .map(SparseVec::into_coeffs)
                .ok_or_else(|| Error::Inconsistent("(0, m) outside ker s".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((
        SparseMat::from_columns(basis.len(), cols)?,
        SparseMat::identity(dn),
    ))
}

/// The carried isomorphism `liexmod_to_2lie(twolie_to_liexmod(g)) -> g`: identity on objects,
/// `(n, k) ↦ i(n) + k` on arrows.
pub fn twolie_round_trip_iso(g: &LieTwoAlg, incl: &SparseMat) -> (SparseMat, SparseMat) {
    let mut cols: Vec<LinComb<usize>> = (0..g.g0.dim()).map(|a| g.i.column(a).clone()).collect();
    cols.extend((0..incl.cols()).map(|c| incl.column(c).clone()));
    let f1 = SparseMat::from_columns(g.g1.dim(), cols).expect("in range");
    (SparseMat::identity(g.g0.dim()), f1)
}

/// Witness where `(f0, f1)` fails to be an isomorphism `a -> b` of Lie 2-algebras.
pub fn two_lie_iso_witness(
    a: &LieTwoAlg,
    b: &LieTwoAlg,
    f0: &SparseMat,
    f1: &SparseMat,
) -> Option<String> {
    if let Some(w) = a.g0.isomorphism_witness(&b.g0, f0) {
        return Some(format!("on objects: {w}"));
    }
    if let Some(w) = a.g1.isomorphism_witness(&b.g1, f1) {
        return Some(format!("on arrows: {w}"));
    }
    let eq =
        |x: Result<SparseMat>, y: Result<SparseMat>| matches!((x, y), (Ok(p), Ok(q)) if p == q);
    if !eq(f0.mul(&a.s), b.s.mul(f1)) {
        return Some("source square".into());
    }
    if !eq(f0.mul(&a.t), b.t.mul(f1)) {
        return Some("target square".into());
    }
    if !eq(f1.mul(&a.i), b.i.mul(f0)) {
        return Some("identity square".into());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::lie_xmod::lie_xmod_iso_witness;
    use crate::linalg::int;

    fn center_heis3() -> LieXMod {
        let g = FinLieAlgebra::heis3();
        let (z, incl) = g.subalgebra(&[SparseVec::unit(3, 2)]).unwrap();
        LieXMod::new(z, g, incl, vec![SparseMat::zeros(1, 1); 3]).unwrap()
    }

    #[test]
    fn heis3_round_trips() {
        let x = center_heis3();
        let g = liexmod_to_2lie(&x).unwrap();
        assert_eq!(g.g1().dim(), 4);
        assert!(check_lie_two_alg(&g).all_passed());
        let (y, incl) = twolie_to_liexmod(&g).unwrap();
        assert!(check_lie_xmod(&y).all_passed());
        let (rho, sigma) = liexmod_round_trip_iso(&x, &incl).unwrap();
        assert_eq!(lie_xmod_iso_witness(&x, &y, &rho, &sigma), None);
        let g2 = liexmod_to_2lie(&y).unwrap();
        let (f0, f1) = twolie_round_trip_iso(&g, &incl);
        assert_eq!(two_lie_iso_witness(&g2, &g, &f0, &f1), None);
    }

    #[test]
    fn identity_xmod_needs_the_full_bracket() {
        // nonabelian m: the m-component of the bracket must include [m1, m2]
        let x = LieXMod::identity(&FinLieAlgebra::sl2());
        let g = liexmod_to_2lie(&x).unwrap();
        assert!(check_lie_two_alg(&g).all_passed());
        assert_eq!(g.t().mul(g.i()).unwrap(), SparseMat::identity(3));
    }

    #[test]
    fn zero_m_gives_g1_equal_g0() {
        let g0 = FinLieAlgebra::heis3();
        let x = LieXMod::new(
            FinLieAlgebra::abelian(0),
            g0.clone(),
            SparseMat::zeros(3, 0),
            vec![SparseMat::zeros(0, 0); 3],
        )
        .unwrap();
        let g = liexmod_to_2lie(&x).unwrap();
        assert_eq!(g.g1(), &g0);
        let (y, _) = twolie_to_liexmod(&g).unwrap();
        assert_eq!(y.m().dim(), 0);
    }

    #[test]
    fn linear_composition() {
        let g = liexmod_to_2lie(&center_heis3()).unwrap();
        // f = (x, z'), so s(f) = x, t(f) = x + z
        let f: LinComb<usize> = [(0, int(1)), (3, int(1))].into_iter().collect();
        let tf = g.t().apply_lc(&f);
        let h = g.i().apply_lc(&tf).plus(&LinComb::term(3, int(2)));
        let hf = compose_arrows_linear(&g, &f, &h).unwrap();
        // linearization of h · i(t f)^{-1} · f
        let expected = h.plus(&f).minus(&g.i().apply_lc(&tf));
        assert_eq!(hf, expected);
        assert_eq!(g.s().apply_lc(&hf), g.s().apply_lc(&f));
        assert_eq!(g.t().apply_lc(&hf), g.t().apply_lc(&h));
        let unit = g.i().apply_lc(&g.s().apply_lc(&h));
        assert_eq!(compose_arrows_linear(&g, &unit, &h).unwrap(), h);
        assert!(compose_arrows_linear(&g, &h, &f).is_err());
    }
}
