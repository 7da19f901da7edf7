//! Strict 2-groups and their equivalence with group crossed modules.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::report::CheckReport;

use super::group_xmod::{check_group_xmod, GroupXMod};

/// Objects `G0`, arrows `G1`, source and target `s, t: G1 -> G0`, identities `i: G0 -> G1`.
///
/// Composition is not stored: `h ∘ f = h · i(t(f))⁻¹ · f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGroup {
    g0: FinGroup,
    g1: FinGroup,
    s: Vec<usize>,
    t: Vec<usize>,
    i: Vec<usize>,
}

impl TwoGroup {
    /// Checks that `s`, `t`, `i` are homomorphisms with `s∘i = t∘i = id`.
    pub fn new(
        g0: FinGroup,
        g1: FinGroup,
        s: Vec<usize>,
        t: Vec<usize>,
        i: Vec<usize>,
    ) -> Result<Self> {
        for (name, map, src, dst) in [
            ("s", &s, &g1, &g0),
            ("t", &t, &g1, &g0),
            ("i", &i, &g0, &g1),
        ] {
            if let Some(w) = src.homomorphism_witness(dst, map) {
                return Err(Error::invalid(
                    "2-group",
                    &format!("{name} is a homomorphism"),
                    w,
                ));
            }
        }
        for x in g0.elements() {
            if s[i[x]] != x || t[i[x]] != x {
                return Err(Error::invalid("2-group", "s∘i = t∘i = id", g0.label(x)));
            }
        }
        Ok(Self { g0, g1, s, t, i })
    }

    pub fn g0(&self) -> &FinGroup {
        &self.g0
    }

    pub fn g1(&self) -> &FinGroup {
        &self.g1
    }

    pub fn s(&self, f: usize) -> usize {
        self.s[f]
    }

    pub fn t(&self, f: usize) -> usize {
        self.t[f]
    }

    pub fn i(&self, x: usize) -> usize {
        self.i[x]
    }

    pub fn s_map(&self) -> &[usize] {
        &self.s
    }

    pub fn t_map(&self) -> &[usize] {
        &self.t
    }

    pub fn i_map(&self) -> &[usize] {
        &self.i
    }

    /// `h ∘ f` for `t(f) = s(h)`.
    pub fn compose(&self, f: usize, h: usize) -> Result<usize> {
        if self.t[f] != self.s[h] {
            return Err(Error::NonComposable(format!(
                "t({}) = {} but s({}) = {}",
                self.g1.label(f),
                self.g0.label(self.t[f]),
                self.g1.label(h),
                self.g0.label(self.s[h])
            )));
        }
        let g1 = &self.g1;
        Ok(g1.mul(g1.mul(h, g1.inv(self.i[self.t[f]])), f))
    }

    /// All `(f, h)` with `t(f) = s(h)`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let g1 = &self.g1;
        g1.elements()
            .flat_map(|f| {
                g1.elements()
                    .filter(move |&h| self.t[f] == self.s[h])
                    .map(move |h| (f, h))
            })
            .collect()
    }
}

/// `h ∘ f` in a strict 2-group.
pub fn compose_arrows_group(g: &TwoGroup, f: usize, h: usize) -> Result<usize> {
    g.compose(f, h)
}

/// Category axioms of the derived composition, plus the interchange law, exhaustively.
pub fn check_two_group(g: &TwoGroup) -> CheckReport {
    let g1 = &g.g1;
    let l = |f: usize| g1.label(f).to_string();
    let c = |f: usize, h: usize| g.compose(f, h).expect("composable");
    let mut report = CheckReport::new();
    let pairs = g.composable_pairs();

    let identities = g1.elements().find_map(|f| {
        let left = c(f, g.i[g.t[f]]);
        let right = c(g.i[g.s[f]], f);
        (left != f || right != f).then(|| l(f))
    });
    report.record("identity arrows", identities);

    let ends = pairs.par_iter().find_map_first(|&(f, h)| {
        let hf = c(f, h);
        (g.s[hf] != g.s[f] || g.t[hf] != g.t[h]).then(|| format!("({}, {})", l(f), l(h)))
    });
    report.record("source and target of composites", ends);

    let assoc = pairs.par_iter().find_map_first(|&(f, h)| {
        g1.elements()
            .filter(|&k| g.s[k] == g.t[h])
            .find(|&k| c(c(f, h), k) != c(f, c(h, k)))
            .map(|k| format!("({}, {}, {})", l(f), l(h), l(k)))
    });
    report.record("associativity", assoc);

    // (g1 g2) ∘ (f1 f2) = (g1 ∘ f1)(g2 ∘ f2)
    let interchange = pairs.par_iter().find_map_first(|&(f1, h1)| {
        pairs.iter().find_map(|&(f2, h2)| {
            let lhs = c(g1.mul(f1, f2), g1.mul(h1, h2));
            let rhs = g1.mul(c(f1, h1), c(f2, h2));
            (lhs != rhs).then(|| format!("f = ({}, {}), h = ({}, {})", l(f1), l(f2), l(h1), l(h2)))
        })
    });
    report.record("interchange law", interchange);
    report
}

/// `N ⋉ M ⇉ N` with `(n,m)` at index `n·|M| + m`, `s(n,m) = n`, `t(n,m) = μ(m)n`, `i(n) = (n,e)`.
pub fn xmod_to_2group(x: &GroupXMod) -> Result<TwoGroup> {
    let report = check_group_xmod(x);
    if let Some(c) = report.first_failure() {
        return Err(Error::AxiomFailure {
            structure: "group crossed module".into(),
            law: c.name.clone(),
            witness: c.witness.clone().unwrap_or_default(),
        });
    }
    let (m, n) = (x.m(), x.n());
    let (om, on) = (m.order(), n.order());
    let idx = |a: usize, b: usize| a * om + b;
    let mut table = vec![vec![0; on * om]; on * om];
    let mut labels = Vec::with_capacity(on * om);
    for n1 in n.elements() {
        for m1 in m.elements() {
            labels.push(format!("({}, {})", n.label(n1), m.label(m1)));
            for n2 in n.elements() {
                for m2 in m.elements() {
                    table[idx(n1, m1)][idx(n2, m2)] = idx(n.mul(n1, n2), m.mul(m1, x.act(n1, m2)));
                }
            }
        }
    }
    let g1 = FinGroup::from_table(table, Some(labels))?;
    let s = (0..on * om).map(|f| f / om).collect();
    let t = (0..on * om).map(|f| n.mul(x.mu(f % om), f / om)).collect();
    let i = n.elements().map(|a| idx(a, m.unit())).collect();
    TwoGroup::new(n.clone(), g1, s, t, i)
}

/// `M = ker s`, `N = G0`, `μ = t|_M`, `ⁿm = i(n) m i(n)⁻¹`.
///
/// Also returns the inclusion `M -> G1`.
pub fn twogroup_to_xmod(g: &TwoGroup) -> Result<(GroupXMod, Vec<usize>)> {
    let g1 = &g.g1;
    let kernel: Vec<usize> = g1.elements().filter(|&f| g.s[f] == g.g0.unit()).collect();
    let (m, incl) = g1.subgroup(&kernel)?;
    let pos = |f: usize| incl.iter().position(|&k| k == f).expect("kernel is normal");
    let mu = incl.iter().map(|&f| g.t[f]).collect();
    let action =
        g.g0.elements()
            .map(|a| incl.iter().map(|&f| pos(g1.conj(g.i[a], f))).collect())
            .collect();
    Ok((GroupXMod::new(m, g.g0.clone(), mu, action)?, incl))
}

/// The carried isomorphism `x -> twogroup_to_xmod(xmod_to_2group(x))`: `m` goes to the
/// position of `(e, m)` in the kernel inclusion; identity on `N`.
pub fn xmod_round_trip_iso(x: &GroupXMod, incl: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let om = x.m().order();
    let rho = x
        .m()
        .elements()
        .map(|m| {
            let arrow = x.n().unit() * om + m;
            incl.iter()
                .position(|&f| f == arrow)
                .ok_or_else(|| Error::Inconsistent("(e, m) outside ker s".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rho, x.n().elements().collect()))
}

/// Witness where `(f0, f1)` fails to be an isomorphism of 2-groups `a -> b`.
pub fn two_group_iso_witness(
    a: &TwoGroup,
    b: &TwoGroup,
    f0: &[usize],
    f1: &[usize],
) -> Option<String> {
    let bij = |map: &[usize], size: usize| {
        let mut hit = vec![false; size];
        map.len() == size
            && map
                .iter()
                .all(|&v| v < size && !std::mem::replace(&mut hit[v], true))
    };
    if !bij(f0, b.g0.order()) || !bij(f1, b.g1.order()) {
        return Some("maps are not bijective".into());
    }
    if let Some(w) = a.g0.homomorphism_witness(&b.g0, f0) {
        return Some(format!("on objects: {w}"));
    }
    if let Some(w) = a.g1.homomorphism_witness(&b.g1, f1) {
        return Some(format!("on arrows: {w}"));
    }
    for f in a.g1.elements() {
        if f0[a.s[f]] != b.s[f1[f]] || f0[a.t[f]] != b.t[f1[f]] {
            return Some(format!("source/target at {}", a.g1.label(f)));
        }
    }
    for x in a.g0.elements() {
        if f1[a.i[x]] != b.i[f0[x]] {
            return Some(format!("identity at {}", a.g0.label(x)));
        }
    }
    None
}

/// The carried isomorphism `xmod_to_2group(twogroup_to_xmod(g)) -> g`: identity on objects,
/// `(n, m) ↦ m · i(n)` on arrows.
pub fn twogroup_round_trip_iso(g: &TwoGroup, incl: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let om = incl.len();
    let f0 = g.g0.elements().collect();
    let f1 = (0..g.g0.order() * om)
        .map(|f| g.g1.mul(incl[f % om], g.i[f / om]))
        .collect();
    (f0, f1)
}
