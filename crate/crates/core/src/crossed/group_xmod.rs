//! Crossed modules of finite groups.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::report::CheckReport;

/// `μ: M -> N` with a left action of `N` on `M`; `action[n][m]` is `ⁿm`.
///
/// Construction only validates table shapes; the crossed-module axioms are reported by
/// [`check_group_xmod`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupXMod {
    m: FinGroup,
    n: FinGroup,
    mu: Vec<usize>,
    action: Vec<Vec<usize>>,
}

impl GroupXMod {
    pub fn new(m: FinGroup, n: FinGroup, mu: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        if mu.len() != m.order() {
            return Err(Error::DimensionMismatch {
                expected: m.order(),
                found: mu.len(),
            });
        }
        if let Some(&bad) = mu.iter().find(|&&x| x >= n.order()) {
            return Err(Error::DimensionMismatch {
                expected: n.order(),
                found: bad + 1,
            });
        }
        if action.len() != n.order() {
            return Err(Error::DimensionMismatch {
                expected: n.order(),
                found: action.len(),
            });
        }
        for row in &action {
            if row.len() != m.order() {
                return Err(Error::DimensionMismatch {
                    expected: m.order(),
                    found: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= m.order()) {
                return Err(Error::DimensionMismatch {
                    expected: m.order(),
                    found: bad + 1,
                });
            }
        }
        Ok(Self { m, n, mu, action })
    }

    /// `H ↪ G` for the subgroup on `elements`, with `G` acting by conjugation.
    pub fn normal_inclusion(g: &FinGroup, elements: &[usize]) -> Result<Self> {
        let (h, incl) = g.subgroup(elements)?;
        let pos = |x: usize| incl.iter().position(|&y| y == x);
        let mut action = Vec::with_capacity(g.order());
        for n in g.elements() {
            let row = incl
                .iter()
                .map(|&m| {
                    pos(g.conj(n, m)).ok_or_else(|| {
                        Error::invalid(
                            "normal subgroup",
                            "conjugation",
                            format!("{} by {}", g.label(m), g.label(n)),
                        )
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            action.push(row);
        }
        Self::new(h, g.clone(), incl, action)
    }

    /// `id: G -> G` with conjugation.
    pub fn identity(g: &FinGroup) -> Self {
        Self::normal_inclusion(g, &g.elements().collect::<Vec<_>>()).expect("whole group")
    }

    /// `M -> 1` with the trivial action.
    pub fn to_trivial(m: &FinGroup) -> Self {
        let n = FinGroup::trivial();
        Self::new(
            m.clone(),
            n,
            vec![0; m.order()],
            vec![m.elements().collect()],
        )
        .expect("shapes")
    }

    pub fn m(&self) -> &FinGroup {
        &self.m
    }

    pub fn n(&self) -> &FinGroup {
        &self.n
    }

    pub fn mu(&self, m: usize) -> usize {
        self.mu[m]
    }

    pub fn mu_table(&self) -> &[usize] {
        &self.mu
    }

    pub fn act(&self, n: usize, m: usize) -> usize {
        self.action[n][m]
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }
}

fn pairs(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).collect()
}

/// Verdicts for every crossed-module axiom, exhaustively over element pairs.
pub fn check_group_xmod(x: &GroupXMod) -> CheckReport {
    let (m, n) = (&x.m, &x.n);
    let lm = |i: usize| m.label(i).to_string();
    let ln = |i: usize| n.label(i).to_string();
    let mut report = CheckReport::new();

    report.record("mu is a homomorphism", m.homomorphism_witness(n, &x.mu));

    let nm = pairs(n.order(), m.order());
    let mm = pairs(m.order(), m.order());
    let nn = pairs(n.order(), n.order());

    let automorphism = n.elements().find_map(|g| {
        if let Some(w) = m.homomorphism_witness(m, &x.action[g]) {
            return Some(format!("n = {}: {w}", ln(g)));
        }
        let mut hit = vec![false; m.order()];
        x.action[g].iter().for_each(|&v| hit[v] = true);
        (!hit.iter().all(|&b| b)).then(|| format!("n = {} is not bijective", ln(g)))
    });
    report.record("action by automorphisms", automorphism);

    let unit_acts = m
        .elements()
        .find(|&v| x.act(n.unit(), v) != v)
        .map(|v| format!("e acting on {}", lm(v)));
    let action_law = unit_acts.or_else(|| {
        nn.par_iter().find_map_first(|&(a, b)| {
            m.elements()
                .find(|&v| x.act(n.mul(a, b), v) != x.act(a, x.act(b, v)))
                .map(|v| format!("n1 = {}, n2 = {}, m = {}", ln(a), ln(b), lm(v)))
        })
    });
    report.record("action law", action_law);

    let equivariance = nm.par_iter().find_map_first(|&(g, v)| {
        (x.mu(x.act(g, v)) != n.conj(g, x.mu(v))).then(|| format!("n = {}, m = {}", ln(g), lm(v)))
    });
    report.record("(a) mu is equivariant", equivariance);

    let peiffer = mm.par_iter().find_map_first(|&(a, b)| {
        (x.act(x.mu(a), b) != m.conj(a, b)).then(|| format!("m = {}, m' = {}", lm(a), lm(b)))
    });
    report.record("(b) Peiffer identity", peiffer);

    report
}

/// Witness where `(rho, sigma)` fails to be an isomorphism `x -> y` of crossed modules.
pub fn group_xmod_iso_witness(
    x: &GroupXMod,
    y: &GroupXMod,
    rho: &[usize],
    sigma: &[usize],
) -> Option<String> {
    let bijective = |map: &[usize], size: usize| {
        let mut hit = vec![false; size];
        map.iter().all(|&v| v < size) && {
            map.iter().for_each(|&v| hit[v] = true);
            hit.iter().all(|&b| b)
        }
    };
    if x.m.order() != y.m.order() || x.n.order() != y.n.order() {
        return Some("orders differ".into());
    }
    if !bijective(rho, y.m.order()) || !bijective(sigma, y.n.order()) {
        return Some("maps are not bijective".into());
    }
    let report = super::morphism::group_xmod_morphism(x, y, rho, sigma);
    report
        .first_failure()
        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

/// An isomorphism of crossed modules `x -> y` as `(on M, on N)`, found by search over
/// group isomorphisms.
pub fn group_xmod_isomorphism(x: &GroupXMod, y: &GroupXMod) -> Option<(Vec<usize>, Vec<usize>)> {
    let sigmas = x.n.isomorphisms_to(&y.n);
    let rhos = x.m.isomorphisms_to(&y.m);
    sigmas.iter().find_map(|sigma| {
        rhos.iter()
            .find(|rho| group_xmod_iso_witness(x, y, rho, sigma).is_none())
            .map(|rho| (rho.clone(), sigma.clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_s3() -> GroupXMod {
        let s3 = FinGroup::symmetric(3);
        let a3: Vec<usize> = s3
            .elements()
            .filter(|&g| s3.element_order(g) != 2)
            .collect();
        GroupXMod::normal_inclusion(&s3, &a3).unwrap()
    }

    #[test]
    fn a3_in_s3_passes() {
        let x = a3_s3();
        assert_eq!(x.m().order(), 3);
        assert!(check_group_xmod(&x).all_passed());
    }

    #[test]
    fn identity_passes() {
        for g in [FinGroup::cyclic(4), FinGroup::symmetric(3)] {
            assert!(check_group_xmod(&GroupXMod::identity(&g)).all_passed());
        }
    }

    #[test]
    fn s3_to_trivial_fails_peiffer() {
        let s3 = FinGroup::symmetric(3);
        let report = check_group_xmod(&GroupXMod::to_trivial(&s3));
        let failures: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].name, "(b) Peiffer identity");
        // the witness is a non-commuting pair
        let w = failures[0].witness.as_ref().unwrap();
        let find = |l: &str| s3.elements().find(|&g| s3.label(g) == l).unwrap();
        let parts: Vec<&str> = w
            .split(", ")
            .map(|p| p.split(" = ").nth(1).unwrap())
            .collect();
        let (a, b) = (find(parts[0]), find(parts[1]));
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
    }

    #[test]
    fn isomorphism_search_finds_identity() {
        let x = a3_s3();
        assert!(group_xmod_isomorphism(&x, &x).is_some());
        let y = GroupXMod::identity(&FinGroup::symmetric(3));
        assert!(group_xmod_isomorphism(&x, &y).is_none());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = FinGroup::symmetric(3);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert!(GroupXMod::normal_inclusion(&s3, &[s3.unit(), t]).is_err());
    }
}
