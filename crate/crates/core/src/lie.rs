//! Finite-dimensional Lie algebras by structure constants, and their modules.

use crate::error::{Error, Result};
use crate::linalg::{coordinates, int, kernel_basis, rank, LinComb, SparseMat, SparseVec};

/// A Lie algebra on the basis `x_0 .. x_{dim-1}`.
///
/// `bracket[i * dim + j]` is `[x_i, x_j]`. Antisymmetry and the Jacobi identity are checked
/// on every basis triple at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLieAlgebra {
    dim: usize,
    bracket: Vec<LinComb<usize>>,
    names: Vec<String>,
}

impl FinLieAlgebra {
    pub fn new(
        dim: usize,
        bracket: Vec<LinComb<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        if bracket.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: bracket.len(),
            });
        }
        for v in &bracket {
            if let Some(k) = v.keys().find(|k| **k >= dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: k + 1,
                });
            }
        }
        let names = match names {
            Some(n) if n.len() == dim => n,
            Some(n) => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: n.len(),
                })
            }
            None => (0..dim).map(|i| format!("x{i}")).collect(),
        };
        let alg = Self {
            dim,
            bracket,
            names,
        };
        if let Some(w) = alg.antisymmetry_witness() {
            return Err(Error::invalid("Lie algebra", "antisymmetry", w));
        }
        if let Some(w) = alg.jacobi_witness() {
            return Err(Error::invalid("Lie algebra", "Jacobi identity", w));
        }
        Ok(alg)
    }

    /// Builds from the brackets `[x_i, x_j]` for `i < j`; the rest follows by antisymmetry.
    pub fn from_upper(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, LinComb<usize>)>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut bracket = vec![LinComb::new(); dim * dim];
        for (i, j, v) in entries {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::invalid(
                        "Lie algebra",
                        "antisymmetry",
                        format!("[{i}, {i}] ≠ 0"),
                    ));
                }
                continue;
            }
            bracket[j * dim + i] = v.negated();
            bracket[i * dim + j] = v;
        }
        Self::new(dim, bracket, names)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, vec![LinComb::new(); dim * dim], None).expect("abelian")
    }

    /// `sl2` on `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn sl2() -> Self {
        let entries = [
            (0, 1, LinComb::basis(2)),
            (0, 2, LinComb::term(0, int(-2))),
            (1, 2, LinComb::term(1, int(2))),
        ];
        Self::from_upper(3, entries, Some(names(&["e", "f", "h"]))).expect("sl2")
    }

    /// The Heisenberg algebra on `x, y, z` with `[x,y] = z` and `z` central.
    pub fn heis3() -> Self {
        Self::from_upper(
            3,
            [(0, 1, LinComb::basis(2))],
            Some(names(&["x", "y", "z"])),
        )
        .expect("heis3")
    }

    /// The nonabelian 2-dimensional algebra on `a, b` with `[a,b] = b`.
    pub fn affine2() -> Self {
        Self::from_upper(2, [(0, 1, LinComb::basis(1))], Some(names(&["a", "b"]))).expect("affine")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &LinComb<usize> {
        &self.bracket[i * self.dim + j]
    }

    pub fn bracket_table(&self) -> &[LinComb<usize>] {
        &self.bracket
    }

    pub fn bracket(&self, x: &LinComb<usize>, y: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(self.bracket_basis(*i, *j), &(a * b));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(LinComb::is_zero)
    }

    /// Matrix of `ad(x_i) = [x_i, -]`.
    pub fn ad_matrix(&self, i: usize) -> SparseMat {
        let cols = (0..self.dim)
            .map(|j| self.bracket_basis(i, j).clone())
            .collect();
        SparseMat::from_columns(self.dim, cols).expect("in range")
    }

    /// Human-readable form of an element.
    pub fn label(&self, x: &LinComb<usize>) -> String {
        label_with(x, |i| self.names[*i].clone())
    }

    fn antisymmetry_witness(&self) -> Option<String> {
        for i in 0..self.dim {
            for j in i..self.dim {
                if self.bracket_basis(i, j) != &self.bracket_basis(j, i).negated() {
                    return Some(format!("({}, {})", self.names[i], self.names[j]));
                }
            }
        }
        None
    }

    /// First basis triple violating `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0`.
    pub fn jacobi_witness(&self) -> Option<String> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (LinComb::basis(i), LinComb::basis(j), LinComb::basis(k));
                    let mut s = self.bracket(&x, &self.bracket(&y, &z));
                    s.add_assign(&self.bracket(&y, &self.bracket(&z, &x)));
                    s.add_assign(&self.bracket(&z, &self.bracket(&x, &y)));
                    if !s.is_zero() {
                        return Some(format!(
                            "({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        ));
                    }
                }
            }
        }
        None
    }

    /// Witness where `d` fails `d[x,y] = [dx,y] + [x,dy]`.
    pub fn derivation_witness(&self, d: &SparseMat) -> Option<String> {
        if d.rows() != self.dim || d.cols() != self.dim {
            return Some(format!("shape {}x{}", d.rows(), d.cols()));
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = d.apply_lc(self.bracket_basis(i, j));
                let mut rhs = self.bracket(d.column(i), &LinComb::basis(j));
                rhs.add_assign(&self.bracket(&LinComb::basis(i), d.column(j)));
                if lhs != rhs {
                    return Some(format!("({}, {})", self.names[i], self.names[j]));
                }
            }
        }
        None
    }

    /// Witness where the linear map `f: self -> target` fails to preserve brackets.
    pub fn morphism_witness(&self, target: &FinLieAlgebra, f: &SparseMat) -> Option<String> {
        if f.rows() != target.dim || f.cols() != self.dim {
            return Some(format!("shape {}x{}", f.rows(), f.cols()));
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = f.apply_lc(self.bracket_basis(i, j));
                let rhs = target.bracket(f.column(i), f.column(j));
                if lhs != rhs {
                    return Some(format!("({}, {})", self.names[i], self.names[j]));
                }
            }
        }
        None
    }

    /// Witness where `f` fails to be a bijective bracket-preserving map.
    pub fn isomorphism_witness(&self, target: &FinLieAlgebra, f: &SparseMat) -> Option<String> {
        if let Some(w) = self.morphism_witness(target, f) {
            return Some(w);
        }
        if self.dim != target.dim || rank(f) != self.dim {
            return Some("map is not bijective".into());
        }
        None
    }

    /// The subalgebra spanned by `basis` (which must be closed under the bracket), and the
    /// inclusion matrix whose columns are the spanning vectors.
    pub fn subalgebra(&self, basis: &[SparseVec]) -> Result<(FinLieAlgebra, SparseMat)> {
        let k = basis.len();
        let incl = SparseMat::from_column_vecs(self.dim, basis)?;
        let mut table = vec![LinComb::new(); k * k];
        for a in 0..k {
            for b in 0..k {
                let br = self.bracket(basis[a].coeffs(), basis[b].coeffs());
                let v = SparseVec::from_lincomb(self.dim, br)?;
                let c = coordinates(&v, basis)?.ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "span is not closed under the bracket at ({}, {})",
                        self.label(basis[a].coeffs()),
                        self.label(basis[b].coeffs())
                    ))
                })?;
                table[a * k + b] = c.into_coeffs();
            }
        }
        let names = basis.iter().map(|v| self.label(v.coeffs())).collect();
        Ok((FinLieAlgebra::new(k, table, Some(names))?, incl))
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Formats `Σ c_k name(k)`, omitting unit coefficients.
pub fn label_with<K: Ord + Clone>(x: &LinComb<K>, mut name: impl FnMut(&K) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(k, c)| {
            if c == &crate::linalg::one() {
                name(k)
            } else {
                format!("{}*{}", crate::linalg::scalar::format_scalar(c), name(k))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A representation of a Lie algebra given by one matrix per basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule {
    dim: usize,
    action: Vec<SparseMat>,
}

impl LieModule {
    /// Checks `ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)` on all basis pairs.
    pub fn new(g: &FinLieAlgebra, dim: usize, action: Vec<SparseMat>) -> Result<Self> {
        if action.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: action.len(),
            });
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::ShapeMismatch {
                    left: (dim, dim),
                    right: (a.rows(), a.cols()),
                });
            }
        }
        let module = Self { dim, action };
        if let Some(w) = module.representation_witness(g) {
            return Err(Error::NotARepresentation { witness: w });
        }
        Ok(module)
    }

    pub fn trivial(g: &FinLieAlgebra, dim: usize) -> Self {
        Self {
            dim,
            action: vec![SparseMat::zeros(dim, dim); g.dim()],
        }
    }

    pub fn adjoint(g: &FinLieAlgebra) -> Self {
        Self {
            dim: g.dim(),
            action: (0..g.dim()).map(|i| g.ad_matrix(i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[SparseMat] {
        &self.action
    }

    pub fn matrix(&self, i: usize) -> &SparseMat {
        &self.action[i]
    }

    /// Action of a general element `x = Σ c_i x_i` on a vector.
    pub fn act(&self, x: &LinComb<usize>, v: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (i, c) in x.iter() {
            out.add_scaled(&self.action[*i].apply_lc(v), c);
        }
        out
    }

    pub fn representation_witness(&self, g: &FinLieAlgebra) -> Option<String> {
        representation_witness(g, &self.action)
    }

    /// Witness where `f: self -> other` fails to commute with the actions.
    pub fn equivariance_witness(
        &self,
        g: &FinLieAlgebra,
        other: &LieModule,
        f: &SparseMat,
    ) -> Option<String> {
        for i in 0..g.dim() {
            let lhs = f.mul(&self.action[i]).ok()?;
            let rhs = other.action[i].mul(f).ok()?;
            if lhs != rhs {
                return Some(g.name(i).to_string());
            }
        }
        None
    }
}

/// Witness where `x_i ↦ action[i]` fails to respect brackets.
pub fn representation_witness(g: &FinLieAlgebra, action: &[SparseMat]) -> Option<String> {
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let commutator = action[i]
                .mul(&action[j])
                .and_then(|ab| ab.sub(&action[j].mul(&action[i])?))
                .ok()?;
            let mut expected = SparseMat::zeros(commutator.rows(), commutator.cols());
            for (k, c) in g.bracket_basis(i, j).iter() {
                expected = expected.add(&action[*k].scale(c)).ok()?;
            }
            if commutator != expected {
                return Some(format!("({}, {})", g.name(i), g.name(j)));
            }
        }
    }
    None
}

/// Kernel of a Lie morphism as a subalgebra, with its inclusion.
pub fn kernel_subalgebra(g: &FinLieAlgebra, f: &SparseMat) -> Result<(FinLieAlgebra, SparseMat)> {
    g.subalgebra(&kernel_basis(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let g = FinLieAlgebra::sl2();
        assert_eq!(g.bracket_basis(0, 1), &LinComb::basis(2));
        assert_eq!(g.bracket_basis(2, 0), &LinComb::term(0, int(2)));
        assert_eq!(g.bracket_basis(2, 1), &LinComb::term(1, int(-2)));
        assert_eq!(g.bracket_basis(1, 0), &LinComb::term(2, int(-1)));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [a,b] = c, [b,c] = a, [a,c] = a fails Jacobi on (a, b, c)
        let entries = [
            (0, 1, LinComb::basis(2)),
            (1, 2, LinComb::basis(0)),
            (0, 2, LinComb::basis(0)),
        ];
        let err = FinLieAlgebra::from_upper(3, entries, None).unwrap_err();
        assert!(matches!(err, Error::InvalidStructure { ref law, .. } if law == "Jacobi identity"));
    }

    #[test]
    fn adjoint_is_a_representation() {
        for g in [
            FinLieAlgebra::sl2(),
            FinLieAlgebra::heis3(),
            FinLieAlgebra::affine2(),
        ] {
            let ad = LieModule::adjoint(&g);
            assert_eq!(ad.representation_witness(&g), None);
            for i in 0..g.dim() {
                assert_eq!(g.derivation_witness(&g.ad_matrix(i)), None);
            }
        }
    }

    #[test]
    fn standard_sl2_module() {
        let g = FinLieAlgebra::sl2();
        let e = SparseMat::from_int_rows(&[&[0, 1], &[0, 0]]);
        let f = SparseMat::from_int_rows(&[&[0, 0], &[1, 0]]);
        let h = SparseMat::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert!(LieModule::new(&g, 2, vec![e.clone(), f.clone(), h.clone()]).is_ok());
        let err = LieModule::new(&g, 2, vec![e, f, h.scale(&int(2))]).unwrap_err();
        assert!(matches!(err, Error::NotARepresentation { .. }));
    }

    #[test]
    fn center_of_heis3_is_a_subalgebra() {
        let g = FinLieAlgebra::heis3();
        let (z, incl) = g.subalgebra(&[SparseVec::unit(3, 2)]).unwrap();
        assert!(z.is_abelian());
        assert_eq!(z.morphism_witness(&g, &incl), None);
        assert!(g.subalgebra(&[SparseVec::unit(3, 0)]).is_ok());
        assert!(g
            .subalgebra(&[SparseVec::unit(3, 0), SparseVec::unit(3, 1)])
            .is_err());
    }

    #[test]
    fn non_derivation_detected() {
        let g = FinLieAlgebra::affine2();
        assert_eq!(
            g.derivation_witness(&SparseMat::identity(2)),
            Some("(a, b)".into())
        );
    }
}
