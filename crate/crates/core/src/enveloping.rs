//! Universal enveloping algebras in PBW normal form.
//!
//! Elements are finite combinations of ascending generator words. Products are straightened
//! by `x_j x_i -> x_i x_j + [x_j, x_i]` for `j > i`; right multiplication by a generator is
//! memoized per envelope.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hopf::{hopf_axioms, AxiomScope, HopfAlgebra, Tensor};
use crate::lie::{label_with, representation_witness, FinLieAlgebra};
use crate::linalg::scalar::sign;
use crate::linalg::{coordinates, kernel_basis, one, LinComb, Scalar, SparseMat, SparseVec};
use crate::report::CheckReport;

/// An ascending word in the generators; the empty word is the unit.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<usize>);

impl PbwMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Self(vec![i])
    }

    /// Fails unless `indices` is non-decreasing.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Inconsistent(format!(
                "PBW indices {indices:?} are not ascending"
            )));
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn sorted_concat(&self, other: &PbwMonomial) -> PbwMonomial {
        let mut v = [self.0.as_slice(), other.0.as_slice()].concat();
        v.sort_unstable();
        PbwMonomial(v)
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Elements of an enveloping algebra.
pub type UPoly = LinComb<PbwMonomial>;

/// `U(g)` for a finite-dimensional Lie algebra `g`.
pub struct UEnvelope {
    lie: FinLieAlgebra,
    memo: RwLock<HashMap<(PbwMonomial, usize), UPoly>>,
}

impl fmt::Debug for UEnvelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UEnvelope").field("lie", &self.lie).finish()
    }
}

impl PartialEq for UEnvelope {
    fn eq(&self, other: &Self) -> bool {
        self.lie == other.lie
    }
}

impl UEnvelope {
    pub fn new(lie: FinLieAlgebra) -> Self {
        Self {
            lie,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &FinLieAlgebra {
        &self.lie
    }

    pub fn generator(&self, i: usize) -> UPoly {
        LinComb::basis(PbwMonomial::generator(i))
    }

    /// The image of `g` in degree one.
    pub fn embed(&self, x: &LinComb<usize>) -> UPoly {
        x.map_keys(|i| PbwMonomial::generator(*i))
    }

    /// Inverse of `embed` on elements of degree exactly one.
    pub fn lie_part(&self, x: &UPoly) -> Option<LinComb<usize>> {
        x.iter()
            .map(|(m, c)| (m.degree() == 1).then(|| (m.0[0], c.clone())))
            .collect()
    }

    fn right_mul_gen(&self, m: &PbwMonomial, x: usize) -> UPoly {
        match m.0.last() {
            None => return LinComb::basis(PbwMonomial::generator(x)),
            Some(&y) if y <= x => {
                let mut v = m.0.clone();
                v.push(x);
                return LinComb::basis(PbwMonomial(v));
            }
            _ => {}
        }
        let key = (m.clone(), x);
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let y = *m.0.last().expect("nonempty");
        let prefix = PbwMonomial(m.0[..m.0.len() - 1].to_vec());
        // m' y x = (m' x) y + m' [y, x]
        let mut out = LinComb::new();
        for (p, c) in self.right_mul_gen(&prefix, x).iter() {
            out.add_scaled(&self.right_mul_gen(p, y), c);
        }
        for (k, c) in self.lie.bracket_basis(y, x).iter() {
            out.add_scaled(&self.right_mul_gen(&prefix, *k), c);
        }
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    fn right_mul_word(&self, a: &UPoly, word: &[usize]) -> UPoly {
        let mut acc = a.clone();
        for &g in word {
            acc = acc.map_linear(|m| self.right_mul_gen(m, g));
        }
        acc
    }

    /// Product of generators in the given (arbitrary) order, in normal form.
    pub fn word(&self, word: &[usize]) -> UPoly {
        self.right_mul_word(&LinComb::basis(PbwMonomial::one()), word)
    }

    /// All PBW monomials of degree at most `d`, by degree then lexicographically.
    pub fn monomials_up_to(&self, d: usize) -> Vec<PbwMonomial> {
        let n = self.lie.dim();
        let mut out = vec![PbwMonomial::one()];
        let mut layer = vec![PbwMonomial::one()];
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &layer {
                let start = m.0.last().copied().unwrap_or(0);
                for g in start..n {
                    let mut v = m.0.clone();
                    v.push(g);
                    next.push(PbwMonomial(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Basis of the primitive elements of filtration degree at most `d`.
    pub fn primitives_up_to(&self, d: usize) -> Vec<UPoly> {
        let monos = self.monomials_up_to(d);
        let mut pair_index: BTreeMap<(PbwMonomial, PbwMonomial), usize> = BTreeMap::new();
        let unit = PbwMonomial::one();
        let columns: Vec<LinComb<(PbwMonomial, PbwMonomial)>> = monos
            .iter()
            .map(|m| {
                let mut col = self.comul_basis(m);
                col.add_term((unit.clone(), m.clone()), -one());
                col.add_term((m.clone(), unit.clone()), -one());
                col
            })
            .collect();
        for col in &columns {
            for k in col.keys() {
                let next = pair_index.len();
                pair_index.entry(k.clone()).or_insert(next);
            }
        }
        let cols = columns
            .iter()
            .map(|col| col.map_keys(|k| pair_index[k]))
            .collect();
        let mat = SparseMat::from_columns(pair_index.len(), cols).expect("indexed");
        kernel_basis(&mat)
            .into_iter()
            .map(|v| v.coeffs().map_keys(|i| monos[*i].clone()))
            .collect()
    }

    pub fn label_poly(&self, x: &UPoly) -> String {
        label_with(x, |m| self.basis_label(m))
    }
}

/// Filtration degree; zero for the zero element.
pub fn degree(x: &UPoly) -> usize {
    x.keys().map(PbwMonomial::degree).max().unwrap_or(0)
}

/// Primitives of `U(g)` of filtration degree at most `d`.
pub fn primitives_up_to(g: &FinLieAlgebra, d: usize) -> Vec<UPoly> {
    UEnvelope::new(g.clone()).primitives_up_to(d)
}

impl HopfAlgebra for UEnvelope {
    type Basis = PbwMonomial;

    fn one(&self) -> UPoly {
        LinComb::basis(PbwMonomial::one())
    }

    fn mul_basis(&self, a: &PbwMonomial, b: &PbwMonomial) -> UPoly {
        self.right_mul_word(&LinComb::basis(a.clone()), &b.0)
    }

    /// Subsequences of an ascending word are ascending, so no straightening is needed.
    fn comul_basis(&self, a: &PbwMonomial) -> Tensor<PbwMonomial> {
        let k = a.degree();
        assert!(
            k < usize::BITS as usize,
            "degree too large for subset enumeration"
        );
        let mut out = LinComb::new();
        for mask in 0usize..(1 << k) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (pos, &g) in a.0.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    left.push(g);
                } else {
                    right.push(g);
                }
            }
            out.add_term((PbwMonomial(left), PbwMonomial(right)), one());
        }
        out
    }

    fn counit_basis(&self, a: &PbwMonomial) -> Scalar {
        if a.degree() == 0 {
            one()
        } else {
            crate::linalg::zero()
        }
    }

    fn antipode_basis(&self, a: &PbwMonomial) -> UPoly {
        let reversed: Vec<usize> = a.0.iter().rev().copied().collect();
        self.word(&reversed).scaled(&sign(a.degree()))
    }

    fn test_basis(&self, max_degree: usize) -> Vec<PbwMonomial> {
        self.monomials_up_to(max_degree)
    }

    fn basis_label(&self, a: &PbwMonomial) -> String {
        if a.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < a.0.len() {
            let g = a.0[i];
            let run = a.0[i..].iter().take_while(|&&h| h == g).count();
            let name = self.lie.name(g);
            parts.push(if run == 1 {
                name.to_string()
            } else {
                format!("{name}^{run}")
            });
            i += run;
        }
        parts.join(" ")
    }
}

/// An element of an enveloping algebra together with its algebra.
#[derive(Debug, Clone)]
pub struct UElement {
    pub algebra: Arc<UEnvelope>,
    pub terms: UPoly,
}

impl UElement {
    pub fn new(algebra: Arc<UEnvelope>, terms: UPoly) -> Self {
        Self { algebra, terms }
    }

    pub fn one(algebra: Arc<UEnvelope>) -> Self {
        let terms = algebra.one();
        Self { algebra, terms }
    }

    pub fn generator(algebra: Arc<UEnvelope>, i: usize) -> Self {
        let terms = algebra.generator(i);
        Self { algebra, terms }
    }

    fn check_same(&self, other: &UElement) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// PBW product.
    pub fn mul(&self, other: &UElement) -> Result<UElement> {
        self.check_same(other)?;
        Ok(Self::new(
            self.algebra.clone(),
            self.algebra.mul(&self.terms, &other.terms),
        ))
    }

    pub fn add(&self, other: &UElement) -> Result<UElement> {
        self.check_same(other)?;
        Ok(Self::new(
            self.algebra.clone(),
            self.terms.plus(&other.terms),
        ))
    }

    pub fn coproduct(&self) -> Tensor<PbwMonomial> {
        self.algebra.comul(&self.terms)
    }

    pub fn antipode(&self) -> UElement {
        Self::new(self.algebra.clone(), self.algebra.antipode(&self.terms))
    }

    pub fn counit(&self) -> Scalar {
        self.algebra.counit(&self.terms)
    }

    pub fn degree(&self) -> usize {
        degree(&self.terms)
    }
}

impl PartialEq for UElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.label_poly(&self.terms))
    }
}

/// Image of a monomial under the algebra map determined by generator images.
pub fn extend_generator_map(target: &UEnvelope, images: &[UPoly], m: &PbwMonomial) -> UPoly {
    let mut acc = target.one();
    for &g in m.indices() {
        acc = target.mul(&acc, &images[g]);
    }
    acc
}

/// Generator images of the Hopf map `U(f)` for a Lie morphism `f` given as a matrix.
pub fn lie_map_images(target: &UEnvelope, f: &SparseMat) -> Vec<UPoly> {
    (0..f.cols()).map(|j| target.embed(f.column(j))).collect()
}

/// The action of `U(n)` on `U(m)` extending an action of `n` on `m` by derivations.
///
/// Generators of `n` act as derivations of the product of `U(m)`; monomials act by
/// composition, the rightmost factor first.
#[derive(Debug, Clone)]
pub struct EnvelopingAction {
    n: Arc<UEnvelope>,
    m: Arc<UEnvelope>,
    act: Vec<SparseMat>,
}

impl EnvelopingAction {
    /// Checks that every generator acts by a derivation and that the action respects brackets.
    pub fn new(n: Arc<UEnvelope>, m: Arc<UEnvelope>, act: Vec<SparseMat>) -> Result<Self> {
        let (dn, dm) = (n.lie().dim(), m.lie().dim());
        if act.len() != dn {
            return Err(Error::DimensionMismatch {
                expected: dn,
                found: act.len(),
            });
        }
        for (x, d) in act.iter().enumerate() {
            if d.rows() != dm || d.cols() != dm {
                return Err(Error::ShapeMismatch {
                    left: (dm, dm),
                    right: (d.rows(), d.cols()),
                });
            }
            if let Some(w) = m.lie().derivation_witness(d) {
                return Err(Error::NotADerivation {
                    generator: n.lie().name(x).to_string(),
                    witness: w,
                });
            }
        }
        if let Some(w) = representation_witness(n.lie(), &act) {
            return Err(Error::NotARepresentation { witness: w });
        }
        Ok(Self { n, m, act })
    }

    pub fn source(&self) -> &Arc<UEnvelope> {
        &self.n
    }

    pub fn target(&self) -> &Arc<UEnvelope> {
        &self.m
    }

    pub fn matrices(&self) -> &[SparseMat] {
        &self.act
    }

    /// Generator `x` of `n` acting on a PBW monomial of `U(m)` by the Leibniz rule.
    pub fn act_generator(&self, x: usize, b: &PbwMonomial) -> UPoly {
        let word = b.indices();
        let mut out = LinComb::new();
        for (pos, &y) in word.iter().enumerate() {
            let prefix = self.m.word(&word[..pos]);
            for (k, c) in self.act[x].column(y).iter() {
                let mut tail = vec![*k];
                tail.extend_from_slice(&word[pos + 1..]);
                out.add_scaled(&self.m.right_mul_word(&prefix, &tail), c);
            }
        }
        out
    }

    pub fn act_basis(&self, a: &PbwMonomial, b: &PbwMonomial) -> UPoly {
        let mut acc = LinComb::basis(b.clone());
        for &x in a.indices().iter().rev() {
            acc = acc.map_linear(|m| self.act_generator(x, m));
        }
        acc
    }

    pub fn act(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let mut out = LinComb::new();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                out.add_scaled(&self.act_basis(ma, mb), &(ca * cb));
            }
        }
        out
    }
}

/// `a · b` for the extension of the derivation action `act` of `n` on `m`.
pub fn extend_action(
    n: &FinLieAlgebra,
    m: &FinLieAlgebra,
    act: &[SparseMat],
    a: &UPoly,
    b: &UPoly,
) -> Result<UPoly> {
    let action = EnvelopingAction::new(
        Arc::new(UEnvelope::new(n.clone())),
        Arc::new(UEnvelope::new(m.clone())),
        act.to_vec(),
    )?;
    Ok(action.act(a, b))
}

/// The Lie algebra of primitives of degree at most `d`, with its basis inside `U(g)`.
pub fn primitive_lie_algebra(u: &UEnvelope, d: usize) -> Result<(FinLieAlgebra, Vec<UPoly>)> {
    let prims = u.primitives_up_to(d);
    let lie = commutator_algebra(u, &prims)?;
    Ok((lie, prims))
}

/// The Lie algebra on `basis` under `xy - yx`, which must close on the span.
pub fn commutator_algebra<A: HopfAlgebra>(
    alg: &A,
    basis: &[LinComb<A::Basis>],
) -> Result<FinLieAlgebra> {
    let k = basis.len();
    let (vectors, index) = vectorize(basis);
    let mut table = vec![LinComb::new(); k * k];
    for a in 0..k {
        for b in 0..k {
            let comm = alg
                .mul(&basis[a], &basis[b])
                .minus(&alg.mul(&basis[b], &basis[a]));
            let coords = coords_in(&comm, &vectors, &index).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "commutator of {} and {} leaves the span",
                    alg.label(&basis[a]),
                    alg.label(&basis[b])
                ))
            })?;
            table[a * k + b] = coords;
        }
    }
    let names = basis.iter().map(|x| alg.label(x)).collect();
    FinLieAlgebra::new(k, table, Some(names))
}

/// Coordinates of a finite combination relative to a list of vectors over a shared index.
pub(crate) fn vectorize<K: Ord + Clone>(
    basis: &[LinComb<K>],
) -> (Vec<SparseVec>, BTreeMap<K, usize>) {
    let mut index = BTreeMap::new();
    for v in basis {
        for k in v.keys() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let dim = index.len();
    let vectors = basis
        .iter()
        .map(|v| SparseVec::from_lincomb(dim, v.map_keys(|k| index[k])).expect("indexed"))
        .collect();
    (vectors, index)
}

/// Coordinates of `x` in the span of `vectors`, or `None` when it lies outside.
pub(crate) fn coords_in<K: Ord + Clone>(
    x: &LinComb<K>,
    vectors: &[SparseVec],
    index: &BTreeMap<K, usize>,
) -> Option<LinComb<usize>> {
    if x.keys().any(|k| !index.contains_key(k)) {
        return None;
    }
    let v = SparseVec::from_lincomb(index.len(), x.map_keys(|k| index[k])).ok()?;
    coordinates(&v, vectors).ok()?.map(SparseVec::into_coeffs)
}

/// The Hopf axiom suite on `U(g)` at degree `d`.
///
/// Unit, coassociativity, counit, bialgebra compatibility and the antipode identity run on
/// every monomial (or pair) of degree at most `d`; associativity on `triples` random
/// monomial triples drawn with a fixed seed.
pub fn enveloping_axioms(u: &UEnvelope, d: usize, triples: usize, seed: u64) -> CheckReport {
    let monos = u.monomials_up_to(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<(PbwMonomial, PbwMonomial, PbwMonomial)> = (0..triples)
        .map(|_| {
            let mut pick = || monos[rng.gen_range(0..monos.len())].clone();
            (pick(), pick(), pick())
        })
        .collect();
    hopf_axioms(
        u,
        AxiomScope {
            elements: &monos,
            assoc_triples: Some(&sample),
            pairs: None,
        },
    )
}

/// Witness where the top-degree part of `ab` differs from the sorted concatenation.
pub fn filtration_witness(u: &UEnvelope, a: &PbwMonomial, b: &PbwMonomial) -> Option<String> {
    let prod = u.mul_basis(a, b);
    let top = a.degree() + b.degree();
    if degree(&prod) > top {
        return Some(format!(
            "deg({} * {}) > {top}",
            u.basis_label(a),
            u.basis_label(b)
        ));
    }
    let top_part: UPoly = prod
        .iter()
        .filter(|(m, _)| m.degree() == top)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    (top_part != LinComb::basis(a.sorted_concat(b)))
        .then(|| format!("({}, {})", u.basis_label(a), u.basis_label(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn mono(v: &[usize]) -> PbwMonomial {
        PbwMonomial::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[usize], i64)]) -> UPoly {
        terms.iter().map(|(m, c)| (mono(m), int(*c))).collect()
    }

    #[test]
    fn sl2_straightening() {
        let u = UEnvelope::new(FinLieAlgebra::sl2());
        // f e = e f - h
        assert_eq!(u.word(&[1, 0]), poly(&[(&[0, 1], 1), (&[2], -1)]));
        // h e = e h + 2e
        assert_eq!(u.word(&[2, 0]), poly(&[(&[0, 2], 1), (&[0], 2)]));
        assert_eq!(u.mul(&u.generator(0), &u.one()), u.generator(0));
    }

    #[test]
    fn heis3_straightening() {
        let u = UEnvelope::new(FinLieAlgebra::heis3());
        assert_eq!(u.word(&[1, 0]), poly(&[(&[0, 1], 1), (&[2], -1)]));
    }

    #[test]
    fn sl2_coproduct_and_antipode() {
        let u = UEnvelope::new(FinLieAlgebra::sl2());
        let e = mono(&[0]);
        let ef = mono(&[0, 1]);
        let one = PbwMonomial::one();
        let mut expected = LinComb::new();
        expected.add_term((e.clone(), one.clone()), int(1));
        expected.add_term((one.clone(), e.clone()), int(1));
        assert_eq!(u.comul_basis(&e), expected);

        let f = mono(&[1]);
        let mut expected = LinComb::new();
        expected.add_term((ef.clone(), one.clone()), int(1));
        expected.add_term((e.clone(), f.clone()), int(1));
        expected.add_term((f.clone(), e.clone()), int(1));
        expected.add_term((one.clone(), ef.clone()), int(1));
        assert_eq!(u.comul_basis(&ef), expected);

        assert_eq!(u.antipode_basis(&one), u.one());
        assert_eq!(u.antipode_basis(&e), poly(&[(&[0], -1)]));
        assert_eq!(u.antipode_basis(&ef), poly(&[(&[0, 1], 1), (&[2], -1)]));
    }

    #[test]
    fn primitives_are_the_generators() {
        let u = UEnvelope::new(FinLieAlgebra::sl2());
        let gens: Vec<UPoly> = (0..3).map(|i| u.generator(i)).collect();
        assert_eq!(u.primitives_up_to(1), gens);
        assert_eq!(u.primitives_up_to(3), gens);
        let line = UEnvelope::new(FinLieAlgebra::abelian(1));
        assert_eq!(line.primitives_up_to(4), vec![line.generator(0)]);
    }

    #[test]
    fn action_extension_is_leibniz() {
        let g = FinLieAlgebra::heis3();
        let ad: Vec<SparseMat> = (0..3).map(|i| g.ad_matrix(i)).collect();
        let n = Arc::new(UEnvelope::new(g.clone()));
        let m = Arc::new(UEnvelope::new(g.clone()));
        let action = EnvelopingAction::new(n.clone(), m.clone(), ad).unwrap();
        let x = n.generator(0);
        let (b, b2) = (m.generator(1), m.generator(0));
        let lhs = action.act(&x, &m.mul(&b, &b2));
        let rhs = m
            .mul(&action.act(&x, &b), &b2)
            .plus(&m.mul(&b, &action.act(&x, &b2)));
        assert_eq!(lhs, rhs);
        assert_eq!(action.act(&n.one(), &b), b);
        // x y acts as x(y(-))
        let xy = n.word(&[0, 1]);
        let b = m.word(&[1, 1]);
        let composed = action.act(&x, &action.act(&n.generator(1), &b));
        assert_eq!(action.act(&xy, &b), composed);
    }

    #[test]
    fn non_derivation_rejected() {
        let m = FinLieAlgebra::affine2();
        let n = FinLieAlgebra::abelian(1);
        let err = extend_action(
            &n,
            &m,
            &[SparseMat::identity(2)],
            &LinComb::new(),
            &LinComb::new(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotADerivation { .. }));
    }

    #[test]
    fn heis3_axioms_low_degree() {
        let u = UEnvelope::new(FinLieAlgebra::heis3());
        let report = enveloping_axioms(&u, 3, 50, 7);
        assert!(report.all_passed(), "{report:?}");
    }
}
