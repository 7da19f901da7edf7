//! Chevalley–Eilenberg cochains in low degrees, connecting homomorphisms of module
//! extensions, and the splice of an extension with an abelian extension.

use std::collections::BTreeMap;

use crate::crossed::morphism::lie_xmod_morphism;
use crate::crossed::{EnvelopingHopfXMod, LieXMod};
use crate::error::{Error, Result};
use crate::functors::functor_u;
use crate::lie::{FinLieAlgebra, LieModule};
use crate::linalg::scalar::sign;
use crate::linalg::{int, kernel_basis, rank, solve_linear, LinComb, SparseMat, SparseVec};
use crate::report::CheckReport;

/// Highest degree for which [`ce_differential`] is exposed.
pub const MAX_DIFFERENTIAL_DEGREE: usize = 2;
/// Highest cohomology degree computed.
pub const MAX_COHOMOLOGY_DEGREE: usize = 3;

/// An alternating cochain `Λ^p g -> M`, stored on strictly increasing index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    g_dim: usize,
    m_dim: usize,
    values: BTreeMap<Vec<usize>, LinComb<usize>>,
}

/// Sorts `tuple`, returning the permutation sign, or `None` on a repeated index.
fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut t = tuple.to_vec();
    let mut swaps = 0;
    for i in 0..t.len() {
        for j in 0..t.len() - 1 - i {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    t.windows(2)
        .all(|w| w[0] < w[1])
        .then_some((t, if swaps % 2 == 0 { 1 } else { -1 }))
}

/// Strictly increasing `p`-tuples from `0..n`, lexicographically.
pub fn index_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

impl Cochain {
    pub fn zero(degree: usize, g_dim: usize, m_dim: usize) -> Self {
        Self {
            degree,
            g_dim,
            m_dim,
            values: BTreeMap::new(),
        }
    }

    /// Values on increasing tuples; unlisted tuples are zero.
    pub fn new(
        degree: usize,
        g_dim: usize,
        m_dim: usize,
        entries: Vec<(Vec<usize>, LinComb<usize>)>,
    ) -> Result<Self> {
        let mut c = Self::zero(degree, g_dim, m_dim);
        for (tuple, value) in entries {
            let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
            if tuple.len() != degree || !increasing || tuple.iter().any(|&i| i >= g_dim) {
                return Err(Error::invalid(
                    "cochain",
                    "strictly increasing index tuple",
                    format!("{tuple:?}"),
                ));
            }
            if let Some(&k) = value.keys().find(|&&k| k >= m_dim) {
                return Err(Error::DimensionMismatch {
                    expected: m_dim,
                    found: k + 1,
                });
            }
            c.set(tuple, value);
        }
        Ok(c)
    }

    fn set(&mut self, tuple: Vec<usize>, value: LinComb<usize>) {
        if value.is_zero() {
            self.values.remove(&tuple);
        } else {
            self.values.insert(tuple, value);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    /// Nonzero values on increasing tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &LinComb<usize>)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// The value on basis elements in any order.
    pub fn eval_basis(&self, tuple: &[usize]) -> LinComb<usize> {
        match sort_with_sign(tuple) {
            None => LinComb::new(),
            Some((t, s)) => self
                .values
                .get(&t)
                .map(|v| v.scaled(&int(s)))
                .unwrap_or_default(),
        }
    }

    /// The value with a general first argument and basis elements after it.
    fn eval_first(&self, first: &LinComb<usize>, rest: &[usize]) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (k, c) in first.iter() {
            let mut t = vec![*k];
            t.extend_from_slice(rest);
            out.add_scaled(&self.eval_basis(&t), c);
        }
        out
    }

    /// Post-composition with a linear map `M -> M'`.
    pub fn map_values(&self, f: &SparseMat) -> Result<Self> {
        if f.cols() != self.m_dim {
            return Err(Error::DimensionMismatch {
                expected: self.m_dim,
                found: f.cols(),
            });
        }
        let mut c = Self::zero(self.degree, self.g_dim, f.rows());
        for (t, v) in &self.values {
            c.set(t.clone(), f.apply_lc(v));
        }
        Ok(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut c = self.clone();
        for (t, v) in &other.values {
            let cur = c.values.get(t).cloned().unwrap_or_default();
            c.set(t.clone(), cur.minus(v));
        }
        c
    }

    /// Coordinates in `C^p`: tuple index times `dim M` plus module index.
    pub fn to_vector(&self) -> SparseVec {
        let tuples = index_tuples(self.g_dim, self.degree);
        let pos: BTreeMap<&Vec<usize>, usize> =
            tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut v = LinComb::new();
        for (t, val) in &self.values {
            for (k, c) in val.iter() {
                v.add_term(pos[t] * self.m_dim + k, c.clone());
            }
        }
        SparseVec::from_lincomb(tuples.len() * self.m_dim, v).expect("in range")
    }

    pub fn from_vector(degree: usize, g_dim: usize, m_dim: usize, v: &LinComb<usize>) -> Self {
        let tuples = index_tuples(g_dim, degree);
        let mut c = Self::zero(degree, g_dim, m_dim);
        for (i, coeff) in v.iter() {
            let t = &tuples[i / m_dim];
            let mut cur = c.values.get(t).cloned().unwrap_or_default();
            cur.add_term(i % m_dim, coeff.clone());
            c.set(t.clone(), cur);
        }
        c
    }
}

fn check_module(g: &FinLieAlgebra, m: &LieModule) -> Result<()> {
    if m.action().len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: m.action().len(),
        });
    }
    Ok(())
}

/// `(dc)(x_0..x_p) = Σ_i (-1)^i x_i·c(..x̂_i..) + Σ_{i<j} (-1)^{i+j} c([x_i,x_j], ..x̂_i..x̂_j..)`,
/// in any degree.
fn differential(g: &FinLieAlgebra, m: &LieModule, c: &Cochain) -> Cochain {
    let p = c.degree;
    let mut out = Cochain::zero(p + 1, g.dim(), m.dim());
    for t in index_tuples(g.dim(), p + 1) {
        let mut value = LinComb::new();
        for i in 0..=p {
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &x)| x)
                .collect();
            let acted = m.matrix(t[i]).apply_lc(&c.eval_basis(&rest));
            value.add_scaled(&acted, &sign(i));
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
                let br = g.bracket_basis(t[i], t[j]);
                value.add_scaled(&c.eval_first(br, &rest), &sign(i + j));
            }
        }
        out.set(t, value);
    }
    out
}

/// The Chevalley–Eilenberg differential on cochains of degree at most 2.
pub fn ce_differential(g: &FinLieAlgebra, m: &LieModule, c: &Cochain) -> Result<Cochain> {
    if c.degree > MAX_DIFFERENTIAL_DEGREE {
        return Err(Error::DegreeOverflow(c.degree));
    }
    check_module(g, m)?;
    if c.g_dim != g.dim() || c.m_dim != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: c.g_dim,
        });
    }
    Ok(differential(g, m, c))
}

/// Matrix of `d: C^p -> C^{p+1}` in the coordinates of [`Cochain::to_vector`].
fn differential_matrix(g: &FinLieAlgebra, m: &LieModule, p: usize) -> SparseMat {
    let dim_p = index_tuples(g.dim(), p).len() * m.dim();
    let dim_next = index_tuples(g.dim(), p + 1).len() * m.dim();
    let cols = (0..dim_p)
        .map(|i| {
            let c = Cochain::from_vector(p, g.dim(), m.dim(), &LinComb::basis(i));
            differential(g, m, &c).to_vector().into_coeffs()
        })
        .collect();
    SparseMat::from_columns(dim_next, cols).expect("in range")
}

/// `dim H^n(g, M)` for `n ≤ 3`, from the ranks of the differentials around degree `n`.
pub fn cohomology_dim(g: &FinLieAlgebra, m: &LieModule, n: usize) -> Result<usize> {
    if n > MAX_COHOMOLOGY_DEGREE {
        return Err(Error::DegreeOverflow(n));
    }
    check_module(g, m)?;
    let d_n = differential_matrix(g, m, n);
    let cycles = d_n.cols() - rank(&d_n);
    let boundaries = if n == 0 {
        0
    } else {
        rank(&differential_matrix(g, m, n - 1))
    };
    Ok(cycles - boundaries)
}

/// First basis tuple where `dc ≠ 0`.
pub fn closedness_witness(g: &FinLieAlgebra, m: &LieModule, c: &Cochain) -> Option<String> {
    differential(g, m, c).entries().next().map(|(t, v)| {
        format!(
            "d({t:?}) = {}",
            crate::lie::label_with(v, |k| format!("v{k}"))
        )
    })
}

/// Whether `c = db` for some cochain `b` of one degree lower.
pub fn is_coboundary(g: &FinLieAlgebra, m: &LieModule, c: &Cochain) -> Result<bool> {
    if c.degree == 0 {
        return Ok(c.is_zero());
    }
    let d = differential_matrix(g, m, c.degree - 1);
    Ok(solve_linear(&d, &c.to_vector())?.is_some())
}

/// `0 -> V -> I -> Q -> 0` as `g`-modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSES {
    pub v: LieModule,
    pub i: LieModule,
    pub q: LieModule,
    pub inject: SparseMat,
    pub project: SparseMat,
}

impl ModuleSES {
    /// Checks equivariance of both maps and exactness at every spot.
    pub fn new(
        g: &FinLieAlgebra,
        v: LieModule,
        i: LieModule,
        q: LieModule,
        inject: SparseMat,
        project: SparseMat,
    ) -> Result<Self> {
        for m in [&v, &i, &q] {
            check_module(g, m)?;
        }
        if inject.rows() != i.dim() || inject.cols() != v.dim() {
            return Err(Error::ShapeMismatch {
                left: (i.dim(), v.dim()),
                right: (inject.rows(), inject.cols()),
            });
        }
        if project.rows() != q.dim() || project.cols() != i.dim() {
            return Err(Error::ShapeMismatch {
                left: (q.dim(), i.dim()),
                right: (project.rows(), project.cols()),
            });
        }
        let bad = |law: &str, w: String| Err(Error::invalid("short exact sequence", law, w));
        if let Some(w) = v.equivariance_witness(g, &i, &inject) {
            return bad("inject is equivariant", w);
        }
        if let Some(w) = i.equivariance_witness(g, &q, &project) {
            return bad("project is equivariant", w);
        }
        if rank(&inject) != v.dim() {
            return bad("inject is injective", format!("rank {}", rank(&inject)));
        }
        if rank(&project) != q.dim() {
            return bad("project is surjective", format!("rank {}", rank(&project)));
        }
        if !project.mul(&inject)?.is_zero() || v.dim() + q.dim() != i.dim() {
            return bad("image(inject) = kernel(project)", "dimension count".into());
        }
        Ok(Self {
            v,
            i,
            q,
            inject,
            project,
        })
    }

    /// A linear section `λ: Q -> I` with `project∘λ = id`.
    pub fn default_lift(&self) -> SparseMat {
        let cols = (0..self.q.dim())
            .map(|k| {
                solve_linear(&self.project, &SparseVec::unit(self.q.dim(), k))
                    .expect("dimensions")
                    .expect("surjective")
                    .into_coeffs()
            })
            .collect();
        SparseMat::from_columns(self.i.dim(), cols).expect("in range")
    }
}

/// `θ = inject⁻¹ d(λ∘α)`, a `V`-valued 3-cocycle whose class is the image of `[α]`.
///
/// Uses `lift` when given (it must satisfy `project∘λ = id`), else [`ModuleSES::default_lift`].
pub fn connecting_hom(
    g: &FinLieAlgebra,
    ses: &ModuleSES,
    alpha: &Cochain,
    lift: Option<&SparseMat>,
) -> Result<Cochain> {
    if alpha.degree != 2 || alpha.g_dim != g.dim() || alpha.m_dim != ses.q.dim() {
        return Err(Error::invalid(
            "cocycle",
            "2-cochain into Q",
            format!("degree {}", alpha.degree),
        ));
    }
    if let Some(w) = closedness_witness(g, &ses.q, alpha) {
        return Err(Error::NotClosed { witness: w });
    }
    let default = ses.default_lift();
    let lambda = lift.unwrap_or(&default);
    if ses.project.mul(lambda)? != SparseMat::identity(ses.q.dim()) {
        return Err(Error::invalid("lift", "project∘λ = id", "matrix product"));
    }
    let theta_i = differential(g, &ses.i, &alpha.map_values(lambda)?);
    let mut theta = Cochain::zero(3, g.dim(), ses.v.dim());
    for (t, value) in theta_i.entries() {
        let v = SparseVec::from_lincomb(ses.i.dim(), value.clone())?;
        let pre = solve_linear(&ses.inject, &v)?.ok_or_else(|| {
            Error::Inconsistent(format!("d(λα) at {t:?} is not in the image of V"))
        })?;
        theta.set(t.clone(), pre.into_coeffs());
    }
    if let Some(w) = closedness_witness(g, &ses.v, &theta) {
        return Err(Error::Inconsistent(format!(
            "connecting image is not closed: {w}"
        )));
    }
    Ok(theta)
}

/// `Q ×_α g`: bracket `[(q1,x1),(q2,x2)] = (x1·q2 - x2·q1 + α(x1,x2), [x1,x2])`, basis `Q` then `g`.
///
/// The Jacobi identity holds exactly when `dα = 0`; it is checked on construction.
pub fn abelian_extension(
    g: &FinLieAlgebra,
    q: &LieModule,
    alpha: &Cochain,
) -> Result<FinLieAlgebra> {
    let (dq, dg) = (q.dim(), g.dim());
    let d = dq + dg;
    let mut table = vec![LinComb::new(); d * d];
    for a in 0..dg {
        for b in 0..dg {
            let mut v = alpha.eval_basis(&[a, b]);
            v.add_assign(&g.bracket_basis(a, b).map_keys(|k| k + dq));
            table[(a + dq) * d + b + dq] = v;
        }
        for k in 0..dq {
            let v = q.matrix(a).column(k).clone();
            table[(a + dq) * d + k] = v.clone();
            table[k * d + a + dq] = v.negated();
        }
    }
    let mut names: Vec<String> = (0..dq).map(|k| format!("q{k}")).collect();
    names.extend(g.names().iter().cloned());
    FinLieAlgebra::new(d, table, Some(names))
}

/// `μ: I -> Q ×_α g`, `i ↦ (project(i), 0)`, with `(q, x)` acting on `I` through `x`.
///
/// `I` is abelian. `ker μ = V` and `coker μ = g`.
pub fn splice(g: &FinLieAlgebra, ses: &ModuleSES, alpha: &Cochain) -> Result<LieXMod> {
    if alpha.degree != 2 || alpha.g_dim != g.dim() || alpha.m_dim != ses.q.dim() {
        return Err(Error::invalid(
            "cocycle",
            "2-cochain into Q",
            format!("degree {}", alpha.degree),
        ));
    }
    let n = abelian_extension(g, &ses.q, alpha)?;
    if let Some(w) = closedness_witness(g, &ses.q, alpha) {
        return Err(Error::Inconsistent(format!(
            "extension satisfies Jacobi but {w}"
        )));
    }
    let (dq, di) = (ses.q.dim(), ses.i.dim());
    let m = FinLieAlgebra::abelian(di).with_names((0..di).map(|k| format!("i{k}")).collect())?;
    let mu = SparseMat::from_columns(n.dim(), ses.project.columns().to_vec())?;
    let mut action = vec![SparseMat::zeros(di, di); dq];
    action.extend(ses.i.action().iter().cloned());
    LieXMod::new(m, n, mu, action)
}

/// `ker μ = inject(V)` and `n / image(μ) ≅ g` through the projection onto the `g` part.
pub fn splice_report(g: &FinLieAlgebra, ses: &ModuleSES, x: &LieXMod) -> CheckReport {
    let mut report = CheckReport::new();
    let kernel = kernel_basis(x.mu());
    let k_mat = SparseMat::from_column_vecs(ses.i.dim(), &kernel).expect("dimensions");
    let joint = SparseMat::from_columns(
        ses.i.dim(),
        [k_mat.columns(), ses.inject.columns()].concat(),
    )
    .expect("dimensions");
    let same = kernel.len() == ses.v.dim() && rank(&joint) == ses.v.dim();
    report.record(
        "kernel of mu is V",
        (!same).then(|| format!("dim ker = {}", kernel.len())),
    );

    let dq = ses.q.dim();
    let n = x.n();
    let mut to_g = SparseMat::zeros(g.dim(), n.dim());
    for a in 0..g.dim() {
        to_g.set(a, a + dq, crate::linalg::one());
    }
    let morphism = n.morphism_witness(g, &to_g);
    let image_ok =
        to_g.mul(x.mu()).map(|p| p.is_zero()).unwrap_or(false) && rank(x.mu()) + g.dim() == n.dim();
    let w = morphism
        .or_else(|| (!image_ok).then(|| "image(mu) ≠ kernel of the projection".to_string()));
    report.record("cokernel of mu is g", w);
    report
}

/// `U` of the splice: `S(I) -> U(Q ×_α g)`.
pub fn enveloping_skeletal(
    g: &FinLieAlgebra,
    ses: &ModuleSES,
    alpha: &Cochain,
) -> Result<EnvelopingHopfXMod> {
    functor_u(&splice(g, ses, alpha)?)
}

/// For `α' = α + db` with `b: g -> Q`, the splices of `α` and `α'` and the morphism
/// `(id_I, (q, x) ↦ (q - b(x), x))` between them, with its verdicts.
pub fn coboundary_change(
    g: &FinLieAlgebra,
    ses: &ModuleSES,
    alpha: &Cochain,
    b: &Cochain,
) -> Result<(LieXMod, LieXMod, CheckReport)> {
    if b.degree != 1 || b.g_dim != g.dim() || b.m_dim != ses.q.dim() {
        return Err(Error::invalid(
            "cochain",
            "1-cochain into Q",
            format!("degree {}", b.degree),
        ));
    }
    let shifted = {
        let db = differential(g, &ses.q, b);
        let mut a = alpha.clone();
        for (t, v) in db.entries() {
            let cur = a.values.get(t).cloned().unwrap_or_default();
            a.set(t.clone(), cur.plus(v));
        }
        a
    };
    let x = splice(g, ses, alpha)?;
    let y = splice(g, ses, &shifted)?;
    let dq = ses.q.dim();
    let d = x.n().dim();
    let mut sigma = SparseMat::identity(d);
    for a in 0..g.dim() {
        for (k, c) in b.eval_basis(&[a]).iter() {
            sigma.set(*k, a + dq, -c.clone());
        }
    }
    let rho = SparseMat::identity(ses.i.dim());
    let report = lie_xmod_morphism(&x, &y, &rho, &sigma);
    Ok((x, y, report))
}
