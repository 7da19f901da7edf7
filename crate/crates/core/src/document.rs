//! Versioned JSON input documents.
//!
//! Every document is an object with `"schema": 1`, a `"kind"` and kind-specific fields.
//! Parsing validates the payload shape and reports the JSON path of the first violation;
//! building the algebra afterwards runs the structure's own constructor checks.
//!
//! Scalars are JSON integers or strings such as `"-3/4"`. Vectors are dense lists,
//! matrices are lists of rows. Brackets, products and cocycles list only the nonzero
//! entries as `[i, j, [coords]]`.

use std::fmt;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::cohomology::{Cochain, ModuleSES};
use crate::crossed::{
    FiniteHopfXMod, GroupXMod, HopfCoComod, LieTwoAlg, LieXMod, PreCat1Hopf, TwoGroup,
};
use crate::enveloping::{UEnvelope, UPoly};
use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::hopf::{FinDimHopf, HopfParts};
use crate::lie::{FinLieAlgebra, LieModule};
use crate::linalg::scalar::{format_scalar, parse_scalar};
use crate::linalg::{LinComb, Scalar, SparseMat};

pub const SCHEMA_VERSION: u64 = 1;

/// An exact rational as it appears in a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub Scalar);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match (self.0.is_integer(), i64::try_from(self.0.numer())) {
            (true, Ok(n)) => s.serialize_i64(n),
            _ => s.serialize_str(&format_scalar(&self.0)),
        }
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string like \"-3/4\"")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
                Ok(Rat(crate::linalg::int(v)))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
                i64::try_from(v)
                    .map(|v| Rat(crate::linalg::int(v)))
                    .map_err(|_| E::custom("integer too large; use a string"))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
                parse_scalar(v)
                    .map(Rat)
                    .ok_or_else(|| E::custom(format!("not a rational number: {v:?}")))
            }
        }
        d.deserialize_any(Visitor)
    }
}

pub type Rows = Vec<Vec<Rat>>;

/// `[i, j, [coords]]`: the nonzero entry at the index pair `(i, j)`.
pub type PairEntry = (usize, usize, Vec<Rat>);
/// `[k, [[i, j, c], ..]]`.
pub type ComultEntry = (usize, Vec<(usize, usize, Rat)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub order: usize,
    /// `table[a][b]` is the index of `ab`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    /// `"trivial"`, `"C<n>"` or `"S<n>"`, in place of a table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// `[x_i, x_j]` for `i < j`.
    pub bracket: Vec<PairEntry>,
}

/// Either explicit structure tensors or one of the two group constructions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_algebra: Option<GroupDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function_algebra: Option<GroupDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `e_i e_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<PairEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Rat>>,
    /// `[k, [[i, j, c], ..]]`: `Δ(e_k) = Σ c e_i ⊗ e_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<ComultEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Rows>,
}

/// A module over a Lie algebra supplied separately; one matrix per generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub dim: usize,
    pub action: Vec<Rows>,
}

/// `0 -> V -> I -> Q -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SesDoc {
    pub v: ModuleDoc,
    pub i: ModuleDoc,
    pub q: ModuleDoc,
    pub inject: Rows,
    pub project: Rows,
}

/// A 2-cochain `α(x_i, x_j)` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDoc {
    pub g_dim: usize,
    pub m_dim: usize,
    pub values: Vec<PairEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupXModDoc {
    pub m: GroupDoc,
    pub n: GroupDoc,
    pub mu: Vec<usize>,
    /// `action[n][m]` is the index of `ⁿm`.
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieXModDoc {
    pub m: LieDoc,
    pub n: LieDoc,
    pub mu: Rows,
    /// One `dim m × dim m` matrix per generator of `n`.
    pub action: Vec<Rows>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfXModDoc {
    pub b: HopfDoc,
    pub h: HopfDoc,
    pub gamma: Rows,
    /// One `dim B × dim B` matrix per basis element of `H`.
    pub phi: Vec<Rows>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoComodDoc {
    pub k: HopfDoc,
    pub l: HopfDoc,
    pub zeta: Rows,
    /// Row `k · dim L + l` holds the coefficient of `e_k ⊗ e_l`.
    pub rho: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoGroupDoc {
    pub g0: GroupDoc,
    pub g1: GroupDoc,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub i: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieTwoDoc {
    pub g0: LieDoc,
    pub g1: LieDoc,
    pub s: Rows,
    pub t: Rows,
    pub i: Rows,
}

/// `s, t: U(a) -> U(h)` and `e: U(h) -> U(a)` given on Lie generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreCat1Doc {
    pub a: LieDoc,
    pub h: LieDoc,
    pub s: Rows,
    pub t: Rows,
    pub e: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Group(GroupDoc),
    LieAlgebra(LieDoc),
    Hopf(HopfDoc),
    Module(ModuleDoc),
    Ses(SesDoc),
    Cocycle(CocycleDoc),
    GroupXMod(GroupXModDoc),
    LieXMod(LieXModDoc),
    HopfXMod(HopfXModDoc),
    CoComod(CoComodDoc),
    TwoGroup(TwoGroupDoc),
    LieTwoAlg(LieTwoDoc),
    PreCat1(PreCat1Doc),
}

pub const KINDS: [&str; 13] = [
    "group",
    "lie_algebra",
    "hopf",
    "module",
    "ses",
    "cocycle",
    "group_xmod",
    "lie_xmod",
    "hopf_xmod",
    "cocomod",
    "two_group",
    "lie_two_alg",
    "precat1",
];

fn payload<T: DeserializeOwned>(value: Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        Error::schema(path, e.into_inner().to_string())
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("document payloads serialize")
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::LieAlgebra(_) => "lie_algebra",
            Document::Hopf(_) => "hopf",
            Document::Module(_) => "module",
            Document::Ses(_) => "ses",
            Document::Cocycle(_) => "cocycle",
            Document::GroupXMod(_) => "group_xmod",
            Document::LieXMod(_) => "lie_xmod",
            Document::HopfXMod(_) => "hopf_xmod",
            Document::CoComod(_) => "cocomod",
            Document::TwoGroup(_) => "two_group",
            Document::LieTwoAlg(_) => "lie_two_alg",
            Document::PreCat1(_) => "precat1",
        }
    }

    pub fn to_value(&self) -> Value {
        let body = match self {
            Document::Group(d) => to_value(d),
            Document::LieAlgebra(d) => to_value(d),
            Document::Hopf(d) => to_value(d),
            Document::Module(d) => to_value(d),
            Document::Ses(d) => to_value(d),
            Document::Cocycle(d) => to_value(d),
            Document::GroupXMod(d) => to_value(d),
            Document::LieXMod(d) => to_value(d),
            Document::HopfXMod(d) => to_value(d),
            Document::CoComod(d) => to_value(d),
            Document::TwoGroup(d) => to_value(d),
            Document::LieTwoAlg(d) => to_value(d),
            Document::PreCat1(d) => to_value(d),
        };
        let mut object = Map::new();
        object.insert("schema".into(), Value::from(SCHEMA_VERSION));
        object.insert("kind".into(), Value::from(self.kind()));
        if let Value::Object(fields) = body {
            object.extend(fields);
        }
        Value::Object(object)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("documents serialize")
    }
}

/// Parses and shape-validates one document. No algebra is constructed.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::schema(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let Value::Object(mut object) = value else {
        return Err(Error::schema(".", "a document must be a JSON object"));
    };
    match object.remove("schema") {
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(v) => {
            return Err(Error::schema(
                "schema",
                format!("unsupported schema version {v}"),
            ))
        }
        None => return Err(Error::schema(".", "missing field `schema`")),
    }
    let kind = match object.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(Error::schema("kind", "expected a string")),
        None => return Err(Error::schema(".", "missing field `kind`")),
    };
    let body = Value::Object(object);
    Ok(match kind.as_str() {
        "group" => Document::Group(payload(body)?),
        "lie_algebra" => Document::LieAlgebra(payload(body)?),
        "hopf" => Document::Hopf(payload(body)?),
        "module" => Document::Module(payload(body)?),
        "ses" => Document::Ses(payload(body)?),
        "cocycle" => Document::Cocycle(payload(body)?),
        "group_xmod" => Document::GroupXMod(payload(body)?),
        "lie_xmod" => Document::LieXMod(payload(body)?),
        "hopf_xmod" => Document::HopfXMod(payload(body)?),
        "cocomod" => Document::CoComod(payload(body)?),
        "two_group" => Document::TwoGroup(payload(body)?),
        "lie_two_alg" => Document::LieTwoAlg(payload(body)?),
        "precat1" => Document::PreCat1(payload(body)?),
        other => {
            return Err(Error::schema(
                "kind",
                format!(
                    "unknown kind {other:?}; expected one of {}",
                    KINDS.join(", ")
                ),
            ))
        }
    })
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

fn scalars(v: &[Rat]) -> Vec<Scalar> {
    v.iter().map(|r| r.0.clone()).collect()
}

fn rats(v: &[Scalar]) -> Vec<Rat> {
    v.iter().cloned().map(Rat).collect()
}

fn lincomb(path: &str, coords: &[Rat], dim: usize) -> Result<LinComb<usize>> {
    if coords.len() != dim {
        return Err(Error::schema(
            path,
            format!("expected {dim} coordinates, found {}", coords.len()),
        ));
    }
    let mut lc = LinComb::new();
    for (k, c) in coords.iter().enumerate() {
        lc.add_term(k, c.0.clone());
    }
    Ok(lc)
}

fn dense(lc: &LinComb<usize>, dim: usize) -> Vec<Rat> {
    (0..dim).map(|k| Rat(lc.coeff(&k))).collect()
}

fn matrix(path: &str, rows: &Rows, nrows: usize, ncols: usize) -> Result<SparseMat> {
    if rows.len() != nrows {
        return Err(Error::schema(
            path,
            format!("expected {nrows} rows, found {}", rows.len()),
        ));
    }
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != ncols) {
        return Err(Error::schema(
            format!("{path}[{r}]"),
            format!("expected {ncols} entries, found {}", row.len()),
        ));
    }
    let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| scalars(r)).collect();
    SparseMat::from_dense_rows(&dense, ncols)
}

/// Dense rows of `m`, as written in documents and reports.
pub fn rows_of(m: &SparseMat) -> Rows {
    m.to_dense_rows().into_iter().map(|r| rats(&r)).collect()
}

fn matrices(
    path: &str,
    list: &[Rows],
    count: usize,
    nrows: usize,
    ncols: usize,
) -> Result<Vec<SparseMat>> {
    if list.len() != count {
        return Err(Error::schema(
            path,
            format!("expected {count} matrices, found {}", list.len()),
        ));
    }
    list.iter()
        .enumerate()
        .map(|(k, m)| matrix(&format!("{path}[{k}]"), m, nrows, ncols))
        .collect()
}

fn index_map(path: &str, map: &[usize], len: usize, bound: usize) -> Result<Vec<usize>> {
    if map.len() != len {
        return Err(Error::schema(
            path,
            format!("expected {len} entries, found {}", map.len()),
        ));
    }
    if let Some((k, v)) = map.iter().enumerate().find(|(_, &v)| v >= bound) {
        return Err(Error::schema(
            format!("{path}[{k}]"),
            format!("index {v} out of range 0..{bound}"),
        ));
    }
    Ok(map.to_vec())
}

fn pair_entries(
    path: &str,
    entries: &[PairEntry],
    dim: usize,
    value_dim: usize,
) -> Result<Vec<(usize, usize, LinComb<usize>)>> {
    entries
        .iter()
        .enumerate()
        .map(|(k, (i, j, coords))| {
            let at = format!("{path}[{k}]");
            if i >= j || *j >= dim {
                return Err(Error::schema(
                    &at,
                    format!("need i < j < {dim}, found ({i}, {j})"),
                ));
            }
            Ok((*i, *j, lincomb(&at, coords, value_dim)?))
        })
        .collect()
}

impl GroupDoc {
    pub fn build(&self, path: &str) -> Result<FinGroup> {
        let group = match (&self.table, &self.named) {
            (Some(table), None) => {
                if table.len() != self.order {
                    return Err(Error::schema(
                        join(path, "table"),
                        format!("expected {} rows, found {}", self.order, table.len()),
                    ));
                }
                for (r, row) in table.iter().enumerate() {
                    index_map(
                        &format!("{}[{r}]", join(path, "table")),
                        row,
                        self.order,
                        self.order,
                    )?;
                }
                return FinGroup::from_table(table.clone(), self.labels.clone());
            }
            (None, Some(name)) => named_group(&join(path, "named"), name)?,
            (None, None) if self.order == 1 => FinGroup::trivial(),
            _ => {
                return Err(Error::schema(
                    path,
                    "give exactly one of `table` and `named`",
                ))
            }
        };
        if group.order() != self.order {
            return Err(Error::schema(
                join(path, "order"),
                format!(
                    "{} has order {}",
                    self.named.as_deref().unwrap_or("group"),
                    group.order()
                ),
            ));
        }
        match &self.labels {
            Some(labels) => FinGroup::from_table(group.table(), Some(labels.clone())),
            None => Ok(group),
        }
    }

    pub fn from_group(g: &FinGroup) -> Self {
        Self {
            order: g.order(),
            table: Some(g.table()),
            named: None,
            labels: Some(g.labels().to_vec()),
        }
    }
}

fn named_group(path: &str, name: &str) -> Result<FinGroup> {
    let parse = |digits: &str| digits.parse::<usize>().ok().filter(|&n| n >= 1);
    match name {
        "trivial" => Some(FinGroup::trivial()),
        _ if name.starts_with('C') => parse(&name[1..]).map(FinGroup::cyclic),
        _ if name.starts_with('S') => parse(&name[1..])
            .filter(|&n| n <= 6)
            .map(FinGroup::symmetric),
        _ => None,
    }
    .ok_or_else(|| {
        Error::schema(
            path,
            format!("unknown group name {name:?}; use trivial, C<n> or S<n> with n <= 6"),
        )
    })
}

impl LieDoc {
    pub fn build(&self, path: &str) -> Result<FinLieAlgebra> {
        let entries = pair_entries(&join(path, "bracket"), &self.bracket, self.dim, self.dim)?;
        if let Some(names) = &self.names {
            if names.len() != self.dim {
                return Err(Error::schema(
                    join(path, "names"),
                    format!("expected {} names, found {}", self.dim, names.len()),
                ));
            }
        }
        FinLieAlgebra::from_upper(self.dim, entries, self.names.clone())
    }

    pub fn from_lie(g: &FinLieAlgebra) -> Self {
        let n = g.dim();
        let bracket = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.bracket_basis(i, j).is_zero())
            .map(|(i, j)| (i, j, dense(g.bracket_basis(i, j), n)))
            .collect();
        Self {
            dim: n,
            names: Some(g.names().to_vec()),
            bracket,
        }
    }
}

impl HopfDoc {
    pub fn build(&self, path: &str) -> Result<FinDimHopf> {
        let explicit = self.dim.is_some();
        match (&self.group_algebra, &self.function_algebra, explicit) {
            (Some(g), None, false) => Ok(FinDimHopf::group_algebra(
                &g.build(&join(path, "group_algebra"))?,
            )),
            (None, Some(g), false) => Ok(FinDimHopf::function_algebra(
                &g.build(&join(path, "function_algebra"))?,
            )),
            (None, None, true) => self.build_explicit(path),
            _ => Err(Error::schema(
                path,
                "give exactly one of `group_algebra`, `function_algebra` and `dim`",
            )),
        }
    }

    fn build_explicit(&self, path: &str) -> Result<FinDimHopf> {
        let n = self.dim.unwrap_or_default();
        let field = |name: &str| Error::schema(path, format!("missing field `{name}`"));
        let mult = self.mult.as_ref().ok_or_else(|| field("mult"))?;
        let unit = self.unit.as_ref().ok_or_else(|| field("unit"))?;
        let comult = self.comult.as_ref().ok_or_else(|| field("comult"))?;
        let counit = self.counit.as_ref().ok_or_else(|| field("counit"))?;
        let antipode = self.antipode.as_ref().ok_or_else(|| field("antipode"))?;

        let mut mult_table = vec![LinComb::new(); n * n];
        let mult_path = join(path, "mult");
        for (k, (i, j, coords)) in mult.iter().enumerate() {
            let at = format!("{mult_path}[{k}]");
            if *i >= n || *j >= n {
                return Err(Error::schema(
                    &at,
                    format!("index pair ({i}, {j}) out of range 0..{n}"),
                ));
            }
            mult_table[i * n + j] = lincomb(&at, coords, n)?;
        }
        let mut comult_table = vec![LinComb::new(); n];
        let comult_path = join(path, "comult");
        for (k, (e, terms)) in comult.iter().enumerate() {
            let at = format!("{comult_path}[{k}]");
            if *e >= n {
                return Err(Error::schema(&at, format!("index {e} out of range 0..{n}")));
            }
            let mut lc = LinComb::new();
            for (i, j, c) in terms {
                if *i >= n || *j >= n {
                    return Err(Error::schema(
                        &at,
                        format!("tensor index ({i}, {j}) out of range 0..{n}"),
                    ));
                }
                lc.add_term(i * n + j, c.0.clone());
            }
            comult_table[*e] = lc;
        }
        if counit.len() != n {
            return Err(Error::schema(
                join(path, "counit"),
                format!("expected {n} entries, found {}", counit.len()),
            ));
        }
        FinDimHopf::new(HopfParts {
            dim: n,
            mult: mult_table,
            unit: lincomb(&join(path, "unit"), unit, n)?,
            comult: comult_table,
            counit: scalars(counit),
            antipode: matrix(&join(path, "antipode"), antipode, n, n)?,
            labels: self.labels.clone(),
        })
    }

    pub fn from_hopf(h: &FinDimHopf) -> Self {
        let parts = h.parts();
        let n = parts.dim;
        let mult = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !parts.mult[i * n + j].is_zero())
            .map(|(i, j)| (i, j, dense(&parts.mult[i * n + j], n)))
            .collect();
        let comult = parts
            .comult
            .iter()
            .enumerate()
            .map(|(k, lc)| {
                (
                    k,
                    lc.iter()
                        .map(|(t, c)| (t / n, t % n, Rat(c.clone())))
                        .collect(),
                )
            })
            .collect();
        Self {
            group_algebra: None,
            function_algebra: None,
            dim: Some(n),
            labels: Some(h.labels().to_vec()),
            mult: Some(mult),
            unit: Some(dense(&parts.unit, n)),
            comult: Some(comult),
            counit: Some(rats(&parts.counit)),
            antipode: Some(rows_of(&parts.antipode)),
        }
    }
}

impl ModuleDoc {
    pub fn build(&self, path: &str, g: &FinLieAlgebra) -> Result<LieModule> {
        let action = matrices(
            &join(path, "action"),
            &self.action,
            g.dim(),
            self.dim,
            self.dim,
        )?;
        LieModule::new(g, self.dim, action)
    }

    pub fn from_module(m: &LieModule) -> Self {
        Self {
            dim: m.dim(),
            action: m.action().iter().map(rows_of).collect(),
        }
    }
}

impl SesDoc {
    pub fn build(&self, path: &str, g: &FinLieAlgebra) -> Result<ModuleSES> {
        let v = self.v.build(&join(path, "v"), g)?;
        let i = self.i.build(&join(path, "i"), g)?;
        let q = self.q.build(&join(path, "q"), g)?;
        let inject = matrix(&join(path, "inject"), &self.inject, i.dim(), v.dim())?;
        let project = matrix(&join(path, "project"), &self.project, q.dim(), i.dim())?;
        ModuleSES::new(g, v, i, q, inject, project)
    }
}

impl CocycleDoc {
    pub fn build(&self, path: &str) -> Result<Cochain> {
        let entries = pair_entries(&join(path, "values"), &self.values, self.g_dim, self.m_dim)?;
        Cochain::new(
            2,
            self.g_dim,
            self.m_dim,
            entries
                .into_iter()
                .map(|(i, j, v)| (vec![i, j], v))
                .collect(),
        )
    }
}

impl GroupXModDoc {
    pub fn build(&self, path: &str) -> Result<GroupXMod> {
        let m = self.m.build(&join(path, "m"))?;
        let n = self.n.build(&join(path, "n"))?;
        let mu = index_map(&join(path, "mu"), &self.mu, m.order(), n.order())?;
        if self.action.len() != n.order() {
            return Err(Error::schema(
                join(path, "action"),
                format!("expected {} rows, found {}", n.order(), self.action.len()),
            ));
        }
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(r, row)| {
                index_map(
                    &format!("{}[{r}]", join(path, "action")),
                    row,
                    m.order(),
                    m.order(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        GroupXMod::new(m, n, mu, action)
    }

    pub fn from_xmod(x: &GroupXMod) -> Self {
        Self {
            m: GroupDoc::from_group(x.m()),
            n: GroupDoc::from_group(x.n()),
            mu: x.mu_table().to_vec(),
            action: x.action_table().to_vec(),
        }
    }
}

impl LieXModDoc {
    pub fn build(&self, path: &str) -> Result<LieXMod> {
        let m = self.m.build(&join(path, "m"))?;
        let n = self.n.build(&join(path, "n"))?;
        let mu = matrix(&join(path, "mu"), &self.mu, n.dim(), m.dim())?;
        let action = matrices(
            &join(path, "action"),
            &self.action,
            n.dim(),
            m.dim(),
            m.dim(),
        )?;
        LieXMod::new(m, n, mu, action)
    }

    pub fn from_xmod(x: &LieXMod) -> Self {
        Self {
            m: LieDoc::from_lie(x.m()),
            n: LieDoc::from_lie(x.n()),
            mu: rows_of(x.mu()),
            action: x.action().iter().map(rows_of).collect(),
        }
    }
}

impl HopfXModDoc {
    pub fn build(&self, path: &str) -> Result<FiniteHopfXMod> {
        let b = self.b.build(&join(path, "b"))?;
        let h = self.h.build(&join(path, "h"))?;
        let gamma = matrix(&join(path, "gamma"), &self.gamma, h.dim(), b.dim())?;
        let phi = matrices(&join(path, "phi"), &self.phi, h.dim(), b.dim(), b.dim())?;
        FiniteHopfXMod::new(b, h, gamma, phi)
    }

    pub fn from_xmod(x: &FiniteHopfXMod) -> Self {
        Self {
            b: HopfDoc::from_hopf(&x.b),
            h: HopfDoc::from_hopf(&x.h),
            gamma: rows_of(&x.gamma),
            phi: x.phi.iter().map(rows_of).collect(),
        }
    }
}

impl CoComodDoc {
    pub fn build(&self, path: &str) -> Result<HopfCoComod> {
        let k = self.k.build(&join(path, "k"))?;
        let l = self.l.build(&join(path, "l"))?;
        let zeta = matrix(&join(path, "zeta"), &self.zeta, l.dim(), k.dim())?;
        let rho = matrix(&join(path, "rho"), &self.rho, k.dim() * l.dim(), l.dim())?;
        HopfCoComod::new(k, l, zeta, rho)
    }

    pub fn from_cocomod(x: &HopfCoComod) -> Self {
        Self {
            k: HopfDoc::from_hopf(&x.k),
            l: HopfDoc::from_hopf(&x.l),
            zeta: rows_of(&x.zeta),
            rho: rows_of(&x.rho),
        }
    }
}

impl TwoGroupDoc {
    pub fn build(&self, path: &str) -> Result<TwoGroup> {
        let g0 = self.g0.build(&join(path, "g0"))?;
        let g1 = self.g1.build(&join(path, "g1"))?;
        let s = index_map(&join(path, "s"), &self.s, g1.order(), g0.order())?;
        let t = index_map(&join(path, "t"), &self.t, g1.order(), g0.order())?;
        let i = index_map(&join(path, "i"), &self.i, g0.order(), g1.order())?;
        TwoGroup::new(g0, g1, s, t, i)
    }

    pub fn from_two_group(g: &TwoGroup) -> Self {
        Self {
            g0: GroupDoc::from_group(g.g0()),
            g1: GroupDoc::from_group(g.g1()),
            s: g.s_map().to_vec(),
            t: g.t_map().to_vec(),
            i: g.i_map().to_vec(),
        }
    }
}

impl LieTwoDoc {
    pub fn build(&self, path: &str) -> Result<LieTwoAlg> {
        let g0 = self.g0.build(&join(path, "g0"))?;
        let g1 = self.g1.build(&join(path, "g1"))?;
        let s = matrix(&join(path, "s"), &self.s, g0.dim(), g1.dim())?;
        let t = matrix(&join(path, "t"), &self.t, g0.dim(), g1.dim())?;
        let i = matrix(&join(path, "i"), &self.i, g1.dim(), g0.dim())?;
        LieTwoAlg::new(g0, g1, s, t, i)
    }

    pub fn from_lie_two(g: &LieTwoAlg) -> Self {
        Self {
            g0: LieDoc::from_lie(g.g0()),
            g1: LieDoc::from_lie(g.g1()),
            s: rows_of(g.s()),
            t: rows_of(g.t()),
            i: rows_of(g.i()),
        }
    }
}

impl PreCat1Doc {
    pub fn build(&self, path: &str) -> Result<PreCat1Hopf> {
        let a = Arc::new(UEnvelope::new(self.a.build(&join(path, "a"))?));
        let h = Arc::new(UEnvelope::new(self.h.build(&join(path, "h"))?));
        let (da, dh) = (a.lie().dim(), h.lie().dim());
        let images = |m: &SparseMat, target: &UEnvelope| -> Vec<UPoly> {
            m.columns()
                .iter()
                .map(|col| col.map_linear(|&k| target.generator(k)))
                .collect()
        };
        let s = matrix(&join(path, "s"), &self.s, dh, da)?;
        let t = matrix(&join(path, "t"), &self.t, dh, da)?;
        let e = matrix(&join(path, "e"), &self.e, da, dh)?;
        let (s, t, e) = (images(&s, &h), images(&t, &h), images(&e, &a));
        PreCat1Hopf::new(a, h, s, t, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_from_order_alone() {
        let Document::Group(g) =
            parse_document(r#"{"schema":1,"kind":"group","order":1}"#).unwrap()
        else {
            panic!("wrong kind");
        };
        assert_eq!(g.build("").unwrap().order(), 1);
    }

    #[test]
    fn missing_bracket_names_the_path() {
        let text = r#"{"schema":1,"kind":"lie_xmod","m":{"dim":1,"bracket":[]},"n":{"dim":1},"mu":[[0]],"action":[[[0]]]}"#;
        let Error::Schema { path, reason } = parse_document(text).unwrap_err() else {
            panic!("expected a schema error");
        };
        assert_eq!(path, "n");
        assert!(reason.contains("bracket"), "{reason}");
    }

    #[test]
    fn nested_type_errors_are_located() {
        let text = r#"{"schema":1,"kind":"lie_algebra","dim":2,"bracket":[[0,1,[1,"x"]]]}"#;
        let Error::Schema { path, .. } = parse_document(text).unwrap_err() else {
            panic!("expected a schema error");
        };
        assert_eq!(path, "bracket[0][2][1]");
    }

    #[test]
    fn unknown_kind_and_version_are_rejected() {
        assert!(matches!(
            parse_document(r#"{"schema":1,"kind":"ring"}"#),
            Err(Error::Schema { .. })
        ));
        assert!(matches!(
            parse_document(r#"{"schema":2,"kind":"group","order":1}"#),
            Err(Error::Schema { .. })
        ));
        assert!(matches!(parse_document("[1, 2"), Err(Error::Schema { .. })));
    }

    #[test]
    fn lie_document_round_trips() {
        let g = FinLieAlgebra::sl2();
        let doc = Document::LieAlgebra(LieDoc::from_lie(&g));
        let again = parse_document(&doc.to_json_pretty()).unwrap();
        assert_eq!(again, doc);
        let Document::LieAlgebra(d) = again else {
            unreachable!()
        };
        assert_eq!(d.build("").unwrap(), g);
    }

    #[test]
    fn explicit_hopf_round_trips() {
        let h = FinDimHopf::function_algebra(&FinGroup::symmetric(3));
        let doc = Document::Hopf(HopfDoc::from_hopf(&h));
        let Document::Hopf(d) = parse_document(&doc.to_json_pretty()).unwrap() else {
            unreachable!()
        };
        assert_eq!(d.build("").unwrap(), h);
    }

    #[test]
    fn fractions_parse_exactly() {
        let text = r#"{"schema":1,"kind":"cocycle","g_dim":2,"m_dim":1,"values":[[0,1,["-3/4"]]]}"#;
        let Document::Cocycle(c) = parse_document(text).unwrap() else {
            unreachable!()
        };
        let c = c.build("").unwrap();
        assert_eq!(c.eval_basis(&[1, 0]).coeff(&0), crate::linalg::ratio(3, 4));
    }

    #[test]
    fn reversed_pair_is_a_schema_error() {
        let text = r#"{"schema":1,"kind":"lie_algebra","dim":2,"bracket":[[1,0,[1,0]]]}"#;
        let Document::LieAlgebra(d) = parse_document(text).unwrap() else {
            unreachable!()
        };
        let Error::Schema { path, .. } = d.build("").unwrap_err() else {
            panic!()
        };
        assert_eq!(path, "bracket[0]");
    }
}
