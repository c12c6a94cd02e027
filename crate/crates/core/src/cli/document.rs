//! Model documents: TOML text with exact rationals, resolved into the
//! library's types.
//!
//! ```toml
//! [algebra]
//! basis = ["e", "x"]
//! products = [[0, 0, 0, "1"], [0, 1, 1, "1"]]   # e_i · e_j += c e_k
//!
//! [bimodule]
//! kind = "adjoint"          # or coadjoint, trivial, custom
//!
//! [maps.R]
//! rows = [["0", "0"], ["1", "0"]]               # row = output coordinate
//! ```

use crate::algebra::{canonical_bimodule, validate_model, Algebra, Bimodule, BimoduleKind, ModelIdentity};
use crate::homotopy::{GradedSpace, HomotopyKind, HomotopyStructure, OpIndex};
use crate::linalg::scalar::{self, fmt_scalar, parse_scalar, Scalar, Vector};
use crate::linalg::{Matrix, MultiTensor};
use crate::yang_baxter::{Tensor2, Tensor3};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("in [{section}]: {message}")]
    Semantic { section: String, message: String },
}

fn semantic<T>(section: &str, message: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError::Semantic {
        section: section.to_string(),
        message: message.into(),
    })
}

/// An integer or a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn scalar(&self, section: &str) -> Result<Scalar, DocumentError> {
        match self {
            Num::Int(n) => Ok(scalar::int(*n)),
            Num::Text(t) => parse_scalar(t).map_err(|e| DocumentError::Semantic {
                section: section.to_string(),
                message: e.to_string(),
            }),
        }
    }

    fn index(&self, section: &str, bound: usize) -> Result<usize, DocumentError> {
        match self {
            Num::Int(n) if *n >= 0 && (*n as usize) < bound => Ok(*n as usize),
            other => semantic(section, format!("index {other:?} outside 0..{bound}")),
        }
    }

    fn of(x: &Scalar) -> Num {
        Num::Text(fmt_scalar(x))
    }
}

type Quad = (usize, usize, usize, Num);

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    basis: Vec<String>,
    #[serde(default)]
    products: Vec<Quad>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBimodule {
    #[serde(default = "custom")]
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    left: Vec<Quad>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    right: Vec<Quad>,
}

fn custom() -> String {
    "custom".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: Vec<Vec<Num>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTensor {
    /// `[i, j, c]` for `A⊗A`, `[i, j, k, c]` for `A⊗A⊗A`.
    terms: Vec<Vec<Num>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    vectors: Vec<Vec<Num>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeries {
    terms: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    degree: i64,
    basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOp {
    arity: usize,
    index: String,
    /// `[input indices…, output index, coefficient]`.
    entries: Vec<Vec<Num>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraded {
    kind: String,
    arity_bound: usize,
    blocks: Vec<RawBlock>,
    #[serde(default)]
    ops: Vec<RawOp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoTermSpec {
    /// Names in `[bimodules]` and `[maps]`.
    pub m: String,
    pub n: String,
    pub d: String,
    pub r_m: String,
    pub s_m: String,
    pub r_n: String,
    pub s_n: String,
    pub arity_bound: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    algebra: RawAlgebra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bimodule: Option<RawBimodule>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    bimodules: BTreeMap<String, RawBimodule>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    maps: BTreeMap<String, RawMatrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    tensors: BTreeMap<String, RawTensor>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    subspaces: BTreeMap<String, RawSubspace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    series: Option<RawSeries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graded: Option<RawGraded>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graded_module: Option<RawGraded>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    two_term: Option<TwoTermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedTensor {
    Two(Tensor2),
    Three(Tensor3),
}

/// A fully resolved document. Bimodules are validated against the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelDocument {
    pub algebra: Algebra,
    /// The adjoint bimodule when the document has none.
    pub bimodule: Bimodule,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub maps: BTreeMap<String, Matrix>,
    pub tensors: BTreeMap<String, NamedTensor>,
    pub subspaces: BTreeMap<String, Vec<Vector>>,
    /// `(R_i, S_i)` map names, `i = 1..`.
    pub series: Vec<(String, String)>,
    pub graded: Option<HomotopyStructure>,
    pub graded_module: Option<HomotopyStructure>,
    pub two_term: Option<TwoTermSpec>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn parse_model(text: &str) -> Result<ModelDocument, DocumentError> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((0, 0), |s| line_col(text, s.start));
        DocumentError::Parse {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;
    resolve(raw)
}

fn unique_names(section: &str, names: &[String]) -> Result<(), DocumentError> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return semantic(section, format!("basis name `{n}` repeated"));
        }
    }
    if names.is_empty() {
        return semantic(section, "empty basis");
    }
    Ok(())
}

fn quads(section: &str, q: &[Quad], bounds: [usize; 3]) -> Result<Vec<(usize, usize, usize, Scalar)>, DocumentError> {
    q.iter()
        .map(|(i, j, k, c)| {
            for (x, b) in [i, j, k].into_iter().zip(bounds) {
                if *x >= b {
                    return semantic(section, format!("index {x} outside 0..{b} in [{i}, {j}, {k}, …]"));
                }
            }
            Ok((*i, *j, *k, c.scalar(section)?))
        })
        .collect()
}

fn resolve_algebra(raw: &RawAlgebra) -> Result<Algebra, DocumentError> {
    const S: &str = "algebra";
    unique_names(S, &raw.basis)?;
    let n = raw.basis.len();
    if raw.dim.is_some_and(|d| d != n) {
        return semantic(S, format!("dim = {} but the basis has {n} vectors", raw.dim.unwrap_or(0)));
    }
    let names: Vec<&str> = raw.basis.iter().map(String::as_str).collect();
    let k = quads(S, &raw.products, [n; 3])?;
    Algebra::from_constants(&names, &k).or_else(|e| semantic(S, e.to_string()))
}

fn resolve_bimodule(section: &str, raw: &RawBimodule, alg: &Algebra) -> Result<Bimodule, DocumentError> {
    let n = alg.dim();
    let no_tables = |what: &str| {
        if raw.left.is_empty() && raw.right.is_empty() {
            Ok(())
        } else {
            semantic(section, format!("a {what} bimodule takes no action tables"))
        }
    };
    match raw.kind.as_str() {
        "adjoint" | "coadjoint" => {
            no_tables(&raw.kind)?;
            if raw.basis.is_some() {
                return semantic(section, "the basis of a canonical bimodule is derived from the algebra");
            }
            let kind = if raw.kind == "adjoint" { BimoduleKind::Adjoint } else { BimoduleKind::Coadjoint };
            Ok(canonical_bimodule(alg, kind))
        }
        "trivial" | "custom" => {
            if raw.kind == "trivial" {
                no_tables("trivial")?;
            }
            let Some(basis) = &raw.basis else {
                return semantic(section, "a basis is required");
            };
            unique_names(section, basis)?;
            let m = basis.len();
            let names: Vec<&str> = basis.iter().map(String::as_str).collect();
            let left = quads(section, &raw.left, [n, m, m])?;
            let right = quads(section, &raw.right, [m, n, m])?;
            Bimodule::from_actions(n, &names, &left, &right).or_else(|e| semantic(section, e.to_string()))
        }
        other => semantic(section, format!("unknown bimodule kind `{other}`")),
    }
}

fn vector(section: &str, row: &[Num]) -> Result<Vector, DocumentError> {
    row.iter().map(|c| c.scalar(section)).collect()
}

fn resolve_matrix(section: &str, raw: &RawMatrix) -> Result<Matrix, DocumentError> {
    let rows: Vec<Vector> = raw.rows.iter().map(|r| vector(section, r)).collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return semantic(section, "a matrix needs at least one row");
    }
    Matrix::from_rows(rows).or_else(|e| semantic(section, e.to_string()))
}

fn resolve_tensor(section: &str, raw: &RawTensor, n: usize) -> Result<NamedTensor, DocumentError> {
    let order = raw.terms.first().map_or(3, Vec::len);
    if raw.terms.iter().any(|t| t.len() != order) || !(order == 3 || order == 4) {
        return semantic(section, "terms are all [i, j, c] or all [i, j, k, c]");
    }
    if order == 3 {
        let terms = raw
            .terms
            .iter()
            .map(|t| Ok((t[0].index(section, n)?, t[1].index(section, n)?, t[2].scalar(section)?)))
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(NamedTensor::Two(Tensor2::from_terms(n, &terms)))
    } else {
        let mut t3 = Tensor3::zero(n);
        for t in &raw.terms {
            let (i, j, k) = (t[0].index(section, n)?, t[1].index(section, n)?, t[2].index(section, n)?);
            let c = t[3].scalar(section)?;
            t3.add_simple(&c, &scalar::unit(n, i), &scalar::unit(n, j), &scalar::unit(n, k));
        }
        Ok(NamedTensor::Three(t3))
    }
}

fn graded_space(section: &str, blocks: &[RawBlock]) -> Result<GradedSpace, DocumentError> {
    let b: Vec<(i64, Vec<String>)> = blocks.iter().map(|b| (b.degree, b.basis.clone())).collect();
    let space = GradedSpace::new(b).or_else(|e| semantic(section, e.to_string()))?;
    if space.dim() == 0 {
        return semantic(section, "empty graded space");
    }
    Ok(space)
}

fn graded_ops(
    section: &str,
    raw: &RawGraded,
    space: &GradedSpace,
    over: Option<&GradedSpace>,
) -> Result<Vec<((usize, OpIndex), MultiTensor)>, DocumentError> {
    let mut out: BTreeMap<(usize, OpIndex), MultiTensor> = BTreeMap::new();
    for op in &raw.ops {
        let idx: OpIndex = op.index.parse().or_else(|e: crate::Error| semantic(section, e.to_string()))?;
        let k = op.arity;
        if k == 0 {
            return semantic(section, "arity 0 operations are not allowed");
        }
        let dims: Vec<usize> = (1..=k)
            .map(|q| match (over, idx) {
                (Some(a), OpIndex::Slot(p)) if p != q => a.dim(),
                _ => space.dim(),
            })
            .collect();
        let t = out
            .entry((k, idx))
            .or_insert_with(|| MultiTensor::zero(dims.clone(), space.dim()));
        for e in &op.entries {
            if e.len() != k + 2 {
                return semantic(section, format!("μ_{k}{idx} entries have {} fields, expected {}", e.len(), k + 2));
            }
            let tuple: Vec<usize> = e[..k]
                .iter()
                .zip(&dims)
                .map(|(x, &d)| x.index(section, d))
                .collect::<Result<_, _>>()?;
            let target = e[k].index(section, space.dim())?;
            let c = e[k + 1].scalar(section)?;
            t.add_to(&tuple, &scalar::scale(&c, &scalar::unit(space.dim(), target)));
        }
    }
    Ok(out.into_iter().collect())
}

fn resolve_graded(raw: &RawGraded) -> Result<HomotopyStructure, DocumentError> {
    const S: &str = "graded";
    let kind: HomotopyKind = raw.kind.parse().or_else(|e: crate::Error| semantic(S, e.to_string()))?;
    let space = graded_space(S, &raw.blocks)?;
    let ops = graded_ops(S, raw, &space, None)?;
    HomotopyStructure::new(kind, space, raw.arity_bound, ops).or_else(|e| semantic(S, e.to_string()))
}

fn resolve_graded_module(raw: &RawGraded, over: &HomotopyStructure) -> Result<HomotopyStructure, DocumentError> {
    const S: &str = "graded_module";
    if raw.kind != "ainf_bimodule" {
        return semantic(S, "kind must be `ainf_bimodule`");
    }
    let space = graded_space(S, &raw.blocks)?;
    let ops = graded_ops(S, raw, &space, Some(over.space()))?;
    HomotopyStructure::bimodule(over.clone(), space, raw.arity_bound, ops).or_else(|e| semantic(S, e.to_string()))
}

fn identity_name(i: ModelIdentity) -> &'static str {
    match i {
        ModelIdentity::Associativity => "associativity (ab)c = a(bc)",
        ModelIdentity::LeftAction => "left action (ab)u = a(bu)",
        ModelIdentity::RightAction => "right action (ua)b = u(ab)",
        ModelIdentity::Middle => "middle (au)b = a(ub)",
    }
}

/// First failing triple of `validate_model`, named.
fn validate(section: &str, alg: &Algebra, module: &Bimodule) -> Result<(), DocumentError> {
    let rep = validate_model(alg, module).or_else(|e| semantic(section, e.to_string()))?;
    if let Some((id, [x, y, z])) = rep.failing_triples.first() {
        let names = match id {
            ModelIdentity::Associativity => [alg.name(*x), alg.name(*y), alg.name(*z)],
            ModelIdentity::LeftAction => [alg.name(*x), alg.name(*y), module.name(*z)],
            ModelIdentity::RightAction => [module.name(*x), alg.name(*y), alg.name(*z)],
            ModelIdentity::Middle => [alg.name(*x), module.name(*y), alg.name(*z)],
        };
        let sect = if *id == ModelIdentity::Associativity { "algebra" } else { section };
        return semantic(sect, format!("{} fails at ({})", identity_name(*id), names.join(",")));
    }
    Ok(())
}

fn resolve(raw: RawDocument) -> Result<ModelDocument, DocumentError> {
    let algebra = resolve_algebra(&raw.algebra)?;
    let n = algebra.dim();
    let bimodule = match &raw.bimodule {
        Some(b) => resolve_bimodule("bimodule", b, &algebra)?,
        None => canonical_bimodule(&algebra, BimoduleKind::Adjoint),
    };
    validate("bimodule", &algebra, &bimodule)?;
    let mut bimodules = BTreeMap::new();
    for (name, b) in &raw.bimodules {
        let section = format!("bimodules.{name}");
        let m = resolve_bimodule(&section, b, &algebra)?;
        validate(&section, &algebra, &m)?;
        bimodules.insert(name.clone(), m);
    }
    let maps = raw
        .maps
        .iter()
        .map(|(k, v)| Ok((k.clone(), resolve_matrix(&format!("maps.{k}"), v)?)))
        .collect::<Result<BTreeMap<_, _>, DocumentError>>()?;
    let tensors = raw
        .tensors
        .iter()
        .map(|(k, v)| Ok((k.clone(), resolve_tensor(&format!("tensors.{k}"), v, n)?)))
        .collect::<Result<BTreeMap<_, _>, DocumentError>>()?;
    let subspaces = raw
        .subspaces
        .iter()
        .map(|(k, v)| {
            let section = format!("subspaces.{k}");
            let vs = v.vectors.iter().map(|r| vector(&section, r)).collect::<Result<Vec<_>, _>>()?;
            Ok((k.clone(), vs))
        })
        .collect::<Result<BTreeMap<_, _>, DocumentError>>()?;
    let series = raw.series.as_ref().map(|s| s.terms.clone()).unwrap_or_default();
    for (r, s) in &series {
        for name in [r, s] {
            if !maps.contains_key(name) {
                return semantic("series", format!("map `{name}` is not defined in [maps]"));
            }
        }
    }
    let graded = raw.graded.as_ref().map(resolve_graded).transpose()?;
    let graded_module = match (&raw.graded_module, &graded) {
        (None, _) => None,
        (Some(_), None) => return semantic("graded_module", "needs a [graded] A∞-algebra"),
        (Some(m), Some(a)) => Some(resolve_graded_module(m, a)?),
    };
    if let Some(t) = &raw.two_term {
        for name in [&t.m, &t.n] {
            if !bimodules.contains_key(name) {
                return semantic("two_term", format!("bimodule `{name}` is not defined in [bimodules]"));
            }
        }
        for name in [&t.d, &t.r_m, &t.s_m, &t.r_n, &t.s_n] {
            if !maps.contains_key(name) {
                return semantic("two_term", format!("map `{name}` is not defined in [maps]"));
            }
        }
    }
    Ok(ModelDocument {
        algebra,
        bimodule,
        bimodules,
        maps,
        tensors,
        subspaces,
        series,
        graded,
        graded_module,
        two_term: raw.two_term,
    })
}

fn emit_quads(t: &MultiTensor) -> Vec<Quad> {
    t.entries()
        .flat_map(|(tuple, v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (tuple[0], tuple[1], k, Num::of(c)))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn emit_bimodule(m: &Bimodule) -> RawBimodule {
    RawBimodule {
        kind: custom(),
        basis: Some(m.names().to_vec()),
        left: emit_quads(m.left_table()),
        right: emit_quads(m.right_table()),
    }
}

fn emit_rows(rows: &[Vector]) -> Vec<Vec<Num>> {
    rows.iter().map(|r| r.iter().map(Num::of).collect()).collect()
}

fn emit_graded(h: &HomotopyStructure) -> RawGraded {
    let space = h.space();
    let mut blocks: Vec<RawBlock> = Vec::new();
    for i in 0..space.dim() {
        match blocks.last_mut() {
            Some(b) if b.degree == space.degree(i) => b.basis.push(space.name(i).to_string()),
            _ => blocks.push(RawBlock {
                degree: space.degree(i),
                basis: vec![space.name(i).to_string()],
            }),
        }
    }
    let ops = h
        .ops()
        .map(|((k, idx), t)| RawOp {
            arity: *k,
            index: idx.to_string(),
            entries: t
                .entries()
                .flat_map(|(tuple, v)| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(out, c)| {
                            let mut e: Vec<Num> = tuple.iter().map(|&x| Num::Int(x as i64)).collect();
                            e.push(Num::Int(out as i64));
                            e.push(Num::of(c));
                            e
                        })
                        .collect::<Vec<_>>()
                })
                .collect(),
        })
        .collect();
    RawGraded {
        kind: h.kind().to_string(),
        arity_bound: h.arity_bound(),
        blocks,
        ops,
    }
}

/// Canonical text: explicit tables, `"p/q"` rationals, sorted names.
pub fn emit_model(doc: &ModelDocument) -> String {
    let tensor_terms = |t: &NamedTensor| match t {
        NamedTensor::Two(t) => t
            .terms()
            .map(|(i, j, c)| vec![Num::Int(i as i64), Num::Int(j as i64), Num::of(c)])
            .collect(),
        NamedTensor::Three(t) => {
            let n = t.dim();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = t.get(i, j, k);
                        if !c.is_zero() {
                            out.push(vec![Num::Int(i as i64), Num::Int(j as i64), Num::Int(k as i64), Num::of(c)]);
                        }
                    }
                }
            }
            out
        }
    };
    let raw = RawDocument {
        algebra: RawAlgebra {
            dim: Some(doc.algebra.dim()),
            basis: doc.algebra.names().to_vec(),
            products: emit_quads(doc.algebra.structure()),
        },
        bimodule: Some(emit_bimodule(&doc.bimodule)),
        bimodules: doc.bimodules.iter().map(|(k, m)| (k.clone(), emit_bimodule(m))).collect(),
        maps: doc
            .maps
            .iter()
            .map(|(k, m)| {
                let rows: Vec<Vector> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
                (k.clone(), RawMatrix { rows: emit_rows(&rows) })
            })
            .collect(),
        tensors: doc
            .tensors
            .iter()
            .map(|(k, t)| (k.clone(), RawTensor { terms: tensor_terms(t) }))
            .collect(),
        subspaces: doc
            .subspaces
            .iter()
            .map(|(k, v)| (k.clone(), RawSubspace { vectors: emit_rows(v) }))
            .collect(),
        series: (!doc.series.is_empty()).then(|| RawSeries {
            terms: doc.series.clone(),
        }),
        graded: doc.graded.as_ref().map(emit_graded),
        graded_module: doc.graded_module.as_ref().map(emit_graded),
        two_term: doc.two_term.clone(),
    };
    toml::to_string(&raw).expect("documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const IDEMPOTENT: &str = "[algebra]\nbasis = [\"e\"]\nproducts = [[0, 0, 0, \"1\"]]\n";

    #[test]
    fn minimal_document_parses() {
        let doc = parse_model(IDEMPOTENT).unwrap();
        assert_eq!(doc.algebra.dim(), 1);
        assert_eq!(doc.bimodule.names(), ["e"]);
    }

    #[test]
    fn non_associative_constants_name_the_triple() {
        // e·e = x, x·e = e, everything else zero: (ee)e = e but e(ee) = 0
        let text = "[algebra]\nbasis = [\"e\", \"x\"]\nproducts = [[0, 0, 1, 1], [1, 0, 0, 1]]\n";
        let err = parse_model(text).unwrap_err();
        let DocumentError::Semantic { section, message } = err else {
            panic!("{err}")
        };
        assert_eq!(section, "algebra");
        assert!(message.contains("associativity") && message.contains("(e,e,e)"), "{message}");
    }

    #[test]
    fn zero_denominator_is_refused() {
        let text = "[algebra]\nbasis = [\"e\"]\nproducts = [[0, 0, 0, \"1/0\"]]\n";
        assert!(matches!(parse_model(text), Err(DocumentError::Semantic { .. })));
        let broken = "[algebra]\nbasis = [\"e\"\nproducts = 3\n";
        let Err(DocumentError::Parse { line, .. }) = parse_model(broken) else {
            panic!("expected a parse error")
        };
        assert!(line >= 2);
    }

    #[test]
    fn emission_is_a_fixed_point() {
        let text = r#"
[algebra]
basis = ["1", "x"]
products = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]
[maps.R]
rows = [[0, 0], [1, 0]]
[tensors.r]
terms = [[1, 1, "2/4"]]
[graded]
kind = "ainf"
arity_bound = 3
blocks = [{ degree = 0, basis = ["a"] }, { degree = 1, basis = ["u"] }]
ops = [{ arity = 1, index = "-", entries = [[1, 0, "3"]] }]
"#;
        let once = emit_model(&parse_model(text).unwrap());
        let twice = emit_model(&parse_model(&once).unwrap());
        assert_eq!(once, twice);
        assert!(once.contains("\"1/2\""));
    }

    #[test]
    fn op_index_round_trip() {
        for idx in [OpIndex::Plain, OpIndex::Slot(2), OpIndex::Dend(3), OpIndex::Quad(1, 2)] {
            assert_eq!(idx.to_string().parse::<OpIndex>().unwrap(), idx);
        }
    }
}
