//! Dendriform, pre-Lie, dialgebra and quadri-algebra tables with a single
//! generic checker over formally stored identities.

use crate::algebra::Algebra;
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::{basis_tuples, Matrix, MultiTensor};
use crate::rbs::{dendriform_of, PrelieConvention, RbsPair};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    /// `[∗]`
    Associative,
    /// `[≺, ≻]`
    Dendriform,
    /// `[⋄]`
    Prelie,
    /// `[⊣, ⊢]`
    Dialgebra,
    /// `[↖, ↗, ↙, ↘]`
    Quadri,
}

impl StructureKind {
    pub fn table_count(self) -> usize {
        match self {
            StructureKind::Associative | StructureKind::Prelie => 1,
            StructureKind::Dendriform | StructureKind::Dialgebra => 2,
            StructureKind::Quadri => 4,
        }
    }

    pub fn table_names(self) -> &'static [&'static str] {
        match self {
            StructureKind::Associative => &["star"],
            StructureKind::Prelie => &["diamond"],
            StructureKind::Dendriform => &["prec", "succ"],
            StructureKind::Dialgebra => &["left", "right"],
            StructureKind::Quadri => &["nw", "ne", "sw", "se"],
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::Associative => "associative",
            StructureKind::Dendriform => "dendriform",
            StructureKind::Prelie => "prelie",
            StructureKind::Dialgebra => "dialgebra",
            StructureKind::Quadri => "quadri",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown structure kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for StructureKind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> std::result::Result<Self, UnknownKind> {
        Ok(match s {
            "associative" => StructureKind::Associative,
            "dendriform" => StructureKind::Dendriform,
            "prelie" => StructureKind::Prelie,
            "dialgebra" => StructureKind::Dialgebra,
            "quadri" => StructureKind::Quadri,
            other => return Err(UnknownKind(other.to_string())),
        })
    }
}

/// A vector space with one or more bilinear products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryStructure {
    kind: StructureKind,
    names: Vec<String>,
    tables: Vec<MultiTensor>,
}

impl BinaryStructure {
    pub fn new(kind: StructureKind, names: Vec<String>, tables: Vec<MultiTensor>) -> Result<Self> {
        if tables.len() != kind.table_count() {
            return dim_err(format!("{kind} needs {} tables, got {}", kind.table_count(), tables.len()));
        }
        let d = names.len();
        if tables.iter().any(|t| t.input_dims() != [d, d] || t.output_dim() != d) {
            return dim_err(format!("tables must be bilinear maps on a {d}-dim space"));
        }
        Ok(BinaryStructure { kind, names, tables })
    }

    pub fn from_algebra(alg: &Algebra) -> Self {
        BinaryStructure {
            kind: StructureKind::Associative,
            names: alg.names().to_vec(),
            tables: vec![alg.structure().clone()],
        }
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tables(&self) -> &[MultiTensor] {
        &self.tables
    }

    /// Applies the sum of the listed tables.
    pub fn apply_sum(&self, which: &[usize], a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = scalar::zeros(self.dim());
        for &t in which {
            scalar::add_into(&mut out, &self.tables[t].eval_vectors(&[a, b]));
        }
        out
    }

    pub fn apply(&self, table: usize, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.tables[table].eval_vectors(&[a, b])
    }

    fn summed(&self, which: &[usize]) -> MultiTensor {
        let mut out = MultiTensor::uniform(2, self.dim(), self.dim());
        for &t in which {
            out = out.add(&self.tables[t]);
        }
        out
    }

    fn with(&self, kind: StructureKind, tables: Vec<MultiTensor>) -> BinaryStructure {
        BinaryStructure::new(kind, self.names.clone(), tables).expect("tables built from self")
    }

    /// `∗ = ≺ + ≻` of a dendriform structure.
    pub fn dendriform_sum(&self) -> BinaryStructure {
        assert_eq!(self.kind, StructureKind::Dendriform);
        self.with(StructureKind::Associative, vec![self.summed(&[0, 1])])
    }

    /// The pre-Lie product of a dendriform structure.
    pub fn prelie(&self, convention: PrelieConvention) -> BinaryStructure {
        assert_eq!(self.kind, StructureKind::Dendriform);
        let (prec, succ) = (&self.tables[0], &self.tables[1]);
        let d = self.dim();
        let t = MultiTensor::from_fn(vec![d, d], d, |ij| {
            let (i, j) = (ij[0], ij[1]);
            let other = match convention {
                PrelieConvention::Swapped => prec.get(&[j, i]),
                PrelieConvention::SameOrder => prec.get(&[i, j]),
            };
            scalar::sub(&succ.get(&[i, j]), &other)
        });
        self.with(StructureKind::Prelie, vec![t])
    }

    /// `(⊏, ⊐) = (↖ + ↙, ↗ + ↘)` of a quadri-algebra.
    pub fn horizontal(&self) -> BinaryStructure {
        assert_eq!(self.kind, StructureKind::Quadri);
        self.with(StructureKind::Dendriform, vec![self.summed(&[0, 2]), self.summed(&[1, 3])])
    }

    /// `(∧, ∨) = (↖ + ↗, ↙ + ↘)` of a quadri-algebra.
    pub fn vertical(&self) -> BinaryStructure {
        assert_eq!(self.kind, StructureKind::Quadri);
        self.with(StructureKind::Dendriform, vec![self.summed(&[0, 1]), self.summed(&[2, 3])])
    }

    /// Runs every identity of the structure's kind on all basis triples.
    pub fn axiom_check(&self) -> Result<AxiomReport> {
        let d = self.dim();
        let ids = identities(self.kind);
        let mut failures = Vec::new();
        for t in basis_tuples(&[d, d, d]) {
            let vars = [scalar::unit(d, t[0]), scalar::unit(d, t[1]), scalar::unit(d, t[2])];
            for id in &ids {
                let mut total = scalar::zeros(d);
                for (c, e) in &id.terms {
                    scalar::axpy(&mut total, &scalar::int(*c), &e.eval(self, &vars));
                }
                if !scalar::is_zero_vec(&total) {
                    failures.push((id.name, [t[0], t[1], t[2]]));
                }
            }
        }
        Ok(AxiomReport {
            pass: failures.is_empty(),
            failures,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub pass: bool,
    /// `(identity, basis triple)` for every violation.
    pub failures: Vec<(&'static str, [usize; 3])>,
}

/// A formal bilinear word in three variables.
#[derive(Debug, Clone)]
enum Expr {
    Var(usize),
    /// Sum of the listed tables applied to the two sub-words.
    Op(&'static [usize], Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, s: &BinaryStructure, vars: &[Vector; 3]) -> Vector {
        match self {
            Expr::Var(i) => vars[*i].clone(),
            Expr::Op(which, l, r) => s.apply_sum(which, &l.eval(s, vars), &r.eval(s, vars)),
        }
    }
}

/// `Σ c · word = 0`
struct Identity {
    name: &'static str,
    terms: Vec<(i64, Expr)>,
}

const A: Expr = Expr::Var(0);
const B: Expr = Expr::Var(1);
const C: Expr = Expr::Var(2);

/// `(x op1 y) op2 z`
fn left(op1: &'static [usize], op2: &'static [usize], x: Expr, y: Expr, z: Expr) -> Expr {
    Expr::Op(op2, Box::new(Expr::Op(op1, Box::new(x), Box::new(y))), Box::new(z))
}

/// `x op1 (y op2 z)`
fn right(op1: &'static [usize], op2: &'static [usize], x: Expr, y: Expr, z: Expr) -> Expr {
    Expr::Op(op1, Box::new(x), Box::new(Expr::Op(op2, Box::new(y), Box::new(z))))
}

fn eq(name: &'static str, lhs: Expr, rhs: Expr) -> Identity {
    Identity {
        name,
        terms: vec![(1, lhs), (-1, rhs)],
    }
}

fn identities(kind: StructureKind) -> Vec<Identity> {
    const STAR: &[usize] = &[0];
    const PREC: &[usize] = &[0];
    const SUCC: &[usize] = &[1];
    const BOTH: &[usize] = &[0, 1];
    const NW: &[usize] = &[0];
    const NE: &[usize] = &[1];
    const SW: &[usize] = &[2];
    const SE: &[usize] = &[3];
    const WEST: &[usize] = &[0, 2];
    const EAST: &[usize] = &[1, 3];
    const NORTH: &[usize] = &[0, 1];
    const SOUTH: &[usize] = &[2, 3];
    const ALL4: &[usize] = &[0, 1, 2, 3];
    match kind {
        StructureKind::Associative => vec![eq("associativity", left(STAR, STAR, A, B, C), right(STAR, STAR, A, B, C))],
        StructureKind::Dendriform => vec![
            eq("(a≺b)≺c = a≺(b∗c)", left(PREC, PREC, A, B, C), right(PREC, BOTH, A, B, C)),
            eq("(a≻b)≺c = a≻(b≺c)", left(SUCC, PREC, A, B, C), right(SUCC, PREC, A, B, C)),
            eq("(a∗b)≻c = a≻(b≻c)", left(BOTH, SUCC, A, B, C), right(SUCC, SUCC, A, B, C)),
        ],
        StructureKind::Prelie => vec![Identity {
            name: "left pre-Lie",
            terms: vec![
                (1, left(STAR, STAR, A, B, C)),
                (-1, right(STAR, STAR, A, B, C)),
                (-1, left(STAR, STAR, B, A, C)),
                (1, right(STAR, STAR, B, A, C)),
            ],
        }],
        StructureKind::Dialgebra => {
            const L: &[usize] = &[0];
            const R: &[usize] = &[1];
            vec![
                eq("a⊣(b⊣c) = (a⊣b)⊣c", right(L, L, A, B, C), left(L, L, A, B, C)),
                eq("(a⊣b)⊣c = a⊣(b⊢c)", left(L, L, A, B, C), right(L, R, A, B, C)),
                eq("(a⊢b)⊣c = a⊢(b⊣c)", left(R, L, A, B, C), right(R, L, A, B, C)),
                eq("(a⊣b)⊢c = a⊢(b⊢c)", left(L, R, A, B, C), right(R, R, A, B, C)),
                eq("a⊢(b⊢c) = (a⊢b)⊢c", right(R, R, A, B, C), left(R, R, A, B, C)),
            ]
        }
        StructureKind::Quadri => vec![
            eq("(a↖b)↖c = a↖(b∗c)", left(NW, NW, A, B, C), right(NW, ALL4, A, B, C)),
            eq("(a↗b)↖c = a↗(b⊏c)", left(NE, NW, A, B, C), right(NE, WEST, A, B, C)),
            eq("(a∧b)↗c = a↗(b⊐c)", left(NORTH, NE, A, B, C), right(NE, EAST, A, B, C)),
            eq("(a↙b)↖c = a↙(b∧c)", left(SW, NW, A, B, C), right(SW, NORTH, A, B, C)),
            eq("(a↘b)↖c = a↘(b↖c)", left(SE, NW, A, B, C), right(SE, NW, A, B, C)),
            eq("(a∨b)↗c = a↘(b↗c)", left(SOUTH, NE, A, B, C), right(SE, NE, A, B, C)),
            eq("(a⊏b)↙c = a↙(b∨c)", left(WEST, SW, A, B, C), right(SW, SOUTH, A, B, C)),
            eq("(a⊐b)↙c = a↘(b↙c)", left(EAST, SW, A, B, C), right(SE, SW, A, B, C)),
            eq("(a∗b)↘c = a↘(b↘c)", left(ALL4, SE, A, B, C), right(SE, SE, A, B, C)),
        ],
    }
}

fn check_square_pair(d: &BinaryStructure, pair: &RbsPair) -> Result<()> {
    let n = d.dim();
    if (pair.r.rows(), pair.r.cols()) != (n, n) {
        return dim_err("operators must be square on the structure's space");
    }
    Ok(())
}

/// Defects of `(R, S)` as a Rota-Baxter system on a dendriform algebra:
/// for `◦ ∈ {≺, ≻}`, `R(a)◦R(b) - R(R(a)◦b + a◦S(b))` and the same for `S`.
/// Order: `[R with ≺, S with ≺, R with ≻, S with ≻]`.
pub fn rbs_on_dendriform_defect(d: &BinaryStructure, pair: &RbsPair) -> Result<[MultiTensor; 4]> {
    if d.kind() != StructureKind::Dendriform {
        return Err(Error::Precondition("a dendriform structure is required".into()));
    }
    check_square_pair(d, pair)?;
    let n = d.dim();
    let mut out: [MultiTensor; 4] = std::array::from_fn(|_| MultiTensor::uniform(2, n, n));
    for i in 0..n {
        let a = scalar::unit(n, i);
        for j in 0..n {
            let b = scalar::unit(n, j);
            for (t, op) in [0usize, 1].into_iter().enumerate() {
                let inner = scalar::add(
                    &d.apply(op, &pair.r.apply(&a), &b),
                    &d.apply(op, &a, &pair.s.apply(&b)),
                );
                for (k, map) in [&pair.r, &pair.s].into_iter().enumerate() {
                    let lhs = d.apply(op, &map.apply(&a), &map.apply(&b));
                    out[2 * t + k].set_output(&[i, j], scalar::sub(&lhs, &map.apply(&inner)));
                }
            }
        }
    }
    Ok(out)
}

/// `a↖b = a≺S(b)`, `a↗b = a≻S(b)`, `a↙b = R(a)≺b`, `a↘b = R(a)≻b`.
/// Refuses pairs that are not systems on `d`.
pub fn quadri_from_rbs_on_dendriform(d: &BinaryStructure, pair: &RbsPair) -> Result<BinaryStructure> {
    let defects = rbs_on_dendriform_defect(d, pair)?;
    if let Some(t) = defects.iter().find(|t| !t.is_zero()) {
        let (tuple, _) = t.entries().next().expect("non-zero");
        return Err(Error::NotRotaBaxter(format!("dendriform defect at {:?}", tuple)));
    }
    let n = d.dim();
    let table = |op: usize, pre: Option<&Matrix>, post: Option<&Matrix>| {
        MultiTensor::from_fn(vec![n, n], n, |t| {
            let a = pre.map_or_else(|| scalar::unit(n, t[0]), |m| m.column(t[0]));
            let b = post.map_or_else(|| scalar::unit(n, t[1]), |m| m.column(t[1]));
            d.apply(op, &a, &b)
        })
    };
    let tables = vec![
        table(0, None, Some(&pair.s)),
        table(1, None, Some(&pair.s)),
        table(0, Some(&pair.r), None),
        table(1, Some(&pair.r), None),
    ];
    BinaryStructure::new(StructureKind::Quadri, d.names().to_vec(), tables)
}

/// Result of the commuting-systems construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingQuadri {
    pub commute: bool,
    /// Whether `(R, S)` is a system on the dendriform algebra induced by `(P, Q)`.
    pub dendriform_rbs: bool,
    /// `↖ = aQS(b)`, `↗ = P(a)S(b)`, `↙ = R(a)Q(b)`, `↘ = PR(a)b`, present when both hold.
    pub quadri: Option<BinaryStructure>,
}

/// Two systems `(P, Q)` and `(R, S)` on the adjoint bimodule with
/// `PR = RP, PS = SP, QR = RQ, QS = SQ`.
pub fn commuting_rbs_quadri(alg: &Algebra, pq: &RbsPair, rs: &RbsPair) -> Result<CommutingQuadri> {
    let adj = crate::algebra::canonical_bimodule(alg, crate::algebra::BimoduleKind::Adjoint);
    crate::rbs::require_rbs(alg, &adj, pq)?;
    crate::rbs::require_rbs(alg, &adj, rs)?;
    let commutes = |x: &Matrix, y: &Matrix| x.mul(y) == y.mul(x);
    let commute = commutes(&pq.r, &rs.r) && commutes(&pq.r, &rs.s) && commutes(&pq.s, &rs.r) && commutes(&pq.s, &rs.s);
    let dend = dendriform_of(&adj, pq);
    let dendriform_rbs = rbs_on_dendriform_defect(&dend, rs)?.iter().all(MultiTensor::is_zero);
    let quadri = if commute && dendriform_rbs {
        Some(quadri_from_rbs_on_dendriform(&dend, rs)?)
    } else {
        None
    };
    Ok(CommutingQuadri {
        commute,
        dendriform_rbs,
        quadri,
    })
}

/// `u ⊣ v = u·S(v)`, `u ⊢ v = R(u)·v` for a two-sided averaging system.
pub fn dialgebra_from_averaging(
    alg: &Algebra,
    module: &crate::algebra::Bimodule,
    pair: &RbsPair,
) -> Result<BinaryStructure> {
    let rep = crate::yang_baxter::averaging_defect(alg, module, pair)?;
    if !(rep.left_pass && rep.right_pass) {
        return Err(Error::Precondition("pair is not a two-sided averaging system".into()));
    }
    let d = dendriform_of(module, pair);
    BinaryStructure::new(StructureKind::Dialgebra, module.names().to_vec(), d.tables().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use crate::linalg::scalar::int;

    fn idempotent() -> Algebra {
        Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap()
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("quadri".parse::<StructureKind>().unwrap(), StructureKind::Quadri);
        assert!("magma".parse::<StructureKind>().is_err());
    }

    #[test]
    fn wrong_table_count_is_rejected() {
        let t = MultiTensor::uniform(2, 1, 1);
        assert!(BinaryStructure::new(StructureKind::Dendriform, vec!["e".into()], vec![t]).is_err());
    }

    #[test]
    fn commuting_scalar_systems_give_single_table() {
        let a = idempotent();
        let p = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]])).unwrap();
        let q = commuting_rbs_quadri(&a, &p, &p).unwrap();
        assert!(q.commute && q.dendriform_rbs);
        let quadri = q.quadri.unwrap();
        for k in 0..3 {
            assert!(quadri.tables()[k].is_zero());
        }
        assert_eq!(quadri.tables()[3].get(&[0, 0]), vec![int(4)]);
        assert!(quadri.axiom_check().unwrap().pass);
    }

    #[test]
    fn non_associative_table_fails_with_triple() {
        let mut t = MultiTensor::uniform(2, 2, 2);
        t.set(&[0, 0], 1, int(1));
        t.set(&[0, 1], 0, int(1));
        let s = BinaryStructure::new(StructureKind::Associative, vec!["a".into(), "b".into()], vec![t]).unwrap();
        let rep = s.axiom_check().unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.failures[0], ("associativity", [0, 0, 0]));
    }
}
