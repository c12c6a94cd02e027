//! The A∞-algebra on a two-term complex `M --d--> A ⊕ N` built from a
//! morphism of bimodules over a Rota-Baxter system `(A, R, S)`.

use super::structure::{GradedSpace, HomotopyKind, HomotopyStructure, OpIndex};
use crate::algebra::{validate_model, Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Vector};
use crate::linalg::{fmt_vector, Matrix, MultiTensor};
use crate::rbs::{grbs_defect, RbsPair};

/// A bimodule over `(A, R, S)`: an `A`-bimodule with `R_M, S_M : M → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleModule {
    pub module: Bimodule,
    pub r: Matrix,
    pub s: Matrix,
}

impl TripleModule {
    pub fn new(module: Bimodule, r: Matrix, s: Matrix) -> Result<Self> {
        let m = module.dim();
        if (r.rows(), r.cols()) != (m, m) || (s.rows(), s.cols()) != (m, m) {
            return crate::error::dim_err(format!("R_M and S_M must be {m}×{m}"));
        }
        Ok(TripleModule { module, r, s })
    }

    /// `R_M = S_M = 0`.
    pub fn zero(module: Bimodule) -> Self {
        let m = module.dim();
        TripleModule {
            module,
            r: Matrix::zeros(m, m),
            s: Matrix::zeros(m, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTerm {
    /// On `A ⊕ N` (degree 0) and `M` (degree 1).
    pub ainf: HomotopyStructure,
    /// `R̄ = (R ⊕ R_N, R_M)`, `S̄ = (S ⊕ S_N, S_M)`.
    pub pair: RbsPair,
}

/// The four identities of a bimodule over `(A, R, S)` with first failure:
/// `R(a)·R_M(u) = R_M(R(a)·u + a·S_M(u))`, `S(a)·S_M(u) = S_M(R(a)·u + a·S_M(u))`,
/// `R_M(u)·R(a) = R_M(R_M(u)·a + u·S(a))`, `S_M(u)·S(a) = S_M(R_M(u)·a + u·S(a))`.
pub fn triple_module_failure(alg: &Algebra, pair: &RbsPair, t: &TripleModule, label: &str) -> Option<String> {
    let module = &t.module;
    let names = [
        "R(a)·R_M(u) = R_M(R(a)·u + a·S_M(u))",
        "S(a)·S_M(u) = S_M(R(a)·u + a·S_M(u))",
        "R_M(u)·R(a) = R_M(R_M(u)·a + u·S(a))",
        "S_M(u)·S(a) = S_M(R_M(u)·a + u·S(a))",
    ];
    for i in 0..alg.dim() {
        let a = alg.unit_vector(i);
        let (ra, sa) = (pair.r.apply(&a), pair.s.apply(&a));
        for j in 0..module.dim() {
            let u = module.unit_vector(j);
            let (ru, su) = (t.r.apply(&u), t.s.apply(&u));
            let left_arg = scalar::add(&module.act_left(&ra, &u), &module.act_left(&a, &su));
            let right_arg = scalar::add(&module.act_right(&ru, &a), &module.act_right(&u, &sa));
            let sides: [(Vector, Vector); 4] = [
                (module.act_left(&ra, &ru), t.r.apply(&left_arg)),
                (module.act_left(&sa, &su), t.s.apply(&left_arg)),
                (module.act_right(&ru, &ra), t.r.apply(&right_arg)),
                (module.act_right(&su, &sa), t.s.apply(&right_arg)),
            ];
            for (name, (l, r)) in names.iter().zip(sides) {
                if l != r {
                    return Some(format!(
                        "{label}: {name} fails at (a,u) = ({},{}): difference {}",
                        alg.name(i),
                        module.name(j),
                        fmt_vector(&scalar::sub(&l, &r))
                    ));
                }
            }
        }
    }
    None
}

fn prefixed(prefix: &str, names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{prefix}.{n}")).collect()
}

/// Checks every hypothesis by name, then builds `μ₁ = d`,
/// `μ₂((a,n₁),(b,n₂)) = (ab, a·n₂ + n₁·b)`, `μ₂((a,n),u) = a·u`,
/// `μ₂(u,(a,n)) = u·a` and `μ_k = 0` for `k ≥ 3`.
pub fn two_term_builder(
    alg: &Algebra,
    pair: &RbsPair,
    m: &TripleModule,
    n: &TripleModule,
    d: &Matrix,
    arity_bound: usize,
) -> Result<TwoTerm> {
    let fail = |msg: String| Err(Error::TwoTerm(msg));
    let adj = crate::algebra::canonical_bimodule(alg, crate::algebra::BimoduleKind::Adjoint);
    let g = grbs_defect(alg, &adj, pair)?;
    if let Some(w) = g.witnesses(&adj).into_iter().next() {
        return fail(format!("(R,S) is not a Rota-Baxter system on A: {w}"));
    }
    for (label, t) in [("M", m), ("N", n)] {
        if !validate_model(alg, &t.module)?.pass() {
            return fail(format!("{label} is not an A-bimodule"));
        }
        if let Some(w) = triple_module_failure(alg, pair, t, label) {
            return fail(w);
        }
    }
    let (da, dn, dm) = (alg.dim(), n.module.dim(), m.module.dim());
    if (d.rows(), d.cols()) != (dn, dm) {
        return crate::error::dim_err(format!("d must be {dn}×{dm}"));
    }
    if !m.module.is_bimodule_map(&n.module, d) {
        return fail("d is not an A-bimodule map".into());
    }
    if d.mul(&m.r) != n.r.mul(d) {
        return fail("d∘R_M ≠ R_N∘d".into());
    }
    if d.mul(&m.s) != n.s.mul(d) {
        return fail("d∘S_M ≠ S_N∘d".into());
    }

    let space = GradedSpace::new(vec![
        (0, [alg.names().to_vec(), prefixed("N", n.module.names())].concat()),
        (1, prefixed("M", m.module.names())),
    ])?;
    let total = da + dn + dm;
    let (n0, m0) = (da, da + dn);
    let mut mu1 = MultiTensor::uniform(1, total, total);
    for u in 0..dm {
        let mut v = scalar::zeros(total);
        for x in 0..dn {
            v[n0 + x] = d[(x, u)].clone();
        }
        mu1.set_output(&[m0 + u], v);
    }
    let mut mu2 = MultiTensor::uniform(2, total, total);
    let mut place = |tuple: [usize; 2], offset: usize, w: Vector| {
        let mut v = scalar::zeros(total);
        for (k, x) in w.into_iter().enumerate() {
            v[offset + k] = x;
        }
        mu2.add_to(&tuple, &v);
    };
    for (t, v) in alg.structure().entries() {
        place([t[0], t[1]], 0, v.clone());
    }
    for (shift, module) in [(n0, &n.module), (m0, &m.module)] {
        for (t, v) in module.left_table().entries() {
            place([t[0], shift + t[1]], shift, v.clone());
        }
        for (t, v) in module.right_table().entries() {
            place([shift + t[0], t[1]], shift, v.clone());
        }
    }
    let ainf = HomotopyStructure::new(
        HomotopyKind::Ainf,
        space,
        arity_bound.max(2),
        [((1, OpIndex::Plain), mu1), ((2, OpIndex::Plain), mu2)],
    )?;
    let block = |x: &Matrix, y: &Matrix, z: &Matrix| {
        let mut b = Matrix::zeros(total, total);
        for (off, blk) in [(0, x), (n0, y), (m0, z)] {
            for i in 0..blk.rows() {
                for j in 0..blk.cols() {
                    b[(off + i, off + j)] = blk[(i, j)].clone();
                }
            }
        }
        b
    };
    let pair = RbsPair::new(block(&pair.r, &n.r, &m.r), block(&pair.s, &n.s, &m.s))?;
    Ok(TwoTerm { ainf, pair })
}
