//! The signed Stasheff-type identities, with the `R₀`/`Rᵢ` index rewriting
//! for the Dend∞ and Quad∞ variants.

use super::structure::{HomotopyKind, HomotopyStructure, OpIndex};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::{basis_tuples, fmt_vector, koszul_sign, MultiTensor};
use num_traits::{One, Zero};

/// One row of the index table: the outer index in `C_j` and the inner
/// formal combination over `C_i` (coefficient of `[t]` at `t - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTableEntry {
    pub outer: usize,
    pub inner: Vec<Scalar>,
}

impl IndexTableEntry {
    /// `(t, coefficient)` for the non-zero terms, 1-based.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.inner.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (t + 1, c))
    }
}

/// `R₀(j; 1,…,i,…,1)[r]` and `R_position(j; 1,…,i,…,1)[r]` for `[r] ∈ C_{j+i-1}`.
pub fn index_table(j: usize, i: usize, position: usize, r: usize) -> Result<IndexTableEntry> {
    if i == 0 || j == 0 {
        return Err(Error::IndexRange("arities start at 1".into()));
    }
    if !(1..=j).contains(&position) {
        return Err(Error::IndexRange(format!("position {position} outside 1..={j}")));
    }
    let n = j + i - 1;
    if !(1..=n).contains(&r) {
        return Err(Error::IndexRange(format!("[{r}] outside C_{n}")));
    }
    let all = vec![Scalar::one(); i];
    Ok(if r < position {
        IndexTableEntry { outer: r, inner: all }
    } else if r < position + i {
        IndexTableEntry {
            outer: position,
            inner: scalar::unit(i, r - position),
        }
    } else {
        IndexTableEntry {
            outer: r - i + 1,
            inner: all,
        }
    })
}

/// Outer index and inner combination for one term of the identity at `idx`.
fn rewrite(idx: &OpIndex, j: usize, i: usize, lambda: usize) -> (OpIndex, Vec<(OpIndex, Scalar)>) {
    let entry = |r| index_table(j, i, lambda, r).expect("indices range-checked by the caller");
    match idx {
        OpIndex::Plain | OpIndex::Slot(_) => (OpIndex::Plain, vec![(OpIndex::Plain, Scalar::one())]),
        OpIndex::Dend(r) => {
            let e = entry(*r);
            let inner = e.terms().map(|(t, c)| (OpIndex::Dend(t), c.clone())).collect();
            (OpIndex::Dend(e.outer), inner)
        }
        OpIndex::Quad(r, s) => {
            let (er, es) = (entry(*r), entry(*s));
            let inner = er
                .terms()
                .flat_map(|(a, ca)| es.terms().map(move |(b, cb)| (OpIndex::Quad(a, b), ca * cb)))
                .collect();
            (OpIndex::Quad(er.outer, es.outer), inner)
        }
    }
}

/// `t` evaluated on basis indices with the vector `v` in `slot`.
fn eval_with(t: &MultiTensor, tuple: &mut [usize], slot: usize, v: &[Scalar]) -> Vector {
    let mut out = scalar::zeros(t.output_dim());
    for (c, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        tuple[slot] = c;
        scalar::axpy(&mut out, x, &t.get(tuple));
    }
    out
}

/// The left side of the identity at arity `n` and index `idx`, on every
/// basis tuple accepted by `keep`, for operations on a single space.
fn identity_tensor(
    ops: &dyn Fn(usize, &OpIndex) -> MultiTensor,
    degrees: &[i64],
    n: usize,
    idx: &OpIndex,
    keep: &dyn Fn(&[usize]) -> bool,
) -> MultiTensor {
    let dim = degrees.len();
    // terms (i, j, λ) with their operations, built once
    let mut terms = Vec::new();
    for i in 1..=n {
        let j = n + 1 - i;
        for lambda in 1..=j {
            let (outer_idx, inner) = rewrite(idx, j, i, lambda);
            let outer = ops(j, &outer_idx);
            let mut inner_sum = MultiTensor::uniform(i, dim, dim);
            for (k, c) in &inner {
                inner_sum = inner_sum.add(&ops(i, k).scale(c));
            }
            if !outer.is_zero() && !inner_sum.is_zero() {
                terms.push((i, lambda, outer, inner_sum));
            }
        }
    }
    let mut out = MultiTensor::uniform(n, dim, dim);
    for tuple in basis_tuples(&vec![dim; n]) {
        if !keep(&tuple) {
            continue;
        }
        let mut acc = scalar::zeros(dim);
        let tdeg: Vec<i64> = tuple.iter().map(|&a| degrees[a]).collect();
        for (i, lambda, outer, inner) in &terms {
            let (i, l0) = (*i, *lambda - 1);
            let v = inner.get(&tuple[l0..l0 + i]);
            if scalar::is_zero_vec(&v) {
                continue;
            }
            let mut outer_tuple: Vec<usize> = tuple[..l0].iter().chain(std::iter::once(&0)).chain(&tuple[l0 + i..]).copied().collect();
            let w = eval_with(outer, &mut outer_tuple, l0, &v);
            scalar::axpy(&mut acc, &koszul_sign(&tdeg, *lambda, i), &w);
        }
        out.set_output(&tuple, acc);
    }
    out
}

/// The identity at arity `n` and index `idx` failing on a basis tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityDefect {
    pub n: usize,
    pub index: OpIndex,
    /// On `space^{⊗n}`, or on `A^{⊗(p-1)} ⊗ M ⊗ A^{⊗(n-p)}` for `Slot(p)`.
    pub defect: MultiTensor,
    /// `n=3 [1] (a,b,c) = (…)` for each non-zero entry.
    pub witnesses: Vec<String>,
}

impl IdentityDefect {
    pub fn is_zero(&self) -> bool {
        self.defect.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyReport {
    pub kind: HomotopyKind,
    pub checked_through: usize,
    /// Every `(n, index)` for `n ≤ checked_through`, in order.
    pub identities: Vec<IdentityDefect>,
}

impl HomotopyReport {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(IdentityDefect::is_zero)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &String> {
        self.identities.iter().flat_map(|d| &d.witnesses)
    }
}

fn witness_lines(n: usize, idx: &OpIndex, t: &MultiTensor, names: &dyn Fn(usize, usize) -> String) -> Vec<String> {
    t.entries()
        .map(|(tuple, v)| {
            let args: Vec<String> = tuple.iter().enumerate().map(|(p, &a)| names(p, a)).collect();
            format!("n={n} {idx} ({}) = {}", args.join(","), fmt_vector(v))
        })
        .collect()
}

pub(crate) fn require_bound(h: &HomotopyStructure, n: usize) -> Result<()> {
    if n > h.arity_bound() {
        return Err(Error::Truncation {
            requested: n,
            bound: h.arity_bound(),
        });
    }
    Ok(())
}

/// Checks every identity of arity `1..=n_max`. The arity-`n` identity only
/// involves operations of arity `≤ n`, so the verdict is exact up to `n_max`.
pub fn homotopy_axiom_defect(h: &HomotopyStructure, n_max: usize) -> Result<HomotopyReport> {
    require_bound(h, n_max)?;
    let identities = match h.over() {
        None => plain_identities(h, n_max),
        Some(alg) => {
            require_bound(alg, n_max)?;
            bimodule_identities(alg, h, n_max)
        }
    };
    Ok(HomotopyReport {
        kind: h.kind(),
        checked_through: n_max,
        identities,
    })
}

fn plain_identities(h: &HomotopyStructure, n_max: usize) -> Vec<IdentityDefect> {
    let space = h.space();
    let ops = |k: usize, idx: &OpIndex| h.op_or_zero(k, idx);
    let names = |_: usize, a: usize| space.name(a).to_string();
    let mut out = Vec::new();
    for n in 1..=n_max {
        for idx in OpIndex::all(h.kind(), n) {
            let defect = identity_tensor(&ops, space.degrees(), n, &idx, &|_| true);
            let witnesses = witness_lines(n, &idx, &defect, &names);
            out.push(IdentityDefect { n, index: idx, defect, witnesses });
        }
    }
    out
}

/// The square-zero extension `A ⊕ M` as an A∞-algebra: `μ_k` on algebra
/// arguments, `η_k` with exactly one module argument, zero otherwise.
pub(crate) fn square_zero_extension(alg: &HomotopyStructure, module: &HomotopyStructure) -> HomotopyStructure {
    let (a, m) = (alg.space().dim(), module.space().dim());
    let total = alg.space().direct_sum(module.space());
    let t = a + m;
    let mut ops = Vec::new();
    for k in 1..=module.arity_bound().min(alg.arity_bound()) {
        let mut ext = MultiTensor::uniform(k, t, t);
        if let Some(mu) = alg.op(k, &OpIndex::Plain) {
            for (tuple, v) in mu.entries() {
                let mut w = v.clone();
                w.resize(t, Scalar::zero());
                ext.set_output(tuple, w);
            }
        }
        for p in 1..=k {
            if let Some(eta) = module.op(k, &OpIndex::Slot(p)) {
                for (tuple, v) in eta.entries() {
                    let mut shifted = tuple.clone();
                    shifted[p - 1] += a;
                    let mut w = scalar::zeros(a);
                    w.extend(v.iter().cloned());
                    ext.set_output(&shifted, w);
                }
            }
        }
        ops.push(((k, OpIndex::Plain), ext));
    }
    let bound = module.arity_bound().min(alg.arity_bound());
    HomotopyStructure::new(HomotopyKind::Ainf, total, bound, ops).expect("extension of homogeneous maps is homogeneous")
}

fn bimodule_identities(alg: &HomotopyStructure, module: &HomotopyStructure, n_max: usize) -> Vec<IdentityDefect> {
    let (a, m) = (alg.space().dim(), module.space().dim());
    let ext = square_zero_extension(alg, module);
    let ops = |k: usize, idx: &OpIndex| ext.op_or_zero(k, idx);
    let degrees = ext.space().degrees().to_vec();
    let mut out = Vec::new();
    for n in 1..=n_max {
        for p in 1..=n {
            let keep = |t: &[usize]| t.iter().enumerate().all(|(q, &x)| (x >= a) == (q + 1 == p));
            let full = identity_tensor(&ops, &degrees, n, &OpIndex::Slot(p), &keep);
            let dims: Vec<usize> = (1..=n).map(|q| if q == p { m } else { a }).collect();
            let mut defect = MultiTensor::zero(dims, m);
            for (tuple, v) in full.entries() {
                let mut local = tuple.clone();
                local[p - 1] -= a;
                // an A-valued component would be a degree or shape error upstream
                debug_assert!(scalar::is_zero_vec(&v[..a]));
                defect.set_output(&local, v[a..].to_vec());
            }
            let names = |q: usize, x: usize| {
                if q + 1 == p {
                    module.space().name(x).to_string()
                } else {
                    alg.space().name(x).to_string()
                }
            };
            let witnesses = witness_lines(n, &OpIndex::Slot(p), &defect, &names);
            out.push(IdentityDefect {
                n,
                index: OpIndex::Slot(p),
                defect,
                witnesses,
            });
        }
    }
    out
}

/// Operations summed over their decorations: `μ_k = Σ_r μ_{k,[r]}` for Dend∞
/// and `Σ_{r,s} μ_{k,([r],[s])}` for Quad∞.
pub fn ainf_collapse(h: &HomotopyStructure) -> Result<HomotopyStructure> {
    match h.kind() {
        HomotopyKind::Dendinf | HomotopyKind::Quadinf => {}
        other => return Err(Error::Precondition(format!("cannot collapse a {other}"))),
    }
    let ops = (1..=h.arity_bound()).map(|k| {
        let sum = OpIndex::all(h.kind(), k)
            .iter()
            .fold(MultiTensor::uniform(k, h.space().dim(), h.space().dim()), |acc, idx| acc.add(&h.op_or_zero(k, idx)));
        ((k, OpIndex::Plain), sum)
    });
    HomotopyStructure::new(HomotopyKind::Ainf, h.space().clone(), h.arity_bound(), ops)
}

/// The two Dend∞ structures of a Quad∞ structure:
/// `μ'_{k,[r]} = Σ_s μ_{k,([r],[s])}` and `μ''_{k,[s]} = Σ_r μ_{k,([r],[s])}`.
pub fn quadinf_projections(h: &HomotopyStructure) -> Result<(HomotopyStructure, HomotopyStructure)> {
    if h.kind() != HomotopyKind::Quadinf {
        return Err(Error::Precondition("projections need a quadinf structure".into()));
    }
    let d = h.space().dim();
    let project = |first: bool| {
        let ops = (1..=h.arity_bound()).flat_map(|k| {
            (1..=k).map(move |r| {
                let sum = (1..=k).fold(MultiTensor::uniform(k, d, d), |acc, s| {
                    let idx = if first { OpIndex::Quad(r, s) } else { OpIndex::Quad(s, r) };
                    acc.add(&h.op_or_zero(k, &idx))
                });
                ((k, OpIndex::Dend(r)), sum)
            })
        });
        HomotopyStructure::new(HomotopyKind::Dendinf, h.space().clone(), h.arity_bound(), ops)
    };
    Ok((project(true)?, project(false)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{truncated_polynomial, Algebra};
    use crate::homotopy::GradedSpace;
    use crate::linalg::scalar::int;

    #[test]
    fn table_rows() {
        // j = 3, i = 2, position 2: C_4
        let all = vec![int(1), int(1)];
        assert_eq!(index_table(3, 2, 2, 1).unwrap(), IndexTableEntry { outer: 1, inner: all.clone() });
        assert_eq!(index_table(3, 2, 2, 2).unwrap(), IndexTableEntry { outer: 2, inner: vec![int(1), int(0)] });
        assert_eq!(index_table(3, 2, 2, 3).unwrap(), IndexTableEntry { outer: 2, inner: vec![int(0), int(1)] });
        assert_eq!(index_table(3, 2, 2, 4).unwrap(), IndexTableEntry { outer: 3, inner: all });
        assert!(matches!(index_table(3, 2, 4, 1), Err(Error::IndexRange(_))));
        assert!(matches!(index_table(3, 2, 1, 5), Err(Error::IndexRange(_))));
    }

    fn ainf_of(alg: &Algebra) -> HomotopyStructure {
        let space = GradedSpace::concentrated(alg.names());
        HomotopyStructure::new(HomotopyKind::Ainf, space, 3, [((2, OpIndex::Plain), alg.structure().clone())]).unwrap()
    }

    #[test]
    fn associator_is_the_arity_three_defect() {
        let alg = truncated_polynomial(2);
        assert!(homotopy_axiom_defect(&ainf_of(&alg), 3).unwrap().pass());
        // x·x = 1 on span{1, x} is not associative once 1·x = 0
        let bad = Algebra::from_constants(&["e", "x"], &[crate::algebra::c(1, 1, 0, 1), crate::algebra::c(0, 0, 0, 1)]).unwrap();
        let rep = homotopy_axiom_defect(&ainf_of(&bad), 3).unwrap();
        assert!(!rep.pass());
        assert!(bad.associativity_failure().is_some());
        assert!(matches!(homotopy_axiom_defect(&ainf_of(&alg), 4), Err(Error::Truncation { .. })));
    }

    #[test]
    fn leibniz_rule_for_a_differential() {
        // u (degree 1) --d--> a (degree 0), a·a = a, a·u = u·a = u
        let g = GradedSpace::new(vec![(0, vec!["a".into()]), (1, vec!["u".into()])]).unwrap();
        let mut mu1 = MultiTensor::uniform(1, 2, 2);
        mu1.set(&[1], 0, int(1));
        let mut mu2 = MultiTensor::uniform(2, 2, 2);
        mu2.set(&[0, 0], 0, int(1));
        mu2.set(&[0, 1], 1, int(1));
        mu2.set(&[1, 0], 1, int(1));
        let h = HomotopyStructure::new(HomotopyKind::Ainf, g, 3, [((1, OpIndex::Plain), mu1), ((2, OpIndex::Plain), mu2.clone())]).unwrap();
        let rep = homotopy_axiom_defect(&h, 3).unwrap();
        // d(u·u) = 0 but d(u)·u - u·d(u) = u - u: passes; d(a·u) = a·d(u): a = a
        assert!(rep.pass(), "{:?}", rep.witnesses().collect::<Vec<_>>());
        // dropping u·a breaks Leibniz at n = 2
        let mut broken = mu2;
        broken.set(&[1, 0], 1, int(0));
        let g = h.space().clone();
        let mut mu1 = MultiTensor::uniform(1, 2, 2);
        mu1.set(&[1], 0, int(1));
        let h2 = HomotopyStructure::new(HomotopyKind::Ainf, g, 3, [((1, OpIndex::Plain), mu1), ((2, OpIndex::Plain), broken)]).unwrap();
        let rep = homotopy_axiom_defect(&h2, 2).unwrap();
        assert!(rep.identities.iter().any(|d| d.n == 2 && !d.is_zero()));
    }
}
