//! Rota-Baxter systems on A∞-bimodules and on Dend∞-algebras, and the
//! structures they induce.

use super::identity::{homotopy_axiom_defect, require_bound};
use super::structure::{GradedSpace, HomotopyKind, HomotopyStructure, OpIndex};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{fmt_vector, Matrix, MultiTensor};
use crate::rbs::RbsPair;
use num_traits::Zero;

/// `t` with slot `p` precomposed by `maps[p]` (`None` keeps the slot).
pub(crate) fn precompose(t: &MultiTensor, maps: &[Option<&Matrix>]) -> MultiTensor {
    assert_eq!(maps.len(), t.arity());
    let dims: Vec<usize> = maps
        .iter()
        .zip(t.input_dims())
        .map(|(m, &d)| m.map_or(d, |m| m.cols()))
        .collect();
    let mut out = MultiTensor::zero(dims, t.output_dim());
    for (tuple, v) in t.entries() {
        // each slot expands into the domain basis vectors hitting tuple[p]
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), scalar::one())];
        for (p, &x) in tuple.iter().enumerate() {
            let choices: Vec<(usize, Scalar)> = match maps[p] {
                None => vec![(x, scalar::one())],
                Some(m) => (0..m.cols()).filter(|&b| !m[(x, b)].is_zero()).map(|b| (b, m[(x, b)].clone())).collect(),
            };
            partial = partial
                .iter()
                .flat_map(|(pre, c)| {
                    choices.iter().map(move |(b, w)| {
                        let mut t = pre.clone();
                        t.push(*b);
                        (t, c * w)
                    })
                })
                .collect();
            if partial.is_empty() {
                break;
            }
        }
        for (tt, c) in partial {
            out.add_to(&tt, &scalar::scale(&c, v));
        }
    }
    out
}

/// `(R, …, R, id, S, …, S)` with the identity in slot `r` (1-based).
fn rs_pattern<'a>(k: usize, r: usize, pair: &'a RbsPair) -> Vec<Option<&'a Matrix>> {
    (1..=k)
        .map(|q| match q.cmp(&r) {
            std::cmp::Ordering::Less => Some(&pair.r),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(&pair.s),
        })
        .collect()
}

/// `η_k = μ_k` in every slot.
pub fn adjoint_bimodule(h: &HomotopyStructure) -> Result<HomotopyStructure> {
    if h.kind() != HomotopyKind::Ainf {
        return Err(Error::Precondition("the adjoint bimodule needs an A∞-algebra".into()));
    }
    let ops: Vec<_> = h
        .ops()
        .flat_map(|((k, _), t)| (1..=*k).map(move |p| ((*k, OpIndex::Slot(p)), t.clone())))
        .collect();
    HomotopyStructure::bimodule(h.clone(), h.space().clone(), h.arity_bound(), ops)
}

/// `R`- and `S`-defects of one arity (and, on Dend∞, one index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorDefect {
    pub k: usize,
    pub index: OpIndex,
    pub defect_r: MultiTensor,
    pub defect_s: MultiTensor,
    /// `k=2 - R(u,v) = (…)` lines.
    pub witnesses: Vec<String>,
}

impl OperatorDefect {
    fn new(k: usize, index: OpIndex, defect_r: MultiTensor, defect_s: MultiTensor, space: &GradedSpace) -> Self {
        let mut witnesses = Vec::new();
        for (label, t) in [("R", &defect_r), ("S", &defect_s)] {
            for (tuple, v) in t.entries() {
                let args: Vec<&str> = tuple.iter().map(|&i| space.name(i)).collect();
                witnesses.push(format!("k={k} {index} {label}({}) = {}", args.join(","), fmt_vector(v)));
            }
        }
        OperatorDefect {
            k,
            index,
            defect_r,
            defect_s,
            witnesses,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.defect_r.is_zero() && self.defect_s.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorReport {
    pub checked_through: usize,
    pub defects: Vec<OperatorDefect>,
}

impl OperatorReport {
    pub fn pass(&self) -> bool {
        self.defects.iter().all(OperatorDefect::is_zero)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &String> {
        self.defects.iter().flat_map(|d| &d.witnesses)
    }

    fn first_witness(&self) -> Option<String> {
        self.witnesses().next().cloned()
    }
}

fn require_axioms(h: &HomotopyStructure, n: usize, what: &str) -> Result<()> {
    let rep = homotopy_axiom_defect(h, n)?;
    let first = rep.witnesses().next().cloned();
    match first {
        None => Ok(()),
        Some(w) => Err(Error::Precondition(format!("{what} fails its identities: {w}"))),
    }
}

/// `μ_k(Ru₁,…,Ru_k) - R(Σᵢ η_k(Ru₁,…,Ru_{i-1}, uᵢ, Su_{i+1},…,Su_k))` and the
/// `S` analogue, for `k ≤ k_max`.
pub fn homotopy_grbs_defect(
    alg: &HomotopyStructure,
    bimod: &HomotopyStructure,
    pair: &RbsPair,
    k_max: usize,
) -> Result<OperatorReport> {
    if bimod.over() != Some(alg) {
        return Err(Error::Precondition("the bimodule is not over this A∞-algebra".into()));
    }
    require_bound(alg, k_max)?;
    require_bound(bimod, k_max)?;
    bimod.space().check_degree_zero(alg.space(), &pair.r, "R")?;
    bimod.space().check_degree_zero(alg.space(), &pair.s, "S")?;
    require_axioms(alg, k_max, "the A∞-algebra")?;
    require_axioms(bimod, k_max, "the A∞-bimodule")?;
    let defects = (1..=k_max)
        .map(|k| {
            let mu = alg.op_or_zero(k, &OpIndex::Plain);
            let mut inner = MultiTensor::uniform(k, bimod.space().dim(), bimod.space().dim());
            for i in 1..=k {
                inner = inner.add(&precompose(&bimod.op_or_zero(k, &OpIndex::Slot(i)), &rs_pattern(k, i, pair)));
            }
            let dr = precompose(&mu, &vec![Some(&pair.r); k]).sub(&inner.map_output(&pair.r));
            let ds = precompose(&mu, &vec![Some(&pair.s); k]).sub(&inner.map_output(&pair.s));
            OperatorDefect::new(k, OpIndex::Plain, dr, ds, bimod.space())
        })
        .collect();
    Ok(OperatorReport {
        checked_through: k_max,
        defects,
    })
}

/// `μ_{k,[r]}(u₁,…,u_k) = η_k(Ru₁,…,Ru_{r-1}, u_r, Su_{r+1},…,Su_k)` on `M`.
pub fn dendinf_from_grbs(
    alg: &HomotopyStructure,
    bimod: &HomotopyStructure,
    pair: &RbsPair,
    k_max: usize,
) -> Result<HomotopyStructure> {
    let rep = homotopy_grbs_defect(alg, bimod, pair, k_max)?;
    if let Some(w) = rep.first_witness() {
        return Err(Error::NotRotaBaxter(w));
    }
    let ops = (1..=k_max).flat_map(|k| {
        (1..=k).map(move |r| {
            let t = precompose(&bimod.op_or_zero(k, &OpIndex::Slot(r)), &rs_pattern(k, r, pair));
            ((k, OpIndex::Dend(r)), t)
        })
    });
    HomotopyStructure::new(HomotopyKind::Dendinf, bimod.space().clone(), k_max, ops)
}

/// `μ_{k,[r]}(Ra₁,…,Ra_k) - R(Σᵢ μ_{k,[r]}(Ra₁,…,Ra_{i-1}, aᵢ, Sa_{i+1},…,Sa_k))`
/// and the `S` analogue, for every `k ≤ k_max` and `[r] ∈ C_k`.
pub fn rbs_on_dendinf_defect(d: &HomotopyStructure, pair: &RbsPair, k_max: usize) -> Result<OperatorReport> {
    if d.kind() != HomotopyKind::Dendinf {
        return Err(Error::Precondition("a dendinf structure is required".into()));
    }
    require_bound(d, k_max)?;
    d.space().check_degree_zero(d.space(), &pair.r, "R")?;
    d.space().check_degree_zero(d.space(), &pair.s, "S")?;
    require_axioms(d, k_max, "the Dend∞-algebra")?;
    let mut defects = Vec::new();
    for k in 1..=k_max {
        for r in 1..=k {
            let mu = d.op_or_zero(k, &OpIndex::Dend(r));
            let mut inner = MultiTensor::uniform(k, d.space().dim(), d.space().dim());
            for i in 1..=k {
                inner = inner.add(&precompose(&mu, &rs_pattern(k, i, pair)));
            }
            let dr = precompose(&mu, &vec![Some(&pair.r); k]).sub(&inner.map_output(&pair.r));
            let ds = precompose(&mu, &vec![Some(&pair.s); k]).sub(&inner.map_output(&pair.s));
            defects.push(OperatorDefect::new(k, OpIndex::Dend(r), dr, ds, d.space()));
        }
    }
    Ok(OperatorReport {
        checked_through: k_max,
        defects,
    })
}

/// `μ_{k,([r],[s])}(a₁,…,a_k) = μ_{k,[r]}(Ra₁,…,Ra_{s-1}, a_s, Sa_{s+1},…,Sa_k)`.
pub fn quadinf_from_rbs(d: &HomotopyStructure, pair: &RbsPair, k_max: usize) -> Result<HomotopyStructure> {
    let rep = rbs_on_dendinf_defect(d, pair, k_max)?;
    if let Some(w) = rep.first_witness() {
        return Err(Error::NotRotaBaxter(w));
    }
    let mut ops = Vec::new();
    for k in 1..=k_max {
        for r in 1..=k {
            let mu = d.op_or_zero(k, &OpIndex::Dend(r));
            for s in 1..=k {
                ops.push(((k, OpIndex::Quad(r, s)), precompose(&mu, &rs_pattern(k, s, pair))));
            }
        }
    }
    HomotopyStructure::new(HomotopyKind::Quadinf, d.space().clone(), k_max, ops)
}
