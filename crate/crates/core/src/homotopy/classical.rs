//! Classical structures as homotopy structures concentrated in degree 0,
//! and back.

use super::structure::{GradedSpace, HomotopyKind, HomotopyStructure, OpIndex};
use crate::algebra::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::MultiTensor;
use crate::loday::{BinaryStructure, StructureKind};

/// `([r],[s])` of each quadri table `[↖, ↗, ↙, ↘]`.
pub const QUADRI_INDICES: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

/// `μ₂` = the product, everything else zero.
pub fn ainf_from_algebra(alg: &Algebra, arity_bound: usize) -> Result<HomotopyStructure> {
    HomotopyStructure::new(
        HomotopyKind::Ainf,
        GradedSpace::concentrated(alg.names()),
        arity_bound.max(2),
        [((2, OpIndex::Plain), alg.structure().clone())],
    )
}

/// `η₂(u, a) = u·a` and `η₂(a, u) = a·u`.
pub fn ainf_bimodule_from(alg: &HomotopyStructure, module: &Bimodule) -> Result<HomotopyStructure> {
    if module.algebra_dim() != alg.space().dim() {
        return crate::error::dim_err("bimodule over an algebra of another dimension");
    }
    HomotopyStructure::bimodule(
        alg.clone(),
        GradedSpace::concentrated(module.names()),
        alg.arity_bound(),
        [
            ((2, OpIndex::Slot(1)), module.right_table().clone()),
            ((2, OpIndex::Slot(2)), module.left_table().clone()),
        ],
    )
}

/// `μ_{2,[1]} = ≺`, `μ_{2,[2]} = ≻`.
pub fn dendinf_from_dendriform(d: &BinaryStructure, arity_bound: usize) -> Result<HomotopyStructure> {
    if d.kind() != StructureKind::Dendriform {
        return Err(Error::Precondition("a dendriform structure is required".into()));
    }
    let ops = (0..2).map(|t| ((2, OpIndex::Dend(t + 1)), d.tables()[t].clone()));
    HomotopyStructure::new(HomotopyKind::Dendinf, GradedSpace::concentrated(d.names()), arity_bound.max(2), ops)
}

/// Tables placed by [`QUADRI_INDICES`].
pub fn quadinf_from_quadri(q: &BinaryStructure, arity_bound: usize) -> Result<HomotopyStructure> {
    if q.kind() != StructureKind::Quadri {
        return Err(Error::Precondition("a quadri structure is required".into()));
    }
    let ops = QUADRI_INDICES
        .iter()
        .zip(q.tables())
        .map(|(&(r, s), t)| ((2, OpIndex::Quad(r, s)), t.clone()));
    HomotopyStructure::new(HomotopyKind::Quadinf, GradedSpace::concentrated(q.names()), arity_bound.max(2), ops)
}

/// The arity-2 tables of a degree-0 structure as a classical one; refuses
/// structures with other non-zero operations.
pub fn binary_from_homotopy(h: &HomotopyStructure) -> Result<BinaryStructure> {
    if !h.space().is_concentrated_in_zero() {
        return Err(Error::Degree("the space is not concentrated in degree 0".into()));
    }
    if let Some(((k, idx), _)) = h.ops().find(|((k, _), _)| *k != 2) {
        return Err(Error::Precondition(format!("μ_{k}{idx} is non-zero")));
    }
    let (kind, indices): (StructureKind, Vec<OpIndex>) = match h.kind() {
        HomotopyKind::Ainf => (StructureKind::Associative, vec![OpIndex::Plain]),
        HomotopyKind::Dendinf => (StructureKind::Dendriform, vec![OpIndex::Dend(1), OpIndex::Dend(2)]),
        HomotopyKind::Quadinf => (
            StructureKind::Quadri,
            QUADRI_INDICES.iter().map(|&(r, s)| OpIndex::Quad(r, s)).collect(),
        ),
        HomotopyKind::AinfBimodule => return Err(Error::Precondition("bimodules have no binary form".into())),
    };
    let tables: Vec<MultiTensor> = indices.iter().map(|i| h.op_or_zero(2, i)).collect();
    BinaryStructure::new(kind, h.space().names().to_vec(), tables)
}
