use super::{require_rbs, RbsPair};
use crate::algebra::{Algebra, Bimodule};
use crate::error::Result;
use crate::linalg::scalar;
use crate::linalg::MultiTensor;
use crate::loday::{BinaryStructure, StructureKind};

/// How a dendriform pair `(≺, ≻)` is turned into a single product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrelieConvention {
    /// `a ⋄ b = a ≻ b - b ≺ a`, left pre-Lie for every dendriform algebra.
    Swapped,
    /// `a ⋄ b = a ≻ b - a ≺ b`; not pre-Lie in general.
    SameOrder,
}

/// Products induced on `M` by a generalized Rota-Baxter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedStructures {
    /// `u ≺ v = u·S(v)`, `u ≻ v = R(u)·v`.
    pub dendriform: BinaryStructure,
    /// `u ∗ v = u ≺ v + u ≻ v`.
    pub associative: BinaryStructure,
    /// `u ⋄ v = R(u)·v - v·S(u)`.
    pub prelie: BinaryStructure,
}

/// Builds the induced dendriform, associative and pre-Lie products.
/// Refuses pairs that are not systems.
pub fn induce_structures(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<InducedStructures> {
    require_rbs(alg, module, pair)?;
    let dendriform = dendriform_of(module, pair);
    let associative = dendriform.dendriform_sum();
    let prelie = dendriform.prelie(PrelieConvention::Swapped);
    Ok(InducedStructures {
        dendriform,
        associative,
        prelie,
    })
}

/// The pair of tables `u·S(v)`, `R(u)·v` without any check on the pair.
pub fn dendriform_of(module: &Bimodule, pair: &RbsPair) -> BinaryStructure {
    let m = module.dim();
    let prec = MultiTensor::from_fn(vec![m, m], m, |t| {
        module.act_right(&scalar::unit(m, t[0]), &pair.s.column(t[1]))
    });
    let succ = MultiTensor::from_fn(vec![m, m], m, |t| {
        module.act_left(&pair.r.column(t[0]), &scalar::unit(m, t[1]))
    });
    BinaryStructure::new(StructureKind::Dendriform, module.names().to_vec(), vec![prec, succ]).expect("two tables")
}
