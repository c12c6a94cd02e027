//! Truncated A∞, A∞-bimodule, Dend∞ and Quad∞ structures with exact checks
//! of their identities through a chosen arity.

mod classical;
mod identity;
mod operators;
mod structure;
mod two_term;

pub use classical::{
    ainf_bimodule_from, ainf_from_algebra, binary_from_homotopy, dendinf_from_dendriform, quadinf_from_quadri,
    QUADRI_INDICES,
};
pub use identity::{
    ainf_collapse, homotopy_axiom_defect, index_table, quadinf_projections, HomotopyReport, IdentityDefect,
    IndexTableEntry,
};
pub use operators::{
    adjoint_bimodule, dendinf_from_grbs, homotopy_grbs_defect, quadinf_from_rbs, rbs_on_dendinf_defect,
    OperatorDefect, OperatorReport,
};
pub use structure::{GradedSpace, HomotopyKind, HomotopyStructure, OpIndex};
pub use two_term::{triple_module_failure, two_term_builder, TripleModule, TwoTerm};
