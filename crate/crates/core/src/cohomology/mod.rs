//! Cochains, the derived bracket, the differentials and the dendriform
//! operad complex together with the chain map relating them.

mod bracket;
mod cochain;
mod complex;
mod dend;
mod gerstenhaber;
mod theta;

pub use bracket::{derived_bracket, derived_bracket_via_semidirect};
pub use cochain::{cochain_space_dim, Cochain};
pub use complex::{
    cohomology_dimensions, differential_matrix, hochschild_differential, operator_matrix, rbs_differential,
    MATRIX_BUDGET,
};
pub use dend::{dend_bracket, dend_complex, partial_compose, DendCochain, DendComplex};
pub use gerstenhaber::{gerstenhaber_bracket, Bracket, Circle};
pub use theta::theta_map;
