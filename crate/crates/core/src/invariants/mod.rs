//! The boundary coefficient table, its linear relation system, concrete
//! Clifford representations, and the density evaluators that tie them to
//! geometric data.

mod clifford;
mod density;
mod relations;
mod table;

pub use clifford::{clifford_rep, CliffordRep};
pub use density::{
    a0_density, a1_boundary_coefficient, a1_density, a2_density, a3_density, a3_density_with,
    adjoint_data, laplace_normal_form, A2Density, BoundaryGeometryData, DensityValue, SymbolData,
};
pub use relations::{
    relation_system, verify_relations, Relation, RelationGroup, RelationReport, RelationResult,
};
pub use table::{coefficient_table, CoefficientTable};
