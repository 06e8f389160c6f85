//! Formal Poisson homology of the Lefschetz bivector, weight by weight.

mod complex;
mod deformation;
mod derham;
mod engine;
mod module;
mod representatives;
mod transfer;


pub use complex::{build_delta_matrix, PreimageSolver, SliceComplex};
pub use deformation::{normalize_volume_deformation, Normalization, NormalizationStep};
pub use derham::{induced_de_rham, DeRhamTable};
pub use engine::{HomologyEngine, HomologyReport, SeriesComparison, SeriesKind, SliceDims};
pub use module::{base_relations, module_structure_check, ModuleCheck, ModuleStructureReport};
pub use representatives::{
    families, family_count, representative_basis, verify_forms, verify_representatives, ParameterSpace,
    RepresentativeFamily, RepresentativeVerdict,
};
pub use transfer::cohomology_transfer;
