//! Standard bases and the module operations derived from them.

mod dim;
mod engine;
mod module;
mod ops;
mod resolution;

pub use dim::{hilbert_numerator, local_vdim, relative_dim, Dimension};
pub use engine::{primitive, Budget};
pub use module::{normal_form, standard_basis, FreeModule, Reducer, SubmoduleBasis};
pub use ops::{
    colon, eliminate, eliminate_named, intersect, kernel, saturate, saturate_ideal, syzygies, DEFAULT_SATURATION_CAP,
};
pub use resolution::{apply_matrix, graded_resolution, minimize_generators, FpModule, Resolution};
