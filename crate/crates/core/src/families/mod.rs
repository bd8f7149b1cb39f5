//! Families of complexes with closed-form tree counts.

pub mod ferrers;
pub mod hypercube;
pub mod matroid;
pub mod named;
pub mod partition;
pub mod shifted;
pub mod simplex;

pub use ferrers::{ferrers_count, ferrers_graph, ferrers_weighted};
pub use hypercube::{hypercube_complex, hypercube_tau, hypercube_tau1, hypercube_weighted, hypercube_weights};
pub use matroid::{Matroid, TuttePolynomial};
pub use named::{named_complex, NAMES};
pub use partition::Partition;
pub use shifted::{critical_signatures, facet_degrees, is_shifted, shifted_complex, shifted_signatures, shifted_tau_coarse, Signature};
pub use simplex::{
    aalipour_duval_weighted, adin_bolker_count, adin_count, color_offsets, complete_colorful, cross_polytope_count,
    kalai_count, kalai_weighted, simplex_skeleton,
};
