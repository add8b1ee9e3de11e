//! Strongly regular graphs: constructions, exact spectra, and restricted
//! vertex connectivity with checkable certificates.

pub mod connectivity;
pub mod constructions;
pub mod field;
pub mod geometry;
pub mod graph;
pub mod graph6;
pub mod srg;

pub use connectivity::{
    kappa2_exact, verify_cut, vertex_connectivity, CutCertificate, Kappa2, Kappa2Options, Kappa2Result,
};
pub use constructions::{ConstructedGraph, ConstructionError, FamilySpec};
pub use field::{Field, FieldElement, FieldError, ProjectivePoint, SymplecticForm};
pub use geometry::{GeometryError, PartialLinearSpace};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::Graph6Error;
pub use srg::{Spectrum, SrgError, SrgParams, Verdict, VerdictStatus};
