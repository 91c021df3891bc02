//! Steklov (Dirichlet-to-Neumann) spectra of weighted finite graphs with
//! boundary, lower bounds for the first nonzero Steklov eigenvalue, and a
//! structural certificate for graphs attaining the extended bound.

pub mod bounds;
pub mod corpus;
mod error;
pub mod graph;
pub mod json;
pub mod rigidity;
pub mod spectral;

pub use bounds::{
    bound_extended, bound_general, bound_report, bound_unit, boundary_quantities, BoundReport, BoundaryQuantities,
    UnitBound,
};
pub use corpus::{
    enumerate_small, random_graph, verify_corpus, verify_corpus_streaming, verify_corpus_with, CorpusReport,
    CorpusSpec, Mode, ViolationRecord,
};
pub use error::{Error, Result};
pub use graph::{all_geodesics, hop_distance_matrix, is_connected, parse_graph, BoundaryGraph, GraphBuilder, VertexId};
pub use rigidity::{
    check_rigidity, check_rigidity_with, generate_comb, is_comb_over, Checks, CombDecomposition, CombSpec, PathWitness,
    RigidityOptions, RigidityReport, Teeth,
};
pub use spectral::{
    differential, dirichlet_energy, harmonic_extension, laplacian, rayleigh_quotient, steklov_spectrum, steklov_system,
    BoundaryFunction, EdgeDifferential, Spectrum, SteklovSystem, VertexFunction,
};
