//! Exact parameter computations for distance-regular graphs: intersection
//! numbers, spectra, Krein parameters, P- and Q-polynomial structures,
//! classification flags, identity checks for twice Q-polynomial graphs of
//! diameter 4, named families and a brute-force graph oracle.

pub mod array;
pub mod catalog;
pub mod eigen;
pub mod families;
pub mod feasibility;
pub mod graph;
pub mod harness;
pub mod krein;
pub mod properties;
pub mod ptensor;
pub mod scheme;
pub mod spectrum;
pub mod structures;

pub use array::{parse_array, parse_array_raw, ArrayError, IntersectionArray, ParseError};
pub use drg_algebra as algebra;
pub use eigen::{EigenError, Eigenmatrices, Matrix};
pub use families::{family_array, FamilyError, FamilySpec};
pub use feasibility::{feasibility_report, Check, CheckStatus, FeasibilityReport};
pub use graph::{
    build_graph, spectrum_crosscheck, sylvester_hadamard, verify_drg, GraphError, GraphInstance,
    GraphKind, HadamardMatrix, NotDrg, SpectrumCheck, DEFAULT_MAX_VERTICES,
};
pub use krein::{KreinError, KreinTensor};
pub use ptensor::PTensor;
pub use scheme::{Scheme, SchemeError};
pub use spectrum::{characteristic_polynomial, cosine_sequence, Spectrum, SpectrumError};
