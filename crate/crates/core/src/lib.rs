//! Finite type-A crystal and quasi-crystal graphs: constructions (standard
//! crystal, tensor and quasi-tensor powers, quasification), exhaustive
//! axiom checkers, component structure and character decompositions.

pub mod axioms;
pub mod characters;
pub mod cli;
pub mod ext;
pub mod fuzz;
pub mod graph;
pub mod io;
pub mod quasify;
pub mod report;
pub mod structure;
pub mod weight;
pub mod word;

pub use ext::ExtInt;
pub use graph::{GraphBuilder, GraphError, QuasiCrystalGraph, VertexId};
pub use report::{AxiomReport, Witness};
pub use weight::{Composition, Partition, Weight};
