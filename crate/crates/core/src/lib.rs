//! Exact combinatorial topology for basepointed graphs.
//!
//! The crate builds finite basepointed multigraphs, orders them by a
//! lexicographic height derived from vertex levels and degrees, and realizes
//! the moves that walk this order: forest collapses going down and vertex
//! blow-ups going up. Around a fixed graph it assembles the simplicial
//! complexes controlling those moves (partition complexes, ascending and
//! descending links) and decides their homotopy type by exact integer
//! homology and collapsibility certificates. A verification harness sweeps
//! graph families and checks the structural laws the whole construction
//! rests on, instance by instance.

pub mod blowup;
pub mod complex;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod graph;
pub mod harness;
pub mod height;
pub mod homology;
pub mod partition;
pub mod poset;
pub mod reduction;
pub mod sigma;
pub mod snf;

pub use blowup::{
    blow_up, blow_up_level, enumerate_blow_ups, enumerate_chains, is_descending_blow_up,
    separates_at, BlowUpResult, GraphBlowUp, VertexBlowUp,
};
pub use complex::SimplicialComplex;
pub use config::{BlowUpCaps, CompatMode, OutputFormat, RunConfig, SplitMode};
pub use enumerate::enumerate_graphs;
pub use error::{
    ComplexError, ForestError, GraphError, HarnessError, PartitionError, PosetError, SigmaError,
};
pub use forest::{
    collapse_forest, enumerate_forests, forest_level, is_descending_forest, CollapseResult,
    Forest,
};
pub use graph::{BasepointedGraph, EdgeClass, EdgeId, HalfEdgeId, VertexId};
pub use harness::{
    barycentric_boundary_f_vector, degree_excess, descending_forest_poset, descending_link,
    down_link, is_splitting_blow_up, lemma_ids, reports_to_json_lines, splitting_blow_up_poset,
    tally, up_link_complex, up_link_model, verify_all, verify_lemma, wedge_of_spheres,
    BlowUpRule, VerdictCounts, Verdict, VerificationReport,
};
pub use height::{compare_heights, height, HeightVector};
pub use homology::{classify, reduced_homology, HomotopyClass, ReducedHomology};
pub use partition::{is_compatible, TwoBlockPartition};
pub use poset::Poset;
pub use reduction::{free_face_collapse, is_collapsible, CollapseCertificate};
pub use sigma::{
    blow_up_poset, descending_split_complex, relative_link_decomposition, sigma, sigma_filtration,
    PartitionComplexSpec, RelativeLinkParts,
};
pub use snf::{smith_normal_form, SmithResult};
