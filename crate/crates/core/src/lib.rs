//! Witnessing partitions for `H`-free graphs: small bitset graphs, hereditary
//! families given by forbidden induced subgraphs, partition certificates,
//! exact counting, and exhaustive censuses.

pub mod canon;
pub mod census;
pub mod counting;
pub mod families;
pub mod girth5;
pub mod graph;
pub mod graph6;
pub mod partition;
pub mod subgraph;
pub mod witnessing;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, Canonical};
pub use census::{census, girth5_census, CensusConfig, CensusError, CensusMode, CensusReport};
pub use counting::{bell, c2l_lower_bound, f_star, labeled_cograph_count, CountingError};
pub use families::{family_subset, is_restricted, member, named_forbidden_basis, FamilySpec, NamedFamily};
pub use girth5::{girth, heavy_degree_check, s_statistic};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use partition::Partition;
pub use subgraph::{contains_induced, Pattern};
pub use witnessing::{
    clique_stable_partition_exists, find_certificate, is_really_canonical, is_witnessing_sequence,
    theorem_certifier, wpn, PartitionCertificate, Theorem, WitnessError, WitnessSequence,
};
