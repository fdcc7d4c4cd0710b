//! Grid graphs, terminal pairings and a complete weak-linkage oracle.
//!
//! A *weak linkage* for pairs `(s_1, t_1), ..., (s_k, t_k)` is a family of
//! pairwise edge-disjoint paths, path `i` joining `s_i` to `t_i`. A graph is
//! *weakly k-linked* when every such pairing (terminals may coincide) has
//! one, and *k-path-pairable* when every pairing of `2k` distinct terminals
//! does.

pub mod adjusted;
pub mod bitset;
pub mod campaign;
pub mod enumerate;
pub mod grid;
pub mod instance;
pub mod linkage;
pub mod oracle;
pub mod qdiagram;
pub mod symmetry;
pub mod validate;

pub use adjusted::Adjustment;
pub use bitset::{EdgeSet, VertexSet};
pub use campaign::{
    check_weakly_2_linked, is_k_path_pairable, pp_number, search_unsat_in_region, CampaignConfig, CampaignError, CampaignReport, Mode, PpReport,
    Verdict, WeakLinkReport, Witness,
};
pub use enumerate::{count_pairings, seeded_sample, Canonicalizer, EnumerateError, PairingSpace};
pub use grid::{central_cycles, v, CentralCycles, Cycle, Edge, GridError, GridGraph, Quadrant, Vertex};
pub use instance::{format_instance, format_linkage, parse_instance, Instance, ParseError};
pub use linkage::{Linkage, Pairing, PairingError, Path};
pub use oracle::{find_weak_linkage, Limits, Oracle, OracleError, PruneConfig, SolveOptions, SolveReport, Status};
pub use qdiagram::QDiagram;
pub use symmetry::Symmetry;
pub use validate::{validate_linkage, Violation};
