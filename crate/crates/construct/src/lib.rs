//! Constructive 4-pair weak linkage on the 6×6 grid.
//!
//! A pairing is classified by its quadrant diagram, moved into the normal
//! position of its case by a grid symmetry and a relabelling of the pairs,
//! and routed step by step with the sparse-quadrant operations of
//! `gridlink-lemmas`. If a step fails the oracle finishes the instance and
//! the trace records the fallback.

mod builder;
mod cases_a;
mod cases_b;
pub mod counterexample;
mod geom;
pub mod label;
pub mod normalize;
pub mod solve;
pub mod subgrid;

pub use counterexample::counterexample_instance;
pub use label::{case_of, classify, A3Type, Case, CaseLabel};
pub use normalize::{variants, Variant};
pub use solve::{constructive_campaign, solve_constructive, CaseTally, ConstructError, ConstructiveSummary, Step, Trace};
pub use subgrid::{route_in_subgrid_3pp, Block, SubgridError};
