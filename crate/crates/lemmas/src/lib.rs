//! Local routing statements on a 3×3 quadrant of the 6×6 grid.
//!
//! Each statement is realized as an operation that searches the quadrant
//! exhaustively for a plan of edge-disjoint paths with the required shape,
//! and [`certify`] runs an operation over every configuration it covers,
//! re-checking each returned plan with independent predicates.

pub mod certify;
pub mod error;
pub mod frame;
pub mod ops;
mod search;

pub use certify::{certify, CertifyOptions, LemmaCertificate};
pub use error::{LemmaError, LemmaId};
pub use frame::{CycleId, Orientation, Side};
pub use ops::{
    b_middle, boundary_linkage, build_framing, escape_crowded, escape_designated, exit_mating, far_corner,
    framing_choose_pq, framing_two_plus_one, mate_to_cycles, project_to_a, projection_choices,
    projection_guarantee, route_in_quadrant, side_vertices, BoundaryPlan, ChoiceTarget, ChosenFrame, CrowdedQuadrant, EscapePlan,
    ExitRequest, Frame, FramePlusOne, Guarantee, Leg, Projection, Restrictions,
};
