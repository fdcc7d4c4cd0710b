//! Command-line front end: solving, verification, pairability campaigns,
//! lemma certification, the five-pair counterexample and rendering.

pub mod certificate;
pub mod claims;
pub mod commands;
pub mod render;

pub use certificate::Certificate;
pub use claims::{registry, run_claim, ClaimError, ClaimOptions};
pub use commands::{run, Outcome, EXIT_FAIL, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE};
