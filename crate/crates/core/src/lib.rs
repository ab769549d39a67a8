//! Chord-dense cycles and cyclic minors in graphs of large minimum degree.
//!
//! The pipeline is:
//!
//! 1. [`lollipop::find_dense_cycle`] grows a lollipop (a path glued to a
//!    cycle) until the rotation closure of its cycle yields at least `k + 1`
//!    vertices of cycle-degree `k`.
//! 2. [`contraction`] contracts passive cycle edges (and then half of the
//!    remaining non-active vertices) into quotients with guaranteed minimum
//!    or average degree.
//! 3. [`minor`] turns Hamiltonian quotients into verified cyclic-minor models
//!    of small cliques and of `K'_{ℓ,ℓ}`.
//!
//! [`oracle`] holds exhaustive certifiers that share no code with the
//! constructive modules, and [`corpus`] runs seeded batches of the pipeline.

pub mod contraction;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod json;
pub mod lollipop;
pub mod minor;
pub mod oracle;
pub mod par;

pub use error::{EngineError, GraphError, MinorError, OracleError, PlannerError};
pub use graph::{Edge, Graph, Vertex};
pub use par::Execution;
