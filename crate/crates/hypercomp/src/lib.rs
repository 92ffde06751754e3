//! Competition hypergraphs of digraphs and the hypercompetition number.
//!
//! The competition hypergraph of a digraph has the same vertices, and a
//! set of vertices forms a hyperedge exactly when it is the set of
//! in-neighbors of some vertex and has size at least two. The
//! hypercompetition number of a hypergraph H is the least number of
//! isolated vertices that must be added to H so that the result is the
//! competition hypergraph of an acyclic digraph.
//!
//! The crate provides:
//! - core types ([`Hypergraph`], [`Digraph`]) with a plain text format,
//! - [`competition_hypergraph`] and witness verification,
//! - general lower bounds ([`best_lower_bound`]),
//! - constructive upper bounds for several hypergraph families
//!   ([`construct_auto`] picks one automatically),
//! - an exact branch and bound solver ([`exact_hk`]).
//!
//! See the `examples/` directory for a tour of each capability.

pub mod bounds;
pub mod cli;
pub mod competition;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod text;

pub use bounds::{best_lower_bound, lower_bound_degree, lower_bound_size, BoundReport};
pub use competition::{competition_hypergraph, verify_witness, Failure, VerificationReport, Witness};
pub use constructions::{
    construct_auto, find_elimination_ordering, find_spanning_certificate,
    validate_elimination_ordering, witness_acyclic_uniform, witness_complete_uniform,
    witness_connected_graph, witness_degree_one, witness_from_elimination,
    witness_with_extra_edges, EliminationOrdering, SpanningCertificate,
};
pub use digraph::{AcyclicOrdering, Digraph};
pub use error::{Error, Result};
pub use exact::{exact_hk, exact_hk_naive, exact_hk_with, ExactOptions, ExactResult, Status};
pub use hypergraph::{CyclePath, Hypergraph};
pub use text::{emit_digraph, emit_hypergraph, parse_digraph, parse_hypergraph};
