//! Exact all-pairs shortest path machinery built around the three loop
//! orderings of the classic triply nested relaxation pass.
//!
//! The crate is `no_std` (with `alloc`) and dependency-free: everything in
//! here is a pure function over value types, safe to evaluate concurrently.
//!
//! * [`weight`] — extended integer edge weights with an absorbing infinity.
//! * [`graph`] — graph instances, vertex paths, negative-cycle validation.
//! * [`matrix`] — the square working matrix the passes operate on.
//! * [`variants`] — the KIJ / IJK / IKJ passes, repeated runs, fixpoints.
//! * [`oracle`] — ground-truth distances, independent of any pass order.
//! * [`shape`] — shaped-shortest-path existence checks and witnesses.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod shape;
pub mod variants;
pub mod weight;

pub use graph::{
    validate_no_negative_cycle, GraphError, GraphInstance, LengthValue, NegativeCycle, PathError,
    Vertex, VertexPath,
};
pub use matrix::{init_matrix, DistMatrix};
pub use oracle::{apsp_bellman_ford, apsp_brute_force, OracleError, BRUTE_FORCE_MAX_N};
pub use shape::{
    enumerate_shaped_witness, exists_shaped_shortest, is_increasing_except_last,
    is_upper_unimodal, PathShape, ShapeError,
};
pub use variants::{
    default_cap, relax_pass, repeats_to_correct, repeats_until, run_repeated, PassOrder,
    RepeatsError, RepeatsOutcome, RunTrace,
};
pub use weight::{weight_add, OverflowError, Weight};
