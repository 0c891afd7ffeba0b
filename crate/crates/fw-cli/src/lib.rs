//! Drivers around `fw-core`: instance families for exhaustive and randomized
//! counterexample search, the search and fuzzing engines, witness shrinking,
//! the edge-list file format, and report rendering for the `fwcheck` binary.

#![forbid(unsafe_code)]

pub mod families;
pub mod format;
pub mod minimize;
pub mod report;
pub mod search;

pub use families::{
    enumerate_family, permutation_of_rank, BudgetError, InstanceFamily, RandomParams,
    PERMUTATION_PATH_MAX_N, UNIT_DIGRAPH_MAX_N,
};
pub use format::{parse_edge_list, render_matrix, write_edge_list, ParseError, SerializeError};
pub use minimize::minimize_witness;
pub use search::{
    find_min_repeats_extremum, fuzz_theorems, CapExceededInstance, FuzzReport, FuzzViolation,
    OrderStats, SearchError, SearchReport, SearchWitness,
};
