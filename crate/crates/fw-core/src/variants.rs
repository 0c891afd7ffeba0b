//! The triply nested relaxation pass in its three loop orders, repeated
//! execution, and fixpoint detection.
//!
//! KIJ is the classic all-pairs shortest path algorithm; IJK and IKJ are the
//! common misorderings that put the intermediate-vertex loop inside. All
//! three share the single update `d[i,j] <- min(d[i,j], d[i,k] + d[k,j])`
//! over index triples drawn in increasing order, and every update sees all
//! earlier updates of the same pass.

use alloc::vec::Vec;
use core::cmp;
use core::fmt;

use crate::graph::{validate_no_negative_cycle, GraphInstance, NegativeCycle};
use crate::matrix::{init_matrix, DistMatrix};
use crate::oracle::{apsp_bellman_ford, OracleError};
use crate::weight::{weight_add, OverflowError, Weight};

/// Order of the three nested loops.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PassOrder {
    /// Intermediate vertex outermost: the correct algorithm.
    Kij,
    /// Intermediate vertex innermost.
    Ijk,
    /// Intermediate vertex in the middle.
    Ikj,
}

impl PassOrder {
    pub const ALL: [PassOrder; 3] = [PassOrder::Kij, PassOrder::Ijk, PassOrder::Ikj];

    /// Passes guaranteed to reach the true distances on any instance with no
    /// negative cycles: 1 for KIJ, 3 for IJK, 2 for IKJ.
    pub fn repeat_bound(self) -> usize {
        match self {
            PassOrder::Kij => 1,
            PassOrder::Ijk => 3,
            PassOrder::Ikj => 2,
        }
    }
}

impl fmt::Display for PassOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PassOrder::Kij => "KIJ",
            PassOrder::Ijk => "IJK",
            PassOrder::Ikj => "IKJ",
        })
    }
}

#[inline]
fn step(d: &mut [Weight], n: usize, i: usize, k: usize, j: usize, changed: &mut bool) -> Result<(), OverflowError> {
    let sum = weight_add(d[i * n + k], d[k * n + j])?;
    let cur = &mut d[i * n + j];
    if sum < *cur {
        *cur = sum;
        *changed = true;
    }
    Ok(())
}

pub(crate) fn relax_pass_in_place(d: &mut DistMatrix, order: PassOrder) -> Result<bool, OverflowError> {
    let n = d.n();
    let m = d.entries_mut();
    let mut changed = false;
    match order {
        PassOrder::Kij => {
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        step(m, n, i, k, j, &mut changed)?;
                    }
                }
            }
        }
        PassOrder::Ijk => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        step(m, n, i, k, j, &mut changed)?;
                    }
                }
            }
        }
        PassOrder::Ikj => {
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        step(m, n, i, k, j, &mut changed)?;
                    }
                }
            }
        }
    }
    Ok(changed)
}

/// One complete pass of the triply nested loops in the given order.
///
/// Returns the resulting matrix and whether any entry strictly decreased.
pub fn relax_pass(d: &DistMatrix, order: PassOrder) -> Result<(DistMatrix, bool), OverflowError> {
    let mut out = d.clone();
    let changed = relax_pass_in_place(&mut out, order)?;
    Ok((out, changed))
}

/// Snapshots taken after each completed pass of a repeated run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunTrace {
    /// Matrix state after pass 1, 2, ...
    pub snapshots: Vec<DistMatrix>,
    /// Whether the corresponding pass modified any entry.
    pub changed: Vec<bool>,
}

impl RunTrace {
    pub fn passes(&self) -> usize {
        self.snapshots.len()
    }

    pub fn final_matrix(&self) -> &DistMatrix {
        self.snapshots.last().expect("a repeated run has at least one pass")
    }
}

/// Applies `relax_pass` the requested number of times, recording a snapshot
/// and changed flag after each pass. `repeats` must be at least 1.
pub fn run_repeated(d: &DistMatrix, order: PassOrder, repeats: usize) -> Result<RunTrace, OverflowError> {
    assert!(repeats >= 1, "a repeated run needs at least one pass");
    let mut snapshots = Vec::with_capacity(repeats);
    let mut changed = Vec::with_capacity(repeats);
    let mut cur = d.clone();
    for _ in 0..repeats {
        let ch = relax_pass_in_place(&mut cur, order)?;
        snapshots.push(cur.clone());
        changed.push(ch);
    }
    Ok(RunTrace { snapshots, changed })
}

/// Result of counting passes until the true distances are reached.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepeatsOutcome {
    /// The matrix equalled the target after this many passes (at least 1).
    Converged(usize),
    /// Still short of the target after `cap` passes.
    CapExceeded { cap: usize },
}

impl RepeatsOutcome {
    pub fn converged(self) -> Option<usize> {
        match self {
            RepeatsOutcome::Converged(k) => Some(k),
            RepeatsOutcome::CapExceeded { .. } => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepeatsError {
    NegativeCycle(NegativeCycle),
    Overflow(OverflowError),
}

impl fmt::Display for RepeatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepeatsError::NegativeCycle(c) => c.fmt(f),
            RepeatsError::Overflow(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for RepeatsError {}

/// Default search cap: comfortably above the theorem bound of 3 so that a
/// bound violation surfaces as `CapExceeded` instead of an endless loop.
pub fn default_cap(n: usize) -> usize {
    cmp::max(3, n)
}

/// Counts passes of `order` from `init` until the matrix equals `target`,
/// giving up after `cap` passes. Exits early once a pass stops changing the
/// matrix, since a further pass can then never make progress.
pub fn repeats_until(
    init: &DistMatrix,
    target: &DistMatrix,
    order: PassOrder,
    cap: usize,
) -> Result<RepeatsOutcome, OverflowError> {
    assert!(cap >= 1, "cap must be at least 1");
    let mut cur = init.clone();
    for pass in 1..=cap {
        let changed = relax_pass_in_place(&mut cur, order)?;
        if cur == *target {
            return Ok(RepeatsOutcome::Converged(pass));
        }
        if !changed {
            return Ok(RepeatsOutcome::CapExceeded { cap });
        }
    }
    Ok(RepeatsOutcome::CapExceeded { cap })
}

/// Smallest number of passes of `order` after which the working matrix
/// equals the true distance matrix, or `CapExceeded`.
///
/// Rejects instances with negative cycles, naming the witness cycle.
pub fn repeats_to_correct(
    g: &GraphInstance,
    order: PassOrder,
    cap: usize,
) -> Result<RepeatsOutcome, RepeatsError> {
    validate_no_negative_cycle(g).map_err(RepeatsError::NegativeCycle)?;
    let target = apsp_bellman_ford(g).map_err(|e| match e {
        OracleError::Overflow(o) => RepeatsError::Overflow(o),
        OracleError::NegativeCycle(c) => RepeatsError::NegativeCycle(c),
        other => unreachable!("bellman-ford oracle cannot fail with {other:?}"),
    })?;
    repeats_until(&init_matrix(g), &target, order, cap).map_err(RepeatsError::Overflow)
}
