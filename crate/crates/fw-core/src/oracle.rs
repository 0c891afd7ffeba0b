//! Ground-truth all-pairs shortest path distances.
//!
//! Two independent routes: per-source Bellman-Ford relaxation, and exhaustive
//! enumeration of simple paths for small instances. Neither shares any code
//! with the triple-loop passes they are used to judge.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{validate_no_negative_cycle, GraphInstance, NegativeCycle};
use crate::matrix::DistMatrix;
use crate::weight::{OverflowError, Weight};

/// Largest instance the brute-force oracle accepts.
pub const BRUTE_FORCE_MAX_N: usize = 8;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleError {
    /// Instance too large for exhaustive path enumeration.
    TooLarge { n: usize, limit: usize },
    /// The no-negative-cycle precondition failed.
    NegativeCycle(NegativeCycle),
    /// A relaxation sum left the finite range.
    Overflow(OverflowError),
    /// A shortest-path total cannot be represented as a finite weight.
    DistanceOutOfRange { from: usize, to: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, limit } => {
                write!(f, "instance with {n} vertices exceeds the brute-force limit of {limit}")
            }
            OracleError::NegativeCycle(c) => c.fmt(f),
            OracleError::Overflow(e) => e.fmt(f),
            OracleError::DistanceOutOfRange { from, to } => {
                write!(f, "shortest-path distance from {from} to {to} exceeds the finite weight range")
            }
        }
    }
}

impl core::error::Error for OracleError {}

impl From<NegativeCycle> for OracleError {
    fn from(c: NegativeCycle) -> Self {
        OracleError::NegativeCycle(c)
    }
}

impl From<OverflowError> for OracleError {
    fn from(e: OverflowError) -> Self {
        OracleError::Overflow(e)
    }
}

/// All-pairs shortest path distances by Bellman-Ford from every source.
///
/// Entry `(i, j)` is the length of the shortest directed path from `i` to
/// `j`, infinity when unreachable; the diagonal is 0 (the empty path). The
/// no-negative-cycle precondition is re-checked on entry.
pub fn apsp_bellman_ford(g: &GraphInstance) -> Result<DistMatrix, OracleError> {
    validate_no_negative_cycle(g)?;
    let n = g.n();
    // Finite off-diagonal edges, 0-based. Self-loops are non-negative after
    // validation and can never improve a distance.
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if let Weight::Finite(w) = g.weight(i, j) {
                edges.push((i - 1, j - 1, w));
            }
        }
    }

    let mut entries = vec![Weight::Infinity; n * n];
    let mut dist: Vec<Option<i64>> = vec![None; n];
    for s in 0..n {
        dist.fill(None);
        dist[s] = Some(0);
        for _ in 1..n {
            let mut relaxed = false;
            for &(u, v, w) in &edges {
                let Some(du) = dist[u] else { continue };
                let cand = du.checked_add(w).ok_or(OverflowError { lhs: du, rhs: w })?;
                if dist[v].is_none_or(|dv| cand < dv) {
                    dist[v] = Some(cand);
                    relaxed = true;
                }
            }
            if !relaxed {
                break;
            }
        }
        for v in 0..n {
            entries[s * n + v] = match dist[v] {
                Some(d) => Weight::Finite(d),
                None => Weight::Infinity,
            };
        }
    }
    Ok(DistMatrix::from_entries(n, entries))
}

/// All-pairs shortest path distances by exhaustive enumeration of simple
/// paths (and, on the diagonal, the empty path and simple cycles).
///
/// Deliberately naive; the independent cross-check for the relaxation oracle.
pub fn apsp_brute_force(g: &GraphInstance) -> Result<DistMatrix, OracleError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(OracleError::TooLarge { n, limit: BRUTE_FORCE_MAX_N });
    }

    // i128 accumulation: at most n edges per path, so sums cannot overflow.
    let mut best: Vec<Option<i128>> = vec![None; n * n];
    for s in 0..n {
        best[s * n + s] = Some(0); // the empty path
        if let Weight::Finite(w) = g.weight(s + 1, s + 1) {
            record(&mut best[s * n + s], w as i128);
        }
        let mut visited = vec![false; n];
        visited[s] = true;
        explore(g, s, s, 0, &mut visited, &mut best);
    }

    let mut entries = vec![Weight::Infinity; n * n];
    for (idx, b) in best.iter().enumerate() {
        if let Some(total) = b {
            let w = i64::try_from(*total)
                .map_err(|_| OracleError::DistanceOutOfRange { from: idx / n + 1, to: idx % n + 1 })?;
            entries[idx] = Weight::Finite(w);
        }
    }
    Ok(DistMatrix::from_entries(n, entries))
}

fn record(slot: &mut Option<i128>, cand: i128) {
    if slot.is_none_or(|cur| cand < cur) {
        *slot = Some(cand);
    }
}

/// Depth-first extension of a simple path from `s` currently ending at `at`.
fn explore(
    g: &GraphInstance,
    s: usize,
    at: usize,
    acc: i128,
    visited: &mut Vec<bool>,
    best: &mut Vec<Option<i128>>,
) {
    let n = g.n();
    for v in 0..n {
        let Weight::Finite(w) = g.weight(at + 1, v + 1) else { continue };
        let total = acc + w as i128;
        if v == s {
            if at != s {
                record(&mut best[s * n + s], total); // simple cycle closed
            }
            continue;
        }
        if visited[v] {
            continue;
        }
        record(&mut best[s * n + v], total);
        visited[v] = true;
        explore(g, s, v, total, visited, best);
        visited[v] = false;
    }
}
