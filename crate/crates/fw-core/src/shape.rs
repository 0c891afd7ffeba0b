//! Shaped shortest paths in the modified graph.
//!
//! After one misordered pass, the matrix entries still admit shortest paths
//! of restricted label shapes when each entry is read as a direct edge of a
//! complete digraph: an upper-unimodal path after an IJK pass, and a path
//! increasing everywhere except its last step after an IKJ pass. This module
//! decides those existence questions exactly by dynamic programming over
//! vertices in label order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Vertex, VertexPath};
use crate::matrix::DistMatrix;
use crate::weight::Weight;

/// Label shape of a vertex sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PathShape {
    /// Labels strictly increase to a peak, then strictly decrease.
    UpperUnimodal,
    /// Labels strictly increase through the penultimate vertex; the final
    /// vertex is unconstrained.
    IncreasingExceptLast,
}

impl PathShape {
    /// Whether a vertex sequence satisfies this shape. Sequences with at
    /// most two vertices satisfy every shape.
    pub fn matches(self, vertices: &[Vertex]) -> bool {
        match self {
            PathShape::UpperUnimodal => is_upper_unimodal(vertices),
            PathShape::IncreasingExceptLast => is_increasing_except_last(vertices),
        }
    }
}

impl fmt::Display for PathShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathShape::UpperUnimodal => "upper-unimodal",
            PathShape::IncreasingExceptLast => "increasing-except-last",
        })
    }
}

/// Strictly increasing to some peak, then strictly decreasing. The peak may
/// sit at either end.
pub fn is_upper_unimodal(vertices: &[Vertex]) -> bool {
    let mut h = 0;
    while h + 1 < vertices.len() && vertices[h] < vertices[h + 1] {
        h += 1;
    }
    vertices[h..].windows(2).all(|p| p[0] > p[1])
}

/// Strictly increasing through the penultimate vertex.
pub fn is_increasing_except_last(vertices: &[Vertex]) -> bool {
    let prefix = vertices.len().saturating_sub(1);
    vertices[..prefix].windows(2).all(|p| p[0] < p[1])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeError {
    DimensionMismatch { d: usize, target: usize },
    VertexOutOfRange { vertex: Vertex, n: usize },
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::DimensionMismatch { d, target } => {
                write!(f, "matrix is {d}x{d} but target is {target}x{target}")
            }
            ShapeError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
        }
    }
}

impl core::error::Error for ShapeError {}

/// True iff the complete digraph with edge lengths `d` contains a path from
/// `s` to `t` of total length `target[s, t]` whose vertex sequence satisfies
/// `shape`. `target` must hold the true distances of the instance, so every
/// path in `d` has length at least `target[s, t]`.
pub fn exists_shaped_shortest(
    d: &DistMatrix,
    target: &DistMatrix,
    s: Vertex,
    t: Vertex,
    shape: PathShape,
) -> Result<bool, ShapeError> {
    Ok(shaped_search(d, target, s, t, shape)?.is_some())
}

/// Like [`exists_shaped_shortest`], but returns one shape-satisfying
/// shortest path. The witness re-checks: its length under `d` equals
/// `target[s, t]` and its vertex sequence satisfies `shape`.
pub fn enumerate_shaped_witness(
    d: &DistMatrix,
    target: &DistMatrix,
    s: Vertex,
    t: Vertex,
    shape: PathShape,
) -> Result<Option<VertexPath>, ShapeError> {
    shaped_search(d, target, s, t, shape)
}

#[allow(clippy::needless_range_loop)]
fn shaped_search(
    d: &DistMatrix,
    target: &DistMatrix,
    s: Vertex,
    t: Vertex,
    shape: PathShape,
) -> Result<Option<VertexPath>, ShapeError> {
    let n = d.n();
    if target.n() != n {
        return Err(ShapeError::DimensionMismatch { d: n, target: target.n() });
    }
    for v in [s, t] {
        if v < 1 || v > n {
            return Err(ShapeError::VertexOutOfRange { vertex: v, n });
        }
    }
    let goal = target.get(s, t);

    // The empty path covers s = t with target 0; it satisfies every shape.
    if s == t && goal == Weight::ZERO {
        return Ok(Some(path(vec![s], n)));
    }
    // An infinite target is attained exactly by the direct edge [s, t] when
    // that entry is itself infinite (single-edge paths satisfy every shape).
    if goal == Weight::Infinity {
        return Ok((s != t && d.get(s, t) == Weight::Infinity).then(|| path(vec![s, t], n)));
    }
    let Weight::Finite(goal) = goal else { unreachable!() };
    let goal = goal as i128;

    // Cheapest path from s whose labels strictly increase, ending at each
    // vertex; lengths in i128 so sums never overflow. inc[s] = 0.
    let mut inc: Vec<Option<i128>> = vec![None; n + 1];
    let mut inc_parent: Vec<Vertex> = vec![0; n + 1];
    inc[s] = Some(0);
    for v in (s + 1)..=n {
        for u in s..v {
            let Some(base) = inc[u] else { continue };
            let Weight::Finite(w) = d.get(u, v) else { continue };
            let cand = base + w as i128;
            if inc[v].is_none_or(|cur| cand < cur) {
                inc[v] = Some(cand);
                inc_parent[v] = u;
            }
        }
    }

    match shape {
        PathShape::IncreasingExceptLast => {
            // Best increasing prefix to any u, plus one final edge u -> t.
            let mut best: Option<(i128, Vertex)> = None;
            for u in s..=n {
                if u == t {
                    continue;
                }
                let Some(base) = inc[u] else { continue };
                let Weight::Finite(w) = d.get(u, t) else { continue };
                let cand = base + w as i128;
                if best.is_none_or(|(cur, _)| cand < cur) {
                    best = Some((cand, u));
                }
            }
            match best {
                Some((len, u)) if len == goal => {
                    let mut vertices = increasing_chain(&inc_parent, s, u);
                    vertices.push(t);
                    Ok(Some(path(vertices, n)))
                }
                _ => Ok(None),
            }
        }
        PathShape::UpperUnimodal => {
            // Cheapest strictly decreasing path into t from each vertex.
            let mut dec: Vec<Option<i128>> = vec![None; n + 1];
            let mut dec_next: Vec<Vertex> = vec![0; n + 1];
            dec[t] = Some(0);
            for p in (t + 1)..=n {
                for v in t..p {
                    let Some(rest) = dec[v] else { continue };
                    let Weight::Finite(w) = d.get(p, v) else { continue };
                    let cand = w as i128 + rest;
                    if dec[p].is_none_or(|cur| cand < cur) {
                        dec[p] = Some(cand);
                        dec_next[p] = v;
                    }
                }
            }
            // Join the two slopes at every candidate peak.
            let mut best: Option<(i128, Vertex)> = None;
            for peak in 1..=n {
                let (Some(up), Some(down)) = (inc[peak], dec[peak]) else { continue };
                let cand = up + down;
                if best.is_none_or(|(cur, _)| cand < cur) {
                    best = Some((cand, peak));
                }
            }
            match best {
                Some((len, peak)) if len == goal => {
                    let mut vertices = increasing_chain(&inc_parent, s, peak);
                    let mut cur = peak;
                    while cur != t {
                        cur = dec_next[cur];
                        vertices.push(cur);
                    }
                    Ok(Some(path(vertices, n)))
                }
                _ => Ok(None),
            }
        }
    }
}

/// Rebuilds the increasing chain s -> .. -> u from the parent table.
fn increasing_chain(parent: &[Vertex], s: Vertex, u: Vertex) -> Vec<Vertex> {
    let mut rev = vec![u];
    let mut cur = u;
    while cur != s {
        cur = parent[cur];
        rev.push(cur);
    }
    rev.reverse();
    rev
}

fn path(vertices: Vec<Vertex>, n: usize) -> VertexPath {
    VertexPath::new(vertices, n).expect("search only builds valid paths")
}
