//! Graph instances over complete digraphs, vertex paths, and the
//! no-negative-cycle precondition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::DistMatrix;
use crate::weight::Weight;

/// Vertex label. Labels are 1-based everywhere in the public API, matching
/// the usual convention for these instances.
pub type Vertex = usize;

/// A complete directed graph on vertices `1..=n` with an edge-length function
/// over ordered pairs. Absent edges are represented by [`Weight::Infinity`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphInstance {
    n: usize,
    weights: Vec<Weight>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// Instances need at least one vertex.
    NoVertices,
    /// The weight table must cover all of `V x V`.
    WrongWeightCount { expected: usize, got: usize },
    /// A vertex label outside `1..=n`.
    VertexOutOfRange { vertex: Vertex, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NoVertices => f.write_str("graph needs at least one vertex"),
            GraphError::WrongWeightCount { expected, got } => {
                write!(f, "weight table has {got} entries, expected {expected}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl GraphInstance {
    /// Builds an instance from a full row-major weight table (`n * n`
    /// entries, entry `(i, j)` at index `(i-1)*n + (j-1)`).
    pub fn new(n: usize, weights: Vec<Weight>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if weights.len() != n * n {
            return Err(GraphError::WrongWeightCount { expected: n * n, got: weights.len() });
        }
        Ok(GraphInstance { n, weights })
    }

    /// Builds an instance from an edge list. Missing ordered pairs become
    /// infinity, missing self-loops default to 0 (an explicit self-loop
    /// overrides the default), and duplicate pairs keep the minimum weight.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, i64)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut weights = vec![Weight::Infinity; n * n];
        for &(tail, head, w) in edges {
            for v in [tail, head] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            let slot = &mut weights[(tail - 1) * n + (head - 1)];
            let w = Weight::Finite(w);
            if w < *slot {
                *slot = w;
            }
        }
        for i in 1..=n {
            let diag = &mut weights[(i - 1) * n + (i - 1)];
            if *diag == Weight::Infinity {
                *diag = Weight::ZERO;
            }
        }
        Ok(GraphInstance { n, weights })
    }

    /// Views a distance matrix as a graph: every entry becomes one direct
    /// edge of the complete digraph.
    pub fn from_matrix(d: &DistMatrix) -> Self {
        GraphInstance { n: d.n(), weights: d.entries().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge length of the ordered pair `(i, j)`, 1-based.
    pub fn weight(&self, i: Vertex, j: Vertex) -> Weight {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "vertex out of range");
        self.weights[(i - 1) * self.n + (j - 1)]
    }

    pub(crate) fn entries(&self) -> &[Weight] {
        &self.weights
    }

    /// Finite edges as `(tail, head, weight)` triples in row-major order,
    /// self-loops included only when their weight is not the default 0.
    pub fn finite_edges(&self) -> Vec<(Vertex, Vertex, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if let Weight::Finite(w) = self.weight(i, j) {
                    if i != j || w != 0 {
                        out.push((i, j, w));
                    }
                }
            }
        }
        out
    }

    /// Copy with the ordered pair `(i, j)` erased to infinity.
    pub fn without_edge(&self, i: Vertex, j: Vertex) -> Self {
        let mut g = self.clone();
        g.weights[(i - 1) * self.n + (j - 1)] = Weight::Infinity;
        g
    }

    /// Copy with vertex `v` removed; labels above `v` shift down by one.
    /// Requires `n >= 2`.
    pub fn without_vertex(&self, v: Vertex) -> Self {
        assert!(self.n >= 2, "cannot remove the last vertex");
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        let m = self.n - 1;
        let mut weights = Vec::with_capacity(m * m);
        for i in 1..=self.n {
            if i == v {
                continue;
            }
            for j in 1..=self.n {
                if j == v {
                    continue;
                }
                weights.push(self.weight(i, j));
            }
        }
        GraphInstance { n: m, weights }
    }
}

/// A nonempty sequence of vertex labels with distinct consecutive entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPath {
    vertices: Vec<Vertex>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathError {
    Empty,
    RepeatedConsecutive { position: usize },
    VertexOutOfRange { vertex: Vertex, n: usize },
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Empty => f.write_str("path needs at least one vertex"),
            PathError::RepeatedConsecutive { position } => {
                write!(f, "consecutive vertices at positions {position} and {} are equal", position + 1)
            }
            PathError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
        }
    }
}

impl core::error::Error for PathError {}

impl VertexPath {
    pub fn new(vertices: Vec<Vertex>, n: usize) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        for (pos, &v) in vertices.iter().enumerate() {
            if v < 1 || v > n {
                return Err(PathError::VertexOutOfRange { vertex: v, n });
            }
            if pos > 0 && vertices[pos - 1] == v {
                return Err(PathError::RepeatedConsecutive { position: pos - 1 });
            }
        }
        Ok(VertexPath { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("path is nonempty")
    }

    /// Number of edges, one less than the number of vertices.
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Total length of the path when each consecutive pair is charged the
    /// corresponding entry of `d`. A single-vertex path has length 0.
    /// Sums are taken in 128-bit arithmetic, so no overflow is possible.
    pub fn length_in(&self, d: &DistMatrix) -> LengthValue {
        let mut total: i128 = 0;
        for pair in self.vertices.windows(2) {
            match d.get(pair[0], pair[1]) {
                Weight::Finite(w) => total += w as i128,
                Weight::Infinity => return LengthValue::Infinite,
            }
        }
        LengthValue::Finite(total)
    }
}

/// Exact path length: finite 128-bit total or infinite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthValue {
    Finite(i128),
    Infinite,
}

impl LengthValue {
    /// Compares against a weight without losing precision.
    pub fn equals_weight(self, w: Weight) -> bool {
        match (self, w) {
            (LengthValue::Finite(a), Weight::Finite(b)) => a == b as i128,
            (LengthValue::Infinite, Weight::Infinity) => true,
            _ => false,
        }
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (pos, v) in self.vertices.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// A directed cycle of negative total weight, the witness carried by a
/// validation rejection. `vertices` starts and ends at the same label and is
/// rotated so the smallest label comes first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NegativeCycle {
    pub vertices: Vec<Vertex>,
    pub total: i128,
}

impl fmt::Display for NegativeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("negative cycle [")?;
        for (pos, v) in self.vertices.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] with total weight {}", self.total)
    }
}

impl core::error::Error for NegativeCycle {}

/// Checks that no directed cycle (self-loops included) has negative total
/// weight. Detection is a Bellman-Ford sweep from a virtual source; on
/// failure a concrete witness cycle is extracted.
pub fn validate_no_negative_cycle(g: &GraphInstance) -> Result<(), NegativeCycle> {
    let n = g.n();
    // 0-based finite edges, self-loops included so negative ones are caught.
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if let Weight::Finite(w) = g.weight(i, j) {
                edges.push((i - 1, j - 1, w));
            }
        }
    }
    // All-zero start stands in for a source connected to every vertex with
    // weight 0; i128 keeps the unbounded descent near a cycle exact.
    let mut dist = vec![0i128; n];
    for round in 1..=n {
        let mut relaxed = false;
        for &(u, v, w) in &edges {
            let cand = dist[u] + w as i128;
            if cand < dist[v] {
                dist[v] = cand;
                relaxed = true;
            }
        }
        if !relaxed {
            return Ok(());
        }
        if round == n {
            return Err(extract_negative_cycle(g).expect("relaxation past round n implies a negative cycle"));
        }
    }
    Ok(())
}

/// Finds a simple negative cycle by dynamic programming over walks with an
/// exact edge count: the smallest k with a negative closed k-edge walk yields
/// a cycle with no repeated interior vertex.
#[allow(clippy::needless_range_loop)]
fn extract_negative_cycle(g: &GraphInstance) -> Option<NegativeCycle> {
    let n = g.n();
    let w = |i: usize, j: usize| g.weight(i + 1, j + 1).finite().map(|v| v as i128);

    // best[i][j]: min weight over walks i -> j with exactly k edges;
    // hop[k][i][j]: first edge target on such a walk.
    let mut best: Vec<Vec<Option<i128>>> = (0..n)
        .map(|i| (0..n).map(|j| w(i, j)).collect())
        .collect();
    let mut hops: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|_| (0..n).collect()).collect()];
    // k = 1 walks are single edges; hop[0][i][j] = j.
    for row in hops[0].iter_mut() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = j;
        }
    }

    for k in 1..=n {
        if let Some((start, mut cycle_len)) = (0..n)
            .find(|&i| matches!(best[i][i], Some(t) if t < 0))
            .map(|i| (i, k))
        {
            // Reconstruct the closed walk of exactly k edges from `start`.
            let mut seq = vec![start];
            let mut cur = start;
            while cycle_len > 1 {
                let nxt = hops[cycle_len - 1][cur][start];
                seq.push(nxt);
                cur = nxt;
                cycle_len -= 1;
            }
            seq.push(start);
            return Some(canonical_cycle(g, &seq));
        }
        if k == n {
            break;
        }
        // Extend every walk by choosing its first edge.
        let mut next: Vec<Vec<Option<i128>>> = vec![vec![None; n]; n];
        let mut hop: Vec<Vec<usize>> = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            for v in 0..n {
                let Some(first) = w(i, v) else { continue };
                for j in 0..n {
                    if let Some(rest) = best[v][j] {
                        let cand = first + rest;
                        if next[i][j].is_none_or(|cur| cand < cur) {
                            next[i][j] = Some(cand);
                            hop[i][j] = v;
                        }
                    }
                }
            }
        }
        best = next;
        hops.push(hop);
    }
    None
}

/// Rotates a closed vertex sequence so the smallest label leads, and fills in
/// the total weight.
fn canonical_cycle(g: &GraphInstance, seq: &[usize]) -> NegativeCycle {
    let body = &seq[..seq.len() - 1];
    let pivot = body
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(pos, _)| pos)
        .unwrap_or(0);
    let mut vertices: Vec<Vertex> = body[pivot..].iter().chain(body[..pivot].iter()).map(|&v| v + 1).collect();
    vertices.push(vertices[0]);
    let mut total: i128 = 0;
    for pair in vertices.windows(2) {
        total += g
            .weight(pair[0], pair[1])
            .finite()
            .expect("cycle edges are finite") as i128;
    }
    debug_assert!(total < 0, "extracted cycle must be negative");
    NegativeCycle { vertices, total }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Unit-length path visiting the given labels in order.
    pub(crate) fn unit_path(order: &[Vertex]) -> GraphInstance {
        let n = order.len();
        let edges: Vec<(Vertex, Vertex, i64)> =
            order.windows(2).map(|p| (p[0], p[1], 1)).collect();
        GraphInstance::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_defaults() {
        let g = unit_path(&[1, 3, 2, 4]);
        assert_eq!(g.weight(1, 3), Weight::Finite(1));
        assert_eq!(g.weight(3, 2), Weight::Finite(1));
        assert_eq!(g.weight(2, 4), Weight::Finite(1));
        for i in 1..=4 {
            assert_eq!(g.weight(i, i), Weight::ZERO);
        }
        assert_eq!(g.weight(1, 2), Weight::Infinity);
        assert_eq!(g.weight(4, 1), Weight::Infinity);
    }

    #[test]
    fn duplicate_edges_keep_minimum() {
        let g = GraphInstance::from_edges(2, &[(1, 2, 9), (1, 2, 4), (1, 2, 6)]).unwrap();
        assert_eq!(g.weight(1, 2), Weight::Finite(4));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(GraphInstance::from_edges(0, &[]), Err(GraphError::NoVertices));
        assert_eq!(
            GraphInstance::from_edges(2, &[(1, 3, 1)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            GraphInstance::new(2, vec![Weight::ZERO; 3]),
            Err(GraphError::WrongWeightCount { expected: 4, got: 3 })
        );
    }

    #[test]
    fn vertex_removal_renumbers() {
        let g = unit_path(&[1, 3, 2, 4]);
        let h = g.without_vertex(2);
        // old labels 3, 4 become 2, 3; the edge 1 -> 3 becomes 1 -> 2.
        assert_eq!(h.n(), 3);
        assert_eq!(h.weight(1, 2), Weight::Finite(1));
        assert_eq!(h.weight(2, 3), Weight::Infinity);
    }

    #[test]
    fn validate_accepts_figure_instances() {
        assert_eq!(validate_no_negative_cycle(&unit_path(&[1, 2, 4, 3, 6, 7, 5])), Ok(()));
        assert_eq!(validate_no_negative_cycle(&unit_path(&[1, 3, 2, 4])), Ok(()));
    }

    #[test]
    fn validate_rejects_negative_two_cycle() {
        let g = GraphInstance::from_edges(2, &[(1, 2, 1), (2, 1, -2)]).unwrap();
        let cycle = validate_no_negative_cycle(&g).unwrap_err();
        assert_eq!(cycle.vertices, vec![1, 2, 1]);
        assert_eq!(cycle.total, -1);
    }

    #[test]
    fn validate_accepts_positive_three_cycle() {
        let g = GraphInstance::from_edges(3, &[(1, 2, -1), (2, 3, -1), (3, 1, 3)]).unwrap();
        assert_eq!(validate_no_negative_cycle(&g), Ok(()));
    }

    #[test]
    fn validate_rejects_negative_self_loop() {
        let g = GraphInstance::from_edges(3, &[(2, 2, -1), (1, 2, 5)]).unwrap();
        let cycle = validate_no_negative_cycle(&g).unwrap_err();
        assert_eq!(cycle.vertices, vec![2, 2]);
        assert_eq!(cycle.total, -1);
    }

    #[test]
    fn path_validation() {
        assert!(VertexPath::new(vec![], 3).is_err());
        assert!(VertexPath::new(vec![1, 1], 3).is_err());
        assert!(VertexPath::new(vec![1, 4], 3).is_err());
        let p = VertexPath::new(vec![1, 3, 1], 3).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(alloc::format!("{p}"), "[1, 3, 1]");
    }
}
