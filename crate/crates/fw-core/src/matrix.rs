//! The square working matrix the relaxation passes operate on.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphInstance, Vertex};
use crate::weight::Weight;

/// An `n x n` matrix of weights indexed by ordered vertex pairs (1-based).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DistMatrix {
    n: usize,
    entries: Vec<Weight>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: Vertex, j: Vertex) -> Weight {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "vertex out of range");
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: Vertex, j: Vertex, w: Weight) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "vertex out of range");
        self.entries[(i - 1) * self.n + (j - 1)] = w;
    }

    pub fn entries(&self) -> &[Weight] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Weight] {
        &mut self.entries
    }

    pub(crate) fn from_entries(n: usize, entries: Vec<Weight>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        DistMatrix { n, entries }
    }

    /// True when every entry of `self` is less than or equal to the matching
    /// entry of `other`. Requires equal dimensions.
    pub fn entrywise_le(&self, other: &DistMatrix) -> bool {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Ordered pairs where the two matrices disagree.
    pub fn diff(&self, other: &DistMatrix) -> Vec<(Vertex, Vertex)> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for DistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if j > 1 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// The starting matrix of every pass: `d[i, j] = w(i, j)` for all ordered
/// pairs, the diagonal included.
pub fn init_matrix(g: &GraphInstance) -> DistMatrix {
    DistMatrix { n: g.n(), entries: g.entries().to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn fig2() -> GraphInstance {
        GraphInstance::from_edges(4, &[(1, 3, 1), (3, 2, 1), (2, 4, 1)]).unwrap()
    }

    #[test]
    fn init_copies_weights() {
        let g = fig2();
        let d = init_matrix(&g);
        assert_eq!(d.get(1, 3), Weight::Finite(1));
        assert_eq!(d.get(3, 2), Weight::Finite(1));
        assert_eq!(d.get(2, 4), Weight::Finite(1));
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(d.get(i, j), g.weight(i, j));
            }
        }
    }

    #[test]
    fn init_single_vertex() {
        let g = GraphInstance::from_edges(1, &[]).unwrap();
        let d = init_matrix(&g);
        assert_eq!(d.n(), 1);
        assert_eq!(d.get(1, 1), Weight::ZERO);
    }

    #[test]
    fn init_complete_constant() {
        let mut edges = vec![];
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    edges.push((i, j, 5));
                }
            }
        }
        let d = init_matrix(&GraphInstance::from_edges(3, &edges).unwrap());
        for i in 1..=3 {
            for j in 1..=3 {
                let want = if i == j { Weight::ZERO } else { Weight::Finite(5) };
                assert_eq!(d.get(i, j), want);
            }
        }
    }

    #[test]
    fn display_uses_inf_token() {
        let rendered = init_matrix(&fig2()).to_string();
        let rows: Vec<&str> = rendered.lines().map(str::trim).collect();
        assert_eq!(rows[0], "0 INF 1 INF");
        assert_eq!(rows[3], "INF INF INF 0");
    }

    #[test]
    fn diff_lists_disagreements() {
        let g = fig2();
        let a = init_matrix(&g);
        let mut b = a.clone();
        b.set(1, 4, Weight::Finite(3));
        assert_eq!(a.diff(&b), vec![(1, 4)]);
        assert!(b.entrywise_le(&a));
        assert!(!a.entrywise_le(&b));
    }
}
