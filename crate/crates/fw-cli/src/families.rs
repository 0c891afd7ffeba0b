//! Instance families for the converse searches.
//!
//! Two exhaustive families with deterministic enumeration order, plus a
//! seeded random generator. Exhaustive enumeration is index-addressable so
//! workers can build instances independently; merged results then never
//! depend on scheduling.

use fw_core::{validate_no_negative_cycle, GraphInstance, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Exhaustive permutation-path searches are limited to `n! <= 8!`.
pub const PERMUTATION_PATH_MAX_N: usize = 8;
/// Exhaustive unit-digraph searches are limited to `2^(n(n-1)) <= 2^20`.
pub const UNIT_DIGRAPH_MAX_N: usize = 5;
/// Draws per index before the random generator gives up.
const GENERATION_ATTEMPT_LIMIT: u64 = 100_000;

/// Parameters of the seeded random instance generator. Self-loops stay 0;
/// each remaining ordered pair is present with probability `density` and
/// gets a weight uniform in `weight_min..=weight_max`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RandomParams {
    pub n: usize,
    pub density: f64,
    pub weight_min: i64,
    pub weight_max: i64,
}

impl RandomParams {
    pub fn validate(&self) -> Result<(), BudgetError> {
        let ok = self.n >= 1
            && self.density.is_finite()
            && (0.0..=1.0).contains(&self.density)
            && self.weight_min <= self.weight_max;
        if ok {
            Ok(())
        } else {
            Err(BudgetError::BadRandomParams)
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum InstanceFamily {
    /// Unit-weight directed path on `1..=n`, vertices relabeled by every
    /// permutation; exactly `n!` instances in lexicographic order.
    PermutationPath { n: usize },
    /// Every digraph on `n` labeled vertices with all present edges of
    /// weight 1; exactly `2^(n(n-1))` instances ordered by adjacency mask.
    AllUnitDigraphs { n: usize },
    /// Seeded random instances; index `i` is drawn from stream `i` of a
    /// ChaCha generator, redrawing (and counting) negative-cycle instances.
    RandomWeighted { params: RandomParams, count: u64, seed: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Error, Debug)]
pub enum BudgetError {
    #[error("permutation-path family at n={n} has {size} instances, beyond the n<={max} budget")]
    PermutationPathTooLarge { n: usize, size: u128, max: usize },
    #[error("unit-digraph family at n={n} has {size} instances, beyond the n<={max} budget")]
    UnitDigraphsTooLarge { n: usize, size: u128, max: usize },
    #[error("family needs at least one vertex")]
    NoVertices,
    #[error("random parameters need density in 0..=1 and weight_min <= weight_max")]
    BadRandomParams,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl InstanceFamily {
    /// Number of instances, before any budget consideration.
    pub fn size(&self) -> u128 {
        match self {
            InstanceFamily::PermutationPath { n } => factorial(*n),
            InstanceFamily::AllUnitDigraphs { n } => 1u128 << (n * (n.saturating_sub(1))),
            InstanceFamily::RandomWeighted { count, .. } => *count as u128,
        }
    }

    pub fn check_budget(&self) -> Result<(), BudgetError> {
        match self {
            InstanceFamily::PermutationPath { n } => {
                if *n == 0 {
                    Err(BudgetError::NoVertices)
                } else if *n > PERMUTATION_PATH_MAX_N {
                    Err(BudgetError::PermutationPathTooLarge {
                        n: *n,
                        size: self.size(),
                        max: PERMUTATION_PATH_MAX_N,
                    })
                } else {
                    Ok(())
                }
            }
            InstanceFamily::AllUnitDigraphs { n } => {
                if *n == 0 {
                    Err(BudgetError::NoVertices)
                } else if *n > UNIT_DIGRAPH_MAX_N {
                    Err(BudgetError::UnitDigraphsTooLarge {
                        n: *n,
                        size: self.size(),
                        max: UNIT_DIGRAPH_MAX_N,
                    })
                } else {
                    Ok(())
                }
            }
            InstanceFamily::RandomWeighted { params, .. } => params.validate(),
        }
    }

    /// Instance count as an index bound; call after `check_budget`.
    pub fn len(&self) -> u64 {
        self.size() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n(&self) -> usize {
        match self {
            InstanceFamily::PermutationPath { n } | InstanceFamily::AllUnitDigraphs { n } => *n,
            InstanceFamily::RandomWeighted { params, .. } => params.n,
        }
    }

    /// Short name for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFamily::PermutationPath { .. } => "perm-path",
            InstanceFamily::AllUnitDigraphs { .. } => "unit-digraphs",
            InstanceFamily::RandomWeighted { .. } => "random",
        }
    }

    /// Builds the instance at `idx` along with the number of negative-cycle
    /// draws discarded on the way (always 0 for the exhaustive families).
    pub fn fetch(&self, idx: u64) -> Result<(GraphInstance, u64), GenerationError> {
        debug_assert!(idx < self.len());
        match self {
            InstanceFamily::PermutationPath { n } => {
                Ok((perm_path_instance(&permutation_of_rank(*n, idx)), 0))
            }
            InstanceFamily::AllUnitDigraphs { n } => Ok((unit_digraph_instance(*n, idx), 0)),
            InstanceFamily::RandomWeighted { params, seed, .. } => {
                random_instance(params, *seed, idx)
            }
        }
    }
}

/// Every draw for one index came out with a negative cycle; the parameters
/// are almost certainly degenerate.
#[derive(Clone, Copy, PartialEq, Eq, Error, Debug)]
#[error("instance {index}: gave up after {attempts} draws, every one had a negative cycle")]
pub struct GenerationError {
    pub index: u64,
    pub attempts: u64,
}

/// The permutation of `1..=n` with the given lexicographic rank.
pub fn permutation_of_rank(n: usize, mut rank: u64) -> Vec<Vertex> {
    let mut factorials: Vec<u64> = vec![1; n.max(1)];
    for i in 1..n {
        factorials[i] = factorials[i - 1] * i as u64;
    }
    let mut remaining: Vec<Vertex> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in (0..n).rev() {
        let f = factorials[pos];
        let choice = (rank / f) as usize;
        rank %= f;
        out.push(remaining.remove(choice));
    }
    out
}

/// Unit-weight path visiting the labels of `order` in sequence.
pub fn perm_path_instance(order: &[Vertex]) -> GraphInstance {
    let edges: Vec<(Vertex, Vertex, i64)> = order.windows(2).map(|p| (p[0], p[1], 1)).collect();
    GraphInstance::from_edges(order.len(), &edges).expect("permutation labels are in range")
}

/// Digraph selected by `mask` over the `n(n-1)` ordered pairs in row-major
/// order, every present edge of weight 1.
pub fn unit_digraph_instance(n: usize, mask: u64) -> GraphInstance {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if mask >> bit & 1 == 1 {
                edges.push((i, j, 1));
            }
            bit += 1;
        }
    }
    GraphInstance::from_edges(n, &edges).expect("labels are in range")
}

/// Draws the instance for `index` from its own generator stream, discarding
/// negative-cycle draws. Returns the instance and the discard count.
pub fn random_instance(
    params: &RandomParams,
    seed: u64,
    index: u64,
) -> Result<(GraphInstance, u64), GenerationError> {
    params.validate().expect("parameters validated by the caller");
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    for discarded in 0..GENERATION_ATTEMPT_LIMIT {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                if rng.random_bool(params.density) {
                    edges.push((i, j, rng.random_range(params.weight_min..=params.weight_max)));
                }
            }
        }
        let g = GraphInstance::from_edges(n, &edges).expect("labels are in range");
        if validate_no_negative_cycle(&g).is_ok() {
            return Ok((g, discarded));
        }
    }
    Err(GenerationError { index, attempts: GENERATION_ATTEMPT_LIMIT })
}

/// Yields each instance of the family exactly once, in its canonical order.
///
/// Random-family draws that exhaust the retry limit panic; use the search
/// entry points for fallible handling.
pub fn enumerate_family(
    family: &InstanceFamily,
) -> Result<impl Iterator<Item = GraphInstance> + '_, BudgetError> {
    family.check_budget()?;
    Ok((0..family.len()).map(move |idx| {
        family
            .fetch(idx)
            .expect("generator exhausted its retry budget")
            .0
    }))
}
