//! Exhaustive and randomized searches for repeat-count extrema.
//!
//! Instances are checked in parallel; every merge happens on index-sorted
//! data, so reports are identical whatever the worker count.

use std::collections::BTreeMap;

use fw_core::{
    apsp_bellman_ford, init_matrix, repeats_to_correct, repeats_until, GraphInstance,
    OracleError, PassOrder, RepeatsError, RepeatsOutcome,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::families::{BudgetError, GenerationError, InstanceFamily, RandomParams};

/// Upper bound on fully materialized witness instances per report; the
/// complete index list is always kept.
pub const DEFAULT_WITNESS_LIMIT: usize = 10_000;

#[derive(Error, Debug)]
pub enum SearchError {
    #[error(transparent)]
    Budget(#[from] BudgetError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("instance {index}: {source}")]
    Repeats { index: u64, source: RepeatsError },
    #[error("instance {index}: {source}")]
    Oracle { index: u64, source: OracleError },
}

/// An instance attaining the reported maximum, re-checkable via
/// `repeats_to_correct`.
#[derive(Clone, PartialEq, Debug)]
pub struct SearchWitness {
    pub index: u64,
    pub repeats: usize,
    pub instance: GraphInstance,
}

/// An instance that failed to reach the true distances within the cap.
#[derive(Clone, PartialEq, Debug)]
pub struct CapExceededInstance {
    pub index: u64,
    pub instance: GraphInstance,
}

/// Outcome of a repeat-count search over one family and one pass order.
#[derive(Clone, PartialEq, Debug)]
pub struct SearchReport {
    pub family: InstanceFamily,
    pub order: PassOrder,
    pub cap: usize,
    pub instances_examined: u64,
    pub discarded_negative_cycles: u64,
    /// repeat count -> number of instances.
    pub histogram: BTreeMap<usize, u64>,
    /// Highest repeat count seen (0 only when nothing converged).
    pub max_repeats_observed: usize,
    /// Enumeration indices of every instance at the maximum.
    pub witness_indices: Vec<u64>,
    /// Materialized witnesses, a prefix of `witness_indices`.
    pub witnesses: Vec<SearchWitness>,
    /// Instances that blew the cap, reported as theorem violations.
    pub cap_exceeded: Vec<CapExceededInstance>,
}

impl SearchReport {
    /// Whether every observed count respects the theorem bound for the
    /// order, with no instance past the cap.
    pub fn bound_respected(&self) -> bool {
        self.cap_exceeded.is_empty() && self.max_repeats_observed <= self.order.repeat_bound()
    }
}

/// Computes `repeats_to_correct` for every instance of the family and
/// reports the maximum together with all witnesses attaining it.
pub fn find_min_repeats_extremum(
    family: &InstanceFamily,
    order: PassOrder,
    cap: usize,
) -> Result<SearchReport, SearchError> {
    find_min_repeats_extremum_with_limit(family, order, cap, DEFAULT_WITNESS_LIMIT)
}

/// As [`find_min_repeats_extremum`], materializing at most `witness_limit`
/// witness instances.
pub fn find_min_repeats_extremum_with_limit(
    family: &InstanceFamily,
    order: PassOrder,
    cap: usize,
    witness_limit: usize,
) -> Result<SearchReport, SearchError> {
    assert!(cap >= 1, "cap must be at least 1");
    family.check_budget()?;
    let len = family.len();

    // repeat count per index; 0 encodes a blown cap.
    let counts: Vec<(u32, u32)> = (0..len)
        .into_par_iter()
        .map(|idx| -> Result<(u32, u32), SearchError> {
            let (g, discarded) = family.fetch(idx)?;
            let outcome = repeats_to_correct(&g, order, cap)
                .map_err(|source| SearchError::Repeats { index: idx, source })?;
            let count = match outcome {
                RepeatsOutcome::Converged(k) => k as u32,
                RepeatsOutcome::CapExceeded { .. } => 0,
            };
            Ok((count, discarded as u32))
        })
        .collect::<Result<_, _>>()?;

    let mut histogram = BTreeMap::new();
    let mut discarded_total = 0u64;
    let mut max = 0usize;
    for &(count, discarded) in &counts {
        discarded_total += discarded as u64;
        if count > 0 {
            *histogram.entry(count as usize).or_insert(0u64) += 1;
            max = max.max(count as usize);
        }
    }

    let mut witness_indices = Vec::new();
    let mut cap_exceeded = Vec::new();
    for (idx, &(count, _)) in counts.iter().enumerate() {
        if count == 0 {
            let (instance, _) = family.fetch(idx as u64)?;
            cap_exceeded.push(CapExceededInstance { index: idx as u64, instance });
        } else if count as usize == max && max > 0 {
            witness_indices.push(idx as u64);
        }
    }
    let witnesses = witness_indices
        .iter()
        .take(witness_limit)
        .map(|&idx| {
            let (instance, _) = family.fetch(idx)?;
            Ok(SearchWitness { index: idx, repeats: max, instance })
        })
        .collect::<Result<_, SearchError>>()?;

    Ok(SearchReport {
        family: family.clone(),
        order,
        cap,
        instances_examined: len,
        discarded_negative_cycles: discarded_total,
        histogram,
        max_repeats_observed: max,
        witness_indices,
        witnesses,
        cap_exceeded,
    })
}

/// Per-order statistics of a fuzzing run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderStats {
    pub order: PassOrder,
    pub histogram: BTreeMap<usize, u64>,
    pub max_repeats_observed: usize,
}

/// An instance on which some order missed the true distances within its
/// theorem bound. Any violation falsifies the implementation, not the
/// theorems.
#[derive(Clone, PartialEq, Debug)]
pub struct FuzzViolation {
    pub index: u64,
    pub order: PassOrder,
    pub instance: GraphInstance,
}

/// Outcome of a differential fuzzing run over seeded random instances.
#[derive(Clone, PartialEq, Debug)]
pub struct FuzzReport {
    pub params: RandomParams,
    pub count: u64,
    pub seed: u64,
    pub instances_examined: u64,
    pub discarded_negative_cycles: u64,
    /// Stats for KIJ, IJK, IKJ in that order.
    pub per_order: Vec<OrderStats>,
    pub violations: Vec<FuzzViolation>,
}

impl FuzzReport {
    pub fn stats(&self, order: PassOrder) -> &OrderStats {
        self.per_order
            .iter()
            .find(|s| s.order == order)
            .expect("all three orders are always present")
    }
}

/// Checks `KIJ^1 = IJK^3 = IKJ^2 = true distances` on `count` seeded random
/// instances, recording repeat histograms and any violations.
pub fn fuzz_theorems(
    params: &RandomParams,
    count: u64,
    seed: u64,
) -> Result<FuzzReport, SearchError> {
    params.validate()?;
    let family = InstanceFamily::RandomWeighted { params: *params, count, seed };

    // Per instance: discards and the repeat count per order (0 = violation).
    let cells: Vec<(u32, [u32; 3])> = (0..count)
        .into_par_iter()
        .map(|idx| -> Result<(u32, [u32; 3]), SearchError> {
            let (g, discarded) = family.fetch(idx)?;
            let oracle = apsp_bellman_ford(&g)
                .map_err(|source| SearchError::Oracle { index: idx, source })?;
            let init = init_matrix(&g);
            let mut per_order = [0u32; 3];
            for (slot, order) in per_order.iter_mut().zip(PassOrder::ALL) {
                let outcome = repeats_until(&init, &oracle, order, order.repeat_bound())
                    .map_err(|source| SearchError::Repeats {
                        index: idx,
                        source: RepeatsError::Overflow(source),
                    })?;
                *slot = match outcome {
                    RepeatsOutcome::Converged(k) => k as u32,
                    RepeatsOutcome::CapExceeded { .. } => 0,
                };
            }
            Ok((discarded as u32, per_order))
        })
        .collect::<Result<_, _>>()?;

    let mut discarded_total = 0u64;
    let mut per_order: Vec<OrderStats> = PassOrder::ALL
        .iter()
        .map(|&order| OrderStats { order, histogram: BTreeMap::new(), max_repeats_observed: 0 })
        .collect();
    let mut violations = Vec::new();
    for (idx, (discarded, counts)) in cells.iter().enumerate() {
        discarded_total += *discarded as u64;
        for (pos, &count) in counts.iter().enumerate() {
            if count == 0 {
                let (instance, _) = family.fetch(idx as u64)?;
                violations.push(FuzzViolation {
                    index: idx as u64,
                    order: PassOrder::ALL[pos],
                    instance,
                });
            } else {
                let stats = &mut per_order[pos];
                *stats.histogram.entry(count as usize).or_insert(0) += 1;
                stats.max_repeats_observed = stats.max_repeats_observed.max(count as usize);
            }
        }
    }

    Ok(FuzzReport {
        params: *params,
        count,
        seed,
        instances_examined: count,
        discarded_negative_cycles: discarded_total,
        per_order,
        violations,
    })
}
