//! Greedy witness shrinking: smaller instances make better bug reports.

use fw_core::{repeats_to_correct, GraphInstance, PassOrder, RepeatsOutcome};

/// Repeat count used for shrinking comparisons; a blown cap ranks above
/// every converged count.
fn count(g: &GraphInstance, order: PassOrder, cap: usize) -> usize {
    match repeats_to_correct(g, order, cap) {
        Ok(RepeatsOutcome::Converged(k)) => k,
        Ok(RepeatsOutcome::CapExceeded { .. }) => usize::MAX,
        // A candidate deletion that somehow breaks validity is just not taken.
        Err(_) => 0,
    }
}

/// Greedily deletes off-diagonal edges and removes (renumbering) vertices
/// while the repeat count stays at least `repeats`. The result is locally
/// minimal: no single remaining deletion preserves the count.
///
/// `g` itself must need at least `repeats` passes under `order`, with cap
/// `cap` treated as "more than cap".
pub fn minimize_witness(
    g: &GraphInstance,
    order: PassOrder,
    repeats: usize,
    cap: usize,
) -> GraphInstance {
    assert!(
        count(g, order, cap) >= repeats,
        "instance does not reach the requested repeat count"
    );
    let mut cur = g.clone();
    loop {
        let mut shrunk = false;

        // Edge deletions in lexicographic pair order. The edge list is a
        // snapshot, so skip pairs a previous acceptance already erased.
        loop {
            let mut deleted = false;
            for (i, j, _) in cur.finite_edges() {
                if i == j || !cur.weight(i, j).is_finite() {
                    continue;
                }
                let cand = cur.without_edge(i, j);
                if count(&cand, order, cap) >= repeats {
                    cur = cand;
                    deleted = true;
                    shrunk = true;
                }
            }
            if !deleted {
                break;
            }
        }

        // Vertex removals, smallest label first.
        let mut v = 1;
        while v <= cur.n() && cur.n() >= 2 {
            let cand = cur.without_vertex(v);
            if count(&cand, order, cap) >= repeats {
                cur = cand;
                shrunk = true;
            } else {
                v += 1;
            }
        }

        if !shrunk {
            return cur;
        }
    }
}
