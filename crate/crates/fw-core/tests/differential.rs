//! Differential tests: every fast path in the library is checked against a
//! naive reference implementation on randomized instances. If they disagree,
//! the naive side wins.

mod common;

use common::*;
use fw_core::{
    apsp_bellman_ford, apsp_brute_force, init_matrix, relax_pass, run_repeated,
    validate_no_negative_cycle, GraphInstance, PassOrder,
};
use proptest::prelude::*;

/// Per-pair edge options for a graph on `n` vertices: present with the given
/// probability, weights drawn from `range`.
fn slots(n: usize, present: f64, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Vec<Option<i64>>> {
    prop::collection::vec(prop::option::weighted(present, range), n * (n - 1))
}

fn any_instance(max_n: usize, wmin: i64, wmax: i64) -> impl Strategy<Value = GraphInstance> {
    (1..=max_n).prop_flat_map(move |n| {
        slots(n, 0.5, wmin..=wmax).prop_map(move |s| instance_from_options(n, &s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Each loop order, one pass: implementation matches the literal loops.
    #[test]
    fn relax_pass_matches_naive(g in any_instance(6, -4, 12)) {
        let init = init_matrix(&g);
        let naive_init = graph_to_naive(&g);
        for order in PassOrder::ALL {
            let (fast, fast_changed) = relax_pass(&init, order).unwrap();
            let (slow, slow_changed) = naive_pass(&naive_init, order);
            prop_assert_eq!(to_naive(&fast), slow, "order {}", order);
            prop_assert_eq!(fast_changed, slow_changed, "changed flag, order {}", order);
        }
    }

    /// Repeated runs snapshot exactly the iterated naive passes.
    #[test]
    fn run_repeated_matches_iterated_naive(g in any_instance(5, -3, 9), repeats in 1usize..4) {
        let init = init_matrix(&g);
        for order in PassOrder::ALL {
            let trace = run_repeated(&init, order, repeats).unwrap();
            let mut cur = graph_to_naive(&g);
            for pass in 0..repeats {
                let (next, changed) = naive_pass(&cur, order);
                cur = next;
                prop_assert_eq!(to_naive(&trace.snapshots[pass]), cur.clone());
                prop_assert_eq!(trace.changed[pass], changed);
            }
        }
    }

    /// The relaxation oracle agrees with a from-scratch Bellman-Ford.
    #[test]
    fn oracle_matches_naive_bellman_ford(g in any_instance(6, -3, 9)) {
        prop_assume!(validate_no_negative_cycle(&g).is_ok());
        let fast = apsp_bellman_ford(&g).unwrap();
        prop_assert_eq!(to_naive(&fast), naive_bellman_ford(&g));
    }

    /// The two independent oracles agree wherever brute force is allowed.
    #[test]
    fn oracles_cross_check(g in any_instance(5, -3, 9)) {
        prop_assume!(validate_no_negative_cycle(&g).is_ok());
        prop_assert_eq!(apsp_bellman_ford(&g).unwrap(), apsp_brute_force(&g).unwrap());
    }

    /// Validation agrees with exhaustive enumeration of simple cycles, on
    /// both accepting and rejecting instances.
    #[test]
    fn validation_matches_cycle_enumeration(g in any_instance(5, -8, 6)) {
        let verdict = validate_no_negative_cycle(&g);
        prop_assert_eq!(verdict.is_err(), has_negative_simple_cycle(&g));
        if let Err(cycle) = verdict {
            // The witness re-checks: closed, and genuinely negative under w.
            let vs = &cycle.vertices;
            prop_assert!(vs.len() >= 2);
            prop_assert_eq!(vs[0], vs[vs.len() - 1]);
            let mut total: i128 = 0;
            for pair in vs.windows(2) {
                let w = g.weight(pair[0], pair[1]).finite().expect("witness edge must exist");
                total += w as i128;
            }
            prop_assert_eq!(total, cycle.total);
            prop_assert!(total < 0);
        }
    }

    /// Permuting labels permutes the oracle matrix correspondingly.
    #[test]
    fn oracle_relabeling_equivariance(g in any_instance(5, -3, 9), rank in 0u64..120) {
        prop_assume!(validate_no_negative_cycle(&g).is_ok());
        let n = g.n();
        let perm = unrank_permutation(n, rank);
        let relabel = |v: usize| perm[v - 1];
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if let fw_core::Weight::Finite(w) = g.weight(i, j) {
                    if i != j || w != 0 {
                        edges.push((relabel(i), relabel(j), w));
                    }
                }
            }
        }
        let h = GraphInstance::from_edges(n, &edges).unwrap();
        let dg = apsp_bellman_ford(&g).unwrap();
        let dh = apsp_bellman_ford(&h).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                prop_assert_eq!(dg.get(i, j), dh.get(relabel(i), relabel(j)));
            }
        }
    }

    /// Triangle inequality of the oracle distances.
    #[test]
    fn oracle_triangle_inequality(g in any_instance(6, -3, 9)) {
        prop_assume!(validate_no_negative_cycle(&g).is_ok());
        let d = apsp_bellman_ford(&g).unwrap();
        let n = g.n();
        for i in 1..=n {
            for k in 1..=n {
                for j in 1..=n {
                    let via = fw_core::weight_add(d.get(i, k), d.get(k, j)).unwrap();
                    prop_assert!(d.get(i, j) <= via, "({i},{k},{j})");
                }
            }
        }
    }

    /// Addition is commutative and associative away from overflow.
    #[test]
    fn weight_add_laws(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        use fw_core::{weight_add, Weight};
        let (wa, wb, wc) = (Weight::Finite(a), Weight::Finite(b), Weight::Finite(c));
        prop_assert_eq!(weight_add(wa, wb), weight_add(wb, wa));
        let left = weight_add(weight_add(wa, wb).unwrap(), wc).unwrap();
        let right = weight_add(wa, weight_add(wb, wc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(weight_add(Weight::Infinity, wa), Ok(Weight::Infinity));
        prop_assert_eq!(weight_add(wa, Weight::Infinity), Ok(Weight::Infinity));
    }
}
