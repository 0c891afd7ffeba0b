//! Deliberately naive reference implementations, shared by the integration
//! tests. Nothing here touches the library's own relaxation or search code:
//! matrices are `Option<i128>` grids (None = infinity), loops are literal,
//! and enumeration is exhaustive.

// Each test binary uses its own slice of this module.
#![allow(dead_code)]

use fw_core::{DistMatrix, GraphInstance, PassOrder, Weight};

pub type NaiveMatrix = Vec<Vec<Option<i128>>>;

pub fn to_naive(d: &DistMatrix) -> NaiveMatrix {
    let n = d.n();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match d.get(i, j) {
                    Weight::Finite(w) => Some(w as i128),
                    Weight::Infinity => None,
                })
                .collect()
        })
        .collect()
}

pub fn graph_to_naive(g: &GraphInstance) -> NaiveMatrix {
    let n = g.n();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| g.weight(i, j).finite().map(|w| w as i128))
                .collect()
        })
        .collect()
}

fn add(a: Option<i128>, b: Option<i128>) -> Option<i128> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

fn less(a: Option<i128>, b: Option<i128>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x < y,
        (Some(_), None) => true,
        _ => false,
    }
}

/// One literal triple loop in the given order.
pub fn naive_pass(m: &NaiveMatrix, order: PassOrder) -> (NaiveMatrix, bool) {
    let n = m.len();
    let mut d = m.clone();
    let mut changed = false;
    let step = |d: &mut NaiveMatrix, i: usize, k: usize, j: usize, changed: &mut bool| {
        let cand = add(d[i][k], d[k][j]);
        if less(cand, d[i][j]) {
            d[i][j] = cand;
            *changed = true;
        }
    };
    match order {
        PassOrder::Kij => {
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        step(&mut d, i, k, j, &mut changed);
                    }
                }
            }
        }
        PassOrder::Ijk => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        step(&mut d, i, k, j, &mut changed);
                    }
                }
            }
        }
        PassOrder::Ikj => {
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        step(&mut d, i, k, j, &mut changed);
                    }
                }
            }
        }
    }
    (d, changed)
}

/// Per-source Bellman-Ford with plain lists, the reference oracle.
pub fn naive_bellman_ford(g: &GraphInstance) -> NaiveMatrix {
    let n = g.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if let Some(w) = g.weight(i + 1, j + 1).finite() {
                edges.push((i, j, w as i128));
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist: Vec<Option<i128>> = vec![None; n];
        dist[s] = Some(0);
        for _ in 1..n {
            let mut relaxed = false;
            for &(u, v, w) in &edges {
                let cand = add(dist[u], Some(w));
                if less(cand, dist[v]) {
                    dist[v] = cand;
                    relaxed = true;
                }
            }
            if !relaxed {
                break;
            }
        }
        out.push(dist);
    }
    out
}

/// True iff some simple directed cycle (self-loops included) has negative
/// total weight. Exhaustive: every cycle is rooted at its smallest vertex.
pub fn has_negative_simple_cycle(g: &GraphInstance) -> bool {
    let n = g.n();
    for v in 1..=n {
        if matches!(g.weight(v, v), Weight::Finite(w) if w < 0) {
            return true;
        }
    }
    fn dfs(g: &GraphInstance, root: usize, at: usize, acc: i128, used: &mut Vec<bool>) -> bool {
        let n = g.n();
        if let Some(w) = g.weight(at, root).finite() {
            if at != root && acc + (w as i128) < 0 {
                return true;
            }
        }
        for v in (root + 1)..=n {
            if used[v] {
                continue;
            }
            let Some(w) = g.weight(at, v).finite() else { continue };
            used[v] = true;
            if dfs(g, root, v, acc + w as i128, used) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    for root in 1..=n {
        let mut used = vec![false; n + 1];
        used[root] = true;
        if dfs(g, root, root, 0, &mut used) {
            return true;
        }
    }
    false
}

/// Independent shape predicates, written as index scans like the original
/// hand proofs read.
pub fn brute_is_unimodal(seq: &[usize]) -> bool {
    if seq.len() <= 1 {
        return true;
    }
    let mut h = 0;
    while h + 1 < seq.len() && seq[h] < seq[h + 1] {
        h += 1;
    }
    let mut ok = true;
    for a in h..seq.len() - 1 {
        ok &= seq[a] > seq[a + 1];
    }
    ok
}

pub fn brute_is_increasing_except_last(seq: &[usize]) -> bool {
    for a in 0..seq.len().saturating_sub(2) {
        if seq[a] >= seq[a + 1] {
            return false;
        }
    }
    true
}

fn seq_len(d: &NaiveMatrix, seq: &[usize]) -> Option<i128> {
    let mut total = Some(0);
    for pair in seq.windows(2) {
        total = add(total, d[pair[0] - 1][pair[1] - 1]);
    }
    total
}

/// Exhaustive shaped-shortest-path existence over simple vertex sequences
/// from `s` to `t` (interior vertices distinct, endpoints may coincide).
pub fn brute_shaped_exists(
    d: &NaiveMatrix,
    target: &NaiveMatrix,
    s: usize,
    t: usize,
    pred: fn(&[usize]) -> bool,
) -> bool {
    let n = d.len();
    let goal = target[s - 1][t - 1];
    if s == t && goal == Some(0) {
        return true; // the empty path
    }
    let others: Vec<usize> = (1..=n).filter(|&v| v != s && v != t).collect();
    let mut found = false;
    for k in 0..=others.len() {
        permutations_of(&others, k, &mut |mids| {
            let mut seq = Vec::with_capacity(mids.len() + 2);
            seq.push(s);
            seq.extend_from_slice(mids);
            seq.push(t);
            if seq.len() >= 2 && seq[0] == seq[1] {
                return;
            }
            if seq_len(d, &seq) == goal && pred(&seq) {
                found = true;
            }
        });
        if found {
            return true;
        }
    }
    false
}

/// Calls `f` with every k-permutation of `items`.
fn permutations_of(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for (pos, &v) in items.iter().enumerate() {
            if used[pos] {
                continue;
            }
            used[pos] = true;
            cur.push(v);
            rec(items, k, cur, used, f);
            cur.pop();
            used[pos] = false;
        }
    }
    rec(items, k, &mut Vec::new(), &mut vec![false; items.len()], f);
}

/// The permutation of `1..=n` with the given lexicographic rank (mod n!).
pub fn unrank_permutation(n: usize, rank: u64) -> Vec<usize> {
    let mut factorials = vec![1u64; n.max(1)];
    for i in 1..n {
        factorials[i] = factorials[i - 1] * i as u64;
    }
    let total: u64 = factorials[n - 1] * n as u64;
    let mut rank = rank % total;
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in (0..n).rev() {
        let f = factorials[pos];
        out.push(remaining.remove((rank / f) as usize));
        rank %= f;
    }
    out
}

/// Builds an instance from per-pair weight options (row-major over ordered
/// pairs with i != j); diagonal is 0.
pub fn instance_from_options(n: usize, slots: &[Option<i64>]) -> GraphInstance {
    let mut edges = Vec::new();
    let mut it = slots.iter();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if let Some(Some(w)) = it.next() {
                edges.push((i, j, *w));
            }
        }
    }
    GraphInstance::from_edges(n, &edges).expect("valid construction")
}
