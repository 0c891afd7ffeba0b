//! Report rendering: a human-readable summary followed by a line-oriented
//! `key = value` section that diff-based golden tests can pin down.

use std::fmt::Write as _;

use fw_core::PassOrder;

use crate::families::InstanceFamily;
use crate::format::edge_list_inline;
use crate::search::{FuzzReport, SearchReport};

pub const MACHINE_SECTION_MARKER: &str = "--- machine-readable ---";

fn order_token(order: PassOrder) -> &'static str {
    match order {
        PassOrder::Kij => "kij",
        PassOrder::Ijk => "ijk",
        PassOrder::Ikj => "ikj",
    }
}

fn family_lines(out: &mut String, family: &InstanceFamily) {
    let _ = writeln!(out, "family = {}", family.kind());
    let _ = writeln!(out, "n = {}", family.n());
    let _ = writeln!(out, "family_size = {}", family.size());
    if let InstanceFamily::RandomWeighted { params, count, seed } = family {
        let _ = writeln!(out, "density = {}", params.density);
        let _ = writeln!(out, "weight_min = {}", params.weight_min);
        let _ = writeln!(out, "weight_max = {}", params.weight_max);
        let _ = writeln!(out, "count = {count}");
        let _ = writeln!(out, "seed = {seed}");
    }
}

/// Full search report: summary, histogram table, witnesses, machine section.
pub fn search_report_text(r: &SearchReport, witness_limit: usize) -> String {
    let shown = r.witnesses.len().min(witness_limit);
    let mut out = String::new();

    let _ = writeln!(out, "repeat-count search: {} n={}, order {}", r.family.kind(), r.family.n(), r.order);
    let _ = writeln!(out, "  instances examined:  {}", r.instances_examined);
    let _ = writeln!(out, "  discarded (neg cyc): {}", r.discarded_negative_cycles);
    let _ = writeln!(out, "  cap:                 {}", r.cap);
    let _ = writeln!(out, "  max repeats:         {}", r.max_repeats_observed);
    let _ = writeln!(out, "  theorem bound:       {}", r.order.repeat_bound());
    let _ = writeln!(out, "  bound respected:     {}", if r.bound_respected() { "yes" } else { "NO" });
    let _ = writeln!(out);
    let _ = writeln!(out, "  repeats  instances");
    for (repeats, count) in &r.histogram {
        let _ = writeln!(out, "  {repeats:>7}  {count}");
    }
    if !r.cap_exceeded.is_empty() {
        let _ = writeln!(out, "  cap exceeded by {} instance(s)", r.cap_exceeded.len());
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "  witnesses at the maximum: {} (showing {})", r.witness_indices.len(), shown);
    for w in r.witnesses.iter().take(witness_limit) {
        let _ = writeln!(
            out,
            "    index {} repeats {} n={} edges: {}",
            w.index,
            w.repeats,
            w.instance.n(),
            edge_list_inline(&w.instance)
        );
    }
    for c in r.cap_exceeded.iter().take(witness_limit) {
        let _ = writeln!(
            out,
            "    CAP EXCEEDED index {} n={} edges: {}",
            c.index,
            c.instance.n(),
            edge_list_inline(&c.instance)
        );
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "{MACHINE_SECTION_MARKER}");
    let _ = writeln!(out, "schema = fwcheck-search-v1");
    family_lines(&mut out, &r.family);
    let _ = writeln!(out, "order = {}", order_token(r.order));
    let _ = writeln!(out, "cap = {}", r.cap);
    let _ = writeln!(out, "instances_examined = {}", r.instances_examined);
    let _ = writeln!(out, "discarded_negative_cycles = {}", r.discarded_negative_cycles);
    let _ = writeln!(out, "max_repeats = {}", r.max_repeats_observed);
    let _ = writeln!(out, "theorem_bound = {}", r.order.repeat_bound());
    let _ = writeln!(out, "bound_respected = {}", r.bound_respected());
    for (repeats, count) in &r.histogram {
        let _ = writeln!(out, "hist.{repeats} = {count}");
    }
    let _ = writeln!(out, "cap_exceeded_count = {}", r.cap_exceeded.len());
    let _ = writeln!(out, "witness_total = {}", r.witness_indices.len());
    let _ = writeln!(out, "witness_shown = {shown}");
    for (pos, w) in r.witnesses.iter().take(witness_limit).enumerate() {
        let _ = writeln!(out, "witness.{pos}.index = {}", w.index);
        let _ = writeln!(out, "witness.{pos}.repeats = {}", w.repeats);
        let _ = writeln!(out, "witness.{pos}.n = {}", w.instance.n());
        let _ = writeln!(out, "witness.{pos}.edges = {}", edge_list_inline(&w.instance));
    }
    for (pos, c) in r.cap_exceeded.iter().take(witness_limit).enumerate() {
        let _ = writeln!(out, "cap_exceeded.{pos}.index = {}", c.index);
        let _ = writeln!(out, "cap_exceeded.{pos}.n = {}", c.instance.n());
        let _ = writeln!(out, "cap_exceeded.{pos}.edges = {}", edge_list_inline(&c.instance));
    }
    out
}

/// Full fuzz report over the three orders.
pub fn fuzz_report_text(r: &FuzzReport, witness_limit: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theorem fuzz: n={} density={} weights {}..={} count={} seed={}",
        r.params.n, r.params.density, r.params.weight_min, r.params.weight_max, r.count, r.seed
    );
    let _ = writeln!(out, "  instances examined:  {}", r.instances_examined);
    let _ = writeln!(out, "  discarded (neg cyc): {}", r.discarded_negative_cycles);
    let _ = writeln!(out, "  violations:          {}", r.violations.len());
    for stats in &r.per_order {
        let _ = writeln!(
            out,
            "  {}: max repeats {} (bound {})",
            stats.order,
            stats.max_repeats_observed,
            stats.order.repeat_bound()
        );
        for (repeats, count) in &stats.histogram {
            let _ = writeln!(out, "    {repeats} repeat(s): {count}");
        }
    }
    for v in r.violations.iter().take(witness_limit) {
        let _ = writeln!(
            out,
            "  VIOLATION index {} order {} n={} edges: {}",
            v.index,
            v.order,
            v.instance.n(),
            edge_list_inline(&v.instance)
        );
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "{MACHINE_SECTION_MARKER}");
    let _ = writeln!(out, "schema = fwcheck-fuzz-v1");
    let _ = writeln!(out, "n = {}", r.params.n);
    let _ = writeln!(out, "density = {}", r.params.density);
    let _ = writeln!(out, "weight_min = {}", r.params.weight_min);
    let _ = writeln!(out, "weight_max = {}", r.params.weight_max);
    let _ = writeln!(out, "count = {}", r.count);
    let _ = writeln!(out, "seed = {}", r.seed);
    let _ = writeln!(out, "instances_examined = {}", r.instances_examined);
    let _ = writeln!(out, "discarded_negative_cycles = {}", r.discarded_negative_cycles);
    for stats in &r.per_order {
        let tok = order_token(stats.order);
        let _ = writeln!(out, "{tok}.max_repeats = {}", stats.max_repeats_observed);
        let _ = writeln!(out, "{tok}.theorem_bound = {}", stats.order.repeat_bound());
        for (repeats, count) in &stats.histogram {
            let _ = writeln!(out, "{tok}.hist.{repeats} = {count}");
        }
    }
    let _ = writeln!(out, "violation_count = {}", r.violations.len());
    for (pos, v) in r.violations.iter().take(witness_limit).enumerate() {
        let _ = writeln!(out, "violation.{pos}.index = {}", v.index);
        let _ = writeln!(out, "violation.{pos}.order = {}", order_token(v.order));
        let _ = writeln!(out, "violation.{pos}.n = {}", v.instance.n());
        let _ = writeln!(out, "violation.{pos}.edges = {}", edge_list_inline(&v.instance));
    }
    out
}
