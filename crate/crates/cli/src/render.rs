//! Plain-text rendering for `--pretty`.

use lalg_core::document::element_name;
use lalg_core::dot::{partition_label, subset_label};
use lalg_core::{BitSet, MagmaTable, Partition, VerdictReport};
use serde_json::Value;

pub fn set(s: BitSet, names: Option<&[String]>) -> String {
    subset_label(s, names)
}

pub fn partition(p: &Partition, names: Option<&[String]>) -> String {
    partition_label(p, names)
}

/// Cayley table with row and column headers.
pub fn cayley(m: &MagmaTable, names: Option<&[String]>) -> String {
    let label = |i: usize| element_name(names, i);
    let width = m
        .elements()
        .map(|i| label(i).chars().count())
        .max()
        .unwrap_or(1);
    let cell = |s: String| format!("{s:>width$}");
    let mut out = String::new();
    out.push_str(&cell("·".into()));
    out.push_str(" |");
    for j in m.elements() {
        out.push(' ');
        out.push_str(&cell(label(j)));
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 2 + m.size() * (width + 1)));
    out.push('\n');
    for i in m.elements() {
        out.push_str(&cell(label(i)));
        out.push_str(" |");
        for j in m.elements() {
            out.push(' ');
            out.push_str(&cell(label(m.op(i, j))));
        }
        out.push('\n');
    }
    out.push_str(&format!("unit: {}\n", label(m.unit())));
    out
}

pub fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn report(r: &VerdictReport) -> String {
    let mut out = format!("{}: {}\n", r.command, r.algebra);
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("  [{mark}] {}\n", c.name));
        if !c.passed {
            for w in &c.witnesses {
                out.push_str(&format!("         witness: {}\n", inline(w)));
            }
        }
    }
    let failed = r.failed().count();
    out.push_str(&format!(
        "{} of {} checks passed ({} ms)\n",
        r.checks.len() - failed,
        r.checks.len(),
        r.timing_ms
    ));
    out
}
