//! Graphviz output: Hasse diagrams of lattices and the specialization order
//! of a spectrum.

use std::fmt::Write;

use crate::bitset::BitSet;
use crate::document::element_name;
use crate::lattice::FiniteLattice;
use crate::partition::Partition;
use crate::spectrum::SpectrumSpace;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `{x, 1}` using element names when given.
pub fn subset_label(s: BitSet, names: Option<&[String]>) -> String {
    let parts: Vec<String> = s.iter().map(|i| element_name(names, i)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Classes as `{x, 1} {y} {z}`.
pub fn partition_label(p: &Partition, names: Option<&[String]>) -> String {
    p.classes()
        .into_iter()
        .map(|c| subset_label(c, names))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Hasse diagram: one node per element, one edge per cover, bottom first.
pub fn lattice_dot<T>(name: &str, l: &FiniteLattice<T>, label: impl Fn(&T) -> String) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, e) in l.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(&label(e))).unwrap();
    }
    for (i, j) in l.cover_pairs() {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn ideal_lattice_dot(l: &FiniteLattice<BitSet>, names: Option<&[String]>) -> String {
    lattice_dot("ideals", l, |s| subset_label(*s, names))
}

pub fn congruence_lattice_dot(l: &FiniteLattice<Partition>, names: Option<&[String]>) -> String {
    lattice_dot("congruences", l, |p| partition_label(p, names))
}

/// Specialization order of the spectrum: an edge `q -> p` when `p` lies in
/// the closure of `q` and nothing lies strictly between them.
pub fn spectrum_dot(s: &SpectrumSpace, names: Option<&[String]>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph spectrum {{").unwrap();
    let k = s.points.len();
    for (i, &p) in s.points.iter().enumerate() {
        writeln!(
            out,
            "  p{i} [label=\"{}\"];",
            escape(&subset_label(p, names))
        )
        .unwrap();
    }
    let below = |p: usize, q: usize| p != q && s.space.specializes(p, q);
    for q in 0..k {
        for p in 0..k {
            if below(p, q) && !(0..k).any(|r| below(r, q) && below(p, r)) {
                writeln!(out, "  p{q} -> p{p};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::ideal_lattice;
    use crate::spectrum::spectrum;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn chain_has_one_edge() {
        let dot = lattice_dot("chain", &FiniteLattice::chain(2), |s| s.clone());
        assert_eq!(count(&dot, "[label="), 2);
        assert_eq!(count(&dot, "->"), 1);
    }

    #[test]
    fn table1_hasse() {
        let doc = fixtures::table1_document();
        let l = ideal_lattice(&doc.to_table().unwrap()).unwrap();
        let dot = ideal_lattice_dot(&l, doc.names.as_deref());
        assert!(dot.contains("n0 [label=\"{1}\"]"), "{dot}");
        assert!(dot.contains("[label=\"{x, y, z, 1}\"]"), "{dot}");
        assert_eq!(count(&dot, "->"), 2);
    }

    #[test]
    fn empty_spectrum_graph() {
        let s = spectrum(&crate::MagmaTable::trivial()).unwrap();
        assert_eq!(spectrum_dot(&s, None), "digraph spectrum {\n}\n");
    }

    #[test]
    fn table1_spectrum_order() {
        let doc = fixtures::table1_document();
        let s = spectrum(&doc.to_table().unwrap()).unwrap();
        let dot = spectrum_dot(&s, doc.names.as_deref());
        // {1} ⊆ {x,1}: the closed point {x,1} is a specialization of {1}
        assert!(dot.contains("p0 -> p1;"), "{dot}");
    }
}
