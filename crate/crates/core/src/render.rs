//! DOT output for heaps and cylindric heaps.

use std::fmt::Write;

use crate::coxeter::CoxeterSystem;
use crate::cylindric::{CylindricHeap, EdgeKind};
use crate::heap::Heap;

fn nodes(out: &mut String, sys: &CoxeterSystem, labels: &[u8]) {
    for (i, &s) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{i}:{}\"];", sys.name(s));
    }
}

/// Hasse diagram of `h`, drawn bottom to top.
pub fn heap_dot(sys: &CoxeterSystem, h: &Heap) -> String {
    let mut out = String::from("digraph heap {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    nodes(&mut out, sys, h.labels());
    for (i, j) in h.hasse_covers() {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// Cylindric heap with base edges solid and wrap edges dashed.
pub fn cylindric_dot(sys: &CoxeterSystem, ch: &CylindricHeap) -> String {
    let mut out = String::from("digraph cylindric {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    nodes(&mut out, sys, ch.base().labels());
    for e in ch.edges() {
        let style = match e.kind {
            EdgeKind::Base => "",
            EdgeKind::Wrap => " [style=dashed]",
        };
        let _ = writeln!(out, "  n{} -> n{}{style};", e.from, e.to);
    }
    out.push_str("}\n");
    out
}
