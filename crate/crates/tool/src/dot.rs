//! Graphviz export of a reachable state space, plus the one-line state
//! summaries shared with trace printing.

use std::fmt::Write as _;

use insider_core::{InfraGraph, KripkeModel, Model};

/// `cabin: Alice | cockpit: Bob, Charly | door=norm`, followed by any
/// credentials that differ from `reference`.
pub fn state_summary(m: &Model, g: &InfraGraph, reference: &InfraGraph) -> String {
    let mut parts = Vec::new();
    for l in m.location_ids() {
        let who = g.placement(l);
        if !who.is_empty() {
            let names: Vec<&str> = who.iter().map(|i| m.identity_name(*i)).collect();
            parts.push(format!("{}: {}", m.location_name(l), names.join(", ")));
        }
    }
    for l in m.location_ids() {
        if let Some(v) = g.value(l) {
            parts.push(format!("{}={v}", m.location_name(l)));
        }
    }
    for i in m.identity_ids() {
        if g.credentials(i) != reference.credentials(i) {
            let creds: Vec<&str> = g.credentials(i).iter().map(String::as_str).collect();
            parts.push(format!("{} has {{{}}}", m.identity_name(i), creds.join(", ")));
        }
    }
    parts.join(" | ")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One node per state (`s<index>`, initial states drawn with a double
/// border) and one edge per transition label. Output is deterministic.
pub fn write_dot(k: &KripkeModel, m: &Model) -> String {
    let mut o = String::from("digraph states {\n  node [shape=box];\n");
    for i in 0..k.len() {
        let label = format!(
            "s{i}\\n{}",
            escape(&state_summary(m, k.graph(i), &m.initial)).replace(" | ", "\\n")
        );
        let extra = if k.init().contains(&i) { ", peripheries=2" } else { "" };
        writeln!(o, "  s{i} [label=\"{label}\"{extra}];").unwrap();
    }
    for (from, label, to) in k.edge_list() {
        writeln!(o, "  s{from} -> s{to} [label=\"{}\"];", escape(&label.describe(m))).unwrap();
    }
    o.push_str("}\n");
    o
}
