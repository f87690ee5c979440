//! Graphviz export.

use std::fmt::Write as _;

use super::{ColoredGraph, Parity};

const PALETTE: [&str; 8] = ["gray40", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Deterministic DOT text: white/black fill for parity, one edge per
/// colored edge with a `color` attribute, legs as edges to leaf nodes.
pub fn export_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, label=\"\"];\n");
    for v in g.vertices() {
        let (fill, font) = match v.parity {
            Parity::White => ("white", "black"),
            Parity::Black => ("black", "white"),
        };
        writeln!(out, "  {} [fillcolor={fill}, fontcolor={font}, xlabel={}];", quote(&v.label), quote(&v.label))
            .expect("writing to a String");
    }
    for e in g.edges() {
        let c = e.color.0 as usize;
        writeln!(
            out,
            "  {} -- {} [label={}, color={}, colorid={c}];",
            quote(&g.vertex(e.white).label),
            quote(&g.vertex(e.black).label),
            quote(&e.label),
            PALETTE[c % PALETTE.len()],
        )
        .expect("writing to a String");
    }
    for l in g.legs() {
        let leaf = format!("leg:{}", l.label);
        writeln!(out, "  {} [shape=point, style=solid];", quote(&leaf)).expect("writing to a String");
        writeln!(
            out,
            "  {} -- {} [label={}, style=dashed, color={}, colorid=0];",
            quote(&g.vertex(l.vertex).label),
            quote(&leaf),
            quote(&l.label),
            PALETTE[0],
        )
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
