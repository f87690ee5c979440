//! Vacuum graphs by Wick contraction of interaction vertices.

use std::collections::HashSet;

use itertools::Itertools;

use super::ModelSpec;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, GraphBuilder, Parity};

/// Largest number of white tensor vertices contracted (8! matchings).
pub const MAX_WHITE: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep one graph per exact-colors isomorphism class.
    pub dedup: bool,
    /// Drop disconnected graphs.
    pub connected_only: bool,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Number of contractions before filtering and deduplication.
    pub raw_count: usize,
    pub graphs: Vec<ColoredGraph>,
}

/// All closed graphs from `k` interaction vertices (a multiset of the
/// model's vertices) and every white-to-black color-0 matching. Vertex
/// copies are prefixed `v1.`, `v2.`, ...; color-0 edges are `z1`, `z2`, ...
/// numbered by white vertex. Output order: vertex multisets in
/// lexicographic order, then matchings in lexicographic order.
pub fn enumerate_vacuum(m: &ModelSpec, k: usize, opts: EnumerateOptions) -> Result<Enumeration> {
    if k == 0 {
        return Err(Error::Parameters("need at least one interaction vertex".into()));
    }
    let mut raw_count = 0;
    let mut graphs = Vec::new();
    let mut seen = HashSet::new();
    for choice in (0..m.upsilon.len()).combinations_with_replacement(k) {
        let mut base = GraphBuilder::new(m.graph_colors());
        for (slot, &i) in choice.iter().enumerate() {
            let v = m.upsilon[i].with_palette(m.graph_colors())?.with_prefix(&format!("v{}.", slot + 1));
            base.append(&v)?;
        }
        let base = base.build();
        let whites: Vec<usize> = (0..base.vertex_count()).filter(|&v| base.vertex(v).parity == Parity::White).collect();
        let blacks: Vec<usize> = (0..base.vertex_count()).filter(|&v| base.vertex(v).parity == Parity::Black).collect();
        if whites.len() != blacks.len() {
            return Err(Error::Parameters("interaction vertices are unbalanced".into()));
        }
        if whites.len() > MAX_WHITE {
            return Err(Error::TooLarge(format!(
                "{} white tensor vertices exceed the cap of {MAX_WHITE}",
                whites.len()
            )));
        }
        for perm in (0..blacks.len()).permutations(blacks.len()) {
            raw_count += 1;
            let mut b = base.to_builder();
            for (j, (&w, &bi)) in whites.iter().zip(&perm).enumerate() {
                b.add_edge(format!("z{}", j + 1), Color(0), w, blacks[bi])?;
            }
            let g = b.build();
            if opts.connected_only && !g.is_connected() {
                continue;
            }
            if opts.dedup && !seen.insert(g.canonical_form()) {
                continue;
            }
            graphs.push(g);
        }
    }
    Ok(Enumeration { raw_count, graphs })
}
