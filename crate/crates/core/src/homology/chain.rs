//! The bubble chain complex.

use std::cmp::Ordering;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{Bubble, ColorSet, ColoredGraph};

/// Chain groups `C_0 .. C_{n-1}` for a graph with `n` colors, spanned by
/// bubbles, and the boundary matrices between them.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    bases: Vec<Vec<Bubble>>,
    names: Vec<Vec<String>>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Number of degrees, `p = 0 .. top()`.
    pub fn degrees(&self) -> usize {
        self.bases.len()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.bases.get(p).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, p: usize) -> &[Bubble] {
        &self.bases[p]
    }

    /// Basis element names: vertex labels in degree 0, edge labels in
    /// degree 1, `{colors}@min-vertex` above.
    pub fn names(&self, p: usize) -> &[String] {
        &self.names[p]
    }

    /// `∂_p : C_p → C_{p-1}` for `1 <= p < degrees()`.
    pub fn boundary(&self, p: usize) -> &IntMatrix {
        assert!(p >= 1 && p < self.degrees(), "no boundary matrix in degree {p}");
        &self.boundaries[p - 1]
    }
}

fn color_key(s: ColorSet) -> Vec<u8> {
    s.iter().map(|c| c.0).collect()
}

fn basis_order(g: &ColoredGraph, a: &Bubble, b: &Bubble) -> Ordering {
    color_key(a.colors)
        .cmp(&color_key(b.colors))
        .then_with(|| a.min_label(g).cmp(b.min_label(g)))
        .then_with(|| {
            let la = a.edges.iter().map(|&e| g.edge(e).label.as_str()).min();
            let lb = b.edges.iter().map(|&e| g.edge(e).label.as_str()).min();
            la.cmp(&lb)
        })
}

/// Build the chain complex of a closed, color-regular graph. Bases are
/// ordered by (sorted color tuple, smallest member vertex label).
pub fn chain_complex(g: &ColoredGraph) -> Result<ChainComplex> {
    if !g.is_closed() {
        return Err(Error::OpenInput(g.legs().len()));
    }
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let n = g.colors().len();
    let mut bases = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    for p in 0..n {
        let mut basis = g.p_bubbles(p);
        basis.sort_by(|a, b| basis_order(g, a, b));
        let nm = basis
            .iter()
            .map(|b| match p {
                0 => g.vertex(b.vertices[0]).label.clone(),
                1 => g.edge(b.edges[0]).label.clone(),
                _ => b.name(g),
            })
            .collect();
        bases.push(basis);
        names.push(nm);
    }
    let mut boundaries = Vec::with_capacity(n.saturating_sub(1));
    for p in 1..n {
        let lower = &bases[p - 1];
        let upper = &bases[p];
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        if p == 1 {
            let mut row_of = vec![0; g.vertex_count()];
            for (i, b) in lower.iter().enumerate() {
                row_of[b.vertices[0]] = i;
            }
            for (j, b) in upper.iter().enumerate() {
                for &e in &b.edges {
                    let edge = g.edge(e);
                    m.add_to(row_of[edge.white], j, 1);
                    m.add_to(row_of[edge.black], j, -1);
                }
            }
        } else {
            // Index of the lower bubble containing each vertex, per color set.
            let mut lookup: Vec<(ColorSet, Vec<usize>)> = Vec::new();
            for (i, b) in lower.iter().enumerate() {
                let slot = match lookup.iter().position(|(s, _)| *s == b.colors) {
                    Some(k) => k,
                    None => {
                        lookup.push((b.colors, vec![usize::MAX; g.vertex_count()]));
                        lookup.len() - 1
                    }
                };
                for &v in &b.vertices {
                    lookup[slot].1[v] = i;
                }
            }
            for (j, b) in upper.iter().enumerate() {
                for (q, c) in b.colors.iter().enumerate() {
                    let sign = if q % 2 == 0 { 1 } else { -1 };
                    let sub = b.colors.without(c);
                    let table = &lookup.iter().find(|(s, _)| *s == sub).expect("sub-bubbles exist").1;
                    let mut seen: Vec<usize> = b.vertices.iter().map(|&v| table[v]).collect();
                    seen.sort_unstable();
                    seen.dedup();
                    for i in seen {
                        m.add_to(i, j, sign);
                    }
                }
            }
        }
        boundaries.push(m);
    }
    Ok(ChainComplex { bases, names, boundaries })
}

