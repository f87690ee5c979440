//! Colored bipartite multigraphs, closed and open.
//!
//! A [`ColoredGraph`] carries a palette of colors, white and black vertices,
//! labeled edges (each joining one white and one black vertex) and external
//! legs. Legs are half-edges in the color-0 slot of an inner vertex; the
//! valence-1 outer vertex at the far end is implicit.
//!
//! Construction only enforces structural facts (unique labels, bipartite
//! endpoints, colors inside the palette). Color regularity is checked by
//! [`ColoredGraph::validate`], because amputation and surgery legitimately
//! produce irregular intermediate graphs.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub mod bubble;
pub mod dot;
pub mod format;
pub mod iso;
pub mod ops;
pub mod validate;

pub use bubble::Bubble;
pub use iso::IsoMode;
pub use validate::{ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(pub u8);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    White,
    Black,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::White => Parity::Black,
            Parity::Black => Parity::White,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Parity::White => "w",
            Parity::Black => "b",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::White => "white",
            Parity::Black => "black",
        })
    }
}

/// A set of colors, at most 16 of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u16);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// Colors `1..=d`: the palette of a closed `d`-colored graph.
    pub fn closed(d: u8) -> ColorSet {
        ColorSet::range(1, d)
    }

    /// Colors `0..=d`: the palette of an open `(d+1)`-colored graph.
    pub fn open(d: u8) -> ColorSet {
        ColorSet::range(0, d)
    }

    pub fn range(lo: u8, hi: u8) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for c in lo..=hi {
            s = s.with(Color(c));
        }
        s
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> ColorSet {
        colors.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c.0 < 16 && self.0 & (1 << c.0) != 0
    }

    pub fn with(self, c: Color) -> ColorSet {
        assert!(c.0 < 16, "color {c} out of range");
        ColorSet(self.0 | (1 << c.0))
    }

    pub fn without(self, c: Color) -> ColorSet {
        if c.0 < 16 {
            ColorSet(self.0 & !(1 << c.0))
        } else {
            self
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| Color(self.0.trailing_zeros() as u8))
    }

    pub fn max(self) -> Option<Color> {
        (self.0 != 0).then(|| Color(15 - self.0.leading_zeros() as u8))
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        (0..16u8).filter(move |c| self.0 & (1 << c) != 0).map(Color)
    }

    /// All subsets of exactly `k` colors, in increasing order of their bitmask
    /// read as a sorted color tuple (lexicographic).
    pub fn subsets(self, k: usize) -> Vec<ColorSet> {
        let colors: Vec<Color> = self.iter().collect();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn rec(colors: &[Color], k: usize, start: usize, pick: &mut Vec<Color>, out: &mut Vec<ColorSet>) {
            if pick.len() == k {
                out.push(ColorSet::from_colors(pick.iter().copied()));
                return;
            }
            for i in start..colors.len() {
                pick.push(colors[i]);
                rec(colors, k, i + 1, pick, out);
                pick.pop();
            }
        }
        rec(&colors, k, 0, &mut pick, &mut out);
        out
    }

    /// `Some(d)` when the set is exactly `1..=d`.
    pub fn as_closed(self) -> Option<u8> {
        let d = self.max()?.0;
        (self == ColorSet::closed(d) && d >= 1).then_some(d)
    }

    /// `Some(d)` when the set is exactly `0..=d`.
    pub fn as_open(self) -> Option<u8> {
        let d = self.max()?.0;
        (self == ColorSet::open(d)).then_some(d)
    }

    /// Compact textual form, e.g. `012`.
    pub fn digits(self) -> String {
        self.iter().map(|c| format!("{}", c.0)).collect()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub color: Color,
    pub white: usize,
    pub black: usize,
}

impl Edge {
    pub fn end(&self, parity: Parity) -> usize {
        match parity {
            Parity::White => self.white,
            Parity::Black => self.black,
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.white {
            self.black
        } else {
            self.white
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub label: String,
    pub vertex: usize,
}

/// An edge-colored bipartite multigraph with optional color-0 legs.
///
/// Values are immutable; every operation returns a new graph.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    colors: ColorSet,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    legs: Vec<Leg>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    leg_index: HashMap<String, usize>,
    incident: Vec<Vec<usize>>,
    legs_at: Vec<Vec<usize>>,
}

impl PartialEq for ColoredGraph {
    /// Structural equality: same palette and identical vertex, edge and leg
    /// lists (labels and order included).
    fn eq(&self, other: &Self) -> bool {
        self.colors == other.colors
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.legs == other.legs
    }
}

impl Eq for ColoredGraph {}

impl ColoredGraph {
    /// The empty graph over a palette.
    pub fn empty(colors: ColorSet) -> ColoredGraph {
        GraphBuilder::new(colors).build()
    }

    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// A graph is closed (vacuum) when it has no external legs.
    pub fn is_closed(&self) -> bool {
        self.legs.is_empty()
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn leg(&self, l: usize) -> &Leg {
        &self.legs[l]
    }

    pub fn vertex_id(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edge_id(&self, label: &str) -> Result<usize> {
        self.edge_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn leg_id(&self, label: &str) -> Result<usize> {
        self.leg_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLeg(label.to_string()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.vertex_index.contains_key(label)
    }

    pub fn has_edge(&self, label: &str) -> bool {
        self.edge_index.contains_key(label)
    }

    pub fn has_leg(&self, label: &str) -> bool {
        self.leg_index.contains_key(label)
    }

    /// Edge ids incident to `v`, in insertion order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// Leg ids attached to `v`.
    pub fn legs_at(&self, v: usize) -> &[usize] {
        &self.legs_at[v]
    }

    /// The (first) edge of color `c` at `v`.
    pub fn edge_at(&self, v: usize, c: Color) -> Option<usize> {
        self.incident[v].iter().copied().find(|&e| self.edges[e].color == c)
    }

    /// The neighbor of `v` along its color-`c` edge.
    pub fn neighbor(&self, v: usize, c: Color) -> Option<usize> {
        self.edge_at(v, c).map(|e| self.edges[e].other(v))
    }

    pub fn leg_at(&self, v: usize) -> Option<usize> {
        self.legs_at[v].first().copied()
    }

    pub fn edges_of_color(&self, c: Color) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&e| self.edges[e].color == c)
    }

    /// Number of vertices of each parity, `(white, black)`.
    pub fn parity_counts(&self) -> (usize, usize) {
        let white = self.vertices.iter().filter(|v| v.parity == Parity::White).count();
        (white, self.vertices.len() - white)
    }

    /// Rebuild the graph with every label prefixed by `prefix`.
    pub fn with_prefix(&self, prefix: &str) -> ColoredGraph {
        self.relabel(|l| format!("{prefix}{l}"), |l| format!("{prefix}{l}"), |l| format!("{prefix}{l}"))
    }

    pub(crate) fn relabel(
        &self,
        vertex: impl Fn(&str) -> String,
        edge: impl Fn(&str) -> String,
        leg: impl Fn(&str) -> String,
    ) -> ColoredGraph {
        let mut b = GraphBuilder::new(self.colors);
        for v in &self.vertices {
            b.add_vertex(vertex(&v.label), v.parity).expect("relabeling keeps labels unique");
        }
        for e in &self.edges {
            b.add_edge(edge(&e.label), e.color, e.white, e.black)
                .expect("relabeling keeps labels unique");
        }
        for l in &self.legs {
            b.add_leg(leg(&l.label), l.vertex).expect("relabeling keeps labels unique");
        }
        b.build()
    }

    /// Start a builder pre-filled with this graph.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            colors: self.colors,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            legs: self.legs.clone(),
            vertex_index: self.vertex_index.clone(),
            edge_index: self.edge_index.clone(),
            leg_index: self.leg_index.clone(),
        }
    }
}

/// Incremental constructor for [`ColoredGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    colors: ColorSet,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    legs: Vec<Leg>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    leg_index: HashMap<String, usize>,
}

impl GraphBuilder {
    pub fn new(colors: ColorSet) -> GraphBuilder {
        GraphBuilder {
            colors,
            vertices: Vec::new(),
            edges: Vec::new(),
            legs: Vec::new(),
            vertex_index: HashMap::new(),
            edge_index: HashMap::new(),
            leg_index: HashMap::new(),
        }
    }

    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertex_parity(&self, v: usize) -> Parity {
        self.vertices[v].parity
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, parity: Parity) -> Result<usize> {
        let label = label.into();
        if self.vertex_index.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        let id = self.vertices.len();
        self.vertex_index.insert(label.clone(), id);
        self.vertices.push(Vertex { label, parity });
        Ok(id)
    }

    /// Add an edge between two vertex ids given in either order.
    pub fn add_edge(&mut self, label: impl Into<String>, color: Color, a: usize, b: usize) -> Result<usize> {
        let label = label.into();
        if self.edge_index.contains_key(&label) {
            return Err(Error::DuplicateEdge(label));
        }
        if !self.colors.contains(color) {
            return Err(Error::ColorOutOfRange { color, palette: self.colors });
        }
        let n = self.vertices.len();
        if a >= n || b >= n {
            return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
        }
        let (pa, pb) = (self.vertices[a].parity, self.vertices[b].parity);
        if pa == pb {
            return Err(Error::SameParity { label, parity: pa });
        }
        let (white, black) = if pa == Parity::White { (a, b) } else { (b, a) };
        let id = self.edges.len();
        self.edge_index.insert(label.clone(), id);
        self.edges.push(Edge { label, color, white, black });
        Ok(id)
    }

    pub fn add_edge_by_label(&mut self, label: impl Into<String>, color: Color, a: &str, b: &str) -> Result<usize> {
        let a = self.vertex_id(a)?;
        let b = self.vertex_id(b)?;
        self.add_edge(label, color, a, b)
    }

    pub fn add_leg(&mut self, label: impl Into<String>, vertex: usize) -> Result<usize> {
        let label = label.into();
        if self.leg_index.contains_key(&label) {
            return Err(Error::DuplicateLeg(label));
        }
        if vertex >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{vertex}")));
        }
        if !self.colors.contains(Color(0)) {
            return Err(Error::ColorOutOfRange { color: Color(0), palette: self.colors });
        }
        let id = self.legs.len();
        self.leg_index.insert(label.clone(), id);
        self.legs.push(Leg { label, vertex });
        Ok(id)
    }

    pub fn add_leg_by_label(&mut self, label: impl Into<String>, vertex: &str) -> Result<usize> {
        let v = self.vertex_id(vertex)?;
        self.add_leg(label, v)
    }

    /// Append a whole graph (same palette). Returns the vertex-id offset.
    pub fn append(&mut self, g: &ColoredGraph) -> Result<usize> {
        if g.colors != self.colors {
            return Err(Error::PaletteMismatch(self.colors, g.colors));
        }
        let offset = self.vertices.len();
        for v in &g.vertices {
            self.add_vertex(v.label.clone(), v.parity)?;
        }
        for e in &g.edges {
            self.add_edge(e.label.clone(), e.color, e.white + offset, e.black + offset)?;
        }
        for l in &g.legs {
            self.add_leg(l.label.clone(), l.vertex + offset)?;
        }
        Ok(offset)
    }

    pub fn build(self) -> ColoredGraph {
        let n = self.vertices.len();
        let mut incident = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.white].push(i);
            incident[e.black].push(i);
        }
        let mut legs_at = vec![Vec::new(); n];
        for (i, l) in self.legs.iter().enumerate() {
            legs_at[l.vertex].push(i);
        }
        ColoredGraph {
            colors: self.colors,
            vertices: self.vertices,
            edges: self.edges,
            legs: self.legs,
            vertex_index: self.vertex_index,
            edge_index: self.edge_index,
            leg_index: self.leg_index,
            incident,
            legs_at,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_set_basics() {
        let s = ColorSet::open(3);
        assert_eq!(s.len(), 4);
        assert_eq!(s.min(), Some(Color(0)));
        assert_eq!(s.max(), Some(Color(3)));
        assert_eq!(s.as_open(), Some(3));
        assert_eq!(s.as_closed(), None);
        assert_eq!(s.without(Color(0)).as_closed(), Some(3));
        assert_eq!(s.subsets(2).len(), 6);
        assert_eq!(s.subsets(0), vec![ColorSet::EMPTY]);
        assert_eq!(s.subsets(2)[0].digits(), "01");
        assert_eq!(s.to_string(), "{0,1,2,3}");
    }

    #[test]
    fn builder_rejects_structural_errors() {
        let mut b = GraphBuilder::new(ColorSet::closed(2));
        let w = b.add_vertex("w", Parity::White).unwrap();
        let w2 = b.add_vertex("w2", Parity::White).unwrap();
        let k = b.add_vertex("k", Parity::Black).unwrap();
        assert!(matches!(b.add_vertex("w", Parity::Black), Err(Error::DuplicateVertex(_))));
        assert!(matches!(b.add_edge("e", Color(1), w, w2), Err(Error::SameParity { .. })));
        assert!(matches!(b.add_edge("e", Color(3), w, k), Err(Error::ColorOutOfRange { .. })));
        b.add_edge("e", Color(1), k, w).unwrap();
        assert!(matches!(b.add_edge("e", Color(2), k, w), Err(Error::DuplicateEdge(_))));
        assert!(matches!(b.add_leg("l", w), Err(Error::ColorOutOfRange { .. })));
        let g = b.build();
        assert_eq!(g.edge(0).white, w);
        assert_eq!(g.edge(0).black, k);
        assert_eq!(g.neighbor(w, Color(1)), Some(k));
        assert_eq!(g.neighbor(w, Color(2)), None);
    }
}
