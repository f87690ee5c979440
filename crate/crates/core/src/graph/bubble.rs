//! Bubbles: connected components of the subgraph spanned by a color set.

use super::{ColorSet, ColoredGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bubble {
    pub colors: ColorSet,
    /// Member vertex ids, ascending.
    pub vertices: Vec<usize>,
    /// Member edge ids, ascending.
    pub edges: Vec<usize>,
}

impl Bubble {
    /// Smallest member vertex label; the basis key used by the chain complex.
    pub fn min_label<'a>(&self, g: &'a ColoredGraph) -> &'a str {
        self.vertices
            .iter()
            .map(|&v| g.vertex(v).label.as_str())
            .min()
            .unwrap_or("")
    }

    /// A human-readable name such as `{12}@a`.
    pub fn name(&self, g: &ColoredGraph) -> String {
        format!("{{{}}}@{}", self.colors.digits(), self.min_label(g))
    }

    /// The bubble as a standalone graph over its own color set.
    pub fn to_graph(&self, g: &ColoredGraph) -> ColoredGraph {
        let mut sub = g.induced(&self.vertices).strip_legs();
        for c in g.colors().iter().filter(|c| !self.colors.contains(*c)) {
            sub = sub.remove_color(c).expect("color is in palette");
        }
        sub
    }
}

impl ColoredGraph {
    /// Connected components of the subgraph spanned by edges with colors in
    /// `colors`. With an empty color set every vertex is its own bubble;
    /// otherwise vertices without any such edge are skipped. Bubbles are
    /// ordered by their first vertex.
    pub fn bubbles(&self, colors: ColorSet) -> Result<Vec<Bubble>> {
        if !colors.is_subset(self.colors()) {
            let bad = colors.iter().find(|c| !self.colors().contains(*c)).expect("not a subset");
            return Err(Error::ColorOutOfRange { color: bad, palette: self.colors() });
        }
        let comp = self.component_ids_by(colors);
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut out: Vec<Bubble> = (0..count)
            .map(|_| Bubble { colors, vertices: Vec::new(), edges: Vec::new() })
            .collect();
        for (v, &k) in comp.iter().enumerate() {
            out[k].vertices.push(v);
        }
        for (i, e) in self.edges().iter().enumerate() {
            if colors.contains(e.color) {
                out[comp[e.white]].edges.push(i);
            }
        }
        if !colors.is_empty() {
            out.retain(|b| !b.edges.is_empty());
        }
        Ok(out)
    }

    /// All bubbles with exactly `p` colors, color sets in lexicographic order.
    pub fn p_bubbles(&self, p: usize) -> Vec<Bubble> {
        self.colors()
            .subsets(p)
            .into_iter()
            .flat_map(|s| self.bubbles(s).expect("subset of palette"))
            .collect()
    }

    /// Number of 2-bubbles (faces).
    pub fn face_count(&self) -> usize {
        self.p_bubbles(2).len()
    }
}
