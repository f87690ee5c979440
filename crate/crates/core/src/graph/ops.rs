//! Structural operations that derive new graphs from old ones.

use std::collections::VecDeque;

use super::{Color, ColorSet, ColoredGraph, GraphBuilder};
use crate::error::{Error, Result};

impl ColoredGraph {
    /// Component index of every vertex, numbered in order of first vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        self.component_ids_by(self.colors())
    }

    /// Component index of every vertex in the subgraph of edges with colors in `colors`.
    pub fn component_ids_by(&self, colors: ColorSet) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &e in self.incident(v) {
                    let edge = self.edge(e);
                    if !colors.contains(edge.color) {
                        continue;
                    }
                    let u = edge.other(v);
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The subgraph induced on `keep` (vertex ids), keeping edges and legs
    /// whose endpoints all survive. Vertex order follows `keep`.
    pub fn induced(&self, keep: &[usize]) -> ColoredGraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut b = GraphBuilder::new(self.colors());
        for &v in keep {
            let vx = self.vertex(v);
            map[v] = b.add_vertex(vx.label.clone(), vx.parity).expect("labels are unique");
        }
        for e in self.edges() {
            if map[e.white] != usize::MAX && map[e.black] != usize::MAX {
                b.add_edge(e.label.clone(), e.color, map[e.white], map[e.black])
                    .expect("edge data is consistent");
            }
        }
        for l in self.legs() {
            if map[l.vertex] != usize::MAX {
                b.add_leg(l.label.clone(), map[l.vertex]).expect("leg data is consistent");
            }
        }
        b.build()
    }

    /// Maximal connected subgraphs, ordered by their first vertex.
    pub fn connected_components(&self) -> Vec<ColoredGraph> {
        let comp = self.component_ids();
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut members = vec![Vec::new(); count];
        for (v, &k) in comp.iter().enumerate() {
            members[k].push(v);
        }
        members.iter().map(|m| self.induced(m)).collect()
    }

    /// Remove all external legs; fails on closed graphs.
    pub fn amputate(&self) -> Result<ColoredGraph> {
        if self.is_closed() {
            return Err(Error::ClosedInput);
        }
        Ok(self.strip_legs())
    }

    /// Remove all external legs, if any.
    pub fn strip_legs(&self) -> ColoredGraph {
        let mut b = GraphBuilder::new(self.colors());
        for v in self.vertices() {
            b.add_vertex(v.label.clone(), v.parity).expect("labels are unique");
        }
        for e in self.edges() {
            b.add_edge(e.label.clone(), e.color, e.white, e.black).expect("edge data is consistent");
        }
        b.build()
    }

    /// Delete every color-`c` edge (and legs, when `c` is 0). The palette
    /// loses `c`.
    pub fn remove_color(&self, c: Color) -> Result<ColoredGraph> {
        if !self.colors().contains(c) {
            return Err(Error::ColorOutOfRange { color: c, palette: self.colors() });
        }
        let mut b = GraphBuilder::new(self.colors().without(c));
        for v in self.vertices() {
            b.add_vertex(v.label.clone(), v.parity).expect("labels are unique");
        }
        for e in self.edges().iter().filter(|e| e.color != c) {
            b.add_edge(e.label.clone(), e.color, e.white, e.black).expect("edge data is consistent");
        }
        if c != Color(0) {
            for l in self.legs() {
                b.add_leg(l.label.clone(), l.vertex).expect("leg data is consistent");
            }
        }
        Ok(b.build())
    }

    /// Recolor every edge through `f`, giving the result the palette `colors`.
    pub fn map_colors(&self, colors: ColorSet, f: impl Fn(Color) -> Color) -> Result<ColoredGraph> {
        let mut b = GraphBuilder::new(colors);
        for v in self.vertices() {
            b.add_vertex(v.label.clone(), v.parity)?;
        }
        for e in self.edges() {
            b.add_edge(e.label.clone(), f(e.color), e.white, e.black)?;
        }
        for l in self.legs() {
            b.add_leg(l.label.clone(), l.vertex)?;
        }
        Ok(b.build())
    }

    /// Same graph over a larger (or equal) palette.
    pub fn with_palette(&self, colors: ColorSet) -> Result<ColoredGraph> {
        self.map_colors(colors, |c| c)
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> Result<ColoredGraph> {
        let mut b = self.to_builder();
        b.append(other)?;
        Ok(b.build())
    }
}

/// Disjoint union of several graphs over the same palette.
pub fn disjoint_union_all<'a>(colors: ColorSet, parts: impl IntoIterator<Item = &'a ColoredGraph>) -> Result<ColoredGraph> {
    let mut b = GraphBuilder::new(colors);
    for g in parts {
        b.append(g)?;
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Parity;

    fn dipole() -> ColoredGraph {
        let mut b = GraphBuilder::new(ColorSet::closed(3));
        let w = b.add_vertex("w", Parity::White).unwrap();
        let k = b.add_vertex("b", Parity::Black).unwrap();
        for c in 1..=3 {
            b.add_edge(format!("e{c}"), Color(c), w, k).unwrap();
        }
        b.build()
    }

    #[test]
    fn components_of_union() {
        let d = dipole();
        let u = d.with_prefix("x.").disjoint_union(&d.with_prefix("y.")).unwrap();
        let comps = u.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertex(0).label, "y.w");
        assert!(ColoredGraph::empty(ColorSet::closed(3)).connected_components().is_empty());
        assert!(matches!(d.disjoint_union(&d), Err(Error::DuplicateVertex(_))));
    }

    #[test]
    fn remove_color_and_amputate() {
        let d = dipole();
        let r = d.remove_color(Color(3)).unwrap();
        assert_eq!(r.edge_count(), 2);
        assert_eq!(r.colors(), ColorSet::closed(2));
        assert!(r.is_valid());
        assert!(matches!(d.amputate(), Err(Error::ClosedInput)));
    }
}
