//! Ribbon graphs: half-edges with a cyclic order at each vertex and a
//! fixed-point-free involution pairing them into edges.
//!
//! Boundary components are the cycles of the face permutation
//! `h ↦ succ(j(h))`, where `succ` is the cyclic successor at a vertex.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Parity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonVertex {
    pub label: String,
    /// Half-edge ids in cyclic order.
    pub half_edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonStructure {
    vertices: Vec<RibbonVertex>,
    half_labels: Vec<String>,
    vertex_of: Vec<usize>,
    position: Vec<usize>,
    involution: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    /// Number of boundary components.
    pub bc: usize,
    /// `vertices - edges + bc`.
    pub euler: i64,
    /// Total genus, summed over connected components.
    pub genus: i64,
}

/// Cell counts of the cell complex built from the ribbon sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellCounts {
    pub zero: usize,
    pub one: usize,
    pub two: usize,
}

impl RibbonStructure {
    /// Build from cyclic orders (vertex label, half-edge labels) and
    /// involution pairs of half-edge labels.
    pub fn new(cyclic: &[(String, Vec<String>)], pairs: &[(String, String)]) -> Result<RibbonStructure> {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut half_labels = Vec::new();
        let mut vertex_of = Vec::new();
        let mut position = Vec::new();
        let mut vertices = Vec::new();
        for (vi, (label, hs)) in cyclic.iter().enumerate() {
            if hs.len() < 2 {
                return Err(Error::Ribbon(format!("vertex `{label}` has valence {} < 2", hs.len())));
            }
            if vertices.iter().any(|v: &RibbonVertex| &v.label == label) {
                return Err(Error::DuplicateVertex(label.clone()));
            }
            let mut ids = Vec::with_capacity(hs.len());
            for (pos, h) in hs.iter().enumerate() {
                if index.contains_key(h) {
                    return Err(Error::Ribbon(format!("half-edge `{h}` listed twice")));
                }
                let id = half_labels.len();
                index.insert(h.clone(), id);
                half_labels.push(h.clone());
                vertex_of.push(vi);
                position.push(pos);
                ids.push(id);
            }
            vertices.push(RibbonVertex { label: label.clone(), half_edges: ids });
        }
        let mut involution = vec![usize::MAX; half_labels.len()];
        for (a, b) in pairs {
            let ia = *index.get(a).ok_or_else(|| Error::Ribbon(format!("unknown half-edge `{a}`")))?;
            let ib = *index.get(b).ok_or_else(|| Error::Ribbon(format!("unknown half-edge `{b}`")))?;
            if ia == ib {
                return Err(Error::Ribbon(format!("half-edge `{a}` paired with itself")));
            }
            if involution[ia] != usize::MAX || involution[ib] != usize::MAX {
                return Err(Error::Ribbon(format!("half-edge pair `{a}`/`{b}` reuses a half-edge")));
            }
            involution[ia] = ib;
            involution[ib] = ia;
        }
        if let Some(h) = involution.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Ribbon(format!("half-edge `{}` is unpaired", half_labels[h])));
        }
        Ok(RibbonStructure { vertices, half_labels, vertex_of, position, involution })
    }

    /// The ribbon structure of a closed 3-colored graph: half-edges
    /// `(v, c)`, cyclic order ascending in color at white vertices and
    /// descending at black vertices.
    pub fn from_colored(g: &ColoredGraph) -> Result<RibbonStructure> {
        if !g.is_closed() {
            return Err(Error::OpenInput(g.legs().len()));
        }
        let colors: Vec<Color> = g.colors().iter().collect();
        if colors.len() != 3 {
            return Err(Error::ColorCount { expected: 3, found: colors.len() });
        }
        let report = g.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let half = |v: usize, c: Color| format!("{}.{}", g.vertex(v).label, c);
        let cyclic: Vec<(String, Vec<String>)> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, vx)| {
                let mut order = colors.clone();
                if vx.parity == Parity::Black {
                    order.reverse();
                }
                (vx.label.clone(), order.into_iter().map(|c| half(v, c)).collect())
            })
            .collect();
        let pairs: Vec<(String, String)> = g
            .edges()
            .iter()
            .map(|e| (half(e.white, e.color), half(e.black, e.color)))
            .collect();
        RibbonStructure::new(&cyclic, &pairs)
    }

    /// Parse `rv <label> <h1> .. <hk>` and `rj <h> <h'>` lines.
    pub fn parse(text: &str) -> Result<RibbonStructure> {
        let mut cyclic = Vec::new();
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            let t: Vec<&str> = content.split_whitespace().collect();
            let syntax = |m: String| Error::Syntax { line: idx + 1, message: m };
            match t.first() {
                None => {}
                Some(&"rv") if t.len() >= 2 => {
                    cyclic.push((t[1].to_string(), t[2..].iter().map(|s| s.to_string()).collect()));
                }
                Some(&"rj") if t.len() == 3 => pairs.push((t[1].to_string(), t[2].to_string())),
                Some(other) => return Err(syntax(format!("unexpected ribbon line `{other}`"))),
            }
        }
        RibbonStructure::new(&cyclic, &pairs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let hs: Vec<&str> = v.half_edges.iter().map(|&h| self.half_labels[h].as_str()).collect();
            out.push_str(&format!("rv {} {}\n", v.label, hs.join(" ")));
        }
        for (h, &k) in self.involution.iter().enumerate() {
            if h < k {
                out.push_str(&format!("rj {} {}\n", self.half_labels[h], self.half_labels[k]));
            }
        }
        out
    }

    pub fn vertices(&self) -> &[RibbonVertex] {
        &self.vertices
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.half_labels.len() / 2
    }

    pub fn involution(&self, h: usize) -> usize {
        self.involution[h]
    }

    /// Cyclic successor of `h` at its vertex.
    pub fn successor(&self, h: usize) -> usize {
        let hs = &self.vertices[self.vertex_of[h]].half_edges;
        hs[(self.position[h] + 1) % hs.len()]
    }

    /// Face permutation `h ↦ succ(j(h))`.
    pub fn face_step(&self, h: usize) -> usize {
        self.successor(self.involution[h])
    }

    /// Orbits of the face permutation, each starting at its smallest half-edge.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.half_labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                orbit.push(h);
                h = self.face_step(h);
            }
            out.push(orbit);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (h, &k) in self.involution.iter().enumerate() {
            let a = find(&mut parent, self.vertex_of[h]);
            let b = find(&mut parent, self.vertex_of[k]);
            parent[a] = b;
        }
        (0..n).filter(|&v| find(&mut parent, v) == v).count()
    }

    pub fn boundary_report(&self) -> BoundaryReport {
        let vertices = self.vertices.len();
        let edges = self.edge_count();
        let bc = self.faces().len();
        let components = self.component_count();
        let euler = vertices as i64 - edges as i64 + bc as i64;
        BoundaryReport { vertices, edges, components, bc, euler, genus: (2 * components as i64 - euler) / 2 }
    }

    /// Cell counts of the complex glued from ribbon sides.
    pub fn cell_counts(&self) -> CellCounts {
        let sum_valence = self.half_labels.len();
        let e = self.edge_count();
        CellCounts {
            zero: 2 * sum_valence,
            one: 2 * sum_valence + 2 * e,
            two: self.vertices.len() + e + self.faces().len(),
        }
    }
}

/// Boundary report of the ribbon structure of a closed 3-colored graph.
pub fn boundary_components(r: &RibbonStructure) -> BoundaryReport {
    r.boundary_report()
}

/// Genus of a closed 3-colored graph through its ribbon structure.
pub fn ribbon_genus(g: &ColoredGraph) -> Result<i64> {
    Ok(RibbonStructure::from_colored(g)?.boundary_report().genus)
}

/// Compare the homology Euler characteristic with `V - E + bc` for a
/// closed connected 3-colored graph.
pub fn euler_agreement(g: &ColoredGraph) -> Result<bool> {
    let ribbon = RibbonStructure::from_colored(g)?.boundary_report().euler;
    let homology = crate::homology::euler_characteristic(g)?;
    Ok(ribbon == homology)
}

/// Named abstract ribbon graphs: `w` (one vertex, crossed loops, genus 1),
/// `q` (one vertex, parallel loops, genus 0) and `r` (two trivalent
/// vertices with equal orientation, one boundary component, genus 1).
pub fn named_example(name: &str) -> Option<RibbonStructure> {
    let text = match name {
        "w" => "rv v h1 h2 h3 h4\nrj h1 h3\nrj h2 h4\n",
        "q" => "rv v h1 h2 h3 h4\nrj h1 h2\nrj h3 h4\n",
        "r" => "rv u a1 a2 a3\nrv v b1 b2 b3\nrj a1 b1\nrj a2 b2\nrj a3 b3\n",
        _ => return None,
    };
    Some(RibbonStructure::parse(text).expect("fixed ribbon text"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_vertex(pairs: &[(&str, &str)]) -> RibbonStructure {
        let cyclic = vec![("v".to_string(), ["h1", "h2", "h3", "h4"].iter().map(|s| s.to_string()).collect())];
        let pairs: Vec<(String, String)> = pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        RibbonStructure::new(&cyclic, &pairs).unwrap()
    }

    #[test]
    fn crossed_loops_have_genus_one() {
        let w = one_vertex(&[("h1", "h3"), ("h2", "h4")]);
        let r = w.boundary_report();
        assert_eq!((r.bc, r.euler, r.genus), (1, 0, 1));
    }

    #[test]
    fn parallel_loops_are_planar() {
        let q = one_vertex(&[("h1", "h2"), ("h3", "h4")]);
        let r = q.boundary_report();
        assert_eq!((r.bc, r.euler, r.genus), (3, 2, 0));
    }

    #[test]
    fn named_examples() {
        let genus = |n: &str| named_example(n).unwrap().boundary_report();
        assert_eq!((genus("w").bc, genus("w").genus), (1, 1));
        assert_eq!((genus("q").bc, genus("q").genus), (3, 0));
        assert_eq!((genus("r").bc, genus("r").genus), (1, 1));
        assert!(named_example("x").is_none());
    }

    #[test]
    fn rejects_bad_involutions() {
        let cyclic = vec![("v".to_string(), vec!["a".to_string(), "b".to_string()])];
        assert!(RibbonStructure::new(&cyclic, &[]).is_err());
        assert!(RibbonStructure::new(&cyclic, &[("a".into(), "a".into())]).is_err());
        let leaf = vec![("v".to_string(), vec!["a".to_string()])];
        assert!(RibbonStructure::new(&leaf, &[]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "rv u a1 a2 a3\nrv v b1 b2 b3\nrj a1 b1\nrj a2 b2\nrj a3 b3\n";
        let r = RibbonStructure::parse(text).unwrap();
        assert_eq!(r.to_text(), text);
        assert_eq!(r.boundary_report().bc, 1);
        assert_eq!(r.cell_counts(), CellCounts { zero: 12, one: 18, two: 6 });
    }
}
