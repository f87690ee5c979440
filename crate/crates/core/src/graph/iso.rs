//! Isomorphism of colored graphs.
//!
//! In a graph with at most one edge of each color per vertex, an
//! isomorphism of a connected component is determined by the image of a
//! single vertex: following colored edges from a root visits every vertex
//! in an order that depends only on the root. Each component therefore has
//! a canonical code, the minimum over roots of its breadth-first encoding,
//! and two graphs are isomorphic iff their component codes agree as
//! multisets. Every isomorphism found is verified edge by edge before it is
//! returned, so vertices with repeated colors can only cause a missed
//! match, never a wrong one.

use itertools::Itertools;

use super::{Color, ColoredGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsoMode {
    /// Colors must be preserved exactly.
    ExactColors,
    /// Colors may be renamed by one global bijection.
    UpToColorPermutation,
}

/// A witness that two graphs are isomorphic; indices map ids of the first
/// graph to ids of the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub legs: Vec<usize>,
    /// Color bijection, as pairs in increasing order of the first color.
    pub colors: Vec<(Color, Color)>,
}

impl Isomorphism {
    pub fn is_identity(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &j)| i == j)
            && self.edges.iter().enumerate().all(|(i, &j)| i == j)
            && self.colors.iter().all(|(a, b)| a == b)
    }
}

/// Isomorphism-invariant key (exact colors). Equal keys mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    palette: u16,
    components: Vec<Vec<u32>>,
}

const NEW: u32 = u32::MAX;

/// Breadth-first encoding from `root`, visiting colors in `order`.
fn encode(g: &ColoredGraph, order: &[Color], root: usize) -> (Vec<u32>, Vec<usize>) {
    let mut index = vec![usize::MAX; g.vertex_count()];
    let mut visit = vec![root];
    index[root] = 0;
    let mut code = Vec::new();
    let mut head = 0;
    while head < visit.len() {
        let v = visit[head];
        head += 1;
        code.push(g.vertex(v).parity as u32);
        code.push(g.legs_at(v).len() as u32);
        for &c in order {
            let start = code.len();
            code.push(0);
            for &e in g.incident(v) {
                let edge = g.edge(e);
                if edge.color != c {
                    continue;
                }
                code[start] += 1;
                let u = edge.other(v);
                if index[u] == usize::MAX {
                    index[u] = visit.len();
                    visit.push(u);
                    code.push(NEW);
                } else {
                    code.push(index[u] as u32);
                }
            }
        }
    }
    (code, visit)
}

struct Component {
    code: Vec<u32>,
    visit: Vec<usize>,
}

fn canonical_components(g: &ColoredGraph, order: &[Color]) -> Vec<Component> {
    let comp = g.component_ids();
    let count = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); count];
    for (v, &k) in comp.iter().enumerate() {
        members[k].push(v);
    }
    members
        .iter()
        .map(|m| {
            m.iter()
                .map(|&r| encode(g, order, r))
                .min_by(|a, b| a.0.cmp(&b.0))
                .map(|(code, visit)| Component { code, visit })
                .expect("components are non-empty")
        })
        .collect()
}

pub fn canonical_form(g: &ColoredGraph) -> CanonicalForm {
    let order: Vec<Color> = g.colors().iter().collect();
    let mut components: Vec<Vec<u32>> = canonical_components(g, &order).into_iter().map(|c| c.code).collect();
    components.sort();
    CanonicalForm { palette: g.colors().bits(), components }
}

fn match_with_order(a: &ColoredGraph, order_a: &[Color], b: &ColoredGraph, order_b: &[Color]) -> Option<Isomorphism> {
    let ca = canonical_components(a, order_a);
    let cb = canonical_components(b, order_b);
    if ca.len() != cb.len() {
        return None;
    }
    let mut used = vec![false; cb.len()];
    let mut vmap = vec![usize::MAX; a.vertex_count()];
    for x in &ca {
        let j = (0..cb.len()).find(|&j| !used[j] && cb[j].code == x.code)?;
        used[j] = true;
        for (&u, &v) in x.visit.iter().zip(&cb[j].visit) {
            vmap[u] = v;
        }
    }
    let color_of = |c: Color| order_a.iter().position(|&x| x == c).map(|i| order_b[i]);
    let mut edge_used = vec![false; b.edge_count()];
    let mut emap = Vec::with_capacity(a.edge_count());
    for e in a.edges() {
        let target = color_of(e.color)?;
        let (w, k) = (vmap[e.white], vmap[e.black]);
        let f = b.incident(w).iter().copied().find(|&f| {
            let fe = b.edge(f);
            !edge_used[f] && fe.color == target && fe.white == w && fe.black == k
        })?;
        edge_used[f] = true;
        emap.push(f);
    }
    let mut leg_used = vec![false; b.legs().len()];
    let mut lmap = Vec::with_capacity(a.legs().len());
    for l in a.legs() {
        let m = b.legs_at(vmap[l.vertex]).iter().copied().find(|&m| !leg_used[m])?;
        leg_used[m] = true;
        lmap.push(m);
    }
    if a.vertices().iter().zip(&vmap).any(|(v, &m)| b.vertex(m).parity != v.parity) {
        return None;
    }
    let mut colors: Vec<(Color, Color)> = order_a.iter().copied().zip(order_b.iter().copied()).collect();
    colors.sort();
    Some(Isomorphism { vertices: vmap, edges: emap, legs: lmap, colors })
}

/// Find an isomorphism from `a` to `b` preserving parity and colors
/// (exactly, or up to one global color bijection).
pub fn find_isomorphism(a: &ColoredGraph, b: &ColoredGraph, mode: IsoMode) -> Option<Isomorphism> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.legs().len() != b.legs().len()
        || a.colors().len() != b.colors().len()
        || a.parity_counts() != b.parity_counts()
    {
        return None;
    }
    let order_a: Vec<Color> = a.colors().iter().collect();
    match mode {
        IsoMode::ExactColors => {
            if a.colors() != b.colors() {
                return None;
            }
            match_with_order(a, &order_a, b, &order_a)
        }
        IsoMode::UpToColorPermutation => {
            // Legs are color-0 half-edges, so color 0 stays fixed when present.
            let has_legs = !a.legs().is_empty();
            let colors_b: Vec<Color> = b.colors().iter().collect();
            colors_b
                .iter()
                .copied()
                .permutations(colors_b.len())
                .filter(|order_b| {
                    !has_legs || order_a.iter().zip(order_b).all(|(&x, &y)| (x == Color(0)) == (y == Color(0)))
                })
                .find_map(|order_b| match_with_order(a, &order_a, b, &order_b))
        }
    }
}

pub fn is_isomorphic(a: &ColoredGraph, b: &ColoredGraph, mode: IsoMode) -> bool {
    find_isomorphism(a, b, mode).is_some()
}

impl ColoredGraph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &ColoredGraph, mode: IsoMode) -> bool {
        is_isomorphic(self, other, mode)
    }
}
