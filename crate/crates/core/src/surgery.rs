//! Graph surgery: connected sums, edge opening and capping, cones,
//! boundary graphs and the separator predicate.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Color, ColorSet, ColoredGraph, GraphBuilder, IsoMode, Parity};

fn labels(g: &ColoredGraph) -> HashSet<&str> {
    g.vertices()
        .iter()
        .map(|v| v.label.as_str())
        .chain(g.edges().iter().map(|e| e.label.as_str()))
        .chain(g.legs().iter().map(|l| l.label.as_str()))
        .collect()
}

fn collide(a: &ColoredGraph, b: &ColoredGraph, extra: &[String]) -> bool {
    let la = labels(a);
    let lb = labels(b);
    if la.iter().any(|l| lb.contains(l)) {
        return true;
    }
    let mut fresh = HashSet::new();
    extra
        .iter()
        .any(|x| la.contains(x.as_str()) || lb.contains(x.as_str()) || !fresh.insert(x.as_str()))
}

/// Connected sum along edges `e` of `a` and `f` of `b` of equal color:
/// both are removed and replaced by `e' = (white(e), black(f))` and
/// `f' = (white(f), black(e))`, labeled `<e>'` and `<f>'`. When labels of
/// the summands collide they are prefixed with `a.` and `b.`.
pub fn connected_sum(a: &ColoredGraph, e: &str, b: &ColoredGraph, f: &str) -> Result<ColoredGraph> {
    if a.colors() != b.colors() {
        return Err(Error::PaletteMismatch(a.colors(), b.colors()));
    }
    let ei = a.edge_id(e)?;
    let fi = b.edge_id(f)?;
    if a.edge(ei).color != b.edge(fi).color {
        return Err(Error::EdgeColorMismatch(e.to_string(), f.to_string()));
    }
    let primes = [format!("{e}'"), format!("{f}'")];
    if collide(a, b, &primes) {
        let pa = a.with_prefix("a.");
        let pb = b.with_prefix("b.");
        return connected_sum(&pa, &format!("a.{e}"), &pb, &format!("b.{f}"));
    }
    let color = a.edge(ei).color;
    let mut out = GraphBuilder::new(a.colors());
    for v in a.vertices().iter().chain(b.vertices()) {
        out.add_vertex(v.label.clone(), v.parity)?;
    }
    let off = a.vertex_count();
    let (ea, fb) = (a.edge(ei), b.edge(fi));
    for (i, x) in a.edges().iter().enumerate() {
        if i == ei {
            out.add_edge(primes[0].clone(), color, ea.white, fb.black + off)?;
        } else {
            out.add_edge(x.label.clone(), x.color, x.white, x.black)?;
        }
    }
    for (i, x) in b.edges().iter().enumerate() {
        if i == fi {
            out.add_edge(primes[1].clone(), color, fb.white + off, ea.black)?;
        } else {
            out.add_edge(x.label.clone(), x.color, x.white + off, x.black + off)?;
        }
    }
    for l in a.legs() {
        out.add_leg(l.label.clone(), l.vertex)?;
    }
    for l in b.legs() {
        out.add_leg(l.label.clone(), l.vertex + off)?;
    }
    Ok(out.build())
}

/// Crystallization sum: delete white `p` of `a` and black `q` of `b`, then
/// for each color join the former neighbors of `q` (white) to those of `p`
/// (black). New edges are labeled `<edge at p>*<edge at q>`.
pub fn crys_sum(a: &ColoredGraph, p: &str, b: &ColoredGraph, q: &str) -> Result<ColoredGraph> {
    if a.colors() != b.colors() {
        return Err(Error::PaletteMismatch(a.colors(), b.colors()));
    }
    if !a.is_closed() {
        return Err(Error::OpenInput(a.legs().len()));
    }
    if !b.is_closed() {
        return Err(Error::OpenInput(b.legs().len()));
    }
    for g in [a, b] {
        let report = g.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
    }
    let pi = a.vertex_id(p)?;
    let qi = b.vertex_id(q)?;
    if a.vertex(pi).parity != Parity::White {
        return Err(Error::VertexParity(p.to_string()));
    }
    if b.vertex(qi).parity != Parity::Black {
        return Err(Error::VertexParity(q.to_string()));
    }
    let new_labels: Vec<String> = a
        .colors()
        .iter()
        .map(|c| {
            let ep = a.edge_at(pi, c).expect("regular");
            let eq = b.edge_at(qi, c).expect("regular");
            format!("{}*{}", a.edge(ep).label, b.edge(eq).label)
        })
        .collect();
    if collide(a, b, &new_labels) {
        return crys_sum(&a.with_prefix("a."), &format!("a.{p}"), &b.with_prefix("b."), &format!("b.{q}"));
    }
    let mut out = GraphBuilder::new(a.colors());
    let mut map_a = vec![usize::MAX; a.vertex_count()];
    let mut map_b = vec![usize::MAX; b.vertex_count()];
    for (i, v) in a.vertices().iter().enumerate() {
        if i != pi {
            map_a[i] = out.add_vertex(v.label.clone(), v.parity)?;
        }
    }
    for (i, v) in b.vertices().iter().enumerate() {
        if i != qi {
            map_b[i] = out.add_vertex(v.label.clone(), v.parity)?;
        }
    }
    for e in a.edges().iter().filter(|e| e.white != pi) {
        out.add_edge(e.label.clone(), e.color, map_a[e.white], map_a[e.black])?;
    }
    for e in b.edges().iter().filter(|e| e.black != qi) {
        out.add_edge(e.label.clone(), e.color, map_b[e.white], map_b[e.black])?;
    }
    for (label, c) in new_labels.into_iter().zip(a.colors().iter()) {
        let black = a.neighbor(pi, c).expect("regular");
        let white = b.neighbor(qi, c).expect("regular");
        out.add_edge(label, c, map_b[white], map_a[black])?;
    }
    Ok(out.build())
}

/// Replace the internal color-0 edge `e` by legs `<e>.w` and `<e>.b` at
/// its former endpoints.
pub fn open_edge(g: &ColoredGraph, e: &str) -> Result<ColoredGraph> {
    let ei = g.edge_id(e)?;
    let edge = g.edge(ei);
    if edge.color != Color(0) {
        return Err(Error::NotColorZero(e.to_string()));
    }
    let mut out = GraphBuilder::new(g.colors());
    for v in g.vertices() {
        out.add_vertex(v.label.clone(), v.parity)?;
    }
    for (i, x) in g.edges().iter().enumerate() {
        if i != ei {
            out.add_edge(x.label.clone(), x.color, x.white, x.black)?;
        }
    }
    for l in g.legs() {
        out.add_leg(l.label.clone(), l.vertex)?;
    }
    out.add_leg(format!("{e}.w"), edge.white)?;
    out.add_leg(format!("{e}.b"), edge.black)?;
    Ok(out.build())
}

/// Replace legs `l1`, `l2` (on vertices of opposite parity) by one color-0
/// edge. Legs `X.w` and `X.b` close to an edge labeled `X`; other pairs
/// give `<l1>~<l2>`.
pub fn close_legs(g: &ColoredGraph, l1: &str, l2: &str) -> Result<ColoredGraph> {
    let i1 = g.leg_id(l1)?;
    let i2 = g.leg_id(l2)?;
    let (v1, v2) = (g.leg(i1).vertex, g.leg(i2).vertex);
    if g.vertex(v1).parity == g.vertex(v2).parity {
        return Err(Error::LegParity(l1.to_string(), l2.to_string()));
    }
    let stem = |l: &str, suffix: &str| l.strip_suffix(suffix).map(str::to_string);
    let label = match (stem(l1, ".w").or(stem(l1, ".b")), stem(l2, ".w").or(stem(l2, ".b"))) {
        (Some(a), Some(b)) if a == b && l1 != l2 && !g.has_edge(&a) => a,
        _ => format!("{l1}~{l2}"),
    };
    let mut out = GraphBuilder::new(g.colors());
    for v in g.vertices() {
        out.add_vertex(v.label.clone(), v.parity)?;
    }
    for x in g.edges() {
        out.add_edge(x.label.clone(), x.color, x.white, x.black)?;
    }
    for (i, l) in g.legs().iter().enumerate() {
        if i != i1 && i != i2 {
            out.add_leg(l.label.clone(), l.vertex)?;
        }
    }
    out.add_edge(label, Color(0), v1, v2)?;
    Ok(out.build())
}

/// Close every leg named `X.w` with its partner `X.b`.
pub fn close_all_opened(g: &ColoredGraph) -> Result<ColoredGraph> {
    let mut out = g.clone();
    for l in g.legs() {
        if let Some(stem) = l.label.strip_suffix(".w") {
            let partner = format!("{stem}.b");
            if out.has_leg(&partner) {
                out = close_legs(&out, &l.label, &partner)?;
            }
        }
    }
    Ok(out)
}

/// The cone: the graph itself plus one color-0 leg per vertex, labeled by
/// the vertex label. A palette `0..D-1` is first shifted to `1..D`.
pub fn cone(b: &ColoredGraph) -> Result<ColoredGraph> {
    if !b.is_closed() {
        return Err(Error::OpenInput(b.legs().len()));
    }
    let colors = b.colors();
    let base = if colors.as_closed().is_some() {
        b.clone()
    } else if let Some(d) = colors.as_open() {
        b.map_colors(ColorSet::closed(d + 1), |c| Color(c.0 + 1))?
    } else {
        return Err(Error::UnsupportedPalette(colors));
    };
    let d = base.colors().max().expect("non-empty palette").0;
    let mut out = GraphBuilder::new(ColorSet::open(d));
    out.append(&base.with_palette(ColorSet::open(d))?)?;
    for (i, v) in base.vertices().iter().enumerate() {
        out.add_leg(v.label.clone(), i)?;
    }
    Ok(out.build())
}

/// Boundary graph: one vertex per leg (parity of the legged vertex) and,
/// for each color `c > 0`, an edge `b<c>_<white leg>` along every
/// alternating (0,c)-path between legs. Closed input gives the empty graph.
pub fn boundary_graph(g: &ColoredGraph) -> Result<ColoredGraph> {
    let colors = g.colors();
    if !colors.contains(Color(0)) {
        return Err(Error::ColorOutOfRange { color: Color(0), palette: colors });
    }
    let out_colors = colors.without(Color(0));
    let mut out = GraphBuilder::new(out_colors);
    for l in g.legs() {
        out.add_vertex(l.label.clone(), g.vertex(l.vertex).parity)?;
    }
    let limit = 2 * g.vertex_count() + 2;
    for c in out_colors.iter() {
        for (li, l) in g.legs().iter().enumerate() {
            if g.vertex(l.vertex).parity != Parity::White {
                continue;
            }
            let broken = |v: usize| Error::BrokenPath { leg: l.label.clone(), color: c, vertex: g.vertex(v).label.clone() };
            let mut v = l.vertex;
            let mut steps = 0;
            let end = loop {
                let u = g.neighbor(v, c).ok_or_else(|| broken(v))?;
                if let Some(&lj) = g.legs_at(u).first() {
                    break lj;
                }
                v = g.neighbor(u, Color(0)).ok_or_else(|| broken(u))?;
                steps += 1;
                if steps > limit {
                    return Err(broken(v));
                }
            };
            out.add_edge(format!("b{c}_{}", l.label), c, li, end)?;
        }
    }
    let b = out.build();
    let report = b.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    Ok(b)
}

/// Internal color-0 edges, in edge order.
pub fn internal_zero_edges(g: &ColoredGraph) -> Vec<String> {
    g.edges_of_color(Color(0)).map(|e| g.edge(e).label.clone()).collect()
}

/// How exhaustively [`separator_check`] tries edge choices in the probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeChoices {
    /// Only the first internal color-0 edge of each probe graph.
    First,
    /// Every pair of internal color-0 edges.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorFailure {
    pub probe: usize,
    pub g_edge: String,
    pub h_edge: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorOutcome {
    pub failure: Option<SeparatorFailure>,
    /// Number of (probe, g, h) combinations evaluated.
    pub checked: usize,
}

impl SeparatorOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `G #_{g,k} P #_{l,h} H` with summands prefixed `G.`, `P.` and `H.`.
pub fn sandwich(gg: &ColoredGraph, g_edge: &str, p: &ColoredGraph, k: &str, l: &str, hh: &ColoredGraph, h_edge: &str) -> Result<ColoredGraph> {
    let left = connected_sum(&gg.with_prefix("G."), &format!("G.{g_edge}"), &p.with_prefix("P."), &format!("P.{k}"))?;
    connected_sum(&left, &format!("P.{l}"), &hh.with_prefix("H."), &format!("H.{h_edge}"))
}

/// Check `∂(G # P # H) ≅ ∂G ⊔ ∂H` (exact colors) for every probe pair and
/// every choice of internal color-0 edges `g`, `h`. Probes without internal
/// color-0 edges impose no condition.
pub fn separator_check(p: &ColoredGraph, k: &str, l: &str, probes: &[(ColoredGraph, ColoredGraph)], choices: EdgeChoices) -> Result<SeparatorOutcome> {
    for e in [k, l] {
        if p.edge(p.edge_id(e)?).color != Color(0) {
            return Err(Error::NotColorZero(e.to_string()));
        }
    }
    if k == l {
        return Err(Error::Parameters("separator edges must differ".into()));
    }
    let mut checked = 0;
    for (i, (gg, hh)) in probes.iter().enumerate() {
        let expected = boundary_graph(gg)?.disjoint_union(&boundary_graph(hh)?.with_prefix("'"))?;
        let mut ge = internal_zero_edges(gg);
        let mut he = internal_zero_edges(hh);
        if choices == EdgeChoices::First {
            ge.truncate(1);
            he.truncate(1);
        }
        for g_edge in &ge {
            for h_edge in &he {
                checked += 1;
                let y = sandwich(gg, g_edge, p, k, l, hh, h_edge)?;
                let by = boundary_graph(&y)?;
                if !by.is_isomorphic(&expected, IsoMode::ExactColors) {
                    let failure = SeparatorFailure { probe: i, g_edge: g_edge.clone(), h_edge: h_edge.clone() };
                    return Ok(SeparatorOutcome { failure: Some(failure), checked });
                }
            }
        }
    }
    Ok(SeparatorOutcome { failure: None, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::format::{parse, to_sorted_text};

    fn dipole3() -> ColoredGraph {
        parse("colors 3 closed\nv w w\nv b b\ne e1 1 w b\ne e2 2 w b\ne e3 3 w b\n").unwrap()
    }

    #[test]
    fn sum_of_dipoles() {
        let d = dipole3();
        let s = connected_sum(&d, "e1", &d, "e1").unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert!(s.has_edge("a.e1'") && s.has_edge("b.e1'"));
        assert!(s.is_valid());
        assert!(s.is_connected());
        assert!(matches!(connected_sum(&d, "e1", &d, "e2"), Err(Error::EdgeColorMismatch(..))));
    }

    #[test]
    fn crys_sum_of_dipoles_is_a_dipole() {
        let d = dipole3();
        let s = crys_sum(&d, "w", &d, "b").unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert!(s.is_valid());
        assert!(s.is_isomorphic(&d, IsoMode::ExactColors));
        assert!(matches!(crys_sum(&d, "b", &d, "b"), Err(Error::VertexParity(_))));
    }

    #[test]
    fn open_then_close() {
        let g = parse("colors 1 open\nv w w\nv b b\ne x 0 w b\ne y 1 w b\n").unwrap();
        let o = open_edge(&g, "x").unwrap();
        assert_eq!(o.legs().len(), 2);
        assert!(o.is_valid());
        let c = close_legs(&o, "x.w", "x.b").unwrap();
        assert_eq!(to_sorted_text(&c).unwrap(), to_sorted_text(&g).unwrap());
        assert!(matches!(open_edge(&g, "y"), Err(Error::NotColorZero(_))));
        let two = open_edge(&g, "x").unwrap();
        assert!(matches!(close_legs(&two, "x.w", "x.w"), Err(Error::LegParity(..))));
    }

    #[test]
    fn cone_boundary_of_dipole() {
        let d = dipole3();
        let c = cone(&d).unwrap();
        assert_eq!(c.legs().len(), 2);
        assert!(c.is_valid());
        assert_eq!(c.amputate().unwrap().remove_color(Color(0)).unwrap().edge_count(), 3);
        let b = boundary_graph(&c).unwrap();
        assert!(b.is_isomorphic(&d, IsoMode::ExactColors));
        assert!(boundary_graph(&d.with_palette(ColorSet::open(3)).unwrap()).unwrap().is_empty());
    }
}
