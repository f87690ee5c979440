//! Tensor-model vertex sets, Feynman-graph membership, Wick-contraction
//! enumeration and the named graph families.

pub mod enumerate;
pub mod families;
pub mod gadgets;
pub mod separators;

use crate::error::{Error, Result};
use crate::graph::{Color, ColorSet, ColoredGraph, GraphBuilder, IsoMode, Parity};

pub use enumerate::{enumerate_vacuum, Enumeration, EnumerateOptions};
pub use families::{build, Family};
pub use separators::{find_separators, Separator, SeparatorSearch};

/// A rank-`d` model: closed `d`-colored interaction vertices over colors `1..=d`.
#[derive(Clone, Debug)]
pub struct ModelSpec {
    pub name: String,
    pub d: u8,
    pub upsilon: Vec<ColoredGraph>,
}

impl ModelSpec {
    pub fn new(name: impl Into<String>, d: u8, upsilon: Vec<ColoredGraph>) -> Result<ModelSpec> {
        let name = name.into();
        for v in &upsilon {
            if v.colors() != ColorSet::closed(d) {
                return Err(Error::PaletteMismatch(ColorSet::closed(d), v.colors()));
            }
            if !v.is_closed() {
                return Err(Error::OpenInput(v.legs().len()));
            }
            let report = v.validate();
            if !report.is_valid() {
                return Err(Error::Invalid(report));
            }
            if !v.is_connected() {
                return Err(Error::Parameters(format!("interaction vertex of `{name}` is disconnected")));
            }
        }
        Ok(ModelSpec { name, d, upsilon })
    }

    /// Palette of the model's Feynman graphs, `0..=d`.
    pub fn graph_colors(&self) -> ColorSet {
        ColorSet::open(self.d)
    }
}

/// The rank-3 quartic vertex in which color `transmitted` joins the two
/// halves: `W1-B1` and `W2-B2` carry the other two colors, `W1-B2` and
/// `W2-B1` carry the transmitted one.
pub fn quartic_vertex(transmitted: u8) -> ColoredGraph {
    assert!((1..=3).contains(&transmitted), "transmitted color must be 1, 2 or 3");
    let mut b = GraphBuilder::new(ColorSet::closed(3));
    let w1 = b.add_vertex("W1", Parity::White).expect("fresh label");
    let b1 = b.add_vertex("B1", Parity::Black).expect("fresh label");
    let w2 = b.add_vertex("W2", Parity::White).expect("fresh label");
    let b2 = b.add_vertex("B2", Parity::Black).expect("fresh label");
    for c in (1..=3).filter(|&c| c != transmitted) {
        b.add_edge(format!("a{c}"), Color(c), w1, b1).expect("valid edge");
        b.add_edge(format!("c{c}"), Color(c), w2, b2).expect("valid edge");
    }
    b.add_edge(format!("x{transmitted}"), Color(transmitted), w1, b2).expect("valid edge");
    b.add_edge(format!("y{transmitted}"), Color(transmitted), w2, b1).expect("valid edge");
    b.build()
}

/// A `2p`-cycle with edge colors alternating 1, 2.
pub fn cycle_vertex(p: usize) -> ColoredGraph {
    assert!(p >= 1);
    let mut b = GraphBuilder::new(ColorSet::closed(2));
    let n = 2 * p;
    let ids: Vec<usize> = (0..n)
        .map(|i| {
            let parity = if i % 2 == 0 { Parity::White } else { Parity::Black };
            b.add_vertex(format!("u{i}"), parity).expect("fresh label")
        })
        .collect();
    for i in 0..n {
        let color = if i % 2 == 0 { 1 } else { 2 };
        b.add_edge(format!("s{i}"), Color(color), ids[i], ids[(i + 1) % n]).expect("valid edge");
    }
    b.build()
}

/// Built-in models: `phi4-matrix`, `phi4-rank3` and `matrix-2p(<p>)`.
pub fn builtin_model(name: &str) -> Result<ModelSpec> {
    match name {
        "phi4-matrix" => ModelSpec::new(name, 2, vec![cycle_vertex(2)]),
        "phi4-rank3" => ModelSpec::new(name, 3, (1..=3).map(quartic_vertex).collect()),
        _ => {
            let p = name
                .strip_prefix("matrix-2p(")
                .and_then(|s| s.strip_suffix(')'))
                .or_else(|| name.strip_prefix("matrix-2p:"))
                .ok_or_else(|| Error::UnknownModel(name.to_string()))?;
            let p: usize = p.parse().map_err(|_| Error::UnknownModel(name.to_string()))?;
            if p < 2 {
                return Err(Error::Parameters(format!("matrix-2p needs p >= 2, got {p}")));
            }
            ModelSpec::new(name, 2, vec![cycle_vertex(p)])
        }
    }
}

/// Names accepted by [`builtin_model`] (with `3` as an example `p`).
pub const BUILTIN_MODELS: [&str; 3] = ["phi4-matrix", "phi4-rank3", "matrix-2p(3)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberComponent {
    /// Smallest vertex label of the component.
    pub anchor: String,
    pub vertices: usize,
    /// Index into the model's vertex list, when matched.
    pub matched: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub member: bool,
    pub components: Vec<MemberComponent>,
}

/// Whether every component of the amputated graph with color 0 removed is
/// (exact-colors) isomorphic to an interaction vertex of the model.
pub fn is_member(g: &ColoredGraph, m: &ModelSpec) -> Result<MembershipReport> {
    if g.colors() != m.graph_colors() {
        return Err(Error::PaletteMismatch(m.graph_colors(), g.colors()));
    }
    let inner = g.strip_legs().remove_color(Color(0))?;
    let components: Vec<MemberComponent> = inner
        .connected_components()
        .iter()
        .map(|c| MemberComponent {
            anchor: c.vertices().iter().map(|v| v.label.clone()).min().unwrap_or_default(),
            vertices: c.vertex_count(),
            matched: m.upsilon.iter().position(|u| c.is_isomorphic(u, IsoMode::ExactColors)),
        })
        .collect();
    Ok(MembershipReport { member: components.iter().all(|c| c.matched.is_some()), components })
}
