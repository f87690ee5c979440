//! Vertex gadgets for the graphs `T_g` whose boundary is the canonical
//! genus-`g` graph `C_g`.
//!
//! Each white vertex `c` of `C_g` becomes a quartic rank-3 vertex with a
//! leg and three free color-0 slots `o_c, d_c, w_c`; each black vertex `x`
//! becomes one with slots `p_x, q_x, b_x`. A color-1 edge `cx` of `C_g`
//! contracts `o_c` with `p_x`, a color-2 edge `d_c` with `q_x`, and a
//! color-3 edge `w_c` with `b_x`. The gadget internals (which quartic
//! vertex, which tensor vertex holds which slot) are found by search.

use itertools::Itertools;

use super::families::canonical_graph;
use super::quartic_vertex;
use crate::error::{Error, Result};
use crate::graph::{Color, ColorSet, ColoredGraph, GraphBuilder, IsoMode, Parity};
use crate::surgery::boundary_graph;

/// A quartic vertex with its leg position and three slot positions, named
/// by tensor vertex (`W1`, `B1`, `W2`, `B2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gadget {
    pub transmitted: u8,
    pub leg: &'static str,
    /// Positions of the slots (`o, d, w` or `p, q, b`).
    pub slots: [&'static str; 3],
}

const CORNERS: [&str; 4] = ["W1", "B1", "W2", "B2"];

fn parity_of(corner: &str) -> Parity {
    if corner.starts_with('W') {
        Parity::White
    } else {
        Parity::Black
    }
}

/// The frozen gadget pair: the first pair in [`search`] order with
/// `∂T_g ≅ C_g` for `g = 0..=3`. (The first pair that works at `g = 1`
/// alone fails at `g = 2`.)
pub const WHITE_GADGET: Gadget = Gadget { transmitted: 1, leg: "W1", slots: ["B1", "W2", "B2"] };
pub const BLACK_GADGET: Gadget = Gadget { transmitted: 3, leg: "B1", slots: ["W2", "B2", "W1"] };

/// Assemble `T_g` from `C_g` and a gadget pair.
pub fn assemble(g: usize, white: Gadget, black: Gadget) -> Result<ColoredGraph> {
    let cg = canonical_graph(g);
    let colors = ColorSet::open(3);
    let mut b = GraphBuilder::new(colors);
    for v in cg.vertices() {
        let gadget = if v.parity == Parity::White { white } else { black };
        let q = quartic_vertex(gadget.transmitted).with_palette(colors)?.with_prefix(&format!("{}.", v.label));
        b.append(&q)?;
        b.add_leg_by_label(v.label.clone(), &format!("{}.{}", v.label, gadget.leg))?;
    }
    for e in cg.edges() {
        let slot = match e.color {
            Color(1) => 0,
            Color(2) => 1,
            Color(3) => 2,
            other => return Err(Error::ColorOutOfRange { color: other, palette: cg.colors() }),
        };
        let c = &cg.vertex(e.white).label;
        let x = &cg.vertex(e.black).label;
        b.add_edge_by_label(
            e.label.clone(),
            Color(0),
            &format!("{c}.{}", white.slots[slot]),
            &format!("{x}.{}", black.slots[slot]),
        )?;
    }
    Ok(b.build())
}

fn candidates(leg: &'static str) -> Vec<Gadget> {
    let rest: Vec<&'static str> = CORNERS.iter().copied().filter(|&c| c != leg).collect();
    let mut out = Vec::new();
    for t in 1..=3 {
        for p in rest.iter().copied().permutations(3) {
            out.push(Gadget { transmitted: t, leg, slots: [p[0], p[1], p[2]] });
        }
    }
    out
}

/// Search gadget pairs in a fixed order (white gadget with its leg on
/// `W1`, black gadget with its leg on `B1`; quartic type, then slot
/// permutation) for the first pair whose `T_g` has boundary `C_g` for every
/// `g` in `genera`. Returns the pair and the number of pairs tried.
pub fn search(genera: &[usize]) -> Result<(Gadget, Gadget, usize)> {
    let mut tried = 0;
    for white in candidates("W1") {
        for black in candidates("B1") {
            let compatible = (0..3).all(|i| parity_of(white.slots[i]) != parity_of(black.slots[i]));
            if !compatible {
                continue;
            }
            tried += 1;
            let mut ok = true;
            for &g in genera {
                let t = assemble(g, white, black)?;
                if !t.is_valid() || !boundary_graph(&t)?.is_isomorphic(&canonical_graph(g), IsoMode::ExactColors) {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok((white, black, tried));
            }
        }
    }
    Err(Error::Parameters(format!("no gadget pair among {tried} candidates")))
}
