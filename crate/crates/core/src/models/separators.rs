//! Search for separators: closed rank-3 quartic vacuum graphs `P` with
//! two color-0 edges `k`, `l` such that `∂(G # P # H) ≅ ∂G ⊔ ∂H`.

use super::enumerate::{enumerate_vacuum, EnumerateOptions};
use super::families::{canonical_graph, tg};
use super::ModelSpec;
use crate::error::{Error, Result};
use crate::graph::format::parse;
use crate::graph::{ColoredGraph, IsoMode};
use crate::surgery::{cone, internal_zero_edges, separator_check, EdgeChoices};

#[derive(Clone, Debug, PartialEq)]
pub struct Separator {
    pub graph: ColoredGraph,
    pub k: String,
    pub l: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparatorSearch {
    pub p: Separator,
    pub m: Separator,
    /// Number of (graph, k, l) configurations examined.
    pub configurations: usize,
}

/// Probe pairs `(T1, T1)`, `(T1, T2)` and `(cone(C1), T1)`.
pub fn standard_probes() -> Result<Vec<(ColoredGraph, ColoredGraph)>> {
    let t1 = tg(1)?;
    let t2 = tg(2)?;
    Ok(vec![(t1.clone(), t1.clone()), (t1.clone(), t2), (cone(&canonical_graph(1))?, t1)])
}

/// Scan connected, deduplicated vacuum graphs with `1..=max_vertices`
/// interaction vertices and every ordered pair of distinct internal
/// color-0 edges. Candidates are screened on the first edge choice of each
/// probe and confirmed on all choices. `P` is the first passing
/// configuration, `M` the first passing one on a graph not isomorphic to
/// `P`'s.
pub fn find_separators(m: &ModelSpec, max_vertices: usize, probes: &[(ColoredGraph, ColoredGraph)]) -> Result<SeparatorSearch> {
    let mut found: Vec<Separator> = Vec::new();
    let mut configurations = 0;
    let opts = EnumerateOptions { dedup: true, connected_only: true };
    for n in 1..=max_vertices {
        for g in enumerate_vacuum(m, n, opts)?.graphs {
            if found.iter().any(|s| s.graph.is_isomorphic(&g, IsoMode::ExactColors)) {
                continue;
            }
            let zero = internal_zero_edges(&g);
            'pairs: for k in &zero {
                for l in &zero {
                    if k == l {
                        continue;
                    }
                    configurations += 1;
                    if !separator_check(&g, k, l, probes, EdgeChoices::First)?.passed()
                        || !separator_check(&g, k, l, probes, EdgeChoices::All)?.passed()
                    {
                        continue;
                    }
                    found.push(Separator { graph: g.clone(), k: k.clone(), l: l.clone() });
                    if found.len() == 2 {
                        let m = found.pop().expect("two found");
                        let p = found.pop().expect("two found");
                        return Ok(SeparatorSearch { p, m, configurations });
                    }
                    break 'pairs;
                }
            }
        }
    }
    Err(Error::NoSeparator(format!("no separator pair with at most {max_vertices} interaction vertices")))
}

/// Two `V_1` vertices; `k` and `l` were `z1` and `z3`.
const P_TEXT: &str = "\
colors 3 open
v v1.W1 w
v v1.B1 b
v v1.W2 w
v v1.B2 b
v v2.W1 w
v v2.B1 b
v v2.W2 w
v v2.B2 b
e v1.a2 2 v1.W1 v1.B1
e v1.c2 2 v1.W2 v1.B2
e v1.a3 3 v1.W1 v1.B1
e v1.c3 3 v1.W2 v1.B2
e v1.x1 1 v1.W1 v1.B2
e v1.y1 1 v1.W2 v1.B1
e v2.a2 2 v2.W1 v2.B1
e v2.c2 2 v2.W2 v2.B2
e v2.a3 3 v2.W1 v2.B1
e v2.c3 3 v2.W2 v2.B2
e v2.x1 1 v2.W1 v2.B2
e v2.y1 1 v2.W2 v2.B1
e k 0 v1.W1 v1.B1
e z2 0 v1.W2 v2.B1
e l 0 v2.W1 v2.B2
e z4 0 v2.W2 v1.B2
";
const P_EDGES: (&str, &str) = ("k", "l");
/// Two `V_1` vertices; `m` and `n` were `z1` and `z2`.
const M_TEXT: &str = "\
colors 3 open
v v1.W1 w
v v1.B1 b
v v1.W2 w
v v1.B2 b
v v2.W1 w
v v2.B1 b
v v2.W2 w
v v2.B2 b
e v1.a2 2 v1.W1 v1.B1
e v1.c2 2 v1.W2 v1.B2
e v1.a3 3 v1.W1 v1.B1
e v1.c3 3 v1.W2 v1.B2
e v1.x1 1 v1.W1 v1.B2
e v1.y1 1 v1.W2 v1.B1
e v2.a2 2 v2.W1 v2.B1
e v2.c2 2 v2.W2 v2.B2
e v2.a3 3 v2.W1 v2.B1
e v2.c3 3 v2.W2 v2.B2
e v2.x1 1 v2.W1 v2.B2
e v2.y1 1 v2.W2 v2.B1
e m 0 v1.W1 v2.B1
e n 0 v1.W2 v2.B2
e z3 0 v2.W1 v1.B1
e z4 0 v2.W2 v1.B2
";
const M_EDGES: (&str, &str) = ("m", "n");

fn frozen(text: &str, (k, l): (&str, &str)) -> Separator {
    Separator { graph: parse(text).expect("frozen separator parses"), k: k.into(), l: l.into() }
}

/// The separator found by [`find_separators`] on the quartic rank-3
/// model, with its distinguished edges renamed `k` and `l`.
pub fn frozen_p() -> Separator {
    frozen(P_TEXT, P_EDGES)
}

/// The second separator, with edges renamed `m` and `n`.
pub fn frozen_m() -> Separator {
    frozen(M_TEXT, M_EDGES)
}
