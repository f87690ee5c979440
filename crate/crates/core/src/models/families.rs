//! Builders for the named graph families.

use std::fmt;
use std::str::FromStr;

use super::gadgets;
use super::separators;
use crate::error::{Error, Result};
use crate::graph::{Color, ColorSet, ColoredGraph, GraphBuilder, Parity};
use crate::surgery::{close_all_opened, connected_sum, internal_zero_edges, open_edge};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Dipole(u8),
    R0,
    R1,
    Necklace,
    O,
    N,
    Qg(usize),
    Kg(usize),
    Qgbc { g: usize, b: usize, c: usize },
    Cg(usize),
    Tg(usize),
    L(Vec<usize>),
    TwoPoint,
    /// The frozen separator.
    P,
    /// The second frozen separator.
    M,
}

impl Family {
    pub const NAMES: [&'static str; 15] =
        ["dipole", "r0", "r1", "necklace", "o", "n", "qg", "kg", "qgbc", "cg", "tg", "l", "two-point", "p", "m"];

    /// Parse a family name and its integer parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Parameters(format!("`{name}` takes {n} parameter(s), got {}", params.len())))
            }
        };
        let f = match name.to_ascii_lowercase().as_str() {
            "dipole" => {
                arity(1)?;
                let d = u8::try_from(params[0]).ok().filter(|&d| (1..=15).contains(&d));
                Family::Dipole(d.ok_or_else(|| Error::Parameters(format!("dipole needs 1 <= D <= 15, got {}", params[0])))?)
            }
            "r0" => arity(0).map(|_| Family::R0)?,
            "r1" => arity(0).map(|_| Family::R1)?,
            "necklace" => arity(0).map(|_| Family::Necklace)?,
            "o" => arity(0).map(|_| Family::O)?,
            "n" => arity(0).map(|_| Family::N)?,
            "qg" => arity(1).map(|_| Family::Qg(params[0]))?,
            "kg" => arity(1).map(|_| Family::Kg(params[0]))?,
            "qgbc" => {
                arity(3)?;
                Family::Qgbc { g: params[0], b: params[1], c: params[2] }
            }
            "cg" => arity(1).map(|_| Family::Cg(params[0]))?,
            "tg" => arity(1).map(|_| Family::Tg(params[0]))?,
            "l" => {
                if params.is_empty() {
                    return Err(Error::Parameters("`l` needs at least one genus".into()));
                }
                Family::L(params.to_vec())
            }
            "two-point" | "two_point" => arity(0).map(|_| Family::TwoPoint)?,
            "p" => arity(0).map(|_| Family::P)?,
            "m" => arity(0).map(|_| Family::M)?,
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(f)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dipole(d) => write!(f, "dipole({d})"),
            Family::R0 => write!(f, "r0"),
            Family::R1 => write!(f, "r1"),
            Family::Necklace => write!(f, "necklace"),
            Family::O => write!(f, "o"),
            Family::N => write!(f, "n"),
            Family::Qg(g) => write!(f, "qg({g})"),
            Family::Kg(g) => write!(f, "kg({g})"),
            Family::Qgbc { g, b, c } => write!(f, "qgbc({g},{b},{c})"),
            Family::Cg(g) => write!(f, "cg({g})"),
            Family::Tg(g) => write!(f, "tg({g})"),
            Family::L(gs) => {
                let s: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
                write!(f, "l({})", s.join(","))
            }
            Family::TwoPoint => write!(f, "two-point"),
            Family::P => write!(f, "p"),
            Family::M => write!(f, "m"),
        }
    }
}

/// Accepts `name` or `name(a,b,...)`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let (name, params) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parameters(format!("unbalanced parentheses in `{s}`")))?;
                let params = inner
                    .split(',')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parameters(format!("bad parameter `{p}`"))))
                    .collect::<Result<Vec<_>>>()?;
                (&s[..i], params)
            }
            None => (s, Vec::new()),
        };
        Family::from_parts(name, &params)
    }
}

pub fn build(f: &Family) -> Result<ColoredGraph> {
    match f {
        Family::Dipole(d) => Ok(dipole(*d)),
        Family::R0 => Ok(r0()),
        Family::R1 => Ok(r1()),
        Family::Necklace => Ok(necklace()),
        Family::O => Ok(block_o()),
        Family::N => Ok(block_n()),
        Family::Qg(g) => qg(*g),
        Family::Kg(g) => kg(*g),
        Family::Qgbc { g, b, c } => qgbc(*g, *b, *c),
        Family::Cg(g) => Ok(canonical_graph(*g)),
        Family::Tg(g) => tg(*g),
        Family::L(gs) => l_graph(gs),
        Family::TwoPoint => Ok(two_point()),
        Family::P => Ok(separators::frozen_p().graph),
        Family::M => Ok(separators::frozen_m().graph),
    }
}

/// Two vertices joined by one edge of each color `0..d-1` (closed palette
/// `1..=d`).
pub fn dipole(d: u8) -> ColoredGraph {
    let mut b = GraphBuilder::new(ColorSet::closed(d));
    let w = b.add_vertex("w", Parity::White).expect("fresh label");
    let k = b.add_vertex("b", Parity::Black).expect("fresh label");
    for c in 1..=d {
        b.add_edge(format!("e{c}"), Color(c), w, k).expect("valid edge");
    }
    b.build()
}

fn from_table(colors: ColorSet, whites: &[&str], blacks: &[&str], edges: &[(&str, u8, &str, &str)]) -> ColoredGraph {
    let mut b = GraphBuilder::new(colors);
    for w in whites {
        b.add_vertex(*w, Parity::White).expect("fresh label");
    }
    for k in blacks {
        b.add_vertex(*k, Parity::Black).expect("fresh label");
    }
    for &(label, c, x, y) in edges {
        b.add_edge_by_label(label, Color(c), x, y).expect("valid edge");
    }
    b.build()
}

const SQUARES: [(&str, u8, &str, &str); 8] = [
    ("e1", 1, "a", "p"),
    ("e2", 2, "a", "q"),
    ("f1", 1, "b", "q"),
    ("f2", 2, "b", "p"),
    ("g1", 1, "c", "x"),
    ("g2", 2, "d", "x"),
    ("h1", 1, "d", "y"),
    ("h2", 2, "c", "y"),
];

fn two_squares(zero: [(&str, u8, &str, &str); 4]) -> ColoredGraph {
    let edges: Vec<_> = SQUARES.iter().copied().chain(zero).collect();
    from_table(ColorSet::open(2), &["p", "q", "x", "y"], &["a", "b", "c", "d"], &edges)
}

/// Torus vacuum graph of the quartic matrix model.
pub fn r1() -> ColoredGraph {
    two_squares([("alpha0", 0, "a", "x"), ("beta0", 0, "d", "p"), ("gamma0", 0, "b", "y"), ("mu0", 0, "c", "q")])
}

/// Sphere vacuum graph over the same two quartic vertices.
pub fn r0() -> ColoredGraph {
    two_squares([("alpha0", 0, "a", "x"), ("beta0", 0, "c", "p"), ("gamma0", 0, "b", "y"), ("mu0", 0, "d", "q")])
}

/// Four vertices on a cycle joined by double edges with color pairs
/// `{0,1}` and `{2,3}`.
pub fn necklace() -> ColoredGraph {
    from_table(
        ColorSet::open(3),
        &["p", "q"],
        &["a", "b"],
        &[
            ("e0", 0, "p", "b"),
            ("e1", 1, "p", "b"),
            ("e2", 2, "p", "a"),
            ("e3", 3, "p", "a"),
            ("f0", 0, "q", "a"),
            ("f1", 1, "q", "a"),
            ("f2", 2, "q", "b"),
            ("f3", 3, "q", "b"),
        ],
    )
}

/// `(R0 # R1) # R0'` with blocks prefixed `l.`, `m.`, `r.`, before the
/// distinguished edges are named.
pub fn block_o_unlabeled() -> ColoredGraph {
    let left = connected_sum(&r0().with_prefix("l."), "l.alpha0", &r1().with_prefix("m."), "m.alpha0")
        .expect("sum of fixed blocks");
    connected_sum(&left, "m.gamma0", &r0().with_prefix("r."), "r.alpha0").expect("sum of fixed blocks")
}

/// Distinguished color-0 edges of `O` and the four edges of the square
/// recolored in `N`, as labels of [`block_o_unlabeled`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockChoice {
    pub mu: &'static str,
    pub nu: &'static str,
    pub alpha: &'static str,
    pub beta: &'static str,
    pub square: [&'static str; 4],
}

/// First choice in [`search_block_choice`] order satisfying
/// [`block_choice_ok`] and [`bordism_chain_ok`].
pub const BLOCK_CHOICE: BlockChoice = BlockChoice {
    mu: "l.alpha0'",
    nu: "m.beta0",
    alpha: "l.gamma0",
    beta: "r.gamma0",
    square: ["m.e1", "m.e2", "m.f1", "m.f2"],
};

fn name_distinguished(g: &ColoredGraph, choice: &BlockChoice) -> ColoredGraph {
    g.relabel(
        |v| v.to_string(),
        |e| {
            if e == choice.mu {
                "mu0".into()
            } else if e == choice.nu {
                "nu0".into()
            } else if e == choice.alpha {
                "alpha0".into()
            } else if e == choice.beta {
                "beta0".into()
            } else {
                e.to_string()
            }
        },
        |l| l.to_string(),
    )
}

fn swap_square(g: &ColoredGraph, square: &[&str]) -> ColoredGraph {
    let mut b = GraphBuilder::new(g.colors());
    for v in g.vertices() {
        b.add_vertex(v.label.clone(), v.parity).expect("copied label");
    }
    for e in g.edges() {
        let color = if square.contains(&e.label.as_str()) { Color(3 - e.color.0) } else { e.color };
        b.add_edge(e.label.clone(), color, e.white, e.black).expect("copied edge");
    }
    b.build()
}

fn blocks_for(choice: &BlockChoice) -> (ColoredGraph, ColoredGraph) {
    let raw = block_o_unlabeled();
    let o = name_distinguished(&raw, choice);
    let n = swap_square(&o, &choice.square);
    (o, n)
}

/// The 24-vertex torus block with edges `mu0`, `nu0`, `alpha0`, `beta0`.
pub fn block_o() -> ColoredGraph {
    blocks_for(&BLOCK_CHOICE).0
}

/// `O` with the colors of one (12)-square next to `mu0` and `nu0` swapped.
pub fn block_n() -> ColoredGraph {
    blocks_for(&BLOCK_CHOICE).1
}

fn chain(blocks: Vec<ColoredGraph>, left: &str, right: &str) -> Result<ColoredGraph> {
    let mut it = blocks.into_iter().enumerate();
    let (_, first) = it.next().ok_or_else(|| Error::Parameters("empty chain".into()))?;
    let mut acc = first.with_prefix("o1.");
    for (i, block) in it {
        let k = i + 1;
        acc = connected_sum(&acc, &format!("o{}.{left}", k - 1), &block.with_prefix(&format!("o{k}.")), &format!("o{k}.{right}"))?;
    }
    Ok(acc)
}

/// `g` copies of `O` chained along `mu0` / `nu0`; `R0` for `g = 0`.
pub fn qg(g: usize) -> Result<ColoredGraph> {
    qg_with(&BLOCK_CHOICE, g)
}

fn qg_with(choice: &BlockChoice, g: usize) -> Result<ColoredGraph> {
    if g == 0 {
        return Ok(r0());
    }
    chain(vec![blocks_for(choice).0; g], "mu0", "nu0")
}

/// `g` copies of `O` chained along `beta0` / `alpha0`; `R0` for `g = 0`.
pub fn kg(g: usize) -> Result<ColoredGraph> {
    if g == 0 {
        return Ok(r0());
    }
    chain(vec![block_o(); g], "beta0", "alpha0")
}

/// The block `S(ε, ι)`: `O` (ε = 1) or `N` (ε = 0) with `alpha0` opened
/// when `ι >= 1` and `beta0` opened when `ι = 2`.
pub fn bordism_block(epsilon: bool, iota: u8) -> Result<ColoredGraph> {
    bordism_block_with(&BLOCK_CHOICE, epsilon, iota)
}

fn bordism_block_with(choice: &BlockChoice, epsilon: bool, iota: u8) -> Result<ColoredGraph> {
    let (o, n) = blocks_for(choice);
    let mut x = if epsilon { o } else { n };
    if iota >= 1 {
        x = open_edge(&x, "alpha0")?;
    }
    if iota >= 2 {
        x = open_edge(&x, "beta0")?;
    }
    Ok(x)
}

/// Genus-`g` bordism graph with `b + c` boundary circles.
pub fn qgbc(g: usize, b: usize, c: usize) -> Result<ColoredGraph> {
    qgbc_with(&BLOCK_CHOICE, g, b, c)
}

fn qgbc_with(choice: &BlockChoice, g: usize, b: usize, c: usize) -> Result<ColoredGraph> {
    if b > c {
        return Err(Error::Parameters(format!("need B <= C, got B = {b}, C = {c}")));
    }
    let m = g.max(c);
    if m == 0 {
        return qg_with(choice, 0);
    }
    let blocks = (1..=m)
        .map(|k| {
            let iota = if k <= b {
                2
            } else if k <= c {
                1
            } else {
                0
            };
            bordism_block_with(choice, k <= g, iota)
        })
        .collect::<Result<Vec<_>>>()?;
    chain(blocks, "mu0", "nu0")
}

/// Close every edge opened by [`qgbc`].
pub fn cap(g: &ColoredGraph) -> Result<ColoredGraph> {
    close_all_opened(g)
}

/// Genus-`g` 3-colored graph: a `2(2g+1)`-gon with sides alternately
/// colored 1, 2 and its long diagonals colored 3. Vertex `v0` is black.
pub fn canonical_graph(g: usize) -> ColoredGraph {
    let n = 2 * (2 * g + 1);
    let mut b = GraphBuilder::new(ColorSet::closed(3));
    let ids: Vec<usize> = (0..n)
        .map(|i| {
            let parity = if i % 2 == 0 { Parity::Black } else { Parity::White };
            b.add_vertex(format!("v{i}"), parity).expect("fresh label")
        })
        .collect();
    for i in 0..n {
        let color = if i % 2 == 0 { 1 } else { 2 };
        b.add_edge(format!("s{i}"), Color(color), ids[i], ids[(i + 1) % n]).expect("valid edge");
    }
    for i in 0..n / 2 {
        b.add_edge(format!("d{i}"), Color(3), ids[i], ids[i + n / 2]).expect("valid edge");
    }
    b.build()
}

/// Open rank-3 quartic graph with boundary `C_g`.
pub fn tg(g: usize) -> Result<ColoredGraph> {
    gadgets::assemble(g, gadgets::WHITE_GADGET, gadgets::BLACK_GADGET)
}

/// `T_{g1} # P # T_{g2} # P # ... # T_{gb}`. Each `T` is joined to the
/// separator on its left through its second internal color-0 edge and to
/// the one on its right through its first; the separator uses `k` on its
/// left and `l` on its right.
pub fn l_graph(genera: &[usize]) -> Result<ColoredGraph> {
    let (&g1, rest) = genera.split_first().ok_or_else(|| Error::Parameters("`l` needs at least one genus".into()))?;
    let sep = separators::frozen_p();
    let first_edges = |t: &ColoredGraph| -> Result<(String, String)> {
        let zero = internal_zero_edges(t);
        match zero.as_slice() {
            [f, e, ..] => Ok((f.clone(), e.clone())),
            _ => Err(Error::Parameters("T_g needs two internal color-0 edges".into())),
        }
    };
    let mut acc = tg(g1)?.with_prefix("t1.");
    let mut right = format!("t1.{}", first_edges(&tg(g1)?)?.0);
    for (i, &g) in rest.iter().enumerate() {
        let k = i + 2;
        let p = sep.graph.with_prefix(&format!("p{k}."));
        acc = connected_sum(&acc, &right, &p, &format!("p{k}.{}", sep.k))?;
        let t = tg(g)?;
        let (f, e) = first_edges(&t)?;
        acc = connected_sum(&acc, &format!("p{k}.{}", sep.l), &t.with_prefix(&format!("t{k}.")), &format!("t{k}.{e}"))?;
        right = format!("t{k}.{f}");
    }
    Ok(acc)
}

/// Open rank-3 graph with six inner vertices, two internal color-0 edges
/// and two legs, built on `C_1`.
pub fn two_point() -> ColoredGraph {
    let c1 = canonical_graph(1).with_palette(ColorSet::open(3)).expect("palette extension");
    let mut b = c1.to_builder();
    b.add_edge_by_label("z1", Color(0), "v1", "v2").expect("valid edge");
    b.add_edge_by_label("z2", Color(0), "v3", "v4").expect("valid edge");
    b.add_leg_by_label("in", "v5").expect("valid leg");
    b.add_leg_by_label("out", "v0").expect("valid leg");
    b.build()
}

/// Check the conditions on a block choice in both `O` and `N`: the four
/// edges are distinct color-0 edges, `alpha` and `beta` lie on different
/// (01)- and (02)-faces, neither `mu` nor `nu` shares a face with them,
/// the square is a (12)-bubble touching both `mu` and `nu`, and `N` is a
/// sphere.
pub fn block_choice_ok(choice: &BlockChoice) -> bool {
    let raw = block_o_unlabeled();
    let names = [choice.mu, choice.nu, choice.alpha, choice.beta];
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return false;
        }
        match raw.edge_id(a) {
            Ok(e) if raw.edge(e).color == Color(0) => {}
            _ => return false,
        }
    }
    let Ok(sq) = choice.square.iter().map(|s| raw.edge_id(s)).collect::<Result<Vec<_>>>() else {
        return false;
    };
    let squares = raw.bubbles(ColorSet::from_colors([Color(1), Color(2)])).expect("palette colors");
    let mut sorted = sq.clone();
    sorted.sort_unstable();
    let Some(bubble) = squares.iter().find(|b| b.edges == sorted) else {
        return false;
    };
    let touches = |label: &str| {
        let e = raw.edge(raw.edge_id(label).expect("checked above"));
        bubble.vertices.contains(&e.white) || bubble.vertices.contains(&e.black)
    };
    if !touches(choice.mu) || !touches(choice.nu) {
        return false;
    }
    let (o, n) = blocks_for(choice);
    if crate::homology::euler_characteristic(&n).ok() != Some(2) {
        return false;
    }
    [o, n].iter().all(faces_separate)
}

fn faces_separate(g: &ColoredGraph) -> bool {
    let face = |c: u8, label: &str| {
        let ids = g.component_ids_by(ColorSet::from_colors([Color(0), Color(c)]));
        ids[g.edge(g.edge_id(label).expect("named edge")).white]
    };
    [1, 2].iter().all(|&c| {
        let (a, b) = (face(c, "alpha0"), face(c, "beta0"));
        let (m, n) = (face(c, "mu0"), face(c, "nu0"));
        a != b && ![a, b].contains(&m) && ![a, b].contains(&n)
    })
}

/// Chain-level behaviour of a block choice: `Qgbc(g,B,C)` has `B + C`
/// boundary components, and capping `Qgbc(g,B,C)` with `C <= g` gives a
/// graph isomorphic to `Qg(g)`, for all `g, C <= 2`.
pub fn bordism_chain_ok(choice: &BlockChoice) -> bool {
    let run = || -> Result<bool> {
        for g in 0..=2 {
            for c in 0..=2 {
                for b in 0..=c {
                    let q = qgbc_with(choice, g, b, c)?;
                    if crate::surgery::boundary_graph(&q)?.component_count() != b + c {
                        return Ok(false);
                    }
                    let capped = cap(&q)?;
                    if c <= g && !capped.is_isomorphic(&qg_with(choice, g)?, crate::graph::IsoMode::ExactColors) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    };
    run().unwrap_or(false)
}

/// Scan choices in order (edges by label, `mu`, `nu`, `alpha`, `beta`;
/// squares in bubble order, edges sorted by label) and return the first
/// one passing [`block_choice_ok`] and `accept`.
pub fn search_block_choice(accept: impl Fn(&BlockChoice) -> bool) -> Option<BlockChoice> {
    let raw = block_o_unlabeled();
    let leak = |s: &str| -> &'static str { Box::leak(s.to_string().into_boxed_str()) };
    let mut zero: Vec<&'static str> = internal_zero_edges(&raw).iter().map(|s| leak(s)).collect();
    zero.sort_unstable();
    let squares: Vec<[&'static str; 4]> = raw
        .bubbles(ColorSet::from_colors([Color(1), Color(2)]))
        .expect("palette colors")
        .iter()
        .filter(|b| b.edges.len() == 4)
        .map(|b| {
            let mut l: Vec<&'static str> = b.edges.iter().map(|&e| leak(&raw.edge(e).label)).collect();
            l.sort_unstable();
            [l[0], l[1], l[2], l[3]]
        })
        .collect();
    for &mu in &zero {
        for &nu in &zero {
            for &alpha in &zero {
                for &beta in &zero {
                    for &square in &squares {
                        let c = BlockChoice { mu, nu, alpha, beta, square };
                        if block_choice_ok(&c) && accept(&c) {
                            return Some(c);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::euler_characteristic;

    #[test]
    fn small_families() {
        assert_eq!(euler_characteristic(&r0()).unwrap(), 2);
        assert_eq!(euler_characteristic(&r1()).unwrap(), 0);
        assert!(necklace().is_valid());
        assert_eq!(dipole(3).edge_count(), 3);
        for g in 0..4 {
            let c = canonical_graph(g);
            assert!(c.is_valid());
            assert_eq!(c.vertex_count(), 2 * (2 * g + 1));
            assert_eq!(c.p_bubbles(2).len(), 3);
            assert_eq!(euler_characteristic(&c).unwrap(), 2 - 2 * g as i64);
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!("qgbc(2,2,3)".parse::<Family>().unwrap(), Family::Qgbc { g: 2, b: 2, c: 3 });
        assert_eq!("L(1,1,2)".parse::<Family>().unwrap(), Family::L(vec![1, 1, 2]));
        assert_eq!("necklace".parse::<Family>().unwrap().to_string(), "necklace");
        assert!("qg".parse::<Family>().is_err());
        assert!("blob(1)".parse::<Family>().is_err());
    }

    #[test]
    fn frozen_block_choice_holds() {
        assert!(block_choice_ok(&BLOCK_CHOICE));
        let o = block_o();
        assert_eq!((o.vertex_count(), euler_characteristic(&o).unwrap()), (24, 0));
    }
}
