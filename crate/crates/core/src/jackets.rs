//! Jackets and the Gurău degree.

use itertools::Itertools;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Bubble, Color, ColorSet, ColoredGraph};
use crate::ribbon::ribbon_genus;

/// A jacket: a cyclic order of the palette, up to reversal, and the faces
/// whose two colors are adjacent in that cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacket {
    /// Canonical representative: starts at the smallest color and is
    /// lexicographically no larger than its reversal.
    pub cycle: Vec<Color>,
    pub faces: Vec<Bubble>,
    pub genus: i64,
}

impl Jacket {
    pub fn cycle_string(&self) -> String {
        format!("({})", self.cycle.iter().map(|c| c.to_string()).collect::<String>())
    }

    /// The color pairs `{τ^q(c), τ^{q+1}(c)}` of the cycle.
    pub fn color_pairs(&self) -> Vec<ColorSet> {
        cycle_pairs(&self.cycle)
    }
}

fn cycle_pairs(cycle: &[Color]) -> Vec<ColorSet> {
    let n = cycle.len();
    (0..n)
        .map(|i| ColorSet::from_colors([cycle[i], cycle[(i + 1) % n]]))
        .collect()
}

/// All cyclic orders of `colors` up to rotation and reversal, in
/// lexicographic order of their canonical representatives.
pub fn jacket_cycles(colors: ColorSet) -> Vec<Vec<Color>> {
    let all: Vec<Color> = colors.iter().collect();
    let Some((&first, rest)) = all.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for perm in rest.iter().copied().permutations(rest.len()) {
        let mut cycle = vec![first];
        cycle.extend(perm);
        let mut reversed = vec![first];
        reversed.extend(cycle[1..].iter().rev());
        if cycle <= reversed {
            out.push(cycle);
        }
    }
    out
}

fn require_closed(g: &ColoredGraph) -> Result<()> {
    if !g.is_closed() {
        return Err(Error::OpenInput(g.legs().len()));
    }
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    Ok(())
}

/// The `(n-1)!/2` jackets of a closed graph with `n >= 3` colors.
pub fn enumerate_jackets(g: &ColoredGraph) -> Result<Vec<Jacket>> {
    require_closed(g)?;
    let n = g.colors().len();
    if n < 3 {
        return Err(Error::ColorCount { expected: 3, found: n });
    }
    let faces = g.p_bubbles(2);
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    let k = g.component_count() as i64;
    Ok(jacket_cycles(g.colors())
        .into_iter()
        .map(|cycle| {
            let pairs = cycle_pairs(&cycle);
            let mine: Vec<Bubble> = faces.iter().filter(|f| pairs.contains(&f.colors)).cloned().collect();
            let chi = v - e + mine.len() as i64;
            Jacket { genus: (2 * k - chi) / 2, cycle, faces: mine }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub jackets: Vec<Jacket>,
    pub degree: i64,
    /// Degree recomputed per component from the face-count formula.
    pub face_count_degree: i64,
    pub faces: usize,
    pub amplitude_exponent: Ratio<i64>,
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Degree from `F = C(d-1,2)·p + (d-1) - 2ω/(d-2)!` for a connected graph
/// with `d` colors, `2p` vertices and `F` faces.
pub fn face_formula_degree(colors: usize, vertices: usize, faces: usize) -> Result<i64> {
    let d = colors as i64;
    let p = vertices as i64 / 2;
    let lhs = (d - 1) * (d - 2) / 2 * p + (d - 1) - faces as i64;
    let num = lhs * factorial((colors - 2) as u32);
    if num % 2 != 0 {
        return Err(Error::NonIntegralDegree);
    }
    Ok(num / 2)
}

/// `D - 2ω/(D-1)!` as an exact rational.
pub fn amplitude_exponent(d: usize, omega: i64) -> Result<Ratio<i64>> {
    if d < 2 {
        return Err(Error::Dimension(d));
    }
    Ok(Ratio::from_integer(d as i64) - Ratio::new(2 * omega, factorial((d - 1) as u32)))
}

/// Gurău degree of a closed graph with its jacket breakdown.
pub fn gurau_degree(g: &ColoredGraph) -> Result<DegreeReport> {
    let jackets = enumerate_jackets(g)?;
    let degree = jackets.iter().map(|j| j.genus).sum();
    let n = g.colors().len();
    let mut face_count_degree = 0;
    for comp in g.connected_components() {
        face_count_degree += face_formula_degree(n, comp.vertex_count(), comp.face_count())?;
    }
    Ok(DegreeReport {
        jackets,
        degree,
        face_count_degree,
        faces: g.face_count(),
        amplitude_exponent: amplitude_exponent(n - 1, degree)?,
    })
}

pub fn is_melonic(g: &ColoredGraph) -> Result<bool> {
    Ok(gurau_degree(g)?.degree == 0)
}

/// `3 · Σ genus(B)` over the 3-bubbles `B` that omit the largest color of
/// a closed 4-colored graph; a lower bound for the degree.
pub fn degree_lower_bound(g: &ColoredGraph) -> Result<i64> {
    require_closed(g)?;
    let colors = g.colors();
    if colors.len() != 4 {
        return Err(Error::ColorCount { expected: 4, found: colors.len() });
    }
    let top = colors.max().expect("non-empty palette");
    let mut sum = 0;
    for b in g.bubbles(colors.without(top))? {
        sum += ribbon_genus(&b.to_graph(g))?;
    }
    Ok(3 * sum)
}

/// `3 · Σ genus(R)` over the connected components `R` of the boundary graph
/// of an open 4-colored graph.
pub fn boundary_degree(g: &ColoredGraph) -> Result<i64> {
    if g.is_closed() {
        return Err(Error::ClosedInput);
    }
    if g.colors() != ColorSet::open(3) {
        return Err(Error::ColorCount { expected: 4, found: g.colors().len() });
    }
    let boundary = crate::surgery::boundary_graph(g)?;
    let mut sum = 0;
    for comp in boundary.connected_components() {
        sum += ribbon_genus(&comp)?;
    }
    Ok(3 * sum)
}
