//! Integer homology of the bubble chain complex.

pub mod chain;
pub mod matrix;
pub mod snf;

use std::fmt;

use num_bigint::BigInt;

pub use chain::{chain_complex, ChainComplex};
pub use matrix::IntMatrix;
pub use snf::{smith_diagonal, smith_normal_form, SmithForm};

use crate::error::Result;
use crate::graph::ColoredGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Torsion coefficients, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> HomologyGroup {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        terms.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    /// `H_0 .. H_{n-1}` for a graph with `n` colors.
    pub groups: Vec<HomologyGroup>,
    pub euler: i64,
}

impl HomologyResult {
    pub fn free_ranks(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.free_rank).collect()
    }

    /// True for the pattern `(Z, 0, 0, Z)` of the 3-sphere. Informational:
    /// the pattern does not characterize melonic graphs.
    pub fn matches_sphere3(&self) -> bool {
        self.groups.len() == 4
            && self.groups[0] == HomologyGroup::free(1)
            && self.groups[1].is_trivial()
            && self.groups[2].is_trivial()
            && self.groups[3] == HomologyGroup::free(1)
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, g) in self.groups.iter().enumerate() {
            writeln!(f, "H_{q} = {g}")?;
        }
        writeln!(f, "chi = {}", self.euler)
    }
}

/// Homology from a chain complex.
pub fn homology_of(cc: &ChainComplex) -> HomologyResult {
    let n = cc.degrees();
    // forms[p] = SNF of ∂_p for p = 1..n-1
    let forms: Vec<Option<SmithForm>> = (0..=n)
        .map(|p| (p >= 1 && p < n).then(|| smith_diagonal(cc.boundary(p))))
        .collect();
    let rank = |p: usize| forms.get(p).and_then(Option::as_ref).map_or(0, |s| s.rank);
    let mut groups = Vec::with_capacity(n);
    let mut euler = 0i64;
    for q in 0..n {
        let free_rank = cc.dim(q) - rank(q) - rank(q + 1);
        let torsion = forms
            .get(q + 1)
            .and_then(Option::as_ref)
            .map(SmithForm::torsion)
            .unwrap_or_default();
        euler += if q % 2 == 0 { free_rank as i64 } else { -(free_rank as i64) };
        groups.push(HomologyGroup { free_rank, torsion });
    }
    HomologyResult { groups, euler }
}

/// Integer homology of a closed graph.
pub fn homology(g: &ColoredGraph) -> Result<HomologyResult> {
    Ok(homology_of(&chain_complex(g)?))
}

/// Alternating sum of the free ranks.
pub fn euler_characteristic(g: &ColoredGraph) -> Result<i64> {
    Ok(homology(g)?.euler)
}
