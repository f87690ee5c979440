//! Color-regularity checks.

use std::fmt;

use super::{Color, ColoredGraph, Parity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingColor { vertex: String, color: Color },
    DuplicateColor { vertex: String, color: Color, count: usize },
    ParityImbalance { component: String, white: usize, black: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingColor { vertex, color } => {
                write!(f, "missing color {color} at vertex `{vertex}`")
            }
            Violation::DuplicateColor { vertex, color, count } => {
                write!(f, "duplicate color {color} at vertex `{vertex}` ({count} occurrences)")
            }
            Violation::ParityImbalance { component, white, black } => write!(
                f,
                "component of `{component}` has {white} white and {black} black vertices"
            ),
        }
    }
}

/// Violations found by [`ColoredGraph::validate`]; empty means valid.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl ColoredGraph {
    /// Check that every vertex carries exactly one edge (or, for color 0,
    /// one edge or leg) of each palette color, and that every component is
    /// balanced between white and black vertices.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let palette: Vec<Color> = self.colors().iter().collect();
        for v in 0..self.vertex_count() {
            let mut counts = [0usize; 16];
            for &e in self.incident(v) {
                counts[self.edge(e).color.0 as usize] += 1;
            }
            counts[0] += self.legs_at(v).len();
            for &c in &palette {
                let n = counts[c.0 as usize];
                let vertex = self.vertex(v).label.clone();
                if n == 0 {
                    violations.push(Violation::MissingColor { vertex, color: c });
                } else if n > 1 {
                    violations.push(Violation::DuplicateColor { vertex, color: c, count: n });
                }
            }
        }
        let comp = self.component_ids();
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut tally = vec![(0usize, 0usize, usize::MAX); ncomp];
        for (v, &k) in comp.iter().enumerate() {
            match self.vertex(v).parity {
                Parity::White => tally[k].0 += 1,
                Parity::Black => tally[k].1 += 1,
            }
            tally[k].2 = tally[k].2.min(v);
        }
        for (white, black, first) in tally {
            if white != black {
                violations.push(Violation::ParityImbalance {
                    component: self.vertex(first).label.clone(),
                    white,
                    black,
                });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}
