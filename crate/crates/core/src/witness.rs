//! Cycles and paths as verifiable witnesses.

use std::fmt;

use thiserror::Error;

use crate::bitset::{self, VertexSet};
use crate::digraph::{Digraph, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("too few vertices: {found} < {min}")]
    TooShort { found: usize, min: usize },
    #[error("vertex #{0} is not in the digraph")]
    UnknownVertex(usize),
    #[error("vertex {0} repeats")]
    Repeated(String),
    #[error("missing arc {0} -> {1}")]
    MissingArc(String, String),
    #[error("sides do not alternate at {0}")]
    NotAlternating(String),
}

fn check_sequence(d: &Digraph, vs: &[usize], min: usize, closed: bool) -> Result<(), WitnessError> {
    if vs.len() < min {
        return Err(WitnessError::TooShort { found: vs.len(), min });
    }
    let mut seen: VertexSet = 0;
    for &v in vs {
        if v >= d.order() {
            return Err(WitnessError::UnknownVertex(v));
        }
        if bitset::contains(seen, v) {
            return Err(WitnessError::Repeated(d.label(v).to_string()));
        }
        seen |= bitset::singleton(v);
    }
    let steps = if closed { vs.len() } else { vs.len() - 1 };
    for i in 0..steps {
        let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
        if !d.has_arc(u, v) {
            return Err(WitnessError::MissingArc(d.label(u).to_string(), d.label(v).to_string()));
        }
        if d.is_bipartite() && (d.side(u) == d.side(v) || d.side(u) == Side::General) {
            return Err(WitnessError::NotAlternating(d.label(u).to_string()));
        }
    }
    Ok(())
}

fn render(d: &Digraph, vs: &[usize]) -> String {
    vs.iter().map(|&v| d.label(v).to_string()).collect::<Vec<_>>().join(" ")
}

/// Closed walk `v1 v2 .. vm v1` through distinct vertices; length `m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Wraps a vertex sequence without checking it against any digraph.
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle(vertices)
    }

    pub fn checked(d: &Digraph, vertices: Vec<usize>) -> Result<Self, WitnessError> {
        let c = Cycle(vertices);
        c.validate(d)?;
        Ok(c)
    }

    pub fn validate(&self, d: &Digraph) -> Result<(), WitnessError> {
        check_sequence(d, &self.0, 2, true)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of arcs, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        bitset::from_iter(self.0.iter().copied())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    /// Vertex `steps` arcs after position `pos`.
    pub fn step(&self, pos: usize, steps: usize) -> usize {
        self.0[(pos + steps) % self.0.len()]
    }

    /// Arcs along the cycle from `from` to `to`; `None` if either is absent.
    pub fn distance(&self, from: usize, to: usize) -> Option<usize> {
        let (i, j) = (self.position(from)?, self.position(to)?);
        Some((j + self.0.len() - i) % self.0.len())
    }

    pub fn render(&self, d: &Digraph) -> String {
        render(d, &self.0)
    }

    /// Same cycle started at its smallest vertex.
    pub fn normalized(&self) -> Cycle {
        let Some(start) = self.0.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) else {
            return self.clone();
        };
        Cycle((0..self.0.len()).map(|k| self.0[(start + k) % self.0.len()]).collect())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format!("#{v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Path `v1 .. vm` through distinct vertices; length `m - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn checked(d: &Digraph, vertices: Vec<usize>) -> Result<Self, WitnessError> {
        let p = Path(vertices);
        p.validate(d)?;
        Ok(p)
    }

    pub fn validate(&self, d: &Digraph) -> Result<(), WitnessError> {
        check_sequence(d, &self.0, 2, false)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() < 2
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() < 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn render(&self, d: &Digraph) -> String {
        render(d, &self.0)
    }
}

/// Parses a rendered vertex sequence such as `x1 y1 x2 y3`.
pub fn parse_sequence(d: &Digraph, text: &str) -> Result<Vec<usize>, crate::error::GraphError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| d.index_of(t.parse()?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn validates_cycles() {
        let d = generate(FamilySpec::D8).unwrap();
        let seq = parse_sequence(&d, "x1 y1 x2 y3 x3 y0").unwrap();
        let c = Cycle::checked(&d, seq).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.render(&d), "x1 y1 x2 y3 x3 y0");
        assert_eq!(c.normalized().render(&d), "x1 y1 x2 y3 x3 y0");
        let y1 = d.index_of("y1".parse().unwrap()).unwrap();
        let y0 = d.index_of("y0".parse().unwrap()).unwrap();
        assert_eq!(c.distance(y1, y0), Some(4));

        let bad = parse_sequence(&d, "x0 y0 x2 y2").unwrap();
        assert!(matches!(Cycle::checked(&d, bad), Err(WitnessError::MissingArc(..))));
        let rep = parse_sequence(&d, "x0 y0 x0 y0").unwrap();
        assert!(matches!(Cycle::checked(&d, rep), Err(WitnessError::Repeated(_))));
        assert!(matches!(Cycle::checked(&d, vec![0]), Err(WitnessError::TooShort { .. })));
    }

    #[test]
    fn validates_paths() {
        let d = generate(FamilySpec::D8).unwrap();
        let p = Path::checked(&d, parse_sequence(&d, "y1 x0 y0").unwrap()).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.interior(), &[0]);
        assert!(Path::checked(&d, parse_sequence(&d, "y0 x0 y1").unwrap()).is_err());
    }

    #[test]
    fn normalizes_rotation() {
        assert_eq!(Cycle::new(vec![5, 2, 7]).normalized(), Cycle::new(vec![2, 7, 5]));
    }
}
