//! Isomorphism test against the exceptional digraph D(8).

use std::fmt;

use itertools::Itertools;

use crate::digraph::Digraph;
use crate::families::{generate, FamilySpec};

/// Bijection `mapping[v]` from the vertices of a digraph onto those of D(8).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub mapping: [usize; 8],
    /// X is sent to Y and Y to X.
    pub side_swap: bool,
}

impl IsomorphismWitness {
    /// Arcs map onto arcs exactly, in both directions.
    pub fn verify(&self, d: &Digraph) -> bool {
        let target = d8();
        d.order() == 8
            && d.arc_count() == target.arc_count()
            && self.mapping.iter().sorted().copied().eq(0..8)
            && d.arcs().all(|(u, v)| target.has_arc(self.mapping[u], self.mapping[v]))
    }

    pub fn render(&self, d: &Digraph) -> String {
        let target = d8();
        (0..8).map(|v| format!("{}:{}", d.label(v), target.label(self.mapping[v]))).join(" ")
    }
}

impl fmt::Display for IsomorphismWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} swap={}", self.mapping, self.side_swap)
    }
}

fn d8() -> Digraph {
    generate(FamilySpec::D8).expect("D(8) is well-formed")
}

fn degree_profile(d: &Digraph) -> Vec<(u32, u32)> {
    (0..d.order())
        .map(|v| (d.out_neighbors(v).count_ones(), d.in_neighbors(v).count_ones()))
        .sorted()
        .collect()
}

/// First side-respecting bijection (identity orientation before side swap,
/// then lexicographic in the X and Y permutations) that carries `d` onto
/// D(8), or `None` when the two are not isomorphic.
pub fn iso_to_d8(d: &Digraph) -> Option<IsomorphismWitness> {
    if d.side_size() != Some(4) {
        return None;
    }
    let target = d8();
    if d.arc_count() != target.arc_count() || degree_profile(d) != degree_profile(&target) {
        return None;
    }
    let perms: Vec<Vec<usize>> = (0..4).permutations(4).collect();
    for side_swap in [false, true] {
        let (x_base, y_base) = if side_swap { (4, 0) } else { (0, 4) };
        for px in &perms {
            for py in &perms {
                let mut mapping = [0usize; 8];
                for i in 0..4 {
                    mapping[i] = x_base + px[i];
                    mapping[4 + i] = y_base + py[i];
                }
                if d.arcs().all(|(u, v)| target.has_arc(mapping[u], mapping[v])) {
                    return Some(IsomorphismWitness { mapping, side_swap });
                }
            }
        }
    }
    None
}
