//! Explicit extremal digraphs and one canonical member of each family.
//!
//! General-digraph families place their parts on consecutive indices:
//!
//! | family        | layout                                              |
//! |---------------|-----------------------------------------------------|
//! | `H(m,m)`      | `A = v0..v{m-1}`, `B = v{m}..v{2m-1}`               |
//! | `H(m,m-1,1)`  | `A = v0..v{m-1}`, `B = v{m}..v{2m-2}`, `a = v{2m-1}` |
//! | `H(2m)`       | `A = v0..v{m-2}`, `x = v{m-1}`, `B = v{m}..v{2m-2}`, `y = v{2m-1}` |
//! | `D6`          | `x_i = v{i-1}` for `i in 1..=5`, `x = v5`           |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::{self, members, singleton, VertexSet};
use crate::conditions::check_bk;
use crate::cycles::{cycle_spectrum, find_cycle_of_length, is_hamiltonian};
use crate::digraph::{Digraph, Kind, VertexId, MAX_VERTICES};
use crate::verify::iso_to_d8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad family parameters: {0}")]
pub struct BadParams(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    D8,
    D6,
    D6Prime,
    /// `x0 y0 x1 y1 .. x{a-1} y{a-1} x0`.
    DirectedCycle { a: usize },
    CompleteBipartite { a: usize },
    /// `H(m,m)` with the perfect matching `A -> B`.
    Hmm { m: usize },
    /// `H(m,m-1,1)`. Default orientation `N-(a) = B`, `A ⊆ N+(a)`;
    /// `out_orientation` selects `N+(a) = B`, `A ⊆ N-(a)`.
    HmM1One { m: usize, out_orientation: bool },
    /// `H(2m)` with the arc `xy`, plus `yx` when `both_arcs`.
    H2m { m: usize, both_arcs: bool },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::D8 => f.write_str("d8"),
            FamilySpec::D6 => f.write_str("d6"),
            FamilySpec::D6Prime => f.write_str("d6prime"),
            FamilySpec::DirectedCycle { a } => write!(f, "cycle a={a}"),
            FamilySpec::CompleteBipartite { a } => write!(f, "complete a={a}"),
            FamilySpec::Hmm { m } => write!(f, "hmm m={m}"),
            FamilySpec::HmM1One { m, out_orientation } => {
                write!(f, "hm-m1-1 m={m}{}", if out_orientation { " out-orientation" } else { "" })
            }
            FamilySpec::H2m { m, both_arcs } => write!(f, "h2m m={m}{}", if both_arcs { " both-arcs" } else { "" }),
        }
    }
}

/// Family names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    D8,
    D6,
    D6Prime,
    Cycle,
    Complete,
    Hmm,
    HmM1One,
    H2m,
}

impl FromStr for FamilyName {
    type Err = BadParams;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "d8" => FamilyName::D8,
            "d6" => FamilyName::D6,
            "d6prime" | "d6'" => FamilyName::D6Prime,
            "cycle" | "directed-cycle" => FamilyName::Cycle,
            "complete" | "complete-bipartite" => FamilyName::Complete,
            "hmm" => FamilyName::Hmm,
            "hm-m1-1" | "hmm11" => FamilyName::HmM1One,
            "h2m" => FamilyName::H2m,
            other => return Err(BadParams(format!("unknown family `{other}`"))),
        })
    }
}

fn check_range(name: &str, value: usize, min: usize, max: usize) -> Result<(), BadParams> {
    if value < min || value > max {
        return Err(BadParams(format!("{name} must lie in [{min}, {max}], got {value}")));
    }
    Ok(())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), BadParams> {
        let half = MAX_VERTICES / 2;
        match *self {
            FamilySpec::D8 | FamilySpec::D6 | FamilySpec::D6Prime => Ok(()),
            FamilySpec::DirectedCycle { a } | FamilySpec::CompleteBipartite { a } => check_range("a", a, 1, half),
            FamilySpec::Hmm { m } | FamilySpec::HmM1One { m, .. } | FamilySpec::H2m { m, .. } => check_range("m", m, 2, half),
        }
    }
}

fn range(lo: usize, hi: usize) -> VertexSet {
    bitset::full(hi) & !bitset::full(lo)
}

/// Complete digraph on `set`.
fn complete_on(set: VertexSet) -> Vec<(usize, usize)> {
    members(set).flat_map(|u| members(set & !singleton(u)).map(move |v| (u, v))).collect()
}

fn d8_arcs() -> Vec<(VertexId, VertexId)> {
    let (x, y) = (VertexId::x, VertexId::y);
    let mut arcs = vec![(y(0), x(1)), (y(1), x(0)), (x(2), y(3)), (x(3), y(2))];
    let two_cycles = [(x(0), y(0)), (x(1), y(1)), (x(2), y(2)), (x(3), y(3)), (y(0), x(2)), (y(0), x(3)), (y(1), x(2)), (y(1), x(3))];
    for (u, v) in two_cycles {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    arcs
}

/// Arcs of `D6` in its own naming: `x1..x5` are `1..=5`, `x` is `0`.
const D6_ARCS: [(usize, usize); 15] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 5),
    (2, 5),
    (5, 1),
    (5, 4),
    (3, 2),
    (3, 0),
    (4, 1),
    (4, 0),
];

/// `0` names `x`, `i >= 1` names `x_i`.
fn d6_index(name: usize) -> usize {
    if name == 0 {
        5
    } else {
        name - 1
    }
}

pub fn generate(spec: FamilySpec) -> Result<Digraph, BadParams> {
    spec.validate()?;
    let built = match spec {
        FamilySpec::D8 => Digraph::bipartite(4, d8_arcs()),
        FamilySpec::D6 | FamilySpec::D6Prime => {
            let mut arcs: Vec<(usize, usize)> = D6_ARCS.iter().map(|&(u, v)| (d6_index(u), d6_index(v))).collect();
            if spec == FamilySpec::D6Prime {
                arcs.push((d6_index(2), d6_index(4)));
            }
            Digraph::general(6, arcs)
        }
        FamilySpec::DirectedCycle { a } => {
            let order: Vec<usize> = (0..a).flat_map(|i| [i, a + i]).collect();
            Digraph::from_index_arcs(Kind::Bipartite { a }, (0..2 * a).map(|i| (order[i], order[(i + 1) % (2 * a)])))
        }
        FamilySpec::CompleteBipartite { a } => Digraph::from_index_arcs(
            Kind::Bipartite { a },
            (0..2 * a).flat_map(|u| {
                let heads = if u < a { a..2 * a } else { 0..a };
                heads.map(move |v| (u, v))
            }),
        ),
        FamilySpec::Hmm { m } => {
            let (a_set, b_set) = (range(0, m), range(m, 2 * m));
            let mut arcs = complete_on(a_set);
            arcs.extend(complete_on(b_set));
            arcs.extend((0..m).map(|i| (i, m + i)));
            Digraph::general(2 * m, arcs)
        }
        FamilySpec::HmM1One { m, out_orientation } => {
            let (a_set, b_set, apex) = (range(0, m), range(m, 2 * m - 1), 2 * m - 1);
            let mut arcs = complete_on(b_set | singleton(apex));
            for u in members(a_set) {
                for v in members(b_set) {
                    arcs.push((u, v));
                    arcs.push((v, u));
                }
                arcs.push(if out_orientation { (u, apex) } else { (apex, u) });
            }
            Digraph::general(2 * m, arcs)
        }
        FamilySpec::H2m { m, both_arcs } => {
            let (a_set, x, b_set, y) = (range(0, m - 1), m - 1, range(m, 2 * m - 1), 2 * m - 1);
            let mut arcs = complete_on(a_set | singleton(x));
            arcs.extend(complete_on(b_set | singleton(y)));
            arcs.extend(members(a_set).map(|a| (y, a)));
            arcs.extend(members(b_set).map(|b| (b, x)));
            arcs.push((x, y));
            if both_arcs {
                arcs.push((y, x));
            }
            Digraph::general(2 * m, arcs)
        }
    };
    Ok(built.expect("family constructions are valid digraphs"))
}

/// Named vertex parts of a family member, as used by its definition.
pub fn parts(spec: FamilySpec) -> Vec<(&'static str, VertexSet)> {
    match spec {
        FamilySpec::Hmm { m } => vec![("A", range(0, m)), ("B", range(m, 2 * m))],
        FamilySpec::HmM1One { m, .. } => {
            vec![("A", range(0, m)), ("B", range(m, 2 * m - 1)), ("a", singleton(2 * m - 1))]
        }
        FamilySpec::H2m { m, .. } => vec![
            ("A", range(0, m - 1)),
            ("x", singleton(m - 1)),
            ("B", range(m, 2 * m - 1)),
            ("y", singleton(2 * m - 1)),
        ],
        FamilySpec::D8 => vec![("X", range(0, 4)), ("Y", range(4, 8))],
        FamilySpec::DirectedCycle { a } | FamilySpec::CompleteBipartite { a } => {
            vec![("X", range(0, a)), ("Y", range(a, 2 * a))]
        }
        FamilySpec::D6 | FamilySpec::D6Prime => vec![("x", singleton(5))],
    }
}

fn arcs_from(d: &Digraph, from: VertexSet, to: VertexSet) -> Vec<(usize, usize)> {
    members(from).flat_map(|u| members(d.out_neighbors(u) & to).map(move |v| (u, v))).collect()
}

fn is_complete_on(d: &Digraph, set: VertexSet) -> bool {
    members(set).all(|u| d.out_neighbors(u) & set == set & !singleton(u))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Replays the defining constraints of the family against `d`, using the
/// layout of [`parts`]. Returns the first violated constraint.
pub fn check_structure(spec: FamilySpec, d: &Digraph) -> Result<(), String> {
    match spec {
        FamilySpec::Hmm { m } => {
            let (a, b) = (range(0, m), range(m, 2 * m));
            ensure(d.order() == 2 * m, || format!("order {} != 2m", d.order()))?;
            ensure(is_complete_on(d, a), || "<A> is not K*_m".into())?;
            ensure(is_complete_on(d, b), || "<B> is not K*_m".into())?;
            ensure(arcs_from(d, b, a).is_empty(), || "arc from B to A".into())?;
            ensure(members(a).all(|x| d.out_neighbors(x) & b != 0), || "some x in A has d+(x,B) = 0".into())?;
            ensure(members(b).all(|y| d.in_neighbors(y) & a != 0), || "some y in B has d-(y,A) = 0".into())
        }
        FamilySpec::HmM1One { m, .. } => {
            let (a, b, apex) = (range(0, m), range(m, 2 * m - 1), 2 * m - 1);
            ensure(d.order() == 2 * m, || format!("order {} != 2m", d.order()))?;
            ensure(a.count_ones() as usize == b.count_ones() as usize + 1, || "|A| != |B| + 1".into())?;
            ensure(arcs_from(d, a, a).is_empty(), || "<A> has an arc".into())?;
            ensure(members(a).all(|u| d.out_neighbors(u) & b == b && d.in_neighbors(u) & b == b), || {
                "missing arc between A and B".into()
            })?;
            let in_form = d.in_neighbors(apex) == b && d.out_neighbors(apex) & a == a;
            let out_form = d.out_neighbors(apex) == b && d.in_neighbors(apex) & a == a;
            ensure(in_form || out_form, || "neither N-(a) = B with A ⊆ N+(a) nor N+(a) = B with A ⊆ N-(a)".into())
        }
        FamilySpec::H2m { m, .. } => {
            let (a, x, b, y) = (range(0, m - 1), m - 1, range(m, 2 * m - 1), 2 * m - 1);
            let left = a | singleton(x);
            let right = b | singleton(y);
            ensure(d.order() == 2 * m, || format!("order {} != 2m", d.order()))?;
            ensure(is_complete_on(d, left), || "<A ∪ {x}> is not K*_m".into())?;
            ensure(is_complete_on(d, right), || "<B ∪ {y}> is not K*_m".into())?;
            ensure(arcs_from(d, a, b).is_empty() && arcs_from(d, b, a).is_empty(), || "arc between A and B".into())?;
            ensure(members(a).all(|v| d.has_arc(y, v)), || "missing arc ya".into())?;
            ensure(members(b).all(|v| d.has_arc(v, x)), || "missing arc bx".into())?;
            ensure(d.has_arc(x, y), || "missing arc xy".into())?;
            let mut allowed: Vec<(usize, usize)> = members(a).map(|v| (y, v)).collect();
            allowed.extend(members(b).map(|v| (v, x)));
            allowed.push((x, y));
            allowed.push((y, x));
            let mut crossing = arcs_from(d, left, right);
            crossing.extend(arcs_from(d, right, left));
            ensure(crossing.iter().all(|arc| allowed.contains(arc)), || "arc between the halves outside ya, bx, xy, yx".into())
        }
        FamilySpec::D8 | FamilySpec::D6 | FamilySpec::D6Prime | FamilySpec::DirectedCycle { .. } | FamilySpec::CompleteBipartite { .. } => {
            let reference = generate(spec).map_err(|e| e.to_string())?;
            ensure(&reference == d, || "arc set differs from the definition".into())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property {
    Strong,
    SatisfiesB(i64),
    Hamiltonian,
    HasCycleOfLength(usize),
    /// The cycle spectrum equals exactly this set of lengths.
    Spectrum(Vec<usize>),
    IsDirectedCycle,
    IsomorphicToD8,
    DefiningStructure,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Strong => f.write_str("strong"),
            Property::SatisfiesB(k) => write!(f, "satisfies_B{k}"),
            Property::Hamiltonian => f.write_str("hamiltonian"),
            Property::HasCycleOfLength(m) => write!(f, "has_cycle_of_length({m})"),
            Property::Spectrum(ls) => {
                let ls: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                write!(f, "spectrum={{{}}}", ls.join(","))
            }
            Property::IsDirectedCycle => f.write_str("directed_cycle"),
            Property::IsomorphicToD8 => f.write_str("isomorphic_to_d8"),
            Property::DefiningStructure => f.write_str("defining_structure"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub property: Property,
    pub expected: bool,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.expected {
            write!(f, "{}", self.property)
        } else {
            write!(f, "not {}", self.property)
        }
    }
}

fn expect(property: Property, expected: bool) -> Expectation {
    Expectation { property, expected }
}

/// Properties each family member is known to have.
pub fn family_properties(spec: FamilySpec) -> Result<Vec<Expectation>, BadParams> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::D8 => vec![
            expect(Property::Strong, true),
            expect(Property::SatisfiesB(1), true),
            expect(Property::Hamiltonian, false),
            expect(Property::Spectrum(vec![2, 4, 6]), true),
            expect(Property::IsomorphicToD8, true),
        ],
        FamilySpec::D6 | FamilySpec::D6Prime => {
            vec![expect(Property::Hamiltonian, false), expect(Property::HasCycleOfLength(5), true)]
        }
        FamilySpec::DirectedCycle { a } => vec![
            expect(Property::Strong, true),
            expect(Property::IsDirectedCycle, true),
            expect(Property::SatisfiesB(1), true),
            expect(Property::Spectrum(vec![2 * a]), true),
        ],
        FamilySpec::CompleteBipartite { a } => vec![
            expect(Property::Strong, true),
            expect(Property::SatisfiesB(1), true),
            expect(Property::Hamiltonian, a >= 1),
            expect(Property::Spectrum((1..=a).map(|k| 2 * k).collect()), true),
        ],
        FamilySpec::Hmm { .. } | FamilySpec::HmM1One { .. } | FamilySpec::H2m { .. } => {
            vec![expect(Property::DefiningStructure, true), expect(Property::Hamiltonian, false)]
        }
    })
}

/// Evaluates one property on `d`. Spectrum properties respect `max_n`.
pub fn evaluate(spec: FamilySpec, d: &Digraph, property: &Property, max_n: usize) -> Result<bool, String> {
    Ok(match property {
        Property::Strong => d.is_strong(),
        Property::SatisfiesB(k) => check_bk(d, *k).map_err(|e| e.to_string())?.holds,
        Property::Hamiltonian => is_hamiltonian(d).is_some(),
        Property::HasCycleOfLength(m) => find_cycle_of_length(d, *m).map_err(|e| e.to_string())?.is_some(),
        Property::Spectrum(ls) => &cycle_spectrum(d, max_n).map_err(|e| e.to_string())?.lengths() == ls,
        Property::IsDirectedCycle => d.is_directed_cycle(),
        Property::IsomorphicToD8 => iso_to_d8(d).is_some(),
        Property::DefiningStructure => check_structure(spec, d).is_ok(),
    })
}

/// Each expectation paired with its evaluated value.
pub fn replay(spec: FamilySpec, d: &Digraph, max_n: usize) -> Result<Vec<(Expectation, bool)>, String> {
    family_properties(spec)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|e| evaluate(spec, d, &e.property, max_n).map(|actual| (e, actual)))
        .collect()
}
