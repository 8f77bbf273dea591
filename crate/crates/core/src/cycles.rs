//! Exact cycle search: prescribed lengths, spectra, bypasses, and cycles
//! through a vertex.
//!
//! Every search is a depth-first extension in ascending vertex order, so the
//! first witness found is the lexicographically smallest one. Branches are
//! cut when the distance back to the start vertex exceeds the arcs left, and
//! failed `(visited set, endpoint)` states are remembered.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::bitset::{self, members, singleton, VertexSet};
use crate::digraph::Digraph;
use crate::error::EngineError;
use crate::witness::{Cycle, Path};

/// Default bound on the order for searches that certify absence.
pub const DEFAULT_MAX_N: usize = 24;

const UNREACHABLE: u8 = u8::MAX;

/// Shortest distances `v -> target` using only vertices of `allowed`.
fn distances_to(d: &Digraph, target: usize, allowed: VertexSet) -> [u8; 64] {
    let mut dist = [UNREACHABLE; 64];
    dist[target] = 0;
    let mut seen = singleton(target);
    let mut frontier = seen;
    let mut level = 0u8;
    while frontier != 0 {
        level += 1;
        let next = members(frontier).fold(0, |acc, v| acc | d.in_neighbors(v)) & allowed & !seen;
        for v in members(next) {
            dist[v] = level;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Depth-first search for a cycle of exactly `target` vertices through
/// `start`, staying inside `allowed`.
struct ExactCycle<'a> {
    d: &'a Digraph,
    start: usize,
    target: usize,
    allowed: VertexSet,
    home: [u8; 64],
    path: Vec<usize>,
    dead: HashSet<(VertexSet, u8)>,
    shuffle: Option<&'a mut dyn RngCore>,
}

impl<'a> ExactCycle<'a> {
    fn new(d: &'a Digraph, start: usize, target: usize, allowed: VertexSet) -> Self {
        let allowed = allowed | singleton(start);
        ExactCycle {
            d,
            start,
            target,
            allowed,
            home: distances_to(d, start, allowed),
            path: Vec::with_capacity(target),
            dead: HashSet::new(),
            shuffle: None,
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if (self.allowed.count_ones() as usize) < self.target {
            return None;
        }
        self.path.push(self.start);
        if self.extend(singleton(self.start)) {
            Some(self.path)
        } else {
            None
        }
    }

    fn extend(&mut self, used: VertexSet) -> bool {
        let v = *self.path.last().expect("path starts at the start vertex");
        let len = self.path.len();
        if len == self.target {
            return self.d.has_arc(v, self.start);
        }
        // Arcs still needed after stepping to the next vertex.
        let remaining = (self.target - len) as u8;
        let candidates = self.d.out_neighbors(v) & self.allowed & !used;
        if candidates == 0 {
            return false;
        }
        let key = (used, v as u8);
        if len > 1 && self.dead.contains(&key) {
            return false;
        }
        let mut order: Vec<usize> = members(candidates).filter(|&w| self.home[w] <= remaining).collect();
        if let Some(rng) = self.shuffle.as_mut() {
            order.shuffle(rng);
        }
        for w in order {
            self.path.push(w);
            if self.extend(used | singleton(w)) {
                return true;
            }
            self.path.pop();
        }
        if len > 1 {
            self.dead.insert(key);
        }
        false
    }
}

fn check_length(d: &Digraph, m: usize) -> Result<(), EngineError> {
    if m < 2 || m > d.order() {
        return Err(EngineError::BadLength { m, n: d.order() });
    }
    Ok(())
}

fn check_bound(d: &Digraph, max_n: usize) -> Result<(), EngineError> {
    if d.order() > max_n {
        return Err(EngineError::TooLarge { n: d.order(), max_n });
    }
    Ok(())
}

/// Lexicographically smallest cycle with exactly `m` vertices, or `None`
/// when no such cycle exists.
pub fn find_cycle_of_length(d: &Digraph, m: usize) -> Result<Option<Cycle>, EngineError> {
    check_length(d, m)?;
    if d.is_bipartite() && m % 2 == 1 {
        return Ok(None);
    }
    let all = d.vertices();
    for s in 0..d.order() {
        let allowed = all & !bitset::full(s);
        if (allowed.count_ones() as usize) < m {
            break;
        }
        if let Some(vs) = ExactCycle::new(d, s, m, allowed).run() {
            return Ok(Some(Cycle::new(vs)));
        }
    }
    Ok(None)
}

/// Uniformly shuffled search order; returns some cycle of exactly `m`
/// vertices if one exists.
pub fn sample_cycle_of_length(d: &Digraph, m: usize, rng: &mut dyn RngCore) -> Result<Option<Cycle>, EngineError> {
    check_length(d, m)?;
    if d.is_bipartite() && m % 2 == 1 {
        return Ok(None);
    }
    let mut starts: Vec<usize> = (0..d.order()).collect();
    starts.shuffle(rng);
    for s in starts {
        let mut search = ExactCycle::new(d, s, m, d.vertices());
        search.shuffle = Some(&mut *rng);
        if let Some(vs) = search.run() {
            return Ok(Some(Cycle::new(vs)));
        }
    }
    Ok(None)
}

pub fn is_hamiltonian(d: &Digraph) -> Option<Cycle> {
    if d.order() < 2 {
        return None;
    }
    find_cycle_of_length(d, d.order()).expect("order is a valid length")
}

/// Achievable cycle lengths, one lexicographically smallest witness each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpectrum {
    pub order: usize,
    pub cycles: BTreeMap<usize, Cycle>,
}

impl CycleSpectrum {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.keys().copied().collect()
    }

    pub fn contains(&self, m: usize) -> bool {
        self.cycles.contains_key(&m)
    }

    pub fn witness(&self, m: usize) -> Option<&Cycle> {
        self.cycles.get(&m)
    }

    /// Every even length `2, 4, .., 2k` with `2k <= limit` is present.
    pub fn has_all_even_up_to(&self, limit: usize) -> bool {
        (2..=limit).step_by(2).all(|m| self.contains(m))
    }
}

pub fn cycle_spectrum(d: &Digraph, max_n: usize) -> Result<CycleSpectrum, EngineError> {
    check_bound(d, max_n)?;
    let step = if d.is_bipartite() { 2 } else { 1 };
    let mut cycles = BTreeMap::new();
    for m in (2..=d.order()).step_by(step) {
        if let Some(c) = find_cycle_of_length(d, m)? {
            cycles.insert(m, c);
        }
    }
    Ok(CycleSpectrum { order: d.order(), cycles })
}

/// A cycle of maximum length below the order, if any exists.
pub fn longest_non_hamiltonian_cycle(d: &Digraph, max_n: usize) -> Result<Option<Cycle>, EngineError> {
    check_bound(d, max_n)?;
    for m in (2..d.order()).rev() {
        if d.is_bipartite() && m % 2 == 1 {
            continue;
        }
        if let Some(c) = find_cycle_of_length(d, m)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Path leaving a cycle at `path.first()` and rejoining it at `path.last()`,
/// with every interior vertex off the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bypass {
    pub path: Path,
    pub host: Cycle,
    /// Arcs of the host cycle from the entry to the exit endpoint.
    pub gap: usize,
}

impl Bypass {
    pub fn entry(&self) -> usize {
        self.path.first()
    }

    pub fn exit(&self) -> usize {
        self.path.last()
    }
}

fn validate_host(d: &Digraph, c: &Cycle) -> Result<(), EngineError> {
    c.validate(d).map_err(|e| EngineError::InvalidCycle(e.to_string()))
}

/// Lexicographically smallest path `from -> .. -> to` whose interior is a
/// non-empty subset of `interior`.
fn smallest_detour(d: &Digraph, from: usize, to: usize, interior: VertexSet) -> Option<Vec<usize>> {
    let feeds = distances_to(d, to, interior | singleton(to));
    let useful: VertexSet = members(interior).filter(|&v| feeds[v] != UNREACHABLE).fold(0, |s, v| s | singleton(v));
    let first = d.out_neighbors(from) & useful;
    if first == 0 {
        return None;
    }

    fn walk(
        d: &Digraph,
        to: usize,
        useful: VertexSet,
        path: &mut Vec<usize>,
        used: VertexSet,
        dead: &mut HashSet<(VertexSet, u8)>,
    ) -> bool {
        let v = *path.last().expect("non-empty path");
        let key = (used, v as u8);
        if dead.contains(&key) {
            return false;
        }
        let next = d.out_neighbors(v) & ((useful & !used) | singleton(to));
        for w in members(next) {
            path.push(w);
            if w == to || walk(d, to, useful, path, used | singleton(w), dead) {
                return true;
            }
            path.pop();
        }
        dead.insert(key);
        false
    }

    let mut dead = HashSet::new();
    for w in members(first) {
        let mut path = vec![from, w];
        if walk(d, to, useful, &mut path, singleton(from) | singleton(w), &mut dead) {
            return Some(path);
        }
    }
    None
}

/// Bypass of minimum gap, ties broken by entry vertex then path.
pub fn find_bypass(d: &Digraph, c: &Cycle) -> Result<Option<Bypass>, EngineError> {
    validate_host(d, c)?;
    let on = c.vertex_set();
    let off = d.vertices() & !on;
    if off == 0 {
        return Err(EngineError::InvalidCycle("cycle is Hamiltonian; no vertex lies off it".into()));
    }
    let mut entries: Vec<usize> = c.vertices().to_vec();
    entries.sort_unstable();
    for gap in 1..c.len() {
        for &u in &entries {
            let exit = c.step(c.position(u).expect("entry is on the cycle"), gap);
            if let Some(vs) = smallest_detour(d, u, exit, off) {
                return Ok(Some(Bypass { path: Path::new(vs), host: c.clone(), gap }));
            }
        }
    }
    Ok(None)
}

/// Every bypass of `c` with its gap, one lexicographically smallest path per
/// `(entry, exit)` pair.
pub fn bypass_endpoints(d: &Digraph, c: &Cycle) -> Result<Vec<Bypass>, EngineError> {
    validate_host(d, c)?;
    let off = d.vertices() & !c.vertex_set();
    let mut found = Vec::new();
    for (i, &u) in c.vertices().iter().enumerate() {
        for gap in 1..c.len() {
            if let Some(vs) = smallest_detour(d, u, c.step(i, gap), off) {
                found.push(Bypass { path: Path::new(vs), host: c.clone(), gap });
            }
        }
    }
    Ok(found)
}

/// Cycles of every even length `2..=|C|` through `x`, built inside
/// `V(C) ∪ {x}`. Requires `d(x, V(C)) >= |C|/2 + 1`. Lengths for which no
/// cycle exists are absent from the map.
pub fn cycles_through_vertex(d: &Digraph, c: &Cycle, x: usize) -> Result<BTreeMap<usize, Cycle>, EngineError> {
    d.require_bipartite()?;
    validate_host(d, c)?;
    if x >= d.order() {
        return Err(EngineError::Graph(crate::error::GraphError::UnknownVertex(format!("#{x}"))));
    }
    if c.contains(x) {
        return Err(EngineError::InvalidCycle(format!("{} lies on the cycle", d.label(x))));
    }
    let b = c.len() / 2;
    let on = c.vertex_set();
    let degree = d.restricted_degree(x, on)?;
    if degree < b + 1 {
        return Err(EngineError::PreconditionUnmet { degree, required: b + 1 });
    }
    let allowed = on | singleton(x);
    let mut out = BTreeMap::new();
    for m in (2..=2 * b).step_by(2) {
        if let Some(vs) = ExactCycle::new(d, x, m, allowed).run() {
            out.insert(m, Cycle::new(vs));
        }
    }
    Ok(out)
}
