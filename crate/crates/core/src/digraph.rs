//! Arc-set digraph model with a balanced bipartite refinement.
//!
//! Vertices are stored as dense indices. In a bipartite digraph with side
//! size `a`, `x_i` has index `i` and `y_i` has index `a + i`, so ascending
//! index order coincides with the canonical `(side, index)` order used for
//! serialization and witness tie-breaking. General digraphs name their
//! vertices `v0 .. v{n-1}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::{self, members, singleton, VertexSet};
use crate::error::GraphError;

/// Largest order representable by the bitset adjacency model.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    X,
    Y,
    General,
}

/// External name of a vertex: `x3`, `y0`, `v5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub const fn x(index: usize) -> Self {
        VertexId { side: Side::X, index }
    }

    pub const fn y(index: usize) -> Self {
        VertexId { side: Side::Y, index }
    }

    pub const fn general(index: usize) -> Self {
        VertexId { side: Side::General, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.side {
            Side::X => 'x',
            Side::Y => 'y',
            Side::General => 'v',
        };
        write!(f, "{prefix}{}", self.index)
    }
}

impl FromStr for VertexId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GraphError::UnknownVertex(s.to_string());
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('x') => Side::X,
            Some('y') => Side::Y,
            Some('v') => Side::General,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        // Reject "x01" so that names stay canonical.
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(unknown());
        }
        let index = digits.parse().map_err(|_| unknown())?;
        Ok(VertexId { side, index })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Balanced bipartite with `a` vertices on each side.
    Bipartite { a: usize },
    General { n: usize },
}

impl Kind {
    pub fn order(self) -> usize {
        match self {
            Kind::Bipartite { a } => 2 * a,
            Kind::General { n } => n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Degree {
    pub out: usize,
    #[serde(rename = "in")]
    pub inn: usize,
    pub total: usize,
}

/// Same-side vertex pair `{u, v}` with a common out-neighbour `witness`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominatingPair {
    pub u: usize,
    pub v: usize,
    pub witness: usize,
}

/// Unvalidated balanced-bipartite input: explicit side counts plus named arcs.
#[derive(Debug, Clone, Default)]
pub struct RawBipartite {
    pub x_count: usize,
    pub y_count: usize,
    pub arcs: Vec<(VertexId, VertexId)>,
}

/// Immutable digraph without loops or multiple arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    kind: Kind,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    arc_count: usize,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("kind", &self.kind)
            .field("arcs", &self.arcs().map(|(u, v)| format!("{}->{}", self.label(u), self.label(v))).collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental validator shared by the constructors and the text parser.
#[derive(Debug, Clone)]
pub(crate) struct Builder {
    kind: Kind,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    arc_count: usize,
}

impl Builder {
    pub(crate) fn new(kind: Kind) -> Result<Self, GraphError> {
        let n = kind.order();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Builder { kind, out: vec![0; n], inn: vec![0; n], arc_count: 0 })
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Result<usize, GraphError> {
        index_of(self.kind, v)
    }

    pub(crate) fn add(&mut self, tail: VertexId, head: VertexId) -> Result<(), GraphError> {
        let u = self.index_of(tail)?;
        let v = self.index_of(head)?;
        self.add_index(u, v)
    }

    pub(crate) fn add_index(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.kind.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::UnknownVertex(format!("#{w}")));
            }
        }
        let name = |w| label_of(self.kind, w).to_string();
        if u == v {
            return Err(GraphError::Loop { vertex: name(u) });
        }
        if let Kind::Bipartite { a } = self.kind {
            if (u < a) == (v < a) {
                return Err(GraphError::WithinSideArc { tail: name(u), head: name(v) });
            }
        }
        if bitset::contains(self.out[u], v) {
            return Err(GraphError::DuplicateArc { tail: name(u), head: name(v) });
        }
        self.out[u] |= singleton(v);
        self.inn[v] |= singleton(u);
        self.arc_count += 1;
        Ok(())
    }

    pub(crate) fn finish(self) -> Digraph {
        Digraph { kind: self.kind, out: self.out, inn: self.inn, arc_count: self.arc_count }
    }
}

fn index_of(kind: Kind, v: VertexId) -> Result<usize, GraphError> {
    match (kind, v.side) {
        (Kind::Bipartite { a }, Side::X) if v.index < a => Ok(v.index),
        (Kind::Bipartite { a }, Side::Y) if v.index < a => Ok(a + v.index),
        (Kind::General { n }, Side::General) if v.index < n => Ok(v.index),
        _ => Err(GraphError::UnknownVertex(v.to_string())),
    }
}

fn label_of(kind: Kind, v: usize) -> VertexId {
    match kind {
        Kind::Bipartite { a } if v < a => VertexId::x(v),
        Kind::Bipartite { a } => VertexId::y(v - a),
        Kind::General { .. } => VertexId::general(v),
    }
}

/// Validates raw bipartite input, reporting the first violated invariant.
pub fn validate_bipartite(raw: &RawBipartite) -> Result<Digraph, GraphError> {
    if raw.x_count != raw.y_count {
        return Err(GraphError::SideSizeMismatch { x: raw.x_count, y: raw.y_count });
    }
    Digraph::bipartite(raw.x_count, raw.arcs.iter().copied())
}

impl Digraph {
    /// Balanced bipartite digraph with side size `a` over named arcs.
    pub fn bipartite<I>(a: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut b = Builder::new(Kind::Bipartite { a })?;
        for (u, v) in arcs {
            b.add(u, v)?;
        }
        Ok(b.finish())
    }

    /// General digraph on `v0 .. v{n-1}` over index arcs.
    pub fn general<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_index_arcs(Kind::General { n }, arcs)
    }

    /// Digraph of the given kind over index arcs.
    pub fn from_index_arcs<I>(kind: Kind, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = Builder::new(kind)?;
        for (u, v) in arcs {
            b.add_index(u, v)?;
        }
        Ok(b.finish())
    }

    #[inline]
    pub fn kind(&self) -> Kind {
        self.kind
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Side size `a` of a bipartite digraph.
    pub fn side_size(&self) -> Option<usize> {
        match self.kind {
            Kind::Bipartite { a } => Some(a),
            Kind::General { .. } => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.kind, Kind::Bipartite { .. })
    }

    pub fn require_bipartite(&self) -> Result<usize, GraphError> {
        self.side_size().ok_or(GraphError::NotBipartite)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        bitset::full(self.order())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bitset::contains(self.out[u], v)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.inn[v]
    }

    /// Arcs in canonical order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, &s)| members(s).map(move |v| (u, v)))
    }

    pub fn label(&self, v: usize) -> VertexId {
        label_of(self.kind, v)
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize, GraphError> {
        index_of(self.kind, v)
    }

    pub fn side(&self, v: usize) -> Side {
        self.label(v).side
    }

    /// Vertices of side X (bipartite only; empty otherwise).
    pub fn side_x(&self) -> VertexSet {
        self.side_size().map_or(0, bitset::full)
    }

    pub fn side_y(&self) -> VertexSet {
        self.side_size().map_or(0, |a| bitset::full(2 * a) & !bitset::full(a))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(format!("#{v}")))
        }
    }

    pub fn degree(&self, v: usize) -> Result<Degree, GraphError> {
        self.check_vertex(v)?;
        let out = self.out[v].count_ones() as usize;
        let inn = self.inn[v].count_ones() as usize;
        Ok(Degree { out, inn, total: out + inn })
    }

    /// `d(v) = d+(v) + d-(v)`; panics on an out-of-range vertex.
    #[inline]
    pub fn total_degree(&self, v: usize) -> usize {
        (self.out[v].count_ones() + self.inn[v].count_ones()) as usize
    }

    /// `d(v, S)`: arcs between `v` and members of `set`, counted per direction.
    pub fn restricted_degree(&self, v: usize, set: VertexSet) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        if set & !self.vertices() != 0 {
            return Err(GraphError::UnknownVertex(format!("#{}", (set & !self.vertices()).trailing_zeros())));
        }
        Ok(((self.out[v] & set).count_ones() + (self.inn[v] & set).count_ones()) as usize)
    }

    /// Unordered pairs with a common out-neighbour, in lexicographic order,
    /// each carrying its smallest common out-neighbour.
    pub fn dominating_pairs(&self) -> Vec<DominatingPair> {
        common_neighbour_pairs(&self.out)
    }

    /// Unordered pairs with a common in-neighbour (the dual notion).
    pub fn common_in_neighbor_pairs(&self) -> Vec<DominatingPair> {
        common_neighbour_pairs(&self.inn)
    }

    fn reach(&self, from: usize, adj: &[VertexSet]) -> VertexSet {
        let mut seen = singleton(from);
        let mut frontier = seen;
        while frontier != 0 {
            let next = members(frontier).fold(0, |acc, v| acc | adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertices reachable from `v` by directed paths (including `v`).
    pub fn reachable_from(&self, v: usize) -> VertexSet {
        self.reach(v, &self.out)
    }

    /// Every ordered vertex pair is joined by a directed path.
    pub fn is_strong(&self) -> bool {
        let all = self.vertices();
        self.reach(0, &self.out) == all && self.reach(0, &self.inn) == all
    }

    /// Underlying undirected graph is connected and has no cut vertex.
    pub fn underlying_two_connected(&self) -> Result<bool, GraphError> {
        let n = self.order();
        if n < 3 {
            return Err(GraphError::TooSmall { n, min: 3 });
        }
        let und: Vec<VertexSet> = (0..n).map(|v| self.out[v] | self.inn[v]).collect();
        let connected_without = |removed: Option<usize>| {
            let alive = self.vertices() & !removed.map_or(0, singleton);
            let start = alive.trailing_zeros() as usize;
            let mut seen = singleton(start);
            let mut frontier = seen;
            while frontier != 0 {
                let next = members(frontier).fold(0, |acc, v| acc | und[v]) & alive & !seen;
                seen |= next;
                frontier = next;
            }
            seen == alive
        };
        Ok(connected_without(None) && (0..n).all(|v| connected_without(Some(v))))
    }

    /// Every vertex has in- and out-degree one and the arcs form a single cycle.
    pub fn is_directed_cycle(&self) -> bool {
        self.order() >= 2
            && (0..self.order()).all(|v| self.out[v].count_ones() == 1 && self.inn[v].count_ones() == 1)
            && self.is_strong()
    }

    /// Copy with arc `u -> v` removed; unchanged when the arc is absent.
    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let mut d = self.clone();
        if d.has_arc(u, v) {
            d.out[u] &= !singleton(v);
            d.inn[v] &= !singleton(u);
            d.arc_count -= 1;
        }
        d
    }

    /// Copy with arc `u -> v` added, validated like any other arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph, GraphError> {
        let mut b = Builder { kind: self.kind, out: self.out.clone(), inn: self.inn.clone(), arc_count: self.arc_count };
        b.add_index(u, v)?;
        Ok(b.finish())
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Digraph, GraphError> {
        let n = self.order();
        let image = bitset::from_iter(perm.iter().copied().filter(|&w| w < n));
        if perm.len() != n || image != self.vertices() {
            return Err(GraphError::UnknownVertex("relabeling is not a permutation".into()));
        }
        Digraph::from_index_arcs(self.kind, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }
}

fn common_neighbour_pairs(adj: &[VertexSet]) -> Vec<DominatingPair> {
    let n = adj.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let common = adj[u] & adj[v];
            if common != 0 {
                pairs.push(DominatingPair { u, v, witness: common.trailing_zeros() as usize });
            }
        }
    }
    pairs
}
