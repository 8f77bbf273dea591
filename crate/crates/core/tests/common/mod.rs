//! Brute-force reference implementations shared by the integration tests.
//! These deliberately avoid the library's search code and bitsets.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bipan::digraph::Digraph;
use bipan::families::FamilySpec;

pub fn adjacency(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        m[u][v] = true;
    }
    m
}

/// Every simple cycle, each started at its smallest vertex, found by plain
/// backtracking without pruning. Returns the lexicographically smallest
/// cycle of each length.
pub fn naive_spectrum(d: &Digraph) -> BTreeMap<usize, Vec<usize>> {
    let adj = adjacency(d);
    let n = adj.len();
    let mut best: BTreeMap<usize, Vec<usize>> = BTreeMap::new();

    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, on: &mut Vec<bool>, best: &mut BTreeMap<usize, Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 2 && adj[last][start] {
            let slot = best.entry(path.len()).or_insert_with(|| path.clone());
            if *path < *slot {
                *slot = path.clone();
            }
        }
        for w in start + 1..adj.len() {
            if adj[last][w] && !on[w] {
                on[w] = true;
                path.push(w);
                extend(adj, path, on, best);
                path.pop();
                on[w] = false;
            }
        }
    }

    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        extend(&adj, &mut vec![s], &mut on, &mut best);
    }
    best
}

/// Transitive closure by Floyd-Warshall.
pub fn naive_strong(d: &Digraph) -> bool {
    let mut r = adjacency(d);
    let n = r.len();
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&b| b))
}

/// Unordered pairs `u < v` with a common out-neighbour, with the smallest
/// such neighbour.
pub fn naive_dominating_pairs(d: &Digraph) -> Vec<(usize, usize, usize)> {
    let adj = adjacency(d);
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(w) = (0..n).find(|&w| adj[u][w] && adj[v][w]) {
                out.push((u, v, w));
            }
        }
    }
    out
}

pub fn degree(d: &Digraph, v: usize) -> usize {
    let adj = adjacency(d);
    (0..adj.len()).map(|w| adj[v][w] as usize + adj[w][v] as usize).sum()
}

/// `B_k` straight from the definition.
pub fn naive_bk(d: &Digraph, k: i64) -> bool {
    let a = d.side_size().expect("bipartite") as i64;
    naive_dominating_pairs(d)
        .iter()
        .all(|&(u, v, _)| degree(d, u).max(degree(d, v)) as i64 >= 2 * a - 2 + k)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying all `n!` vertex bijections, ignoring sides.
pub fn naive_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    if g.order() != h.order() || g.arc_count() != h.arc_count() {
        return false;
    }
    let (ga, ha) = (adjacency(g), adjacency(h));
    let n = ga.len();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (0..n).all(|v| ga[u][v] == ha[p[u]][p[v]])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Every bypass of `cycle` as `(gap, path)`: paths of length at least two
/// from one cycle vertex to a different one with all interior vertices off
/// the cycle.
pub fn naive_bypasses(d: &Digraph, cycle: &[usize]) -> Vec<(usize, Vec<usize>)> {
    let adj = adjacency(d);
    let n = adj.len();
    let len = cycle.len();
    let pos = |v: usize| cycle.iter().position(|&c| c == v);
    let mut out = Vec::new();

    fn walk(
        adj: &[Vec<bool>],
        path: &mut Vec<usize>,
        on_cycle: &dyn Fn(usize) -> Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for w in 0..adj.len() {
            if !adj[last][w] || path.contains(&w) {
                continue;
            }
            if on_cycle(w).is_some() {
                if path.len() >= 2 {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(p);
                }
            } else {
                path.push(w);
                walk(adj, path, on_cycle, out);
                path.pop();
            }
        }
    }

    let mut paths = Vec::new();
    for &u in cycle {
        for w in 0..n {
            if adj[u][w] && pos(w).is_none() {
                walk(&adj, &mut vec![u, w], &pos, &mut paths);
            }
        }
    }
    for p in paths {
        let (i, j) = (pos(p[0]).unwrap(), pos(*p.last().unwrap()).unwrap());
        out.push(((j + len - i) % len, p));
    }
    out
}

/// Every family member with at most ten vertices.
pub fn small_families() -> Vec<FamilySpec> {
    let mut v = vec![FamilySpec::D8, FamilySpec::D6, FamilySpec::D6Prime];
    for a in 1..=5 {
        v.push(FamilySpec::DirectedCycle { a });
        v.push(FamilySpec::CompleteBipartite { a });
    }
    for m in 2..=5 {
        v.push(FamilySpec::Hmm { m });
        for flag in [false, true] {
            v.push(FamilySpec::HmM1One { m, out_orientation: flag });
            v.push(FamilySpec::H2m { m, both_arcs: flag });
        }
    }
    v
}

/// Golden serializations under `tests/golden`.
pub const GOLDENS: &[(&str, FamilySpec)] = &[
    ("d8.txt", FamilySpec::D8),
    ("d6.txt", FamilySpec::D6),
    ("d6prime.txt", FamilySpec::D6Prime),
    ("cycle_a4.txt", FamilySpec::DirectedCycle { a: 4 }),
    ("complete_a3.txt", FamilySpec::CompleteBipartite { a: 3 }),
    ("hmm_m3.txt", FamilySpec::Hmm { m: 3 }),
    ("hm_m1_1_m3.txt", FamilySpec::HmM1One { m: 3, out_orientation: false }),
    ("hm_m1_1_m3_out.txt", FamilySpec::HmM1One { m: 3, out_orientation: true }),
    ("h2m_m3.txt", FamilySpec::H2m { m: 3, both_arcs: false }),
    ("h2m_m3_both.txt", FamilySpec::H2m { m: 3, both_arcs: true }),
];

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}
