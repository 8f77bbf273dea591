//! Degree conditions on dominating pairs and the hypothesis bundles of the
//! even-cycle theorems.

use std::fmt;
use std::str::FromStr;

use crate::cycles::find_cycle_of_length;
use crate::digraph::{Digraph, DominatingPair};
use crate::error::GraphError;

/// Dominating pair attaining the smallest `max{d(u), d(v)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorstPair {
    pub pair: DominatingPair,
    pub max_degree: usize,
}

/// Outcome of checking `B_k`: every dominating pair has
/// `max{d(u), d(v)} >= 2a - 2 + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub k: i64,
    pub threshold: i64,
    pub holds: bool,
    pub pairs_checked: usize,
    pub worst_pair: Option<WorstPair>,
}

impl ConditionReport {
    pub fn render(&self, d: &Digraph) -> String {
        let mut out = format!("k={}\nholds={}\npairs_checked={}\n", self.k, self.holds, self.pairs_checked);
        match self.worst_pair {
            Some(w) => out.push_str(&format!(
                "worst_pair={} {}\nworst_pair_witness={}\nworst_pair_max_degree={}\n",
                d.label(w.pair.u),
                d.label(w.pair.v),
                d.label(w.pair.witness),
                w.max_degree
            )),
            None => out.push_str("worst_pair=none\n"),
        }
        out
    }
}

fn worst_pair(d: &Digraph, pairs: &[DominatingPair]) -> Option<WorstPair> {
    let mut worst: Option<WorstPair> = None;
    for &pair in pairs {
        let max_degree = d.total_degree(pair.u).max(d.total_degree(pair.v));
        if worst.is_none_or(|w| max_degree < w.max_degree) {
            worst = Some(WorstPair { pair, max_degree });
        }
    }
    worst
}

pub fn check_bk(d: &Digraph, k: i64) -> Result<ConditionReport, GraphError> {
    let a = d.require_bipartite()? as i64;
    let threshold = 2 * a - 2 + k;
    let pairs = d.dominating_pairs();
    let worst_pair = worst_pair(d, &pairs);
    Ok(ConditionReport {
        k,
        threshold,
        holds: worst_pair.is_none_or(|w| w.max_degree as i64 >= threshold),
        pairs_checked: pairs.len(),
        worst_pair,
    })
}

/// For every dominating pair, one member has degree `>= 2a - 1` and the
/// other `>= a + 1`.
pub fn check_two_sided(d: &Digraph) -> Result<bool, GraphError> {
    let a = d.require_bipartite()?;
    Ok(d.dominating_pairs().iter().all(|p| {
        let (du, dv) = (d.total_degree(p.u), d.total_degree(p.v));
        (du + 1 >= 2 * a && dv > a) || (dv + 1 >= 2 * a && du > a)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    T1_6,
    T1_7,
    T1_8,
    T1_9,
    T1_10,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::T1_6, Theorem::T1_7, Theorem::T1_8, Theorem::T1_9, Theorem::T1_10];

    pub fn label(self) -> &'static str {
        match self {
            Theorem::T1_6 => "1.6",
            Theorem::T1_7 => "1.7",
            Theorem::T1_8 => "1.8",
            Theorem::T1_9 => "1.9",
            Theorem::T1_10 => "1.10",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim_start_matches(['T', 't']).replace('_', ".");
        Theorem::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| format!("unknown theorem `{s}` (expected one of 1.6, 1.7, 1.8, 1.9, 1.10)"))
    }
}

/// A single hypothesis clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    BalancedBipartite,
    Strong,
    /// Order `2a >= 2 * min_a`.
    MinSideSize(usize),
    ConditionB(i64),
    TwoSidedDegree,
    NotDirectedCycle,
    HasCycle2aMinus2,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::BalancedBipartite => f.write_str("balanced bipartite"),
            Clause::Strong => f.write_str("strongly connected"),
            Clause::MinSideSize(a) => write!(f, "order 2a ≥ {}", 2 * a),
            Clause::ConditionB(k) => write!(f, "condition B_{k}"),
            Clause::TwoSidedDegree => f.write_str("two-sided degree condition"),
            Clause::NotDirectedCycle => f.write_str("not a directed cycle"),
            Clause::HasCycle2aMinus2 => f.write_str("contains a cycle of length 2a-2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub satisfied: bool,
    pub failures: Vec<Clause>,
}

impl HypothesisReport {
    pub fn render(&self) -> String {
        let mut out = format!("theorem={}\nhypotheses={}\n", self.theorem, if self.satisfied { "satisfied" } else { "not-met" });
        for f in &self.failures {
            out.push_str(&format!("failure={f}\n"));
        }
        out
    }
}

pub fn clauses(theorem: Theorem) -> Vec<Clause> {
    use Clause::*;
    match theorem {
        Theorem::T1_6 => vec![BalancedBipartite, Strong, MinSideSize(1), TwoSidedDegree],
        Theorem::T1_7 | Theorem::T1_8 => vec![BalancedBipartite, Strong, MinSideSize(4), ConditionB(1)],
        Theorem::T1_9 => vec![BalancedBipartite, Strong, MinSideSize(4), HasCycle2aMinus2, ConditionB(0)],
        Theorem::T1_10 => vec![BalancedBipartite, Strong, MinSideSize(4), NotDirectedCycle, ConditionB(1)],
    }
}

/// Whether `clause` holds for `d`; clauses that only make sense for
/// bipartite digraphs fail on general ones.
pub fn clause_holds(d: &Digraph, clause: Clause) -> bool {
    let a = d.side_size();
    match clause {
        Clause::BalancedBipartite => a.is_some(),
        Clause::Strong => d.is_strong(),
        Clause::MinSideSize(min) => a.is_some_and(|a| a >= min),
        Clause::ConditionB(k) => check_bk(d, k).is_ok_and(|r| r.holds),
        Clause::TwoSidedDegree => check_two_sided(d).unwrap_or(false),
        Clause::NotDirectedCycle => !d.is_directed_cycle(),
        Clause::HasCycle2aMinus2 => match a {
            Some(a) if a >= 2 => find_cycle_of_length(d, 2 * a - 2).is_ok_and(|c| c.is_some()),
            _ => false,
        },
    }
}

/// Evaluates every clause independently and lists all that fail.
pub fn check_theorem_hypotheses(d: &Digraph, theorem: Theorem) -> HypothesisReport {
    let failures: Vec<Clause> = clauses(theorem).into_iter().filter(|&c| !clause_holds(d, c)).collect();
    HypothesisReport { theorem, satisfied: failures.is_empty(), failures }
}

/// Short-circuiting form of [`check_theorem_hypotheses`], cheapest clauses first.
pub fn hypotheses_hold(d: &Digraph, theorem: Theorem) -> bool {
    let mut cs = clauses(theorem);
    cs.sort_by_key(|c| match c {
        Clause::BalancedBipartite | Clause::MinSideSize(_) => 0,
        Clause::ConditionB(_) | Clause::TwoSidedDegree => 1,
        Clause::Strong | Clause::NotDirectedCycle => 2,
        Clause::HasCycle2aMinus2 => 3,
    });
    cs.into_iter().all(|c| clause_holds(d, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn d8_satisfies_b1() {
        let d = generate(FamilySpec::D8).unwrap();
        let r = check_bk(&d, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.pairs_checked, 10);
        assert_eq!(r.threshold, 7);
        let w = r.worst_pair.unwrap();
        assert_eq!(w.max_degree, 7);
        assert_eq!((d.label(w.pair.u).to_string(), d.label(w.pair.v).to_string()), ("x0".into(), "x2".into()));
        assert!(!check_bk(&d, 2).unwrap().holds);
    }

    #[test]
    fn directed_cycle_is_vacuous() {
        let c8 = generate(FamilySpec::DirectedCycle { a: 4 }).unwrap();
        let r = check_bk(&c8, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.pairs_checked, 0);
        assert!(r.worst_pair.is_none());
        assert!(check_bk(&c8, 1000).unwrap().holds);
        assert_eq!(r.render(&c8), "k=1\nholds=true\npairs_checked=0\nworst_pair=none\n");
    }

    #[test]
    fn general_digraphs_are_rejected() {
        let d6 = generate(FamilySpec::D6).unwrap();
        assert_eq!(check_bk(&d6, 1), Err(GraphError::NotBipartite));
        let r = check_theorem_hypotheses(&d6, Theorem::T1_8);
        assert!(r.failures.contains(&Clause::BalancedBipartite));
    }

    #[test]
    fn hypotheses() {
        let d8 = generate(FamilySpec::D8).unwrap();
        assert!(check_theorem_hypotheses(&d8, Theorem::T1_7).satisfied);
        assert!(check_theorem_hypotheses(&d8, Theorem::T1_10).satisfied);
        assert!(check_theorem_hypotheses(&d8, Theorem::T1_9).satisfied);

        let c8 = generate(FamilySpec::DirectedCycle { a: 4 }).unwrap();
        assert!(check_theorem_hypotheses(&c8, Theorem::T1_8).satisfied);
        let r = check_theorem_hypotheses(&c8, Theorem::T1_10);
        assert_eq!(r.failures, vec![Clause::NotDirectedCycle]);
        let r = check_theorem_hypotheses(&c8, Theorem::T1_9);
        assert_eq!(r.failures, vec![Clause::HasCycle2aMinus2]);

        let k3 = generate(FamilySpec::CompleteBipartite { a: 3 }).unwrap();
        let r = check_theorem_hypotheses(&k3, Theorem::T1_8);
        assert!(!r.satisfied);
        assert_eq!(r.failures, vec![Clause::MinSideSize(4)]);
        assert_eq!(r.failures[0].to_string(), "order 2a ≥ 8");
        assert!(check_theorem_hypotheses(&k3, Theorem::T1_6).satisfied);
    }

    #[test]
    fn reports_every_failure() {
        let d = crate::random::random_bipartite(3, 0.0, 1).unwrap();
        let r = check_theorem_hypotheses(&d, Theorem::T1_9);
        assert_eq!(r.failures, vec![Clause::Strong, Clause::MinSideSize(4), Clause::HasCycle2aMinus2]);
    }

    #[test]
    fn theorem_names() {
        for t in Theorem::ALL {
            assert_eq!(t.label().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("T1_10".parse::<Theorem>().unwrap(), Theorem::T1_10);
        assert!("2.1".parse::<Theorem>().is_err());
    }
}
