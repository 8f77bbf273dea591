//! Executable verdicts for the even-cycle theorems.
//!
//! A verdict first evaluates the theorem's hypotheses. When they hold it
//! produces a certificate for the conclusion, or a [`Conclusion::Violation`]
//! if no certificate exists (which would refute the theorem).

mod iso;
mod lemmas;
mod search;

use std::collections::BTreeMap;

pub use iso::{iso_to_d8, IsomorphismWitness};
pub use lemmas::{
    check_lemma_3_1, check_lemma_3_2, check_lemma_3_3, check_lemma_3_3_triple, check_lemma_3_4, Lemma, LemmaCheck,
};
pub use search::{
    search_counterexamples, sweep_slice, CellReport, ConfigError, SearchConfig, SearchReport, Target, Violation,
};

use crate::conditions::{check_theorem_hypotheses, HypothesisReport, Theorem};
use crate::cycles::{find_cycle_of_length, is_hamiltonian};
use crate::digraph::Digraph;
use crate::witness::Cycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conclusion {
    /// One witness per required length.
    Pancyclic(BTreeMap<usize, Cycle>),
    /// The digraph is itself a directed cycle, given as its Hamiltonian cycle.
    DirectedCycle(Cycle),
    D8Isomorphism(IsomorphismWitness),
    TwoAMinus2Cycle(Cycle),
    Hamiltonian(Cycle),
    Violation(String),
}

impl Conclusion {
    pub fn name(&self) -> &'static str {
        match self {
            Conclusion::Pancyclic(_) => "pancyclic",
            Conclusion::DirectedCycle(_) => "directed-cycle",
            Conclusion::D8Isomorphism(_) => "d8-isomorphism",
            Conclusion::TwoAMinus2Cycle(_) => "cycle-2a-2",
            Conclusion::Hamiltonian(_) => "hamiltonian",
            Conclusion::Violation(_) => "violation",
        }
    }

    /// Every cycle carried by the certificate.
    pub fn cycles(&self) -> Vec<&Cycle> {
        match self {
            Conclusion::Pancyclic(map) => map.values().collect(),
            Conclusion::DirectedCycle(c) | Conclusion::TwoAMinus2Cycle(c) | Conclusion::Hamiltonian(c) => vec![c],
            Conclusion::D8Isomorphism(_) | Conclusion::Violation(_) => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    HypothesesNotMet,
    Confirmed,
    Violation,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::HypothesesNotMet => "hypotheses-not-met",
            Outcome::Confirmed => "confirmed",
            Outcome::Violation => "violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub hypotheses: HypothesisReport,
    /// `None` exactly when the hypotheses fail.
    pub conclusion: Option<Conclusion>,
}

impl TheoremVerdict {
    pub fn outcome(&self) -> Outcome {
        match &self.conclusion {
            None => Outcome::HypothesesNotMet,
            Some(Conclusion::Violation(_)) => Outcome::Violation,
            Some(_) => Outcome::Confirmed,
        }
    }

    /// Certificate cycles all validate and an isomorphism witness maps arcs
    /// onto arcs.
    pub fn certificate_is_sound(&self, d: &Digraph) -> bool {
        match &self.conclusion {
            Some(Conclusion::D8Isomorphism(w)) => w.verify(d),
            Some(c) => c.cycles().iter().all(|cyc| cyc.validate(d).is_ok()),
            None => true,
        }
    }

    pub fn render(&self, d: &Digraph) -> String {
        let mut out = self.hypotheses.render();
        out.push_str(&format!("outcome={}\n", self.outcome().name()));
        let Some(conclusion) = &self.conclusion else {
            return out;
        };
        out.push_str(&format!("conclusion={}\n", conclusion.name()));
        match conclusion {
            Conclusion::Pancyclic(map) => {
                for (m, c) in map {
                    out.push_str(&format!("cycle_{m}={}\n", c.render(d)));
                }
            }
            Conclusion::DirectedCycle(c) | Conclusion::TwoAMinus2Cycle(c) | Conclusion::Hamiltonian(c) => {
                out.push_str(&format!("cycle_{}={}\n", c.len(), c.render(d)));
            }
            Conclusion::D8Isomorphism(w) => {
                out.push_str(&format!("isomorphism={}\nside_swap={}\n", w.render(d), w.side_swap));
            }
            Conclusion::Violation(details) => out.push_str(&format!("violation={details}\n")),
        }
        out
    }
}

fn verdict(d: &Digraph, theorem: Theorem, conclude: impl FnOnce(usize) -> Conclusion) -> TheoremVerdict {
    let hypotheses = check_theorem_hypotheses(d, theorem);
    let conclusion = if hypotheses.satisfied {
        Some(conclude(d.side_size().expect("hypotheses include bipartiteness")))
    } else {
        None
    };
    TheoremVerdict { theorem, hypotheses, conclusion }
}

fn cycle(d: &Digraph, m: usize) -> Option<Cycle> {
    find_cycle_of_length(d, m).ok().flatten()
}

/// Witnesses for `2, 4, .., 2k_max`, or the first missing length.
fn even_certificate(d: &Digraph, k_max: usize) -> Result<BTreeMap<usize, Cycle>, usize> {
    let mut map = BTreeMap::new();
    for k in 1..=k_max {
        match cycle(d, 2 * k) {
            Some(c) => {
                map.insert(2 * k, c);
            }
            None => return Err(2 * k),
        }
    }
    Ok(map)
}

/// Hamiltonian, or isomorphic to D(8).
pub fn verify_theorem_1_7(d: &Digraph) -> TheoremVerdict {
    verdict(d, Theorem::T1_7, |_| {
        if let Some(c) = is_hamiltonian(d) {
            Conclusion::Hamiltonian(c)
        } else if let Some(w) = iso_to_d8(d) {
            Conclusion::D8Isomorphism(w)
        } else {
            Conclusion::Violation("not Hamiltonian and not isomorphic to D(8)".into())
        }
    })
}

/// A cycle of length `2a - 2`, or `D` is a directed cycle.
pub fn verify_theorem_1_8(d: &Digraph) -> TheoremVerdict {
    verdict(d, Theorem::T1_8, |a| {
        if let Some(c) = cycle(d, 2 * a - 2) {
            Conclusion::TwoAMinus2Cycle(c)
        } else if d.is_directed_cycle() {
            Conclusion::DirectedCycle(is_hamiltonian(d).expect("a directed cycle is Hamiltonian"))
        } else {
            Conclusion::Violation(format!("no cycle of length {} and not a directed cycle", 2 * a - 2))
        }
    })
}

/// Cycles of every even length `2..=2a-2`.
pub fn verify_theorem_1_9(d: &Digraph) -> TheoremVerdict {
    verdict(d, Theorem::T1_9, |a| match even_certificate(d, a - 1) {
        Ok(map) => Conclusion::Pancyclic(map),
        Err(m) => Conclusion::Violation(format!("no cycle of length {m}")),
    })
}

/// Cycles of every even length `2..=2a`, or isomorphic to D(8).
pub fn verify_theorem_1_10(d: &Digraph) -> TheoremVerdict {
    verdict(d, Theorem::T1_10, |a| match even_certificate(d, a) {
        Ok(map) => Conclusion::Pancyclic(map),
        Err(m) => match iso_to_d8(d) {
            Some(w) => Conclusion::D8Isomorphism(w),
            None => Conclusion::Violation(format!("no cycle of length {m} and not isomorphic to D(8)")),
        },
    })
}

/// Dispatches to the verdict for `theorem`; `None` for theorems without one.
pub fn verify_theorem(d: &Digraph, theorem: Theorem) -> Option<TheoremVerdict> {
    match theorem {
        Theorem::T1_6 => None,
        Theorem::T1_7 => Some(verify_theorem_1_7(d)),
        Theorem::T1_8 => Some(verify_theorem_1_8(d)),
        Theorem::T1_9 => Some(verify_theorem_1_9(d)),
        Theorem::T1_10 => Some(verify_theorem_1_10(d)),
    }
}
