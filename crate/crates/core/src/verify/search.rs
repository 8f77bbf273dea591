//! Seeded randomized and exhaustive searches for counterexamples.
//!
//! Every sample owns a seed derived from the run seed and its grid position,
//! so results do not depend on scheduling: workers evaluate samples in any
//! order and their tallies are merged, violations sorted by position.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use super::lemmas::{check_lemma_3_1, check_lemma_3_2, check_lemma_3_3, check_lemma_3_4, Lemma, LemmaCheck};
use super::{verify_theorem, Outcome};
use crate::bitset;
use crate::conditions::{hypotheses_hold, Theorem};
use crate::cycles::DEFAULT_MAX_N;
use crate::digraph::{Digraph, MAX_VERTICES};
use crate::format::serialize;
use crate::random::{derive_seed, random_bipartite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad search configuration: {0}")]
pub struct ConfigError(pub String);

/// Claim under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Theorem(Theorem),
    Lemma(Lemma),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Theorem(t) => write!(f, "theorem {t}"),
            Target::Lemma(l) => write!(f, "lemma {l}"),
        }
    }
}

impl FromStr for Target {
    type Err = String;

    /// `1.10`, `theorem1.10`, `lemma3.4`, `3.4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let s = s.replace(' ', "");
        if let Some(rest) = s.strip_prefix("lemma") {
            return rest.parse().map(Target::Lemma);
        }
        let rest = s.strip_prefix("theorem").unwrap_or(&s);
        if rest.starts_with("3.") {
            return rest.parse().map(Target::Lemma);
        }
        let theorem: Theorem = rest.parse()?;
        if theorem == Theorem::T1_6 {
            return Err("theorem 1.6 has no verdict to search against".into());
        }
        Ok(Target::Theorem(theorem))
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub target: Target,
    pub a_values: Vec<usize>,
    pub p_values: Vec<f64>,
    /// Samples per `(a, p)` cell.
    pub samples: u64,
    pub seed: u64,
    pub max_n: usize,
    /// Directory receiving one file per violation.
    pub violation_dir: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(target: Target, a_values: Vec<usize>, p_values: Vec<f64>, samples: u64, seed: u64) -> Self {
        SearchConfig { target, a_values, p_values, samples, seed, max_n: DEFAULT_MAX_N, violation_dir: None }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.a_values.is_empty() || self.p_values.is_empty() {
            return Err(ConfigError("need at least one side size and one probability".into()));
        }
        if let Some(&a) = self.a_values.iter().find(|&&a| a == 0 || 2 * a > self.max_n.min(MAX_VERTICES)) {
            return Err(ConfigError(format!("side size {a} outside [1, {}]", self.max_n.min(MAX_VERTICES) / 2)));
        }
        if let Some(p) = self.p_values.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(ConfigError(format!("probability {p} outside [0, 1]")));
        }
        if let Target::Theorem(Theorem::T1_6) = self.target {
            return Err(ConfigError("theorem 1.6 has no verdict to search against".into()));
        }
        Ok(())
    }
}

/// A hypothesis-satisfying sample whose conclusion failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub a: usize,
    pub p: Option<f64>,
    pub sample: u64,
    pub seed: u64,
    pub details: String,
    pub serialization: String,
    pub repro: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellReport {
    pub a: usize,
    /// `None` for exhaustive sweeps.
    pub p: Option<f64>,
    pub samples: u64,
    pub qualifying: u64,
    pub premise_hits: u64,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub target: Target,
    pub seed: u64,
    pub cells: Vec<CellReport>,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn samples(&self) -> u64 {
        self.cells.iter().map(|c| c.samples).sum()
    }

    pub fn qualifying(&self) -> u64 {
        self.cells.iter().map(|c| c.qualifying).sum()
    }

    pub fn premise_hits(&self) -> u64 {
        self.cells.iter().map(|c| c.premise_hits).sum()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.cells.iter().flat_map(|c| c.violations.iter())
    }

    pub fn violation_count(&self) -> usize {
        self.cells.iter().map(|c| c.violations.len()).sum()
    }

    /// Stable key-value text; excludes wall-clock time.
    pub fn render(&self) -> String {
        let mut out = format!("target={}\nseed={}\n", self.target, self.seed);
        for c in &self.cells {
            let p = c.p.map_or("sweep".to_string(), |p| p.to_string());
            out.push_str(&format!(
                "cell a={} p={} samples={} qualifying={} premise_hits={} violations={}\n",
                c.a,
                p,
                c.samples,
                c.qualifying,
                c.premise_hits,
                c.violations.len()
            ));
        }
        out.push_str(&format!(
            "total_samples={}\ntotal_qualifying={}\ntotal_premise_hits={}\ntotal_violations={}\n",
            self.samples(),
            self.qualifying(),
            self.premise_hits(),
            self.violation_count()
        ));
        for v in self.violations() {
            out.push_str(&format!("violation a={} sample={} seed={} details={}\n", v.a, v.sample, v.seed, v.details));
            out.push_str(&format!("repro={}\n", v.repro));
        }
        out
    }
}

#[derive(Debug, Default)]
struct Tally {
    qualifying: u64,
    premise_hits: u64,
    violations: Vec<(u64, String, u64)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.qualifying += other.qualifying;
        self.premise_hits += other.premise_hits;
        self.violations.extend(other.violations);
        self
    }
}

/// Evaluates one digraph; `aux_seed` drives any random choices inside the check.
fn evaluate(d: &Digraph, target: Target, max_n: usize, aux_seed: u64) -> Result<LemmaCheck, String> {
    let err = |e: crate::error::EngineError| e.to_string();
    match target {
        Target::Theorem(theorem) => {
            let mut out = LemmaCheck::default();
            if !hypotheses_hold(d, theorem) {
                return Ok(out);
            }
            let verdict = verify_theorem(d, theorem).ok_or("theorem has no verdict")?;
            if verdict.outcome() == Outcome::HypothesesNotMet {
                return Ok(out);
            }
            out.qualifying = 1;
            if matches!(verdict.conclusion, Some(super::Conclusion::D8Isomorphism(_))) {
                out.premise_hits = 1;
            }
            if let Some(super::Conclusion::Violation(details)) = &verdict.conclusion {
                out.failures.push(details.clone());
            } else if !verdict.certificate_is_sound(d) {
                out.failures.push("certificate failed validation".into());
            }
            Ok(out)
        }
        Target::Lemma(Lemma::L3_1) => check_lemma_3_1(d, max_n).map_err(err),
        Target::Lemma(Lemma::L3_2) => check_lemma_3_2(d).map_err(err),
        Target::Lemma(Lemma::L3_3) => check_lemma_3_3(d, aux_seed).map_err(err),
        Target::Lemma(Lemma::L3_4) => check_lemma_3_4(d, max_n).map_err(err),
    }
}

fn certify_flag(target: Target) -> String {
    match target {
        Target::Theorem(t) => format!("--theorem {t}"),
        Target::Lemma(l) => format!("--lemma {l}"),
    }
}

fn aux_seed(sample_seed: u64) -> u64 {
    derive_seed(sample_seed, &[1])
}

fn tally_one(d: &Digraph, cfg: &SearchConfig, index: u64, sample_seed: u64) -> Tally {
    match evaluate(d, cfg.target, cfg.max_n, aux_seed(sample_seed)) {
        Ok(check) => Tally {
            qualifying: check.qualifying,
            premise_hits: check.premise_hits,
            violations: check.failures.into_iter().map(|f| (index, f, sample_seed)).collect(),
        },
        Err(e) => Tally { violations: vec![(index, format!("evaluation error: {e}"), sample_seed)], ..Tally::default() },
    }
}

fn persist(cfg: &SearchConfig, v: &Violation) {
    let Some(dir) = &cfg.violation_dir else {
        return;
    };
    let name = format!("{}-a{}-seed{}.digraph", cfg.target.to_string().replace(' ', "-"), v.a, v.seed);
    let body = format!("# {}\n# repro: {}\n{}", v.details.replace('\n', " "), v.repro, v.serialization);
    let written = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(dir.join(&name), body));
    if let Err(e) = written {
        eprintln!("could not persist violation {name}: {e}");
    }
}

/// Samples `cfg.samples` digraphs per `(a, p)` cell and checks the target on
/// every hypothesis-satisfying one.
pub fn search_counterexamples(cfg: &SearchConfig) -> Result<SearchReport, ConfigError> {
    cfg.validate()?;
    let started = Instant::now();
    let mut cells = Vec::new();
    for &a in &cfg.a_values {
        for (pi, &p) in cfg.p_values.iter().enumerate() {
            let tally = (0..cfg.samples)
                .into_par_iter()
                .map(|i| {
                    let seed = derive_seed(cfg.seed, &[a as u64, pi as u64, i]);
                    let d = random_bipartite(a, p, seed).expect("validated parameters");
                    tally_one(&d, cfg, i, seed)
                })
                .reduce(Tally::default, Tally::merge);
            let mut raw = tally.violations;
            raw.sort_by_key(|(i, _, _)| *i);
            let violations: Vec<Violation> = raw
                .into_iter()
                .map(|(sample, details, seed)| {
                    let d = random_bipartite(a, p, seed).expect("validated parameters");
                    let mut repro = format!("bipan gen --family random --a {a} --p {p} --seed {seed} | bipan certify {} -", certify_flag(cfg.target));
                    if cfg.target == Target::Lemma(Lemma::L3_3) {
                        repro.push_str(&format!(" --cycle-seed {}", aux_seed(seed)));
                    }
                    Violation { a, p: Some(p), sample, seed, details, serialization: serialize(&d), repro }
                })
                .collect();
            for v in &violations {
                persist(cfg, v);
            }
            cells.push(CellReport {
                a,
                p: Some(p),
                samples: cfg.samples,
                qualifying: tally.qualifying,
                premise_hits: tally.premise_hits,
                violations,
            });
        }
    }
    Ok(SearchReport { target: cfg.target, seed: cfg.seed, cells, elapsed: started.elapsed() })
}

/// Largest number of free arcs an exhaustive sweep accepts.
pub const MAX_FREE_ARCS: usize = 26;

/// Checks the target on `base` plus every subset of `free` arcs.
pub fn sweep_slice(
    base: &Digraph,
    free: &[(usize, usize)],
    target: Target,
    max_n: usize,
) -> Result<SearchReport, ConfigError> {
    let a = base.side_size().ok_or_else(|| ConfigError("sweeps need a bipartite base digraph".into()))?;
    if free.len() > MAX_FREE_ARCS {
        return Err(ConfigError(format!("{} free arcs exceeds the sweep limit {MAX_FREE_ARCS}", free.len())));
    }
    for (i, &(u, v)) in free.iter().enumerate() {
        if free[..i].contains(&(u, v)) {
            return Err(ConfigError(format!("free arc {} {} listed twice", base.label(u), base.label(v))));
        }
        base.with_arc(u, v).map_err(|e| ConfigError(format!("free arc rejected: {e}")))?;
    }
    if base.order() > max_n {
        return Err(ConfigError(format!("order {} exceeds the search bound {max_n}", base.order())));
    }
    let started = Instant::now();
    let build = |mask: u64| {
        let extra = bitset::members(mask).map(|i| free[i]);
        Digraph::from_index_arcs(base.kind(), base.arcs().chain(extra)).expect("free arcs were validated")
    };
    let total = 1u64 << free.len();
    let tally = (0..total)
        .into_par_iter()
        .map(|mask| {
            let d = build(mask);
            let cfg = SearchConfig { max_n, ..SearchConfig::new(target, vec![a], vec![], 0, 0) };
            tally_one(&d, &cfg, mask, mask)
        })
        .reduce(Tally::default, Tally::merge);
    let mut raw = tally.violations;
    raw.sort_by_key(|(i, _, _)| *i);
    let violations = raw
        .into_iter()
        .map(|(mask, details, _)| {
            let text = serialize(&build(mask));
            Violation {
                a,
                p: None,
                sample: mask,
                seed: mask,
                details,
                repro: format!("bipan certify {} <file holding the serialization below>", certify_flag(target)),
                serialization: text,
            }
        })
        .collect();
    Ok(SearchReport {
        target,
        seed: 0,
        cells: vec![CellReport {
            a,
            p: None,
            samples: total,
            qualifying: tally.qualifying,
            premise_hits: tally.premise_hits,
            violations,
        }],
        elapsed: started.elapsed(),
    })
}
