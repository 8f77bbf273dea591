//! `bipan` command-line front end.
//!
//! Exit codes: 0 success, 1 hypotheses (or a checked condition) not met,
//! 2 violation found, 64 usage error, 65 input data error, 66 I/O error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bipan::conditions::{check_bk, check_theorem_hypotheses, Theorem};
use bipan::cycles::{
    cycle_spectrum, cycles_through_vertex, find_bypass, find_cycle_of_length, is_hamiltonian,
    longest_non_hamiltonian_cycle, DEFAULT_MAX_N,
};
use bipan::digraph::Digraph;
use bipan::families::{generate, FamilyName, FamilySpec};
use bipan::format::{parse, serialize};
use bipan::random::random_bipartite;
use bipan::verify::{
    check_lemma_3_1, check_lemma_3_2, check_lemma_3_3, check_lemma_3_4, iso_to_d8, search_counterexamples,
    sweep_slice, verify_theorem, Conclusion, Lemma, Outcome, SearchConfig, SearchReport, Target,
};
use bipan::witness::{parse_sequence, Cycle};

const EXIT_NOT_MET: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 66;

#[derive(Parser)]
#[command(name = "bipan", version, about = "Even cycles and degree conditions in balanced bipartite digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Digraph file in the canonical text format, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Emit JSON instead of key-value text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical serialization of a family member or random digraph.
    Gen {
        /// d8, d6, d6prime, cycle, complete, hmm, hm-m1-1, h2m, random
        #[arg(long)]
        family: String,
        /// Side size for cycle, complete and random.
        #[arg(long)]
        a: Option<usize>,
        /// Family parameter m for the H-families.
        #[arg(long)]
        m: Option<usize>,
        /// Arc probability for random.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// H(2m): include both arcs xy and yx.
        #[arg(long)]
        both_arcs: bool,
        /// H(m,m-1,1): use N+(a) = B instead of N-(a) = B.
        #[arg(long)]
        out_orientation: bool,
    },
    /// Check condition B_k and/or the hypotheses of a theorem.
    Check {
        #[command(flatten)]
        io: Input,
        #[arg(long, allow_negative_numbers = true)]
        bk: Option<i64>,
        #[arg(long)]
        theorem: Option<String>,
        /// Also list every dominating pair.
        #[arg(long)]
        pairs: bool,
    },
    /// Cycle queries: spectrum (default), exact length, Hamiltonicity, bypasses.
    Cycles {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long)]
        longest_non_hamiltonian: bool,
        /// Minimum-gap bypass of this cycle, e.g. "x1 y1 x2 y3 x3 y0".
        #[arg(long)]
        bypass: Option<String>,
        /// Cycles of every even length through this vertex, inside --cycle.
        #[arg(long, requires = "cycle")]
        through: Option<String>,
        #[arg(long)]
        cycle: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Evaluate a theorem or lemma on one digraph and print its certificate.
    Certify {
        #[command(flatten)]
        io: Input,
        #[arg(long, required_unless_present = "lemma", conflicts_with = "lemma")]
        theorem: Option<String>,
        #[arg(long)]
        lemma: Option<String>,
        /// Seed for the cycles sampled by lemma 3.3.
        #[arg(long, default_value_t = 0)]
        cycle_seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Seeded randomized search (or exhaustive sweep) for counterexamples.
    Search {
        /// 1.7, 1.8, 1.9, 1.10, lemma3.1, lemma3.2, lemma3.3, lemma3.4
        #[arg(long)]
        target: String,
        #[arg(long = "a", default_values_t = [4usize, 5, 6])]
        a_values: Vec<usize>,
        #[arg(long = "p", default_values_t = [0.3f64, 0.5, 0.7])]
        p_values: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Write each violation as a digraph file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Sweep every subset of --free-arc on top of this base digraph.
        #[arg(long)]
        base: Option<String>,
        /// Free arc for a sweep, e.g. "x0 y1"; repeatable.
        #[arg(long = "free-arc", requires = "base")]
        free_arcs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Test isomorphism with D(8).
    IsoD8 {
        #[command(flatten)]
        io: Input,
    },
}

/// Failure with its exit code and message.
struct Fail(u8, String);

impl Fail {
    fn usage(msg: impl Into<String>) -> Self {
        Fail(EXIT_USAGE, msg.into())
    }

    fn data(msg: impl ToString) -> Self {
        Fail(EXIT_DATA, msg.to_string())
    }
}

type CmdResult = Result<(String, u8), Fail>;

fn read_input(path: &str) -> Result<Digraph, Fail> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Fail(EXIT_IO, format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Fail(EXIT_IO, format!("{path}: {e}")))?
    };
    parse(&text).map_err(|e| Fail::data(format!("{path}: {e}")))
}

fn cycle_arg(d: &Digraph, text: &str) -> Result<Cycle, Fail> {
    let vs = parse_sequence(d, text).map_err(Fail::data)?;
    Cycle::checked(d, vs).map_err(|e| Fail::data(format!("cycle `{text}`: {e}")))
}

fn emit(json: bool, text: String, value: Value) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn cycle_json(d: &Digraph, c: &Cycle) -> Value {
    json!(c.vertices().iter().map(|&v| d.label(v).to_string()).collect::<Vec<_>>())
}

fn gen(
    family: &str,
    a: Option<usize>,
    m: Option<usize>,
    p: Option<f64>,
    seed: u64,
    both_arcs: bool,
    out_orientation: bool,
) -> CmdResult {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Fail::usage(format!("--family {family} needs --{name}")));
    if family == "random" {
        let a = need(a, "a")?;
        let p = p.ok_or_else(|| Fail::usage("--family random needs --p"))?;
        let d = random_bipartite(a, p, seed).map_err(|e| Fail::usage(e.to_string()))?;
        return Ok((serialize(&d), 0));
    }
    let spec = match family.parse::<FamilyName>().map_err(|e| Fail::usage(e.to_string()))? {
        FamilyName::D8 => FamilySpec::D8,
        FamilyName::D6 => FamilySpec::D6,
        FamilyName::D6Prime => FamilySpec::D6Prime,
        FamilyName::Cycle => FamilySpec::DirectedCycle { a: need(a, "a")? },
        FamilyName::Complete => FamilySpec::CompleteBipartite { a: need(a, "a")? },
        FamilyName::Hmm => FamilySpec::Hmm { m: need(m, "m")? },
        FamilyName::HmM1One => FamilySpec::HmM1One { m: need(m, "m")?, out_orientation },
        FamilyName::H2m => FamilySpec::H2m { m: need(m, "m")?, both_arcs },
    };
    let d = generate(spec).map_err(|e| Fail::usage(e.to_string()))?;
    Ok((serialize(&d), 0))
}

fn check(io: &Input, bk: Option<i64>, theorem: Option<&str>, pairs: bool) -> CmdResult {
    if bk.is_none() && theorem.is_none() && !pairs {
        return Err(Fail::usage("check needs --bk <k>, --theorem <t> or --pairs"));
    }
    let theorem = theorem.map(|t| t.parse::<Theorem>().map_err(Fail::usage)).transpose()?;
    let d = read_input(&io.input)?;
    let mut text = String::new();
    let mut value = json!({});
    let mut code = 0;
    if pairs {
        let list = d.dominating_pairs();
        text.push_str(&format!("dominating_pairs={}\n", list.len()));
        for p in &list {
            text.push_str(&format!("pair={} {} witness={}\n", d.label(p.u), d.label(p.v), d.label(p.witness)));
        }
        value["dominating_pairs"] = json!(list
            .iter()
            .map(|p| json!({"u": d.label(p.u).to_string(), "v": d.label(p.v).to_string(), "witness": d.label(p.witness).to_string()}))
            .collect::<Vec<_>>());
    }
    if let Some(k) = bk {
        let report = check_bk(&d, k).map_err(Fail::data)?;
        text.push_str(&report.render(&d));
        if !report.holds {
            code = EXIT_NOT_MET;
        }
        value["condition"] = json!({
            "k": report.k,
            "holds": report.holds,
            "pairs_checked": report.pairs_checked,
            "worst_pair": report.worst_pair.map(|w| json!({
                "u": d.label(w.pair.u).to_string(),
                "v": d.label(w.pair.v).to_string(),
                "witness": d.label(w.pair.witness).to_string(),
                "max_degree": w.max_degree,
            })),
        });
    }
    if let Some(t) = theorem {
        let report = check_theorem_hypotheses(&d, t);
        text.push_str(&report.render());
        if !report.satisfied {
            code = EXIT_NOT_MET;
        }
        value["hypotheses"] = json!({
            "theorem": t.label(),
            "satisfied": report.satisfied,
            "failures": report.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        });
    }
    Ok((emit(io.json, text, value), code))
}

#[allow(clippy::too_many_arguments)]
fn cycles(
    io: &Input,
    length: Option<usize>,
    hamiltonian: bool,
    longest: bool,
    bypass: Option<&str>,
    through: Option<&str>,
    cycle: Option<&str>,
    max_n: usize,
) -> CmdResult {
    let d = read_input(&io.input)?;
    let mut text = format!("order={}\n", d.order());
    let mut value = json!({ "order": d.order() });
    let line = |name: &str, c: Option<&Cycle>| match c {
        Some(c) => format!("{name}={}\n", c.render(&d)),
        None => format!("{name}=none\n"),
    };
    if let Some(m) = length {
        let c = find_cycle_of_length(&d, m).map_err(Fail::data)?;
        text.push_str(&line(&format!("cycle_{m}"), c.as_ref()));
        value["cycle"] = json!({ "length": m, "witness": c.as_ref().map(|c| cycle_json(&d, c)) });
    } else if hamiltonian {
        let c = is_hamiltonian(&d);
        text.push_str(&format!("hamiltonian={}\n", c.is_some()));
        text.push_str(&line("cycle", c.as_ref()));
        value["hamiltonian"] = json!(c.as_ref().map(|c| cycle_json(&d, c)));
    } else if longest {
        let c = longest_non_hamiltonian_cycle(&d, max_n).map_err(Fail::data)?;
        text.push_str(&format!("length={}\n", c.as_ref().map_or(0, Cycle::len)));
        text.push_str(&line("cycle", c.as_ref()));
        value["longest_non_hamiltonian"] = json!(c.as_ref().map(|c| cycle_json(&d, c)));
    } else if let Some(host) = bypass {
        let host = cycle_arg(&d, host)?;
        let b = find_bypass(&d, &host).map_err(Fail::data)?;
        match &b {
            Some(b) => text.push_str(&format!("bypass={}\ngap={}\n", b.path.render(&d), b.gap)),
            None => text.push_str("bypass=none\n"),
        }
        value["bypass"] = json!(b.as_ref().map(|b| json!({
            "path": b.path.vertices().iter().map(|&v| d.label(v).to_string()).collect::<Vec<_>>(),
            "gap": b.gap,
        })));
    } else if let Some(x) = through {
        let host = cycle_arg(&d, cycle.expect("clap enforces --cycle"))?;
        let x = x.parse().and_then(|v| d.index_of(v)).map_err(Fail::data)?;
        let found = cycles_through_vertex(&d, &host, x).map_err(Fail::data)?;
        let mut entries = serde_json::Map::new();
        for m in (2..=host.len()).step_by(2) {
            text.push_str(&line(&format!("cycle_{m}"), found.get(&m)));
            entries.insert(m.to_string(), json!(found.get(&m).map(|c| cycle_json(&d, c))));
        }
        value["through"] = Value::Object(entries);
    } else {
        let spectrum = cycle_spectrum(&d, max_n).map_err(Fail::data)?;
        let lengths: Vec<String> = spectrum.lengths().iter().map(|l| l.to_string()).collect();
        text.push_str(&format!("lengths={}\n", lengths.join(" ")));
        let mut entries = serde_json::Map::new();
        for (m, c) in &spectrum.cycles {
            text.push_str(&line(&format!("cycle_{m}"), Some(c)));
            entries.insert(m.to_string(), cycle_json(&d, c));
        }
        value["spectrum"] = Value::Object(entries);
    }
    Ok((emit(io.json, text, value), 0))
}

fn certify(io: &Input, theorem: Option<&str>, lemma: Option<&str>, cycle_seed: u64, max_n: usize) -> CmdResult {
    if let Some(t) = theorem {
        let t: Theorem = t.parse().map_err(Fail::usage)?;
        let d = read_input(&io.input)?;
        let verdict = verify_theorem(&d, t).ok_or_else(|| Fail::usage(format!("theorem {t} has no verdict")))?;
        let code = match verdict.outcome() {
            Outcome::Confirmed => 0,
            Outcome::HypothesesNotMet => EXIT_NOT_MET,
            Outcome::Violation => EXIT_VIOLATION,
        };
        let conclusion = verdict.conclusion.as_ref().map(|c| {
            let mut v = json!({ "kind": c.name() });
            match c {
                Conclusion::Pancyclic(map) => {
                    v["cycles"] = Value::Object(map.iter().map(|(m, c)| (m.to_string(), cycle_json(&d, c))).collect());
                }
                Conclusion::DirectedCycle(c) | Conclusion::TwoAMinus2Cycle(c) | Conclusion::Hamiltonian(c) => {
                    v["cycle"] = cycle_json(&d, c);
                }
                Conclusion::D8Isomorphism(w) => {
                    v["mapping"] = json!((0..8).map(|i| d.label(w.mapping[i]).to_string()).collect::<Vec<_>>());
                    v["side_swap"] = json!(w.side_swap);
                }
                Conclusion::Violation(details) => v["details"] = json!(details),
            }
            v
        });
        let value = json!({
            "theorem": t.label(),
            "hypotheses": {
                "satisfied": verdict.hypotheses.satisfied,
                "failures": verdict.hypotheses.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            },
            "outcome": verdict.outcome().name(),
            "conclusion": conclusion,
        });
        return Ok((emit(io.json, verdict.render(&d), value), code));
    }
    let lemma: Lemma = lemma.expect("clap enforces --theorem or --lemma").parse().map_err(Fail::usage)?;
    let d = read_input(&io.input)?;
    let check = match lemma {
        Lemma::L3_1 => check_lemma_3_1(&d, max_n),
        Lemma::L3_2 => check_lemma_3_2(&d),
        Lemma::L3_3 => check_lemma_3_3(&d, cycle_seed),
        Lemma::L3_4 => check_lemma_3_4(&d, max_n),
    }
    .map_err(Fail::data)?;
    let code = if !check.passed() {
        EXIT_VIOLATION
    } else if check.qualifying == 0 {
        EXIT_NOT_MET
    } else {
        0
    };
    let value = json!({
        "lemma": lemma.label(),
        "qualifying": check.qualifying,
        "premise_hits": check.premise_hits,
        "violations": check.failures,
    });
    Ok((emit(io.json, check.render(lemma), value), code))
}

fn report_json(r: &SearchReport) -> Value {
    json!({
        "target": r.target.to_string(),
        "seed": r.seed,
        "cells": r.cells.iter().map(|c| json!({
            "a": c.a,
            "p": c.p,
            "samples": c.samples,
            "qualifying": c.qualifying,
            "premise_hits": c.premise_hits,
            "violations": c.violations.len(),
        })).collect::<Vec<_>>(),
        "total_samples": r.samples(),
        "total_qualifying": r.qualifying(),
        "total_premise_hits": r.premise_hits(),
        "total_violations": r.violation_count(),
        "violations": r.violations().map(|v| json!({
            "a": v.a,
            "sample": v.sample,
            "seed": v.seed,
            "details": v.details,
            "repro": v.repro,
            "digraph": v.serialization,
        })).collect::<Vec<_>>(),
    })
}

fn search(cmd: &Command) -> CmdResult {
    let Command::Search { target, a_values, p_values, samples, seed, max_n, out, threads, base, free_arcs, json } = cmd else {
        unreachable!("dispatched on Command::Search");
    };
    let target: Target = target.parse().map_err(Fail::usage)?;
    if let Some(n) = threads {
        // Only the first configuration of the global pool takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(*n).build_global();
    }
    let report = if let Some(path) = base {
        let d = read_input(path)?;
        let free = free_arcs
            .iter()
            .map(|s| match parse_sequence(&d, s).map_err(Fail::data)?.as_slice() {
                &[u, v] => Ok((u, v)),
                _ => Err(Fail::usage(format!("free arc `{s}` must name two vertices"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        sweep_slice(&d, &free, target, *max_n).map_err(|e| Fail::usage(e.to_string()))?
    } else {
        let cfg = SearchConfig {
            max_n: *max_n,
            violation_dir: out.clone(),
            ..SearchConfig::new(target, a_values.clone(), p_values.clone(), *samples, *seed)
        };
        search_counterexamples(&cfg).map_err(|e| Fail::usage(e.to_string()))?
    };
    eprintln!("elapsed_ms={}", report.elapsed.as_millis());
    let code = if report.violation_count() > 0 { EXIT_VIOLATION } else { 0 };
    Ok((emit(*json, report.render(), report_json(&report)), code))
}

fn iso(io: &Input) -> CmdResult {
    let d = read_input(&io.input)?;
    let w = iso_to_d8(&d);
    let mut text = format!("isomorphic={}\n", w.is_some());
    if let Some(w) = &w {
        text.push_str(&format!("isomorphism={}\nside_swap={}\n", w.render(&d), w.side_swap));
    }
    let value = match &w {
        Some(w) => json!({
            "isomorphic": true,
            "mapping": (0..8).map(|v| (d.label(v).to_string(), json!(d.label(w.mapping[v]).to_string()))).collect::<serde_json::Map<_, _>>(),
            "side_swap": w.side_swap,
        }),
        None => json!({ "isomorphic": false }),
    };
    Ok((emit(io.json, text, value), 0))
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Gen { family, a, m, p, seed, both_arcs, out_orientation } => {
            gen(family, *a, *m, *p, *seed, *both_arcs, *out_orientation)
        }
        Command::Check { io, bk, theorem, pairs } => check(io, *bk, theorem.as_deref(), *pairs),
        Command::Cycles { io, length, hamiltonian, longest_non_hamiltonian, bypass, through, cycle, max_n } => cycles(
            io,
            *length,
            *hamiltonian,
            *longest_non_hamiltonian,
            bypass.as_deref(),
            through.as_deref(),
            cycle.as_deref(),
            *max_n,
        ),
        Command::Certify { io, theorem, lemma, cycle_seed, max_n } => {
            certify(io, theorem.as_deref(), lemma.as_deref(), *cycle_seed, *max_n)
        }
        cmd @ Command::Search { .. } => search(cmd),
        Command::IsoD8 { io } => iso(io),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            ExitCode::from(code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("bipan: {msg}");
            ExitCode::from(code)
        }
    }
}
