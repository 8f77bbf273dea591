mod common;

use bipan::conditions::check_bk;
use bipan::cycles::{cycle_spectrum, find_bypass, find_cycle_of_length, DEFAULT_MAX_N};
use bipan::digraph::Digraph;
use bipan::families::{generate, FamilySpec};
use bipan::format::{parse, serialize};
use bipan::random::{random_bipartite, random_general};
use bipan::verify::iso_to_d8;
use proptest::prelude::*;

fn bipartite() -> impl Strategy<Value = Digraph> {
    (1usize..=5, 0.0f64..=1.0, any::<u64>()).prop_map(|(a, p, s)| random_bipartite(a, p, s).unwrap())
}

fn general() -> impl Strategy<Value = Digraph> {
    (2usize..=8, 0.0f64..=0.6, any::<u64>()).prop_map(|(n, p, s)| random_general(n, p, s).unwrap())
}

fn any_digraph() -> impl Strategy<Value = Digraph> {
    prop_oneof![bipartite(), general()]
}

fn assert_spectrum_matches(d: &Digraph) {
    let spectrum = cycle_spectrum(d, DEFAULT_MAX_N).unwrap();
    let oracle = common::naive_spectrum(d);
    let ours: Vec<(usize, Vec<usize>)> =
        spectrum.cycles.iter().map(|(&m, c)| (m, c.vertices().to_vec())).collect();
    let theirs: Vec<(usize, Vec<usize>)> = oracle.into_iter().collect();
    assert_eq!(ours, theirs, "spectrum mismatch on\n{}", serialize(d));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn spectrum_matches_oracle(d in any_digraph()) {
        assert_spectrum_matches(&d);
    }

    #[test]
    fn strong_matches_closure(d in any_digraph()) {
        prop_assert_eq!(d.is_strong(), common::naive_strong(&d));
    }

    #[test]
    fn dominating_pairs_match(d in any_digraph()) {
        let ours: Vec<_> = d.dominating_pairs().iter().map(|p| (p.u, p.v, p.witness)).collect();
        prop_assert_eq!(ours, common::naive_dominating_pairs(&d));
    }

    #[test]
    fn bk_matches_definition(d in bipartite(), k in -3i64..=3) {
        prop_assert_eq!(check_bk(&d, k).unwrap().holds, common::naive_bk(&d, k));
    }

    #[test]
    fn bk_is_monotone(d in bipartite(), k in -3i64..=3) {
        if check_bk(&d, k + 1).unwrap().holds {
            prop_assert!(check_bk(&d, k).unwrap().holds);
        }
    }

    #[test]
    fn degree_sums(d in any_digraph()) {
        let (mut outs, mut ins) = (0, 0);
        for v in 0..d.order() {
            let deg = d.degree(v).unwrap();
            prop_assert_eq!(deg.total, deg.out + deg.inn);
            prop_assert_eq!(deg.total, common::degree(&d, v));
            outs += deg.out;
            ins += deg.inn;
        }
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
    }

    #[test]
    fn serialize_round_trip(d in any_digraph()) {
        let text = serialize(&d);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert!(back.arcs().eq(d.arcs()));
        prop_assert_eq!(back.kind(), d.kind());
    }

    #[test]
    fn find_cycle_agrees_with_spectrum(d in any_digraph()) {
        let spectrum = cycle_spectrum(&d, DEFAULT_MAX_N).unwrap();
        for m in 2..=d.order() {
            let c = find_cycle_of_length(&d, m).unwrap();
            prop_assert_eq!(c.is_some(), spectrum.contains(m));
            if let Some(c) = c {
                prop_assert!(c.validate(&d).is_ok());
                prop_assert_eq!(c.len(), m);
            }
        }
    }

    #[test]
    fn bypass_matches_enumeration(a in 2usize..=4, p in 0.2f64..=0.9, seed in any::<u64>()) {
        let d = random_bipartite(a, p, seed).unwrap();
        let spectrum = cycle_spectrum(&d, DEFAULT_MAX_N).unwrap();
        for c in spectrum.cycles.values().filter(|c| c.len() < d.order()) {
            let all = common::naive_bypasses(&d, c.vertices());
            let best = all.iter().min_by_key(|(gap, path)| (*gap, path[0], path.clone()));
            let ours = find_bypass(&d, c).unwrap();
            match (ours, best) {
                (None, None) => {}
                (Some(b), Some((gap, path))) => {
                    prop_assert_eq!(b.gap, *gap);
                    prop_assert_eq!(b.path.vertices(), path.as_slice());
                }
                (ours, best) => prop_assert!(false, "bypass {:?} vs oracle {:?}", ours, best),
            }
        }
    }
}

#[test]
fn iso_matches_bijection_search() {
    let d8 = generate(FamilySpec::D8).unwrap();
    let mut rng_seed = 0u64;
    let mut checked = 0;
    // Side-respecting relabelings and side swaps of D(8).
    for swap in [false, true] {
        for shift in 0..4 {
            let perm: Vec<usize> = (0..8)
                .map(|v| {
                    let (side, i) = (v / 4, (v % 4 + shift) % 4);
                    4 * (side ^ swap as usize) + i
                })
                .collect();
            let h = d8.relabeled(&perm).unwrap();
            let w = iso_to_d8(&h).expect("relabeled D(8) is isomorphic");
            assert!(w.verify(&h));
            assert!(common::naive_isomorphic(&d8, &h));
            checked += 1;
        }
    }
    // One-arc perturbations and random a = 4 digraphs with 20 arcs.
    for (u, v) in d8.arcs().collect::<Vec<_>>() {
        let h = d8.without_arc(u, v);
        assert!(iso_to_d8(&h).is_none());
        assert!(!common::naive_isomorphic(&d8, &h));
    }
    while checked < 1000 {
        rng_seed += 1;
        let h = random_bipartite(4, 20.0 / 32.0, rng_seed).unwrap();
        if h.arc_count() != 20 {
            continue;
        }
        assert_eq!(iso_to_d8(&h).is_some(), common::naive_isomorphic(&d8, &h), "seed {rng_seed}");
        checked += 1;
    }
}

#[test]
fn families_match_oracle() {
    for spec in common::small_families() {
        let d = generate(spec).unwrap();
        assert_spectrum_matches(&d);
        assert_eq!(d.is_strong(), common::naive_strong(&d), "{spec}");
    }
}
