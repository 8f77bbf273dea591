mod common;

use bipan::families::generate;
use bipan::format::{parse, serialize};
use bipan::random::random_bipartite;

use common::{golden, GOLDENS};

#[test]
fn family_outputs_are_byte_identical() {
    for &(name, spec) in GOLDENS {
        let d = generate(spec).unwrap();
        assert_eq!(serialize(&d), golden(name), "{spec}");
    }
}

#[test]
fn goldens_parse_back() {
    for &(name, spec) in GOLDENS {
        let d = parse(&golden(name)).unwrap();
        assert_eq!(d, generate(spec).unwrap(), "{name}");
    }
}

#[test]
fn sampler_is_stable() {
    let d = random_bipartite(4, 0.5, 7).unwrap();
    assert_eq!(serialize(&d), golden("random_a4_p05_s7.txt"));
}

#[test]
fn d8_golden_matches_definition() {
    // Arcs y0x1, y1x0, x2y3, x3y2 plus the 2-cycles xi<->yi, y0<->x2,
    // y0<->x3, y1<->x2, y1<->x3, written out by hand.
    let mut arcs = vec!["y0 x1", "y1 x0", "x2 y3", "x3 y2"];
    let two_cycles = [("x0", "y0"), ("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x2", "y0"), ("x3", "y0"), ("x2", "y1"), ("x3", "y1")];
    let owned: Vec<String> = two_cycles.iter().flat_map(|(x, y)| [format!("{x} {y}"), format!("{y} {x}")]).collect();
    arcs.extend(owned.iter().map(String::as_str));
    arcs.sort_by_key(|l| (l.starts_with('y'), l.to_string()));
    let expected = format!("bipartite a=4\n{}\n", arcs.join("\n"));
    assert_eq!(golden("d8.txt"), expected);
}
