use std::ffi::{CStr, CString};
use std::ptr;

use bipan_ffi::*;

fn family(name: &str, param: u32, flag: bool) -> *mut BipanDigraph {
    let name = CString::new(name).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { bipan_digraph_family(name.as_ptr(), param, flag, &mut d) }, BipanStatus::Ok);
    assert!(!d.is_null());
    d
}

fn last_error() -> String {
    let p = bipan_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn d8_round_trip_and_queries() {
    unsafe {
        let d8 = family("d8", 0, false);
        assert_eq!((bipan_digraph_order(d8), bipan_digraph_arc_count(d8)), (8, 20));

        let mut text = ptr::null_mut();
        assert_eq!(bipan_digraph_serialize(d8, &mut text), BipanStatus::Ok);
        let owned = CStr::from_ptr(text).to_str().unwrap().to_owned();
        assert!(owned.starts_with("bipartite a=4\nx0 y0\n"));
        let mut back = ptr::null_mut();
        assert_eq!(bipan_digraph_parse(text, &mut back), BipanStatus::Ok);
        bipan_string_free(text);
        assert_eq!(bipan_digraph_arc_count(back), 20);
        bipan_digraph_free(back);

        let (mut holds, mut pairs) = (false, 0usize);
        assert_eq!(bipan_check_bk(d8, 1, &mut holds, &mut pairs), BipanStatus::Ok);
        assert!(holds);
        assert_eq!(pairs, 10);
        assert_eq!(bipan_check_bk(d8, 2, &mut holds, ptr::null_mut()), BipanStatus::Ok);
        assert!(!holds);

        let mut strong = false;
        assert_eq!(bipan_is_strong(d8, &mut strong), BipanStatus::Ok);
        assert!(strong);

        let mut mask = 0u64;
        assert_eq!(bipan_cycle_spectrum(d8, 0, &mut mask), BipanStatus::Ok);
        assert_eq!(mask, (1 << 2) | (1 << 4) | (1 << 6));

        let mut buf = [0u32; 8];
        let mut found = false;
        assert_eq!(bipan_find_cycle(d8, 6, buf.as_mut_ptr(), buf.len(), &mut found), BipanStatus::Ok);
        assert!(found);
        assert_eq!(&buf[..6], &[0, 4, 2, 7, 3, 5]);
        assert_eq!(bipan_find_cycle(d8, 8, buf.as_mut_ptr(), buf.len(), &mut found), BipanStatus::Ok);
        assert!(!found);
        assert_eq!(bipan_find_cycle(d8, 6, buf.as_mut_ptr(), 3, &mut found), BipanStatus::BufferTooSmall);
        assert!(!found);

        let mut iso = false;
        let mut mapping = [99u32; 8];
        assert_eq!(bipan_iso_d8(d8, &mut iso, mapping.as_mut_ptr()), BipanStatus::Ok);
        assert!(iso);
        assert_eq!(mapping, [0, 1, 2, 3, 4, 5, 6, 7]);

        let theorem = CString::new("1.10").unwrap();
        let mut outcome = BipanOutcome::Violation;
        let mut report = ptr::null_mut();
        assert_eq!(bipan_certify(d8, theorem.as_ptr(), &mut outcome, &mut report), BipanStatus::Ok);
        assert_eq!(outcome, BipanOutcome::Confirmed);
        assert!(CStr::from_ptr(report).to_str().unwrap().contains("conclusion=d8-isomorphism\n"));
        bipan_string_free(report);

        bipan_digraph_free(d8);
    }
}

#[test]
fn outcomes_and_errors() {
    unsafe {
        let c8 = family("cycle", 4, false);
        let theorem = CString::new("1.10").unwrap();
        let mut outcome = BipanOutcome::Confirmed;
        assert_eq!(bipan_certify(c8, theorem.as_ptr(), &mut outcome, ptr::null_mut()), BipanStatus::Ok);
        assert_eq!(outcome, BipanOutcome::HypothesesNotMet);

        let bad = CString::new("6.1").unwrap();
        assert_eq!(bipan_certify(c8, bad.as_ptr(), &mut outcome, ptr::null_mut()), BipanStatus::InvalidArgument);
        assert!(last_error().contains("unknown theorem"));
        bipan_digraph_free(c8);

        let text = CString::new("bipartite a=2\nx0 x1\n").unwrap();
        let mut d = ptr::null_mut();
        assert_eq!(bipan_digraph_parse(text.as_ptr(), &mut d), BipanStatus::ParseError);
        assert!(d.is_null());
        assert!(last_error().contains("line 2"));

        let d6 = family("d6", 0, false);
        let mut holds = false;
        assert_eq!(bipan_check_bk(d6, 1, &mut holds, ptr::null_mut()), BipanStatus::NotBipartite);
        bipan_digraph_free(d6);

        assert_eq!(bipan_is_strong(ptr::null(), &mut holds), BipanStatus::NullPointer);
        assert_eq!(bipan_digraph_parse(ptr::null(), &mut d), BipanStatus::NullPointer);
        assert_eq!(bipan_digraph_random(4, 1.5, 0, &mut d), BipanStatus::InvalidArgument);
        let name = CString::new("nope").unwrap();
        assert_eq!(bipan_digraph_family(name.as_ptr(), 0, false, &mut d), BipanStatus::InvalidArgument);

        // A success clears the previous message.
        let d = family("complete", 3, false);
        assert!(bipan_last_error().is_null());
        bipan_digraph_free(d);
        bipan_digraph_free(ptr::null_mut());
        assert_eq!(bipan_digraph_order(ptr::null()), 0);
    }
}

#[test]
fn random_matches_core() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(bipan_digraph_random(4, 0.5, 7, &mut d), BipanStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(bipan_digraph_serialize(d, &mut text), BipanStatus::Ok);
        let expected = bipan::serialize(&bipan::random_bipartite(4, 0.5, 7).unwrap());
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), expected);
        bipan_string_free(text);
        bipan_digraph_free(d);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bipan.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 14, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from bipan.h");
    }
}
