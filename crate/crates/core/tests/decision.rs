mod common;

use moqfa::algebra::{green_report, is_r_trivial, transition_monoid};
use moqfa::automata::{
    complement, is_partially_ordered, minimize, product, pt_canonical_dfa, BoolOp, Dfa,
};
use moqfa::decision::{
    is_lmo_member, is_piecewise_testable, is_piecewise_testable_by_monoid, lmo_oracle, random_dfa,
    random_partially_ordered_dfa, verify_construction, FailureReason,
};
use moqfa::quantum::PtSpec;

fn specs_up_to(k: usize, alphabet: &str) -> Vec<PtSpec> {
    let syms: Vec<char> = alphabet.chars().collect();
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<char>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &layer {
            for &s in &syms {
                if p.last() != Some(&s) {
                    let mut q = p.clone();
                    q.push(s);
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter()
        .map(|l| PtSpec::new(l, syms.clone()).unwrap())
        .collect()
}

#[test]
fn pipeline_agrees_with_monoid_oracle() {
    for d in common::full_corpus() {
        let diag = is_lmo_member(&d);
        assert_eq!(diag.verdict, lmo_oracle(&d).unwrap(), "{d:?}");
        assert!(!diag.piecewise_testable || diag.partially_ordered);
        assert_eq!(
            diag.verdict,
            diag.literally_idempotent && diag.piecewise_testable
        );
    }
}

#[test]
fn automaton_level_pt_check_matches_monoid_contract() {
    // A larger sweep than the acceptance corpus, including partially ordered
    // DFAs where the confluence condition does the real work.
    let letters = ['a', 'b', 'c', 'd'];
    let (mut po_pt, mut po_not_pt) = (0, 0);
    for seed in 0..3000u64 {
        let n = 1 + (seed % 8) as usize;
        let k = 1 + ((seed / 8) % 4) as usize;
        for d in [
            random_dfa(seed, n, &letters[..k]),
            random_partially_ordered_dfa(seed, n, &letters[..k]),
        ] {
            let min = minimize(&d);
            if is_partially_ordered(&min) && min.state_count() > 2 {
                if is_piecewise_testable(&min) {
                    po_pt += 1;
                } else {
                    po_not_pt += 1;
                }
            }
            assert_eq!(
                is_piecewise_testable(&min),
                is_piecewise_testable_by_monoid(&min).unwrap(),
                "{}",
                moqfa::automata::serialize_dfa(&min)
            );
        }
    }
    println!("partially ordered: {po_pt} piecewise testable, {po_not_pt} not");
    assert!(po_pt >= 100 && po_not_pt >= 100);
}

#[test]
fn shuffle_ideals_are_members() {
    for spec in specs_up_to(4, "abc") {
        let d = is_lmo_member(&pt_canonical_dfa(&spec));
        assert!(d.verdict, "{spec}");
    }
}

#[test]
fn boolean_combinations_stay_members() {
    let specs = specs_up_to(2, "ab");
    for s1 in &specs {
        let d1 = pt_canonical_dfa(s1);
        assert!(is_lmo_member(&complement(&d1)).verdict);
        for s2 in &specs {
            let d2 = pt_canonical_dfa(s2);
            for op in BoolOp::ALL {
                let p = product(&d1, &d2, op).unwrap();
                assert!(is_lmo_member(&p).verdict, "{s1} {op:?} {s2}");
                let r = green_report(&minimize(&p)).unwrap();
                assert!(r.j_trivial && r.letters_idempotent && r.block_group && r.r_trivial);
            }
        }
    }
}

#[test]
fn closure_on_random_members() {
    let members: Vec<Dfa> = common::full_corpus()
        .into_iter()
        .filter(|d| d.alphabet().len() == 2 && is_lmo_member(d).verdict)
        .take(25)
        .collect();
    assert!(members.len() >= 10);
    for d1 in &members {
        assert!(is_lmo_member(&complement(d1)).verdict);
        for d2 in &members {
            for op in BoolOp::ALL {
                assert!(is_lmo_member(&product(d1, d2, op).unwrap()).verdict);
            }
        }
    }
}

#[test]
fn finite_variation_iff_r_trivial() {
    for d in common::full_corpus() {
        let min = minimize(&d);
        assert_eq!(
            is_partially_ordered(&min),
            is_r_trivial(&transition_monoid(&min).unwrap())
        );
    }
}

#[test]
fn failure_reasons_follow_check_order() {
    for d in common::full_corpus() {
        let diag = is_lmo_member(&d);
        match diag.failure_reason {
            Some(FailureReason::NotLi) => assert!(!diag.literally_idempotent),
            Some(FailureReason::NotPt) => {
                assert!(diag.literally_idempotent && !diag.piecewise_testable)
            }
            None => assert!(diag.verdict),
        }
    }
}

#[test]
fn constructions_verify_for_short_patterns() {
    for spec in specs_up_to(3, "ab") {
        let r = verify_construction(&spec, 7).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.min_margin >= r.delta - 1e-9);
    }
}
