//! Family classifiers against the general cylindric criterion, over every FC
//! element up to horizons beyond the exhaustive oracle sweeps.

use cfc_core::classify::{classify_cfc, family_rule, is_cfc_involution_char, Condition};
use cfc_core::coxeter::{is_involution, DEFAULT_CAP};
use cfc_core::cylindric::is_cfc_word;
use cfc_core::enumerate::enumerate_fc;
use cfc_core::{build_family, Family};

fn agree(f: Family, r: usize, horizon: usize) -> usize {
    let sys = build_family(f, r).unwrap();
    let mut cfc = 0;
    for w in enumerate_fc(&sys, horizon, DEFAULT_CAP).unwrap() {
        let rule = family_rule(&sys, &w).unwrap();
        let crit = is_cfc_word(&sys, &w);
        assert_eq!(rule.is_some(), crit, "{f} {r}: {}", sys.format_word(&w));
        cfc += usize::from(crit);
    }
    cfc
}

#[test]
fn finite_families() {
    for (f, r) in [(Family::A, 5), (Family::B, 5), (Family::D, 5)] {
        assert!(agree(f, r, 12) > 0);
    }
}

#[test]
fn atilde() {
    agree(Family::Atilde, 2, 18);
    agree(Family::Atilde, 3, 16);
    agree(Family::Atilde, 4, 15);
}

#[test]
fn ctilde() {
    agree(Family::Ctilde, 2, 30);
    agree(Family::Ctilde, 3, 26);
    agree(Family::Ctilde, 4, 20);
}

#[test]
fn btilde() {
    agree(Family::Btilde, 3, 30);
    agree(Family::Btilde, 4, 22);
}

#[test]
fn dtilde() {
    agree(Family::Dtilde, 4, 24);
    agree(Family::Dtilde, 5, 20);
}

#[test]
fn g2tilde() {
    agree(Family::G2tilde, 2, 30);
}

#[test]
fn every_clause_occurs() {
    let sys = build_family(Family::Btilde, 4).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for w in enumerate_fc(&sys, 14, DEFAULT_CAP).unwrap() {
        if let Some(c) = family_rule(&sys, &w).unwrap() {
            seen.insert(format!("{c:?}"));
        }
    }
    let want: std::collections::BTreeSet<String> = [Condition::A, Condition::B, Condition::C]
        .iter()
        .map(|c| format!("{c:?}"))
        .collect();
    assert_eq!(seen, want);
}

#[test]
fn involution_characterization() {
    for (f, r) in [
        (Family::D, 5),
        (Family::Ctilde, 3),
        (Family::Dtilde, 5),
        (Family::E6tilde, 6),
    ] {
        let sys = build_family(f, r).unwrap();
        for w in enumerate_fc(&sys, sys.rank() + 2, DEFAULT_CAP).unwrap() {
            let c = classify_cfc(&sys, &w).unwrap();
            let char_ok = is_cfc_involution_char(&sys, &w);
            assert_eq!(
                c.cfc && is_involution(&sys, &w),
                char_ok,
                "{}",
                sys.format_word(&w)
            );
            assert_eq!(c.cfc_involution, char_ok);
        }
    }
}
