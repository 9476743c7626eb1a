//! Fixtures shared by the benchmarks.

use cfc_core::coxeter::DEFAULT_CAP;
use cfc_core::enumerate::enumerate_fc;
use cfc_core::{build_family, CoxeterSystem, Family, Word};

/// A system with every FC word of length exactly `len`.
pub struct Fixture {
    pub name: String,
    pub sys: CoxeterSystem,
    pub words: Vec<Word>,
}

pub fn fixture(family: Family, rank: usize, len: usize) -> Fixture {
    let sys = build_family(family, rank).expect("valid family");
    let words = enumerate_fc(&sys, len, DEFAULT_CAP)
        .expect("within cap")
        .into_iter()
        .filter(|w| w.len() == len)
        .collect();
    Fixture {
        name: format!("{} {rank} len {len}", family.token()),
        sys,
        words,
    }
}

/// Fixtures used by the decision benchmarks.
pub fn decision_fixtures() -> Vec<Fixture> {
    vec![
        fixture(Family::Ctilde, 3, 12),
        fixture(Family::Dtilde, 5, 10),
        fixture(Family::E7tilde, 7, 9),
    ]
}
