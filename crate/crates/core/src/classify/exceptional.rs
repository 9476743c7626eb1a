use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::Condition;
use crate::coxeter::{
    braid_class, build_family, canonical_form, CoxeterSystem, Family, Word, DEFAULT_CAP,
};
use crate::enumerate::{cfc_words, LengthCensus};
use crate::error::{Error, Result};

/// Census horizon used to materialize each exceptional finite set.
pub const EXCEPTIONAL_HORIZONS: [(Family, usize); 3] = [
    (Family::G2tilde, 30),
    (Family::E6tilde, 26),
    (Family::E7tilde, 38),
];

fn w2_text(family: Family) -> &'static str {
    match family {
        Family::G2tilde => "u t s u t",
        Family::E6tilde => "s1 t s1' s1 s2 t s2' s2 s3 t s3' s3",
        _ => "s1 t s1' s0 s1 s1'' t s1' s1 s2 t s2' s0 s2 s2'' t s2' s2",
    }
}

/// CFC elements of an exceptional affine group up to a horizon, split into
/// powers of rotations of `w2` and everything else.
#[derive(Debug)]
pub struct ExceptionalData {
    pub sys: CoxeterSystem,
    pub horizon: usize,
    pub w2: Word,
    /// Canonical forms of the cyclic shifts of every reduced word of `w2`.
    pub rotations: BTreeSet<Word>,
    /// CFC elements up to the horizon not of the form `y^m`, `y` a rotation.
    pub finite: BTreeSet<Word>,
    pub census: LengthCensus,
}

impl ExceptionalData {
    fn build(family: Family, horizon: usize) -> Result<Self> {
        let sys = build_family(family, family.min_rank())?;
        let w2 = sys.parse_word(w2_text(family))?;
        let mut rotations = BTreeSet::new();
        for x in braid_class(&sys, &w2, DEFAULT_CAP)? {
            for k in 0..x.len() {
                rotations.insert(canonical_form(&sys, &x.cyclic_shift(k)));
            }
        }
        let words = cfc_words(&sys, horizon, DEFAULT_CAP)?;
        let mut counts = vec![0u64; horizon + 1];
        for w in &words {
            counts[w.len()] += 1;
        }
        let mut data = ExceptionalData {
            census: LengthCensus {
                family: family.token().to_string(),
                n: sys.family_rank(),
                class: crate::enumerate::CensusClass::Cfc,
                horizon,
                counts,
            },
            sys,
            horizon,
            w2,
            rotations,
            finite: BTreeSet::new(),
        };
        data.finite = words.into_iter().filter(|w| !data.is_periodic(w)).collect();
        Ok(data)
    }

    /// Whether the canonical word `w` equals `y^m` for a rotation `y`.
    pub fn is_periodic(&self, w: &Word) -> bool {
        let l = self.w2.len();
        if w.is_empty() || !w.len().is_multiple_of(l) {
            return false;
        }
        let m = w.len() / l;
        self.rotations
            .iter()
            .any(|y| canonical_form(&self.sys, &y.power(m)) == *w)
    }

    pub fn max_finite_len(&self) -> usize {
        self.finite.iter().map(Word::len).max().unwrap_or(0)
    }

    /// The finite part ends at least one period of `w2` below the horizon.
    pub fn is_stable(&self) -> bool {
        self.max_finite_len() + self.w2.len() <= self.horizon
    }
}

static CACHES: [OnceLock<Result<ExceptionalData>>; 3] =
    [OnceLock::new(), OnceLock::new(), OnceLock::new()];

/// Cached exceptional data, built on first use.
pub fn exceptional_data(family: Family) -> Result<&'static ExceptionalData> {
    let i = EXCEPTIONAL_HORIZONS
        .iter()
        .position(|&(f, _)| f == family)
        .ok_or_else(|| {
            Error::Precondition(format!("{family} is not an exceptional affine family"))
        })?;
    CACHES[i]
        .get_or_init(|| ExceptionalData::build(family, EXCEPTIONAL_HORIZONS[i].1))
        .as_ref()
        .map_err(Clone::clone)
}

pub(super) fn classify(sys: &CoxeterSystem, w: &Word) -> Result<Option<Condition>> {
    let data = exceptional_data(sys.family())?;
    if data.sys.matrix() != sys.matrix() {
        return Err(Error::Precondition(format!(
            "{} system differs from the standard one",
            sys.label()
        )));
    }
    if data.is_periodic(w) {
        Ok(Some(Condition::ExceptionalPeriodic))
    } else if w.len() <= data.horizon && data.finite.contains(w) {
        Ok(Some(Condition::ExceptionalFinite))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_data() {
        let d = exceptional_data(Family::G2tilde).unwrap();
        assert_eq!(d.rotations.len(), 6);
        assert!(d.is_stable());
        assert_eq!(d.census.counts[5], 6);
        let u = d.sys.parse_word("u t s u t").unwrap();
        assert!(d.is_periodic(&canonical_form(&d.sys, &u.power(3))));
    }
}
