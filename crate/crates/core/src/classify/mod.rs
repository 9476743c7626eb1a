//! Word-level CFC classifiers per family, CFC involutions and logarithmic
//! elements.

mod exceptional;
mod zigzag;

pub use exceptional::{exceptional_data, ExceptionalData, EXCEPTIONAL_HORIZONS};
pub use zigzag::zigzag_factor_check;

use serde::Serialize;

use crate::coxeter::{
    canonical_form, is_involution, is_reduced, length, CoxeterSystem, Family, Word,
};
use crate::cylindric::is_cfc_heap;
use crate::error::{Error, Result};
use crate::heap::{heap_of, is_alternating, is_fc_heap, Witness};

/// Which clause of the family theorem a CFC word satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    A,
    B,
    C,
    ExceptionalFinite,
    ExceptionalPeriodic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub reduced: bool,
    pub fc: bool,
    pub cfc: bool,
    pub cfc_condition: Option<Condition>,
    pub involution: bool,
    pub cfc_involution: bool,
    pub logarithmic: Option<bool>,
    pub witness: Option<Witness>,
}

impl Classification {
    fn not_reduced() -> Self {
        Classification {
            reduced: false,
            fc: false,
            cfc: false,
            cfc_condition: None,
            involution: false,
            cfc_involution: false,
            logarithmic: None,
            witness: None,
        }
    }
}

fn has_rule(family: Family) -> bool {
    !matches!(family, Family::Custom)
}

/// Family theorem applied to a reduced word: the satisfied clause, or `None`
/// when the word is not CFC. Errors for systems without a classifier.
pub fn family_rule(sys: &CoxeterSystem, w: &Word) -> Result<Option<Condition>> {
    let family = sys.family();
    if !has_rule(family) {
        return Err(Error::ClassifierUnavailable {
            family: family.token().to_string(),
        });
    }
    let w = canonical_form(sys, w);
    let counts = w.occurrence_counts(sys.rank());
    if family.is_exceptional() {
        return exceptional::classify(sys, &w);
    }
    if counts.iter().all(|&c| c <= 1) {
        return Ok(Some(Condition::A));
    }
    let rule_b = match family {
        Family::Atilde | Family::Ctilde => counts[0] >= 2 && counts.iter().all(|&c| c == counts[0]),
        Family::Btilde | Family::Dtilde => {
            // t1 t2 s1 … [u | u1 u2]
            let n = sys.rank();
            let halves: &[usize] = if family == Family::Btilde {
                &[0, 1]
            } else {
                &[0, 1, n - 2, n - 1]
            };
            let full: Vec<usize> = (0..n).filter(|i| !halves.contains(i)).collect();
            let c = counts[full[0]];
            c >= 2
                && c.is_multiple_of(2)
                && full.iter().all(|&i| counts[i] == c)
                && halves.iter().all(|&i| counts[i] == c / 2)
        }
        _ => false,
    };
    if rule_b && is_alternating(sys, &w)? {
        return Ok(Some(Condition::B));
    }
    if matches!(family, Family::Ctilde | Family::Btilde | Family::Dtilde)
        && zigzag_factor_check(sys, &w)?
    {
        return Ok(Some(Condition::C));
    }
    Ok(None)
}

/// Full classification of `w`. The `cfc` field comes from the family theorem
/// when one exists and from the cylindric criterion otherwise. The witness is
/// the first cylindric violation, if any.
pub fn classify_cfc(sys: &CoxeterSystem, w: &Word) -> Result<Classification> {
    sys.check_word(w)?;
    if !is_reduced(sys, w) {
        return Ok(Classification::not_reduced());
    }
    let h = heap_of(sys, w);
    let fc_witness = is_fc_heap(sys, &h);
    let cfc_witness = is_cfc_heap(sys, &h);
    let (cfc, cfc_condition) = if has_rule(sys.family()) {
        let c = family_rule(sys, w)?;
        (c.is_some(), c)
    } else {
        (cfc_witness.is_none(), None)
    };
    let involution = is_involution(sys, w);
    // every FC violation lifts to a cylindric one, so the cylindric witness
    // explains both failures
    let fc = fc_witness.is_none();
    let witness = if !cfc_witness.is_none() {
        Some(cfc_witness)
    } else if !fc {
        Some(fc_witness)
    } else {
        None
    };
    let logarithmic = (cfc && is_classical_affine(sys.family())).then(|| has_full_support(sys, w));
    Ok(Classification {
        reduced: true,
        fc,
        cfc,
        cfc_condition,
        involution,
        cfc_involution: cfc && involution,
        logarithmic,
        witness,
    })
}

/// Every letter occurs once and no two letters are joined in the diagram.
pub fn is_cfc_involution_char(sys: &CoxeterSystem, w: &Word) -> bool {
    let l = w.letters();
    let counts = w.occurrence_counts(sys.rank());
    counts.iter().all(|&c| c <= 1)
        && l.iter()
            .enumerate()
            .all(|(i, &s)| l[i + 1..].iter().all(|&t| sys.commute(s, t)))
}

fn is_classical_affine(family: Family) -> bool {
    matches!(
        family,
        Family::Atilde | Family::Btilde | Family::Ctilde | Family::Dtilde
    )
}

fn has_full_support(sys: &CoxeterSystem, w: &Word) -> bool {
    w.support().len() == sys.rank()
}

/// Logarithmic test for CFC elements of classical affine type: full support.
pub fn is_logarithmic_cfc(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    if !is_classical_affine(sys.family()) {
        return Err(Error::Precondition(format!(
            "logarithmic test needs an Atilde, Btilde, Ctilde or Dtilde system, not {}",
            sys.label()
        )));
    }
    sys.check_word(w)?;
    if !is_reduced(sys, w) {
        return Err(Error::NotReduced {
            word: sys.format_word(w),
        });
    }
    if !is_cfc_heap(sys, &heap_of(sys, w)).is_none() {
        return Err(Error::Precondition(format!(
            "word is not CFC: {}",
            sys.format_word(w)
        )));
    }
    Ok(has_full_support(sys, w))
}

/// `ℓ(w^k) = k·ℓ(w)` for every `1 ≤ k ≤ kmax`.
pub fn verify_logarithmic(sys: &CoxeterSystem, w: &Word, kmax: usize) -> bool {
    let l = length(sys, w);
    (1..=kmax).all(|k| length(sys, &w.power(k)) == k * l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_family;
    use crate::heap::WitnessKind;

    fn sys(f: Family, r: usize) -> CoxeterSystem {
        build_family(f, r).unwrap()
    }

    fn classify(f: Family, r: usize, w: &str) -> Classification {
        let s = sys(f, r);
        classify_cfc(&s, &s.parse_word(w).unwrap()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify(Family::A, 3, "s1 s3");
        assert!(c.cfc && c.fc && c.reduced);
        assert_eq!(c.cfc_condition, Some(Condition::A));
        let c = classify(Family::Atilde, 2, "s0 s1 s2 s0 s1 s2");
        assert_eq!(c.cfc_condition, Some(Condition::B));
        assert_eq!(c.logarithmic, Some(true));
        let c = classify(Family::Ctilde, 2, "t s1 u s1");
        assert_eq!(c.cfc_condition, Some(Condition::C));
        let c = classify(Family::A, 2, "s1 s2 s1");
        assert!(c.reduced && !c.fc && !c.cfc);
        let w = c.witness.unwrap();
        assert_eq!(w.kind, WitnessKind::SameLabelCover);
        assert_eq!(w.points, vec![2, 0]);
        let c = classify(Family::A, 2, "s1 s1");
        assert_eq!(c, Classification::not_reduced());
    }

    #[test]
    fn classification_json() {
        let c = classify(Family::Ctilde, 2, "t s1 u s1");
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["cfc_condition"], "c");
        assert_eq!(v["witness"], serde_json::Value::Null);
        let c = classify(Family::A, 2, "s1 s2 s1");
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["witness"], serde_json::json!([2, 0]));
    }

    #[test]
    fn custom_systems_use_the_general_criterion() {
        let a2 = sys(Family::A, 2);
        let custom = a2.with_entry(0, 1, 4).unwrap();
        let w = custom.parse_word("s1 s2 s1").unwrap();
        let c = classify_cfc(&custom, &w).unwrap();
        assert!(c.fc && !c.cfc && c.cfc_condition.is_none());
        assert!(matches!(
            family_rule(&custom, &w),
            Err(Error::ClassifierUnavailable { .. })
        ));
    }

    #[test]
    fn involution_examples() {
        let d4 = sys(Family::D, 4);
        assert!(is_cfc_involution_char(
            &d4,
            &d4.parse_word("t1 t2").unwrap()
        ));
        let a2 = sys(Family::A, 2);
        assert!(!is_cfc_involution_char(
            &a2,
            &a2.parse_word("s1 s2").unwrap()
        ));
        let a3 = sys(Family::A, 3);
        assert!(!is_cfc_involution_char(
            &a3,
            &a3.parse_word("s1 s3 s1").unwrap()
        ));
        assert!(classify(Family::D, 4, "t1 t2").cfc_involution);
    }

    #[test]
    fn logarithmic_examples() {
        let at2 = sys(Family::Atilde, 2);
        let p = |w: &str| at2.parse_word(w).unwrap();
        assert!(is_logarithmic_cfc(&at2, &p("s0 s1 s2")).unwrap());
        assert!(!is_logarithmic_cfc(&at2, &p("s0 s1")).unwrap());
        assert!(is_logarithmic_cfc(&at2, &p("s0 s1 s0")).is_err());
        let c2 = sys(Family::Ctilde, 2);
        assert!(is_logarithmic_cfc(&c2, &c2.parse_word("t s1 u s1").unwrap()).unwrap());
        assert!(verify_logarithmic(&at2, &p("s0 s1 s2"), 5));
        let a2 = sys(Family::A, 2);
        assert!(!verify_logarithmic(
            &a2,
            &a2.parse_word("s1 s2").unwrap(),
            3
        ));
        assert!(verify_logarithmic(&a2, &a2.parse_word("s1 s2").unwrap(), 1));
        assert!(is_logarithmic_cfc(&a2, &Word::empty()).is_err());
    }
}
