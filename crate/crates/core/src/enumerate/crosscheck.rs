use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::family_rule;
use crate::coxeter::{is_fc_exhaustive, CoxeterSystem, ElementMatrix, Family, Word};
use crate::cylindric::{is_cfc_word, DefinitionalOracle, Strategy};
use crate::error::{Error, Result};
use crate::heap::is_fc_reduced_word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum CheckMode {
    /// Every reduced word up to the horizon.
    Exhaustive,
    /// Seeded random reduced words with lengths uniform in `0..=horizon`.
    Sampled { samples: usize, seed: u64 },
}

/// Values of every decision procedure on one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: String,
    pub classify: Option<bool>,
    pub cfc_criterion: bool,
    pub cfc_definitional: bool,
    pub fc_criterion: bool,
    pub fc_exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub family: String,
    pub n: usize,
    pub horizon: usize,
    #[serde(flatten)]
    pub mode: CheckMode,
    pub words: u64,
    pub elements: u64,
    pub disagreements: u64,
    pub first_counterexample: Option<Counterexample>,
}

/// Every reduced word of length `≤ horizon`, in DFS order.
pub fn reduced_words(sys: &CoxeterSystem, horizon: usize, cap: usize) -> Result<Vec<Word>> {
    fn go(
        sys: &CoxeterSystem,
        m: &ElementMatrix,
        cur: &mut Vec<u8>,
        horizon: usize,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<()> {
        if out.len() >= cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(Word::from(cur.clone()));
        if cur.len() == horizon {
            return Ok(());
        }
        for s in 0..sys.rank() as u8 {
            if m.lengthens(s) {
                let mut next = m.clone();
                next.right_mul(sys, s);
                cur.push(s);
                go(sys, &next, cur, horizon, out, cap)?;
                cur.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(
        sys,
        &ElementMatrix::identity(sys.rank()),
        &mut Vec::new(),
        horizon,
        &mut out,
        cap,
    )?;
    Ok(out)
}

fn sample_words(sys: &CoxeterSystem, horizon: usize, samples: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let len = rng.gen_range(0..=horizon);
            let mut m = ElementMatrix::identity(sys.rank());
            let mut w = Vec::with_capacity(len);
            while w.len() < len {
                let options: Vec<u8> = (0..sys.rank() as u8).filter(|&s| m.lengthens(s)).collect();
                if options.is_empty() {
                    break;
                }
                let s = options[rng.gen_range(0..options.len())];
                m.right_mul(sys, s);
                w.push(s);
            }
            Word::from(w)
        })
        .collect()
}

/// Runs every CFC and FC decision procedure on reduced words up to the
/// horizon and reports the first disagreement. Element-level oracles are
/// memoized by the element's matrix.
pub fn crosscheck(
    sys: &CoxeterSystem,
    horizon: usize,
    mode: CheckMode,
    cap: usize,
) -> Result<CrosscheckReport> {
    let words = match mode {
        CheckMode::Exhaustive => reduced_words(sys, horizon, cap)?,
        CheckMode::Sampled { samples, seed } => sample_words(sys, horizon, samples, seed),
    };
    let has_rule = sys.family() != Family::Custom;
    let mut oracle = DefinitionalOracle::new(sys, Strategy::Commutation);
    let mut memo: HashMap<ElementMatrix, (bool, bool)> = HashMap::new();
    let mut report = CrosscheckReport {
        family: sys.family().token().to_string(),
        n: sys.family_rank(),
        horizon,
        mode,
        words: 0,
        elements: 0,
        disagreements: 0,
        first_counterexample: None,
    };
    for w in &words {
        let key = ElementMatrix::of_word(sys, w);
        let (definitional, exhaustive) = match memo.get(&key) {
            Some(&v) => v,
            None => {
                let v = (oracle.is_cfc(w)?, is_fc_exhaustive(sys, w)?);
                memo.insert(key, v);
                v
            }
        };
        let classify = if has_rule {
            Some(family_rule(sys, w)?.is_some())
        } else {
            None
        };
        let cfc_criterion = is_cfc_word(sys, w);
        let fc_criterion = is_fc_reduced_word(sys, w);
        report.words += 1;
        let agree = classify.unwrap_or(cfc_criterion) == cfc_criterion
            && cfc_criterion == definitional
            && fc_criterion == exhaustive;
        if !agree {
            report.disagreements += 1;
            report
                .first_counterexample
                .get_or_insert_with(|| Counterexample {
                    word: sys.format_word(w),
                    classify,
                    cfc_criterion,
                    cfc_definitional: definitional,
                    fc_criterion,
                    fc_exhaustive: exhaustive,
                });
        }
    }
    report.elements = memo.len() as u64;
    Ok(report)
}
