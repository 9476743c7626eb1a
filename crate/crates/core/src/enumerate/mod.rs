//! Enumeration of FC and CFC elements by Coxeter length.

mod crosscheck;

pub use crosscheck::{crosscheck, reduced_words, CheckMode, Counterexample, CrosscheckReport};

use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{is_canonical_extension, CoxeterSystem, Word, INFINITY};
use crate::cylindric::is_cfc_heap;
use crate::error::{Error, Result};
use crate::heap::Heap;

/// Longest word the enumerator can grow; down-sets are packed in a `u128`.
pub const MAX_HORIZON: usize = 127;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CensusClass {
    #[serde(rename = "FC")]
    Fc,
    #[serde(rename = "CFC")]
    Cfc,
    #[serde(rename = "CFC_involution")]
    CfcInvolution,
}

/// Number of elements of each length `0..=horizon` in a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCensus {
    pub family: String,
    pub n: usize,
    pub class: CensusClass,
    pub horizon: usize,
    pub counts: Vec<u64>,
}

impl LengthCensus {
    fn new(sys: &CoxeterSystem, class: CensusClass, counts: Vec<u64>) -> Self {
        LengthCensus {
            family: sys.family().token().to_string(),
            n: sys.family_rank(),
            class,
            horizon: counts.len().saturating_sub(1),
            counts,
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `length,count` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (l, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{l},{c}\n"));
        }
        out
    }
}

/// Incremental heap of a canonical FC word, grown one letter at a time.
struct Growth<'a> {
    sys: &'a CoxeterSystem,
    letters: Vec<u8>,
    below: Vec<u128>,
    last: Vec<Option<usize>>,
    undo: Vec<Option<usize>>,
    closed: Vec<Vec<u8>>,
    partners: Vec<Vec<(u8, usize)>>,
}

impl<'a> Growth<'a> {
    fn new(sys: &'a CoxeterSystem) -> Self {
        let n = sys.rank() as u8;
        let closed = (0..n)
            .map(|s| {
                std::iter::once(s)
                    .chain(sys.neighbors(s).iter().copied())
                    .collect()
            })
            .collect();
        let partners = (0..n)
            .map(|s| {
                sys.neighbors(s)
                    .iter()
                    .filter(|&&t| sys.m(s, t) != INFINITY)
                    .map(|&t| (t, sys.m(s, t) as usize))
                    .collect()
            })
            .collect();
        Growth {
            sys,
            letters: Vec::new(),
            below: Vec::new(),
            last: vec![None; n as usize],
            undo: Vec::new(),
            closed,
            partners,
        }
    }

    fn len(&self) -> usize {
        self.letters.len()
    }

    /// Appends `s` if the result is canonical, reduced and FC.
    fn try_push(&mut self, s: u8) -> bool {
        if !is_canonical_extension(self.sys, &self.letters, s) {
            return false;
        }
        let k = self.letters.len();
        let mut down = 0u128;
        for &g in &self.closed[s as usize] {
            if let Some(p) = self.last[g as usize] {
                down |= self.below[p] | (1 << p);
            }
        }
        if let Some(q) = self.last[s as usize] {
            let separated = self
                .sys
                .neighbors(s)
                .iter()
                .any(|&g| self.last[g as usize].is_some_and(|p| self.below[p] >> q & 1 == 1));
            if !separated {
                return false;
            }
        }
        for &(t, m) in &self.partners[s as usize] {
            if self.closes_convex_chain(k, down, s, t, m) {
                return false;
            }
        }
        self.letters.push(s);
        self.below.push(down);
        self.undo.push(self.last[s as usize]);
        self.last[s as usize] = Some(k);
        true
    }

    /// Whether the last `m` points of `H_{s,t}`, ending at the new point `k`,
    /// alternate and span an interval with nothing else in it.
    fn closes_convex_chain(&self, k: usize, down: u128, s: u8, t: u8, m: usize) -> bool {
        let mut want = t;
        let mut need = m - 1;
        let mut first = k;
        for i in (0..k).rev() {
            let l = self.letters[i];
            if l != s && l != t {
                continue;
            }
            if l != want {
                return false;
            }
            first = i;
            need -= 1;
            if need == 0 {
                break;
            }
            want = if want == s { t } else { s };
        }
        if need > 0 {
            return false;
        }
        let interior = (first + 1..k)
            .filter(|&p| down >> p & 1 == 1 && self.below[p] >> first & 1 == 1)
            .count();
        interior == m - 2
    }

    fn pop(&mut self) {
        let s = self.letters.pop().expect("nonempty growth");
        self.below.pop();
        self.last[s as usize] = self.undo.pop().expect("undo entry");
    }

    fn heap(&self) -> Heap {
        let k = self.len();
        let below = self
            .below
            .iter()
            .map(|&b| {
                let mut set = FixedBitSet::with_capacity(k);
                set.extend((0..k).filter(|&p| b >> p & 1 == 1));
                set
            })
            .collect();
        Heap::from_order(self.sys, self.letters.clone(), below)
    }
}

fn walk<F>(
    g: &mut Growth,
    horizon: usize,
    visit: &mut F,
    seen: &AtomicUsize,
    cap: usize,
) -> Result<()>
where
    F: FnMut(&Growth),
{
    if seen.fetch_add(1, Ordering::Relaxed) >= cap {
        return Err(Error::CapExceeded { cap });
    }
    visit(g);
    if g.len() == horizon {
        return Ok(());
    }
    for s in 0..g.sys.rank() as u8 {
        if g.try_push(s) {
            let r = walk(g, horizon, visit, seen, cap);
            g.pop();
            r?;
        }
    }
    Ok(())
}

/// Runs `visit` on every canonical FC word of length `1..=horizon`, sharded
/// by first letter; shard results come back in letter order.
fn sharded<T, F>(
    sys: &CoxeterSystem,
    horizon: usize,
    cap: usize,
    init: T,
    visit: F,
) -> Result<Vec<T>>
where
    T: Clone + Send + Sync,
    F: Fn(&mut T, &Growth) + Sync,
{
    if horizon > MAX_HORIZON {
        return Err(Error::Precondition(format!(
            "horizon {horizon} exceeds the enumerator limit {MAX_HORIZON}"
        )));
    }
    let seen = AtomicUsize::new(1);
    if horizon == 0 {
        return Ok(Vec::new());
    }
    (0..sys.rank() as u8)
        .into_par_iter()
        .map(|s| {
            let mut acc = init.clone();
            let mut g = Growth::new(sys);
            if g.try_push(s) {
                walk(
                    &mut g,
                    horizon,
                    &mut |g: &Growth| visit(&mut acc, g),
                    &seen,
                    cap,
                )?;
            }
            Ok(acc)
        })
        .collect()
}

fn sort_words(mut words: Vec<Word>) -> Vec<Word> {
    words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    words
}

/// One canonical word per FC element of length `≤ horizon`, ordered by
/// length and then lexicographically.
pub fn enumerate_fc(sys: &CoxeterSystem, horizon: usize, cap: usize) -> Result<Vec<Word>> {
    let shards = sharded(sys, horizon, cap, Vec::new(), |acc: &mut Vec<Word>, g| {
        acc.push(Word::from(g.letters.clone()))
    })?;
    let mut words = vec![Word::empty()];
    words.extend(shards.into_iter().flatten());
    Ok(sort_words(words))
}

/// Canonical words of the CFC elements of length `≤ horizon`.
pub fn cfc_words(sys: &CoxeterSystem, horizon: usize, cap: usize) -> Result<Vec<Word>> {
    let shards = sharded(sys, horizon, cap, Vec::new(), |acc: &mut Vec<Word>, g| {
        if is_cfc_heap(g.sys, &g.heap()).is_none() {
            acc.push(Word::from(g.letters.clone()));
        }
    })?;
    let mut words = vec![Word::empty()];
    words.extend(shards.into_iter().flatten());
    Ok(sort_words(words))
}

fn census(
    sys: &CoxeterSystem,
    horizon: usize,
    cap: usize,
    class: CensusClass,
) -> Result<LengthCensus> {
    let shards = sharded(
        sys,
        horizon,
        cap,
        vec![0u64; horizon + 1],
        |acc: &mut Vec<u64>, g| {
            if class == CensusClass::Fc || is_cfc_heap(g.sys, &g.heap()).is_none() {
                acc[g.len()] += 1;
            }
        },
    )?;
    let mut counts = vec![0u64; horizon + 1];
    counts[0] = 1;
    for shard in shards {
        for (c, x) in counts.iter_mut().zip(shard) {
            *c += x;
        }
    }
    Ok(LengthCensus::new(sys, class, counts))
}

/// FC elements per length.
pub fn enumerate_fc_census(
    sys: &CoxeterSystem,
    horizon: usize,
    cap: usize,
) -> Result<LengthCensus> {
    census(sys, horizon, cap, CensusClass::Fc)
}

/// CFC elements per length, filtering the FC enumeration at emission.
pub fn enumerate_cfc(sys: &CoxeterSystem, horizon: usize, cap: usize) -> Result<LengthCensus> {
    census(sys, horizon, cap, CensusClass::Cfc)
}

/// Independent sets of the Coxeter diagram, each as a sorted word.
pub fn cfc_involutions(sys: &CoxeterSystem) -> Vec<Word> {
    fn go(sys: &CoxeterSystem, next: u8, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        out.push(Word::from(cur.clone()));
        for s in next..sys.rank() as u8 {
            if cur.iter().all(|&x| sys.commute(x, s)) {
                cur.push(s);
                go(sys, s + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(sys, 0, &mut Vec::new(), &mut out);
    sort_words(out)
}

/// CFC involutions per length: one per independent set of the diagram.
pub fn enumerate_cfc_involutions(sys: &CoxeterSystem) -> LengthCensus {
    let mut counts = vec![0u64; sys.rank() + 1];
    for w in cfc_involutions(sys) {
        counts[w.len()] += 1;
    }
    LengthCensus::new(sys, CensusClass::CfcInvolution, counts)
}
