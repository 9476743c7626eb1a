//! Heaps of words, chain covers, and the FC pattern criterion.

mod alternating;
mod motzkin;

pub use alternating::is_alternating;
pub use motzkin::{motzkin_profile, FlatLabel, MotzkinPath, MotzkinStep};

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::coxeter::{CoxeterSystem, Word, INFINITY};
use crate::error::{Error, Result};

/// A labeled poset on word positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heap {
    labels: Vec<u8>,
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    chain_covers: Vec<(usize, usize)>,
}

impl Heap {
    /// Builds a heap from labels and strict down-sets (`below[j]` holds every
    /// `i ≺ j`, already transitively closed). Chain covers are computed from
    /// the order.
    pub(crate) fn from_order(
        sys: &CoxeterSystem,
        labels: Vec<u8>,
        below: Vec<FixedBitSet>,
    ) -> Heap {
        let n = labels.len();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for (j, set) in below.iter().enumerate() {
            for i in set.ones() {
                above[i].insert(j);
            }
        }
        let mut chain_covers = Vec::new();
        for j in 0..n {
            for i in below[j].ones() {
                let (a, b) = (labels[i], labels[j]);
                let mut between = below[j].intersection(&above[i]);
                let cover = if a == b {
                    between.next().is_none()
                } else if sys.m(a, b) >= 3 {
                    !between.any(|z| labels[z] == a || labels[z] == b)
                } else {
                    false
                };
                if cover {
                    chain_covers.push((i, j));
                }
            }
        }
        chain_covers.sort_unstable();
        Heap {
            labels,
            below,
            above,
            chain_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u8 {
        self.labels[i]
    }

    /// The word read off in index order.
    pub fn word(&self) -> Word {
        Word::from(self.labels.clone())
    }

    /// `i ≺ j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn below(&self, j: usize) -> &FixedBitSet {
        &self.below[j]
    }

    pub fn above(&self, i: usize) -> &FixedBitSet {
        &self.above[i]
    }

    /// Number of points `u` with `i ≺ u ≺ j`.
    pub fn interior(&self, i: usize, j: usize) -> usize {
        self.below[j].intersection(&self.above[i]).count()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.below[i].is_clear()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.above[i].is_clear()
    }

    /// Chain covers `i ≺_c j`, sorted.
    pub fn chain_covers(&self) -> &[(usize, usize)] {
        &self.chain_covers
    }

    /// Covering pairs of `≺` (Hasse diagram edges), sorted.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in self.below[j].ones() {
                if self.interior(i, j) == 0 {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Points with the given label, in index order (a chain).
    pub fn points_of(&self, s: u8) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.labels[i] == s).collect()
    }

    /// Points with label `s` or `t`, in index order.
    pub fn points_of_pair(&self, s: u8, t: u8) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.labels[i] == s || self.labels[i] == t)
            .collect()
    }

    /// Whether some label-preserving order isomorphism maps `self` onto
    /// `other`. Points with equal labels form chains, so the only candidate
    /// sends the k-th occurrence of each label to the k-th occurrence.
    pub fn is_isomorphic(&self, other: &Heap) -> bool {
        match occurrence_bijection(&self.labels, &other.labels) {
            Some(map) => (0..self.len()).all(|j| {
                (0..self.len()).all(|i| self.precedes(i, j) == other.precedes(map[i], map[j]))
            }),
            None => false,
        }
    }
}

/// Map sending the k-th occurrence of each label in `a` to the k-th
/// occurrence of the same label in `b`; `None` if the label multisets differ.
pub fn occurrence_bijection(a: &[u8], b: &[u8]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let mut occ_b: Vec<Vec<usize>> = vec![Vec::new(); 256];
    for (i, &s) in b.iter().enumerate() {
        occ_b[s as usize].push(i);
    }
    let mut seen = [0usize; 256];
    let mut map = Vec::with_capacity(a.len());
    for &s in a {
        let k = seen[s as usize];
        map.push(*occ_b[s as usize].get(k)?);
        seen[s as usize] += 1;
    }
    (seen.iter().zip(&occ_b).all(|(k, v)| *k == v.len())).then_some(map)
}

/// Heap of a word: `i ≺ j` iff `i < j` and the positions are linked by a
/// chain of non-commuting (or equal) letters.
pub fn heap_of(sys: &CoxeterSystem, w: &Word) -> Heap {
    let labels = w.letters().to_vec();
    let n = labels.len();
    let mut below: Vec<FixedBitSet> = Vec::with_capacity(n);
    for j in 0..n {
        let mut set = FixedBitSet::with_capacity(n);
        for i in (0..j).rev() {
            if set.contains(i) {
                continue;
            }
            let (a, b) = (labels[i], labels[j]);
            if a == b || sys.m(a, b) >= 3 {
                set.union_with(&below[i]);
                set.insert(i);
            }
        }
        below.push(set);
    }
    Heap::from_order(sys, labels, below)
}

/// Induced subposet on the points whose labels lie in `gens`, re-indexed in
/// increasing point order, with chain covers recomputed.
pub fn subheap(sys: &CoxeterSystem, h: &Heap, gens: &[u8]) -> Heap {
    let keep: Vec<usize> = (0..h.len())
        .filter(|&i| gens.contains(&h.label(i)))
        .collect();
    let n = keep.len();
    let labels = keep.iter().map(|&i| h.label(i)).collect();
    let below = keep
        .iter()
        .map(|&j| {
            let mut set = FixedBitSet::with_capacity(n);
            for (k, &i) in keep.iter().enumerate() {
                if h.precedes(i, j) {
                    set.insert(k);
                }
            }
            set
        })
        .collect();
    Heap::from_order(sys, labels, below)
}

/// Words of all linear extensions of `h`.
pub fn linear_extensions(h: &Heap, cap: usize) -> Result<BTreeSet<Word>> {
    fn go(
        h: &Heap,
        used: &mut FixedBitSet,
        cur: &mut Vec<u8>,
        out: &mut BTreeSet<Word>,
        cap: usize,
    ) -> Result<()> {
        if cur.len() == h.len() {
            if out.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            out.insert(Word::from(cur.clone()));
            return Ok(());
        }
        for i in 0..h.len() {
            if !used.contains(i) && h.below(i).is_subset(used) {
                used.insert(i);
                cur.push(h.label(i));
                go(h, used, cur, out, cap)?;
                cur.pop();
                used.set(i, false);
            }
        }
        Ok(())
    }
    let mut out = BTreeSet::new();
    let mut used = FixedBitSet::with_capacity(h.len());
    go(h, &mut used, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

/// Kinds of forbidden patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    None,
    ConvexAlternatingChain,
    CylindricConvexChain,
    SameLabelCover,
}

/// Outcome of a pattern search: the offending points, if any.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub points: Vec<usize>,
    pub pair: Option<(u8, u8)>,
}

impl Witness {
    pub fn none() -> Self {
        Witness {
            kind: WitnessKind::None,
            points: Vec::new(),
            pair: None,
        }
    }

    pub fn is_none(&self) -> bool {
        self.kind == WitnessKind::None
    }
}

/// Witnesses serialize as their point-index array.
impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(s)
    }
}

/// Pairs `(s, t)`, `s < t`, with `3 ≤ m(s,t) < ∞`, in generator order.
pub(crate) fn braid_pairs(sys: &CoxeterSystem) -> Vec<(u8, u8, usize)> {
    sys.edges()
        .into_iter()
        .filter_map(|(s, t)| {
            let m = sys.m(s, t);
            (m != INFINITY).then_some((s, t, m as usize))
        })
        .collect()
}

/// FC criterion: no same-label chain cover and no convex alternating chain of
/// `m(s,t)` points. Same-label covers are reported first, then chains by pair
/// and starting point.
pub fn is_fc_heap(sys: &CoxeterSystem, h: &Heap) -> Witness {
    if let Some(&(i, j)) = h
        .chain_covers()
        .iter()
        .find(|&&(i, j)| h.label(i) == h.label(j))
    {
        return Witness {
            kind: WitnessKind::SameLabelCover,
            points: vec![i, j],
            pair: None,
        };
    }
    for (s, t, m) in braid_pairs(sys) {
        let pts = h.points_of_pair(s, t);
        for window in pts.windows(m) {
            let alternates = window.windows(2).all(|p| h.label(p[0]) != h.label(p[1]));
            if alternates && h.interior(window[0], window[m - 1]) == m - 2 {
                let first = h.label(window[0]);
                let other = if first == s { t } else { s };
                return Witness {
                    kind: WitnessKind::ConvexAlternatingChain,
                    points: window.to_vec(),
                    pair: Some((first, other)),
                };
            }
        }
    }
    Witness::none()
}

/// Whether `w` is a reduced word of an FC element, by the heap criterion.
pub fn is_fc_reduced_word(sys: &CoxeterSystem, w: &Word) -> bool {
    is_fc_heap(sys, &heap_of(sys, w)).is_none()
}
