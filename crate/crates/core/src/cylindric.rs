//! Cylindric transformation of heaps and the CFC pattern criterion.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::coxeter::{
    braid_class, canonical_form, commutation_class, is_fc_exhaustive, is_reduced, CoxeterSystem,
    ElementMatrix, Word, DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::heap::{braid_pairs, heap_of, occurrence_bijection, Heap, Witness, WitnessKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    /// A chain cover of the underlying heap.
    Base,
    /// Added by the cylindric transformation; always points backwards or is a
    /// loop.
    Wrap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CylEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

/// A heap with its chain covers and wrap edges. Not a poset: no closure is
/// ever taken over wrap edges.
#[derive(Clone, Debug)]
pub struct CylindricHeap {
    base: Heap,
    edges: Vec<CylEdge>,
    out: Vec<Vec<usize>>,
}

impl CylindricHeap {
    fn new(base: Heap, mut edges: Vec<CylEdge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut out = vec![Vec::new(); base.len()];
        for e in &edges {
            if e.from != e.to && !out[e.from].contains(&e.to) {
                out[e.from].push(e.to);
            }
        }
        for v in &mut out {
            v.sort_unstable();
        }
        CylindricHeap { base, edges, out }
    }

    pub fn base(&self) -> &Heap {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn label(&self, i: usize) -> u8 {
        self.base.label(i)
    }

    /// Edges sorted by `(from, to, kind)`.
    pub fn edges(&self) -> &[CylEdge] {
        &self.edges
    }

    /// Out-neighbors of `i`, loops excluded.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    /// Edge pairs without tags, loops included.
    pub fn untagged(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.edges.iter().map(|e| (e.from, e.to)).collect();
        v.dedup();
        v
    }
}

/// Chain covers of `h` plus wrap edges `b → a`:
/// for each generator whose first point `a` is minimal in `h` and last point
/// `b` is maximal in `h` (a loop when it occurs once), and for each diagram
/// edge `{s, t}` whose first and last points in `H_{s,t}` carry different
/// labels.
pub fn cylindric_transform(sys: &CoxeterSystem, h: &Heap) -> CylindricHeap {
    let mut edges: Vec<CylEdge> = h
        .chain_covers()
        .iter()
        .map(|&(from, to)| CylEdge {
            from,
            to,
            kind: EdgeKind::Base,
        })
        .collect();
    for s in 0..sys.rank() as u8 {
        let pts = h.points_of(s);
        if let (Some(&a), Some(&b)) = (pts.first(), pts.last()) {
            if h.is_minimal(a) && h.is_maximal(b) {
                edges.push(CylEdge {
                    from: b,
                    to: a,
                    kind: EdgeKind::Wrap,
                });
            }
        }
    }
    for (s, t) in sys.edges() {
        let pts = h.points_of_pair(s, t);
        if let (Some(&a), Some(&b)) = (pts.first(), pts.last()) {
            if h.label(a) != h.label(b) {
                edges.push(CylEdge {
                    from: b,
                    to: a,
                    kind: EdgeKind::Wrap,
                });
            }
        }
    }
    CylindricHeap::new(h.clone(), edges)
}

/// Length of the shortest prefix containing every letter of `w`.
pub fn covering_prefix_len(w: &Word) -> usize {
    let support = w.support().len();
    let mut seen = [false; 256];
    let mut count = 0;
    for (i, &s) in w.letters().iter().enumerate() {
        if !seen[s as usize] {
            seen[s as usize] = true;
            count += 1;
            if count == support {
                return i + 1;
            }
        }
    }
    0
}

/// Cylindric heap via the word construction: take the heap of `w·w₁` with
/// `w₁` the shortest prefix containing every letter of `w`, keep its chain
/// covers, and identify point `k + i` with point `i`. Covers crossing from
/// `w` into the copy of `w₁` become wrap edges.
pub fn cylindric_via_concat(sys: &CoxeterSystem, w: &Word) -> CylindricHeap {
    let k = w.len();
    let p = covering_prefix_len(w);
    let ext = w.concat(&Word::from(&w.letters()[..p]));
    let h = heap_of(sys, &ext);
    let fold = |x: usize| if x < k { x } else { x - k };
    let edges = h
        .chain_covers()
        .iter()
        .map(|&(i, j)| CylEdge {
            from: fold(i),
            to: fold(j),
            kind: if i < k && j >= k {
                EdgeKind::Wrap
            } else {
                EdgeKind::Base
            },
        })
        .collect();
    CylindricHeap::new(heap_of(sys, w), edges)
}

/// First edge (loops included) joining two points with equal labels.
pub fn find_same_label_cover(ch: &CylindricHeap) -> Option<(usize, usize)> {
    ch.edges
        .iter()
        .find(|e| ch.label(e.from) == ch.label(e.to))
        .map(|e| (e.from, e.to))
}

fn same_label_violation(ch: &CylindricHeap) -> Option<(usize, usize)> {
    ch.edges
        .iter()
        .find(|e| e.from != e.to && ch.label(e.from) == ch.label(e.to))
        .map(|e| (e.from, e.to))
}

/// Whether some all-distinct path `i_1 → … → i_k → u_1 → … → u_d → i_m`
/// leaves the chain. Without same-label edges the only edge from `i_k` back
/// into the chain's pair is `i_k → i_{k+1}`, so any bypass is found as an
/// exit `i_k → v ∉ chain` followed by a path from `v` to `i_m` avoiding
/// `i_1 … i_k`.
fn has_bypass(ch: &CylindricHeap, chain: &[usize]) -> bool {
    let n = ch.len();
    let last = *chain.last().expect("nonempty chain");
    let mut on_chain = FixedBitSet::with_capacity(n);
    for &c in chain {
        on_chain.insert(c);
    }
    for k in 0..chain.len() - 1 {
        let mut blocked = FixedBitSet::with_capacity(n);
        for &c in &chain[..=k] {
            blocked.insert(c);
        }
        for &v in ch.successors(chain[k]) {
            if on_chain.contains(v) {
                continue;
            }
            let mut seen = blocked.clone();
            seen.insert(v);
            let mut queue = VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                if x == last {
                    return true;
                }
                for &y in ch.successors(x) {
                    if !seen.contains(y) {
                        seen.insert(y);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    false
}

/// First cylindric convex chain of `m(s,t)` distinct points with alternating
/// labels, scanning pairs in generator order and start points in index order.
pub fn find_cylindric_convex_chain(sys: &CoxeterSystem, ch: &CylindricHeap) -> Option<Witness> {
    fn extend(ch: &CylindricHeap, chain: &mut Vec<usize>, m: usize, s: u8, t: u8) -> bool {
        if chain.len() == m {
            return !has_bypass(ch, chain);
        }
        let cur = *chain.last().unwrap();
        let want = if ch.label(cur) == s { t } else { s };
        for &v in ch.successors(cur) {
            if ch.label(v) == want && !chain.contains(&v) {
                chain.push(v);
                if extend(ch, chain, m, s, t) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }
    for (s, t, m) in braid_pairs(sys) {
        for start in 0..ch.len() {
            let l = ch.label(start);
            if l != s && l != t {
                continue;
            }
            let mut chain = vec![start];
            if extend(ch, &mut chain, m, s, t) {
                let other = if l == s { t } else { s };
                return Some(Witness {
                    kind: WitnessKind::CylindricConvexChain,
                    points: chain,
                    pair: Some((l, other)),
                });
            }
        }
    }
    None
}

/// CFC criterion on the cylindric transformation: no same-label edge between
/// distinct points and no cylindric convex chain. Same-label edges are
/// reported first.
pub fn is_cfc_heap(sys: &CoxeterSystem, h: &Heap) -> Witness {
    cfc_witness(sys, &cylindric_transform(sys, h))
}

pub(crate) fn cfc_witness(sys: &CoxeterSystem, ch: &CylindricHeap) -> Witness {
    if let Some((i, j)) = same_label_violation(ch) {
        return Witness {
            kind: WitnessKind::SameLabelCover,
            points: vec![i, j],
            pair: None,
        };
    }
    find_cylindric_convex_chain(sys, ch).unwrap_or_else(Witness::none)
}

/// Whether `w` is a reduced word of a CFC element.
pub fn is_cfc_word(sys: &CoxeterSystem, w: &Word) -> bool {
    is_reduced(sys, w) && is_cfc_heap(sys, &heap_of(sys, w)).is_none()
}

/// How the definitional oracle walks `R(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every cyclic shift of every member of the braid class.
    Full,
    /// FC test first, then cyclic shifts of the commutation class only.
    Commutation,
}

/// Definitional CFC oracle with a per-element memo, for sweeps.
pub struct DefinitionalOracle<'a> {
    sys: &'a CoxeterSystem,
    strategy: Strategy,
    fc_memo: HashMap<Word, bool>,
}

impl<'a> DefinitionalOracle<'a> {
    pub fn new(sys: &'a CoxeterSystem, strategy: Strategy) -> Self {
        DefinitionalOracle {
            sys,
            strategy,
            fc_memo: HashMap::new(),
        }
    }

    /// Reduced and FC by closure comparison, memoized by commutation class.
    fn reduced_fc(&mut self, y: &Word) -> Result<bool> {
        let key = canonical_form(self.sys, y);
        if let Some(&v) = self.fc_memo.get(&key) {
            return Ok(v);
        }
        let v = is_reduced(self.sys, y) && is_fc_exhaustive(self.sys, y)?;
        self.fc_memo.insert(key, v);
        Ok(v)
    }

    pub fn is_cfc(&mut self, w: &Word) -> Result<bool> {
        let sys = self.sys;
        if !is_reduced(sys, w) {
            return Err(Error::NotReduced {
                word: sys.format_word(w),
            });
        }
        let reps = match self.strategy {
            Strategy::Full => braid_class(sys, w, DEFAULT_CAP)?,
            Strategy::Commutation => {
                if !self.reduced_fc(w)? {
                    return Ok(false);
                }
                commutation_class(sys, w, DEFAULT_CAP)?
            }
        };
        for x in &reps {
            for k in 0..x.len().max(1) {
                if !self.reduced_fc(&x.cyclic_shift(k))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Every cyclic shift of every reduced word of `w` is a reduced word of an
/// FC element. Errors on non-reduced input.
pub fn is_cfc_definitional(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    DefinitionalOracle::new(sys, Strategy::Commutation).is_cfc(w)
}

/// Same oracle walking the full braid class.
pub fn is_cfc_definitional_full(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    DefinitionalOracle::new(sys, Strategy::Full).is_cfc(w)
}

/// Element key for memoizing per-element properties in sweeps.
pub fn element_key(sys: &CoxeterSystem, w: &Word) -> ElementMatrix {
    ElementMatrix::of_word(sys, w)
}

/// Checks that the cylindric heaps of `x` and `y` coincide under the point
/// bijection induced by rotating `x` left by `k` and then matching label
/// occurrences; `y` must be commutation equivalent to that rotation.
pub fn shift_invariant(sys: &CoxeterSystem, x: &Word, k: usize, y: &Word) -> bool {
    let len = x.len();
    if len == 0 {
        return y.is_empty();
    }
    let rotated = x.cyclic_shift(k);
    let Some(occ) = occurrence_bijection(rotated.letters(), y.letters()) else {
        return false;
    };
    // point i of x sits at (i − k) mod len in the rotation
    let map: Vec<usize> = (0..len).map(|i| occ[(i + len - k % len) % len]).collect();
    let cx = cylindric_via_concat(sys, x);
    let cy = cylindric_via_concat(sys, y);
    let mut mapped: Vec<(usize, usize)> = cx
        .untagged()
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .collect();
    mapped.sort_unstable();
    mapped.dedup();
    mapped == cy.untagged()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_family, Family};
    use crate::heap::is_fc_heap;

    const FIG2: &str = "s2 s1 s0 s3 s2 s6 s5 s4 s5 s6 s3";

    fn sys(f: Family, r: usize) -> CoxeterSystem {
        build_family(f, r).unwrap()
    }

    fn ch(sys: &CoxeterSystem, w: &str) -> CylindricHeap {
        cylindric_transform(sys, &heap_of(sys, &sys.parse_word(w).unwrap()))
    }

    fn wraps(c: &CylindricHeap) -> Vec<(usize, usize)> {
        c.edges()
            .iter()
            .filter(|e| e.kind == EdgeKind::Wrap)
            .map(|e| (e.from, e.to))
            .collect()
    }

    #[test]
    fn transform_examples() {
        let a3 = sys(Family::A, 3);
        assert_eq!(wraps(&ch(&a3, "s1 s3")), vec![(0, 0), (1, 1)]);
        let a2 = sys(Family::A, 2);
        let c = ch(&a2, "s1 s2");
        assert_eq!(wraps(&c), vec![(1, 0)]);
        assert_eq!(find_same_label_cover(&c), None);
        let c = ch(&a2, "s1");
        assert_eq!(find_same_label_cover(&c), Some((0, 0)));
    }

    #[test]
    fn figure_two_word() {
        let lin = sys(Family::Linear, 7);
        let c = ch(&lin, FIG2);
        let s6 = lin.generator("s6").unwrap();
        assert!(wraps(&c).contains(&(9, 5)));
        assert_eq!(find_same_label_cover(&c), Some((9, 5)));
        assert_eq!(c.label(9), s6);
        let h = heap_of(&lin, &lin.parse_word(FIG2).unwrap());
        let w = is_cfc_heap(&lin, &h);
        assert_eq!(w.kind, WitnessKind::SameLabelCover);
        assert_eq!(w.points, vec![9, 5]);
        assert!(!is_cfc_definitional(&lin, &lin.parse_word(FIG2).unwrap()).unwrap());
    }

    #[test]
    fn concat_prefix_example() {
        let lin = sys(Family::Linear, 7);
        let w = lin
            .parse_word("s1 s0 s1 s3 s2 s6 s5 s4 s6 s5 s3 s0 s1 s0")
            .unwrap();
        let p = covering_prefix_len(&w);
        assert_eq!(
            lin.format_word(&Word::from(&w.letters()[..p])),
            "s1 s0 s1 s3 s2 s6 s5 s4"
        );
        let c = cylindric_via_concat(&lin, &w);
        let t = cylindric_transform(&lin, &heap_of(&lin, &w));
        assert_eq!(c.edges(), t.edges());
    }

    #[test]
    fn chain_examples() {
        let a2 = sys(Family::A, 2);
        let w = find_cylindric_convex_chain(&a2, &ch(&a2, "s1 s2 s1")).unwrap();
        assert_eq!(w.points, vec![0, 1, 2]);
        let at2 = sys(Family::Atilde, 2);
        assert!(find_cylindric_convex_chain(&at2, &ch(&at2, "s0 s1 s2 s0 s1 s2")).is_none());
        let c2 = sys(Family::Ctilde, 2);
        assert!(find_cylindric_convex_chain(&c2, &ch(&c2, "t s1")).is_none());
    }

    #[test]
    fn word_examples() {
        let a2 = sys(Family::A, 2);
        let c2 = sys(Family::Ctilde, 2);
        let p = |s: &CoxeterSystem, w: &str| s.parse_word(w).unwrap();
        assert!(is_cfc_word(&a2, &p(&a2, "s1 s2")));
        assert!(is_cfc_word(&c2, &p(&c2, "t s1 u s1")));
        assert!(!is_cfc_word(&a2, &p(&a2, "s1 s2 s1")));
        assert!(!is_cfc_definitional(&a2, &p(&a2, "s1 s2 s1")).unwrap());
        let at2 = sys(Family::Atilde, 2);
        assert!(is_cfc_definitional(&at2, &p(&at2, "s0 s1 s2 s0 s1 s2")).unwrap());
        assert!(is_cfc_definitional(&a2, &Word::empty()).unwrap());
        assert!(matches!(
            is_cfc_definitional(&a2, &p(&a2, "s1 s1")),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn lifting_of_convex_chains() {
        let c3 = sys(Family::Ctilde, 3);
        for w in crate::testutil::all_words(4, 6) {
            let h = heap_of(&c3, &w);
            let fc = is_fc_heap(&c3, &h);
            if fc.kind == WitnessKind::ConvexAlternatingChain {
                let c = cylindric_transform(&c3, &h);
                assert!(!has_bypass(&c, &fc.points), "{w:?}");
            }
            if is_cfc_heap(&c3, &h).is_none() {
                assert!(fc.is_none(), "{w:?}");
            }
        }
    }

    #[test]
    fn both_definitional_strategies_agree() {
        for (f, r) in [(Family::A, 3), (Family::Ctilde, 2), (Family::G2tilde, 2)] {
            let sys = sys(f, r);
            for len in 0..=6 {
                for w in crate::testutil::all_words(sys.rank() as u8, len) {
                    if !is_reduced(&sys, &w) {
                        continue;
                    }
                    assert_eq!(
                        is_cfc_definitional(&sys, &w).unwrap(),
                        is_cfc_definitional_full(&sys, &w).unwrap(),
                        "{f} {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn concat_matches_transform_on_fc_words() {
        for (f, r) in [
            (Family::A, 3),
            (Family::Ctilde, 2),
            (Family::Btilde, 3),
            (Family::G2tilde, 2),
        ] {
            let sys = sys(f, r);
            for len in 0..=6 {
                for w in crate::testutil::all_words(sys.rank() as u8, len) {
                    let h = heap_of(&sys, &w);
                    if !is_fc_heap(&sys, &h).is_none() {
                        continue;
                    }
                    let a = cylindric_via_concat(&sys, &w);
                    let b = cylindric_transform(&sys, &h);
                    assert_eq!(a.edges(), b.edges(), "{f} {}", sys.format_word(&w));
                }
            }
        }
    }

    #[test]
    fn criterion_matches_definition() {
        for (f, r) in [
            (Family::A, 3),
            (Family::Ctilde, 2),
            (Family::Btilde, 3),
            (Family::G2tilde, 2),
            (Family::D, 4),
        ] {
            let sys = sys(f, r);
            let mut oracle = DefinitionalOracle::new(&sys, Strategy::Commutation);
            for len in 0..=6 {
                for w in crate::testutil::all_words(sys.rank() as u8, len) {
                    if !is_reduced(&sys, &w) {
                        continue;
                    }
                    assert_eq!(
                        is_cfc_word(&sys, &w),
                        oracle.is_cfc(&w).unwrap(),
                        "{f} {}",
                        sys.format_word(&w)
                    );
                }
            }
        }
    }

    #[test]
    fn shifts_preserve_cylindric_heap() {
        let c2 = sys(Family::Ctilde, 2);
        for len in 1..=6 {
            for x in crate::testutil::all_words(3, len) {
                if !is_cfc_word(&c2, &x) {
                    continue;
                }
                for k in 0..len {
                    let rotated = x.cyclic_shift(k);
                    for y in commutation_class(&c2, &rotated, DEFAULT_CAP).unwrap() {
                        assert!(shift_invariant(&c2, &x, k, &y), "{x:?} {k} {y:?}");
                    }
                }
            }
        }
    }
}
