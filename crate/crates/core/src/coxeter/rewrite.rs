//! Commutation and braid closures, and the lexicographic normal form.

use std::collections::{BTreeSet, VecDeque};

use super::{is_reduced, CoxeterSystem, Word, INFINITY};
use crate::error::{Error, Result};

/// Default state cap for closures.
pub const DEFAULT_CAP: usize = 1_000_000;

fn closure<F>(start: &Word, cap: usize, mut moves: F) -> Result<BTreeSet<Word>>
where
    F: FnMut(&[u8], &mut dyn FnMut(Vec<u8>)),
{
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start.clone()]);
    let mut overflow = false;
    while let Some(w) = queue.pop_front() {
        moves(w.letters(), &mut |next| {
            let next = Word::from(next);
            if !overflow && !seen.contains(&next) {
                if seen.len() >= cap {
                    overflow = true;
                    return;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        });
        if overflow {
            return Err(Error::CapExceeded { cap });
        }
    }
    Ok(seen)
}

/// All words reachable from `w` by swapping adjacent commuting letters.
pub fn commutation_class(sys: &CoxeterSystem, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    sys.check_word(w)?;
    closure(w, cap, |v, emit| {
        for i in 0..v.len().saturating_sub(1) {
            if sys.commute(v[i], v[i + 1]) {
                let mut next = v.to_vec();
                next.swap(i, i + 1);
                emit(next);
            }
        }
    })
}

/// `R(w)`: closure of a reduced word under all braid moves.
pub fn braid_class(sys: &CoxeterSystem, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    sys.check_word(w)?;
    if !is_reduced(sys, w) {
        return Err(Error::NotReduced {
            word: sys.format_word(w),
        });
    }
    closure(w, cap, |v, emit| {
        for i in 0..v.len().saturating_sub(1) {
            let (s, t) = (v[i], v[i + 1]);
            if s == t {
                continue;
            }
            let m = sys.m(s, t);
            if m == INFINITY || i + m as usize > v.len() {
                continue;
            }
            let m = m as usize;
            let alternates = (0..m).all(|k| v[i + k] == if k % 2 == 0 { s } else { t });
            if alternates {
                let mut next = v.to_vec();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { t } else { s };
                }
                emit(next);
            }
        }
    })
}

/// Definitional FC test: `R(w)` equals the commutation class of `w`.
pub fn is_fc_exhaustive(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let braid = braid_class(sys, w, DEFAULT_CAP)?;
    let comm = commutation_class(sys, w, DEFAULT_CAP)?;
    Ok(braid.len() == comm.len())
}

/// Lexicographically least word in the commutation class of `w`, built by
/// repeatedly emitting the least letter among the minimal points of the heap.
pub fn canonical_form(sys: &CoxeterSystem, w: &Word) -> Word {
    let mut rest: Vec<u8> = w.letters().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for j in 0..rest.len() {
            let x = rest[j];
            if best.is_some_and(|b| rest[b] <= x) {
                continue;
            }
            let minimal = rest[..j].iter().all(|&y| y != x && sys.commute(x, y));
            if minimal {
                best = Some(j);
            }
        }
        let j = best.expect("a nonempty heap has a minimal point");
        out.push(rest.remove(j));
    }
    Word::from(out)
}

/// Given that `u` is canonical, whether `u·s` is canonical.
pub fn is_canonical_extension(sys: &CoxeterSystem, u: &[u8], s: u8) -> bool {
    for &x in u.iter().rev() {
        if x == s || !sys.commute(x, s) {
            return true;
        }
        if x > s {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_family, Family};
    use crate::testutil::all_words;

    fn set(sys: &CoxeterSystem, words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|w| sys.parse_word(w).unwrap()).collect()
    }

    #[test]
    fn commutation_examples() {
        let a3 = build_family(Family::A, 3).unwrap();
        let w = a3.parse_word("s1 s3").unwrap();
        assert_eq!(
            commutation_class(&a3, &w, DEFAULT_CAP).unwrap(),
            set(&a3, &["s1 s3", "s3 s1"])
        );
        let a2 = build_family(Family::A, 2).unwrap();
        let w = a2.parse_word("s1 s2").unwrap();
        assert_eq!(commutation_class(&a2, &w, DEFAULT_CAP).unwrap().len(), 1);
        let lin = build_family(Family::Linear, 7).unwrap();
        let w = lin.parse_word("s2 s1 s0 s3 s2").unwrap();
        assert_eq!(commutation_class(&lin, &w, DEFAULT_CAP).unwrap().len(), 5);
    }

    #[test]
    fn braid_examples() {
        let a2 = build_family(Family::A, 2).unwrap();
        let w = a2.parse_word("s1 s2 s1").unwrap();
        assert_eq!(
            braid_class(&a2, &w, DEFAULT_CAP).unwrap(),
            set(&a2, &["s1 s2 s1", "s2 s1 s2"])
        );
        assert!(!is_fc_exhaustive(&a2, &w).unwrap());
        let c2 = build_family(Family::Ctilde, 2).unwrap();
        let w = c2.parse_word("t s1 t s1").unwrap();
        assert_eq!(
            braid_class(&c2, &w, DEFAULT_CAP).unwrap(),
            set(&c2, &["t s1 t s1", "s1 t s1 t"])
        );
        assert!(!is_fc_exhaustive(&c2, &w).unwrap());
        let a3 = build_family(Family::A, 3).unwrap();
        let w = a3.parse_word("s1 s3").unwrap();
        assert_eq!(braid_class(&a3, &w, DEFAULT_CAP).unwrap().len(), 2);
        assert!(is_fc_exhaustive(&a3, &w).unwrap());
        let bad = a2.parse_word("s1 s1").unwrap();
        assert!(matches!(
            braid_class(&a2, &bad, DEFAULT_CAP),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn cap_is_an_error() {
        let lin = build_family(Family::Linear, 7).unwrap();
        let w = lin.parse_word("s0 s2 s4 s6").unwrap();
        assert_eq!(
            commutation_class(&lin, &w, 10),
            Err(Error::CapExceeded { cap: 10 })
        );
        assert_eq!(commutation_class(&lin, &w, 24).unwrap().len(), 24);
    }

    #[test]
    fn canonical_examples() {
        let a3 = build_family(Family::A, 3).unwrap();
        let c = |s: &str| a3.format_word(&canonical_form(&a3, &a3.parse_word(s).unwrap()));
        assert_eq!(c("s3 s1"), "s1 s3");
        assert_eq!(c("s2 s3 s1 s2"), "s2 s1 s3 s2");
        let a2 = build_family(Family::A, 2).unwrap();
        let w = a2.parse_word("s1 s2").unwrap();
        assert_eq!(canonical_form(&a2, &w), w);
    }

    /// canonical(x) = canonical(y) ⇔ y in the class of x, and canonical is the
    /// lex-min member of its class.
    #[test]
    fn canonical_form_characterizes_classes() {
        let a3 = build_family(Family::A, 3).unwrap();
        for len in 0..=8 {
            for w in all_words(3, len) {
                let class = commutation_class(&a3, &w, DEFAULT_CAP).unwrap();
                let c = canonical_form(&a3, &w);
                assert_eq!(&c, class.iter().next().unwrap());
                for y in &class {
                    assert_eq!(canonical_form(&a3, y), c);
                }
                let canonical = w == c;
                let incremental = (0..len)
                    .all(|k| is_canonical_extension(&a3, &w.letters()[..k], w.letters()[k]));
                assert_eq!(canonical, incremental, "{:?}", w);
            }
        }
    }

    /// Braid classes of reduced words contain only reduced words of equal length.
    #[test]
    fn matsumoto_consistency() {
        let b3 = build_family(Family::B, 3).unwrap();
        for len in 0..=6 {
            for w in all_words(3, len) {
                if !is_reduced(&b3, &w) {
                    continue;
                }
                let len_w = crate::coxeter::length(&b3, &w);
                for x in braid_class(&b3, &w, DEFAULT_CAP).unwrap() {
                    assert!(is_reduced(&b3, &x));
                    assert_eq!(crate::coxeter::length(&b3, &x), len_w);
                }
            }
        }
    }
}
