use serde::Serialize;

use super::{is_fc_heap, Heap};
use crate::coxeter::{CoxeterSystem, Family};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlatLabel {
    R,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MotzkinStep {
    Up,
    Down,
    Flat(FlatLabel),
}

/// Heights `|H_{s_0}|, …, |H_{s_{n-1}}|` and the `n` cyclic steps between
/// consecutive heights (the last step returns to `s_0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MotzkinPath {
    pub heights: Vec<usize>,
    pub steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }
}

/// Motzkin profile of an FC heap in type `A` or `Ã`.
///
/// In type `A` the missing generator `s_0` has height 0. A flat step between
/// `s_i` and `s_{i+1}` at positive height is `R` when `s_i` occurs first.
pub fn motzkin_profile(sys: &CoxeterSystem, h: &Heap) -> Result<MotzkinPath> {
    // slot i of the cycle ↦ generator index, if any
    let slots: Vec<Option<u8>> = match sys.family() {
        Family::A => std::iter::once(None)
            .chain((0..sys.rank() as u8).map(Some))
            .collect(),
        Family::Atilde => (0..sys.rank() as u8).map(Some).collect(),
        _ => {
            return Err(Error::Precondition(format!(
                "Motzkin profiles are defined for A and Atilde, not {}",
                sys.label()
            )))
        }
    };
    if !is_fc_heap(sys, h).is_none() {
        return Err(Error::Precondition("heap is not FC".into()));
    }
    let first = |s: Option<u8>| s.and_then(|s| h.labels().iter().position(|&x| x == s));
    let heights: Vec<usize> = slots
        .iter()
        .map(|s| s.map_or(0, |s| h.points_of(s).len()))
        .collect();
    let n = slots.len();
    let steps = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            let (a, b) = (heights[i], heights[j]);
            if b > a {
                MotzkinStep::Up
            } else if b < a {
                MotzkinStep::Down
            } else if a == 0 || first(slots[i]) < first(slots[j]) {
                MotzkinStep::Flat(FlatLabel::R)
            } else {
                MotzkinStep::Flat(FlatLabel::L)
            }
        })
        .collect();
    Ok(MotzkinPath { heights, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_family, Word};
    use crate::heap::heap_of;
    use FlatLabel::*;
    use MotzkinStep::*;

    #[test]
    fn identity_and_single_letter() {
        let a3 = build_family(Family::A, 3).unwrap();
        let p = motzkin_profile(&a3, &heap_of(&a3, &Word::empty())).unwrap();
        assert_eq!(p.heights, vec![0, 0, 0, 0]);
        assert_eq!(p.steps, vec![Flat(R); 4]);
        let a2 = build_family(Family::A, 2).unwrap();
        let p = motzkin_profile(&a2, &heap_of(&a2, &a2.parse_word("s1").unwrap())).unwrap();
        assert_eq!(p.heights, vec![0, 1, 0]);
        assert_eq!(p.steps, vec![Up, Down, Flat(R)]);
    }

    /// Our reading of the path drawn for `s14 s1 s0 s2 s6 s5 s7 s9 s12 s11`
    /// in `Ã_14`.
    #[test]
    fn fifteen_cycle_element() {
        let sys = build_family(Family::Atilde, 14).unwrap();
        let w = sys.parse_word("s14 s1 s0 s2 s6 s5 s7 s9 s12 s11").unwrap();
        let p = motzkin_profile(&sys, &heap_of(&sys, &w)).unwrap();
        assert_eq!(p.heights, vec![1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1]);
        assert_eq!(
            p.steps,
            vec![
                Flat(L),
                Flat(R),
                Down,
                Flat(R),
                Up,
                Flat(L),
                Flat(R),
                Down,
                Up,
                Down,
                Up,
                Flat(L),
                Down,
                Up,
                Flat(R),
            ]
        );
    }

    #[test]
    fn rejects_non_fc_and_other_families() {
        let a2 = build_family(Family::A, 2).unwrap();
        let h = heap_of(&a2, &a2.parse_word("s1 s2 s1").unwrap());
        assert!(motzkin_profile(&a2, &h).is_err());
        let c2 = build_family(Family::Ctilde, 2).unwrap();
        assert!(motzkin_profile(&c2, &heap_of(&c2, &Word::empty())).is_err());
    }
}
