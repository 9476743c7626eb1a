use std::collections::BTreeSet;

use crate::coxeter::{canonical_form, CoxeterSystem, Family, Word};
use crate::error::{Error, Result};

/// One period of the zigzag word, with each fork pair as a two-letter slot:
/// `t s1 … s_{n−1} u s_{n−1} … s1` and its forked variants.
fn period_slots(sys: &CoxeterSystem) -> Result<Vec<Vec<u8>>> {
    let n = sys.rank() as u8;
    let (head, mid, tail): (Vec<u8>, std::ops::Range<u8>, Vec<u8>) = match sys.family() {
        Family::Ctilde => (vec![0], 1..n - 1, vec![n - 1]),
        Family::Btilde => (vec![0, 1], 2..n - 1, vec![n - 1]),
        Family::Dtilde => (vec![0, 1], 2..n - 2, vec![n - 2, n - 1]),
        _ => {
            return Err(Error::Precondition(format!(
                "zigzag words are defined for Ctilde, Btilde and Dtilde, not {}",
                sys.label()
            )))
        }
    };
    let mut slots = vec![head];
    slots.extend(mid.clone().map(|s| vec![s]));
    slots.push(tail);
    slots.extend(mid.rev().map(|s| vec![s]));
    Ok(slots)
}

/// Whether `w` is commutation equivalent to a factor of the infinite zigzag
/// word in which every middle generator occurs `2k ≥ 2` times and every end
/// generator `k` times. Such a factor spans exactly `k` periods, so it is a
/// rotation of the `k`-th power of a period with each fork slot in either
/// order.
pub fn zigzag_factor_check(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let slots = period_slots(sys)?;
    let counts = w.occurrence_counts(sys.rank());
    let ends: BTreeSet<u8> = [&slots[0], &slots[sys_mid_len(&slots) + 1]]
        .into_iter()
        .flatten()
        .copied()
        .collect();
    let mid_count = (0..sys.rank() as u8)
        .find(|s| !ends.contains(s))
        .map(|s| counts[s as usize])
        .unwrap_or(0);
    if mid_count < 2 || mid_count % 2 != 0 {
        return Ok(false);
    }
    let k = mid_count / 2;
    let counts_ok = (0..sys.rank() as u8).all(|s| {
        let want = if ends.contains(&s) { k } else { 2 * k };
        counts[s as usize] == want
    });
    if !counts_ok {
        return Ok(false);
    }
    let target = canonical_form(sys, w);
    let forks: Vec<usize> = (0..slots.len()).filter(|&i| slots[i].len() == 2).collect();
    for mask in 0..1u32 << forks.len() {
        let mut period = Vec::new();
        for (i, slot) in slots.iter().enumerate() {
            match forks.iter().position(|&f| f == i) {
                Some(b) if mask >> b & 1 == 1 => period.extend(slot.iter().rev()),
                _ => period.extend(slot),
            }
        }
        let word = Word::from(period).power(k);
        for r in 0..word.len() {
            if canonical_form(sys, &word.cyclic_shift(r)) == target {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Number of middle generators: the slots are head, mid, tail, mid reversed.
fn sys_mid_len(slots: &[Vec<u8>]) -> usize {
    (slots.len() - 2) / 2
}
