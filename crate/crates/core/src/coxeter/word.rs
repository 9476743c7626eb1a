use serde::{Deserialize, Serialize};

/// A finite sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: u8) {
        self.0.push(s);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.0.pop()
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    /// `s_{i_k} … s_{i_{k-1}}`: rotates left by `k` (taken modulo the length).
    pub fn cyclic_shift(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.0.len());
        Word(v)
    }

    /// `|w_s|` for every generator `s < rank`.
    pub fn occurrence_counts(&self, rank: usize) -> Vec<usize> {
        let mut counts = vec![0; rank];
        for &s in &self.0 {
            counts[s as usize] += 1;
        }
        counts
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `w^k`.
    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Generators present, in increasing order.
    pub fn support(&self) -> Vec<u8> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts() {
        let w = Word::from(vec![1, 2, 3]);
        assert_eq!(w.cyclic_shift(1).letters(), &[2, 3, 1]);
        assert_eq!(w.cyclic_shift(0), w);
        assert_eq!(w.cyclic_shift(4).letters(), &[2, 3, 1]);
        assert_eq!(Word::empty().cyclic_shift(5), Word::empty());
    }

    #[test]
    fn counts() {
        let w = Word::from(vec![0, 1, 2, 1]);
        assert_eq!(w.occurrence_counts(3), vec![1, 2, 1]);
        assert_eq!(Word::empty().occurrence_counts(3), vec![0, 0, 0]);
        assert_eq!(
            Word::from(vec![0, 1, 2, 0, 1, 2]).occurrence_counts(3),
            vec![2, 2, 2]
        );
        assert_eq!(w.support(), vec![0, 1, 2]);
        assert_eq!(w.power(2).len(), 8);
    }
}
