//! Coxeter systems, words, and the exact length oracle.

mod family;
mod geometric;
mod rewrite;
mod ring;
mod word;

pub use family::{build_family, Family};
pub use geometric::{is_involution, is_reduced, length, reflect, ElementMatrix, RootVector};
pub use rewrite::{
    braid_class, canonical_form, commutation_class, is_canonical_extension, is_fc_exhaustive,
    DEFAULT_CAP,
};
pub use ring::RingElem;
pub use word::Word;

use crate::error::{Error, Result};

/// Coxeter matrix entry for `m = ∞`.
pub const INFINITY: u32 = u32::MAX;

/// A Coxeter system with named generators.
///
/// Generators are indexed `0..rank()` in the fixed order used for canonical
/// forms and witness scans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Vec<u32>>,
    family: Family,
    rank: usize,
    neighbors: Vec<Vec<u8>>,
    cos2: Vec<Vec<RingElem>>,
}

impl CoxeterSystem {
    /// Builds a system from names and a symmetric matrix with entries in
    /// `{1, 2, 3, 4, 6, INFINITY}`.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        Self::with_family(names, matrix, Family::Custom, 0)
    }

    pub(crate) fn with_family(
        names: Vec<String>,
        matrix: Vec<Vec<u32>>,
        family: Family,
        rank: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n > 255 {
            return Err(Error::InvalidMatrix(format!(
                "{n} generators, at most 255 supported"
            )));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("matrix is not {n}x{n}")));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidMatrix(format!("bad generator name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidMatrix(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        let mut cos2 = vec![vec![RingElem::ZERO; n]; n];
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let m = matrix[i][j];
                if m != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                }
                if i == j {
                    if m != 1 {
                        return Err(Error::InvalidMatrix(format!("diagonal entry {m} at {i}")));
                    }
                    continue;
                }
                cos2[i][j] = match m {
                    2 => RingElem::ZERO,
                    3 => RingElem::ONE,
                    4 => RingElem::SQRT2,
                    6 => RingElem::SQRT3,
                    INFINITY => RingElem::int(2),
                    other => {
                        return Err(Error::UnsupportedEntry {
                            entry: other.to_string(),
                        })
                    }
                };
                if m >= 3 {
                    neighbors[i].push(j as u8);
                }
            }
        }
        Ok(CoxeterSystem {
            names,
            matrix,
            family,
            rank,
            neighbors,
            cos2,
        })
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank parameter passed to [`build_family`] (0 for custom systems).
    pub fn family_rank(&self) -> usize {
        self.rank
    }

    /// Display label such as `Ctilde 3`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Custom => "custom".into(),
            f if f.is_fixed_rank() => f.token().into(),
            f => format!("{} {}", f.token(), self.rank),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: u8) -> &str {
        &self.names[s as usize]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// `m(s, t)`.
    pub fn m(&self, s: u8, t: u8) -> u32 {
        self.matrix[s as usize][t as usize]
    }

    /// Diagram neighbors of `s`, in generator order.
    pub fn neighbors(&self, s: u8) -> &[u8] {
        &self.neighbors[s as usize]
    }

    /// True when `s ≠ t` and `m(s, t) = 2`.
    pub fn commute(&self, s: u8, t: u8) -> bool {
        self.m(s, t) == 2
    }

    /// `2cos(π/m(s,t))`, or 2 for `m = ∞`.
    pub fn cos2(&self, s: u8, t: u8) -> RingElem {
        self.cos2[s as usize][t as usize]
    }

    /// Diagram edges `(s, t)` with `s < t` and `m(s, t) ≥ 3`.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for s in 0..self.rank() as u8 {
            for &t in self.neighbors(s) {
                if s < t {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn generator(&self, token: &str) -> Result<u8> {
        self.names
            .iter()
            .position(|n| n == token)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownGenerator {
                token: token.to_string(),
            })
    }

    /// Parses whitespace-separated generator names; the empty string is the
    /// identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| self.generator(tok))
            .collect::<Result<Vec<u8>>>()
            .map(Word::from)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Returns a copy with the given off-diagonal entry replaced.
    pub fn with_entry(&self, s: u8, t: u8, m: u32) -> Result<Self> {
        let mut matrix = self.matrix.clone();
        matrix[s as usize][t as usize] = m;
        matrix[t as usize][s as usize] = m;
        Self::with_family(self.names.clone(), matrix, Family::Custom, 0)
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&s| s as usize >= self.rank()) {
            Some(s) => Err(Error::UnknownGenerator {
                token: format!("#{s}"),
            }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_matrices() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(CoxeterSystem::new(names.clone(), vec![vec![1, 3], vec![3, 1]]).is_ok());
        assert!(matches!(
            CoxeterSystem::new(names.clone(), vec![vec![1, 5], vec![5, 1]]),
            Err(Error::UnsupportedEntry { .. })
        ));
        assert!(CoxeterSystem::new(names.clone(), vec![vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterSystem::new(names, vec![vec![2, 3], vec![3, 1]]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let sys = build_family(Family::Ctilde, 2).unwrap();
        let w = sys.parse_word("t s1 u s1").unwrap();
        assert_eq!(w.letters(), &[0, 1, 2, 1]);
        assert_eq!(sys.format_word(&w), "t s1 u s1");
        assert!(sys.parse_word("").unwrap().is_empty());
        assert_eq!(
            sys.parse_word("t s9"),
            Err(Error::UnknownGenerator { token: "s9".into() })
        );
    }
}
