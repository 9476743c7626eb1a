use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CoxeterSystem;
use crate::error::{Error, Result};

/// Named families. Ranks are group subscripts: `A 3` is `A₃` with generators
/// `s1 s2 s3`, `Atilde 2` is `Ã₂` with `s0 s1 s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    Atilde,
    B,
    Ctilde,
    D,
    Btilde,
    Dtilde,
    G2tilde,
    E6tilde,
    E7tilde,
    /// Simply laced path `s0 – s1 – … – s_{n-1}`.
    Linear,
    Custom,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::A,
        Family::Atilde,
        Family::B,
        Family::Ctilde,
        Family::D,
        Family::Btilde,
        Family::Dtilde,
        Family::G2tilde,
        Family::E6tilde,
        Family::E7tilde,
        Family::Linear,
        Family::Custom,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::Atilde => "Atilde",
            Family::B => "B",
            Family::Ctilde => "Ctilde",
            Family::D => "D",
            Family::Btilde => "Btilde",
            Family::Dtilde => "Dtilde",
            Family::G2tilde => "G2tilde",
            Family::E6tilde => "E6tilde",
            Family::E7tilde => "E7tilde",
            Family::Linear => "linear",
            Family::Custom => "custom",
        }
    }

    /// Smallest accepted rank.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::Linear => 1,
            Family::Atilde | Family::B | Family::Ctilde | Family::D => 2,
            Family::Btilde => 3,
            Family::Dtilde => 4,
            Family::G2tilde => 2,
            Family::E6tilde => 6,
            Family::E7tilde => 7,
            Family::Custom => 0,
        }
    }

    pub fn is_fixed_rank(self) -> bool {
        matches!(self, Family::G2tilde | Family::E6tilde | Family::E7tilde)
    }

    pub fn is_affine(self) -> bool {
        matches!(
            self,
            Family::Atilde
                | Family::Ctilde
                | Family::Btilde
                | Family::Dtilde
                | Family::G2tilde
                | Family::E6tilde
                | Family::E7tilde
        )
    }

    pub fn is_exceptional(self) -> bool {
        self.is_fixed_rank()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily { token: s.into() })
    }
}

struct Builder {
    names: Vec<String>,
    matrix: Vec<Vec<u32>>,
}

impl Builder {
    fn new(names: Vec<String>) -> Self {
        let n = names.len();
        let mut matrix = vec![vec![2; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Builder { names, matrix }
    }

    fn idx(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .expect("known generator")
    }

    fn edge(&mut self, a: &str, b: &str, m: u32) -> &mut Self {
        let (i, j) = (self.idx(a), self.idx(b));
        self.matrix[i][j] = m;
        self.matrix[j][i] = m;
        self
    }

    fn path(&mut self, names: &[String]) -> &mut Self {
        for pair in names.windows(2) {
            self.edge(&pair[0], &pair[1], 3);
        }
        self
    }
}

fn s_range(lo: usize, hi: usize) -> Vec<String> {
    (lo..=hi).map(|i| format!("s{i}")).collect()
}

fn names(parts: &[&[String]]) -> Vec<String> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Builds the system of a named family.
///
/// Naming and generator order:
///
/// | family | generators | non-simple edges |
/// |---|---|---|
/// | `A r` | `s1 … sr` | |
/// | `Atilde r` | `s0 … sr`, cycle | |
/// | `B r` | `t s1 … s(r-1)` | `m(t,s1)=4` |
/// | `Ctilde r` | `t s1 … s(r-1) u` | `m(t,s1)=m(s(r-1),u)=4` |
/// | `D r` | `t1 t2 s1 … s(r-2)` | |
/// | `Btilde r` | `t1 t2 s1 … s(r-2) u` | `m(s(r-2),u)=4` |
/// | `Dtilde r` | `t1 t2 s1 … s(r-3) u1 u2` | |
/// | `G2tilde` | `s t u` | `m(t,u)=6` |
/// | `E6tilde` | `t s1 s2 s3 s1' s2' s3'` | |
/// | `E7tilde` | `t s0 s1 s2 s1' s2' s1'' s2''` | |
/// | `linear n` | `s0 … s(n-1)` | |
pub fn build_family(family: Family, rank: usize) -> Result<CoxeterSystem> {
    let min = family.min_rank();
    if family == Family::Custom {
        return Err(Error::Precondition(
            "custom systems are built from a matrix".into(),
        ));
    }
    let bad = if family.is_fixed_rank() {
        rank != 0 && rank != min
    } else {
        rank < min
    };
    if bad {
        return Err(Error::RankOutOfRange {
            family: family.token().into(),
            rank,
            min,
        });
    }
    let rank = if family.is_fixed_rank() { min } else { rank };
    let b = match family {
        Family::A => {
            let s = s_range(1, rank);
            let mut b = Builder::new(s.clone());
            b.path(&s);
            b
        }
        Family::Linear => {
            let s = s_range(0, rank - 1);
            let mut b = Builder::new(s.clone());
            b.path(&s);
            b
        }
        Family::Atilde => {
            let s = s_range(0, rank);
            let mut b = Builder::new(s.clone());
            b.path(&s).edge(&s[rank], &s[0], 3);
            b
        }
        Family::B => {
            let s = s_range(1, rank - 1);
            let mut b = Builder::new(names(&[&strs(&["t"]), &s]));
            b.path(&s).edge("t", "s1", 4);
            b
        }
        Family::Ctilde => {
            let s = s_range(1, rank - 1);
            let mut b = Builder::new(names(&[&strs(&["t"]), &s, &strs(&["u"])]));
            let last = s[rank - 2].clone();
            b.path(&s).edge("t", "s1", 4).edge(&last, "u", 4);
            b
        }
        Family::D => {
            let s = s_range(1, rank - 2);
            let mut b = Builder::new(names(&[&strs(&["t1", "t2"]), &s]));
            b.path(&s);
            if rank >= 3 {
                b.edge("t1", "s1", 3).edge("t2", "s1", 3);
            }
            b
        }
        Family::Btilde => {
            let s = s_range(1, rank - 2);
            let mut b = Builder::new(names(&[&strs(&["t1", "t2"]), &s, &strs(&["u"])]));
            let last = s[rank - 3].clone();
            b.path(&s)
                .edge("t1", "s1", 3)
                .edge("t2", "s1", 3)
                .edge(&last, "u", 4);
            b
        }
        Family::Dtilde => {
            let s = s_range(1, rank - 3);
            let mut b = Builder::new(names(&[&strs(&["t1", "t2"]), &s, &strs(&["u1", "u2"])]));
            let last = s[rank - 4].clone();
            b.path(&s)
                .edge("t1", "s1", 3)
                .edge("t2", "s1", 3)
                .edge(&last, "u1", 3)
                .edge(&last, "u2", 3);
            b
        }
        Family::G2tilde => {
            let mut b = Builder::new(strs(&["s", "t", "u"]));
            b.edge("s", "t", 3).edge("t", "u", 6);
            b
        }
        Family::E6tilde => {
            let mut b = Builder::new(strs(&["t", "s1", "s2", "s3", "s1'", "s2'", "s3'"]));
            for i in 1..=3 {
                let (si, sp) = (format!("s{i}"), format!("s{i}'"));
                b.edge("t", &si, 3).edge(&si, &sp, 3);
            }
            b
        }
        Family::E7tilde => {
            let mut b = Builder::new(strs(&["t", "s0", "s1", "s2", "s1'", "s2'", "s1''", "s2''"]));
            b.edge("t", "s0", 3);
            for i in 1..=2 {
                let (si, sp, spp) = (format!("s{i}"), format!("s{i}'"), format!("s{i}''"));
                b.edge("t", &si, 3).edge(&si, &sp, 3).edge(&sp, &spp, 3);
            }
            b
        }
        Family::Custom => unreachable!(),
    };
    CoxeterSystem::with_family(b.names, b.matrix, family, rank)
}
