//! Geometric representation: simple reflections on root coordinates and the
//! root-positivity length oracle.

use super::{CoxeterSystem, RingElem, Word};

/// Coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector(pub Vec<RingElem>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![RingElem::ZERO; n])
    }

    /// `α_s`.
    pub fn simple(n: usize, s: u8) -> Self {
        let mut v = Self::zero(n);
        v.0[s as usize] = RingElem::ONE;
        v
    }

    /// Sign of the first nonzero coordinate; roots never mix signs.
    pub fn sign(&self) -> i32 {
        self.0
            .iter()
            .map(RingElem::signum)
            .find(|&s| s != 0)
            .unwrap_or(0)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// True when coordinates are all ≥ 0 or all ≤ 0.
    pub fn is_sign_coherent(&self) -> bool {
        let signs: Vec<i32> = self.0.iter().map(RingElem::signum).collect();
        !(signs.contains(&1) && signs.contains(&-1))
    }
}

/// Image of `v` under the simple reflection `s`:
/// `v_s ↦ −v_s + Σ_{t≠s} 2cos(π/m_st) v_t`, other coordinates fixed.
pub fn reflect(sys: &CoxeterSystem, s: u8, v: &RootVector) -> RootVector {
    let mut out = v.clone();
    let mut acc = -v.0[s as usize];
    for &t in sys.neighbors(s) {
        acc += sys.cos2(s, t) * v.0[t as usize];
    }
    out.0[s as usize] = acc;
    out
}

/// Matrix of a group element in the simple-root basis, stored by columns:
/// column `j` is `w(α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementMatrix {
    cols: Vec<RootVector>,
}

impl ElementMatrix {
    pub fn identity(n: usize) -> Self {
        ElementMatrix {
            cols: (0..n).map(|j| RootVector::simple(n, j as u8)).collect(),
        }
    }

    pub fn of_word(sys: &CoxeterSystem, w: &Word) -> Self {
        let mut m = Self::identity(sys.rank());
        for &s in w.letters() {
            m.right_mul(sys, s);
        }
        m
    }

    /// `w(α_s)`.
    pub fn image(&self, s: u8) -> &RootVector {
        &self.cols[s as usize]
    }

    /// `w ↦ w·s`.
    pub fn right_mul(&mut self, sys: &CoxeterSystem, s: u8) {
        let col_s = self.cols[s as usize].clone();
        for &t in sys.neighbors(s) {
            let c = sys.cos2(s, t);
            let col = &mut self.cols[t as usize];
            for (x, y) in col.0.iter_mut().zip(&col_s.0) {
                *x += c * *y;
            }
        }
        for x in self.cols[s as usize].0.iter_mut() {
            *x = -*x;
        }
    }

    /// True when `ℓ(ws) > ℓ(w)`.
    pub fn lengthens(&self, s: u8) -> bool {
        self.image(s).is_positive()
    }

    /// Some right descent `s` with `ℓ(ws) < ℓ(w)`.
    pub fn right_descent(&self) -> Option<u8> {
        (0..self.cols.len() as u8).find(|&s| self.image(s).is_negative())
    }

    pub fn is_identity(&self) -> bool {
        self.right_descent().is_none()
    }
}

/// Whether the word length equals the Coxeter length.
pub fn is_reduced(sys: &CoxeterSystem, w: &Word) -> bool {
    let mut m = ElementMatrix::identity(sys.rank());
    for &s in w.letters() {
        if !m.lengthens(s) {
            return false;
        }
        m.right_mul(sys, s);
    }
    true
}

/// Coxeter length of the element represented by `w`.
pub fn length(sys: &CoxeterSystem, w: &Word) -> usize {
    let mut m = ElementMatrix::of_word(sys, w);
    let mut len = 0;
    while let Some(s) = m.right_descent() {
        m.right_mul(sys, s);
        len += 1;
    }
    len
}

/// Whether the element squares to the identity.
pub fn is_involution(sys: &CoxeterSystem, w: &Word) -> bool {
    length(sys, &w.concat(w)) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_family, Family};
    use std::collections::{HashMap, VecDeque};

    fn word(sys: &CoxeterSystem, s: &str) -> Word {
        sys.parse_word(s).unwrap()
    }

    type Mat = Vec<Vec<RingElem>>;

    /// Full reflection matrix, built entry by entry from the bilinear form.
    fn reflection_matrix(sys: &CoxeterSystem, s: u8) -> Mat {
        let n = sys.rank();
        let mut m = vec![vec![RingElem::ZERO; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = RingElem::ONE;
        }
        // S_s e_j = e_j − 2B(α_s, α_j) α_s with −2B(s,j) = 2cos(π/m_sj), −2B(s,s) = −2
        for j in 0..n {
            let coef = if j == s as usize {
                RingElem::int(-2)
            } else {
                sys.cos2(s, j as u8)
            };
            m[s as usize][j] += coef;
        }
        m
    }

    fn mat_mul(a: &Mat, b: &Mat) -> Mat {
        let n = a.len();
        let mut c = vec![vec![RingElem::ZERO; n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        c
    }

    /// Group ball of radius `r` by BFS on explicit matrices: element → length.
    fn ball(sys: &CoxeterSystem, r: usize) -> HashMap<Mat, usize> {
        let n = sys.rank();
        let gens: Vec<Mat> = (0..n as u8).map(|s| reflection_matrix(sys, s)).collect();
        let mut id = vec![vec![RingElem::ZERO; n]; n];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = RingElem::ONE;
        }
        let mut seen = HashMap::new();
        seen.insert(id.clone(), 0);
        let mut queue = VecDeque::from([(id, 0usize)]);
        while let Some((m, d)) = queue.pop_front() {
            if d == r {
                continue;
            }
            for g in &gens {
                let next = mat_mul(&m, g);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d + 1);
                    queue.push_back((next, d + 1));
                }
            }
        }
        seen
    }

    fn word_matrix(sys: &CoxeterSystem, letters: &[u8]) -> Mat {
        let n = sys.rank();
        let mut m = vec![vec![RingElem::ZERO; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = RingElem::ONE;
        }
        for &s in letters {
            m = mat_mul(&m, &reflection_matrix(sys, s));
        }
        m
    }

    fn all_words(n: u8, len: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..n).map(move |s| {
                        let mut v = w.clone();
                        v.push(s);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn reflection_examples() {
        let a2 = build_family(Family::A, 2).unwrap();
        let v = reflect(&a2, 0, &RootVector::simple(2, 1));
        assert_eq!(v.0, vec![RingElem::ONE, RingElem::ONE]);
        let neg = reflect(&a2, 0, &RootVector::simple(2, 0));
        assert_eq!(neg.0, vec![RingElem::int(-1), RingElem::ZERO]);
        let b2 = build_family(Family::B, 2).unwrap();
        let v = reflect(&b2, 0, &RootVector::simple(2, 1));
        assert_eq!(v.0, vec![RingElem::SQRT2, RingElem::ONE]);
    }

    #[test]
    fn reflect_is_involutive_on_reachable_roots() {
        for (f, r) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::Ctilde, 2),
            (Family::G2tilde, 2),
        ] {
            let sys = build_family(f, r).unwrap();
            let n = sys.rank();
            let mut frontier: Vec<RootVector> =
                (0..n as u8).map(|s| RootVector::simple(n, s)).collect();
            for _ in 0..5 {
                let mut next = Vec::new();
                for v in &frontier {
                    assert!(v.is_sign_coherent(), "{f}: mixed root {v:?}");
                    for s in 0..n as u8 {
                        let w = reflect(&sys, s, v);
                        assert_eq!(&reflect(&sys, s, &w), v);
                        next.push(w);
                    }
                }
                next.sort_by_key(|v| format!("{v:?}"));
                next.dedup();
                frontier = next;
            }
        }
    }

    #[test]
    fn examples_reduced_and_length() {
        let a2 = build_family(Family::A, 2).unwrap();
        assert!(!is_reduced(&a2, &word(&a2, "s1 s1")));
        assert!(is_reduced(&a2, &word(&a2, "s1 s2 s1")));
        assert_eq!(length(&a2, &word(&a2, "s1 s1")), 0);
        assert_eq!(length(&a2, &word(&a2, "s1 s2 s1 s2")), 2);
        assert_eq!(length(&a2, &word(&a2, "s1 s2")), 2);
        let c2 = build_family(Family::Ctilde, 2).unwrap();
        assert!(is_reduced(&c2, &word(&c2, "t s1 t s1")));
        assert!(is_involution(&a2, &word(&a2, "s1")));
        assert!(!is_involution(&a2, &word(&a2, "s1 s2")));
        let a3 = build_family(Family::A, 3).unwrap();
        assert!(is_involution(&a3, &word(&a3, "s1 s3")));
        assert!(is_involution(&a3, &Word::empty()));
    }

    /// Length of each word against BFS distances in the explicit matrix group.
    #[test]
    fn length_matches_matrix_bfs() {
        for (f, r, maxlen) in [
            (Family::A, 3, 7),
            (Family::B, 3, 7),
            (Family::Ctilde, 2, 8),
            (Family::G2tilde, 2, 7),
        ] {
            let sys = build_family(f, r).unwrap();
            let dist = ball(&sys, maxlen);
            for len in 0..=maxlen {
                for letters in all_words(sys.rank() as u8, len) {
                    let w = Word::from(letters.clone());
                    let d = dist[&word_matrix(&sys, &letters)];
                    assert_eq!(length(&sys, &w), d, "{f} {letters:?}");
                    assert_eq!(is_reduced(&sys, &w), d == len, "{f} {letters:?}");
                }
            }
        }
    }

    /// Permutation model of `A_n`: length is the inversion count.
    #[test]
    fn type_a_length_is_inversion_count() {
        let sys = build_family(Family::A, 4).unwrap();
        for len in 0..=7 {
            for letters in all_words(4, len) {
                let mut perm: Vec<usize> = (0..5).collect();
                for &s in &letters {
                    perm.swap(s as usize, s as usize + 1);
                }
                let inv = (0..5)
                    .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                assert_eq!(length(&sys, &Word::from(letters.clone())), inv);
            }
        }
    }
}
