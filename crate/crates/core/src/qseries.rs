//! Exact generating series: integer polynomials plus geometric tails.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::coxeter::Family;
use crate::enumerate::LengthCensus;
use crate::error::{Error, Result};

/// Dense integer polynomial in `q`, trimmed of trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly(Vec<BigInt>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![BigInt::one()])
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        QPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        QPoly(v)
    }

    pub fn from_i64(v: &[i64]) -> Self {
        QPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        QPoly(v)
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// `q^k · p(1/q^2)`, defined when `k ≥ 2·deg p`.
    pub fn reflect_square(&self, k: usize) -> Option<Self> {
        let d = self.degree().unwrap_or(0);
        if k < 2 * d {
            return None;
        }
        let mut v = vec![BigInt::zero(); k + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[k - 2 * i] += c;
        }
        Some(QPoly::from_coeffs(v))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(v)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for QPoly {
            type Output = QPoly;
            fn $f(self, o: QPoly) -> QPoly {
                (&self).$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            if !first || sign == "-" {
                write!(
                    f,
                    "{}",
                    if first {
                        "-"
                    } else if sign == "-" {
                        " - "
                    } else {
                        " + "
                    }
                )?;
            }
            let a = if c < &BigInt::zero() { -c } else { c.clone() };
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn serialize_big<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&c.to_string()),
    }
}

struct Big<'a>(&'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_big(self.0, s)
    }
}

/// Untrimmed coefficient list, serialized like [`QPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeffs(pub Vec<BigInt>);

impl Serialize for Coeffs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(Big))
    }
}

/// Coefficients serialize as JSON integers, or strings beyond 64 bits.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(Big))
    }
}

/// `c·q^a/(1−q^b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailTerm {
    #[serde(serialize_with = "serialize_big")]
    pub c: BigInt,
    pub a: usize,
    pub b: usize,
}

impl TailTerm {
    pub fn new(c: impl Into<BigInt>, a: usize, b: usize) -> Self {
        assert!(b >= 1, "tail period must be positive");
        TailTerm { c: c.into(), a, b }
    }
}

/// Polynomial part plus tails. An unresolved polynomial part is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiSeries {
    pub poly: Option<QPoly>,
    pub tails: Vec<TailTerm>,
    pub provenance: String,
}

impl QuasiSeries {
    pub fn polynomial(poly: QPoly, provenance: impl Into<String>) -> Self {
        QuasiSeries {
            poly: Some(poly),
            tails: Vec::new(),
            provenance: provenance.into(),
        }
    }

    /// Lcm of the tail periods, 1 without tails.
    pub fn tail_period(&self) -> usize {
        self.tails.iter().fold(1, |acc, t| lcm(acc, t.b))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Coefficients of `q^0 … q^order` contributed by the tails alone.
pub fn expand_tails(tails: &[TailTerm], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for t in tails {
        let mut k = t.a;
        while k <= order {
            out[k] += &t.c;
            k += t.b;
        }
    }
    out
}

/// Exact coefficients of `q^0 … q^order`.
pub fn expand(s: &QuasiSeries, order: usize) -> Result<Vec<BigInt>> {
    let poly = s.poly.as_ref().ok_or_else(|| Error::Unresolved {
        family: s.provenance.clone(),
    })?;
    let mut out = expand_tails(&s.tails, order);
    for (k, c) in out.iter_mut().enumerate() {
        *c += poly.coeff(k);
    }
    Ok(out)
}

/// Terms of `f_k = (2q+1)·f_{k−1} − q·f_{k−2}` from two initial values.
fn two_term(f0: QPoly, f1: QPoly, steps: usize) -> QPoly {
    let a = QPoly::from_i64(&[1, 2]);
    let b = QPoly::monomial(1, 1);
    let (mut x, mut y) = (f0, f1);
    for _ in 0..steps {
        let z = &(&a * &y) - &(&b * &x);
        x = y;
        y = z;
    }
    y
}

/// Terms of `f_k = f_{k−1} + q·f_{k−2}`.
fn fibonacci_like(f0: QPoly, f1: QPoly, steps: usize) -> QPoly {
    let q = QPoly::monomial(1, 1);
    let (mut x, mut y) = (f0, f1);
    for _ in 0..steps {
        let z = &y + &(&q * &x);
        x = y;
        y = z;
    }
    y
}

/// CFC generating polynomial of `A_n`.
pub fn a_cfc(n: usize) -> QPoly {
    match n {
        0 => QPoly::one(),
        _ => two_term(QPoly::one(), QPoly::from_i64(&[1, 1]), n - 1),
    }
}

/// CFC generating polynomial of `D_n` (`D_1`, `D_2`, `D_3` as initial values).
pub fn d_cfc(n: usize) -> QPoly {
    match n {
        0 => QPoly::one(),
        1 => QPoly::from_i64(&[1, 1]),
        2 => QPoly::from_i64(&[1, 2, 1]),
        _ => two_term(
            QPoly::from_i64(&[1, 2, 1]),
            QPoly::from_i64(&[1, 3, 5, 4]),
            n - 3,
        ),
    }
}

/// Polynomial part `P_n` of `Ã_n`, for `n ≥ 1`.
pub fn p_poly(n: usize) -> QPoly {
    let init = [
        QPoly::from_i64(&[1, 2, 2]),
        QPoly::from_i64(&[1, 3, 6, 6]),
        QPoly::from_i64(&[1, 4, 10, 16, 14]),
    ];
    assert!(n >= 1, "P_n is defined for n ≥ 1");
    if n <= 3 {
        return init[n - 1].clone();
    }
    let c1 = QPoly::from_i64(&[1, 3]);
    let c2 = QPoly::from_i64(&[0, 2, 2]);
    let c3 = QPoly::monomial(1, 2);
    let [mut x, mut y, mut z] = init;
    for _ in 3..n {
        let next = &(&(&c1 * &z) - &(&c2 * &y)) + &(&c3 * &x);
        x = y;
        y = z;
        z = next;
    }
    z
}

/// Polynomial part `Q_n` of `D̃_n`, for `n ≥ 4`.
pub fn q_poly(n: usize) -> QPoly {
    assert!(n >= 4, "Q_n is defined for n ≥ 4");
    let q4 = QPoly::from_i64(&[1, 5, 14, 28, 33, 16]);
    let q5 = QPoly::from_i64(&[1, 6, 20, 46, 73, 72, 32]);
    match n {
        4 => q4,
        _ => two_term(q4, q5, n - 5),
    }
}

/// CFC involutions of `A_n`.
pub fn a_cfci(n: usize) -> QPoly {
    match n {
        0 => QPoly::one(),
        _ => fibonacci_like(QPoly::one(), QPoly::from_i64(&[1, 1]), n - 1),
    }
}

/// CFC involutions of `D_n` (`D_1 := 1`).
pub fn d_cfci(n: usize) -> QPoly {
    match n {
        0 | 1 => QPoly::one(),
        _ => fibonacci_like(QPoly::one(), QPoly::from_i64(&[1, 2, 1]), n - 2),
    }
}

/// CFC involutions of `Ã_n` (`Ã_0 := 1`).
pub fn atilde_cfci(n: usize) -> QPoly {
    match n {
        0 => QPoly::one(),
        _ => fibonacci_like(QPoly::one(), QPoly::from_i64(&[1, 2]), n - 1),
    }
}

/// CFC involutions of `D̃_n`, for `n ≥ 4`.
pub fn dtilde_cfci(n: usize) -> QPoly {
    assert!(n >= 4, "defined for n ≥ 4");
    let d4 = QPoly::from_i64(&[1, 5, 6, 4, 1]);
    let d5 = QPoly::from_i64(&[1, 6, 10, 6, 1]);
    match n {
        4 => d4,
        _ => fibonacci_like(d4, d5, n - 5),
    }
}

fn check_rank(family: Family, n: usize) -> Result<()> {
    let min = family.min_rank();
    if n < min || (family.is_fixed_rank() && n != min) {
        return Err(Error::RankOutOfRange {
            family: family.token().to_string(),
            rank: n,
            min,
        });
    }
    Ok(())
}

fn provenance(family: Family, n: usize) -> String {
    format!("{} {n}", family.token())
}

/// CFC generating series of a family at rank `n` (the group subscript).
/// Exceptional families carry their tail with the polynomial unresolved.
pub fn cfc_series(family: Family, n: usize) -> Result<QuasiSeries> {
    check_rank(family, n)?;
    let tag = provenance(family, n);
    let big2 = |k: usize| BigInt::one() << k;
    let (poly, tails) = match family {
        Family::A | Family::B => (Some(a_cfc(n)), vec![]),
        Family::D => (Some(d_cfc(n)), vec![]),
        Family::Atilde => {
            let m = n + 1;
            (Some(p_poly(n)), vec![TailTerm::new(big2(m) - 2, 2 * m, m)])
        }
        Family::Ctilde => (
            Some(a_cfc(n + 1)),
            vec![
                TailTerm::new(big2(n), 2 * (n + 1), n + 1),
                TailTerm::new(2 * n, 2 * n, 2 * n),
            ],
        ),
        Family::Btilde => (
            Some(d_cfc(n + 1)),
            vec![
                TailTerm::new(big2(n), 2 * n, 2 * n),
                TailTerm::new(2 * n, 2 * n - 1, 2 * n - 1),
            ],
        ),
        Family::Dtilde => (
            Some(q_poly(n)),
            vec![TailTerm::new(big2(n) + 2 * n, 2 * (n - 1), 2 * (n - 1))],
        ),
        Family::G2tilde => (None, vec![TailTerm::new(6, 5, 5)]),
        Family::E6tilde => (None, vec![TailTerm::new(23, 12, 12)]),
        Family::E7tilde => (None, vec![TailTerm::new(45, 18, 18)]),
        Family::Linear | Family::Custom => {
            return Err(Error::ClassifierUnavailable {
                family: family.token().to_string(),
            })
        }
    };
    Ok(QuasiSeries {
        poly,
        tails,
        provenance: tag,
    })
}

/// CFC involution polynomial of a family at rank `n`.
pub fn cfci_series(family: Family, n: usize) -> Result<QuasiSeries> {
    check_rank(family, n)?;
    let poly = match family {
        Family::A | Family::B => a_cfci(n),
        Family::Ctilde => a_cfci(n + 1),
        Family::D => d_cfci(n),
        Family::Btilde => d_cfci(n + 1),
        Family::Atilde => atilde_cfci(n),
        Family::Dtilde => dtilde_cfci(n),
        _ => {
            return Err(Error::ClassifierUnavailable {
                family: family.token().to_string(),
            })
        }
    };
    Ok(QuasiSeries::polynomial(poly, provenance(family, n)))
}

/// Least `(start, period)` with `coeffs[i] = coeffs[i + period]` for every
/// `i ≥ start` in the window, among candidates backed by at least
/// `start + 2·period` entries. The smallest start wins, then the smallest
/// period.
pub fn detect_periodicity<T: PartialEq>(coeffs: &[T]) -> Result<(usize, usize)> {
    let len = coeffs.len();
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=len / 2 {
        // least start from which the sequence is p-periodic in the window
        let mut start = len - p;
        while start > 0 && coeffs[start - 1] == coeffs[start - 1 + p] {
            start -= 1;
        }
        if start + 2 * p <= len && best.is_none_or(|b| start < b.0) {
            best = Some((start, p));
        }
    }
    best.ok_or(Error::Inconclusive {
        needed: 2,
        got: len,
    })
}

/// Polynomial part of an exceptional series: the census minus the tail
/// expansion, which must vanish over at least the last full tail period.
pub fn resolve_exceptional_poly(family: Family, census: &LengthCensus) -> Result<QPoly> {
    let series = cfc_series(family, family.min_rank())?;
    let period = series.tail_period();
    let len = census.counts.len();
    if len < 2 * period {
        return Err(Error::Inconclusive {
            needed: 2 * period,
            got: len,
        });
    }
    let tails = expand_tails(&series.tails, len - 1);
    let remainder: Vec<BigInt> = census
        .counts
        .iter()
        .zip(&tails)
        .map(|(c, t)| BigInt::from(*c) - t)
        .collect();
    let poly = QPoly::from_coeffs(remainder);
    let zeros = len - poly.coeffs().len();
    if zeros < period {
        return Err(Error::Inconsistent(format!(
            "{}: census minus tail is nonzero at length {} of {}",
            family.token(),
            poly.coeffs().len() - 1,
            len - 1
        )));
    }
    Ok(poly)
}

/// Lucas polynomials `L_0 = 2`, `L_1 = q`, `L_n = q·L_{n−1} + L_{n−2}`.
pub fn lucas(n: usize) -> QPoly {
    let q = QPoly::monomial(1, 1);
    let (mut x, mut y) = (QPoly::from_i64(&[2]), q.clone());
    if n == 0 {
        return x;
    }
    for _ in 1..n {
        let z = &(&q * &y) + &x;
        x = y;
        y = z;
    }
    y
}

/// `q^n · Ã^CFCI_{n−1}(1/q²) = L_n(q)`.
pub fn lucas_check(n: usize) -> bool {
    n >= 1
        && atilde_cfci(n - 1)
            .reflect_square(n)
            .is_some_and(|p| p == lucas(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> QPoly {
        QPoly::from_i64(v)
    }

    fn ints(v: Vec<BigInt>) -> Vec<i64> {
        v.into_iter().map(|c| c.to_i64().unwrap()).collect()
    }

    /// Coefficient of `x^k` in `N(x)/D(x)` for polynomial-in-`q` coefficients,
    /// with `D(0) = 1`.
    fn rational_coeffs(num: &[QPoly], den: &[QPoly], count: usize) -> Vec<QPoly> {
        assert_eq!(den[0], QPoly::one());
        let mut out: Vec<QPoly> = Vec::new();
        for k in 0..count {
            let mut c = num.get(k).cloned().unwrap_or_default();
            for (j, d) in den.iter().enumerate().skip(1) {
                if j <= k {
                    c = &c - &(d * &out[k - j]);
                }
            }
            out.push(c);
        }
        out
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), QPoly::zero());
        assert_eq!(p(&[1, 2, 2]).eval(1), BigInt::from(5));
        assert_eq!(p(&[1, -3, 0, 2]).to_string(), "1 - 3q + 2q^3");
        assert_eq!(serde_json::to_string(&p(&[1, 2])).unwrap(), "[1,2]");
    }

    #[test]
    fn series_examples() {
        assert_eq!(a_cfc(2), p(&[1, 2, 2]));
        assert_eq!(a_cfc(3), p(&[1, 3, 5, 4]));
        let s = cfc_series(Family::Atilde, 3).unwrap();
        assert_eq!(s.poly, Some(p(&[1, 4, 10, 16, 14])));
        assert_eq!(s.tails, vec![TailTerm::new(14, 8, 4)]);
        let s = cfc_series(Family::Dtilde, 4).unwrap();
        assert_eq!(s.poly, Some(p(&[1, 5, 14, 28, 33, 16])));
        assert_eq!(s.tails, vec![TailTerm::new(24, 6, 6)]);
        let c2 = cfc_series(Family::Ctilde, 2).unwrap();
        assert_eq!(
            ints(expand(&c2, 9).unwrap()),
            vec![1, 3, 5, 4, 4, 0, 4, 0, 4, 4]
        );
        assert!(matches!(
            cfc_series(Family::A, 0),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn expand_examples() {
        let s = QuasiSeries::polynomial(p(&[1, 1]), "test");
        assert_eq!(ints(expand(&s, 3).unwrap()), vec![1, 1, 0, 0]);
        let s = QuasiSeries {
            poly: Some(QPoly::zero()),
            tails: vec![TailTerm::new(4, 4, 4)],
            provenance: "test".into(),
        };
        assert_eq!(
            ints(expand(&s, 12).unwrap()),
            vec![0, 0, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0, 4]
        );
        let g = cfc_series(Family::G2tilde, 2).unwrap();
        assert!(matches!(expand(&g, 5), Err(Error::Unresolved { .. })));
    }

    #[test]
    fn involution_examples() {
        let c = |f, n| cfci_series(f, n).unwrap().poly.unwrap();
        assert_eq!(c(Family::A, 2), p(&[1, 2]));
        assert_eq!(c(Family::A, 1), p(&[1, 1]));
        assert_eq!(c(Family::Atilde, 2), p(&[1, 3]));
        assert_eq!(atilde_cfci(1), p(&[1, 2]));
        assert_eq!(c(Family::Dtilde, 4), p(&[1, 5, 6, 4, 1]));
        assert_eq!(d_cfci(3), p(&[1, 3, 1]));
        assert_eq!(d_cfci(4), p(&[1, 4, 3, 1]));
    }

    #[test]
    fn periodicity_examples() {
        let a = expand(&cfc_series(Family::Atilde, 3).unwrap(), 24).unwrap();
        assert_eq!(detect_periodicity(&a).unwrap(), (4, 4));
        assert_eq!(detect_periodicity(&[7; 5]).unwrap(), (0, 1));
        let c = expand(&cfc_series(Family::Ctilde, 2).unwrap(), 40).unwrap();
        assert_eq!(detect_periodicity(&c).unwrap().1, 12);
        assert!(detect_periodicity(&[1, 2, 3]).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(2), p(&[2, 0, 1]));
        assert!(lucas_check(1));
        assert!(lucas_check(2));
        assert!(lucas_check(6));
        assert!(!lucas_check(0));
    }

    #[test]
    fn alternative_recurrences_agree() {
        let (four, three) = (p(&[1, 4, 4]), p(&[0, 2, 3]));
        for n in 3..=12 {
            // D_{n+1} from A_{n−1} and A_{n−2}
            assert_eq!(
                d_cfc(n + 1),
                &(&four * &a_cfc(n - 1)) - &(&three * &a_cfc(n - 2))
            );
        }
        for n in 2..=12 {
            // Q_{n+2} from D_{n+1} and D_n
            assert_eq!(
                q_poly(n + 2),
                &(&four * &d_cfc(n + 1)) - &(&three * &d_cfc(n))
            );
        }
        for n in 3..=12 {
            // P_{n−1} = 2q·P_{n−2} + 2q^n + A_{n−1} − q·A_{n−3}
            let rhs = &(&(&p(&[0, 2]) * &p_poly(n - 2)) + &QPoly::monomial(2, n))
                + &(&a_cfc(n - 1) - &(&p(&[0, 1]) * &a_cfc(n - 3)));
            assert_eq!(p_poly(n - 1), rhs, "n = {n}");
        }
    }

    #[test]
    fn rational_forms_agree() {
        let one = QPoly::one();
        let den = [one.clone(), p(&[-1, -2]), p(&[0, 1])];
        // x(1 − qx)/(1 − (2q+1)x + qx²) = Σ A_{n−1} x^n
        let a = rational_coeffs(&[QPoly::zero(), one.clone(), p(&[0, -1])], &den, 13);
        for n in 1..13 {
            assert_eq!(a[n], a_cfc(n - 1));
        }
        // Σ D_{n+1} x^n
        let d = rational_coeffs(&[p(&[1, 1]), p(&[0, -1, -1]), p(&[0, 0, 1, 2])], &den, 12);
        for n in 0..12 {
            assert_eq!(d[n], d_cfc(n + 1), "D_{}", n + 1);
        }
        // Σ P_n x^n with the extra factor (1 − qx)
        let den_p = [one.clone(), p(&[-1, -3]), p(&[0, 2, 2]), p(&[0, 0, -1])];
        let pp = rational_coeffs(
            &[QPoly::zero(), p(&[1, 2, 2]), p(&[0, -2, -2]), p(&[0, 0, 1])],
            &den_p,
            13,
        );
        for n in 1..13 {
            assert_eq!(pp[n], p_poly(n), "P_{n}");
        }
        let fib = [one.clone(), p(&[-1]), p(&[0, -1])];
        let ai = rational_coeffs(&[QPoly::zero(), one.clone(), p(&[0, 1])], &fib, 13);
        for n in 1..13 {
            assert_eq!(ai[n], a_cfci(n - 1));
        }
        let di = rational_coeffs(&[one.clone(), p(&[0, 2, 1])], &fib, 12);
        for n in 0..12 {
            assert_eq!(di[n], d_cfci(n + 1));
        }
        let ati = rational_coeffs(&[QPoly::zero(), one.clone(), p(&[0, 2])], &fib, 13);
        for n in 1..13 {
            assert_eq!(ati[n], atilde_cfci(n - 1));
        }
        let dti = rational_coeffs(
            &[
                QPoly::zero(),
                QPoly::zero(),
                p(&[1, 5, 6, 4, 1]),
                p(&[0, 1, 4, 2]),
            ],
            &fib,
            13,
        );
        for n in 2..13 {
            assert_eq!(dti[n], dtilde_cfci(n + 2));
        }
    }

    #[test]
    fn specializations_at_one() {
        let fib = |k: usize| {
            let (mut a, mut b) = (0i64, 1i64);
            for _ in 0..k {
                (a, b) = (b, a + b);
            }
            a
        };
        for n in 1..=12 {
            // odd-index Fibonacci numbers
            assert_eq!(a_cfc(n - 1).eval(1), BigInt::from(fib(2 * n - 1)));
            assert_eq!(a_cfci(n - 1).eval(1), BigInt::from(fib(n + 1)));
        }
        let (mut x, mut y) = (1i64, 4i64);
        for n in 1..=12 {
            assert_eq!(d_cfci(n).eval(1), BigInt::from(x), "n = {n}");
            (x, y) = (y, x + y);
        }
        let _ = y;
    }

    #[test]
    fn exceptional_resolution() {
        let mut census = LengthCensus {
            family: "G2tilde".into(),
            n: 2,
            class: crate::enumerate::CensusClass::Cfc,
            horizon: 30,
            counts: vec![1, 3, 5, 4, 2],
        };
        census
            .counts
            .extend((5..=30).map(|k| if k % 5 == 0 { 6 } else { 0 }));
        assert_eq!(
            resolve_exceptional_poly(Family::G2tilde, &census).unwrap(),
            p(&[1, 3, 5, 4, 2])
        );
        let mut tampered = census.clone();
        tampered.counts[28] += 1;
        assert!(matches!(
            resolve_exceptional_poly(Family::G2tilde, &tampered),
            Err(Error::Inconsistent(_))
        ));
        let mut short = census.clone();
        short.counts.truncate(8);
        assert!(matches!(
            resolve_exceptional_poly(Family::G2tilde, &short),
            Err(Error::Inconclusive { .. })
        ));
    }
}
