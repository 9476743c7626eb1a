//! Exact arithmetic in ℤ[√2, √3].
//!
//! Elements are `a + b√2 + c√3 + d√6`. This ring contains every
//! `2cos(π/m)` for `m ∈ {2, 3, 4, 6}` and the value `2` used for `m = ∞`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem::new(0, 0, 0, 0);
    pub const ONE: RingElem = RingElem::new(1, 0, 0, 0);
    pub const SQRT2: RingElem = RingElem::new(0, 1, 0, 0);
    pub const SQRT3: RingElem = RingElem::new(0, 0, 1, 0);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        RingElem { a, b, c, d }
    }

    pub const fn int(a: i64) -> Self {
        RingElem::new(a, 0, 0, 0)
    }

    /// `{1, √2, √3, √6}` is a ℚ-basis, so zero means all coordinates vanish.
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    /// Certified sign.
    ///
    /// Encloses the value in a dyadic interval using integer square roots at
    /// precision `2^-k`, doubling `k` until the interval excludes zero. If the
    /// precision budget runs out, falls back to the conjugate-norm test.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut k = 8u32;
        while k <= 56 {
            if let Some(s) = self.interval_sign(k) {
                return s;
            }
            k *= 2;
        }
        self.signum_algebraic()
    }

    fn interval_sign(&self, k: u32) -> Option<i32> {
        let den: i128 = 1i128 << k;
        let den2 = den.checked_mul(den)?;
        let roots = [
            (self.b as i128, isqrt(2 * den2)),
            (self.c as i128, isqrt(3 * den2)),
            (self.d as i128, isqrt(6 * den2)),
        ];
        let mut lo = (self.a as i128).checked_mul(den)?;
        let mut hi = lo;
        for (coef, r) in roots {
            let x = coef.checked_mul(r)?;
            let y = coef.checked_mul(r + 1)?;
            lo = lo.checked_add(x.min(y))?;
            hi = hi.checked_add(x.max(y))?;
        }
        if lo > 0 {
            Some(1)
        } else if hi < 0 {
            Some(-1)
        } else {
            None
        }
    }

    /// Sign by repeated conjugate norms: writes the value as `P + Q√3` with
    /// `P, Q ∈ ℤ[√2]` and compares `P²` against `3Q²`.
    pub fn signum_algebraic(&self) -> i32 {
        let (a, b, c, d) = (
            self.a as i128,
            self.b as i128,
            self.c as i128,
            self.d as i128,
        );
        let sp = sign_sqrt2(a, b);
        let sq = sign_sqrt2(c, d);
        if sq == 0 || sp == sq {
            return if sp == 0 { sq } else { sp };
        }
        if sp == 0 {
            return sq;
        }
        // P² − 3Q² in ℤ[√2]
        let n0 = a * a + 2 * b * b - 3 * (c * c + 2 * d * d);
        let n1 = 2 * a * b - 6 * c * d;
        if sign_sqrt2(n0, n1) > 0 {
            sp
        } else {
            sq
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }
}

/// Sign of `x + y√2`.
fn sign_sqrt2(x: i128, y: i128) -> i32 {
    let sx = x.signum() as i32;
    let sy = y.signum() as i32;
    if sy == 0 || sx == sy {
        return if sx == 0 { sy } else { sx };
    }
    if sx == 0 {
        return sy;
    }
    match (x * x).cmp(&(2 * y * y)) {
        Ordering::Greater => sx,
        _ => sy,
    }
}

fn isqrt(n: i128) -> i128 {
    (n as u128).isqrt() as i128
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, o: RingElem) -> RingElem {
        RingElem::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for RingElem {
    fn add_assign(&mut self, o: RingElem) {
        *self = *self + o;
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, o: RingElem) -> RingElem {
        self + (-o)
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, o: RingElem) -> RingElem {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (e, f, g, h) = (o.a, o.b, o.c, o.d);
        RingElem::new(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, unit) in [(self.a, ""), (self.b, "√2"), (self.c, "√3"), (self.d, "√6")] {
            if coef == 0 {
                continue;
            }
            let sign = if coef < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = coef.abs();
            if mag == 1 && !unit.is_empty() {
                write!(f, "{sign}{unit}")?;
            } else {
                write!(f, "{sign}{mag}{unit}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn approx(x: RingElem) -> f64 {
        x.a as f64 + x.b as f64 * 2f64.sqrt() + x.c as f64 * 3f64.sqrt() + x.d as f64 * 6f64.sqrt()
    }

    #[test]
    fn radicals_square_to_integers() {
        assert_eq!(RingElem::SQRT2 * RingElem::SQRT2, RingElem::int(2));
        assert_eq!(RingElem::SQRT3 * RingElem::SQRT3, RingElem::int(3));
        assert_eq!(RingElem::SQRT2 * RingElem::SQRT3, RingElem::new(0, 0, 0, 1));
        let s6 = RingElem::new(0, 0, 0, 1);
        assert_eq!(s6 * s6, RingElem::int(6));
        assert_eq!(RingElem::SQRT2 * s6, RingElem::new(0, 0, 2, 0));
    }

    #[test]
    fn near_cancellation_signs() {
        // 99 − 70√2 ≈ 0.00505
        assert_eq!(RingElem::new(99, -70, 0, 0).signum(), 1);
        assert_eq!(RingElem::new(-99, 70, 0, 0).signum(), -1);
        // 5√2 − 4√3 + ... mixed radicals
        assert_eq!(RingElem::new(0, 5, -4, 0).signum(), 1);
        assert_eq!(RingElem::new(5, 0, 0, -2).signum(), 1);
        assert_eq!(RingElem::new(4, 0, 0, -2).signum(), -1);
    }

    proptest! {
        #[test]
        fn interval_sign_matches_algebraic(a in -2000i64..2000, b in -2000i64..2000,
                                           c in -2000i64..2000, d in -2000i64..2000) {
            let x = RingElem::new(a, b, c, d);
            prop_assert_eq!(x.signum(), x.signum_algebraic());
        }

        #[test]
        fn sign_matches_float_when_clear(a in -50i64..50, b in -50i64..50,
                                         c in -50i64..50, d in -50i64..50) {
            let x = RingElem::new(a, b, c, d);
            let v = approx(x);
            if v.abs() > 1e-6 {
                prop_assert_eq!(x.signum(), if v > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn multiplication_is_consistent(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30,
                                        e in -30i64..30, f in -30i64..30, g in -30i64..30, h in -30i64..30) {
            let x = RingElem::new(a, b, c, d);
            let y = RingElem::new(e, f, g, h);
            prop_assert!((approx(x * y) - approx(x) * approx(y)).abs() < 1e-6 * (1.0 + approx(x).abs() * approx(y).abs()));
            prop_assert_eq!(x * y, y * x);
        }
    }
}
