//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! `f64`s with `|lo| ≤ ulp(hi)/2`, giving roughly 31 significant decimal
//! digits. Used where plain `f64` cannot certify a bound (the infinite-product
//! comparison needs ~21 digits at its tightest point).
//!
//! The algorithms are the classical error-free transformations (Dekker/Knuth
//! two-sum, FMA-based two-prod) and Bailey-style combination steps.

/// A double-double value `hi + lo`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns `(s, e)` with `s = fl(a+b)` and `a + b = s + e`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| ≥ |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// ln 2 to double-double precision: the nearest `f64` plus the exact
    /// remainder's nearest `f64`.
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    /// π to double-double precision.
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest `f64` (simply `hi + lo`).
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Exact renormalization of an (hi, lo) pair that may overlap.
    #[inline]
    fn renorm(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    // The named forms are the primary API (the operator impls below
    // delegate to them); chains like `a.mul(b).sub(c)` read uniformly with
    // the rest of the exact-arithmetic code.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2 + t2)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(-other)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        Dd::renorm(p1, p2)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Dd) -> Dd {
        // Two Newton-style correction steps on the f64 quotient.
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r.hi / other.hi;
        Dd::renorm(q1, q2).add(Dd::from_f64(q3))
    }

    pub fn scale(self, k: f64) -> Dd {
        self.mul(Dd::from_f64(k))
    }

    /// `e^self`, accurate to roughly 30 significant digits for arguments of
    /// moderate size: reduce by powers of 2 (`x = k·ln2 + r`), take the Taylor
    /// series at `r`, and scale back by the exact power `2^k`.
    pub fn exp(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ONE;
        }
        let k = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.scale(k));
        let mut sum = Dd::ONE;
        let mut term = Dd::ONE;
        for i in 1..64 {
            // Divide by the exact integer i (multiplying by a rounded 1/i
            // would cap accuracy at f64 precision).
            term = term.mul(r).div(Dd::from_f64(i as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        // Multiplying by a power of two is exact on both components.
        let p = 2f64.powi(k as i32);
        Dd {
            hi: sum.hi * p,
            lo: sum.lo * p,
        }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        Dd::add(self, rhs)
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        Dd::sub(self, rhs)
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        Dd::mul(self, rhs)
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        Dd::div(self, rhs)
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// e to double-double precision, used as an exp fixture.
    const E: Dd = Dd {
        hi: std::f64::consts::E,
        lo: 1.4456468917292502e-16,
    };

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn one_third_round_trips() {
        let third = Dd::ONE / Dd::from_f64(3.0);
        let back = third * Dd::from_f64(3.0);
        assert!(close(back, Dd::ONE, 1e-31));
    }

    #[test]
    fn addition_tracks_cancellation() {
        let big = Dd::from_f64(1e16);
        let sum = big + Dd::from_f64(1.0) - big;
        assert_eq!(sum.to_f64(), 1.0);
    }

    #[test]
    fn product_keeps_low_bits() {
        // (2^27 + 1)^2 = 2^54 + 2^28 + 1; the +1 is below f64 precision of hi.
        let x = Dd::from_f64(134217729.0);
        let sq = x * x;
        assert_eq!(sq.hi, 18014398777917440.0);
        assert_eq!(sq.lo, 1.0);
    }

    #[test]
    fn exp_matches_reference_values() {
        assert!(close(Dd::ZERO.exp(), Dd::ONE, 1e-32));
        assert!(close(Dd::ONE.exp(), E, 1e-30));
        assert!(close(Dd::LN2.exp(), Dd::from_f64(2.0), 1e-30));
        let e10 = Dd::from_f64(10.0).exp();
        // e^10 = 22026.465794806718… (hi) − 1.3780134700517372e-12 (continuation)
        assert!((e10.to_f64() - 22026.465794806718).abs() < 1e-10);
        let em = Dd::from_f64(-3.5).exp();
        assert!((em.to_f64() - 0.0301973834223185).abs() < 1e-17);
    }

    #[test]
    fn pi_constant_squares_correctly() {
        // π² = 9.869604401089358 + 6.265295508739711e-16 as a double-double.
        let pi2 = Dd::PI * Dd::PI;
        let want = Dd {
            hi: 9.869604401089358,
            lo: 6.265295508739711e-16,
        };
        assert!(close(pi2, want, 1e-30));
    }
}
