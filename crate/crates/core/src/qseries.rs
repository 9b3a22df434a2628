//! Truncated formal power series over exact integers, the hook-count
//! generating functions, and exact Laurent expansion at `q = e^{−z}`.
//!
//! The two central constructions are
//!
//! ```text
//! A*_t(q) = Σ_n a*_t(n) qⁿ      B*_t(q) = Σ_n b*_t(n) qⁿ
//! ```
//!
//! both of the form `K(q)·ξ(q)` with `ξ(q) = (−q;q²)_∞`. For `A*_t` the
//! cofactor `K` is a rational function of `q`; for `B*_t` it is a finite sum
//! of q-binomial-weighted inverse Pochhammer series. All coefficients are
//! exact [`BigInt`]s; truncation order is explicit everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from series arithmetic.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion requires the constant term to be `+1` or `−1` so that the
    /// inverse has integer coefficients.
    #[error("cannot invert a series whose constant term is not +1 or -1")]
    InvertNonUnit,
    /// Substituting `q = e^{−z}` into the denominator gave the zero series.
    #[error("denominator is identically zero after substitution")]
    DegenerateDenominator,
}

/// A formal power series in `q` over `Z`, truncated at a fixed order.
///
/// A series of order `N` stores exact coefficients for the exponents
/// `0..=N`; every operation is exact through the smaller order of its
/// operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The series `c·q^exp` (zero if `exp > order`).
    pub fn monomial(exp: usize, c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Builds a series directly from coefficients for exponents `0..len`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        IntSeries { coeffs }
    }

    /// Largest exponent with a stored coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `q^n`.
    ///
    /// # Panics
    /// Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// The coefficient of `q^n` as `u64` (for small-value comparisons).
    ///
    /// # Panics
    /// Panics if the coefficient is negative or does not fit.
    pub fn coeff_u64(&self, n: usize) -> u64 {
        use num_traits::ToPrimitive;
        self.coeffs[n]
            .to_u64()
            .expect("coefficient does not fit in u64")
    }

    /// Restriction to a smaller order (drops high coefficients).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        IntSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Sum, valid through the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        IntSeries { coeffs }
    }

    /// Difference, valid through the smaller of the two orders.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        IntSeries { coeffs }
    }

    fn add_assign(&mut self, other: &Self) {
        let n = self.coeffs.len().min(other.coeffs.len());
        self.coeffs.truncate(n);
        for i in 0..n {
            self.coeffs[i] += &other.coeffs[i];
        }
    }

    /// Product, valid through the smaller of the two orders. Schoolbook
    /// convolution that skips zero coefficients; exact integer arithmetic.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs }
    }

    /// Multiplicative inverse. The constant term must be `±1` so the inverse
    /// stays over `Z`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0 == &BigInt::one() || c0 == &(-BigInt::one())) {
            return Err(SeriesError::InvertNonUnit);
        }
        // b_0 = 1/c_0; b_n = -(1/c_0) Σ_{j≥1} c_j b_{n-j}, summing only the
        // nonzero c_j.
        let nonzero: Vec<usize> = (1..self.coeffs.len())
            .filter(|&j| !self.coeffs[j].is_zero())
            .collect();
        let mut inv = vec![BigInt::zero(); self.coeffs.len()];
        inv[0] = c0.clone(); // 1/(±1) = ±1
        for n in 1..self.coeffs.len() {
            let mut acc = BigInt::zero();
            for &j in nonzero.iter().take_while(|&&j| j <= n) {
                acc += &self.coeffs[j] * &inv[n - j];
            }
            if !acc.is_zero() {
                inv[n] = -(c0 * acc); // multiply by 1/c0 = c0 since c0 = ±1
            }
        }
        Ok(IntSeries { coeffs: inv })
    }

    /// In-place multiply by `q^k` (coefficients above the order fall off).
    fn shift_up(&mut self, k: usize) {
        if k == 0 {
            return;
        }
        let n = self.coeffs.len();
        for i in (k..n).rev() {
            self.coeffs[i] = std::mem::take(&mut self.coeffs[i - k]);
        }
        for c in self.coeffs.iter_mut().take(k.min(n)) {
            *c = BigInt::zero();
        }
    }

    /// In-place multiply by `1 + q^k`.
    fn mul_one_plus_monomial(&mut self, k: usize) {
        if k == 0 {
            for c in &mut self.coeffs {
                *c *= 2;
            }
            return;
        }
        for i in (k..self.coeffs.len()).rev() {
            let lower = self.coeffs[i - k].clone();
            self.coeffs[i] += lower;
        }
    }

    /// In-place divide by `1 + q^k` (`k ≥ 1`).
    fn div_one_plus_monomial(&mut self, k: usize) {
        assert!(k >= 1);
        for i in k..self.coeffs.len() {
            let lower = self.coeffs[i - k].clone();
            self.coeffs[i] -= lower;
        }
    }

    /// In-place divide by `1 − q^k` (`k ≥ 1`), i.e. multiply by `Σ q^{jk}`.
    fn div_one_minus_monomial(&mut self, k: usize) {
        assert!(k >= 1);
        for i in k..self.coeffs.len() {
            let lower = self.coeffs[i - k].clone();
            self.coeffs[i] += lower;
        }
    }
}

/// The truncated q-Pochhammer product `(x; q^step)_count` with `x = ±q^x_exp`:
/// the product of `(1 − x·q^{step·i})` over `i = 0..count`.
///
/// `count = None` means the infinite product; factors whose exponent exceeds
/// `order` are congruent to 1 and are skipped, so the truncation is exact.
/// For the infinite product `step ≥ 1` is required so that only finitely many
/// factors touch exponents `≤ order`.
pub fn pochhammer(x_exp: usize, x_sign: i32, q_step: usize, count: Option<usize>, order: usize) -> IntSeries {
    assert!(x_sign == 1 || x_sign == -1, "x_sign must be +1 or -1");
    assert!(
        count.is_some() || q_step >= 1,
        "infinite products need strictly increasing exponents"
    );
    let mut s = IntSeries::one(order);
    let mut i = 0usize;
    loop {
        if let Some(c) = count {
            if i >= c {
                break;
            }
        }
        let e = x_exp + q_step * i;
        if e > order {
            // Every later factor is 1 + O(q^{order+1}).
            break;
        }
        if e == 0 {
            // Factor (1 − x) with x = ±q⁰: either 0 or 2 times the series.
            if x_sign == 1 {
                return IntSeries::zero(order);
            }
            s.mul_one_plus_monomial(0);
        } else if x_sign == 1 {
            // (1 − q^e): subtract the shifted copy.
            for idx in (e..=order).rev() {
                let lower = s.coeffs[idx - e].clone();
                s.coeffs[idx] -= lower;
            }
        } else {
            s.mul_one_plus_monomial(e);
        }
        i += 1;
    }
    s
}

/// `ξ(q) = (−q; q²)_∞`, the generating product whose `qⁿ` coefficient counts
/// partitions of `n` into distinct odd parts.
pub fn xi_series(order: usize) -> IntSeries {
    pochhammer(1, -1, 2, None, order)
}

fn q_binomial_with_step(n: i64, k: i64, step: usize, order: usize) -> IntSeries {
    if k == 0 {
        // Empty product, regardless of n (covers the n = −1 boundary in sums).
        return IntSeries::one(order);
    }
    if k < 0 || n < 0 || k > n {
        return IntSeries::zero(order);
    }
    // Π_{i=1..k} (1 − q^{step(n−k+i)}) / (1 − q^{step·i}); every partial
    // quotient is an integer series, so in-place sparse division is exact.
    let mut s = IntSeries::one(order);
    for i in 1..=k as usize {
        let e = step * (n as usize - k as usize + i);
        if e <= order {
            for idx in (e..=order).rev() {
                let lower = s.coeffs[idx - e].clone();
                s.coeffs[idx] -= lower;
            }
        }
    }
    for i in 1..=k as usize {
        s.div_one_minus_monomial(step * i);
    }
    s
}

/// The Gaussian binomial coefficient `[n, k]_q` as an exact polynomial
/// (truncated at `order`). Returns 1 for `k = 0` and 0 for `k < 0` or
/// `k > n`.
pub fn q_binomial(n: i64, k: i64, order: usize) -> IntSeries {
    q_binomial_with_step(n, k, 1, order)
}

/// The Gaussian binomial `[n, k]` in the variable `q²`.
pub fn q_binomial_q2(n: i64, k: i64, order: usize) -> IntSeries {
    q_binomial_with_step(n, k, 2, order)
}

/// `A*_t(q)`: the generating function of total t-hook counts over
/// self-conjugate partitions; the coefficient of `qⁿ` is `a*_t(n)`.
///
/// Even `t`: `t·q^{2t}/(1 − q^{2t})·ξ(q)`. Odd `t`:
/// `q^t(1 + (t−1)q^t + t·q^{2t})/((1 − q^{2t})(1 + q^t))·ξ(q)`.
pub fn gen_a(t: usize, order: usize) -> IntSeries {
    assert!(t >= 1);
    let xi = xi_series(order);
    if t.is_multiple_of(2) {
        let mut geo = IntSeries::zero(order);
        let mut e = 2 * t;
        while e <= order {
            geo.coeffs[e] = BigInt::from(t);
            e += 2 * t;
        }
        geo.mul(&xi)
    } else {
        let mut num = IntSeries::zero(order);
        if t <= order {
            num.coeffs[t] = BigInt::one();
        }
        if 2 * t <= order {
            num.coeffs[2 * t] = BigInt::from(t as u64 - 1);
        }
        if 3 * t <= order {
            num.coeffs[3 * t] = BigInt::from(t);
        }
        num.div_one_minus_monomial(2 * t);
        num.div_one_plus_monomial(t);
        num.mul(&xi)
    }
}

/// One inner summand of the `B*_t` bracket:
/// `q^{e0}·[top, bot]_{q²}·Σ_{m≥0} q^{2m·m_step}·Π_{i<inv_count}(1 + q^{2m+base+2i})^{−1}`.
struct BracketPiece {
    e0: usize,
    top: i64,
    bot: i64,
    inv_count: usize,
    m_step: usize,
    base: usize,
}

/// The finite list of bracket pieces for `B*_t/ξ`, split by the parity of `t`
/// (the k-ranges have negative upper bounds — hence empty — for small `t`).
fn bracket_pieces(t: usize) -> Vec<BracketPiece> {
    let ti = t as i64;
    let mut pieces = Vec::new();
    if t.is_multiple_of(2) {
        for k in 0..=(ti - 4).div_euclid(6) {
            let k = k as usize;
            pieces.push(BracketPiece {
                e0: t + 4 * k * k + 2 * k,
                top: (ti - 2 * k as i64 - 2) / 2,
                bot: 2 * k as i64 + 1,
                inv_count: (t - 2 * k) / 2,
                m_step: 2 * k + 2,
                base: 1,
            });
        }
        for k in 0..=(ti - 2).div_euclid(6) {
            let k = k as usize;
            pieces.push(BracketPiece {
                e0: t + 4 * k * k + 2 * k + 1,
                top: (ti - 2 * k as i64 - 2) / 2,
                bot: 2 * k as i64,
                inv_count: (t - 2 * k) / 2,
                m_step: 2 * k + 1,
                base: 3,
            });
        }
    } else {
        for k in 0..=(ti - 1).div_euclid(6) {
            let k = k as usize;
            pieces.push(BracketPiece {
                e0: t + 4 * k * k - 2 * k,
                top: (ti - 2 * k as i64 - 1) / 2,
                bot: 2 * k as i64,
                inv_count: (t - 2 * k).div_ceil(2),
                m_step: 2 * k + 1,
                base: 1,
            });
        }
        for k in 0..=(ti - 5).div_euclid(6) {
            let k = k as usize;
            pieces.push(BracketPiece {
                e0: t + 4 * k * k + 6 * k + 3,
                top: (ti - 2 * k as i64 - 3) / 2,
                bot: 2 * k as i64 + 1,
                inv_count: (t - 2 * k - 1) / 2,
                m_step: 2 * k + 2,
                base: 3,
            });
        }
    }
    pieces
}

/// Accumulates one bracket piece. The m-sum stops at the first `m` whose
/// minimal exponent `e0 + 2m·m_step` exceeds the order: each inverse factor
/// has constant term 1, so later terms vanish mod `q^{order+1}`.
fn add_bracket_piece(acc: &mut IntSeries, p: &BracketPiece, order: usize) {
    if p.e0 > order {
        return;
    }
    let binom = q_binomial_q2(p.top, p.bot, order);
    let mut msum = IntSeries::zero(order);
    let mut m = 0usize;
    while p.e0 + 2 * m * p.m_step <= order {
        let mut term = IntSeries::monomial(2 * m * p.m_step, 1, order);
        for i in 0..p.inv_count {
            let e = 2 * m + p.base + 2 * i;
            if e <= order {
                term.div_one_plus_monomial(e);
            }
        }
        msum.add_assign(&term);
        m += 1;
    }
    let mut piece = msum.mul(&binom);
    piece.shift_up(p.e0);
    acc.add_assign(&piece);
}

/// The cofactor `B*_t(q)/ξ(q)`: a finite sum of q-binomial-weighted inverse
/// Pochhammer series.
fn gen_b_bracket(t: usize, order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    for p in bracket_pieces(t) {
        add_bracket_piece(&mut acc, &p, order);
    }
    acc
}

/// `B*_t(q)`: the generating function of total t-hook counts over partitions
/// into distinct odd parts; the coefficient of `qⁿ` is `b*_t(n)`.
pub fn gen_b(t: usize, order: usize) -> IntSeries {
    assert!(t >= 1);
    gen_b_bracket(t, order).mul(&xi_series(order))
}

/// Checks the inverse-Pochhammer expansion
/// `1/(−q^{2m+1}; q²)_n = Σ_j [n+j−1, j]_{q²}·(−q^{2m+1})^j`
/// as series through `q^order`.
pub fn pochhammer_inverse_identity_check(m: usize, n: usize, order: usize) -> bool {
    // Left side: divide out each factor of the finite product.
    let mut lhs = IntSeries::one(order);
    for i in 0..n {
        let e = 2 * m + 1 + 2 * i;
        if e <= order {
            lhs.div_one_plus_monomial(e);
        }
    }
    // Right side: j-sum truncates once the monomial exponent passes the order.
    let mut rhs = IntSeries::zero(order);
    let mut j = 0usize;
    while (2 * m + 1) * j <= order {
        let mut term = q_binomial_q2(n as i64 + j as i64 - 1, j as i64, order);
        term.shift_up((2 * m + 1) * j);
        if j % 2 == 1 {
            term = IntSeries::zero(order).sub(&term);
        }
        rhs.add_assign(&term);
        j += 1;
        if j > order + 1 {
            break; // m = 0 safety: exponent step is 1
        }
    }
    lhs == rhs
}

// ---------------------------------------------------------------------------
// Laurent expansion at q = e^{−z}
// ---------------------------------------------------------------------------

/// A truncated Laurent series in `z` with exact rational coefficients,
/// valid for exponents `min_exp ..= max_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLaurent {
    min_exp: i64,
    coeffs: Vec<BigRational>,
}

impl RatLaurent {
    /// Smallest stored exponent (the leading coefficient is nonzero unless
    /// the series is identically zero, which is reported with `min_exp = 0`).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Largest stored exponent.
    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// The coefficient of `z^exp`; exponents below `min_exp` are zero.
    ///
    /// # Panics
    /// Panics if `exp` exceeds the stored range.
    pub fn coeff(&self, exp: i64) -> BigRational {
        if exp < self.min_exp {
            return BigRational::zero();
        }
        assert!(exp <= self.max_exp(), "exponent beyond truncation order");
        self.coeffs[(exp - self.min_exp) as usize].clone()
    }
}

/// Multiplies truncated rational series (coefficients for `z^0..z^{len-1}`).
fn rat_mul(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Inverts a truncated rational series with nonzero constant term.
fn rat_invert(a: &[BigRational], len: usize) -> Vec<BigRational> {
    assert!(!a[0].is_zero());
    let inv0 = a[0].recip();
    let mut out = vec![BigRational::zero(); len];
    out[0] = inv0.clone();
    for n in 1..len {
        let mut acc = BigRational::zero();
        for j in 1..=n.min(a.len() - 1) {
            if !a[j].is_zero() {
                acc += &a[j] * &out[n - j];
            }
        }
        if !acc.is_zero() {
            out[n] = -(&inv0 * acc);
        }
    }
    out
}

/// Expands `p(e^{−z})` through `z^{len−1}` for a polynomial `p` given by its
/// integer coefficients: `Σ_j p_j e^{−jz}` with exact Taylor series.
fn poly_at_exp_neg_z(p: &IntSeries, len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (j, cj) in p.coeffs.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        let c = BigRational::from_integer(cj.clone());
        // e^{−jz} = Σ_i (−j)^i z^i / i!
        let neg_j = BigRational::from_integer(BigInt::from(-(j as i64)));
        let mut term = BigRational::one();
        for (i, o) in out.iter_mut().enumerate() {
            *o += &c * &term;
            term = term * &neg_j / BigRational::from_integer(BigInt::from(i as i64 + 1));
        }
    }
    out
}

/// The Laurent expansion in `z` of `num(e^{−z})/den(e^{−z})` through `z^order`,
/// with exact rational coefficients.
///
/// The denominator may vanish at `q = 1` (i.e. `z = 0`); the resulting pole
/// appears as a negative `min_exp`. Fails only if the denominator is the zero
/// polynomial.
pub fn subst_exp_neg_z(num: &IntSeries, den: &IntSeries, order: usize) -> Result<RatLaurent, SeriesError> {
    // The z-adic valuation of den(e^{−z}) is at most deg(den) (the
    // multiplicity of the root q = 1), so this length always suffices.
    let len = order + den.coeffs.len() + 1;
    let den_z = poly_at_exp_neg_z(den, len);
    let Some(v) = den_z.iter().position(|c| !c.is_zero()) else {
        return Err(SeriesError::DegenerateDenominator);
    };
    let num_len = order + v + 1;
    let num_z = poly_at_exp_neg_z(num, num_len);
    let unit = &den_z[v..];
    let inv_unit = rat_invert(unit, num_len);
    let prod = rat_mul(&num_z, &inv_unit, num_len);
    // prod holds coefficients of z^{-v} .. z^{order}; normalize the leading end.
    let mut min_exp = -(v as i64);
    let mut coeffs = prod;
    while coeffs.len() > 1 && coeffs[0].is_zero() && min_exp < 0 {
        coeffs.remove(0);
        min_exp += 1;
    }
    if coeffs.iter().all(|c| c.is_zero()) {
        return Ok(RatLaurent {
            min_exp: 0,
            coeffs: vec![BigRational::zero(); order + 1],
        });
    }
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
        min_exp += 1;
    }
    Ok(RatLaurent { min_exp, coeffs })
}

/// The exact Laurent expansion of the rational part `K_t(q) = A*_t(q)/ξ(q)`
/// at `q = e^{−z}`, through `z^order`.
///
/// Even `t`: `K_t = t·q^{2t}/(1 − q^{2t})`. Odd `t`:
/// `K_t = (q^t + (t−1)q^{2t} + t·q^{3t})/((1 − q^{2t})(1 + q^t))`.
pub fn gen_a_rational_part_laurent(t: usize, order: usize) -> RatLaurent {
    assert!(t >= 1);
    if t.is_multiple_of(2) {
        let num = IntSeries::monomial(2 * t, t as u64, 2 * t);
        let mut den = IntSeries::one(2 * t);
        den.coeffs[2 * t] = -BigInt::one();
        subst_exp_neg_z(&num, &den, order).expect("denominator 1 - q^{2t} is nonzero")
    } else {
        let mut num = IntSeries::zero(3 * t);
        num.coeffs[t] = BigInt::one();
        num.coeffs[2 * t] = BigInt::from(t as u64 - 1);
        num.coeffs[3 * t] = BigInt::from(t as u64);
        // (1 − q^{2t})(1 + q^t) = 1 + q^t − q^{2t} − q^{3t}
        let mut den = IntSeries::one(3 * t);
        den.coeffs[t] = BigInt::one();
        den.coeffs[2 * t] = -BigInt::one();
        den.coeffs[3 * t] = -BigInt::one();
        subst_exp_neg_z(&num, &den, order).expect("denominator is nonzero")
    }
}

/// Closed-form Laurent coefficients of `K_t(e^{−z})` from `z^{−1}` through
/// `z^5`, for cross-checking [`gen_a_rational_part_laurent`].
///
/// Even `t` (`K_t = t/(e^{2tz} − 1)`, a Bernoulli series with odd powers
/// only): `1/(2z) − t/2 + t²z/6 − t⁴z³/90 + t⁶z⁵/945`.
///
/// Odd `t` gains the cofactor `q^t/(1+q^t)² = ¼·sech²(tz/2)`, contributing
/// `1/4 − t²z²/16 + t⁴z⁴/96`, so the expansion is
/// `1/(2z) + (1/4 − t/2) + t²z/6 − t²z²/16 − t⁴z³/90 + t⁴z⁴/96 + t⁶z⁵/945`.
pub fn gen_a_rational_part_reference(t: usize) -> RatLaurent {
    assert!(t >= 1);
    let tb = BigInt::from(t);
    let p = |e: u32, d: i64| BigRational::new(tb.pow(e), BigInt::from(d));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let coeffs = if t.is_multiple_of(2) {
        vec![
            half,
            -p(1, 2),
            p(2, 6),
            BigRational::zero(),
            -p(4, 90),
            BigRational::zero(),
            p(6, 945),
        ]
    } else {
        vec![
            half,
            quarter - p(1, 2),
            p(2, 6),
            -p(2, 16),
            -p(4, 90),
            p(4, 96),
            p(6, 945),
        ]
    };
    RatLaurent { min_exp: -1, coeffs }
}
