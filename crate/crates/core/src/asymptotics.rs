//! Circle-method main terms for the hook statistics, exact-to-main-term
//! ratio reports, and the infinite-product comparison `ξ(e^{−z})` vs `Ψ(z)`
//! near `q = 1`.
//!
//! Main terms (`n → ∞`, fixed `t`):
//!
//! ```text
//! a*_t(n) ~ (3^{1/4}/(2π·2^{1/4}))·n^{−1/4}·e^{π√(n/6)}
//! b*_t(n) ~ β*_t·(3^{1/4}/(π·2^{1/4}))·n^{−1/4}·e^{π√(n/6)}
//! |SC(n)| = |DO(n)| ~ (2^{1/4}/(4·3^{1/4}))·n^{−3/4}·e^{π√(n/6)}
//! a*_t(n)/|SC(n)| ~ (2/π)·√(3n/2)      b*_t(n)/|DO(n)| ~ (4β*_t/π)·√(3n/2)
//! ```
//!
//! All main terms are computed in log space so that ratios stay finite even
//! when the values themselves overflow `f64`.
//!
//! Near `q = 1` (`z → 0⁺`), the product `ξ(e^{−z}) = Π_{j odd}(1 + e^{−jz})`
//! is approximated by `Ψ(z) = exp(π²/(24z) − z/24)` with a purely
//! exponentially small error; [`xi_psi_bound`] certifies the inequality
//! `|ξ(e^{−z}) − Ψ(z)| ≤ 214·|Ψ(z)|·e^{−π²/z}` in double-double precision
//! (the gap is far below `f64` resolution at small `z`).

use crate::dd::Dd;
use crate::qseries::{gen_a, gen_b, xi_series, IntSeries};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

/// Errors from asymptotic evaluation.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum AsymptoticsError {
    /// A requested coefficient index exceeds the allowed series order.
    #[error("requested n = {n} exceeds the series order budget {budget}")]
    OrderBudgetExceeded { n: u64, budget: u64 },
    /// The product cannot be truncated accurately for this argument
    /// (non-positive or tiny real part).
    #[error("product truncation cannot reach f64 accuracy for Re(z) = {re}")]
    TruncationInsufficient { re: f64 },
}

/// Which statistic a main term describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Total t-hook count over self-conjugate partitions, `a*_t(n)`.
    ASc,
    /// Total t-hook count over distinct-odd partitions, `b*_t(n)`.
    BDo,
    /// The class size `|SC(n)| = |DO(n)|`.
    ClassSize,
    /// The average `a*_t(n)/|SC(n)|`.
    AvgSc,
    /// The average `b*_t(n)/|DO(n)|`.
    AvgDo,
}

/// A main-term selection: family, hook length `t`, and the numeric `β*_t`
/// (used by the `b*`/average-`b*` families; ignored by the others).
#[derive(Clone, Copy, Debug)]
pub struct MainTermSpec {
    pub family: Family,
    pub t: u64,
    pub beta_numeric: f64,
}

/// One row of an exact-vs-main-term comparison.
#[derive(Clone, Copy, Debug)]
pub struct RatioReport {
    pub n: u64,
    /// The exact value as `f64` (`∞` if it overflows; the ratio never does).
    pub exact: f64,
    /// The main term as `f64` (`∞` if it overflows).
    pub main_term: f64,
    /// `exact / main_term`, computed in log space.
    pub ratio: f64,
}

/// Natural log of a positive big integer, valid far beyond `f64` range.
fn big_ln(x: &BigInt) -> f64 {
    debug_assert!(x.sign() == num_bigint::Sign::Plus);
    let bits = x.bits() as i64;
    let sh = (bits - 64).max(0) as u64;
    let top = (x >> sh).to_f64().expect("64-bit head fits");
    top.ln() + sh as f64 * std::f64::consts::LN_2
}

/// `ln` of the main term for `(spec, n)`; exact in the sense that only f64
/// rounding enters.
pub fn main_term_ln(spec: &MainTermSpec, n: u64) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    let pi = std::f64::consts::PI;
    let ln2 = std::f64::consts::LN_2;
    let ln3 = 3f64.ln();
    let expo = pi * (nf / 6.0).sqrt();
    match spec.family {
        Family::ASc => 0.25 * ln3 - (2.0 * pi).ln() - 0.25 * ln2 - 0.25 * nf.ln() + expo,
        Family::BDo => {
            spec.beta_numeric.ln() + 0.25 * ln3 - pi.ln() - 0.25 * ln2 - 0.25 * nf.ln() + expo
        }
        Family::ClassSize => 0.25 * ln2 - 4f64.ln() - 0.25 * ln3 - 0.75 * nf.ln() + expo,
        Family::AvgSc => ((2.0 / pi) * (1.5 * nf).sqrt()).ln(),
        Family::AvgDo => ((4.0 * spec.beta_numeric / pi) * (1.5 * nf).sqrt()).ln(),
    }
}

/// The main term itself (may overflow to `∞` for huge `n`; use
/// [`main_term_ln`] or [`ratio_report`] when that matters).
pub fn main_term(spec: &MainTermSpec, n: u64) -> f64 {
    main_term_ln(spec, n).exp()
}

/// Exact-vs-main-term rows for each requested `n`.
///
/// The exact values come from the generating functions, built once at order
/// `max(ns)`; `order_budget` caps that order (guarding against accidental
/// huge builds) and exceeding it is an error.
pub fn ratio_report(
    spec: &MainTermSpec,
    ns: &[u64],
    order_budget: u64,
) -> Result<Vec<RatioReport>, AsymptoticsError> {
    let max_n = ns.iter().copied().max().unwrap_or(0);
    if max_n > order_budget {
        return Err(AsymptoticsError::OrderBudgetExceeded {
            n: max_n,
            budget: order_budget,
        });
    }
    let order = max_n as usize;
    let t = spec.t as usize;
    let (num, den): (IntSeries, Option<IntSeries>) = match spec.family {
        Family::ASc => (gen_a(t, order), None),
        Family::BDo => (gen_b(t, order), None),
        Family::ClassSize => (xi_series(order), None),
        Family::AvgSc => (gen_a(t, order), Some(xi_series(order))),
        Family::AvgDo => (gen_b(t, order), Some(xi_series(order))),
    };
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let c = num.coeff(n as usize);
        if c.is_zero() {
            rows.push(RatioReport {
                n,
                exact: 0.0,
                main_term: main_term(spec, n),
                ratio: 0.0,
            });
            continue;
        }
        let mut exact_ln = big_ln(c);
        if let Some(d) = &den {
            exact_ln -= big_ln(d.coeff(n as usize));
        }
        let ml = main_term_ln(spec, n);
        rows.push(RatioReport {
            n,
            exact: exact_ln.exp(),
            main_term: ml.exp(),
            ratio: (exact_ln - ml).exp(),
        });
    }
    Ok(rows)
}

/// `ξ(e^{−z}) = Π_{j odd}(1 + e^{−jz})` for complex `z` with `Re(z) > 0`,
/// to f64 accuracy (the truncation tail beyond `j·Re(z) > 45` is below
/// `e^{−45}/(2·Re z)`, i.e. under `1e−13` for any accepted argument).
pub fn xi_eval(z: Complex64) -> Result<Complex64, AsymptoticsError> {
    let re = z.re;
    if re <= 0.0 || 45.0 / re > 1e7 {
        return Err(AsymptoticsError::TruncationInsufficient { re });
    }
    let one = Complex64::new(1.0, 0.0);
    let mut p = one;
    let mut j = 1f64;
    while j * re <= 45.0 {
        p *= one + (-z * j).exp();
        j += 2.0;
    }
    Ok(p)
}

/// `Ψ(z) = exp(π²/(24z) − z/24)`, the power-series-free approximation of
/// `ξ(e^{−z})` as `z → 0`.
pub fn psi_eval(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    let pi2 = Complex64::new(pi * pi, 0.0);
    (pi2 / (z * 24.0) - z / 24.0).exp()
}

/// The certified comparison of `ξ(e^{−z})` and `Ψ(z)` at a real `z > 0`:
/// every field is computed in double-double precision (~31 digits) and
/// rounded once at the end, so `diff` is meaningful even when it is ~1e−21
/// against values of size ~8.
#[derive(Clone, Copy, Debug)]
pub struct XiPsiBound {
    pub z: f64,
    pub xi: f64,
    pub psi: f64,
    /// `|ξ(e^{−z}) − Ψ(z)|`.
    pub diff: f64,
    /// `214·|Ψ(z)|·e^{−π²/z}`.
    pub bound: f64,
}

/// Evaluates both sides of `|ξ(e^{−z}) − Ψ(z)| ≤ 214·|Ψ(z)|·e^{−π²/z}` in
/// double-double arithmetic. Factors with `j·z > 82` are dropped: each is
/// `1 + O(e^{−82})`, below double-double resolution.
pub fn xi_psi_bound(z: f64) -> XiPsiBound {
    assert!(z > 0.0, "positive real z required");
    let zd = Dd::from_f64(z);
    let mut prod = Dd::ONE;
    let mut j = 1u64;
    while (j as f64) * z <= 82.0 {
        let arg = zd.scale(-(j as f64));
        prod = prod.mul(Dd::ONE.add(arg.exp()));
        j += 2;
    }
    let pi2 = Dd::PI.mul(Dd::PI);
    let psi = pi2.div(zd.scale(24.0)).sub(zd.div(Dd::from_f64(24.0))).exp();
    let diff = prod.sub(psi).abs();
    let bound = psi.abs().scale(214.0).mul((-pi2.div(zd)).exp());
    XiPsiBound {
        z,
        xi: prod.to_f64(),
        psi: psi.to_f64(),
        diff: diff.to_f64(),
        bound: bound.to_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_eval_matches_series_partial_sum() {
        // At z = 1 the series tail beyond order 60 is far below 1e−12.
        let xi = xi_series(60);
        let q: f64 = (-1.0f64).exp();
        let mut sum = 0.0;
        for n in 0..=60 {
            sum += xi.coeff(n).to_f64().unwrap() * q.powi(n as i32);
        }
        let prod = xi_eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((prod.re - sum).abs() < 1e-12);
        assert!(prod.im.abs() < 1e-15);
    }

    #[test]
    fn xi_eval_rejects_bad_arguments() {
        assert!(matches!(
            xi_eval(Complex64::new(0.0, 1.0)),
            Err(AsymptoticsError::TruncationInsufficient { .. })
        ));
        assert!(matches!(
            xi_eval(Complex64::new(-0.5, 0.0)),
            Err(AsymptoticsError::TruncationInsufficient { .. })
        ));
    }

    #[test]
    fn psi_eval_simple_value() {
        let pi = std::f64::consts::PI;
        let got = psi_eval(Complex64::new(0.5, 0.0));
        let want = (pi * pi / 12.0 - 1.0 / 48.0).exp();
        assert!((got.re - want).abs() < 1e-12 * want);
    }

    #[test]
    fn product_approximation_bound_holds_and_tightens() {
        let b1 = xi_psi_bound(1.0);
        let b05 = xi_psi_bound(0.5);
        let b02 = xi_psi_bound(0.2);
        for b in [&b1, &b05, &b02] {
            assert!(b.diff < b.bound, "bound fails at z={}", b.z);
        }
        // Independently computed gap at z = 1: |ξ − Ψ| = 7.4845e−5.
        assert!((b1.diff / 7.485e-5 - 1.0).abs() < 1e-3);
        // Relative gap shrinks as z decreases.
        assert!(b05.diff / b05.psi < b1.diff / b1.psi);
        assert!(b02.diff / b02.psi < b05.diff / b05.psi);
    }

    #[test]
    fn ratio_report_basics() {
        let spec = MainTermSpec {
            family: Family::ASc,
            t: 2,
            beta_numeric: 0.0,
        };
        let rows = ratio_report(&spec, &[200], 400).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].ratio > 0.5 && rows[0].ratio < 2.0);
        assert!(matches!(
            ratio_report(&spec, &[100], 50),
            Err(AsymptoticsError::OrderBudgetExceeded { n: 100, budget: 50 })
        ));
    }

    #[test]
    fn averages_are_quotients_of_main_terms() {
        let beta2 = 0.5 * std::f64::consts::LN_2; // β*_2 = (ln 2)/2
        let a = MainTermSpec {
            family: Family::ASc,
            t: 2,
            beta_numeric: beta2,
        };
        let b = MainTermSpec {
            family: Family::BDo,
            t: 2,
            beta_numeric: beta2,
        };
        let size = MainTermSpec {
            family: Family::ClassSize,
            t: 2,
            beta_numeric: beta2,
        };
        let avg_a = MainTermSpec {
            family: Family::AvgSc,
            t: 2,
            beta_numeric: beta2,
        };
        let avg_b = MainTermSpec {
            family: Family::AvgDo,
            t: 2,
            beta_numeric: beta2,
        };
        for n in [100u64, 1000, 9999] {
            let want_a = main_term_ln(&a, n) - main_term_ln(&size, n);
            assert!((main_term_ln(&avg_a, n) - want_a).abs() < 1e-12);
            let want_b = main_term_ln(&b, n) - main_term_ln(&size, n);
            assert!((main_term_ln(&avg_b, n) - want_b).abs() < 1e-12);
        }
    }

    #[test]
    fn big_ln_handles_giants() {
        let x = BigInt::from(1u8) << 100000u32;
        assert!((big_ln(&x) - 100000.0 * std::f64::consts::LN_2).abs() < 1e-6);
        let y = BigInt::from(12345u32);
        assert!((big_ln(&y) - (12345f64).ln()).abs() < 1e-12);
    }
}
