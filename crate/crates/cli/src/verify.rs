//! Verification suites: each runs a family of exact or bounded checks and
//! reports either a pass with the number of checks performed or the first
//! counterexample found.  Detail strings never contain commas, so they embed
//! cleanly in the CSV `detail` column.

use clap::ValueEnum;
use hookbias::asymptotics::xi_psi_bound;
use hookbias::constants::{
    beta_closed, beta_recurrence_holds, beta_sweep, g_total, lemma_binom_even, lemma_binom_odd,
    limit_gamma,
};
use hookbias::partitions::{a_star_brute, b_star_brute, enumerate, PartitionClass};
use hookbias::qseries::{
    gen_a, gen_a_rational_part_laurent, gen_a_rational_part_reference, gen_b, xi_series,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The selectable verification suites.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Generating functions vs brute-force enumeration (t ≤ 8, n ≤ 60).
    Genfun,
    /// Counting identities: class sizes, hook-count sums, product
    /// coefficients (n ≤ 40), and binomial lemmas (n ≤ 300).
    Identities,
    /// The six-step recurrence for β*_t, exact (8 ≤ t ≤ 300).
    Recurrence,
    /// The log-2 coefficient of β*_t vanishes iff 3 | t (t ≤ 300).
    Rationality,
    /// 0 < β*_t < 1/2, proven with exact bracketing (2 ≤ t ≤ 1000).
    Bound,
    /// Laurent expansion of the rational factor vs closed forms (t ≤ 10).
    Laurent,
    /// The product-approximation error bound at z ∈ {0.2, 0.5, 1.0}.
    Xi,
    /// The limit constants: G(0..2) = ln(5/2)/3 and the γ limit.
    Limit,
    /// Every suite above, in order.
    All,
}

/// Outcome of one suite.
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: usize,
    /// `None` on pass; otherwise the first counterexample.
    pub failure: Option<String>,
}

/// Runs the selected suite (or all of them) with optional range overrides.
pub fn run_suites(suite: Suite, t_max: Option<u64>, n_max: Option<u64>) -> Vec<SuiteResult> {
    let all = [
        Suite::Genfun,
        Suite::Identities,
        Suite::Recurrence,
        Suite::Rationality,
        Suite::Bound,
        Suite::Laurent,
        Suite::Xi,
        Suite::Limit,
    ];
    let selected: &[Suite] = if suite == Suite::All { &all } else { std::slice::from_ref(&suite) };
    selected
        .iter()
        .map(|s| match s {
            Suite::Genfun => genfun(t_max.unwrap_or(8), n_max.unwrap_or(60)),
            Suite::Identities => identities(n_max.unwrap_or(40)),
            Suite::Recurrence => recurrence(t_max.unwrap_or(300)),
            Suite::Rationality => rationality(t_max.unwrap_or(300)),
            Suite::Bound => bound(t_max.unwrap_or(1000)),
            Suite::Laurent => laurent(t_max.unwrap_or(10)),
            Suite::Xi => xi(),
            Suite::Limit => limit(),
            Suite::All => unreachable!("flattened above"),
        })
        .collect()
}

fn genfun(t_max: u64, n_max: u64) -> SuiteResult {
    let mut checks = 0;
    for t in 1..=t_max as usize {
        let a = gen_a(t, n_max as usize);
        let b = gen_b(t, n_max as usize);
        for n in 0..=n_max as usize {
            checks += 2;
            let (a_brute, b_brute) = (a_star_brute(t, n), b_star_brute(t, n));
            if a.coeff(n) != &BigInt::from(a_brute) {
                return fail(
                    "genfun",
                    checks,
                    format!("family=a t={t} n={n} series={} brute={a_brute}", a.coeff(n)),
                );
            }
            if b.coeff(n) != &BigInt::from(b_brute) {
                return fail(
                    "genfun",
                    checks,
                    format!("family=b t={t} n={n} series={} brute={b_brute}", b.coeff(n)),
                );
            }
        }
    }
    pass("genfun", checks)
}

fn identities(n_max: u64) -> SuiteResult {
    let mut checks = 0;
    let xi = xi_series(n_max as usize);
    for n in 0..=n_max as usize {
        let sc = enumerate(PartitionClass::SelfConjugate, n).len() as u64;
        let dodd = enumerate(PartitionClass::DistinctOdd, n).len() as u64;
        checks += 2;
        if sc != dodd {
            return fail("identities", checks, format!("class sizes n={n} sc={sc} do={dodd}"));
        }
        if xi.coeff_u64(n) != dodd {
            return fail(
                "identities",
                checks,
                format!("product coefficient n={n} coeff={} class={dodd}", xi.coeff_u64(n)),
            );
        }
        if n >= 1 {
            checks += 2;
            let a_sum: u64 = (1..=n).map(|t| a_star_brute(t, n)).sum();
            let b_sum: u64 = (1..=n).map(|t| b_star_brute(t, n)).sum();
            if a_sum != n as u64 * sc {
                return fail(
                    "identities",
                    checks,
                    format!("hook sum family=a n={n} sum={a_sum} expected={}", n as u64 * sc),
                );
            }
            if b_sum != n as u64 * dodd {
                return fail(
                    "identities",
                    checks,
                    format!("hook sum family=b n={n} sum={b_sum} expected={}", n as u64 * dodd),
                );
            }
        }
    }
    for n in 1..=300u64 {
        checks += 2;
        if !lemma_binom_even(n) {
            return fail("identities", checks, format!("even binomial lemma n={n}"));
        }
        if !lemma_binom_odd(n) {
            return fail("identities", checks, format!("odd binomial lemma n={n}"));
        }
    }
    pass("identities", checks)
}

fn recurrence(t_max: u64) -> SuiteResult {
    let mut checks = 0;
    for t in 8..=t_max {
        checks += 1;
        if !beta_recurrence_holds(t) {
            return fail("recurrence", checks, format!("t={t}"));
        }
    }
    pass("recurrence", checks)
}

fn rationality(t_max: u64) -> SuiteResult {
    let mut checks = 0;
    for t in 1..=t_max {
        checks += 1;
        let is_rational = beta_closed(t).is_rational();
        if is_rational != (t % 3 == 0) {
            return fail(
                "rationality",
                checks,
                format!("t={t} is_rational={is_rational} expected={}", t % 3 == 0),
            );
        }
    }
    pass("rationality", checks)
}

fn bound(t_max: u64) -> SuiteResult {
    let mut checks = 0;
    let sweep = beta_sweep(t_max);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let zero = BigRational::zero();
    for (t, b) in sweep.iter().enumerate().skip(2) {
        checks += 2;
        if b.provably_less_than(&half) != Some(true) {
            return fail("bound", checks, format!("t={t} not provably < 1/2 value={b}"));
        }
        if b.neg().provably_less_than(&zero) != Some(true) {
            return fail("bound", checks, format!("t={t} not provably > 0 value={b}"));
        }
    }
    pass("bound", checks)
}

fn laurent(t_max: u64) -> SuiteResult {
    let mut checks = 0;
    for t in 1..=t_max as usize {
        let via_subst = gen_a_rational_part_laurent(t, 5);
        let reference = gen_a_rational_part_reference(t);
        for e in -1..=5i64 {
            checks += 1;
            if via_subst.coeff(e) != reference.coeff(e) {
                return fail(
                    "laurent",
                    checks,
                    format!(
                        "t={t} exponent={e} substitution={} closed={}",
                        via_subst.coeff(e),
                        reference.coeff(e)
                    ),
                );
            }
        }
    }
    pass("laurent", checks)
}

fn xi() -> SuiteResult {
    let mut checks = 0;
    let mut last_rel: Option<f64> = None;
    for z in [1.0f64, 0.5, 0.2] {
        checks += 1;
        let r = xi_psi_bound(z);
        if !(r.diff > 0.0 && r.diff < r.bound) {
            return fail("xi", checks, format!("z={z} diff={:.6e} bound={:.6e}", r.diff, r.bound));
        }
        let rel = r.diff / r.psi;
        if let Some(prev) = last_rel {
            checks += 1;
            if rel >= prev {
                return fail(
                    "xi",
                    checks,
                    format!("relative gap not shrinking at z={z} rel={rel:.6e} prev={prev:.6e}"),
                );
            }
        }
        last_rel = Some(rel);
    }
    pass("xi", checks)
}

fn limit() -> SuiteResult {
    let mut checks = 0;
    let want = (2.5f64).ln() / 3.0;
    for k in 0..=2u32 {
        checks += 1;
        let g = g_total(k, 1.66e-10);
        if (g - want).abs() >= 1e-9 {
            return fail("limit", checks, format!("G({k})={g:.12} expected={want:.12}"));
        }
    }
    checks += 1;
    let lim = limit_gamma();
    if (lim - 1.6370350019).abs() >= 1e-9 {
        return fail("limit", checks, format!("limit={lim:.10} anchor=1.6370350019"));
    }
    pass("limit", checks)
}

fn pass(suite: &'static str, checks: usize) -> SuiteResult {
    SuiteResult { suite, checks, failure: None }
}

fn fail(suite: &'static str, checks: usize, detail: String) -> SuiteResult {
    SuiteResult { suite, checks, failure: Some(detail) }
}
