//! `hookbias` — exact hook-length statistics for self-conjugate and
//! distinct-odd-part partitions, with verification suites.
//!
//! Every subcommand writes machine-readable output (CSV by default,
//! `--format json` for the same records as JSON) and is deterministic:
//! identical invocations produce byte-identical standard output.
//! Exit codes: 0 success / all checks pass; 1 verification failure
//! (counterexample on standard output); 2 usage or computation-request error.

mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookbias::asymptotics::{ratio_report, Family, MainTermSpec};
use hookbias::constants::{beta_closed, beta_quadrature, gamma, limit_gamma, QuadratureSpec};
use hookbias::partitions::{a_star_brute, b_star_brute, enumerate, PartitionClass};
use hookbias::qseries::{gen_a, gen_b};
use hookbias::LogRational;
use serde::Serialize;

/// Largest generating-function order the `asymptotics` and `hooks`
/// subcommands will build (guards against accidental huge requests).
const ORDER_BUDGET: u64 = 20_000;

/// Largest `n` for which a class is materialized in memory (`enumerate`,
/// `hooks --method brute`); class sizes grow like `e^{π√(n/6)}`, and this
/// keeps them in the tens of millions.
const ENUM_BUDGET: u64 = 300;

#[derive(Parser)]
#[command(
    name = "hookbias",
    version,
    about = "Exact hook-length statistics for self-conjugate and distinct-odd-part partitions",
    long_about = "Exact hook-length statistics for self-conjugate (sc) and distinct-odd-part \
                  (do) partitions: enumeration, generating-function coefficients, exact bias \
                  constants in Q + Q·log 2, asymptotic main-term comparisons, and verification \
                  suites.\n\nOutput is CSV by default (--format json for the same records as \
                  JSON) and deterministic: identical invocations produce byte-identical output. \
                  Exit codes: 0 success/all-pass, 1 verification failure (counterexample on \
                  stdout), 2 usage error."
)]
struct Cli {
    /// Output format (applies to every subcommand).
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    /// Self-conjugate partitions.
    Sc,
    /// Partitions into distinct odd parts.
    Do,
}

impl Class {
    fn to_partition_class(self) -> PartitionClass {
        match self {
            Class::Sc => PartitionClass::SelfConjugate,
            Class::Do => PartitionClass::DistinctOdd,
        }
    }
    fn name(self) -> &'static str {
        match self {
            Class::Sc => "sc",
            Class::Do => "do",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gen {
    /// Hook counts over self-conjugate partitions.
    #[value(name = "A", alias = "a")]
    A,
    /// Hook counts over distinct-odd partitions.
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HooksMethod {
    /// Enumerate the class and count hooks directly.
    Brute,
    /// Read the coefficient off the generating function.
    Series,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BetaMethod {
    /// Exact finite sums in Q + Q·log 2.
    Closed,
    /// Adaptive-Simpson integral evaluation.
    Quadrature,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Total hook count over self-conjugate partitions.
    A,
    /// Total hook count over distinct-odd partitions.
    B,
    /// The class size itself.
    Size,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::A => "a",
            FamilyArg::B => "b",
            FamilyArg::Size => "size",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) the partitions of n in a class.
    ///
    /// CSV columns: `class,n,count`; with --list instead one row per
    /// partition, `class,n,partition`, parts joined by `+`, in
    /// lexicographically decreasing order.  n is capped at the enumeration
    /// budget (300).
    Enumerate {
        /// Partition class.
        #[arg(long, value_enum)]
        class: Class,
        /// The integer being partitioned.
        #[arg(long)]
        n: usize,
        /// List the partitions instead of only counting them.
        #[arg(long)]
        list: bool,
    },

    /// The total number of hooks of length t across all partitions of n
    /// in a class.
    ///
    /// CSV columns: `class,t,n,method,count`.  The brute method is capped
    /// at the enumeration budget (n ≤ 300); the series method at the order
    /// budget (n ≤ 20000).
    Hooks {
        /// Partition class.
        #[arg(long, value_enum)]
        class: Class,
        /// Hook length (≥ 1).
        #[arg(long)]
        t: u64,
        /// The integer being partitioned.
        #[arg(long)]
        n: u64,
        /// How to compute the count (both are exact and agree).
        #[arg(long, value_enum, default_value_t = HooksMethod::Series)]
        method: HooksMethod,
    },

    /// Generating-function coefficients for hook counts, orders 0..=N.
    ///
    /// CSV columns: `exponent,coefficient` (exact integers).
    Series {
        /// Which family: A (self-conjugate) or B (distinct-odd).
        #[arg(long, value_enum)]
        gen: Gen,
        /// Hook length (≥ 1).
        #[arg(long)]
        t: u64,
        /// Truncation order N (coefficients of q^0 through q^N).
        #[arg(long)]
        order: u64,
    },

    /// The bias constant β*_t, exactly or by quadrature.
    ///
    /// CSV columns: `t,method,value` plus a final `exact` column with
    /// --exact (`r + s*log(2)`, fractions in lowest terms).  Accepts a
    /// single t, a comma list, or an inclusive range `a..b`.
    Beta {
        /// Hook length(s): `21`, `2,3,5`, or `2..20` (inclusive).
        #[arg(long)]
        t: String,
        /// Evaluation method.
        #[arg(long, value_enum, default_value_t = BetaMethod::Closed)]
        method: BetaMethod,
        /// Also print the exact value (closed method only).
        #[arg(long)]
        exact: bool,
    },

    /// The bias ratio γ*_t = 1/(2β*_t).
    ///
    /// CSV columns: `t,gamma` (10 fractional digits).  Accepts a single t,
    /// a comma list, or an inclusive range `a..b`.
    Gamma {
        /// Hook length(s): `10`, `2,3,4,5,10,100`, or `2..20` (inclusive).
        #[arg(long)]
        t: String,
    },

    /// The limit of γ*_t as t → ∞, namely 3/(2·ln(5/2)).
    ///
    /// CSV output: the bare decimal value (10 fractional digits).
    Limit,

    /// Exact values vs asymptotic main terms.
    ///
    /// CSV columns: `family,t,n,exact,main_term,ratio` (exact and main_term
    /// in scientific notation, ratio with 10 fractional digits).  The t flag
    /// is ignored by --family size.
    Asymptotics {
        /// Statistic family.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Hook length (≥ 1; ignored for --family size).
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Values of n: `4000`, `1000,2000,4000`, or `100..120` (inclusive).
        #[arg(long)]
        n: String,
    },

    /// Run a verification suite (or all of them).
    ///
    /// CSV columns: `suite,status,checks,detail`; `detail` carries a
    /// counterexample when a check fails.  Exit code 0 if every check
    /// passes, 1 otherwise.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(long, value_enum)]
    suite: verify::Suite,
    /// Override the largest hook length t exercised by the suite.
    #[arg(long)]
    t_max: Option<u64>,
    /// Override the largest partition size n exercised by the suite.
    #[arg(long)]
    n_max: Option<u64>,
}

/// Parses `7`, `2,3,5`, or `2..20` (inclusive) into a sorted list.
fn parse_values(input: &str, what: &str) -> Result<Vec<u64>, String> {
    let parse_one = |s: &str| -> Result<u64, String> {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid {what} value `{s}`"))
    };
    if let Some((a, b)) = input.split_once("..") {
        let lo = parse_one(a)?;
        let hi = parse_one(b)?;
        if lo > hi {
            return Err(format!("empty {what} range `{input}`"));
        }
        return Ok((lo..=hi).collect());
    }
    let mut vals = input
        .split(',')
        .map(parse_one)
        .collect::<Result<Vec<_>, _>>()?;
    if vals.is_empty() {
        return Err(format!("no {what} values given"));
    }
    vals.sort_unstable();
    vals.dedup();
    Ok(vals)
}

/// Fixed-point decimal with exactly 10 fractional digits.
fn dec(x: f64) -> String {
    format!("{x:.10}")
}

/// Scientific notation with a 10-fractional-digit mantissa.
fn sci(x: f64) -> String {
    format!("{x:.10e}")
}

/// The `{"r": "p/q", "s": "p/q"}` JSON form of an exact value, fractions in
/// lowest terms with an explicit denominator.
fn exact_json(v: &LogRational) -> serde_json::Value {
    let frac = |x: &num_rational::BigRational| format!("{}/{}", x.numer(), x.denom());
    serde_json::json!({ "r": frac(&v.rational_part()), "s": frac(&v.log_part()) })
}

#[derive(Serialize)]
struct BetaRow {
    t: u64,
    method: &'static str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<serde_json::Value>,
}

fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Enumerate { class, n, list } => {
            if *n as u64 > ENUM_BUDGET {
                return Err(format!("--n {n} exceeds the enumeration budget {ENUM_BUDGET}"));
            }
            let parts = enumerate(class.to_partition_class(), *n);
            if json {
                let mut obj = serde_json::json!({
                    "class": class.name(),
                    "n": n,
                    "count": parts.len(),
                });
                if *list {
                    let listed: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    obj["partitions"] = serde_json::json!(listed);
                }
                println!("{obj}");
            } else if *list {
                println!("class,n,partition");
                for p in &parts {
                    println!("{},{},{}", class.name(), n, p);
                }
            } else {
                println!("class,n,count");
                println!("{},{},{}", class.name(), n, parts.len());
            }
            Ok(0)
        }

        Command::Hooks { class, t, n, method } => {
            if *t == 0 {
                return Err("--t must be at least 1".into());
            }
            let count = match method {
                HooksMethod::Brute => {
                    if *n > ENUM_BUDGET {
                        return Err(format!(
                            "--n {n} exceeds the enumeration budget {ENUM_BUDGET}; use --method series"
                        ));
                    }
                    let value = match class {
                        Class::Sc => a_star_brute(*t as usize, *n as usize),
                        Class::Do => b_star_brute(*t as usize, *n as usize),
                    };
                    value.to_string()
                }
                HooksMethod::Series => {
                    if *n > ORDER_BUDGET {
                        return Err(format!("--n {n} exceeds the order budget {ORDER_BUDGET}"));
                    }
                    let series = match class {
                        Class::Sc => gen_a(*t as usize, *n as usize),
                        Class::Do => gen_b(*t as usize, *n as usize),
                    };
                    series.coeff(*n as usize).to_string()
                }
            };
            let method_name = match method {
                HooksMethod::Brute => "brute",
                HooksMethod::Series => "series",
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "class": class.name(), "t": t, "n": n,
                        "method": method_name, "count": count,
                    })
                );
            } else {
                println!("class,t,n,method,count");
                println!("{},{},{},{},{}", class.name(), t, n, method_name, count);
            }
            Ok(0)
        }

        Command::Series { gen, t, order } => {
            if *t == 0 {
                return Err("--t must be at least 1".into());
            }
            if *order > ORDER_BUDGET {
                return Err(format!("--order {order} exceeds the order budget {ORDER_BUDGET}"));
            }
            let series = match gen {
                Gen::A => gen_a(*t as usize, *order as usize),
                Gen::B => gen_b(*t as usize, *order as usize),
            };
            if json {
                let coeffs: Vec<String> =
                    (0..=series.order()).map(|i| series.coeff(i).to_string()).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "gen": match gen { Gen::A => "A", Gen::B => "B" },
                        "t": t, "order": order, "coefficients": coeffs,
                    })
                );
            } else {
                println!("exponent,coefficient");
                for i in 0..=series.order() {
                    println!("{},{}", i, series.coeff(i));
                }
            }
            Ok(0)
        }

        Command::Beta { t, method, exact } => {
            let ts = parse_values(t, "t")?;
            if ts.contains(&0) {
                return Err("--t must be at least 1".into());
            }
            if *exact && *method == BetaMethod::Quadrature {
                return Err("--exact requires --method closed".into());
            }
            let mut rows = Vec::new();
            for &t in &ts {
                let row = match method {
                    BetaMethod::Closed => {
                        let v = beta_closed(t);
                        BetaRow {
                            t,
                            method: "closed",
                            value: dec(v.to_f64()),
                            exact: exact.then(|| exact_json(&v)),
                        }
                    }
                    BetaMethod::Quadrature => {
                        let v = beta_quadrature(t, &QuadratureSpec::default())
                            .map_err(|e| e.to_string())?;
                        BetaRow { t, method: "quadrature", value: dec(v), exact: None }
                    }
                };
                rows.push(row);
            }
            if json {
                println!("{}", serde_json::to_string(&rows).expect("serializable"));
            } else {
                if *exact {
                    println!("t,method,value,exact");
                } else {
                    println!("t,method,value");
                }
                for (row, &t) in rows.iter().zip(&ts) {
                    if *exact {
                        // Exact display carries no commas, so the CSV stays 4 columns.
                        println!("{},{},{},{}", t, row.method, row.value, beta_closed(t));
                    } else {
                        println!("{},{},{}", t, row.method, row.value);
                    }
                }
            }
            Ok(0)
        }

        Command::Gamma { t } => {
            let ts = parse_values(t, "t")?;
            if ts.contains(&0) {
                return Err("--t must be at least 1".into());
            }
            if json {
                let rows: Vec<serde_json::Value> = ts
                    .iter()
                    .map(|&t| serde_json::json!({ "t": t, "gamma": dec(gamma(t)) }))
                    .collect();
                println!("{}", serde_json::json!(rows));
            } else {
                println!("t,gamma");
                for &t in &ts {
                    println!("{},{}", t, dec(gamma(t)));
                }
            }
            Ok(0)
        }

        Command::Limit => {
            if json {
                println!("{}", serde_json::json!({ "limit": dec(limit_gamma()) }));
            } else {
                println!("{}", dec(limit_gamma()));
            }
            Ok(0)
        }

        Command::Asymptotics { family, t, n } => {
            if *t == 0 {
                return Err("--t must be at least 1".into());
            }
            let ns = parse_values(n, "n")?;
            if ns.contains(&0) {
                return Err("--n must be at least 1".into());
            }
            let spec = MainTermSpec {
                family: match family {
                    FamilyArg::A => Family::ASc,
                    FamilyArg::B => Family::BDo,
                    FamilyArg::Size => Family::ClassSize,
                },
                t: *t,
                beta_numeric: match family {
                    FamilyArg::B => beta_closed(*t).to_f64(),
                    _ => 0.0,
                },
            };
            let rows = ratio_report(&spec, &ns, ORDER_BUDGET).map_err(|e| e.to_string())?;
            if json {
                let out: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "family": family.name(), "t": t, "n": r.n,
                            "exact": sci(r.exact), "main_term": sci(r.main_term),
                            "ratio": dec(r.ratio),
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!(out));
            } else {
                println!("family,t,n,exact,main_term,ratio");
                for r in &rows {
                    println!(
                        "{},{},{},{},{},{}",
                        family.name(),
                        t,
                        r.n,
                        sci(r.exact),
                        sci(r.main_term),
                        dec(r.ratio)
                    );
                }
            }
            Ok(0)
        }

        Command::Verify(args) => {
            let results = verify::run_suites(args.suite, args.t_max, args.n_max);
            let all_pass = results.iter().all(|r| r.failure.is_none());
            if json {
                let rows: Vec<serde_json::Value> = results
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "suite": r.suite,
                            "status": if r.failure.is_none() { "pass" } else { "fail" },
                            "checks": r.checks,
                            "detail": r.failure,
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!(rows));
            } else {
                println!("suite,status,checks,detail");
                for r in &results {
                    let (status, detail) = match &r.failure {
                        None => ("pass", String::new()),
                        Some(f) => ("fail", f.clone()),
                    };
                    println!("{},{},{},{}", r.suite, status, r.checks, detail);
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn main() {
    std::process::exit(run());
}
