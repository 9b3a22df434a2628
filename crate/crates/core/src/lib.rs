//! Exact hook-length statistics for two classical partition families.
//!
//! A cell of a partition's Ferrers–Young diagram has a *hook number*: its arm
//! length plus its leg length plus one. Writing `n_t(λ)` for the number of
//! cells of `λ` whose hook number equals `t`, this crate computes the
//! aggregate counts
//!
//! ```text
//! a*_t(n) = Σ_{λ ∈ SC(n)} n_t(λ)        b*_t(n) = Σ_{λ ∈ DO(n)} n_t(λ)
//! ```
//!
//! where `SC(n)` is the set of self-conjugate partitions of `n` and `DO(n)`
//! the set of partitions of `n` into distinct odd parts. The two classes are
//! in bijection (principal hooks), yet their total t-hook counts are biased:
//! `a*_t(n)/b*_t(n)` tends to a constant `γ*_t = 1/(2β*_t) > 1`.
//!
//! The crate provides three independent computational routes and the exact
//! constants, so that every quantity can be cross-checked:
//!
//! - [`partitions`] — enumeration of the partition classes and brute-force
//!   hook tallies (the oracle everything else is tested against);
//! - [`qseries`] — truncated formal power series over arbitrary-precision
//!   integers, the generating functions `A*_t(q)`, `B*_t(q)` whose
//!   coefficients are `a*_t(n)`, `b*_t(n)`, and exact Laurent expansion of
//!   their rational parts at `q = e^{−z}`;
//! - [`constants`] — the bias constants `β*_t` evaluated exactly in
//!   `Q + Q·log 2` by two closed-form routes and numerically by adaptive
//!   quadrature, the mod-6 recurrence between them, and the `t → ∞` limit
//!   `γ*_t → 3/(2 ln(5/2))`;
//! - [`asymptotics`] — the circle-method main terms for `a*_t`, `b*_t` and
//!   the class sizes, plus the modular-transformation bound for the product
//!   `ξ(q) = (−q; q²)_∞` evaluated in double-double precision;
//! - [`dd`] — the small double-double arithmetic kernel (about 31 significant
//!   digits) used by the `ξ`/`Ψ` comparison.
//!
//! Everything exact is exact: series coefficients are `BigInt`, Laurent
//! coefficients and `β*_t` components are `BigRational`. Floating point only
//! appears where a quantity is genuinely transcendental, and every float
//! comparison in the test suite carries an explicit tolerance.
//!
//! # Example
//!
//! ```
//! use hookbias::partitions::{a_star_brute, b_star_brute};
//! use hookbias::qseries::{gen_a, gen_b};
//! use hookbias::constants::{beta_closed, gamma};
//!
//! // Brute-force and generating-function routes agree.
//! assert_eq!(a_star_brute(2, 4), 2);
//! assert_eq!(gen_a(2, 10).coeff_u64(4), 2);
//! assert_eq!(b_star_brute(2, 4), 1);
//! assert_eq!(gen_b(2, 10).coeff_u64(4), 1);
//!
//! // β*_2 = (ln 2)/2 exactly, so γ*_2 = 1/ln 2.
//! let beta = beta_closed(2);
//! assert!(beta.rational_part() == num_rational::BigRational::from_integer(0.into()));
//! assert!((gamma(2) - 1.4426950409).abs() < 1e-9);
//! ```

pub mod asymptotics;
pub mod constants;
pub mod dd;
pub mod partitions;
pub mod qseries;

pub use constants::LogRational;
pub use partitions::{Partition, PartitionClass};
pub use qseries::{IntSeries, RatLaurent};
