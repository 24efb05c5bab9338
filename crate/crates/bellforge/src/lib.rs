//! Exact-arithmetic complete Bell polynomials and the identity web around
//! them: Stirling numbers of the first kind, generalized harmonic numbers,
//! alternating binomial sums, Bernoulli numbers, and rational even zeta
//! values, each computed by at least two independent routes and checked
//! against one another.
//!
//! The core currency is the complete Bell polynomial Y_r(x_1, ..., x_r),
//! evaluated either by direct summation over integer partitions or by the
//! binomial convolution Y_{r+1} = sum_k C(r,k) Y_{r-k} x_{k+1}. Everything
//! else in the crate is some specialization of the exponential identity
//! exp(sum_j x_j t^j / j!) = sum_n Y_n(x_1, ..., x_n) t^n / n!.
//!
//! Exact computations run over arbitrary-precision rationals; quadrature
//! cross-checks run in f64 at an explicit, reported tolerance. The `verify`
//! module assembles every identity check into reportable suites, and the
//! `bellforge` binary exposes them on the command line.

// Index loops like `for r in 0..=n` over Y_r / s(n, r) mirror the
// mathematical indexing and stay; iterator rewrites would obscure it.
#![allow(clippy::needless_range_loop)]

pub mod altsum;
pub mod bell;
pub mod bernoulli;
pub mod cli;
pub mod coeff;
pub mod constants;
pub mod harmonic;
pub mod numeric;
pub mod quad;
pub mod rational;
pub mod report;
pub mod series;
pub mod stirling;
pub mod verify;
pub mod zeta_even;

pub use coeff::{Coeff, RatPoly};
pub use rational::{binomial, factorial, parse_rational, rat, to_f64};
pub use report::{IdentityReport, SuiteReport};
pub use series::{Series, SeriesError};
