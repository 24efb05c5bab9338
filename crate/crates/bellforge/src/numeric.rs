//! Floating-point verification of the integral and Gamma-function claims:
//! log-power beta integrals against exact Bell values, the bridge from those
//! integrals to alternating binomial sums, Euler-sum identities (including
//! the double-sum forms with a documented inner-limit transcription issue),
//! Gamma derivatives at 1, the Gamma and Barnes-G series expansions, the
//! telescoping digamma series, and the Hurwitz-zeta log integral.
//!
//! The reference Gamma route is Stirling's series with argument recurrence
//! (shift into z ≥ 20, eight Bernoulli terms from the exact table): it is
//! independent of every zeta/γ constant used by the series under test.

use crate::altsum::snr_brute;
use crate::bell;
use crate::bernoulli::bernoulli;
use crate::constants::{gamma_log_moment, ZetaConstants};
use crate::harmonic::{harmonic, harmonic_shifted, pochhammer, PoleError};
use crate::quad::{integrate_decaying, QuadError, QuadratureResult};
use crate::rational::{factorial, int, rat, sign, to_f64};
use crate::report::{fmt_f64, p, IdentityReport};
use crate::series::Series;
use num_rational::BigRational;

/// Exact value of ∫_0^1 t^{x-1}(1-t)^{n-1} log^r t dt:
/// B(x,n)·Y_r(-0!H_n^{(1)}(x), 1!H_n^{(2)}(x), ..., (-1)^r (r-1)!H_n^{(r)}(x))
/// with B(x,n) = (n-1)!/(x)_n.
pub fn log_beta_exact(n: u64, r: u32, x: &BigRational) -> Result<BigRational, PoleError> {
    let xs: Vec<BigRational> = (1..=r)
        .map(|j| {
            let h = harmonic_shifted(n, j, x)?;
            Ok(sign(j as u64) * BigRational::from_integer(factorial(j as u64 - 1)) * h)
        })
        .collect::<Result<_, PoleError>>()?;
    let beta = BigRational::from_integer(factorial(n - 1)) / pochhammer(x, n);
    Ok(beta * bell::value(r as usize, &xs))
}

/// The same integral by quadrature after the substitution t = e^{-u}:
/// (-1)^r ∫_0^∞ u^r e^{-xu} (1-e^{-u})^{n-1} du, smooth and decaying.
pub fn log_beta_integral(n: u64, r: u32, x: &BigRational) -> Result<QuadratureResult, QuadError> {
    let xf = to_f64(x);
    assert!(xf > 0.0, "the integral needs x > 0");
    let ri = r as i32;
    let power = n as i32 - 1;
    let inner = integrate_decaying(
        &move |u: f64| u.powi(ri) * (-xf * u).exp() * (1.0 - (-u).exp()).powi(power),
        0.0,
        1e-12,
    )?;
    Ok(QuadratureResult {
        value: if r.is_multiple_of(2) { inner.value } else { -inner.value },
        ..inner
    })
}

/// Quadrature vs exact Bell value for the log-power beta integral.
pub fn log_beta_report(n: u64, r: u32, x: &BigRational) -> IdentityReport {
    let params = [("n", p(n)), ("r", p(r)), ("x", p(x))];
    let exact = match log_beta_exact(n, r, x) {
        Ok(v) => v,
        Err(e) => {
            return IdentityReport::exact_rendered(
                "log-beta-integral",
                &params,
                format!("pole: {e}"),
                "finite value".to_string(),
                false,
            )
        }
    };
    match log_beta_integral(n, r, x) {
        Ok(q) => IdentityReport::float(
            "log-beta-integral",
            &params,
            q.value,
            to_f64(&exact),
            f64::max(1e-10, 3.0 * q.estimated_error),
        ),
        Err(e) => IdentityReport::exact_rendered(
            "log-beta-integral",
            &params,
            format!("quadrature failed: {e}"),
            p(&exact),
            false,
        ),
    }
}

/// (-1)^{r+1} n ∫_0^1 (1-t)^{n-1} log^r t dt = r! sum_k C(n,k)(-1)^k/k^r.
pub fn integral_sum_bridge_report(n: u64, r: u32) -> IdentityReport {
    let params = [("n", p(n)), ("r", p(r))];
    let rhs = BigRational::from_integer(factorial(r as u64)) * snr_brute(n, r);
    match log_beta_integral(n, r, &int(1)) {
        Ok(q) => {
            let lhs = if r.is_multiple_of(2) { -1.0 } else { 1.0 } * n as f64 * q.value;
            IdentityReport::float(
                "integral-alternating-sum-bridge",
                &params,
                lhs,
                to_f64(&rhs),
                f64::max(1e-9, 3.0 * n as f64 * q.estimated_error),
            )
        }
        Err(e) => IdentityReport::exact_rendered(
            "integral-alternating-sum-bridge",
            &params,
            format!("quadrature failed: {e}"),
            p(&rhs),
            false,
        ),
    }
}

fn aggregate(identity: &str, params: &[(&str, String)], bad: Option<String>) -> IdentityReport {
    match bad {
        None => IdentityReport::exact_rendered(
            identity,
            params,
            "equal for all n".to_string(),
            "expected".to_string(),
            true,
        ),
        Some(msg) => {
            IdentityReport::exact_rendered(identity, params, msg, "equality".to_string(), false)
        }
    }
}

/// The four Euler-sum identities behind the beta-integral closed forms, all
/// exact, aggregated over n ≤ n_max, plus a report documenting that the
/// literally-printed inner limit of the cubic double sum fails from n = 3
/// and is off by exactly the k-1 boundary terms.
pub fn euler_sum_reports(n_max: u64) -> Vec<IdentityReport> {
    let params = [("max-n", p(n_max))];
    let mut quadratic_bad = None;
    let mut companion_bad = None;
    let mut half_bad = None;
    let mut cubic_bad = None;
    let mut printed_bad = None;

    // Prefix sums reused across n.
    let mut sum_h_over_k = int(0); // Σ H_k/k
    let mut sum_h2_over_k = int(0); // Σ H_k^{(2)}/k
    let mut sum_h_over_k2 = int(0); // Σ H_k/k²
    let mut sum_h_shift = int(0); // Σ_{k=1}^{n-1} H_k/(k+1)
    let mut sum_h_shift2 = int(0); // Σ_{k=1}^{n-1} H_k/(k+1)²
    let mut sum_h2_shift = int(0); // Σ_{k=1}^{n-1} H_k^{(2)}/(k+1)
    let mut double_printed = int(0); // Σ 1/(k+1) Σ_{j≤k-2} H_j/(j+1)
    let mut double_variant = int(0); // Σ 1/(k+1) Σ_{j≤k-1} H_j/(j+1)
    let mut inner_printed = int(0); // Σ_{j≤k-2} H_j/(j+1) at the current k
    let mut inner_variant = int(0); // Σ_{j≤k-1} H_j/(j+1) at the current k

    for n in 1..=n_max {
        let h1 = harmonic(n, 1);
        let h2 = harmonic(n, 2);
        let h3 = harmonic(n, 3);
        sum_h_over_k += &h1 / int(n as i64);
        sum_h2_over_k += &h2 / int(n as i64);
        sum_h_over_k2 += &h1 / int((n * n) as i64);

        // Adamchik: Σ H_k/k = (H² + H^{(2)})/2.
        if quadratic_bad.is_none() && sum_h_over_k != (&h1 * &h1 + &h2) / int(2) {
            quadratic_bad = Some(format!("n={n}: {sum_h_over_k}"));
        }
        // Companion: Σ H_k^{(2)}/k + Σ H_k/k² = H^{(3)} + H·H^{(2)}.
        if companion_bad.is_none() && &sum_h2_over_k + &sum_h_over_k2 != &h3 + &h1 * &h2 {
            companion_bad = Some(format!("n={n}"));
        }
        // Shifted quadratic: 2[H_n^{(2)} + Σ_{k≤n-1} H_k/(k+1)] = H^{(2)} + H².
        if half_bad.is_none() && int(2) * (&h2 + &sum_h_shift) != &h2 + &h1 * &h1 {
            half_bad = Some(format!("n={n}"));
        }
        // Cubic double-sum form against the closed form of -S_n(3).
        let closed = &h1 * &h1 * &h1 / int(6) + &h1 * &h2 / int(2) + &h3 / int(3);
        let variant = &h3 + &sum_h_shift2 + &sum_h2_shift + &double_variant;
        let printed = &h3 + &sum_h_shift2 + &sum_h2_shift + &double_printed;
        if cubic_bad.is_none() && variant != closed {
            cubic_bad = Some(format!("n={n}: {variant}"));
        }
        if printed_bad.is_none() {
            let agrees = printed == closed;
            let gap_is_boundary = &closed - &printed == &double_variant - &double_printed;
            if (n <= 2 && !agrees) || (n >= 3 && (agrees || !gap_is_boundary)) {
                printed_bad = Some(format!("n={n}: printed form deviates unexpectedly"));
            }
        }

        // Advance the n-1-indexed prefix sums for the next round.
        sum_h_shift += &h1 / int(n as i64 + 1);
        sum_h_shift2 += &h1 / int(((n + 1) * (n + 1)) as i64);
        sum_h2_shift += &h2 / int(n as i64 + 1);
        // At k = n the inner sums gain the j = n-2 (printed) / n-1 (variant)
        // terms before entering the double sums.
        if n >= 2 {
            inner_variant += harmonic(n - 1, 1) / int(n as i64);
        }
        if n >= 3 {
            inner_printed += harmonic(n - 2, 1) / int(n as i64 - 1);
        }
        double_printed += &inner_printed / int(n as i64 + 1);
        double_variant += &inner_variant / int(n as i64 + 1);
    }

    vec![
        aggregate("euler-sum-quadratic", &params, quadratic_bad),
        aggregate("euler-sum-companion", &params, companion_bad),
        aggregate("euler-sum-shifted-quadratic", &params, half_bad),
        aggregate(
            "euler-sum-cubic-double",
            &[
                ("max-n", p(n_max)),
                (
                    "inner-limit",
                    "k-1 (printed k-2 fails from n = 3)".to_string(),
                ),
            ],
            cubic_bad,
        ),
        aggregate(
            "euler-sum-cubic-printed-gap",
            &[
                ("max-n", p(n_max)),
                (
                    "note",
                    "printed inner limit k-2 is short exactly the j = k-1 boundary terms".to_string(),
                ),
            ],
            printed_bad,
        ),
    ]
}

/// ln Γ(z) for z > 0 by Stirling's series after shifting the argument to
/// w ≥ 20; the eight correction terms use the exact Bernoulli numbers. This
/// route never touches the zeta constants.
pub fn reference_ln_gamma(z: f64) -> f64 {
    assert!(z > 0.0);
    let mut shift = 0.0;
    let mut w = z;
    while w < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let b = bernoulli(16);
    let mut series = 0.0;
    for j in 1..=8u32 {
        let b2j = to_f64(&b[2 * j as usize]);
        series += b2j / ((2 * j) as f64 * (2 * j - 1) as f64 * w.powi(2 * j as i32 - 1));
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - shift
}

pub fn reference_gamma(z: f64) -> f64 {
    reference_ln_gamma(z).exp()
}

/// Γ^{(m)}(1) for m = 0..=m_max as the Bell sequence of the arguments
/// x_j = (-1)^j (j-1)! ζ(j), with the ζ(1) := γ convention.
pub fn gamma_derivs_at_one(m_max: u32, constants: &ZetaConstants) -> Vec<f64> {
    let xs: Vec<f64> = (1..=m_max)
        .map(|j| {
            let s = if j % 2 == 0 { 1.0 } else { -1.0 };
            s * to_f64(&BigRational::from_integer(factorial(j as u64 - 1)))
                * constants.zeta_or_gamma(j)
        })
        .collect();
    bell::sequence(m_max as usize, &xs)
}

/// Bell form of Γ^{(m)}(1) against the log-moment quadrature.
pub fn gamma_deriv_report(m: u32, constants: &ZetaConstants) -> IdentityReport {
    let params = [("m", p(m))];
    let lhs = gamma_derivs_at_one(m, constants)[m as usize];
    match gamma_log_moment(m, 1e-11) {
        Ok(q) => IdentityReport::float(
            "gamma-derivative-bell-vs-quadrature",
            &params,
            lhs,
            q.value,
            f64::max(1e-8, 3.0 * q.estimated_error),
        ),
        Err(e) => IdentityReport::exact_rendered(
            "gamma-derivative-bell-vs-quadrature",
            &params,
            format!("quadrature failed: {e}"),
            fmt_f64(lhs),
            false,
        ),
    }
}

/// sign(Γ^{(m)}(1)) = (-1)^m for 1 ≤ m ≤ m_max.
pub fn gamma_deriv_sign_report(m_max: u32, constants: &ZetaConstants) -> IdentityReport {
    let derivs = gamma_derivs_at_one(m_max, constants);
    let ok = derivs
        .iter()
        .enumerate()
        .skip(1)
        .all(|(m, v)| if m % 2 == 0 { *v > 0.0 } else { *v < 0.0 });
    IdentityReport::exact_rendered(
        "gamma-derivative-sign-pattern",
        &[("max-m", p(m_max))],
        "sign(Γ^{(m)}(1)) = (-1)^m".to_string(),
        "expected".to_string(),
        ok,
    )
}

/// Truncation-aware tolerance for evaluating an order-N tail-geometric
/// series at x: the coefficients are bounded near 1, so the dropped tail is
/// at most |x|^{N+1}/(1-|x|), widened by 3 for headroom.
fn series_eval_tolerance(n: usize, x: f64) -> f64 {
    f64::max(1e-8, 3.0 * x.abs().powi(n as i32 + 1) / (1.0 - x.abs()))
}

/// The Γ(1+x) series from the weights b_1 = -γ, b_m = (-1)^m ζ(m), and its
/// reciprocal with negated weights, both evaluated at small x against the
/// Stirling-route reference.
pub fn gamma_series_reports(constants: &ZetaConstants) -> Vec<IdentityReport> {
    const N: usize = 12;
    let weights = Series::<f64>::from_fn(N, |m| match m {
        0 => 0.0,
        1 => -constants.gamma(),
        _ => {
            let s = if m % 2 == 0 { 1.0 } else { -1.0 };
            s * constants.zeta(m as u32)
        }
    });
    let direct = weights.exp(N).expect("order matches");
    let reciprocal = weights.neg().exp(N).expect("order matches");
    let mut reports = Vec::new();
    for x in [0.1, 0.25, -0.25] {
        let tol = series_eval_tolerance(N, x);
        let reference = reference_gamma(1.0 + x);
        reports.push(IdentityReport::float(
            "gamma-series-vs-stirling",
            &[("x", p(x)), ("order", p(N))],
            direct.eval(&x),
            reference,
            tol,
        ));
        reports.push(IdentityReport::float(
            "gamma-reciprocal-series-vs-stirling",
            &[("x", p(x)), ("order", p(N))],
            reciprocal.eval(&x),
            1.0 / reference,
            tol,
        ));
    }
    reports
}

/// Barnes-G expansion weights b_m = (-1)^{m+1} c_m with c_1 = (log 2π - 1)/2,
/// c_2 = 1 + γ, c_m = ζ(m-1) for m ≥ 3.
fn barnes_weights(order: usize, constants: &ZetaConstants) -> Series<f64> {
    Series::from_fn(order, |m| {
        let c = match m {
            0 => return 0.0,
            1 => 0.5 * ((2.0 * std::f64::consts::PI).ln() - 1.0),
            2 => 1.0 + constants.gamma(),
            _ => constants.zeta(m as u32 - 1),
        };
        if m % 2 == 0 {
            -c
        } else {
            c
        }
    })
}

/// Barnes double-gamma checks: G'(1) equals the first expansion weight
/// (log 2π - 1)/2; the derivatives of 1/G(1+x) at 0 alternate in sign for
/// m ≤ m_max; and the truncated expansion satisfies the functional equation
/// G(3/2) = Γ(1/2)·G(1/2) against the Stirling-route Γ.
pub fn barnes_reports(m_max: u32, constants: &ZetaConstants) -> Vec<IdentityReport> {
    const N: usize = 40;
    assert!(
        constants.max_m() as usize >= N - 1,
        "Barnes checks need zeta up to {}",
        N - 1
    );
    let weights = barnes_weights(N, constants);

    // G'(1): coefficient of x in exp(weights), compared against the closed
    // constant; the series route exercises the weight plumbing end to end.
    let g_series = weights.exp(N).expect("order matches");
    let g_prime = *g_series.coeff(1);
    let expected = 0.5 * ((2.0 * std::f64::consts::PI).ln() - 1.0);
    let prime_report = IdentityReport::float(
        "barnes-g-prime-at-one",
        &[],
        g_prime,
        expected,
        1e-12,
    );

    // Sign pattern of d^m/dx^m 1/G(1+x) at 0: the coefficients of the
    // reciprocal series, scaled by m!, must alternate like (-1)^m.
    let reciprocal = weights.neg().exp(N).expect("order matches");
    let signs_ok = (1..=m_max as usize).all(|m| {
        let v = *reciprocal.coeff(m);
        if m % 2 == 0 {
            v > 0.0
        } else {
            v < 0.0
        }
    });
    let sign_report = IdentityReport::exact_rendered(
        "barnes-reciprocal-sign-pattern",
        &[("max-m", p(m_max))],
        "sign of (1/G)^{(m)}(1) is (-1)^m".to_string(),
        "expected".to_string(),
        signs_ok,
    );

    // Functional equation at x = 1/2: G(1+z) = Γ(z)G(z).
    let g_three_halves = g_series.eval(&0.5);
    let g_half = g_series.eval(&-0.5);
    let functional_report = IdentityReport::float(
        "barnes-functional-equation",
        &[("z", "1/2".to_string()), ("order", p(N))],
        g_three_halves,
        reference_gamma(0.5) * g_half,
        1e-10,
    );

    vec![prime_report, sign_report, functional_report]
}

/// Telescoping series sum_{n≥1} (1)_n/(n·(a)_n) for integer a ≥ 2: the
/// partial sum through T plus the exact tail T!/((a-1)(a)_T) equals 1/(a-1).
pub fn norlund_telescope_report(a: u64, t: u64) -> IdentityReport {
    assert!(a >= 2);
    let af = int(a as i64);
    let mut partial = int(0);
    for n in 1..=t {
        partial += BigRational::from_integer(factorial(n - 1)) / pochhammer(&af, n);
    }
    let tail =
        BigRational::from_integer(factorial(t)) / (int(a as i64 - 1) * pochhammer(&af, t));
    let limit = rat(1, a as i64 - 1);
    IdentityReport::exact(
        "telescoping-digamma-series",
        &[("a", p(a)), ("terms", p(t)), ("partial", p(&partial))],
        &(partial + tail),
        &limit,
    )
}

/// u/(1 - e^{-u}) with a series patch near 0 (the expansion in Bernoulli
/// numbers of the second kind, accurate far below f64 resolution at the
/// switch point).
fn one_over_one_minus_exp(u: f64) -> f64 {
    if u < 1e-4 {
        1.0 + u / 2.0 + u * u / 12.0 - u.powi(4) / 720.0 + u.powi(6) / 30240.0
    } else {
        u / (1.0 - (-u).exp())
    }
}

/// (-1)^r r! ζ(r+1, a) = ∫_0^1 t^{a-1} log^r t/(1-t) dt, with the right side
/// integrated as (-1)^r ∫_0^∞ u^{r-1}·[u/(1-e^{-u})]·e^{-au} du and the left
/// side from the Hurwitz series with an Euler–Maclaurin tail.
pub fn hurwitz_integral_report(r: u32, a: &BigRational) -> IdentityReport {
    assert!(r >= 1);
    let af = to_f64(a);
    assert!(af > 0.0);
    let params = [("r", p(r)), ("a", p(a))];

    // Reference: ζ(r+1, a) by direct summation, smallest terms first.
    const K: u64 = 100_000;
    let s = r as i32 + 1;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in (0..K).rev() {
        let term = (k as f64 + af).powi(-s);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let edge = K as f64 + af;
    let hurwitz = sum + edge.powi(1 - s) / (s as f64 - 1.0) + edge.powi(-s) / 2.0
        + s as f64 * edge.powi(-s - 1) / 12.0;

    let r_fact = to_f64(&BigRational::from_integer(factorial(r as u64)));
    let parity = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
    let ri = r as i32;
    match integrate_decaying(
        &move |u: f64| u.powi(ri - 1) * one_over_one_minus_exp(u) * (-af * u).exp(),
        0.0,
        1e-12,
    ) {
        Ok(q) => IdentityReport::float(
            "hurwitz-log-integral",
            &params,
            parity * q.value,
            parity * r_fact * hurwitz,
            f64::max(1e-8, 3.0 * q.estimated_error),
        ),
        Err(e) => IdentityReport::exact_rendered(
            "hurwitz-log-integral",
            &params,
            format!("quadrature failed: {e}"),
            fmt_f64(parity * r_fact * hurwitz),
            false,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_beta_exact_pinned_values() {
        // n=2, r=1, x=1: 2∫(1-t)log t dt = -H_2, so the integral is -3/4.
        assert_eq!(log_beta_exact(2, 1, &int(1)).unwrap(), rat(-3, 4));
        // n=2, r=2, x=1: n∫ = H_2^{(2)} + H_2² = 7/2, integral 7/4.
        assert_eq!(log_beta_exact(2, 2, &int(1)).unwrap(), rat(7, 4));
        // n=1, r=0, x=1/2: B(1/2, 1) = 2.
        assert_eq!(log_beta_exact(1, 0, &rat(1, 2)).unwrap(), int(2));
        // n=1, r=3, x=1: ∫ log³t dt = -6.
        assert_eq!(log_beta_exact(1, 3, &int(1)).unwrap(), int(-6));
    }

    #[test]
    fn log_beta_quadrature_matches_exact() {
        for x in [int(1), rat(1, 2), rat(3, 2)] {
            for n in 1..=4u64 {
                for r in 0..=3u32 {
                    let report = log_beta_report(n, r, &x);
                    assert!(report.passed, "{}", report.line());
                }
            }
        }
    }

    #[test]
    fn bridge_matches_alternating_sums() {
        for n in 1..=5u64 {
            for r in 1..=3u32 {
                let report = integral_sum_bridge_report(n, r);
                assert!(report.passed, "{}", report.line());
            }
        }
    }

    #[test]
    fn euler_sums_hold() {
        for report in euler_sum_reports(40) {
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn cubic_printed_form_really_fails_from_three() {
        // Recompute the printed cubic double sum directly for n = 3 and make
        // sure it does NOT equal the closed form (guards the gap report
        // against vacuity).
        let n = 3u64;
        let h1 = harmonic(n, 1);
        let h2 = harmonic(n, 2);
        let h3 = harmonic(n, 3);
        let closed = &h1 * &h1 * &h1 / int(6) + &h1 * &h2 / int(2) + &h3 / int(3);
        let mut printed = h3.clone();
        for k in 1..n {
            printed += harmonic(k, 1) / int(((k + 1) * (k + 1)) as i64);
            printed += harmonic(k, 2) / int(k as i64 + 1);
            let mut inner = int(0);
            for j in 1..=k.saturating_sub(2) {
                inner += harmonic(j, 1) / int(j as i64 + 1);
            }
            printed += inner / int(k as i64 + 1);
        }
        assert_ne!(printed, closed);
        // The gap is exactly the missing j = k-1 boundary term at k = 2.
        assert_eq!(&closed - &printed, rat(1, 6));
    }

    #[test]
    fn stirling_reference_gamma() {
        assert!((reference_gamma(1.0) - 1.0).abs() < 1e-13);
        assert!((reference_gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((reference_gamma(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-13);
        assert!((reference_gamma(1.25) - 0.906_402_477_055_477).abs() < 1e-12);
    }

    #[test]
    fn gamma_derivatives_and_signs() {
        let c = ZetaConstants::standard(8);
        let derivs = gamma_derivs_at_one(2, &c);
        assert!((derivs[1] + c.gamma()).abs() < 1e-12);
        assert!((derivs[2] - 1.978_111_990_655_945).abs() < 1e-9);
        assert!(gamma_deriv_sign_report(8, &c).passed);
        for m in 1..=4 {
            let report = gamma_deriv_report(m, &c);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn gamma_series_match_reference() {
        let c = ZetaConstants::standard(12);
        for report in gamma_series_reports(&c) {
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn barnes_checks_pass() {
        let c = ZetaConstants::standard(40);
        let reports = barnes_reports(8, &c);
        assert_eq!(reports.len(), 3);
        for report in &reports {
            assert!(report.passed, "{}", report.line());
        }
        // The G'(1) constant itself.
        assert!((0.5 * ((2.0 * std::f64::consts::PI).ln() - 1.0) - 0.418_938_533_204_672_7).abs() < 1e-15);
    }

    #[test]
    fn telescoping_series_exact() {
        let report = norlund_telescope_report(2, 10);
        assert!(report.passed, "{}", report.line());
        assert!(report.params["partial"] == "10/11");
        for a in 2..=8 {
            assert!(norlund_telescope_report(a, 50).passed);
        }
    }

    #[test]
    fn hurwitz_integral_matches_series() {
        for a in [int(1), int(2), rat(1, 2)] {
            for r in 1..=3u32 {
                let report = hurwitz_integral_report(r, &a);
                assert!(report.passed, "{}", report.line());
            }
        }
    }

    #[test]
    fn hurwitz_spot_values() {
        // r=1, a=1: integral is -ζ(2).
        let c = ZetaConstants::standard(4);
        let report = hurwitz_integral_report(1, &int(1));
        let lhs: f64 = report.lhs.parse().unwrap();
        assert!((lhs + c.zeta(2)).abs() < 1e-9);
        // r=2, a=1: 2ζ(3).
        let report = hurwitz_integral_report(2, &int(1));
        let lhs: f64 = report.lhs.parse().unwrap();
        assert!((lhs - 2.0 * c.zeta(3)).abs() < 1e-9);
        // r=1, a=2: -(ζ(2) - 1).
        let report = hurwitz_integral_report(1, &int(2));
        let lhs: f64 = report.lhs.parse().unwrap();
        assert!((lhs + (c.zeta(2) - 1.0)).abs() < 1e-9);
    }
}
