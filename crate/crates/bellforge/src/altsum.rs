//! Alternating binomial sums sum_k C(n,k)(-1)^k/(k+x)^{r+1} and their
//! complete-Bell-polynomial closed forms: the Coppo representation for the
//! shifted sums, the harmonic-number form for S_n(r), the exponential
//! generating identities, the polylogarithm resummation, and the zeta-value
//! series it yields at t = 1/2.

use crate::bell;
use crate::harmonic::{harmonic, harmonic_shifted, pochhammer, PoleError};
use crate::rational::{binomial, factorial, int, pow_i32, rat, sign, to_f64};
use crate::report::{p, IdentityReport};
use crate::series::Series;
use num_rational::BigRational;
use num_traits::Zero;

/// sum_{k=0}^{n} C(n,k)(-1)^k/(k+x)^{r+1} by direct summation.
pub fn brute(n: u64, r: u32, x: &BigRational) -> Result<BigRational, PoleError> {
    let mut acc = int(0);
    for k in 0..=n {
        let base = int(k as i64) + x;
        if base.is_zero() {
            return Err(PoleError { k, x: x.clone() });
        }
        acc += BigRational::from_integer(binomial(n, k as i64))
            * sign(k)
            * pow_i32(&base, -(r as i32 + 1));
    }
    Ok(acc)
}

/// Bell arguments (j-1)!·H_{n}^{(j)}(x) for j = 1..=r, optionally with the
/// alternating sign (-1)^j attached.
fn harmonic_args(
    n: u64,
    r: u32,
    x: &BigRational,
    alternating: bool,
) -> Result<Vec<BigRational>, PoleError> {
    (1..=r)
        .map(|j| {
            let h = harmonic_shifted(n, j, x)?;
            let f = BigRational::from_integer(factorial(j as u64 - 1));
            Ok(if alternating { sign(j as u64) * f * h } else { f * h })
        })
        .collect()
}

/// Coppo's closed form:
/// n!/(x)_{n+1} · (1/r!) · Y_r(0!H_{n+1}^{(1)}(x), ..., (r-1)!H_{n+1}^{(r)}(x)).
pub fn coppo_bell(n: u64, r: u32, x: &BigRational) -> Result<BigRational, PoleError> {
    let xs = harmonic_args(n + 1, r, x, false)?;
    let y = bell::value(r as usize, &xs);
    Ok(BigRational::new(factorial(n), 1.into()) / pochhammer(x, n + 1)
        * y
        / BigRational::from_integer(factorial(r as u64)))
}

/// The sign-reflected equivalent:
/// n!/(x)_{n+1} · ((-1)^r/r!) · Y_r(-0!H^{(1)}, 1!H^{(2)}, ..., (-1)^r(r-1)!H^{(r)}),
/// equal to [`coppo_bell`] by the parity reflection law of Y_r.
pub fn coppo_bell_reflected(n: u64, r: u32, x: &BigRational) -> Result<BigRational, PoleError> {
    let xs = harmonic_args(n + 1, r, x, true)?;
    let y = bell::value(r as usize, &xs);
    Ok(BigRational::new(factorial(n), 1.into()) / pochhammer(x, n + 1)
        * sign(r as u64)
        * y
        / BigRational::from_integer(factorial(r as u64)))
}

/// S_n(r) = sum_{k=1}^{n} C(n,k)(-1)^k/k^r by direct summation, with the
/// empty-power convention S_n(0) = -1 (the full alternating binomial sum
/// minus the k = 0 term).
pub fn snr_brute(n: u64, r: u32) -> BigRational {
    if r == 0 {
        return int(-1);
    }
    let mut acc = int(0);
    for k in 1..=n {
        acc += BigRational::from_integer(binomial(n, k as i64))
            * sign(k)
            * pow_i32(&int(k as i64), -(r as i32));
    }
    acc
}

/// S_n(r) = -(1/r!)·Y_r(0!H_n^{(1)}, 1!H_n^{(2)}, ..., (r-1)!H_n^{(r)}).
pub fn snr_bell(n: u64, r: u32) -> BigRational {
    if r == 0 {
        return int(-1);
    }
    let xs: Vec<BigRational> = (1..=r)
        .map(|j| BigRational::from_integer(factorial(j as u64 - 1)) * harmonic(n, j))
        .collect();
    -bell::value(r as usize, &xs) / BigRational::from_integer(factorial(r as u64))
}

/// The weights H_n^{(m)} as a series input for the exponential identity.
fn harmonic_weight_series(n: u64, order: usize, alternating: bool) -> Series<BigRational> {
    Series::from_fn(order, |m| {
        if m == 0 {
            int(0)
        } else {
            let h = harmonic(n, m as u32);
            if alternating {
                sign(m as u64 + 1) * h
            } else {
                h
            }
        }
    })
}

/// Exponential identity: sum_r (-S_n(r)) x^r = exp(sum_m H_n^{(m)} x^m / m),
/// checked coefficientwise against both the brute sums and the Bell forms.
pub fn exp_identity_report(n: u64, order: usize) -> IdentityReport {
    let rhs = harmonic_weight_series(n, order, false)
        .exp(order)
        .expect("order matches");
    let brute: Vec<BigRational> = (0..=order).map(|r| -snr_brute(n, r as u32)).collect();
    let bell_form: Vec<BigRational> = (0..=order).map(|r| -snr_bell(n, r as u32)).collect();
    let passed = rhs.coeffs() == &brute[..] && rhs.coeffs() == &bell_form[..];
    IdentityReport::exact_rendered(
        "alternating-sum-exp-gf",
        &[("n", p(n)), ("order", p(order))],
        bell::render_values(&brute),
        bell::render_values(rhs.coeffs()),
        passed,
    )
}

/// Wilf's product form: prod_{k=1}^{n-1}(1 + x/k), the Taylor coefficients
/// of Gamma(n+x)/(Gamma(1+x)Gamma(n)), equals
/// exp(sum_m (-1)^{m+1} H_{n-1}^{(m)} x^m / m).
pub fn wilf_product_report(n: u64, order: usize) -> IdentityReport {
    let mut product = Series::one(order);
    for k in 1..n {
        let factor = Series::from_fn(order, |m| match m {
            0 => int(1),
            1 => rat(1, k as i64),
            _ => int(0),
        });
        product = product.mul(&factor, order).expect("orders match");
    }
    let rhs = harmonic_weight_series(n - 1, order, true)
        .exp(order)
        .expect("order matches");
    IdentityReport::exact_rendered(
        "gamma-ratio-product-exp",
        &[("n", p(n)), ("order", p(order))],
        bell::render_values(product.coeffs()),
        bell::render_values(rhs.coeffs()),
        product == rhs,
    )
}

/// Reflection form: Gamma(1-x)Gamma(n+1)/Gamma(n+1-x), which is the series
/// inverse of prod_{j=1}^{n}(1 - x/j), equals sum_r x^r (-S_n(r)).
pub fn reflection_product_report(n: u64, order: usize) -> IdentityReport {
    let mut product = Series::one(order);
    for j in 1..=n {
        let factor = Series::from_fn(order, |m| match m {
            0 => int(1),
            1 => rat(-1, j as i64),
            _ => int(0),
        });
        product = product.mul(&factor, order).expect("orders match");
    }
    let lhs = product.pow(&int(-1), order).expect("constant term is 1");
    let rhs = Series::from_fn(order, |r| -snr_brute(n, r as u32));
    IdentityReport::exact_rendered(
        "reciprocal-pochhammer-gf",
        &[("n", p(n)), ("order", p(order))],
        bell::render_values(lhs.coeffs()),
        bell::render_values(rhs.coeffs()),
        lhs == rhs,
    )
}

/// Resummation over n: sum_{n>=1} t^n (-S_n(r)) = Li_r(-t/(1-t))/(t-1),
/// compared coefficientwise against the brute sums and the Bell forms.
pub fn polylog_identity_report(r: u32, order: usize) -> IdentityReport {
    // Li_r truncated, composed with -t/(1-t), times 1/(t-1) = -(1+t+t^2+...).
    let li = Series::from_fn(order, |k| {
        if k == 0 {
            int(0)
        } else {
            pow_i32(&int(k as i64), -(r as i32))
        }
    });
    let inner = Series::from_fn(order, |k| if k == 0 { int(0) } else { int(-1) });
    let composed = li.compose(&inner, order).expect("inner vanishes at 0");
    let neg_geo = Series::from_fn(order, |_| int(-1));
    let lhs = composed.mul(&neg_geo, order).expect("orders match");

    let brute = Series::from_fn(order, |n| {
        if n == 0 {
            int(0)
        } else {
            -snr_brute(n as u64, r)
        }
    });
    let bell_form = Series::from_fn(order, |n| {
        if n == 0 {
            int(0)
        } else {
            -snr_bell(n as u64, r)
        }
    });
    let passed = lhs == brute && lhs == bell_form;
    IdentityReport::exact_rendered(
        "polylog-resummation",
        &[("r", p(r)), ("order", p(order))],
        bell::render_values(lhs.coeffs()),
        bell::render_values(brute.coeffs()),
        passed,
    )
}

/// zeta(r) from the t = 1/2 specialization:
/// zeta(r) = 1/((1-2^{1-r}) r!) · sum_{n>=1} 2^{-(n+1)} Y_r(0!H_n^{(1)}, ...,
/// (r-1)!H_n^{(r)}). The partial sum through n = T is computed exactly and
/// converted to f64 once at the end.
pub fn zeta_via_half(r: u32, terms: u64) -> f64 {
    assert!(r >= 2, "the series applies to r >= 2");
    let mut acc = int(0);
    for n in 1..=terms {
        // 2^{-(n+1)} times r!·(-S_n(r)), i.e. the Bell value itself.
        let y = -snr_bell(n, r) * BigRational::from_integer(factorial(r as u64));
        acc += y / pow_i32(&int(2), n as i32 + 1);
    }
    let prefactor = (int(1) - pow_i32(&int(2), 1 - r as i32))
        * BigRational::from_integer(factorial(r as u64));
    to_f64(&(acc / prefactor))
}

/// Positivity of the full alternating sum for x > 0, visible from the Coppo
/// form (all Bell arguments positive).
pub fn positivity_report(n_max: u64, r_max: u32, x: &BigRational) -> IdentityReport {
    let mut ok = true;
    'outer: for n in 0..=n_max {
        for r in 0..=r_max {
            match brute(n, r, x) {
                Ok(v) => {
                    if v <= int(0) {
                        ok = false;
                        break 'outer;
                    }
                }
                Err(_) => {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    IdentityReport::exact_rendered(
        "alternating-sum-positivity",
        &[("max-n", p(n_max)), ("max-r", p(r_max)), ("x", p(x))],
        "all sums positive".to_string(),
        "expected".to_string(),
        ok,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_small_cases() {
        // n=1, r=2, x=1: 1 - 1/8 = 7/8.
        assert_eq!(brute(1, 2, &int(1)).unwrap(), rat(7, 8));
        // n=0: single term 1/x^{r+1}.
        assert_eq!(brute(0, 3, &rat(1, 2)).unwrap(), int(16));
    }

    #[test]
    fn brute_detects_poles() {
        assert!(brute(3, 1, &int(-2)).is_err());
        assert!(brute(3, 1, &int(0)).is_err());
        assert!(brute(3, 1, &rat(-7, 2)).is_ok());
    }

    #[test]
    fn coppo_equals_brute_on_grid() {
        for x in [int(1), int(2), rat(1, 2), rat(3, 2), rat(2, 7)] {
            for n in 0..=6u64 {
                for r in 0..=4u32 {
                    let b = brute(n, r, &x).unwrap();
                    assert_eq!(coppo_bell(n, r, &x).unwrap(), b, "n={n} r={r} x={x}");
                    assert_eq!(
                        coppo_bell_reflected(n, r, &x).unwrap(),
                        b,
                        "reflected n={n} r={r} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn snr_frozen_value() {
        // -S_3(3) = 3 - 3/8 + 1/27 = 575/216, by brute summation.
        assert_eq!(-snr_brute(3, 3), rat(575, 216));
        assert_eq!(snr_bell(3, 3), snr_brute(3, 3));
    }

    #[test]
    fn snr_bell_equals_brute() {
        for n in 0..=12u64 {
            for r in 0..=6u32 {
                assert_eq!(snr_bell(n, r), snr_brute(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn snr_closed_forms() {
        for n in 1..=20u64 {
            let h1 = harmonic(n, 1);
            let h2 = harmonic(n, 2);
            let h3 = harmonic(n, 3);
            // Euler: -S_n(1) = H_n.
            assert_eq!(-snr_brute(n, 1), h1);
            // Quadratic: -S_n(2) = (H_n^2 + H_n^{(2)})/2.
            assert_eq!(-snr_brute(n, 2), (&h1 * &h1 + &h2) / int(2));
            // Cubic: -S_n(3) = H^3/6 + H·H^{(2)}/2 + H^{(3)}/3.
            assert_eq!(
                -snr_brute(n, 3),
                &h1 * &h1 * &h1 / int(6) + &h1 * &h2 / int(2) + &h3 / int(3)
            );
        }
    }

    #[test]
    fn exp_identity_small_n() {
        // n = 1: -S_1(r) = 1 for every r, and exp(sum x^r/r) = 1/(1-x).
        let report = exp_identity_report(1, 8);
        assert!(report.passed, "{}", report.line());
        for n in 2..=6 {
            assert!(exp_identity_report(n, 8).passed);
        }
    }

    #[test]
    fn wilf_product_small_n() {
        // n = 3: (1+x)(1+x/2) = 1 + 3x/2 + x^2/2.
        let report = wilf_product_report(3, 6);
        assert!(report.passed, "{}", report.line());
        for n in 1..=7 {
            assert!(wilf_product_report(n, 8).passed);
        }
    }

    #[test]
    fn reflection_product_small_n() {
        // n = 1: 1/(1-x) has all coefficients 1, and -S_1(r) = 1.
        for n in 1..=6 {
            let report = reflection_product_report(n, 8);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn polylog_resummation_holds() {
        for r in 0..=4u32 {
            let report = polylog_identity_report(r, 10);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn zeta_via_half_hits_references() {
        let z2 = zeta_via_half(2, 60);
        let z3 = zeta_via_half(3, 60);
        let z4 = zeta_via_half(4, 60);
        assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert!((z3 - 1.2020569031595943).abs() < 1e-12);
        assert!((z4 - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-12);
    }

    #[test]
    fn positivity_on_positive_shifts() {
        assert!(positivity_report(8, 4, &rat(1, 2)).passed);
        assert!(positivity_report(8, 4, &int(3)).passed);
    }
}
