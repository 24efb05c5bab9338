//! Stirling numbers of the first kind by three independent routes, the
//! Cauchy log-power series they generate, and the family of ordinary
//! generating functions for harmonic numbers that falls out of them.
//!
//! Signed convention throughout: s(n, k) is the coefficient of x^k in the
//! falling factorial x(x-1)···(x-n+1).

use crate::bell;
use crate::harmonic::{harmonic, harmonic_shifted, pochhammer, PoleError};
use crate::rational::{factorial, int, is_integer, rat, sign};
use crate::report::{p, IdentityReport};
use crate::series::Series;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StirlingError {
    #[error("Bell route produced the non-integer value {value} for s({n}, {k})")]
    NonIntegerResult { n: u64, k: u64, value: BigRational },
}

/// Row n as the coefficients of the falling factorial x(x-1)···(x-n+1),
/// expanded by iterated integer polynomial multiplication. Entry k is
/// s(n, k); the row has length n+1.
pub fn row_oracle(n: u64) -> Vec<BigInt> {
    let mut poly = vec![BigInt::from(1)];
    for j in 0..n {
        // multiply by (x - j)
        let mut next = vec![BigInt::from(0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigInt::from(j);
        }
        poly = next;
    }
    poly
}

/// s(n, k) through the Bell polynomial with harmonic arguments:
/// s(n, r+1) = (-1)^{n+r+1} (n-1)!/r! · Y_r(H_{n-1}^{(1)}, -1!H_{n-1}^{(2)},
/// ..., (-1)^{r-1}(r-1)!H_{n-1}^{(r)}). Requires 1 ≤ k ≤ n.
pub fn via_bell(n: u64, k: u64) -> Result<BigInt, StirlingError> {
    assert!((1..=n).contains(&k), "need 1 <= k <= n");
    let r = (k - 1) as usize;
    let xs: Vec<BigRational> = (1..=r as u64)
        .map(|j| {
            sign(j - 1) * BigRational::from_integer(factorial(j - 1)) * harmonic(n - 1, j as u32)
        })
        .collect();
    let y = bell::value(r, &xs);
    let value = sign(n + k) * BigRational::new(factorial(n - 1), factorial(r as u64)) * y;
    if !is_integer(&value) {
        return Err(StirlingError::NonIntegerResult { n, k, value });
    }
    Ok(value.to_integer())
}

/// Row n via the Shen recurrence
/// (r+1) s(n, r+2) = -sum_{k=0}^{r} s(n, r-k+1) H_{n-1}^{(k+1)},
/// seeded with s(n, 1) = (-1)^{n+1}(n-1)!.
pub fn shen_row(n: u64) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    let h: Vec<BigRational> = (1..=n as u32).map(|m| harmonic(n - 1, m)).collect();
    let mut s: Vec<BigRational> = vec![int(0); n as usize + 1];
    s[1] = sign(n + 1) * BigRational::from_integer(factorial(n - 1));
    for r in 0..(n as usize - 1) {
        let mut acc = int(0);
        for k in 0..=r {
            acc += &s[r - k + 1] * &h[k];
        }
        s[r + 2] = -acc / int(r as i64 + 1);
    }
    s.into_iter()
        .map(|v| {
            assert!(is_integer(&v), "Shen recurrence stays integral");
            v.to_integer()
        })
        .collect()
}

/// The printed closed forms for s(n, 1..=4) in terms of H_{n-1}^{(m)}.
pub fn closed_form(n: u64, k: u64) -> BigRational {
    assert!((1..=4).contains(&k) && n >= 1);
    let f = BigRational::from_integer(factorial(n - 1));
    let h1 = harmonic(n - 1, 1);
    match k {
        1 => sign(n + 1) * f,
        2 => sign(n) * f * h1,
        3 => {
            let h2 = harmonic(n - 1, 2);
            sign(n + 1) * f * rat(1, 2) * (&h1 * &h1 - h2)
        }
        _ => {
            let h2 = harmonic(n - 1, 2);
            let h3 = harmonic(n - 1, 3);
            sign(n) * f * rat(1, 6) * (&h1 * &h1 * &h1 - int(3) * &h1 * &h2 + int(2) * h3)
        }
    }
}

/// Coefficients of log^r(1-z) through z^N, assembled from Stirling numbers:
/// the z^n coefficient is r!·(-1)^n·s(n, r)/n!.
pub fn cauchy_log_power(r: u64, n_max: usize) -> Series<BigRational> {
    let rf = BigRational::from_integer(factorial(r));
    Series::from_fn(n_max, |n| {
        let row = row_oracle(n as u64);
        let s_nr = row
            .get(r as usize)
            .cloned()
            .unwrap_or_else(|| BigInt::from(0));
        sign(n as u64) * &rf * BigRational::new(s_nr, factorial(n as u64))
    })
}

/// log(1-z) itself, built directly from its defining coefficients -1/n.
pub fn log_one_minus(n_max: usize) -> Series<BigRational> {
    Series::from_fn(n_max, |n| {
        if n == 0 {
            int(0)
        } else {
            rat(-1, n as i64)
        }
    })
}

fn one_minus_z(n_max: usize) -> Series<BigRational> {
    Series::from_fn(n_max, |n| match n {
        0 => int(1),
        1 => int(-1),
        _ => int(0),
    })
}

fn series_report(
    identity: &str,
    params: &[(&str, String)],
    lhs: &Series<BigRational>,
    rhs: &Series<BigRational>,
) -> IdentityReport {
    IdentityReport::exact_rendered(
        identity,
        params,
        bell::render_values(lhs.coeffs()),
        bell::render_values(rhs.coeffs()),
        lhs == rhs,
    )
}

/// The ordinary generating functions tying harmonic numbers, Pochhammer
/// symbols, and log powers together, checked as exact truncated series at a
/// given shift x > 0 (shift-independent members are reported once with no
/// shift parameter):
///
/// 1. binomial series: (1-z)^{-x} = sum (x)_n/n! z^n
/// 2. log over power: -log(1-z)·(1-z)^{-x} = sum (x)_n H_n^{(1)}(x)/n! z^n
/// 3. harmonic gf: -log(1-z)/(1-z) = sum H_n^{(1)} z^n
/// 4. squared log over power:
///    log^2(1-z)·(1-z)^{-x} = sum (x)_n([H_n^{(1)}(x)]^2 - H_n^{(2)}(x))/n! z^n
/// 5. its x = 1 form with plain harmonic numbers
/// 6. the trilogarithm decomposition of -log^3(1-z)/3
pub fn generating_function_reports(
    x: &BigRational,
    n_max: usize,
) -> Result<Vec<IdentityReport>, PoleError> {
    let mut out = Vec::new();
    let xs = ("x", p(x));
    let ns = ("order", p(n_max));
    let base = one_minus_z(n_max);
    let inv_pow_x = base
        .pow(&-x.clone(), n_max)
        .expect("constant term is 1");

    // 1. (1-z)^{-x} against Pochhammer coefficients.
    let rhs1 = Series::from_fn(n_max, |n| {
        pochhammer(x, n as u64) / BigRational::from_integer(factorial(n as u64))
    });
    out.push(series_report(
        "binomial-series-pochhammer",
        &[xs.clone(), ns.clone()],
        &inv_pow_x,
        &rhs1,
    ));

    // 2. -log(1-z)(1-z)^{-x} against (x)_n H_n^{(1)}(x)/n!.
    let neg_log = cauchy_log_power(1, n_max).neg();
    let lhs2 = neg_log.mul(&inv_pow_x, n_max).expect("orders match");
    let mut rhs2_coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max as u64 {
        rhs2_coeffs.push(
            pochhammer(x, n) * harmonic_shifted(n, 1, x)?
                / BigRational::from_integer(factorial(n)),
        );
    }
    out.push(series_report(
        "log-over-power-harmonic",
        &[xs.clone(), ns.clone()],
        &lhs2,
        &Series::from_coeffs(rhs2_coeffs),
    ));

    // 3. -log(1-z)/(1-z) = sum H_n z^n (shift-independent).
    let geo = base.pow(&int(-1), n_max).expect("constant term is 1");
    let lhs3 = neg_log.mul(&geo, n_max).expect("orders match");
    let rhs3 = Series::from_fn(n_max, |n| harmonic(n as u64, 1));
    out.push(series_report(
        "harmonic-number-gf",
        std::slice::from_ref(&ns),
        &lhs3,
        &rhs3,
    ));

    // 4. log^2(1-z)(1-z)^{-x} against (x)_n([H_n^{(1)}(x)]^2 - H_n^{(2)}(x))/n!.
    let log_sq = cauchy_log_power(2, n_max);
    let lhs4 = log_sq.mul(&inv_pow_x, n_max).expect("orders match");
    let mut rhs4_coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max as u64 {
        let h1 = harmonic_shifted(n, 1, x)?;
        let h2 = harmonic_shifted(n, 2, x)?;
        rhs4_coeffs.push(
            pochhammer(x, n) * (&h1 * &h1 - h2) / BigRational::from_integer(factorial(n)),
        );
    }
    out.push(series_report(
        "squared-log-over-power",
        &[xs.clone(), ns.clone()],
        &lhs4,
        &Series::from_coeffs(rhs4_coeffs),
    ));

    // 5. log^2(1-z)/(1-z) = sum([H_n]^2 - H_n^{(2)}) z^n.
    let lhs5 = log_sq.mul(&geo, n_max).expect("orders match");
    let rhs5 = Series::from_fn(n_max, |n| {
        let h1 = harmonic(n as u64, 1);
        let h2 = harmonic(n as u64, 2);
        &h1 * &h1 - h2
    });
    out.push(series_report(
        "squared-log-harmonic-gf",
        std::slice::from_ref(&ns),
        &lhs5,
        &rhs5,
    ));

    // 6. -log^3(1-z)/3 = sum([H_n]^2 - H_n^{(2)}) z^n/n - 2 sum H_n z^n/n^2
    //    + 2 Li_3(z), with Li_3 as its truncated partial sum.
    let lhs6 = cauchy_log_power(3, n_max).scale_rat(&rat(-1, 3));
    let rhs6 = Series::from_fn(n_max, |n| {
        if n == 0 {
            return int(0);
        }
        let nn = int(n as i64);
        let h1 = harmonic(n as u64, 1);
        let h2 = harmonic(n as u64, 2);
        (&h1 * &h1 - h2) / &nn - int(2) * &h1 / (&nn * &nn) + int(2) / (&nn * &nn * &nn)
    });
    out.push(series_report(
        "trilog-decomposition",
        std::slice::from_ref(&ns),
        &lhs6,
        &rhs6,
    ));

    Ok(out)
}

/// Row-level agreement report: oracle vs Bell route vs Shen recurrence.
pub fn three_route_report(n: u64) -> IdentityReport {
    let oracle = row_oracle(n);
    let shen = shen_row(n);
    let mut via = Vec::with_capacity(n as usize + 1);
    via.push(BigInt::from(if n == 0 { 1 } else { 0 }));
    let mut ok = true;
    for k in 1..=n {
        match via_bell(n, k) {
            Ok(v) => via.push(v),
            Err(_) => {
                ok = false;
                break;
            }
        }
    }
    let agree = ok && oracle == shen && oracle == via;
    IdentityReport::exact_rendered(
        "stirling-three-routes",
        &[("n", p(n))],
        bell::render_values(&oracle),
        format!(
            "bell: {}; shen: {}",
            bell::render_values(&via),
            bell::render_values(&shen)
        ),
        agree,
    )
}

/// s(n, k) = 0 for k > n and row sums: sum_k s(n,k) = 0 for n ≥ 2 (the
/// falling factorial vanishes at x = 1).
pub fn structural_report(n_max: u64) -> IdentityReport {
    let mut ok = true;
    for n in 2..=n_max {
        let row = row_oracle(n);
        if row.iter().sum::<BigInt>() != BigInt::zero() {
            ok = false;
        }
        // the expansion has exactly n+1 coefficients, everything above is 0
        if row.len() != n as usize + 1 {
            ok = false;
        }
    }
    IdentityReport::exact_rendered(
        "stirling-row-structure",
        &[("max-n", p(n_max))],
        "row sums vanish, degree caps at n".to_string(),
        "expected".to_string(),
        ok,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_oracle_known_rows() {
        // n = 6: 0, -120, 274, -225, 85, -15, 1
        let want: Vec<BigInt> = [0i64, -120, 274, -225, 85, -15, 1]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(row_oracle(6), want);
        assert_eq!(row_oracle(0), vec![BigInt::from(1)]);
        assert_eq!(row_oracle(1), vec![BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn via_bell_matches_oracle() {
        for n in 1..=10u64 {
            let row = row_oracle(n);
            for k in 1..=n {
                assert_eq!(via_bell(n, k).unwrap(), row[k as usize], "s({n},{k})");
            }
        }
    }

    #[test]
    fn via_bell_spot_value() {
        assert_eq!(via_bell(5, 3).unwrap(), BigInt::from(35));
        assert_eq!(via_bell(4, 2).unwrap(), BigInt::from(11));
    }

    #[test]
    fn shen_rows_match_oracle() {
        for n in 0..=12u64 {
            assert_eq!(shen_row(n), row_oracle(n), "row {n}");
        }
    }

    #[test]
    fn closed_forms_match_oracle() {
        for n in 1..=12u64 {
            let row = row_oracle(n);
            for k in 1..=4u64.min(n) {
                let cf = closed_form(n, k);
                assert!(is_integer(&cf));
                assert_eq!(cf.to_integer(), row[k as usize], "s({n},{k}) closed form");
            }
        }
    }

    #[test]
    fn cauchy_matches_direct_log_products() {
        // log^r(1-z) from Stirling numbers vs the r-fold Cauchy product of
        // the defining series of log(1-z).
        let n = 14;
        let log1m = log_one_minus(n);
        let mut product = Series::one(n);
        for r in 1..=5u64 {
            product = product.mul(&log1m, n).unwrap();
            assert_eq!(cauchy_log_power(r, n), product, "r = {r}");
        }
    }

    #[test]
    fn cauchy_spot_coefficients() {
        // z^3 of log^2(1-z) is 1; z^3 of log^3(1-z) is -1.
        let s2 = cauchy_log_power(2, 4);
        assert_eq!(s2.coeff(3), &int(1));
        let s3 = cauchy_log_power(3, 4);
        assert_eq!(s3.coeff(3), &int(-1));
    }

    #[test]
    fn generating_functions_hold_for_three_shifts() {
        for x in [int(1), rat(1, 2), rat(3, 2)] {
            let reports = generating_function_reports(&x, 10).unwrap();
            for r in &reports {
                assert!(r.passed, "{}", r.line());
            }
        }
    }

    #[test]
    fn generating_functions_surface_poles() {
        assert!(generating_function_reports(&int(0), 6).is_err());
        assert!(generating_function_reports(&int(-2), 6).is_err());
    }

    #[test]
    fn three_route_and_structure_reports_pass() {
        for n in 0..=8 {
            assert!(three_route_report(n).passed);
        }
        assert!(structural_report(12).passed);
    }
}
