//! Bernoulli numbers (B_1 = -1/2 convention) from a quadratic
//! self-convolution recurrence, cross-checked against the reciprocal-series
//! definition t/(e^t - 1), the defining binomial sum, and the logarithmic
//! series for log(x/(e^x - 1)).

use crate::bell::render_values;
use crate::rational::{binomial, factorial, int, rat, sign};
use crate::report::{p, IdentityReport};
use crate::series::Series;
use num_rational::BigRational;
use num_traits::Zero;

/// B_0..B_n via the self-convolution
/// B_{r+1} = sum_{k=0}^{r} (-1)^k C(r,k) B_{r-k} B_{k+1}/(k+1),
/// which is implicit in B_{r+1}; the k = r term is moved to the left,
/// leaving B_{r+1}(1 - (-1)^r/(r+1)) = sum_{k=0}^{r-1} (...).
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b = vec![int(1)];
    if n == 0 {
        return b;
    }
    b.push(rat(-1, 2));
    for r in 1..n {
        let mut acc = int(0);
        for k in 0..r {
            acc += sign(k as u64)
                * BigRational::from_integer(binomial(r as u64, k as i64))
                * &b[r - k]
                * &b[k + 1]
                / int(k as i64 + 1);
        }
        let pivot = int(1) - sign(r as u64) / int(r as i64 + 1);
        b.push(acc / pivot);
    }
    b
}

/// B_0..B_n read off the reciprocal of sum_k t^k/(k+1)!, i.e. the
/// coefficients of t/(e^t - 1) scaled by k!.
pub fn bernoulli_egf_oracle(n: usize) -> Vec<BigRational> {
    let denom = Series::from_fn(n, |k| BigRational::new(1.into(), factorial(k as u64 + 1)));
    let inv = denom.pow(&int(-1), n).expect("constant term is 1");
    (0..=n)
        .map(|k| inv.coeff(k) * BigRational::from_integer(factorial(k as u64)))
        .collect()
}

/// sum_{k=0}^{n} C(n+1,k) B_k = 0 for every n >= 1 (the defining relation).
pub fn defining_sum_report(n_max: usize) -> IdentityReport {
    let b = bernoulli(n_max);
    let mut first_bad = None;
    for n in 1..=n_max {
        let mut acc = int(0);
        for (k, bk) in b.iter().enumerate().take(n + 1) {
            acc += BigRational::from_integer(binomial(n as u64 + 1, k as i64)) * bk;
        }
        if !acc.is_zero() {
            first_bad = Some((n, acc));
            break;
        }
    }
    let (lhs, passed) = match first_bad {
        None => ("0 for all rows".to_string(), true),
        Some((n, v)) => (format!("row n={n} sums to {v}"), false),
    };
    IdentityReport::exact_rendered(
        "bernoulli-defining-sum",
        &[("max-n", p(n_max))],
        lhs,
        "0".to_string(),
        passed,
    )
}

/// The recurrence values against the reciprocal-series oracle.
pub fn egf_oracle_report(n_max: usize) -> IdentityReport {
    let rec = bernoulli(n_max);
    let egf = bernoulli_egf_oracle(n_max);
    IdentityReport::exact_rendered(
        "bernoulli-reciprocal-series",
        &[("max-n", p(n_max))],
        render_values(&rec),
        render_values(&egf),
        rec == egf,
    )
}

/// Literal re-check of the self-convolution: with all B_k known, the full
/// sum over k = 0..r must reproduce B_{r+1}.
pub fn self_convolution_report(n_max: usize) -> IdentityReport {
    let b = bernoulli_egf_oracle(n_max + 1);
    let mut ok = true;
    for r in 0..=n_max {
        let mut acc = int(0);
        for k in 0..=r {
            acc += sign(k as u64)
                * BigRational::from_integer(binomial(r as u64, k as i64))
                * &b[r - k]
                * &b[k + 1]
                / int(k as i64 + 1);
        }
        if acc != b[r + 1] {
            ok = false;
            break;
        }
    }
    IdentityReport::exact_rendered(
        "bernoulli-self-convolution",
        &[("max-r", p(n_max))],
        "recurrence reproduces table".to_string(),
        "expected".to_string(),
        ok,
    )
}

/// log(x/(e^x - 1)) = sum_{m>=1} (-1)^{m+1} B_m x^m/(m·m!): taking the
/// series log of the Bernoulli generating function must return the weights
/// b_m = (-1)^{m+1} B_m/m!.
pub fn ramanujan_log_report(n_max: usize) -> IdentityReport {
    let b = bernoulli(n_max);
    let egf = Series::from_fn(n_max, |k| {
        &b[k] * BigRational::new(1.into(), factorial(k as u64))
    });
    let weights = egf.log(n_max).expect("constant term is 1");
    let expected = Series::from_fn(n_max, |m| {
        if m == 0 {
            int(0)
        } else {
            sign(m as u64 + 1) * &b[m] * BigRational::new(1.into(), factorial(m as u64))
        }
    });
    IdentityReport::exact_rendered(
        "bernoulli-log-series",
        &[("max-m", p(n_max))],
        render_values(weights.coeffs()),
        render_values(expected.coeffs()),
        weights == expected,
    )
}

/// [(2n)!]^2/((2n-1)!(2n+1)!) = sum_{k=1}^{n} C(2n,2k) 2^{2k} B_{2k}/(2n-2k+1).
pub fn even_index_sum_report(n_max: usize) -> IdentityReport {
    let b = bernoulli(2 * n_max);
    let mut first_bad = None;
    for n in 1..=n_max {
        let f2n = BigRational::from_integer(factorial(2 * n as u64));
        let lhs = &f2n * &f2n
            / BigRational::from_integer(factorial(2 * n as u64 - 1))
            / BigRational::from_integer(factorial(2 * n as u64 + 1));
        let mut rhs = int(0);
        for k in 1..=n {
            rhs += BigRational::from_integer(binomial(2 * n as u64, 2 * k as i64))
                * BigRational::from_integer(num_bigint::BigInt::from(2).pow(2 * k as u32))
                * &b[2 * k]
                / int(2 * (n - k) as i64 + 1);
        }
        if lhs != rhs {
            first_bad = Some((n, lhs, rhs));
            break;
        }
    }
    let (lhs, rhs, passed) = match first_bad {
        None => ("equal for all n".to_string(), "expected".to_string(), true),
        Some((n, l, r)) => (format!("n={n}: {l}"), format!("{r}"), false),
    };
    IdentityReport::exact_rendered(
        "bernoulli-even-index-sum",
        &[("max-n", p(n_max))],
        lhs,
        rhs,
        passed,
    )
}
