//! Exact rationals q_n = zeta(2n)/pi^{2n} from the sine-product expansion,
//! cross-linked to the Bernoulli numbers and re-derived through a
//! polynomial-domain series exponential that keeps pi^2 symbolic.

use crate::bernoulli::bernoulli;
use crate::coeff::{Coeff, RatPoly};
use crate::rational::{factorial, int, sign, to_f64};
use crate::report::{p, IdentityReport};
use crate::series::Series;
use num_bigint::BigInt;
use num_rational::BigRational;

/// q_1..q_n with q_k = zeta(2k)/pi^{2k}, from the recurrence obtained by
/// equating even coefficients of the sine product with its Maclaurin series:
/// 2n/(2n+1)! = 2 sum_{k=1}^{n} (-1)^{k+1} q_k/(2n-2k+1)!.
pub fn zeta_even_rational(n_max: usize) -> Vec<BigRational> {
    let mut q: Vec<BigRational> = Vec::with_capacity(n_max);
    for n in 1..=n_max as u64 {
        let mut acc = BigRational::new((2 * n).into(), factorial(2 * n + 1));
        for (k, qk) in q.iter().enumerate() {
            let k = k as u64 + 1;
            acc -= int(2) * sign(k + 1) * qk
                / BigRational::from_integer(factorial(2 * n - 2 * k + 1));
        }
        q.push(sign(n + 1) / int(2) * acc);
    }
    q
}

/// zeta(2n) = (-1)^{n+1} 2^{2n} pi^{2n} B_{2n}/(2(2n)!), i.e.
/// q_n = (-1)^{n+1} 2^{2n} B_{2n}/(2(2n)!).
pub fn bernoulli_link_report(n_max: usize) -> IdentityReport {
    let q = zeta_even_rational(n_max);
    let b = bernoulli(2 * n_max);
    let mut first_bad = None;
    for n in 1..=n_max {
        let rhs = sign(n as u64 + 1) * BigRational::from_integer(BigInt::from(2).pow(2 * n as u32))
            * &b[2 * n]
            / (int(2) * BigRational::from_integer(factorial(2 * n as u64)));
        if q[n - 1] != rhs {
            first_bad = Some((n, q[n - 1].clone(), rhs));
            break;
        }
    }
    let (lhs, rhs, passed) = match first_bad {
        None => ("equal for all n".to_string(), "expected".to_string(), true),
        Some((n, l, r)) => (format!("n={n}: {l}"), format!("{r}"), false),
    };
    IdentityReport::exact_rendered(
        "zeta-even-bernoulli-link",
        &[("max-n", p(n_max))],
        lhs,
        rhs,
        passed,
    )
}

/// The sine product in the polynomial domain Q[P] with P standing for pi^2:
/// the series exponential of the weights c_{2k} = -2 q_k P^k must have
/// vanishing odd coefficients and even coefficients (-1)^m P^m/(2m+1)!.
pub fn sine_product_parity_report(n_max: usize) -> IdentityReport {
    let q = zeta_even_rational(n_max);
    let order = 2 * n_max;
    let weights = Series::<RatPoly>::from_fn(order, |m| {
        if m == 0 || m % 2 == 1 {
            RatPoly::zero()
        } else {
            RatPoly::monomial(int(-2) * &q[m / 2 - 1], m / 2)
        }
    });
    let h = weights.exp(order).expect("order matches");
    let mut ok = true;
    for m in 0..=order {
        let expected = if m % 2 == 1 {
            RatPoly::zero()
        } else {
            RatPoly::monomial(
                sign(m as u64 / 2) * BigRational::new(1.into(), factorial(m as u64 + 1)),
                m / 2,
            )
        };
        if h.coeff(m) != &expected {
            ok = false;
            break;
        }
    }
    IdentityReport::exact_rendered(
        "sine-product-parity",
        &[("order", p(order))],
        "coefficients (-1)^m P^m/(2m+1)!, odd ones zero".to_string(),
        "expected".to_string(),
        ok,
    )
}

/// q_n against the Bernoulli table via the even-index binomial sum, i.e. the
/// combined consistency of the recurrence, the link, and the Bernoulli table.
pub fn zeta_even_table(n_max: usize) -> Vec<(usize, BigRational, f64)> {
    zeta_even_rational(n_max)
        .into_iter()
        .enumerate()
        .map(|(i, q)| {
            let n = i + 1;
            let float = to_f64(&q) * std::f64::consts::PI.powi(2 * n as i32);
            (n, q, float)
        })
        .collect()
}

/// zeta(2n) strictly decreases toward 1 (float sanity on the exact table).
pub fn monotone_report(n_max: usize) -> IdentityReport {
    let table = zeta_even_table(n_max);
    let mut ok = true;
    let mut prev = f64::INFINITY;
    for (_, _, z) in &table {
        if !(*z > 1.0 && *z < prev) {
            ok = false;
            break;
        }
        prev = *z;
    }
    IdentityReport::exact_rendered(
        "zeta-even-monotone",
        &[("max-n", p(n_max))],
        "strictly decreasing, all > 1".to_string(),
        "expected".to_string(),
        ok,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn frozen_leading_values() {
        let q = zeta_even_rational(5);
        assert_eq!(q[0], rat(1, 6));
        assert_eq!(q[1], rat(1, 90));
        assert_eq!(q[2], rat(1, 945));
        assert_eq!(q[3], rat(1, 9450));
        assert_eq!(q[4], rat(1, 93555));
    }

    #[test]
    fn euler_quartic_relation() {
        // zeta(2)^2 - zeta(4) = pi^4/60, i.e. q_1^2 - q_2 = 1/60.
        let q = zeta_even_rational(2);
        assert_eq!(&q[0] * &q[0] - &q[1], rat(1, 60));
    }

    #[test]
    fn bernoulli_link_holds() {
        let report = bernoulli_link_report(10);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn sine_product_parity_holds() {
        let report = sine_product_parity_report(8);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn q12_is_not_unit_numerator() {
        // The numerators stop being 1 at n = 7: q_7 = 2/18243225.
        let q = zeta_even_rational(7);
        assert_eq!(q[6], rat(2, 18243225));
    }

    #[test]
    fn float_column_matches_known_zetas() {
        let table = zeta_even_table(3);
        assert!((table[0].2 - 1.6449340668482264).abs() < 1e-14);
        assert!((table[1].2 - 1.0823232337111382).abs() < 1e-14);
        assert!((table[2].2 - 1.017_343_061_984_449).abs() < 1e-14);
    }

    #[test]
    fn monotone_toward_one() {
        assert!(monotone_report(12).passed);
    }
}
