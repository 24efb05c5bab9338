//! Arbitrary-precision rational helpers.
//!
//! Every exact value in the crate is a `BigRational`, which is kept in
//! canonical form by construction: fully reduced, denominator positive.
//! Two equal values therefore always have identical (numerator, denominator)
//! pairs, no matter which sequence of operations produced them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::str::FromStr;

/// `p/q` as a canonical rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero whenever `k` falls outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    // c is C(n-k+i, i) after step i, so every division is exact.
    for i in 1..=k {
        c = c * (n - k + i) / i;
    }
    c
}

/// Parse `"p/q"` or a plain integer literal into a canonical rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let q = match den {
        Some(d) => BigInt::from_str(d).map_err(|e| format!("bad denominator {d:?}: {e}"))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// Nearest-double conversion that stays accurate for numerators and
/// denominators far beyond the f64 exponent range: the quotient is scaled to
/// roughly 64 significant bits before the floating division happens.
pub fn to_f64(r: &BigRational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let shift = 64 - (r.numer().bits() as i64 - r.denom().bits() as i64);
    let q = if shift >= 0 {
        (r.numer() << shift as u64) / r.denom()
    } else {
        r.numer() / (r.denom() << (-shift) as u64)
    };
    let qf = q.to_f64().expect("64-bit quotient fits in f64");
    // Undo the scaling in two steps so exponents beyond ±1023 cannot saturate
    // powi prematurely.
    let half = (shift / 2) as i32;
    qf * 2f64.powi(-half) * 2f64.powi(-(shift as i32 - half))
}

/// (-1)^k as a rational sign.
pub fn sign(k: u64) -> BigRational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Exact integer power of a rational, with negative exponents allowed for
/// nonzero bases.
pub fn pow_i32(x: &BigRational, e: i32) -> BigRational {
    if e == 0 {
        return int(1);
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        assert!(!acc.is_zero(), "negative power of zero");
        acc.recip()
    } else {
        acc
    }
}

/// True when the rational is an integer.
pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Pascal-triangle oracle for the multiplicative binomial.
    fn pascal(n: usize, k: usize) -> BigInt {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(BigInt::one());
            row = next;
        }
        row[k].clone()
    }

    #[test]
    fn binomial_30_15() {
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
        assert_eq!(binomial(30, 15), pascal(30, 15));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..=20u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), pascal(n as usize, k as usize));
            }
        }
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479001600u64));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rendering_round_trips() {
        for r in [rat(3, 4), rat(-22, 7), int(5), int(0), rat(1, 1000000)] {
            let rendered = r.to_string();
            assert_eq!(parse_rational(&rendered).unwrap(), r);
        }
    }

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let a = rat(6, -8);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(4));
        // Different op sequences, identical representation.
        let b = rat(1, 4) - rat(1, 1);
        assert_eq!(a.numer(), b.numer());
        assert_eq!(a.denom(), b.denom());
    }

    #[test]
    fn to_f64_handles_huge_components() {
        let big = BigInt::from(7).pow(400u32);
        let r = BigRational::new(&big * 3, big.clone());
        assert!((to_f64(&r) - 3.0).abs() < 1e-14);
        let tiny = BigRational::new(BigInt::one(), BigInt::from(2).pow(900u32));
        assert!(to_f64(&tiny) > 0.0);
        assert!(to_f64(&tiny) < 1e-250);
        assert_eq!(to_f64(&int(0)), 0.0);
        assert!((to_f64(&rat(-22, 7)) - (-22.0 / 7.0)).abs() < 1e-15);
    }

    #[test]
    fn pow_i32_negative_exponents() {
        assert_eq!(pow_i32(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_i32(&rat(5, 1), 0), int(1));
        assert_eq!(pow_i32(&rat(-1, 2), 3), rat(-1, 8));
    }
}
