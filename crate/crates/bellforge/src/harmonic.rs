//! Generalized harmonic numbers H_n^{(m)}(x) = sum_{k=0}^{n-1} (k+x)^{-m}
//! and the rising factorial (x)_n, all over exact rationals.

use crate::rational::{int, pow_i32};
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pole: k + x vanishes at k = {k} for x = {x}")]
pub struct PoleError {
    pub k: u64,
    pub x: BigRational,
}

/// H_n^{(m)} = sum_{k=1}^{n} k^{-m}; H_0^{(m)} = 0.
pub fn harmonic(n: u64, m: u32) -> BigRational {
    assert!(m >= 1, "harmonic order starts at 1");
    let mut acc = int(0);
    for k in 1..=n {
        acc += pow_i32(&int(k as i64), -(m as i32));
    }
    acc
}

/// Shifted variant H_n^{(m)}(x) = sum_{k=0}^{n-1} (k+x)^{-m}; errors when the
/// shift puts a pole inside the window, i.e. x is a non-positive integer
/// with -x < n.
pub fn harmonic_shifted(n: u64, m: u32, x: &BigRational) -> Result<BigRational, PoleError> {
    assert!(m >= 1, "harmonic order starts at 1");
    let mut acc = int(0);
    for k in 0..n {
        let base = int(k as i64) + x;
        if base.is_zero() {
            return Err(PoleError { k, x: x.clone() });
        }
        acc += pow_i32(&base, -(m as i32));
    }
    Ok(acc)
}

/// Rising factorial (x)_n = x(x+1)···(x+n-1); (x)_0 = 1.
pub fn pochhammer(x: &BigRational, n: u64) -> BigRational {
    let mut acc = int(1);
    for k in 0..n {
        acc *= int(k as i64) + x;
    }
    acc
}
