//! Coefficient domains for the series and Bell-polynomial kernels.
//!
//! The kernels only ever need commutative-ring arithmetic plus the ability to
//! absorb rational constants: division happens exclusively by rational
//! scalars (recurrence indices, factorials), never by arbitrary domain
//! elements. That makes three domains interchangeable everywhere:
//!
//! * `BigRational` — the exact domain used for every identity proof;
//! * `f64` — the floating boundary for quadrature cross-checks;
//! * [`RatPoly`] — polynomials in one symbol with rational coefficients,
//!   used where a closed form is a polynomial in π².

use crate::rational::to_f64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// A commutative ring that can absorb rational constants.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &BigRational) -> Self;

    /// Multiply by a rational scalar.
    fn scale(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rational(r))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &BigRational) -> Self {
        to_f64(r)
    }
}

/// Dense polynomial in a single symbol over the rationals, trailing zeros
/// trimmed so equal polynomials compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · symbol^degree`.
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![<BigRational as Coeff>::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(<BigRational as Coeff>::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Evaluate at a float value of the symbol.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if Zero::is_zero(c)) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*P"),
                _ => format!("{c}*P^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Coeff for RatPoly {
    fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(<BigRational as Coeff>::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return <Self as Coeff>::zero();
        }
        let mut out = vec![<BigRational as Coeff>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn rat_poly_ring_ops() {
        // (1 + P)(1 - P) = 1 - P^2
        let a = RatPoly::new(vec![int(1), int(1)]);
        let b = RatPoly::new(vec![int(1), int(-1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, RatPoly::new(vec![int(1), int(0), int(-1)]));
        assert_eq!(a.add(&b), RatPoly::constant(int(2)));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn rat_poly_trims_trailing_zeros() {
        let a = RatPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(a.degree(), Some(0));
        let b = RatPoly::monomial(rat(1, 2), 3);
        assert_eq!(b.sub(&b).degree(), None);
    }

    #[test]
    fn f64_absorbs_rationals() {
        assert_eq!(<f64 as Coeff>::from_rational(&rat(1, 4)), 0.25);
        assert_eq!(2.0.scale(&rat(3, 2)), 3.0);
    }
}
