//! Truncated formal power series over a [`Coeff`] domain.
//!
//! A series of order N stores the coefficients of x^0..x^N densely; the
//! truncation order is explicit on every operation. The exponential and
//! logarithm use the weighted convention carried throughout the crate:
//! `exp` consumes b_1..b_N with log h(x) = sum_m (b_m / m) x^m and returns
//! the coefficients a_0..a_N of h, driven by the recurrence
//! r·a_r = sum_{m=1}^{r} a_{r-m} b_m with a_0 = 1. `log` inverts it exactly.
//! No operation divides by a domain element: divisions are by rational
//! scalars only, so the exact, float, and polynomial domains all work.

use crate::coeff::Coeff;
use num_rational::BigRational;
use thiserror::Error;

pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation order {requested} exceeds available order {available}")]
    OrderTooLarge { requested: usize, available: usize },
    #[error("log/pow require the constant term to be exactly 1")]
    ConstantTermNotOne,
    #[error("composition requires the inner series to have constant term 0")]
    InnerConstantTermNotZero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// A series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Series { coeffs }
    }

    /// Build order-`n` coefficients from a function of the index.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> C) -> Self {
        Series {
            coeffs: (0..=n).map(f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| C::zero())
    }

    pub fn one(n: usize) -> Self {
        Self::from_fn(n, |k| if k == 0 { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Pointwise sum, truncated to the shorter operand.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |k| self.coeffs[k].add(&rhs.coeffs[k]))
    }

    /// Pointwise difference, truncated to the shorter operand.
    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |k| self.coeffs[k].sub(&rhs.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &BigRational) -> Self {
        self.scale(&C::from_rational(r))
    }

    /// Cauchy product truncated at order `n`.
    pub fn mul(&self, rhs: &Self, n: usize) -> Result<Self, SeriesError> {
        let available = self.order().min(rhs.order());
        if n > available {
            return Err(SeriesError::OrderTooLarge {
                requested: n,
                available,
            });
        }
        Ok(Self::from_fn(n, |k| {
            let mut acc = C::zero();
            for i in 0..=k {
                acc = acc.add(&self.coeffs[i].mul(&rhs.coeffs[k - i]));
            }
            acc
        }))
    }

    /// h with log h(x) = sum_m (b_m / m) x^m, from the weights b_m stored at
    /// index m of `self` (index 0 is ignored; constant factors are the
    /// caller's business). Exact in every domain.
    pub fn exp(&self, n: usize) -> Result<Self, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::OrderTooLarge {
                requested: n,
                available: self.order(),
            });
        }
        let mut a = Vec::with_capacity(n + 1);
        a.push(C::one());
        for r in 1..=n {
            let mut acc = C::zero();
            for m in 1..=r {
                acc = acc.add(&a[r - m].mul(&self.coeffs[m]));
            }
            a.push(acc.scale(&BigRational::new(1.into(), (r as i64).into())));
        }
        Ok(Series { coeffs: a })
    }

    /// Inverse of [`Series::exp`]: recovers the weights b_1..b_n from the
    /// coefficients of h. Requires the constant term to be exactly 1.
    pub fn log(&self, n: usize) -> Result<Self, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::OrderTooLarge {
                requested: n,
                available: self.order(),
            });
        }
        if self.coeffs[0] != C::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let mut b = Vec::with_capacity(n + 1);
        b.push(C::zero());
        for r in 1..=n {
            // b_r = r·a_r - sum_{m=1}^{r-1} a_{r-m} b_m, since a_0 = 1.
            let mut acc = self.coeffs[r].scale(&BigRational::from_integer((r as i64).into()));
            for m in 1..r {
                acc = acc.sub(&self.coeffs[r - m].mul(&b[m]));
            }
            b.push(acc);
        }
        Ok(Series { coeffs: b })
    }

    /// `self^alpha = exp(alpha · log self)` for rational exponents; requires
    /// constant term 1.
    pub fn pow(&self, alpha: &BigRational, n: usize) -> Result<Self, SeriesError> {
        self.log(n)?.scale_rat(alpha).exp(n)
    }

    /// Composition `self(inner)`, truncated at order `n`; the inner series
    /// must vanish at 0. Coefficients of `self` beyond its order are treated
    /// as zero (polynomial outer), while `inner` must carry order ≥ `n`.
    pub fn compose(&self, inner: &Self, n: usize) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTermNotZero);
        }
        if n > inner.order() {
            return Err(SeriesError::OrderTooLarge {
                requested: n,
                available: inner.order(),
            });
        }
        let d = self.order().min(n);
        let mut acc = Self::from_fn(n, |k| {
            if k == 0 {
                self.coeffs[d].clone()
            } else {
                C::zero()
            }
        });
        for k in (0..d).rev() {
            let mut next = acc.mul(inner, n)?;
            next.coeffs[0] = next.coeffs[0].add(&self.coeffs[k]);
            acc = next;
        }
        Ok(acc)
    }

    /// Horner evaluation of the truncated polynomial at a domain point.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}
