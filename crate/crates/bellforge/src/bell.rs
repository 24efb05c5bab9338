//! Complete Bell polynomials Y_r(x_1, ..., x_r).
//!
//! Two independent evaluation routes are kept deliberately separate:
//!
//! * [`partition_sum`] — the ground truth. Sums over all integer partitions
//!   of r encoded as multiplicity vectors (k_1, ..., k_r) with sum j·k_j = r,
//!   weighting each by r! / (k_1!···k_r!) · prod_j (x_j/j!)^{k_j}.
//! * [`sequence`] — the binomial convolution
//!   Y_{r+1} = sum_{k=0}^{r} C(r,k) Y_{r-k} x_{k+1}, which produces the whole
//!   prefix Y_0..Y_r in O(r^2) ring operations.
//!
//! Both are generic over the coefficient domain. A third route — reading
//! Y_n off the exponential generating function exp(sum x_j t^j/j!) — backs
//! the [`egf_check`] report.

use crate::coeff::Coeff;
use crate::rational::{binomial, factorial};
use crate::report::{p, IdentityReport};
use crate::series::Series;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Streaming iterator over the partitions of `r` as multiplicity vectors of
/// length `r`: entry `j-1` counts the parts equal to `j`. Partitions are
/// produced largest-part-first, i.e. in reverse lexicographic order on the
/// non-increasing part lists, starting from `[r]` and ending at `[1, ..., 1]`.
pub struct Partitions {
    r: usize,
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

/// All partitions of `r`. For `r = 0` yields exactly the empty partition.
pub fn partitions(r: usize) -> Partitions {
    Partitions {
        r,
        parts: Vec::new(),
        started: false,
        done: false,
    }
}

impl Partitions {
    fn multiplicities(&self) -> Vec<usize> {
        let mut k = vec![0usize; self.r];
        for &part in &self.parts {
            k[part - 1] += 1;
        }
        k
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.r == 0 {
                self.done = true;
                return Some(Vec::new());
            }
            self.parts = vec![self.r];
            return Some(self.multiplicities());
        }
        // Shrink the rightmost part larger than 1, then repack the remainder
        // greedily with parts no larger than the shrunken value.
        let Some(i) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let value = self.parts[i] - 1;
        let mut remainder = self.parts[i..].iter().sum::<usize>();
        self.parts.truncate(i);
        while remainder >= value {
            self.parts.push(value);
            remainder -= value;
        }
        if remainder > 0 {
            self.parts.push(remainder);
        }
        Some(self.multiplicities())
    }
}

fn pow_c<C: Coeff>(x: &C, e: usize) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.mul(x);
    }
    acc
}

/// Y_r by direct summation over partitions. Needs `xs[0..r]` = x_1..x_r.
pub fn partition_sum<C: Coeff>(r: usize, xs: &[C]) -> C {
    assert!(xs.len() >= r, "need x_1..x_{r}");
    let r_fact = factorial(r as u64);
    let mut total = C::zero();
    for k in partitions(r) {
        // r! / (k_1!···k_r! · (1!)^{k_1} ··· (r!)^{k_r}) is the number of set
        // partitions with this block profile — an integer, carried exactly.
        let mut denom = BigInt::from(1);
        let mut term = C::one();
        for (j, &kj) in k.iter().enumerate() {
            if kj == 0 {
                continue;
            }
            denom *= factorial(kj as u64);
            denom *= factorial((j + 1) as u64).pow(kj as u32);
            term = term.mul(&pow_c(&xs[j], kj));
        }
        let weight = BigRational::new(r_fact.clone(), denom);
        total = total.add(&term.scale(&weight));
    }
    total
}

/// Y_0..Y_r via the binomial convolution. Needs `xs[0..r]` = x_1..x_r.
pub fn sequence<C: Coeff>(r: usize, xs: &[C]) -> Vec<C> {
    assert!(xs.len() >= r, "need x_1..x_{r}");
    let mut y = Vec::with_capacity(r + 1);
    y.push(C::one());
    for s in 0..r {
        // Y_{s+1} = sum_{k=0}^{s} C(s,k) Y_{s-k} x_{k+1}
        let mut acc = C::zero();
        for k in 0..=s {
            let c = BigRational::from_integer(binomial(s as u64, k as i64));
            acc = acc.add(&y[s - k].mul(&xs[k]).scale(&c));
        }
        y.push(acc);
    }
    y
}

/// Y_r alone via the recurrence route.
pub fn value<C: Coeff>(r: usize, xs: &[C]) -> C {
    sequence(r, xs).pop().expect("sequence is never empty")
}

/// Checks the generating-function route: the order-n exponential of the
/// weights b_j = x_j/(j-1)! must reproduce Y_j/j! for every j ≤ n, i.e.
/// exp(sum_j x_j t^j/j!) = sum_n Y_n t^n/n!.
pub fn egf_check(xs: &[BigRational], n: usize) -> IdentityReport {
    assert!(xs.len() >= n, "need x_1..x_{n}");
    let b = Series::from_fn(n, |m| {
        if m == 0 {
            BigRational::from_integer(0.into())
        } else {
            // log h = sum_j x_j t^j / j!, so b_m = m·x_m/m! = x_m/(m-1)!.
            &xs[m - 1] / BigRational::from_integer(factorial(m as u64 - 1))
        }
    });
    let a = b.exp(n).expect("order matches by construction");
    let from_egf: Vec<BigRational> = (0..=n)
        .map(|k| a.coeff(k) * BigRational::from_integer(factorial(k as u64)))
        .collect();
    let from_recurrence = sequence(n, xs);
    IdentityReport::exact_rendered(
        "bell-egf-route",
        &[("order", p(n))],
        render_values(&from_egf),
        render_values(&from_recurrence),
        from_egf == from_recurrence,
    )
}

/// Render a value list as `[v0, v1, ...]` for report sides.
pub fn render_values<T: std::fmt::Display>(vs: &[T]) -> String {
    let inner = vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
    format!("[{inner}]")
}

/// The printed expansions of Y_1..Y_5, used as an independent cross-check of
/// both evaluation routes at arbitrary argument vectors.
pub fn printed_form(r: usize, xs: &[BigRational]) -> BigRational {
    assert!((1..=5).contains(&r), "printed forms cover Y_1..Y_5");
    assert!(xs.len() >= r);
    let x = |j: usize| xs[j - 1].clone();
    let n = |v: i64| BigRational::from_integer(v.into());
    match r {
        1 => x(1),
        2 => x(1) * x(1) + x(2),
        3 => x(1) * x(1) * x(1) + n(3) * x(1) * x(2) + x(3),
        4 => {
            x(1) * x(1) * x(1) * x(1)
                + n(6) * x(1) * x(1) * x(2)
                + n(4) * x(1) * x(3)
                + n(3) * x(2) * x(2)
                + x(4)
        }
        _ => {
            x(1) * x(1) * x(1) * x(1) * x(1)
                + n(10) * x(1) * x(1) * x(1) * x(2)
                + n(10) * x(1) * x(1) * x(3)
                + n(15) * x(1) * x(2) * x(2)
                + n(5) * x(1) * x(4)
                + n(10) * x(2) * x(3)
                + x(5)
        }
    }
}
