//! The truncated power-series toolkit underneath everything else: products,
//! exponentials, logarithms, rational powers, and composition, all in exact
//! rational arithmetic with explicit truncation orders.

use bellforge::rational::{factorial, int, pow_i32, rat};
use bellforge::series::Series;
use num_rational::BigRational;

fn main() {
    let order = 12;

    // exp consumes logarithmic weights b_m: with b_m = 1 for all m >= 1 the
    // result is exp(-log(1 - x)) = 1/(1 - x), i.e. all coefficients 1.
    let geometric_weights = Series::from_fn(order, |m| int(i64::from(m > 0)));
    let geometric = geometric_weights.exp(order).unwrap();
    for k in 0..=order {
        assert_eq!(geometric.coeff(k), &int(1));
    }
    println!("exp of the unit weights rebuilds the geometric series");

    // log is the exact inverse of exp.
    let weights = Series::from_fn(order, |m| if m == 0 { int(0) } else { rat(1, m as i64 + 1) });
    let series = weights.exp(order).unwrap();
    assert_eq!(series.log(order).unwrap(), weights);
    println!("log . exp is the identity on weight sequences");

    // pow interpolates: the (-1) power of 1 - x is the geometric series again.
    let one_minus_x = Series::from_fn(order, |m| match m {
        0 => int(1),
        1 => int(-1),
        _ => int(0),
    });
    assert_eq!(one_minus_x.pow(&int(-1), order).unwrap(), geometric);
    // A square root, squared, returns the original series.
    let root = one_minus_x.pow(&rat(1, 2), order).unwrap();
    assert_eq!(root.mul(&root, order).unwrap(), one_minus_x);
    println!("pow handles negative and fractional exponents exactly");

    // Composition: exp(t) - 1 composed into exp rebuilds the Bell-number EGF,
    // sum_r B_r t^r / r!.
    let exp_t: Series<BigRational> = Series::from_fn(order, |m| {
        BigRational::from_integer(1.into()) / BigRational::from_integer(factorial(m as u64))
    });
    let exp_minus_one = exp_t.sub(&Series::one(order));
    let outer = exp_t.clone();
    let composed = outer.compose(&exp_minus_one, order).unwrap();
    let bell_numbers: Vec<BigRational> = (0..=order)
        .map(|r| composed.coeff(r) * BigRational::from_integer(factorial(r as u64)))
        .collect();
    println!(
        "Bell numbers from exp(exp(t) - 1): {}",
        bellforge::bell::render_values(&bell_numbers[..=6])
    );
    let ones = vec![int(1); order];
    assert_eq!(bell_numbers, bellforge::bell::sequence(order, &ones));
    println!("composition matches the Bell recurrence through order {order}");

    // Exact evaluation of the truncated series by Horner's rule.
    let at_quarter = geometric.eval(&rat(1, 4));
    let expected = (int(1) - pow_i32(&rat(1, 4), order as i32 + 1)) / rat(3, 4);
    assert_eq!(at_quarter, expected);
    println!("geometric series at t = 1/4 evaluates to {at_quarter} exactly");
}
