//! Complete Bell polynomials from first principles: evaluate Y_r over the
//! partition sum, over the binomial recurrence, and through the exponential
//! generating function, then exercise the scaling and sign laws.

// Index loops over r mirror the Y_r indexing.
#![allow(clippy::needless_range_loop)]

use bellforge::bell;
use bellforge::rational::{int, pow_i32, rat, sign};
use num_rational::BigRational;

fn main() {
    // Y_r(1, 1, ..., 1) are the Bell numbers: 1, 1, 2, 5, 15, 52, 203, ...
    let ones = vec![int(1); 8];
    let bell_numbers = bell::sequence(8, &ones);
    println!("Bell numbers via the recurrence:");
    println!("  {}", bell::render_values(&bell_numbers));

    // The partition sum gives the same values term by term.
    for r in 0..=8 {
        assert_eq!(bell::partition_sum(r, &ones), bell_numbers[r]);
    }
    println!("  partition sum agrees for r <= 8");

    // A rational argument vector, checked against the printed expansions of
    // Y_1..Y_5 and the generating-function route.
    let xs = vec![rat(1, 2), rat(-3, 4), int(2), rat(5, 7), rat(-1, 6)];
    println!("\nY_r at x = (1/2, -3/4, 2, 5/7, -1/6):");
    let values = bell::sequence(5, &xs);
    for (r, value) in values.iter().enumerate() {
        println!("  Y_{r} = {value}");
    }
    for r in 1..=5 {
        assert_eq!(bell::printed_form(r, &xs), values[r]);
    }
    let egf = bell::egf_check(&xs, 5);
    assert!(egf.passed);
    println!("  printed expansions and EGF route agree");

    // Scaling law: Y_r(a x_1, a^2 x_2, ..., a^r x_r) = a^r Y_r(x_1, ..., x_r).
    let a = rat(3, 2);
    let scaled: Vec<BigRational> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| pow_i32(&a, i as i32 + 1) * x)
        .collect();
    for r in 0..=5 {
        assert_eq!(
            bell::value(r, &scaled),
            pow_i32(&a, r as i32) * bell::value(r, &xs)
        );
    }
    println!("\nscaling law holds at a = {a}");

    // Sign law: the a = -1 case flips Y_r by (-1)^r.
    let flipped: Vec<BigRational> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| sign(i as u64 + 1) * x)
        .collect();
    for r in 0..=5 {
        assert_eq!(bell::value(r, &flipped), sign(r as u64) * bell::value(r, &xs));
    }
    println!("sign law holds");
}
