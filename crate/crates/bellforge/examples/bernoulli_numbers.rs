//! Bernoulli numbers (B_1 = -1/2 convention) from the defining recurrence,
//! cross-checked against the reciprocal-series oracle, plus the log-series,
//! self-convolution, and even-index summation identities built on them.

use bellforge::bernoulli;
use bellforge::rational::rat;

fn main() {
    let table = bernoulli::bernoulli(12);
    println!("B_0..B_12:");
    for (k, b) in table.iter().enumerate() {
        println!("  B_{k} = {b}");
    }

    // Independent oracle: the (-1) power of sum_k t^k/(k+1)! gives the same
    // numbers through its EGF coefficients.
    assert_eq!(table, bernoulli::bernoulli_egf_oracle(12));
    println!("\nrecurrence and reciprocal-series oracle agree");

    // A classic spot value further down the table.
    assert_eq!(bernoulli::bernoulli(20)[20], rat(-174_611, 330));
    println!("B_20 = -174611/330");

    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1 (the defining property).
    let defining = bernoulli::defining_sum_report(20);
    assert!(defining.passed);
    println!("{}", defining.line());

    // log of the Bernoulli EGF has coefficients (-1)^(m+1) B_m / m!; its
    // x^2 coefficient is -1/24.
    let log_series = bernoulli::ramanujan_log_report(20);
    assert!(log_series.passed);
    println!("{}", log_series.line());

    // The quadratic (self-convolution) recurrence determines B_{r+1} from
    // earlier values, and the even-index sum identity closes the circle.
    assert!(bernoulli::self_convolution_report(10).passed);
    assert!(bernoulli::even_index_sum_report(10).passed);
    println!("self-convolution and even-index summation identities hold");
}
