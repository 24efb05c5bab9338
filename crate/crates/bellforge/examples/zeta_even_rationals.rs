//! The rationals q_n with zeta(2n) = q_n pi^(2n), generated by a recurrence
//! that never leaves the rationals, linked to Bernoulli numbers, and checked
//! structurally through the sine-product parity argument carried out in the
//! polynomial ring Q[P] with P standing for pi^2.

use bellforge::rational::{rat, to_f64};
use bellforge::zeta_even;

fn main() {
    println!("zeta(2n) = q_n pi^(2n):");
    for (n, q, float_value) in zeta_even::zeta_even_table(8) {
        let rendered = format!("{q}");
        println!("  q_{n} = {rendered:>14}    zeta({}) ~ {float_value:.15}", 2 * n);
    }

    let q = zeta_even::zeta_even_rational(7);
    assert_eq!(q[0], rat(1, 6));
    assert_eq!(q[1], rat(1, 90));
    assert_eq!(q[2], rat(1, 945));
    assert_eq!(q[6], rat(2, 18_243_225));

    // Euler's quartic relation: zeta(2)^2 - zeta(4) = pi^4 (q_1^2 - q_2) and
    // q_1^2 - q_2 = 1/60 exactly.
    assert_eq!(&q[0] * &q[0] - &q[1], rat(1, 60));
    println!("\nq_1^2 - q_2 = 1/60 (Euler's zeta(2)^2 relation)");

    // Link to Bernoulli numbers: q_n = (-1)^(n+1) 2^(2n) B_{2n} / (2 (2n)!).
    let link = zeta_even::bernoulli_link_report(10);
    assert!(link.passed);
    println!("{}", link.line());

    // Parity structure: exponentiating the q_n weights in Q[P] reproduces the
    // sine-product coefficients, with odd coefficients vanishing identically.
    let parity = zeta_even::sine_product_parity_report(8);
    assert!(parity.passed);
    println!("{}", parity.line());

    // The float column is strictly decreasing toward 1.
    assert!(zeta_even::monotone_report(12).passed);
    let tail = &zeta_even::zeta_even_table(12)[11];
    println!("zeta(24) - 1 ~ {:.3e}", to_f64(&tail.1) * std::f64::consts::PI.powi(24) - 1.0);
}
