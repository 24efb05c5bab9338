//! Generalized harmonic numbers H_n^(m)(x) and the generating-function
//! identities that tie them to Stirling numbers: binomial series for the
//! Pochhammer ratio, log(1-z) powers over (1-z), and the trilogarithm-style
//! decomposition of coefficient triangles.

use bellforge::harmonic::{harmonic, harmonic_shifted, pochhammer};
use bellforge::rational::{int, rat};
use bellforge::stirling;

fn main() {
    println!("Classical harmonic numbers H_n and H_n^(2):");
    for n in 1..=8u64 {
        println!("  n={n}: H = {}, H^(2) = {}", harmonic(n, 1), harmonic(n, 2));
    }

    // The shifted variant sums n terms 1/(k + x) starting at k = 0.
    let x = rat(1, 2);
    println!("\nShifted values at x = {x}:");
    for m in 1..=3u32 {
        let value = harmonic_shifted(4, m, &x).unwrap();
        println!("  H_4^({m})(1/2) = {value}");
    }
    // H_1^(1)(x) is just 1/x.
    assert_eq!(harmonic_shifted(1, 1, &x).unwrap(), int(2));

    // Shifts landing on a nonpositive integer hit a pole and say so.
    let pole = harmonic_shifted(3, 1, &int(-2)).unwrap_err();
    println!("\npole detection: {pole}");

    // Pochhammer symbols back the beta-function prefactors used elsewhere.
    assert_eq!(pochhammer(&x, 3), rat(15, 8)); // (1/2)(3/2)(5/2)
    println!("(1/2)_3 = {}", pochhammer(&x, 3));

    // Generating-function identities connecting H_n^(m)(x) to Stirling rows,
    // checked as exact coefficient comparisons through order 16.
    println!("\nGenerating-function identities at shifts 1, 1/2, 3/2:");
    for x in [int(1), rat(1, 2), rat(3, 2)] {
        let reports = stirling::generating_function_reports(&x, 16).unwrap();
        for report in reports {
            assert!(report.passed, "{}", report.line());
            println!("  {}", report.line());
        }
    }
}
