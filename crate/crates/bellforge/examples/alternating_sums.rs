//! Alternating binomial sums sum_k C(n,k) (-1)^k / (k+x)^(r+1) and their
//! closed forms: the Bell-polynomial formula over shifted harmonic numbers,
//! its reflected variant, the x = 0 family S_n(r) with its Euler-style closed
//! forms, and the exponential generating identities that package them.

use bellforge::altsum;
use bellforge::harmonic::harmonic;
use bellforge::rational::{int, rat};

fn main() {
    // Brute force vs the Bell closed form at a rational shift.
    let x = rat(1, 2);
    println!("sum_k C(n,k)(-1)^k/(k + 1/2)^(r+1) for n = 4:");
    for r in 0..=3u32 {
        let brute = altsum::brute(4, r, &x).unwrap();
        let bell = altsum::coppo_bell(4, r, &x).unwrap();
        let reflected = altsum::coppo_bell_reflected(4, r, &x).unwrap();
        assert_eq!(brute, bell);
        assert_eq!(brute, reflected);
        println!("  r={r}: {brute}");
    }
    println!("both Bell routes agree with the brute-force sum");

    // For x > 0 every value is strictly positive.
    let positivity = altsum::positivity_report(8, 4, &x);
    assert!(positivity.passed);
    println!("{}", positivity.line());

    // The x = 0 family S_n(r) = sum_{k=1}^n C(n,k)(-1)^k / k^r has closed
    // forms in ordinary harmonic numbers.
    println!("\n-S_n(r) closed forms, n = 6:");
    let n = 6u64;
    let h1 = harmonic(n, 1);
    let h2 = harmonic(n, 2);
    let h3 = harmonic(n, 3);
    let s1 = -altsum::snr_bell(n, 1);
    let s2 = -altsum::snr_bell(n, 2);
    let s3 = -altsum::snr_bell(n, 3);
    assert_eq!(s1, h1);
    assert_eq!(s2, (&h1 * &h1 + &h2) / int(2));
    assert_eq!(
        s3,
        &h1 * &h1 * &h1 / int(6) + &h1 * &h2 / int(2) + &h3 / int(3)
    );
    println!("  r=1: {s1} = H_6");
    println!("  r=2: {s2} = (H^2 + H^(2))/2");
    println!("  r=3: {s3} = H^3/6 + H H^(2)/2 + H^(3)/3");

    // The whole family at once: sum_r (-S_n(r)) t^r = exp(sum_m H_n^(m) t^m / m),
    // and the Pochhammer-product forms of the same generating function.
    for n in 1..=6 {
        assert!(altsum::exp_identity_report(n, 10).passed);
        assert!(altsum::wilf_product_report(n, 10).passed);
        assert!(altsum::reflection_product_report(n, 10).passed);
    }
    println!("\nexponential and product generating identities hold for n <= 6");

    // Resummation over n against the polylogarithm expansion.
    for r in 0..=4 {
        let report = altsum::polylog_identity_report(r, 12);
        assert!(report.passed, "{}", report.line());
    }
    println!("polylogarithm resummation holds for r <= 4");
}
