//! Signed Stirling numbers of the first kind by three independent routes:
//! the product expansion of the falling factorial, a Bell-polynomial formula
//! over harmonic-number arguments, and a binomial double-sum.

use bellforge::stirling;

fn main() {
    println!("Triangle of s(n, k) for n <= 8:");
    for n in 1..=8 {
        let row = stirling::row_oracle(n);
        let rendered = row
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        println!("  n={n}: {rendered}");
    }

    // All three routes agree row by row.
    for n in 1..=12 {
        let report = stirling::three_route_report(n);
        assert!(report.passed, "{}", report.line());
    }
    println!("\nproduct, Bell, and double-sum routes agree for n <= 12");

    // Closed forms for the first four columns, e.g.
    // s(n, 2) = (-1)^n (n-1)! H_{n-1}.
    for n in 1..=12 {
        let row = stirling::row_oracle(n);
        for k in 1..=n.min(4) {
            let closed = stirling::closed_form(n, k);
            assert_eq!(
                closed,
                num_rational::BigRational::from_integer(row[k as usize].clone())
            );
        }
    }
    println!("harmonic-number closed forms match for k <= 4, n <= 12");

    // Row structure: alternating signs and row sums.
    let structure = stirling::structural_report(12);
    assert!(structure.passed);
    println!("{}", structure.line());
}
