//! Finite Euler sums: sum_{k<=n-1} H_k/k and friends in closed harmonic form,
//! the shifted quadratic identity, and the cubic double-sum decomposition of
//! -S_n(3) - including a demonstration that the commonly printed inner limit
//! k-2 is off by exactly the boundary terms, while the k-1 variant is exact.

use bellforge::numeric;

fn main() {
    let reports = numeric::euler_sum_reports(60);
    for report in &reports {
        assert!(report.passed, "{}", report.line());
        println!("{}", report.line());
    }

    println!();
    println!("All five checks verified exactly for n <= 60:");
    println!("  - sum_(k<=n) H_k/k = (H^2 + H^(2))/2");
    println!("  - sum H_k^(2)/k + sum H_k/k^2 = H^(3) + H*H^(2)");
    println!("  - 2[H^(2) + sum_(k<=n-1) H_k/(k+1)] = H^(2) + H^2");
    println!("  - the cubic double-sum form of -S_n(3) with inner limit k-1");
    println!("  - the printed inner limit k-2 deviates from n = 3 on by");
    println!("    exactly the j = k-1 boundary terms it drops");
}
