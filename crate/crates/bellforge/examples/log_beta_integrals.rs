//! Log-power integrals against exact Bell values: the beta-moment integral
//! int_0^1 t^(x-1) (1-t)^(n-1) log^r t dt equals an exact rational in the
//! shifted harmonic numbers times nothing transcendental, so Gauss-Legendre
//! quadrature can be checked digit for digit. The same integrals bridge to
//! the alternating sums, to Hurwitz zeta values, and to a telescoping
//! Pochhammer series.

use bellforge::numeric;
use bellforge::rational::{int, rat, to_f64};

fn main() {
    // The exact value is rational: for n = 2, r = 1, x = 1 it is -3/4.
    let exact = numeric::log_beta_exact(2, 1, &int(1)).unwrap();
    assert_eq!(exact, rat(-3, 4));
    let quad = numeric::log_beta_integral(2, 1, &int(1)).unwrap();
    println!(
        "int_0^1 (1-t) log t dt = {exact} (quadrature {:+.15}, est err {:.1e})",
        quad.value, quad.estimated_error
    );

    println!("\nquadrature vs exact Bell value:");
    for x in [int(1), rat(1, 2), rat(3, 2)] {
        for n in 1..=4u64 {
            for r in 0..=3u32 {
                let report = numeric::log_beta_report(n, r, &x);
                assert!(report.passed, "{}", report.line());
            }
        }
        println!("  x = {x}: n <= 4, r <= 3 all agree");
    }

    // Bridge to alternating sums: (-1)^(r+1) n int_0^infty u^r e^(-u)
    // (1-e^(-u))^(n-1) du = r! S_n(r).
    for n in 1..=5 {
        for r in 1..=3 {
            let report = numeric::integral_sum_bridge_report(n, r);
            assert!(report.passed, "{}", report.line());
        }
    }
    println!("\nintegral bridge to S_n(r) holds for n <= 5, r <= 3");

    // Hurwitz zeta: int_0^1 t^(a-1) log^r t / (1-t) dt = (-1)^r r! zeta(r+1, a).
    for a in [int(1), int(2), rat(1, 2)] {
        for r in 1..=3 {
            let report = numeric::hurwitz_integral_report(r, &a);
            assert!(report.passed, "{}", report.line());
        }
    }
    println!("Hurwitz-zeta integral representation holds for r <= 3, a in {{1, 2, 1/2}}");

    // The telescoping Pochhammer series sums exactly: for a = 2 the partial
    // sums are T/(T+1), with an exact rational tail.
    let telescope = numeric::norlund_telescope_report(2, 10);
    assert!(telescope.passed);
    println!("\n{}", telescope.line());
    println!(
        "partial sum at T = 10 is {} ~ {:.6}",
        telescope.params["partial"],
        to_f64(&bellforge::rational::parse_rational(&telescope.params["partial"]).unwrap())
    );
}
