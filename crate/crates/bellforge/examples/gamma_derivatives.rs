//! Derivatives of the gamma function at 1 as complete Bell polynomials in
//! gamma and zeta values, validated against direct quadrature of the
//! log-moment integrals and against a Stirling-series reference; the same
//! machinery drives the series for Barnes G and its reciprocal.

use bellforge::constants::{gamma_log_moment, ZetaConstants};
use bellforge::numeric;

fn main() {
    // Float gamma/zeta constants, bootstrapped from quadrature and direct
    // summation - no closed-form values are assumed.
    let constants = ZetaConstants::standard(40);
    println!("gamma ~ {:.15}", constants.gamma());
    println!("zeta(3) ~ {:.15}", constants.zeta(3));

    // Gamma^(m)(1) = Y_m(x_j) with x_j = (-1)^j (j-1)! zeta*(j), where
    // zeta*(1) means gamma. The log-moment integrals give the same numbers.
    println!("\nGamma^(m)(1), Bell form vs quadrature:");
    let derivs = numeric::gamma_derivs_at_one(6, &constants);
    for m in 1..=6u32 {
        let integral = gamma_log_moment(m, 1e-11).unwrap();
        let bell_value = derivs[m as usize];
        println!(
            "  m={m}: {bell_value:+.12}  (quadrature {:+.12})",
            integral.value
        );
        let report = numeric::gamma_deriv_report(m, &constants);
        assert!(report.passed, "{}", report.line());
    }

    // Gamma''(1) = gamma^2 + zeta(2) in closed form.
    let closed = constants.gamma().powi(2) + std::f64::consts::PI.powi(2) / 6.0;
    assert!((derivs[2] - closed).abs() < 1e-8);
    println!("Gamma''(1) matches gamma^2 + pi^2/6");

    // Signs alternate: (-1)^m Gamma^(m)(1) > 0.
    assert!(numeric::gamma_deriv_sign_report(8, &constants).passed);
    println!("sign pattern (-1)^m Gamma^(m)(1) > 0 holds through m = 8");

    // The full Taylor series of Gamma(1+x) and 1/Gamma(1+x) from the same
    // weights, evaluated against a Stirling-series reference.
    for report in numeric::gamma_series_reports(&constants) {
        assert!(report.passed, "{}", report.line());
        println!("{}", report.line());
    }

    // Barnes G: G'(1) from the series, the reciprocal's sign pattern, and the
    // functional equation G(1+z) = Gamma(z) G(z) at z = 1/2.
    println!();
    for report in numeric::barnes_reports(8, &constants) {
        assert!(report.passed, "{}", report.line());
        println!("{}", report.line());
    }
}
