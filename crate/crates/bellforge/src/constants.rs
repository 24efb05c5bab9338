//! Floating-point zeta values and the Euler–Mascheroni constant, built from
//! scratch at startup: zeta(m) by compensated direct summation with an
//! Euler–Maclaurin tail, and γ bootstrapped as the negative of the m = 1
//! log-moment integral ∫ e^{-t} log t dt. No decimal constants are embedded.

use crate::quad::{integrate_decaying, QuadError, QuadratureResult};
use crate::rational::to_f64;
use crate::report::{p, IdentityReport};
use crate::zeta_even::zeta_even_rational;

/// ∫_0^∞ e^{-t} log^m t dt, split at t = 1; the (0,1] part is mapped by
/// t = e^{-u} onto a smooth decaying integrand on [0, ∞).
pub fn gamma_log_moment(m: u32, tol: f64) -> Result<QuadratureResult, QuadError> {
    let mi = m as i32;
    let upper = integrate_decaying(&|t: f64| (-t).exp() * t.ln().powi(mi), 1.0, tol / 2.0)?;
    let lower = integrate_decaying(
        &|u: f64| (-u).powi(mi) * (-u).exp() * (-(-u).exp()).exp(),
        0.0,
        tol / 2.0,
    )?;
    Ok(QuadratureResult {
        value: upper.value + lower.value,
        estimated_error: upper.estimated_error + lower.estimated_error,
        evaluations: upper.evaluations + lower.evaluations,
    })
}

/// zeta(m) for m ≥ 2 by summing K terms smallest-first with compensation,
/// plus the Euler–Maclaurin tail K^{1-m}/(m-1) - K^{-m}/2 + m·K^{-m-1}/12;
/// the next omitted term is O(K^{-m-3}), far below f64 resolution.
fn zeta_direct(m: u32) -> f64 {
    const K: u64 = 100_000;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in (1..=K).rev() {
        let term = (k as f64).powi(-(m as i32));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let kf = K as f64;
    sum + kf.powi(1 - m as i32) / (m as f64 - 1.0) - kf.powi(-(m as i32)) / 2.0
        + m as f64 * kf.powi(-(m as i32) - 1) / 12.0
}

/// Read-only table of zeta(2..=max_m) and γ, built once.
pub struct ZetaConstants {
    gamma: f64,
    zetas: Vec<f64>,
}

impl ZetaConstants {
    pub fn standard(max_m: u32) -> Self {
        assert!(max_m >= 2);
        let gamma = -gamma_log_moment(1, 1e-12)
            .expect("the log-moment integrand is smooth")
            .value;
        let zetas = (2..=max_m).map(zeta_direct).collect();
        ZetaConstants { gamma, zetas }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn max_m(&self) -> u32 {
        self.zetas.len() as u32 + 1
    }

    pub fn zeta(&self, m: u32) -> f64 {
        assert!(m >= 2, "zeta(1) diverges; use zeta_or_gamma for the γ convention");
        self.zetas[(m - 2) as usize]
    }

    /// The argument convention for the Γ-derivative Bell forms: ζ(1) := γ.
    pub fn zeta_or_gamma(&self, m: u32) -> f64 {
        if m == 1 {
            self.gamma
        } else {
            self.zeta(m)
        }
    }

    /// Even entries against the exact q_m·π^{2m} (1e-14 relative).
    pub fn even_consistency_report(&self) -> IdentityReport {
        let n_max = (self.max_m() / 2) as usize;
        let q = zeta_even_rational(n_max);
        let mut worst = 0.0f64;
        for (i, qm) in q.iter().enumerate() {
            let m = 2 * (i + 1) as u32;
            let exact = to_f64(qm) * std::f64::consts::PI.powi(m as i32);
            let rel = ((self.zeta(m) - exact) / exact).abs();
            worst = worst.max(rel);
        }
        IdentityReport::float(
            "zeta-even-float-consistency",
            &[("max-m", p(self.max_m()))],
            worst,
            0.0,
            1e-14,
        )
    }

    /// zeta(m) strictly decreases toward 1 as m grows.
    pub fn monotone_report(&self) -> IdentityReport {
        let ok = self.zetas.windows(2).all(|w| w[0] > w[1] && w[1] > 1.0);
        IdentityReport::exact_rendered(
            "zeta-float-monotone",
            &[("max-m", p(self.max_m()))],
            "strictly decreasing toward 1".to_string(),
            "expected".to_string(),
            ok,
        )
    }
}
