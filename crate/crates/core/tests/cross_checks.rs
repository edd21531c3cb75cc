//! Cross-module identities: every polynomial/series route checked against
//! an algebraically independent one.

use hcalc_core::fractional::hermite_neg;
use hcalc_core::hermite::{hermite2, quartic_exp_derivative, HermitePair};
use hcalc_core::integrals::{integral_gauss_quartic, integral_gauss_quartic_k};
use hcalc_core::quadrature::{integrate_real_line, QuadratureConfig};
use hcalc_core::special::{bessel_k, parabolic_cylinder_d};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// Factorial helper local to the tests.
fn fact(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[test]
fn operator_expansion_matches_gh4_derivative() {
    // d^n/dx^n e^{-(g x^2 + b x^4)} expanded through shifted Hermite
    // polynomials: (-1)^n n! sum_r (-1)^r (2x)^{n-2r}/((n-2r)! r!)
    //              H_{n-r}(g + 2 b x^2, -b) e^{-(g x^2 + b x^4)}
    // must agree with the closed four-argument form.
    for n in 0..=8u32 {
        for (g, b) in [(1.0f64, 0.5f64), (0.5, 1.0), (2.0, 0.25)] {
            for x in [0.3, 0.8, 1.4] {
                let weight = (-(g * x * x + b * x.powi(4))).exp();
                let shifted = HermitePair::new(g + 2.0 * b * x * x, -b);
                let mut sum = 0.0;
                for r in 0..=(n / 2) {
                    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
                    sum += sign * (2.0 * x).powi((n - 2 * r) as i32)
                        / (fact(n - 2 * r) * fact(r))
                        * hermite2(n - r, shifted);
                }
                let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
                let expansion = parity * fact(n) * sum * weight;
                let direct = quartic_exp_derivative(n, g, b, x);
                let scale = direct.abs().max(weight);
                assert!(
                    (expansion - direct).abs() <= 1e-9 * scale,
                    "n={n} g={g} b={b} x={x}: {expansion} vs {direct}"
                );
            }
        }
    }
}

#[test]
fn quartic_gaussian_reproduces_oracle_through_fractional_hermite() {
    // sqrt(pi) H_{-1/2}(gamma, -beta) is the quartic Gaussian integral
    let cfg = QuadratureConfig::default();
    for (g, b) in [(1.0f64, 1.0f64), (0.5, 2.0), (2.0, 0.5), (0.0, 1.0)] {
        let via_hermite = std::f64::consts::PI.sqrt() * hermite_neg(-0.5, g, b).unwrap();
        let oracle = integrate_real_line(|x| (-(g * x * x + b * x.powi(4))).exp(), &cfg)
            .unwrap()
            .value;
        assert!(
            rel(via_hermite, oracle) < 1e-8,
            "gamma={g} beta={b}: {via_hermite} vs {oracle}"
        );
        assert!(rel(integral_gauss_quartic(g, b).unwrap(), oracle) < 1e-9);
    }
}

#[test]
fn d_form_k_form_bridge_over_grid() {
    // H_{-1/2}(gamma, beta) rewritten through K_{1/4} matches the D-form
    for g in [0.5, 1.0, 2.0] {
        for b in [0.5, 1.0, 2.0] {
            let d_form = integral_gauss_quartic(g, b).unwrap();
            let k_form = integral_gauss_quartic_k(g, b).unwrap();
            assert!(
                (d_form - k_form).abs() <= 1e-9 * d_form.abs(),
                "gamma={g} beta={b}: {d_form} vs {k_form}"
            );
        }
    }
}

#[test]
fn pcd_consistent_with_besselk_identity_at_hermite_arguments() {
    // D_{-1/2}(z) = sqrt(z/2pi) K_{1/4}(z^2/4) exercised at the arguments
    // the quartic integrals actually produce
    for (g, b) in [(1.0f64, 0.5f64), (2.0, 1.0), (0.5, 0.125)] {
        let z: f64 = g / (2.0 * b).sqrt();
        let lhs = parabolic_cylinder_d(-0.5, z).unwrap();
        let rhs = (z / std::f64::consts::TAU).sqrt() * bessel_k(0.25, z * z / 4.0).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs(), "z={z}");
    }
}
