//! Hermite functions of non-integer and negative index.
//!
//! Three routes are provided and cross-checked against one another:
//! a cosine-type integral valid for nu > -1, a power series in the
//! x >> y regime with smallest-term truncation, and the parabolic
//! cylinder realization that covers every negative order.

use crate::error::{Error, Result};
use crate::quadrature::{integrate_half_line, QuadratureConfig};
use crate::series::{rounding_floor, SeriesResult};
use crate::special::parabolic_cylinder_d_scaled;

/// H_nu(x, -y) by the integral representation
/// y^{nu/2} e^{x^2/4y}/sqrt(pi) int_0^inf e^{-t^2/4} t^nu
/// cos(x t / (2 sqrt y) - pi nu / 2) dt.
///
/// Restricted to nu > -1, where t^nu is integrable at the origin; lower
/// orders go through `hermite_neg`.
pub fn hermite_frac_integral(nu: f64, x: f64, y: f64) -> Result<f64> {
    if y <= 0.0 {
        return Err(Error::Domain("hermite_frac_integral requires y > 0"));
    }
    if nu <= -1.0 {
        return Err(Error::Domain(
            "hermite_frac_integral requires nu > -1; use hermite_neg below that",
        ));
    }
    let freq = x / (2.0 * y.sqrt());
    let phase = std::f64::consts::FRAC_PI_2 * nu;
    let cfg = QuadratureConfig {
        rel_tol: 1e-12,
        ..QuadratureConfig::default()
    };
    let q = integrate_half_line(
        |t| (-0.25 * t * t).exp() * t.powf(nu) * (freq * t - phase).cos(),
        &cfg,
    )?;
    Ok(y.powf(0.5 * nu) * (x * x / (4.0 * y)).exp() / std::f64::consts::PI.sqrt() * q.value)
}

/// H_nu(x, -y) by the descending power series
/// Gamma(nu+1) sum_r x^{nu-2r} (-y)^r / (Gamma(nu+1-2r) r!),
/// summed with the smallest-term rule: stop at the index minimizing
/// |term|, report the first omitted term as the error estimate.
///
/// For integer nu the 1/Gamma poles terminate the sum exactly. Away from
/// x >> |y| the estimate grows and `converged` goes false against `tol`.
pub fn hermite_frac_series(nu: f64, x: f64, y: f64, tol: f64) -> Result<SeriesResult> {
    if x <= 0.0 {
        return Err(Error::Domain("hermite_frac_series requires x > 0"));
    }
    const MAX_TERMS: usize = 400;
    // non-negative integer nu: the 1/Gamma poles cut the sum to an exact
    // polynomial, so every term must be taken whether it grows or not
    let is_polynomial = nu >= 0.0 && nu == nu.floor();
    // r = 0 term: Gamma(nu+1) x^nu / Gamma(nu+1) = x^nu
    let mut term = x.powf(nu);
    let mut sum = term;
    let mut abs_sum = term.abs();
    let mut terms_used = 1usize;
    let mut omitted = 0.0f64;
    let mut r = 0u32;
    while terms_used < MAX_TERMS {
        let rf = r as f64;
        // Gamma-ratio recurrence; (nu - 2r)(nu - 2r - 1) hits zero at
        // integer nu and ends the series exactly
        let next = term * (nu - 2.0 * rf) * (nu - 2.0 * rf - 1.0) * (-y) / ((rf + 1.0) * x * x);
        if next == 0.0 {
            break;
        }
        if !is_polynomial && next.abs() >= term.abs() {
            omitted = next.abs();
            break;
        }
        sum += next;
        abs_sum += next.abs();
        term = next;
        terms_used += 1;
        r += 1;
    }
    let error_estimate = omitted.max(rounding_floor(abs_sum));
    Ok(SeriesResult {
        value: sum,
        terms_used,
        last_term: term.abs(),
        converged: error_estimate <= tol * sum.abs().max(f64::MIN_POSITIVE),
        error_estimate,
    })
}

/// H_nu(x, -y) for nu < 0 through the parabolic cylinder function:
/// (2y)^{nu/2} e^{x^2/8y} D_nu(x / sqrt(2y)).
///
/// The exponential prefactor cancels e^{-z^2/4} inside D analytically;
/// the scaled D form keeps that cancellation exact in floating point.
pub fn hermite_neg(nu: f64, x: f64, y: f64) -> Result<f64> {
    if nu >= 0.0 {
        return Err(Error::Domain("hermite_neg requires nu < 0"));
    }
    if y <= 0.0 {
        return Err(Error::Domain("hermite_neg requires y > 0"));
    }
    // e^{x^2/8y} and the e^{-z^2/4} inside D cancel identically at
    // z = x/sqrt(2y); the scaled D realizes that cancellation exactly
    let d = parabolic_cylinder_d_scaled(nu, x / (2.0 * y).sqrt())?;
    Ok((2.0 * y).powf(0.5 * nu) * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{hermite2, HermitePair};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn integral_route_recovers_h0() {
        for (x, y) in [(0.5, 1.0), (2.0, 0.5), (0.0, 2.0)] {
            let v = hermite_frac_integral(0.0, x, y).unwrap();
            assert!((v - 1.0).abs() < 1e-10, "x={x} y={y}: {v}");
        }
    }

    #[test]
    fn integral_route_matches_integer_index() {
        for n in 0..=6u32 {
            for x in [0.5, 1.0, 2.0] {
                for y in [0.5, 1.0] {
                    let frac = hermite_frac_integral(n as f64, x, y).unwrap();
                    let exact = hermite2(n, HermitePair::new(x, -y));
                    // scale guards the exact zeros, e.g. H_2(1, -1/2)
                    let scale = exact.abs().max(1.0);
                    assert!(
                        (frac - exact).abs() < 1e-8 * scale,
                        "n={n} x={x} y={y}: {frac} vs {exact}"
                    );
                }
            }
        }
        assert!(rel(hermite_frac_integral(2.0, 1.0, 1.0).unwrap(), -1.0) < 1e-9);
    }

    #[test]
    fn integral_and_d_routes_agree() {
        for nu in [-0.9, -0.5, -0.1] {
            let mut x = 0.5;
            while x <= 3.0 {
                for y in [0.5, 1.0, 2.0] {
                    let a = hermite_frac_integral(nu, x, y).unwrap();
                    let b = hermite_neg(nu, x, y).unwrap();
                    assert!(rel(a, b) < 1e-8, "nu={nu} x={x} y={y}: {a} vs {b}");
                }
                x += 0.5;
            }
        }
    }

    #[test]
    fn neg_route_base_case() {
        // (2 * 0.5)^{-1/2} e^0 D_{-1}(0) = sqrt(pi/2)
        let v = hermite_neg(-1.0, 0.0, 0.5).unwrap();
        assert!(rel(v, 1.2533141373155003) < 1e-11);
    }

    #[test]
    fn series_terminates_exactly_at_integer_index() {
        for n in [0u32, 1, 3, 6] {
            for (x, y) in [(2.0, 0.5), (1.0, -0.75), (3.0, 1.0)] {
                let r = hermite_frac_series(n as f64, x, y, 1e-10).unwrap();
                let exact = hermite2(n, HermitePair::new(x, -y));
                let scale = exact.abs().max(1.0);
                assert!(
                    (r.value - exact).abs() < 1e-12 * scale,
                    "n={n} x={x} y={y}: {} vs {exact}",
                    r.value
                );
                assert!(r.terms_used <= n as usize / 2 + 1);
            }
        }
    }

    #[test]
    fn series_agrees_with_d_route_in_its_regime() {
        let r = hermite_frac_series(-0.5, 10.0, 0.1, 1e-10).unwrap();
        let d = hermite_neg(-0.5, 10.0, 0.1).unwrap();
        assert!(
            (r.value - d).abs() <= r.error_estimate,
            "deviation {:e} vs estimate {:e}",
            (r.value - d).abs(),
            r.error_estimate
        );
        assert!(r.converged);
    }

    #[test]
    fn series_flags_bad_regime() {
        // x >> y violated: the flag must go false
        let r = hermite_frac_series(0.5, 0.5, 2.0, 1e-9).unwrap();
        assert!(!r.converged);
        assert!(r.error_estimate > 1e-9 * r.value.abs());
    }

    #[test]
    fn domain_errors() {
        assert!(hermite_frac_integral(0.5, 1.0, 0.0).is_err());
        assert!(hermite_frac_integral(-1.5, 1.0, 1.0).is_err());
        assert!(hermite_frac_series(0.5, -1.0, 0.1, 1e-9).is_err());
        assert!(hermite_neg(0.5, 1.0, 1.0).is_err());
        assert!(hermite_neg(-0.5, 1.0, -1.0).is_err());
    }
}
