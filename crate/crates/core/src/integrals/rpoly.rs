//! Taylor coefficients of exp(sqrt(x^2 + b x + c)) by contour
//! integration, and the square-root-exponent integral they expand.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{rounding_floor, SeriesResult};

/// Contour radius as a fraction of sqrt(c). The roots of the radicand
/// sit exactly on |x| = sqrt(c), so integrating there would destroy the
/// trapezoid's geometric convergence (and at c = 1 the printed unit
/// circle runs straight through both branch points). Any radius below
/// sqrt(c) encloses the same Taylor coefficients and keeps the radicand
/// in the right half plane, where the principal square root is analytic.
const CONTOUR_RADIUS_FACTOR: f64 = 0.9;

const MAX_QUAD_POINTS: usize = 1 << 17;

/// R_m(b, c) = m! [x^m] exp(sqrt(x^2 + b x + c)), computed as
/// (m!/2 pi rho^m) int_0^2pi e^{-im phi} exp(sqrt(rho^2 e^{2i phi}
/// + b rho e^{i phi} + c)) d phi on the circle rho = 0.9 sqrt(c),
/// with the uniform trapezoid rule doubled until two successive results
/// agree to 1e-11.
pub fn r_polynomial(m: u32, b: f64, c: f64, quad_points: usize) -> Result<f64> {
    if b * b - 4.0 * c >= 0.0 {
        return Err(Error::Domain("r_polynomial requires b^2 - 4c < 0"));
    }
    if quad_points < 64 || !quad_points.is_power_of_two() {
        return Err(Error::Domain(
            "r_polynomial requires quad_points to be a power of two >= 64",
        ));
    }
    let rho = CONTOUR_RADIUS_FACTOR * c.sqrt();
    let radicand = |phi: f64| {
        let u = rho * Complex64::from_polar(1.0, phi);
        u * u + b * u + c
    };

    let mut n = quad_points;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0f64;
    let tau = std::f64::consts::TAU;
    let mut prev_w: Option<(usize, Complex64)> = None;
    let eval = |j: usize, n: usize, prev: &mut Option<(usize, Complex64)>| -> Result<Complex64> {
        let phi = tau * j as f64 / n as f64;
        let w = radicand(phi);
        // the principal branch is discontinuous only across the negative
        // real axis; a sign flip of Im w while Re w < 0 between adjacent
        // nodes means the path crossed the cut
        if let Some((pj, pw)) = *prev {
            if pw.im.signum() != w.im.signum() && (pw.re < 0.0 || w.re < 0.0) {
                return Err(Error::BranchDiscontinuity { index: pj });
            }
        }
        *prev = Some((j, w));
        let g = w.sqrt().exp();
        Ok(g * Complex64::from_polar(1.0, -(m as f64) * phi))
    };

    for j in 0..n {
        let v = eval(j, n, &mut prev_w)?;
        sum += v;
        abs_sum += v.norm();
    }
    let mut value = sum / n as f64;
    loop {
        prev_w = None;
        let mut half_sum = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let v = eval(2 * j + 1, 2 * n, &mut prev_w)?;
            half_sum += v;
            abs_sum += v.norm();
        }
        sum += half_sum;
        n *= 2;
        let refined = sum / n as f64;
        let delta = (refined - value).norm();
        value = refined;
        let floor = 64.0 * f64::EPSILON * abs_sum / n as f64;
        if delta <= (1e-11 * value.norm()).max(floor) {
            break;
        }
        if n >= MAX_QUAD_POINTS {
            return Err(Error::QuadratureStalled {
                max_depth: MAX_QUAD_POINTS,
                last_delta: delta,
            });
        }
    }

    // factorial / rho^m scaling, in logs for large m
    let ln_scale = ln_factorial(m) - m as f64 * rho.ln();
    if ln_scale > 709.0 {
        return Err(Error::Overflow("r_polynomial m!/rho^m scaling"));
    }
    let scaled = value * ln_scale.exp();
    // the integrand magnitude at coefficient scale; a residue at this
    // level is trapezoid roundoff, anything near |value| is branch trouble
    let magnitude = ln_scale.exp() * abs_sum / n as f64;
    if scaled.im.abs() > (1e-10 * scaled.re.abs()).max(1e-11 * magnitude) {
        return Err(Error::BranchDiscontinuity { index: 0 });
    }
    Ok(scaled.re)
}

fn ln_factorial(m: u32) -> f64 {
    (1..=m).map(|k| (k as f64).ln()).sum()
}

/// f(a, b, c) = int e^{-a x^2 + sqrt(x^2 + b x + c)} dx expanded as
/// sqrt(pi/a) sum_n (1/n!) (1/4a)^n R_{2n}(b, c).
///
/// The expansion is asymptotic: the R_{2n} grow like (2n)!/c^n, so the
/// terms shrink only until n ~ a c and then diverge. The evaluator
/// truncates at the smallest term (never summing more than `n_terms`)
/// and reports the first omitted term as the error estimate, which is
/// as much accuracy as this series can deliver.
pub fn integral_f_series(a: f64, b: f64, c: f64, n_terms: usize) -> Result<SeriesResult> {
    if a <= 1.0 {
        return Err(Error::Domain("integral_f_series requires a > 1"));
    }
    if b * b - 4.0 * c >= 0.0 {
        return Err(Error::Domain("integral_f_series requires b^2 - 4c < 0"));
    }
    if n_terms == 0 {
        return Err(Error::Domain("integral_f_series requires n_terms >= 1"));
    }
    let scale = (std::f64::consts::PI / a).sqrt();
    let mut weight = 1.0; // (1/4a)^n / n!
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut last = f64::INFINITY;
    let mut terms_used = 0usize;
    let mut omitted = None;
    for n in 0..n_terms {
        let term = scale * weight * r_polynomial(2 * n as u32, b, c, 256)?;
        if term.abs() > last {
            omitted = Some(term.abs());
            break;
        }
        sum += term;
        abs_sum += term.abs();
        last = term.abs();
        terms_used += 1;
        weight /= 4.0 * a * (n as f64 + 1.0);
    }
    // cap reached with terms still falling: the next (uncomputed) term
    // is bounded by the last one, so report that instead
    let error_estimate = omitted.unwrap_or(last).max(rounding_floor(abs_sum));
    Ok(SeriesResult {
        value: sum,
        terms_used,
        last_term: last,
        converged: error_estimate <= rounding_floor(abs_sum).max(1e-12 * sum.abs()),
        error_estimate,
    })
}
