//! Closed forms and series evaluators for the Gaussian/quartic integral
//! families, each expressible through Hermite polynomials of (possibly
//! negative or fractional) index.
//!
//! Families and their parameter blocks:
//! - I(alpha, beta, gamma) = int e^{-(alpha+beta) x^2 - gamma x} dx
//! - I(gamma, beta)        = int e^{-(gamma x^2 + beta x^4)} dx
//! - J(a, b, c)            = int e^{-(a x^4 + b x^2 + c x)} dx
//! - power form            = int_0^inf e^{-(beta x^{2n} + gamma x^n)} dx
//! - Pearcey slice and the square-root-exponent family live in the
//!   sibling submodules.

mod pearcey;
mod rpoly;

pub use pearcey::{pearcey, pearcey_recursive, PearceyForms};
pub use rpoly::{integral_f_series, r_polynomial};

use crate::error::{Error, Result};
use crate::fractional::hermite_neg;
use crate::hermite::{gen_even_sum, HermitePair};
use crate::series::{diagnose_partial_sums, SeriesResult, TailSum};
use crate::special::{bessel_k, gamma, parabolic_cylinder_d_scaled};

const SQRT_PI: f64 = 1.7724538509055160;

/// Closed Gaussian form sqrt(pi/(alpha+beta)) e^{gamma^2 / 4(alpha+beta)}.
pub fn integral_i_closed(alpha: f64, beta: f64, gamma_p: f64) -> Result<f64> {
    if alpha + beta <= 0.0 {
        return Err(Error::Domain("integral_i_closed requires alpha + beta > 0"));
    }
    let s = alpha + beta;
    Ok((std::f64::consts::PI / s).sqrt() * (gamma_p * gamma_p / (4.0 * s)).exp())
}

/// The same integral summed as sqrt(pi/alpha) sum_r H_2r(gamma/2 sqrt
/// alpha, -beta/4 alpha)/r!, the benchmark identity of the whole scheme.
/// Converges for |beta/alpha| < 1; near the edge it needs a few thousand
/// terms, so this evaluator runs on a larger cap than the rest.
pub fn integral_i_series(alpha: f64, beta: f64, gamma_p: f64, tol: f64) -> Result<SeriesResult> {
    if alpha <= 0.0 {
        return Err(Error::Domain("integral_i_series requires alpha > 0"));
    }
    if (beta / alpha).abs() >= 1.0 {
        return Err(Error::Divergent("integral_i_series requires |beta/alpha| < 1"));
    }
    let p = HermitePair::new(gamma_p / (2.0 * alpha.sqrt()), -beta / (4.0 * alpha));
    let inner = gen_even_sum(1.0, p, tol)?;
    let scale = (std::f64::consts::PI / alpha).sqrt();
    Ok(SeriesResult {
        value: scale * inner.value,
        last_term: scale * inner.last_term,
        error_estimate: scale * inner.error_estimate,
        ..inner
    })
}

/// int e^{-(gamma x^2 + beta x^4)} dx = sqrt(pi) H_{-1/2}(gamma, -beta),
/// evaluated through the parabolic cylinder function.
pub fn integral_gauss_quartic(gamma_p: f64, beta: f64) -> Result<f64> {
    if beta <= 0.0 {
        return Err(Error::Domain("integral_gauss_quartic requires beta > 0"));
    }
    Ok(SQRT_PI * hermite_neg(-0.5, gamma_p, beta)?)
}

/// Same integral through the modified Bessel function:
/// sqrt(gamma / 2 sqrt(2 beta)) (2 beta)^{-1/4} e^{gamma^2/8 beta}
/// K_{1/4}(gamma^2 / 8 beta). Requires gamma > 0.
pub fn integral_gauss_quartic_k(gamma_p: f64, beta: f64) -> Result<f64> {
    if beta <= 0.0 {
        return Err(Error::Domain("integral_gauss_quartic_k requires beta > 0"));
    }
    if gamma_p <= 0.0 {
        return Err(Error::Domain("integral_gauss_quartic_k requires gamma > 0"));
    }
    let arg = gamma_p * gamma_p / (8.0 * beta);
    if arg > 709.0 {
        return Err(Error::Overflow("integral_gauss_quartic_k scale factor"));
    }
    let root = (2.0 * beta).sqrt();
    Ok((gamma_p / (2.0 * root)).sqrt() * (2.0 * beta).powf(-0.25) * arg.exp() * bessel_k(0.25, arg)?)
}

/// Quartic moment g_n(a) = int_0^inf x^n e^{-a x^4} dx
/// = (1/4) a^{-(n+1)/4} Gamma((n+1)/4).
pub fn moment_g(n: u32, a: f64) -> Result<f64> {
    if a <= 0.0 {
        return Err(Error::Domain("moment_g requires a > 0"));
    }
    let q = (n as f64 + 1.0) / 4.0;
    Ok(0.25 * a.powf(-q) * gamma(q)?)
}

/// Partial sums of the term-by-term Gaussian expansion of J(a, b, c)
/// together with the full term-magnitude trace.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeSeries {
    pub result: SeriesResult,
    /// |term_n| for n = 0..n_terms, zeros included (odd terms cancel by
    /// parity whenever the integrand is even).
    pub term_magnitudes: Vec<f64>,
}

/// The expansion J(a,b,c) = sum_n (-1)^n/n! g_n(a) [H_n(c,-b) + H_n(-c,-b)].
///
/// A diagnostic evaluator: it always sums exactly `n_terms` terms and
/// reports the behavior it saw. The Hermite factors are carried as the
/// scaled coefficients H_n/n! of exp(ct - bt^2), which stay bounded where
/// the raw polynomial values would overflow.
pub fn integral_j_perturbative(
    a: f64,
    b: f64,
    c: f64,
    n_terms: usize,
) -> Result<PerturbativeSeries> {
    if a <= 0.0 {
        return Err(Error::Domain("integral_j_perturbative requires a > 0"));
    }
    if n_terms == 0 || n_terms > 600 {
        return Err(Error::Domain(
            "integral_j_perturbative requires 1 <= n_terms <= 600 (g_n overflows beyond)",
        ));
    }
    // coefficient recurrences for e^{+-ct - bt^2}: u_n = (x u_{n-1} + 2 y u_{n-2})/n
    let mut terms = Vec::with_capacity(n_terms);
    let (mut up_prev, mut up) = (1.0f64, c); // +c branch: u_0, u_1
    let (mut um_prev, mut um) = (1.0f64, -c); // -c branch
    let mut sign = 1.0;
    for n in 0..n_terms {
        let (u_plus, u_minus) = if n == 0 {
            (up_prev, um_prev)
        } else if n == 1 {
            (up, um)
        } else {
            let next_p = (c * up + 2.0 * (-b) * up_prev) / n as f64;
            let next_m = (-c * um + 2.0 * (-b) * um_prev) / n as f64;
            up_prev = up;
            up = next_p;
            um_prev = um;
            um = next_m;
            (up, um)
        };
        let g = moment_g(n as u32, a)?;
        terms.push(sign * g * (u_plus + u_minus));
        sign = -sign;
    }
    let result = diagnose_partial_sums(&terms);
    let term_magnitudes = terms.iter().map(|t| t.abs()).collect();
    Ok(PerturbativeSeries {
        result,
        term_magnitudes,
    })
}

/// The convergent parabolic-cylinder series for J(a, b, c):
/// sqrt(pi) e^{b^2/8a} sum_s (c/2)^{2s}/s! (2a)^{-(s+1/2)/2}
/// D_{-(s+1/2)}(b / sqrt(2a)), convergent for every b, c with a > 0.
pub fn integral_j_series(a: f64, b: f64, c: f64, tol: f64) -> Result<SeriesResult> {
    if a <= 0.0 {
        return Err(Error::Domain("integral_j_series requires a > 0"));
    }
    let z = b / (2.0 * a).sqrt();
    // e^{b^2/8a} cancels the e^{-z^2/4} inside every D term identically,
    // so the scaled D enters with no exponential prefactor at all
    let pref = SQRT_PI;
    let half_ratio = (c / 2.0) * (c / 2.0) / (2.0 * a).sqrt();
    let mut factor = (2.0 * a).powf(-0.25); // (c/2)^{2s} (2a)^{-s/2 - 1/4} / s! at s = 0
    let mut acc = TailSum::new(tol, 500);
    let mut s = 0u32;
    loop {
        let d = parabolic_cylinder_d_scaled(-(s as f64 + 0.5), z)?;
        if acc.push(pref * factor * d) {
            break;
        }
        factor *= half_ratio / (s as f64 + 1.0);
        s += 1;
    }
    Ok(acc.finish())
}

/// int_0^inf e^{-(beta x^{2n} + gamma x^n)} dx
/// = (1/n) Gamma(1/n) (2 beta)^{-1/(2n)} e^{gamma^2/8 beta}
///   D_{-1/n}(gamma / sqrt(2 beta)).
pub fn integral_power(n: u32, beta: f64, gamma_p: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("integral_power requires n >= 1"));
    }
    if beta <= 0.0 {
        return Err(Error::Domain("integral_power requires beta > 0"));
    }
    let nf = n as f64;
    // e^{gamma^2/8beta} cancels against the e^{-z^2/4} inside D
    let d = parabolic_cylinder_d_scaled(-1.0 / nf, gamma_p / (2.0 * beta).sqrt())?;
    Ok(gamma(1.0 / nf)? / nf * (2.0 * beta).powf(-0.5 / nf) * d)
}
