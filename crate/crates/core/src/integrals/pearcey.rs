//! The Pearcey integral on its real slice:
//! P(x, y) = int e^{-(t^4 + x t^2) + i y t} dt = 2 int_0^inf e^{-t^4 - x t^2} cos(y t) dt.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermite::{hermite2_sequence, HermitePair};
use crate::series::{diagnose_partial_sums, SeriesResult, TailSum};
use crate::special::parabolic_cylinder_d_scaled;

use super::moment_g;

const SQRT_PI: f64 = 1.7724538509055160;

/// Pearcey integral by the parabolic-cylinder series, i.e. the J-series
/// machinery at (a, b, c) = (1, x, -iy). The purely even powers of c
/// make every term real: (c/2)^{2s} = (-1)^s (y/2)^{2s}.
pub fn pearcey(x: f64, y: f64, tol: f64) -> Result<SeriesResult> {
    let z = x / 2.0f64.sqrt();
    // e^{x^2/8} cancels the e^{-z^2/4} of every D term identically
    let pref = SQRT_PI;
    let ratio = -(y / 2.0) * (y / 2.0) / 2.0f64.sqrt();
    let mut factor = 2.0f64.powf(-0.25);
    let mut acc = TailSum::new(tol, 500);
    let mut s = 0u32;
    loop {
        let d = parabolic_cylinder_d_scaled(-(s as f64 + 0.5), z)?;
        if acc.push(pref * factor * d) {
            break;
        }
        factor *= ratio / (s as f64 + 1.0);
        s += 1;
    }
    Ok(acc.finish())
}

/// The two literature series for the Pearcey integral, reported together.
#[derive(Debug, Clone, PartialEq)]
pub struct PearceyForms {
    /// 2 sum_n (-1)^n g_{2n}(1) a_{2n}(x, y) with
    /// a_n = (y a_{n-1} + 2 x a_{n-2})/n, a_0 = 1, a_1 = y.
    pub recursion: SeriesResult,
    /// sum_n (-1)^n/n! g_n(1) [H_n(-iy, -x) + H_n(iy, -x)] via complex
    /// Hermite polynomials.
    pub hermite_form: SeriesResult,
}

/// Both series truncated after `n_terms` terms each (the Hermite form
/// runs its index to 2 n_terms so the two sums cover the same depth).
pub fn pearcey_recursive(x: f64, y: f64, n_terms: usize) -> Result<PearceyForms> {
    if n_terms < 1 {
        return Err(Error::Domain("pearcey_recursive requires n_terms >= 1"));
    }
    if n_terms > 80 {
        // 2 n_terms! must stay inside f64 for the Hermite form
        return Err(Error::Domain("pearcey_recursive requires n_terms <= 80"));
    }

    // recursion form
    let top = 2 * n_terms;
    let mut a = Vec::with_capacity(top + 1);
    a.push(1.0);
    a.push(y);
    for n in 2..=top {
        a.push((y * a[n - 1] + 2.0 * x * a[n - 2]) / n as f64);
    }
    let mut rec_terms = Vec::with_capacity(n_terms + 1);
    let mut sign = 1.0;
    for n in 0..=n_terms {
        rec_terms.push(2.0 * sign * moment_g(2 * n as u32, 1.0)? * a[2 * n]);
        sign = -sign;
    }
    let recursion = diagnose_partial_sums(&rec_terms);

    // complex-Hermite form
    let p_plus = HermitePair::new(Complex64::new(0.0, y), Complex64::new(-x, 0.0));
    let p_minus = HermitePair::new(Complex64::new(0.0, -y), Complex64::new(-x, 0.0));
    let h_plus = hermite2_sequence(top as u32, p_plus);
    let h_minus = hermite2_sequence(top as u32, p_minus);
    let mut herm_terms = Vec::with_capacity(top + 1);
    let mut fact = 1.0f64;
    let mut sign = 1.0;
    for n in 0..=top {
        if n > 0 {
            fact *= n as f64;
        }
        let pair_sum = h_minus[n] + h_plus[n];
        let term = sign / fact * moment_g(n as u32, 1.0)? * pair_sum.re;
        herm_terms.push(term);
        sign = -sign;
    }
    let hermite_form = diagnose_partial_sums(&herm_terms);

    Ok(PearceyForms {
        recursion,
        hermite_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_half_line, QuadratureConfig};

    const GAMMA_QUARTER_HALF: f64 = 1.8128049541109542;

    fn oracle(x: f64, y: f64) -> f64 {
        2.0 * integrate_half_line(
            |t| (-t.powi(4) - x * t * t).exp() * (y * t).cos(),
            &QuadratureConfig::default(),
        )
        .unwrap()
        .value
    }

    #[test]
    fn pearcey_at_origin() {
        let r = pearcey(0.0, 0.0, 1e-10).unwrap();
        assert!((r.value - GAMMA_QUARTER_HALF).abs() < 1e-10);
        assert!(r.converged);
    }

    #[test]
    fn pearcey_against_oracle() {
        for (x, y) in [(2.0, 0.0), (-1.0, 2.0), (0.5, 1.5)] {
            let r = pearcey(x, y, 1e-9).unwrap();
            let want = oracle(x, y);
            assert!(
                (r.value - want).abs() <= 1e-8 * want.abs().max(1e-3),
                "({x},{y}): {} vs {want}",
                r.value
            );
        }
    }

    #[test]
    fn recursion_collapses_at_origin() {
        let f = pearcey_recursive(0.0, 0.0, 30).unwrap();
        assert!((f.recursion.value - GAMMA_QUARTER_HALF).abs() < 1e-12);
        assert!((f.hermite_form.value - GAMMA_QUARTER_HALF).abs() < 1e-12);
    }

    #[test]
    fn recursion_trace_by_hand() {
        // a_2 at (x, y) = (1, 2): (1/2)(y a_1 + 2 x a_0) = (1/2)(4 + 2) = 3
        let (x, y) = (1.0, 2.0);
        let mut a = vec![1.0, y];
        for n in 2..=4usize {
            a.push((y * a[n - 1] + 2.0 * x * a[n - 2]) / n as f64);
        }
        assert_eq!(a[2], 3.0);
    }

    #[test]
    fn forms_agree_with_each_other_and_oracle() {
        let f = pearcey_recursive(1.0, 1.0, 60).unwrap();
        assert!(
            (f.recursion.value - f.hermite_form.value).abs() <= 1e-10 * f.recursion.value.abs()
        );
        let direct = pearcey(1.0, 1.0, 1e-10).unwrap();
        assert!((f.recursion.value - direct.value).abs() <= 1e-8 * direct.value.abs());
        assert!((f.recursion.value - oracle(1.0, 1.0)).abs() <= 1e-8 * direct.value.abs());
    }

    #[test]
    fn negative_x_exercises_d_at_negative_argument() {
        let r = pearcey(-1.0, 2.0, 1e-9).unwrap();
        let want = oracle(-1.0, 2.0);
        assert!((r.value - want).abs() <= 1e-8 * want.abs());
    }

    #[test]
    fn rejects_bad_term_count() {
        assert!(pearcey_recursive(1.0, 1.0, 0).is_err());
        assert!(pearcey_recursive(1.0, 1.0, 500).is_err());
    }
}
