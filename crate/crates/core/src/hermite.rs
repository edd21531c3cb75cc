//! Two-variable Hermite polynomials, their recurrences and generating
//! identities, and the fourth-order (four-argument) extension.
//!
//! H_n(x, y) is the coefficient family of exp(x t + y t^2):
//! H_n(x, y) = n! sum_{s<=n/2} x^{n-2s} y^s / ((n-2s)! s!).

use num_complex::ComplexFloat;

use crate::error::{Error, Result};
use crate::series::{SeriesResult, TailSum};

/// Scalar admitted as a Hermite argument: f64 or Complex64.
pub trait HermiteScalar: ComplexFloat<Real = f64> + From<f64> + std::fmt::Debug {
    /// Lift a real constant into the scalar type (disambiguates the
    /// `From` conversion from `NumCast::from`).
    fn from_re(v: f64) -> Self {
        <Self as From<f64>>::from(v)
    }
}
impl<T> HermiteScalar for T where T: ComplexFloat<Real = f64> + From<f64> + std::fmt::Debug {}

/// Argument pair (x, y) of a two-variable Hermite polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitePair<T = f64> {
    pub x: T,
    pub y: T,
}

impl<T: HermiteScalar> HermitePair<T> {
    pub fn new(x: T, y: T) -> Self {
        HermitePair { x, y }
    }
}

impl From<(f64, f64)> for HermitePair<f64> {
    fn from((x, y): (f64, f64)) -> Self {
        HermitePair { x, y }
    }
}

/// The four arguments of a fourth-order Hermite polynomial, i.e. the
/// coefficient family of exp(x1 t + x2 t^2 + x3 t^3 + x4 t^4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GH4Args {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl GH4Args {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        GH4Args { x1, x2, x3, x4 }
    }
}

/// Exact double sum below this index, three-term recurrence above.
const DIRECT_SUM_MAX: u32 = 20;

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// H_n(x, y), integer index.
pub fn hermite2<T: HermiteScalar>(n: u32, p: HermitePair<T>) -> T {
    if n <= DIRECT_SUM_MAX {
        hermite2_direct(n, p)
    } else {
        hermite2_recurrence(n, p)
    }
}

fn hermite2_direct<T: HermiteScalar>(n: u32, p: HermitePair<T>) -> T {
    let mut sum = T::from_re(0.0);
    for s in 0..=(n / 2) {
        let coeff = factorial(n) / (factorial(n - 2 * s) * factorial(s));
        sum = sum + T::from_re(coeff) * p.x.powi((n - 2 * s) as i32) * p.y.powi(s as i32);
    }
    sum
}

fn hermite2_recurrence<T: HermiteScalar>(n: u32, p: HermitePair<T>) -> T {
    let mut prev = T::from_re(1.0);
    let mut cur = p.x;
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = p.x * cur + T::from_re(2.0 * k as f64) * p.y * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// H_0 .. H_{n_max} by the three-term recurrence
/// H_{k+1} = x H_k + 2 y k H_{k-1}.
pub fn hermite2_sequence<T: HermiteScalar>(n_max: u32, p: HermitePair<T>) -> Vec<T> {
    let mut seq = Vec::with_capacity(n_max as usize + 1);
    seq.push(T::from_re(1.0));
    if n_max == 0 {
        return seq;
    }
    seq.push(p.x);
    for k in 1..n_max {
        let next = p.x * seq[k as usize] + T::from_re(2.0 * k as f64) * p.y * seq[k as usize - 1];
        seq.push(next);
    }
    seq
}

/// Fourth-order Hermite polynomial: coefficient of t^n/n! in
/// exp(x1 t + x2 t^2 + x3 t^3 + x4 t^4), by the exact multinomial sum
/// over r1 + 2 r2 + 3 r3 + 4 r4 = n.
pub fn hermite_gh4(n: u32, args: GH4Args) -> f64 {
    let mut sum = 0.0;
    for r4 in 0..=(n / 4) {
        let rem4 = n - 4 * r4;
        for r3 in 0..=(rem4 / 3) {
            let rem3 = rem4 - 3 * r3;
            for r2 in 0..=(rem3 / 2) {
                let r1 = rem3 - 2 * r2;
                sum += args.x1.powi(r1 as i32) / factorial(r1)
                    * args.x2.powi(r2 as i32) / factorial(r2)
                    * args.x3.powi(r3 as i32) / factorial(r3)
                    * args.x4.powi(r4 as i32) / factorial(r4);
            }
        }
    }
    factorial(n) * sum
}

/// Two-argument fourth-order Hermite:
/// (-1)^n n! sum_{r<=n/4} c^{n-4r} (-a)^r / ((n-4r)! r!).
/// Identical to `hermite_gh4(n, (-c, 0, 0, -a))`.
pub fn hermite4_two_arg(n: u32, c: f64, a: f64) -> f64 {
    let mut sum = 0.0;
    for r in 0..=(n / 4) {
        sum += c.powi((n - 4 * r) as i32) * (-a).powi(r as i32)
            / (factorial(n - 4 * r) * factorial(r));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * factorial(n) * sum
}

/// Even-index generating sum: sum_r t^r/r! H_{2r}(x, y), which closes to
/// (1 - 4 y t)^{-1/2} exp(x^2 t / (1 - 4 y t)) while |4 y t| < 1.
///
/// Terms are generated through the normalized pair P_r = t^r H_{2r}/r!,
/// Q_r = t^r H_{2r+1}/r!, which stays bounded where the raw H_{2r} would
/// overflow long before the sum settles.
pub fn gen_even_sum(t: f64, p: HermitePair<f64>, tol: f64) -> Result<SeriesResult> {
    if (4.0 * p.y * t).abs() >= 1.0 {
        return Err(Error::Divergent("gen_even_sum requires |4 y t| < 1"));
    }
    let mut acc = TailSum::new(tol, 2048);
    let mut pr = 1.0; // P_0
    let mut qr = p.x; // Q_0
    let mut r = 0u32;
    loop {
        if acc.push(pr) {
            break;
        }
        let rf = r as f64;
        let p_next = t * (p.x * qr + 2.0 * p.y * (2.0 * rf + 1.0) * pr) / (rf + 1.0);
        let q_next = p.x * p_next + 4.0 * p.y * t * qr;
        pr = p_next;
        qr = q_next;
        r += 1;
    }
    Ok(acc.finish())
}

/// Closed form of the index-shifted generating identity:
/// sum_n t^n/n! H_{n+l}(x, y) = H_l(x + 2 y t, y) exp(x t + y t^2).
pub fn umbral_shift<T: HermiteScalar>(l: u32, p: HermitePair<T>, t: T) -> T {
    let shifted = HermitePair::new(p.x + T::from_re(2.0) * p.y * t, p.y);
    hermite2(l, shifted) * (p.x * t + p.y * t * t).exp()
}

/// Truncated left side of the same identity, for cross-checking the
/// closed form: sum_{n<=n_terms} t^n/n! H_{n+l}(x, y).
pub fn umbral_shift_series<T: HermiteScalar>(
    l: u32,
    p: HermitePair<T>,
    t: T,
    n_terms: u32,
) -> T {
    let seq = hermite2_sequence(n_terms + l, p);
    let mut sum = T::from_re(0.0);
    let mut weight = T::from_re(1.0); // t^n / n!
    for n in 0..=n_terms {
        sum = sum + weight * seq[(n + l) as usize];
        weight = weight * t / T::from_re(n as f64 + 1.0);
    }
    sum
}

/// n-th x-derivative of exp(-(gamma x^2 + beta x^4)) divided through by
/// nothing: returns the full derivative value
/// H_n^(4)(-2 gamma x - 4 beta x^3, -gamma - 6 beta x^2, -4 beta x, -beta)
/// * exp(-(gamma x^2 + beta x^4)).
pub fn quartic_exp_derivative(n: u32, gamma: f64, beta: f64, x: f64) -> f64 {
    let args = GH4Args::new(
        -2.0 * gamma * x - 4.0 * beta * x.powi(3),
        -gamma - 6.0 * beta * x * x,
        -4.0 * beta * x,
        -beta,
    );
    hermite_gh4(n, args) * (-(gamma * x * x + beta * x.powi(4))).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn pair(x: f64, y: f64) -> HermitePair<f64> {
        HermitePair::new(x, y)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn hermite2_base_cases() {
        assert_eq!(hermite2(0, pair(4.2, -7.0)), 1.0);
        assert_eq!(hermite2(2, pair(3.0, -1.0)), 7.0); // 3^2 + 2(-1)
        assert_eq!(hermite2(5, pair(1.0, 0.0)), 1.0); // y = 0 collapses to x^n
        assert_eq!(hermite2(4, pair(1.0, 1.0)), 25.0); // x^4 + 12 x^2 y + 12 y^2
    }

    #[test]
    fn sequence_matches_hand_recurrence() {
        assert_eq!(hermite2_sequence(1, pair(5.0, 9.0)), vec![1.0, 5.0]);
        assert_eq!(hermite2_sequence(3, pair(2.0, 1.0)), vec![1.0, 2.0, 6.0, 20.0]);
    }

    #[test]
    fn sequence_agrees_with_direct_sum() {
        let p = pair(1.5, -0.25);
        let seq = hermite2_sequence(30, p);
        for (k, &v) in seq.iter().enumerate() {
            let direct = hermite2(k as u32, p);
            assert!(rel(v, direct) < 1e-12, "k={k}: {v} vs {direct}");
        }
    }

    #[test]
    fn complex_arguments() {
        let p = HermitePair::new(Complex64::new(0.0, 2.0), Complex64::new(-1.0, 0.0));
        // H_2(2i, -1) = (2i)^2 + 2(-1) = -6
        let h = hermite2(2, p);
        assert!((h - Complex64::new(-6.0, 0.0)).norm() < 1e-12);
        let seq = hermite2_sequence(12, p);
        for (k, &v) in seq.iter().enumerate() {
            assert!((v - hermite2(k as u32, p)).norm() <= 1e-12 * v.norm().max(1.0));
        }
    }

    #[test]
    fn gh4_base_cases() {
        assert_eq!(hermite_gh4(0, GH4Args::new(9.0, 8.0, 7.0, 6.0)), 1.0);
        assert_eq!(hermite_gh4(1, GH4Args::new(3.5, 8.0, 7.0, 6.0)), 3.5);
        assert_eq!(hermite_gh4(4, GH4Args::new(0.0, 0.0, 0.0, 2.0)), 48.0); // 4! w
    }

    #[test]
    fn two_arg_form_matches_gh4() {
        assert_eq!(hermite4_two_arg(2, 2.0, 5.0), 4.0);
        assert_eq!(hermite4_two_arg(4, 1.0, 1.0), -23.0);
        assert_eq!(hermite4_two_arg(0, 3.0, 9.0), 1.0);
        for n in 0..=24 {
            for (c, a) in [(1.0, 1.0), (0.5, 2.0), (-1.5, 0.25), (2.0, -1.0)] {
                let lhs = hermite4_two_arg(n, c, a);
                let rhs = hermite_gh4(n, GH4Args::new(-c, 0.0, 0.0, -a));
                assert!(
                    rel(lhs, rhs) < 1e-12 || (lhs == 0.0 && rhs.abs() < 1e-12),
                    "n={n} c={c} a={a}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn gen_even_base_and_closed_form() {
        let r = gen_even_sum(0.0, pair(3.0, 2.0), 1e-14).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.terms_used, 4); // the leading 1 plus the three-zero settle run

        let (t, p) = (0.1, pair(1.0, -0.5));
        let r = gen_even_sum(t, p, 1e-13).unwrap();
        let closed = (1.0 - 4.0 * p.y * t).powf(-0.5) * (p.x * p.x * t / (1.0 - 4.0 * p.y * t)).exp();
        assert!(r.converged);
        assert!(rel(r.value, closed) < 1e-12);
        assert!(rel(r.value, 0.99220310961081535) < 1e-12);
    }

    #[test]
    fn gen_even_x_zero_closed_form() {
        for (t, y) in [(0.2, 0.5), (-0.3, 0.25), (0.05, -4.0)] {
            let r = gen_even_sum(t, pair(0.0, y), 1e-13).unwrap();
            let closed = 1.0 / (1.0 - 4.0 * y * t).sqrt();
            assert!(rel(r.value, closed) < 1e-11, "t={t} y={y}");
        }
    }

    #[test]
    fn gen_even_divergence_detected() {
        assert!(matches!(
            gen_even_sum(0.3, pair(1.0, 1.0), 1e-10),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn umbral_shift_base_cases() {
        let p = pair(1.3, -0.4);
        let t = 0.7;
        let r: f64 = umbral_shift(0, p, t);
        assert!(rel(r, (p.x * t + p.y * t * t).exp()) < 1e-14);
        // x + 2 y t = 0 zeroes H_1
        let r: f64 = umbral_shift(1, pair(1.0, -1.0), 0.5);
        assert!(r.abs() < 1e-14);
    }

    #[test]
    fn umbral_shift_series_cross_check() {
        let p = pair(2.0, -1.0);
        let closed: f64 = umbral_shift(2, p, 0.1);
        let series = umbral_shift_series(2, p, 0.1, 60);
        assert!(rel(series, closed) < 1e-12);
    }

    #[test]
    fn quartic_derivative_low_orders() {
        let v = quartic_exp_derivative(0, 1.7, 0.3, 0.9);
        assert!(rel(v, (-(1.7 * 0.81 + 0.3 * 0.9f64.powi(4))).exp()) < 1e-14);
        // d/dx e^{-(x^2+x^4)} at x = 1 is -6 e^{-2}
        let v = quartic_exp_derivative(1, 1.0, 1.0, 1.0);
        assert!(rel(v, -6.0 * (-2.0f64).exp()) < 1e-13);
    }

    #[test]
    fn quartic_derivative_matches_finite_differences() {
        // O(h^4) central stencil for the third derivative, step 1e-2
        let (gamma, beta, x) = (1.0, 0.5, 0.7);
        let f = |x: f64| (-(gamma * x * x + beta * x.powi(4))).exp();
        let h = 1e-2;
        let approx = ((f(x - 3.0 * h) - f(x + 3.0 * h)) / 8.0
            - (f(x - 2.0 * h) - f(x + 2.0 * h))
            + 13.0 / 8.0 * (f(x - h) - f(x + h)))
            / h.powi(3);
        let exact = quartic_exp_derivative(3, gamma, beta, x);
        assert!(rel(exact, approx) < 1e-6, "{exact} vs {approx}");
    }

    /// x-coefficient vector of H_n(x, y) at fixed numeric y:
    /// coefficient of x^{n-2s} is n! y^s / ((n-2s)! s!).
    fn coefficients(n: u32, y: f64) -> Vec<f64> {
        let mut c = vec![0.0; n as usize + 1];
        for s in 0..=(n / 2) {
            c[(n - 2 * s) as usize] =
                factorial(n) * y.powi(s as i32) / (factorial(n - 2 * s) * factorial(s));
        }
        c
    }

    #[test]
    fn derivative_recurrence_on_coefficients() {
        // d/dx H_n(x,y) = n H_{n-1}(x,y), checked exactly on the
        // coefficient representation rather than by finite differences
        for y in [1.0, -0.5, 2.25] {
            for n in 1..=20u32 {
                let cn = coefficients(n, y);
                let cm = coefficients(n - 1, y);
                for k in 1..=(n as usize) {
                    let deriv = k as f64 * cn[k]; // coefficient of x^{k-1}
                    let want = n as f64 * cm[k - 1];
                    assert!(
                        rel(deriv, want) < 1e-13 || (deriv == 0.0 && want == 0.0),
                        "n={n} k={k} y={y}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn parity(n in 0u32..=40, x in -5.0f64..5.0, y in -5.0f64..5.0) {
            let lhs = hermite2(n, pair(-x, y));
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * hermite2(n, pair(x, y));
            let scale = lhs.abs().max(rhs.abs()).max(1e-30);
            prop_assert!((lhs - rhs).abs() <= 1e-13 * scale);
        }

        #[test]
        fn operator_recurrence(n in 1u32..=30, x in -5.0f64..5.0, y in -5.0f64..5.0) {
            // x H_n + 2 y n H_{n-1} = H_{n+1}. The direct double sum
            // cancels internally, so the honest scale is the same sum
            // with all monomials positive: H_{n+1}(|x|, |y|).
            let p = pair(x, y);
            let t1 = x * hermite2(n, p);
            let t2 = 2.0 * y * n as f64 * hermite2(n - 1, p);
            let rhs = hermite2(n + 1, p);
            let scale = hermite2(n + 1, pair(x.abs(), y.abs())).max(1e-30);
            prop_assert!((t1 + t2 - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn shift_identity_truncated(l in 0u32..=5, t in -1.0f64..1.0, x in -2.0f64..2.0, y in -2.0f64..2.0) {
            let p = pair(x, y);
            let closed: f64 = umbral_shift(l, p, t);
            let series = umbral_shift_series(l, p, t, 80);
            let scale = closed.abs().max(1.0);
            prop_assert!((series - closed).abs() <= 1e-10 * scale);
        }
    }
}
