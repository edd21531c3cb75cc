//! Numerical kernel for Hermite-family polynomials and the Gaussian,
//! quartic-Gaussian, and Pearcey-type integrals they evaluate.
//!
//! The crate has three layers:
//! - [`special`]: gamma, erfc, modified Bessel K, parabolic cylinder D;
//! - [`hermite`] / [`fractional`]: two-variable Hermite polynomials of
//!   integer, fractional, and negative index;
//! - [`integrals`]: closed forms and convergent series for the integral
//!   families, each checkable against the independent [`quadrature`]
//!   oracle.
//!
//! Every series evaluator returns a [`SeriesResult`] carrying truncation
//! diagnostics next to the value, and every function is pure: no shared
//! state, safe to call from any number of threads.

pub mod error;
pub mod fractional;
pub mod hermite;
pub mod integrals;
pub mod quadrature;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use hermite::{GH4Args, HermitePair};
pub use quadrature::{QuadratureConfig, QuadratureResult, Transform};
pub use series::SeriesResult;
pub use special::SpecialFnAccuracy;
