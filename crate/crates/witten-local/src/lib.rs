//! Oscillatory integrals built from a circle momentum map, in the local normal
//! form near one fixed-point component.
//!
//! The crate computes the same quantities two ways: by the closed-form
//! asymptotic expansion (exact coefficients, Taylor kernels, spherical means)
//! and by direct quadrature after the Lie-algebra variable has been integrated
//! out through the Fourier transform of the test function.

pub mod amplitude;
pub mod autodiff;
pub mod coeff;
pub mod error;
pub mod exact;
pub mod expansion;
pub mod harness;
pub mod kernel;
pub mod model;
pub mod oracle;
pub mod quad;
pub mod quadric;
pub mod scenario;
pub mod schwartz;
pub mod sphere;

pub use error::{Error, Result};
pub use exact::ExactScalar;
pub use model::{LocalModel, Sign};
