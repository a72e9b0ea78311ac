//! Test functions on the Lie algebra given through their Fourier transform
//! `σ̂(x) = p(x)·exp(−x²/(2τ²))`, with `σ̂(u) = ∫ σ(x) e^{−iux} dx`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::model::Sign;
use crate::quad::{integrate_with_breaks, QuadOpts};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchwartzSpec {
    /// Coefficients of `p`, lowest degree first.
    pub poly: Vec<f64>,
    pub tau: f64,
}

/// `∫_0^∞ ξ^n e^{−ξ²/(2τ²)} dξ = 2^{(n−1)/2} τ^{n+1} Γ((n+1)/2)`.
pub fn half_gaussian_moment(n: usize, tau: f64) -> f64 {
    2f64.powf((n as f64 - 1.0) / 2.0) * tau.powi(n as i32 + 1) * gamma_half(n + 1)
}

/// `Γ(k/2)` for `k ≥ 1` from `Γ(1/2) = √π`, `Γ(1) = 1` and `Γ(z+1) = zΓ(z)`.
pub fn gamma_half(k: usize) -> f64 {
    assert!(k >= 1, "Γ(k/2) needs k >= 1");
    let (mut z, mut g) = if k % 2 == 0 { (1.0, 1.0) } else { (0.5, PI.sqrt()) };
    while 2.0 * z < k as f64 {
        g *= z;
        z += 1.0;
    }
    g
}

impl SchwartzSpec {
    pub fn new(poly: Vec<f64>, tau: f64) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return domain(format!("tau must be positive, got {tau}"));
        }
        if poly.iter().any(|c| !c.is_finite()) {
            return domain("sigma polynomial coefficients must be finite");
        }
        Ok(Self { poly, tau })
    }

    /// `σ̂ = e^{−x²/2}`, the classical Witten choice.
    pub fn gaussian() -> Self {
        Self { poly: vec![1.0], tau: 1.0 }
    }

    pub fn sigma_hat(&self, x: f64) -> f64 {
        let p = self.poly.iter().rev().fold(0.0, |acc, c| acc * x + c);
        p * (-x * x / (2.0 * self.tau * self.tau)).exp()
    }

    /// `|x|` beyond which `|σ̂|` is below `1e−18` of its scale.
    pub fn cutoff(&self) -> f64 {
        let deg = self.poly.len().saturating_sub(1) as f64;
        self.tau * (9.5 + deg.sqrt() * 1.5)
    }

    /// `σ^{(j)}(0) = (i^j/2π) ∫ u^j σ̂(u) du`.
    pub fn deriv_at_zero(&self, j: usize) -> Complex64 {
        let mut s = 0.0;
        for (k, c) in self.poly.iter().enumerate() {
            if (j + k) % 2 == 0 {
                s += c * 2.0 * half_gaussian_moment(j + k, self.tau);
            }
        }
        Complex64::i().powu(j as u32) * s / (2.0 * PI)
    }

    /// `σ^{[j]}_±(0) = ((±i)^j/2π) ∫_0^∞ σ̂(±ξ) ξ^j dξ`.
    pub fn bracket(&self, j: usize, sign: Sign) -> Complex64 {
        let s: f64 = self
            .poly
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let parity = if sign == Sign::Minus && k % 2 == 1 { -1.0 } else { 1.0 };
                parity * c * half_gaussian_moment(j + k, self.tau)
            })
            .sum();
        (Complex64::i() * sign.as_f64()).powu(j as u32) * s / (2.0 * PI)
    }

    /// The same functional by adaptive quadrature on the half line.
    pub fn bracket_by_quadrature(&self, j: usize, sign: Sign) -> Complex64 {
        let sg = sign.as_f64();
        let r = integrate_with_breaks(
            |xi| self.sigma_hat(sg * xi) * xi.powi(j as i32),
            &[0.0, self.tau, 3.0 * self.tau, self.cutoff()],
            &QuadOpts::new(1e-15, 1e-14),
        );
        (Complex64::i() * sg).powu(j as u32) * r.value / (2.0 * PI)
    }

    /// `σ(x) = (1/2π) ∫ σ̂(u) e^{iux} du` by quadrature.
    pub fn sigma_numeric(&self, x: f64) -> Complex64 {
        let c = self.cutoff();
        let pts = [-c, -3.0 * self.tau, 0.0, 3.0 * self.tau, c];
        let opts = QuadOpts::new(1e-16, 1e-14);
        let re = integrate_with_breaks(|u| self.sigma_hat(u) * (u * x).cos(), &pts, &opts);
        let im = integrate_with_breaks(|u| self.sigma_hat(u) * (u * x).sin(), &pts, &opts);
        Complex64::new(re.value, im.value) / (2.0 * PI)
    }
}

/// Closed-form `σ^{(j)}(0)`.
pub fn sigma_deriv_at_zero(spec: &SchwartzSpec, j: usize) -> Complex64 {
    spec.deriv_at_zero(j)
}

/// Closed-form `σ^{[j]}_±(0)`.
pub fn sigma_bracket(spec: &SchwartzSpec, j: usize, sign: Sign) -> Complex64 {
    spec.bracket(j, sign)
}

pub fn sigma_hat_eval(spec: &SchwartzSpec, x: f64) -> f64 {
    spec.sigma_hat(x)
}
