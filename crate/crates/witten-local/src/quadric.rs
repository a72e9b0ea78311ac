//! Quadrics `Σ^ζ = {⟨Qw, w⟩ = 2ζ}` of a local model, their natural measure,
//! the weights `W_{F,k}` and the operators `D^±_F`.

use crate::amplitude::{sphere_mean_of, AmplitudeSpec, Bump};
use crate::autodiff::{Dual, Real};
use crate::error::{domain, Result};
use crate::model::LocalModel;
use crate::quad::{integrate_with_breaks, QuadOpts, QuadResult};
use crate::sphere::{sphere_volume, SphereRule};

#[derive(Clone, Debug)]
pub struct QuadricSlice {
    pub model: LocalModel,
    /// Model-level `ζ_F`.
    pub zeta: f64,
}

impl QuadricSlice {
    pub fn new(model: &LocalModel, zeta: f64) -> Result<Self> {
        if model.is_definite() {
            return domain("a definite quadric is a point or empty");
        }
        if !zeta.is_finite() {
            return domain("ζ must be finite");
        }
        Ok(Self { model: model.clone(), zeta })
    }

    /// Point `(r, s)` on the profile curve `r² − s² = 2ζ` with parameter `p`
    /// (`p = s` for `ζ ≥ 0`, `p = r` otherwise).
    pub fn profile(&self, p: f64) -> (f64, f64) {
        if self.zeta >= 0.0 {
            ((p * p + 2.0 * self.zeta).sqrt(), p)
        } else {
            (p, (p * p - 2.0 * self.zeta).sqrt())
        }
    }

    /// Parameter value where `r² + s² = rho2`.
    fn param_at(&self, rho2: f64) -> f64 {
        ((rho2 - 2.0 * self.zeta.abs()) / 2.0).max(0.0).sqrt()
    }
}

/// `∫_{Σ^ζ_•} g dΣ^ζ` for `g` supported in `|T_F^{-1} x| < support.r1`, with
/// `S_{g∘T_F}` taken by sphere quadrature of degree `degree`.
pub fn hypersurface_integral<G: FnMut(&[f64]) -> f64>(
    slice: &QuadricSlice,
    support: &Bump,
    degree: usize,
    mut g: G,
) -> QuadResult {
    let m = &slice.model;
    let (np, nm) = (m.n_plus as i32, m.n_minus as i32);
    let lambda = m.lambda() as f64;
    let zeta = slice.zeta;
    let integrand = |p: f64| {
        let (r, s) = slice.profile(p);
        let mean = sphere_mean_of(m, r, s, degree, &mut g);
        // r^{n⁺} s^{n⁻−1} ds + r^{n⁺−1} s^{n⁻} dr over r² + s²
        let form = if zeta >= 0.0 {
            r.powi(np) * s.powi(nm - 1) + r.powi(np - 1) * s.powi(nm) * (s / r)
        } else {
            r.powi(np) * s.powi(nm - 1) * (r / s) + r.powi(np - 1) * s.powi(nm)
        };
        form / (r * r + s * s) * mean / lambda
    };
    let hi = slice.param_at(support.r1 * support.r1);
    let mid = slice.param_at(support.r0 * support.r0);
    integrate_with_breaks(integrand, &[0.0, mid, hi], &QuadOpts::new(1e-12, 1e-12))
}

/// `∫_{Σ^ζ} f dΣ^ζ` for an amplitude.
pub fn amplitude_integral(slice: &QuadricSlice, amp: &AmplitudeSpec) -> QuadResult {
    let m = slice.model.clone();
    hypersurface_integral(slice, &amp.bump, amp.degree() as usize + 2, |x| amp.eval(&m, x))
}

fn block_norm2<T: Real>(m: &LocalModel, x: &[T], plus: bool) -> T {
    let range = if plus { 0..m.n_plus } else { m.n_plus..m.codim() };
    let mut acc = T::cst(0.0);
    for i in range {
        acc = acc + x[i].clone() * x[i].clone() * T::cst(m.coordinate_weight(i) as f64);
    }
    acc
}

/// Coefficients of the vector field `D^−_F − D^+_F`, with
/// `D^±_F f = ½⟨∇f, w^±⟩ / ‖T_F^{-1} w^±‖²`.
pub fn dpm_field<T: Real>(m: &LocalModel, x: &[T]) -> Vec<T> {
    let ip = T::cst(0.5) / block_norm2(m, x, true);
    let im = T::cst(0.5) / block_norm2(m, x, false);
    x.iter()
        .enumerate()
        .map(|(i, xi)| if i < m.n_plus { -(xi.clone() * ip.clone()) } else { xi.clone() * im.clone() })
        .collect()
}

/// `W_{F,k}(w) = 4Λ_F ‖T^{-1}w‖^{2k} ‖T^{-1}w⁺‖^{2−n⁺} ‖T^{-1}w⁻‖^{2−n⁻}`.
pub fn w_weight(m: &LocalModel, k: usize, x: &[f64]) -> f64 {
    let p2 = block_norm2(m, x, true);
    let m2 = block_norm2(m, x, false);
    4.0 * m.lambda() as f64
        * (p2 + m2).powi(k as i32)
        * p2.powf(1.0 - m.n_plus as f64 / 2.0)
        * m2.powf(1.0 - m.n_minus as f64 / 2.0)
}

fn along<T: Real>(m: &LocalModel, y: &[T]) -> Vec<Dual<T>> {
    let v = dpm_field(m, y);
    y.iter().cloned().zip(v).map(|(a, b)| Dual::new(a, b)).collect()
}

fn dv0<T: Real>(m: &LocalModel, f: &AmplitudeSpec, y: &[T]) -> T {
    f.eval(m, y)
}

fn dv1<T: Real>(m: &LocalModel, f: &AmplitudeSpec, y: &[T]) -> T {
    dv0(m, f, &along(m, y)).b
}

fn dv2<T: Real>(m: &LocalModel, f: &AmplitudeSpec, y: &[T]) -> T {
    dv1(m, f, &along(m, y)).b
}

fn dv3<T: Real>(m: &LocalModel, f: &AmplitudeSpec, y: &[T]) -> T {
    dv2(m, f, &along(m, y)).b
}

/// `(D^−_F − D^+_F)^l f(x)` by forward-mode differentiation along the field.
pub fn dpm_power(m: &LocalModel, f: &AmplitudeSpec, l: usize, x: &[f64]) -> Result<f64> {
    Ok(match l {
        0 => dv0(m, f, x),
        1 => dv1(m, f, x),
        2 => dv2(m, f, x),
        3 => dv3(m, f, x),
        _ => return domain("operator powers above 3 are not supported"),
    })
}

/// `∫_{Σ^ζ_×} W_{F,k} (D^−_F − D^+_F)^l f dΣ^ζ`.
pub fn w_dpm_integral(slice: &QuadricSlice, f: &AmplitudeSpec, k: usize, l: usize) -> Result<QuadResult> {
    f.validate(&slice.model)?;
    if l > 3 {
        return domain("operator powers above 3 are not supported");
    }
    let m = slice.model.clone();
    Ok(hypersurface_integral(slice, &f.bump, f.degree() as usize + 2, |x| {
        w_weight(&m, k, x) * dpm_power(&m, f, l, x).unwrap_or(f64::NAN)
    }))
}

/// `∫_{S^{n−1}} ⟨Bθ, θ⟩ dθ = vol(S^{n−1}) tr B / n`, checked by quadrature.
pub fn sphere_trace_identity_check(b: &[Vec<f64>], n: usize) -> bool {
    let (lhs, rhs) = sphere_trace_sides(b, n);
    (lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs())
}

pub fn sphere_trace_sides(b: &[Vec<f64>], n: usize) -> (f64, f64) {
    assert!(n >= 2 && b.len() == n && b.iter().all(|row| row.len() == n));
    let rule = SphereRule::new(n, 2);
    let lhs = rule.integrate(|th| {
        (0..n).map(|i| (0..n).map(|j| b[i][j] * th[i] * th[j]).sum::<f64>()).sum()
    });
    let tr: f64 = (0..n).map(|i| b[i][i]).sum();
    (lhs, sphere_volume(n) * tr / n as f64)
}
