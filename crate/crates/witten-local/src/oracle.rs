//! Direct quadrature of the local integral and least-squares diagnostics.
//!
//! After integrating out the Lie-algebra variable,
//! `I_F(ε) = Λ_F^{-1} ¼ ∫∫ T^{L⁺−1} U^{L⁻−1} 𝒮(T, U) σ̂((U − T + ζ')/ε') dT dU`
//! with `ε' = 2ε`, `ζ' = 2ζ_F` (indefinite), and
//! `I_F(ε) = Λ_F^{-1} ½ ∫ T^{L−1} 𝒮(T) σ̂((ζ' − s_F T)/ε') dT` (definite).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::amplitude::{MeanFunction, ScriptS};
use crate::coeff::c_l_rational;
use crate::error::{domain, Error, Result};
use crate::kernel::FKernel;
use crate::model::Sign;
use crate::quad::{integrate_with_breaks, peak_breaks, QuadOpts};
use crate::schwartz::SchwartzSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleMethod {
    /// Iterated integral in `(T, U)`; for definite models, the direct `T` integral.
    #[serde(rename = "reduced-2d")]
    Reduced2d,
    /// Split integral against the kernels `F^±`; for definite models, the
    /// integral after substituting the `σ̂` argument.
    #[serde(rename = "split-1d")]
    Split1d,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleValue {
    pub eps: f64,
    pub value: f64,
    pub error: f64,
}

impl OracleMethod {
    pub fn label(self) -> &'static str {
        match self {
            OracleMethod::Reduced2d => "reduced-2d",
            OracleMethod::Split1d => "split-1d",
        }
    }
}

pub const DEFAULT_TOL: f64 = 1e-13;

/// Geometric `ε` grid `eps_max·ratio^i`, `i < points`, and quadrature settings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleConfig {
    pub eps_max: f64,
    pub ratio: f64,
    pub points: usize,
    pub quadrature_tol: f64,
    pub method: OracleMethod,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { eps_max: 0.125, ratio: 0.5, points: 10, quadrature_tol: DEFAULT_TOL, method: OracleMethod::Reduced2d }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.eps_max > 0.0 && self.eps_max.is_finite()) {
            return Err(Error::Config(format!("oracle.eps_max must be positive, got {}", self.eps_max)));
        }
        if !(self.ratio > 0.0 && self.ratio < 1.0) {
            return Err(Error::Config(format!("oracle.ratio must lie in (0, 1), got {}", self.ratio)));
        }
        if self.points < 3 {
            return Err(Error::Config("oracle.points must be at least 3".into()));
        }
        if !(self.quadrature_tol > 0.0 && self.quadrature_tol < 1.0) {
            return Err(Error::Config(format!("oracle.quadrature_tol must lie in (0, 1), got {}", self.quadrature_tol)));
        }
        Ok(())
    }

    /// Decreasing grid.
    pub fn grid(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.eps_max * self.ratio.powi(i as i32)).collect()
    }
}

fn opts(tol: f64) -> QuadOpts {
    QuadOpts { abs_tol: 0.0, rel_tol: tol, max_intervals: 4000 }
}

fn within(points: Vec<f64>, lo: f64, hi: f64) -> Vec<f64> {
    let mut v = vec![lo];
    v.extend(points.into_iter().filter(|&x| x > lo && x < hi));
    v.push(hi);
    v
}

/// `I_F(ε)` at model level `ζ_F`.
pub fn oracle_integral(
    s: &ScriptS,
    sigma: &SchwartzSpec,
    zeta_f: f64,
    eps: f64,
    method: OracleMethod,
) -> Result<OracleValue> {
    oracle_integral_tol(s, sigma, zeta_f, eps, method, DEFAULT_TOL)
}

pub fn oracle_integral_tol(
    s: &ScriptS,
    sigma: &SchwartzSpec,
    zeta_f: f64,
    eps: f64,
    method: OracleMethod,
    tol: f64,
) -> Result<OracleValue> {
    if !(eps > 0.0 && eps.is_finite()) {
        return domain(format!("ε must be positive, got {eps}"));
    }
    let (value, error) = match (s.is_definite(), method) {
        (false, OracleMethod::Reduced2d) => reduced_2d(s, sigma, 2.0 * zeta_f, 2.0 * eps, tol),
        (false, OracleMethod::Split1d) => split_1d(s, sigma, 2.0 * zeta_f, 2.0 * eps, tol),
        (true, OracleMethod::Reduced2d) => definite_direct(s, sigma, 2.0 * zeta_f, 2.0 * eps, tol),
        (true, OracleMethod::Split1d) => definite_substituted(s, sigma, 2.0 * zeta_f, 2.0 * eps, tol),
    };
    let lambda = s.model.lambda() as f64;
    if !value.is_finite() {
        return Err(Error::IllConditioned { condition: f64::INFINITY, message: "oracle integral diverged".into() });
    }
    Ok(OracleValue { eps, value: value / lambda, error: error / lambda })
}

/// The same integral on a grid of `ε`, evaluated in parallel.
pub fn oracle_sweep(
    s: &ScriptS,
    sigma: &SchwartzSpec,
    zeta_f: f64,
    eps: &[f64],
    method: OracleMethod,
    tol: f64,
) -> Result<Vec<OracleValue>> {
    eps.par_iter().map(|&e| oracle_integral_tol(s, sigma, zeta_f, e, method, tol)).collect()
}

fn reduced_2d(s: &ScriptS, sigma: &SchwartzSpec, zp: f64, ep: f64, tol: f64) -> (f64, f64) {
    let (lp, lm) = (s.model.l_plus() as i32, s.model.l_minus() as i32);
    let r0 = s.bump.r0 * s.bump.r0;
    let r1 = s.reach();
    let w = ep * sigma.tau;
    let reach = sigma.cutoff() / sigma.tau;
    let inner = |t: f64| -> f64 {
        let c = t - zp;
        let lo = (c - reach * w).max(0.0);
        let hi = (c + reach * w).min(r1 - t);
        if hi <= lo {
            return 0.0;
        }
        let mut pts = peak_breaks(c, w, reach);
        pts.push(r0 - t);
        let pts = within(pts, lo, hi);
        integrate_with_breaks(
            |u| u.powi(lm - 1) * s.value(t, u) * sigma.sigma_hat((u - t + zp) / ep),
            &pts,
            &opts(tol),
        )
        .value
    };
    let lo = (zp - reach * w).max(0.0);
    let mut pts = peak_breaks(zp, w, reach);
    pts.extend([r0, (r0 + zp) / 2.0, (r1 + zp) / 2.0]);
    let pts = within(pts, lo, r1);
    let r = integrate_with_breaks(|t| t.powi(lp - 1) * inner(t), &pts, &opts(tol));
    (0.25 * r.value, 0.25 * r.error)
}

fn split_1d(s: &ScriptS, sigma: &SchwartzSpec, zp: f64, ep: f64, tol: f64) -> (f64, f64) {
    let (lp, lm) = (s.model.l_plus(), s.model.l_minus());
    let big_l = lp + lm - 2;
    let cut = sigma.cutoff();
    let split = zp / ep;
    let mut total = 0.0;
    let mut err = 0.0;
    for l in 0..=big_l {
        let cl = c_l_rational(lp, lm, l).to_f64().unwrap_or(f64::NAN);
        if cl == 0.0 {
            continue;
        }
        let kp = FKernel::new(s, big_l - l, zp, Sign::Plus, 1);
        let km = FKernel::new(s, big_l - l, zp, Sign::Minus, 1);
        let f = |u: f64, k: &FKernel| sigma.sigma_hat(u) * (ep * u - zp).powi(l as i32) * k.eval(ep * u);
        let t = sigma.tau;
        let base = vec![-3.0 * t, -t, 0.0, t, 3.0 * t];
        if split < cut {
            let r = integrate_with_breaks(|u| f(u, &kp), &within(base.clone(), split.max(-cut), cut), &opts(tol));
            total += cl * r.value;
            err += cl.abs() * r.error;
        }
        if split > -cut {
            let r = integrate_with_breaks(|u| f(u, &km), &within(base, -cut, split.min(cut)), &opts(tol));
            total += cl * r.value;
            err += cl.abs() * r.error;
        }
    }
    let pre = 2f64.powi(-3 - big_l as i32) * ep;
    (pre * total, pre * err)
}

fn definite_direct(s: &ScriptS, sigma: &SchwartzSpec, zp: f64, ep: f64, tol: f64) -> (f64, f64) {
    let sf = s.model.definite_sign().expect("definite").as_f64();
    let big_l = (s.model.codim() / 2) as i32;
    let r1 = s.reach();
    let w = ep * sigma.tau;
    let reach = sigma.cutoff() / sigma.tau;
    let mut pts = peak_breaks(sf * zp, w, reach);
    pts.push(s.bump.r0 * s.bump.r0);
    let pts = within(pts, 0.0, r1);
    let r = integrate_with_breaks(
        |t| t.powi(big_l - 1) * s.value(t, 0.0) * sigma.sigma_hat((zp - sf * t) / ep),
        &pts,
        &opts(tol),
    );
    (0.5 * r.value, 0.5 * r.error)
}

fn definite_substituted(s: &ScriptS, sigma: &SchwartzSpec, zp: f64, ep: f64, tol: f64) -> (f64, f64) {
    // T = s_F (ζ' + ε' u), so σ̂ sees −u
    let sf = s.model.definite_sign().expect("definite").as_f64();
    let big_l = (s.model.codim() / 2) as i32;
    let r1 = s.reach();
    let cut = sigma.cutoff();
    let t_of = |u: f64| sf * (zp + ep * u);
    let (a, b) = if sf > 0.0 { (-zp / ep, (r1 - zp) / ep) } else { ((-r1 - zp) / ep, -zp / ep) };
    // a support entirely in the Gaussian tail keeps a window of the same width next to the peak side
    let (lo, hi) = if a >= cut {
        (a, b.min(a + cut))
    } else if b <= -cut {
        (a.max(b - cut), b)
    } else {
        (a.max(-cut), b.min(cut))
    };
    let r0u = (sf * s.bump.r0 * s.bump.r0 - zp) / ep;
    let t = sigma.tau;
    let pts = within(vec![-3.0 * t, -t, 0.0, t, 3.0 * t, r0u], lo, hi);
    let r = integrate_with_breaks(
        |u| {
            let tt = t_of(u).max(0.0);
            tt.powi(big_l - 1) * s.value(tt, 0.0) * sigma.sigma_hat(-u)
        },
        &pts,
        &opts(tol),
    );
    (0.5 * ep * r.value, 0.5 * ep * r.error)
}

/// Result of a log-log fit of `|R(ε)|` against `ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub points_used: usize,
    /// Set when fewer than three points sit above the noise floor.
    pub floor_limited: bool,
}

/// Remainder noise floor: `10·max(1e−12·|I|, quadrature error)`.
pub fn noise_floor(v: &OracleValue) -> f64 {
    10.0 * (1e-12 * v.value.abs()).max(v.error)
}

/// Least-squares slope of `log|R|` against `log ε` over the six smallest `ε`
/// whose remainder clears its floor.
pub fn remainder_slope(eps: &[f64], remainder: &[f64], floor: &[f64]) -> Result<SlopeFit> {
    if eps.len() != remainder.len() || eps.len() != floor.len() {
        return domain("ε, remainder and floor lengths differ");
    }
    let mut pts: Vec<(f64, f64)> = eps
        .iter()
        .zip(remainder)
        .zip(floor)
        .filter(|((_, r), f)| r.abs() > **f && r.abs() > 0.0)
        .map(|((e, r), _)| (*e, r.abs()))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts.truncate(6);
    if pts.len() < 3 {
        return Ok(SlopeFit { slope: f64::NAN, points_used: pts.len(), floor_limited: true });
    }
    let a = DMatrix::from_fn(pts.len(), 2, |i, j| if j == 0 { 1.0 } else { pts[i].0.ln() });
    let b = DVector::from_iterator(pts.len(), pts.iter().map(|p| p.1.ln()));
    let x = lstsq(a, b)?;
    Ok(SlopeFit { slope: x[1], points_used: pts.len(), floor_limited: false })
}

fn lstsq(a: DMatrix<f64>, b: DVector<f64>) -> Result<DVector<f64>> {
    let svd = a.svd(true, true);
    let sv = &svd.singular_values;
    let (mx, mn) = (sv.max(), sv.min());
    let cond = if mn > 0.0 { mx / mn } else { f64::INFINITY };
    if cond > 1e12 {
        return Err(Error::IllConditioned { condition: cond, message: "least-squares system".into() });
    }
    svd.solve(&b, 0.0).map_err(|e| Error::IllConditioned { condition: cond, message: e.to_string() })
}

/// Fits `I(ε) ≈ Σ_{j ≤ j_max} ε^{j+1} A_j`; columns are scaled to unit norm first.
pub fn extract_coefficients(eps: &[f64], values: &[f64], j_max: usize) -> Result<Vec<f64>> {
    let n = eps.len();
    if values.len() != n || n < j_max + 1 {
        return domain("need at least j_max + 1 samples of matching length");
    }
    let raw = DMatrix::from_fn(n, j_max + 1, |i, j| eps[i].powi(j as i32 + 1));
    let norms: Vec<f64> = (0..=j_max).map(|j| raw.column(j).norm()).collect();
    let a = DMatrix::from_fn(n, j_max + 1, |i, j| raw[(i, j)] / norms[j]);
    let b = DVector::from_column_slice(values);
    let x = lstsq(a, b)?;
    Ok((0..=j_max).map(|j| x[j] / norms[j]).collect())
}
