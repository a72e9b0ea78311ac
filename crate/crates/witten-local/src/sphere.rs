//! Quadrature on unit spheres `S^{n−1} ⊂ R^n` and exact monomial moments.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::factorial;
use crate::quad::gauss_legendre_on;
use crate::schwartz::gamma_half;

/// Nodes (row-major, `n` coordinates each) and weights summing to `vol(S^{n−1})`.
#[derive(Clone, Debug)]
pub struct SphereRule {
    pub n: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl SphereRule {
    /// A rule exact for polynomials of total degree `≤ degree`.
    pub fn new(n: usize, degree: usize) -> Self {
        assert!(n >= 1, "sphere dimension must be positive");
        if n == 1 {
            return Self { n, nodes: vec![-1.0, 1.0], weights: vec![1.0, 1.0] };
        }
        if n % 2 == 0 {
            Self::complex(n / 2, degree)
        } else {
            Self::recursive(n, degree)
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.n..(i + 1) * self.n]
    }

    pub fn integrate<F: FnMut(&[f64]) -> f64>(&self, mut f: F) -> f64 {
        (0..self.len()).map(|i| self.weights[i] * f(self.node(i))).sum()
    }

    /// `S^{2m−1} ⊂ C^m`: `z_j = √t_j e^{iφ_j}` with `t` on the simplex, where
    /// `dθ = 2^{1−m} dt dφ`.
    fn complex(m: usize, degree: usize) -> Self {
        let p = degree + 1;
        let phases: Vec<f64> = (0..p).map(|k| 2.0 * PI * k as f64 / p as f64).collect();
        let simplex = simplex_rule(m, degree / 2 + m);
        let scale = 2f64.powi(1 - m as i32) * (2.0 * PI / p as f64).powi(m as i32);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        let mut idx = vec![0usize; m];
        for (t, wt) in &simplex {
            loop {
                for j in 0..m {
                    let r = t[j].max(0.0).sqrt();
                    nodes.push(r * phases[idx[j]].cos());
                    nodes.push(r * phases[idx[j]].sin());
                }
                weights.push(wt * scale);
                let mut j = 0;
                while j < m {
                    idx[j] += 1;
                    if idx[j] < p {
                        break;
                    }
                    idx[j] = 0;
                    j += 1;
                }
                if j == m {
                    break;
                }
            }
        }
        Self { n: 2 * m, nodes, weights }
    }

    /// `θ = (t, √(1−t²) ω)` with `dθ = (1−t²)^{(n−3)/2} dt dω`, for odd `n`.
    fn recursive(n: usize, degree: usize) -> Self {
        let lower = Self::new(n - 1, degree);
        let pts = (degree + n - 3) / 2 + 2;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for (t, wt) in gauss_legendre_on(pts, -1.0, 1.0) {
            let c = (1.0 - t * t).sqrt();
            let jac = (1.0 - t * t).powi((n as i32 - 3) / 2);
            for i in 0..lower.len() {
                nodes.push(t);
                nodes.extend(lower.node(i).iter().map(|x| c * x));
                weights.push(wt * jac * lower.weights[i]);
            }
        }
        Self { n, nodes, weights }
    }
}

/// Collapsed Gauss-Legendre rule on `{t ∈ R^m_{≥0} : Σ t = 1}` (Lebesgue measure
/// in the first `m−1` coordinates).
fn simplex_rule(m: usize, pts: usize) -> Vec<(Vec<f64>, f64)> {
    if m == 1 {
        return vec![(vec![1.0], 1.0)];
    }
    let gl = gauss_legendre_on(pts, 0.0, 1.0);
    let mut out = Vec::new();
    let mut idx = vec![0usize; m - 1];
    loop {
        let mut rest = 1.0;
        let mut w = 1.0;
        let mut t = Vec::with_capacity(m);
        for &i in &idx {
            let (x, wx) = gl[i];
            t.push(rest * x);
            // t_k = rest·x_k, so dt_k = rest·dx_k
            w *= wx * rest;
            rest *= 1.0 - x;
        }
        t.push(rest);
        out.push((t, w));
        let mut k = 0;
        while k < m - 1 {
            idx[k] += 1;
            if idx[k] < pts {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == m - 1 {
            break;
        }
    }
    out
}

/// `vol(S^{n−1}) = 2π^{n/2}/Γ(n/2)`.
pub fn sphere_volume(n: usize) -> f64 {
    2.0 * PI.powf(n as f64 / 2.0) / gamma_half(n)
}

/// `∫_{S^{n−1}} θ^α dθ` in floating point.
pub fn monomial_moment(alpha: &[u32]) -> f64 {
    if alpha.iter().any(|a| a % 2 == 1) {
        return 0.0;
    }
    let n = alpha.len();
    let total: usize = alpha.iter().map(|&a| a as usize).sum();
    let num: f64 = alpha.iter().map(|&a| gamma_half(a as usize + 1)).product();
    2.0 * num / gamma_half(total + n)
}

/// `∫_{S^{n−1}} θ^α dθ = q·π^{n/2}` for even `n`; returns `q`.
pub fn monomial_moment_exact(alpha: &[u32]) -> BigRational {
    let n = alpha.len();
    assert!(n % 2 == 0, "exact moments need an even-dimensional ambient space");
    if alpha.iter().any(|a| a % 2 == 1) {
        return BigRational::zero();
    }
    // Γ(k + 1/2) = (2k)!/(4^k k!) √π
    let mut q = BigRational::from_integer(BigInt::from(2));
    let mut half: usize = 0;
    for &a in alpha {
        let k = (a / 2) as u64;
        q *= BigRational::new(factorial(2 * k), factorial(k) * BigInt::from(4).pow(k as u32));
        half += a as usize / 2;
    }
    q / BigRational::from_integer(factorial((half + n / 2 - 1) as u64))
}

/// `vol(S^{n−1}) = q·π^{n/2}` for even `n`; returns `q`.
pub fn sphere_volume_exact(n: usize) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    monomial_moment_exact(&vec![0; n])
}
