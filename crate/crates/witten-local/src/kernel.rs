//! The one-variable kernels
//! `F^±_{N,ζ}(v) = ∫_{±(v−ζ)}^∞ t^N 𝒮((t−v+ζ)/2, (t+v−ζ)/2) dt`
//! and their derivatives in closed form.

use num_traits::ToPrimitive;

use crate::amplitude::MeanFunction;
use crate::coeff::CTable;
use crate::model::Sign;
use crate::quad::{integrate_with_breaks, QuadOpts, QuadResult};

pub fn kernel_opts() -> QuadOpts {
    QuadOpts { abs_tol: 1e-15, rel_tol: 1e-14, max_intervals: 2000 }
}

/// `∫_{lo}^{reach} t^N (∂_− − ∂_+)^m 𝒮((t−v+ζ)/2, (t+v−ζ)/2) dt`.
pub fn shifted_integral(mean: &dyn MeanFunction, n: usize, m: usize, v: f64, zeta: f64, lo: f64) -> QuadResult {
    let hi = mean.reach();
    let c = v - zeta;
    let mut pts = vec![lo];
    pts.extend(mean.breaks());
    pts.push(hi);
    integrate_with_breaks(
        |t| t.powi(n as i32) * mean.op((t - c) / 2.0, (t + c) / 2.0, 0, 0, m),
        &pts,
        &kernel_opts(),
    )
}

/// `∫_{|ζ|}^∞ t^N (∂_− − ∂_+)^m 𝒮((t+ζ)/2, (t−ζ)/2) dt`, the kernel integrals at `v = 0`.
pub fn interior_integral(mean: &dyn MeanFunction, n: usize, m: usize, zeta: f64) -> QuadResult {
    shifted_integral(mean, n, m, 0.0, zeta, zeta.abs())
}

pub struct FKernel<'a> {
    pub mean: &'a dyn MeanFunction,
    pub n: usize,
    pub zeta: f64,
    pub sign: Sign,
    table: CTable,
}

impl<'a> FKernel<'a> {
    pub fn new(mean: &'a dyn MeanFunction, n: usize, zeta: f64, sign: Sign, m_max: usize) -> Self {
        Self { mean, n, zeta, sign, table: CTable::build(n, m_max.max(1)) }
    }

    fn lower(&self, v: f64) -> f64 {
        self.sign.as_f64() * (v - self.zeta)
    }

    pub fn eval(&self, v: f64) -> f64 {
        shifted_integral(self.mean, self.n, 0, v, self.zeta, self.lower(v)).value
    }

    /// `F^{(m)}(v)` from the interior integral and the boundary sum.
    pub fn derivative(&self, m: usize, v: f64) -> f64 {
        if m == 0 {
            return self.eval(v);
        }
        assert!(m <= self.table.m_max, "C table built up to m = {}", self.table.m_max);
        let lo = self.lower(v);
        let interior = shifted_integral(self.mean, self.n, m, v, self.zeta, lo).value / 2f64.powi(m as i32);
        self.boundary(m, v) + interior
    }

    /// Boundary part of `F^{(m)}(v)`.
    pub fn boundary(&self, m: usize, v: f64) -> f64 {
        let lo = self.lower(v);
        let s = self.sign.as_f64();
        // the lower endpoint maps to (ζ−v, v−ζ)_∓
        let (t, u) = match self.sign {
            Sign::Plus => (0.0, v - self.zeta),
            Sign::Minus => (self.zeta - v, 0.0),
        };
        let mut acc = 0.0;
        for i in 0..m {
            let e = (self.n as i64 + 1 - m as i64 + i as i64).max(0);
            let pre = (-s).powi((m + i) as i32) * lo.powi(e as i32);
            let mut inner = 0.0;
            for p in 0..=i {
                let q = i - p;
                let c = self.table.get(m, p, q).to_f64().unwrap_or(f64::NAN);
                if c == 0.0 {
                    continue;
                }
                let val = match self.sign {
                    Sign::Plus => self.mean.op(t, u, p, 0, q),
                    Sign::Minus => s.powi(p as i32) * self.mean.op(t, u, 0, p, q),
                };
                inner += c * val;
            }
            acc += pre * inner;
        }
        acc
    }
}

/// Finite-difference weights for the `m`-th derivative at `z` on nodes `x` (Fornberg).
pub fn fd_weights(z: f64, x: &[f64], m: usize) -> Vec<f64> {
    let n = x.len();
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Central finite-difference estimate of `g^{(m)}(v)` with step `h`, sixth order.
pub fn central_difference<G: FnMut(f64) -> f64>(mut g: G, v: f64, m: usize, h: f64) -> f64 {
    let half = (m + 1) / 2 + 2;
    let nodes: Vec<f64> = (0..=2 * half).map(|i| v + (i as f64 - half as f64) * h).collect();
    let w = fd_weights(v, &nodes, m);
    nodes.iter().zip(&w).map(|(x, wi)| wi * g(*x)).sum()
}
