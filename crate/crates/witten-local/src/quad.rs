//! One-dimensional quadrature: fixed Gauss-Legendre rules and a globally
//! adaptive Gauss-Kronrod (10/21) integrator with user breakpoints.

use std::collections::BinaryHeap;

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

/// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Clone, Copy, Debug)]
pub struct QuadOpts {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        Self { abs_tol: 1e-14, rel_tol: 1e-13, max_intervals: 4000 }
    }
}

impl QuadOpts {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Self {
        Self { abs_tol, rel_tol, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
    pub converged: bool,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    done: bool,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |p: &Piece| if p.done { -1.0 } else { p.error };
        key(self).total_cmp(&key(other))
    }
}

fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Piece {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[10];
    let mut rg = 0.0;
    let mut rabs = fc.abs() * WGK[10];
    for i in 0..10 {
        let x = h * XGK[i];
        let (f1, f2) = (f(c - x), f(c + x));
        rk += WGK[i] * (f1 + f2);
        rabs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            rg += WG[i / 2] * (f1 + f2);
        }
    }
    let value = rk * h;
    let raw = ((rk - rg) * h).abs();
    let floor = 50.0 * f64::EPSILON * rabs * h.abs();
    Piece { a, b, value, error: raw, done: raw <= floor || (b - a).abs() < 1e-15 * (a.abs() + b.abs()) }
}

/// Adaptive integral of `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOpts) -> QuadResult {
    integrate_with_breaks(f, &[a, b], opts)
}

/// Adaptive integral over `[points[0], points.last()]`, splitting first at every
/// interior point. Points outside the range or out of order are ignored.
pub fn integrate_with_breaks<F: FnMut(f64) -> f64>(mut f: F, points: &[f64], opts: &QuadOpts) -> QuadResult {
    let (lo, hi) = (points[0], points[points.len() - 1]);
    if !(hi > lo) {
        return QuadResult { value: 0.0, error: 0.0, evals: 0, converged: true };
    }
    let mut cuts = vec![lo];
    let mut inner: Vec<f64> = points[1..points.len() - 1].iter().copied().filter(|&x| x > lo && x < hi).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    cuts.extend(inner);
    cuts.push(hi);

    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    for w in cuts.windows(2) {
        heap.push(gk21(&mut f, w[0], w[1]));
        evals += 21;
    }
    loop {
        let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        let top_done = heap.peek().map(|p| p.done).unwrap_or(true);
        if error <= target || top_done || heap.len() >= opts.max_intervals {
            let converged = error <= target || top_done;
            return QuadResult { value, error, evals, converged };
        }
        let p = heap.pop().expect("nonempty");
        let m = 0.5 * (p.a + p.b);
        heap.push(gk21(&mut f, p.a, m));
        heap.push(gk21(&mut f, m, p.b));
        evals += 42;
    }
}

/// Breakpoints resolving a bump of width `w` centred at `c`, out to `reach·w`.
pub fn peak_breaks(c: f64, w: f64, reach: f64) -> Vec<f64> {
    let mut out = vec![c];
    let mut k = 1.0;
    while k <= reach {
        out.push(c - k * w);
        out.push(c + k * w);
        k *= 2.0;
    }
    out
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Gauss-Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre(n);
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    x.into_iter().zip(w).map(|(xi, wi)| (c + h * xi, h * wi)).collect()
}
