//! Truncated Taylor jets in one variable and nested forward-mode dual numbers.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Taylor coefficients `c_k` of `x(t) = Σ c_k t^k`, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub c: Vec<f64>,
}

impl Jet {
    pub fn constant(v: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = v;
        Self { c }
    }

    /// The variable `x0 + t`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut j = Self::constant(x0, order);
        if order >= 1 {
            j.c[1] = 1.0;
        }
        j
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        self.c.get(k).copied().unwrap_or(0.0) * (1..=k).map(|i| i as f64).product::<f64>()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { c: self.c.iter().map(|x| x * s).collect() }
    }

    pub fn offset(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.c[0] += s;
        out
    }

    pub fn recip(&self) -> Self {
        let n = self.c.len();
        let mut r = vec![0.0; n];
        r[0] = 1.0 / self.c[0];
        for k in 1..n {
            let s: f64 = (1..=k).map(|i| self.c[i] * r[k - i]).sum();
            r[k] = -s * r[0];
        }
        Self { c: r }
    }

    pub fn exp(&self) -> Self {
        let n = self.c.len();
        let mut e = vec![0.0; n];
        e[0] = self.c[0].exp();
        for k in 1..n {
            let s: f64 = (1..=k).map(|i| i as f64 * self.c[i] * e[k - i]).sum();
            e[k] = s / k as f64;
        }
        Self { c: e }
    }

    pub fn sqrt(&self) -> Self {
        let n = self.c.len();
        let mut s = vec![0.0; n];
        s[0] = self.c[0].sqrt();
        for k in 1..n {
            let cross: f64 = (1..k).map(|i| s[i] * s[k - i]).sum();
            s[k] = (self.c[k] - cross) / (2.0 * s[0]);
        }
        Self { c: s }
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        let n = self.c.len().min(o.c.len());
        let c = (0..n).map(|k| (0..=k).map(|i| self.c[i] * o.c[k - i]).sum()).collect();
        Jet { c }
    }
}

impl Div for &Jet {
    type Output = Jet;
    fn div(self, o: &Jet) -> Jet {
        self * &o.recip()
    }
}

/// Scalars that can carry derivatives.
pub trait Real:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn cst(v: f64) -> Self;
    fn value(&self) -> f64;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;

    fn scale(&self, s: f64) -> Self {
        self.clone() * Self::cst(s)
    }

    fn powi(&self, n: i32) -> Self {
        if n < 0 {
            return Self::cst(1.0) / self.powi(-n);
        }
        let mut out = Self::cst(1.0);
        for _ in 0..n {
            out = out * self.clone();
        }
        out
    }
}

impl Real for f64 {
    fn cst(v: f64) -> Self {
        v
    }
    fn value(&self) -> f64 {
        *self
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn powi(&self, n: i32) -> Self {
        f64::powi(*self, n)
    }
}

/// `a + b·δ` with `δ² = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<T> {
    pub a: T,
    pub b: T,
}

impl<T: Real> Dual<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }
}

impl<T: Real> Add for Dual<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl<T: Real> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl<T: Real> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.a.clone() * o.a.clone(), self.a * o.b + self.b * o.a)
    }
}

impl<T: Real> Div for Dual<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let a = self.a.clone() / o.a.clone();
        let b = (self.b - a.clone() * o.b) / o.a;
        Self::new(a, b)
    }
}

impl<T: Real> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<T: Real> Real for Dual<T> {
    fn cst(v: f64) -> Self {
        Self::new(T::cst(v), T::cst(0.0))
    }
    fn value(&self) -> f64 {
        self.a.value()
    }
    fn exp(&self) -> Self {
        let e = self.a.exp();
        Self::new(e.clone(), e * self.b.clone())
    }
    fn sqrt(&self) -> Self {
        let s = self.a.sqrt();
        Self::new(s.clone(), self.b.clone() / (s.scale(2.0)))
    }
}
