//! Local amplitudes `f(x) = p(x)·β(|T_F^{-1} x|²)` and their spherical means.
//!
//! `p` is a polynomial with rational coefficients and `β` a smooth cutoff that
//! equals one on `[0, R0²]` and vanishes beyond `R1²`. Because the cutoff is
//! radial in the rescaled coordinates `w = T_F^{-1} x`, the mean
//! `𝒮(T, U) = S_{f∘T_F}(√T, √U)` factors as `P(T, U)·β(T + U)` with `P` an exact
//! polynomial whose coefficients are rational multiples of `π^{d/2}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::autodiff::{Jet, Real};
use crate::error::{domain, Error, Result};
use crate::exact::{binomial, factorial, ExactScalar};
use crate::model::{LocalModel, Sign};
use crate::sphere::{monomial_moment_exact, sphere_volume_exact, SphereRule};

/// Smooth radial cutoff: one for `ρ ≤ r0`, zero for `ρ ≥ r1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bump {
    pub r0: f64,
    pub r1: f64,
}

impl Default for Bump {
    fn default() -> Self {
        Self { r0: 1.5, r1: 2.5 }
    }
}

impl Bump {
    pub fn new(r0: f64, r1: f64) -> Result<Self> {
        if !(r0 > 0.0 && r1 > r0 && r1.is_finite()) {
            return domain(format!("bump radii must satisfy 0 < r0 < r1, got {r0}, {r1}"));
        }
        Ok(Self { r0, r1 })
    }

    /// `b(ρ) = 1 − s((ρ − r0)/(r1 − r0))` with `s(y) = e(y)/(e(y) + e(1−y))`, `e(y) = exp(−1/y)`.
    pub fn profile(&self, rho: f64) -> f64 {
        self.beta(rho * rho)
    }

    /// `β(x) = b(√x)`, extended by one for `x < 0`.
    pub fn beta(&self, x: f64) -> f64 {
        self.beta_real(x)
    }

    pub fn beta_real<T: Real>(&self, x: T) -> T {
        let v = x.value();
        if v <= self.r0 * self.r0 {
            return T::cst(1.0);
        }
        if v >= self.r1 * self.r1 {
            return T::cst(0.0);
        }
        let y = (x.sqrt() - T::cst(self.r0)) / T::cst(self.r1 - self.r0);
        let one = T::cst(1.0);
        let e1 = (-(one.clone() / y.clone())).exp();
        let e2 = (-(one.clone() / (one.clone() - y))).exp();
        one - e1.clone() / (e1 + e2)
    }

    /// Taylor jet of `β` at `x`.
    pub fn beta_jet(&self, x: f64, order: usize) -> Jet {
        if x <= self.r0 * self.r0 {
            return Jet::constant(1.0, order);
        }
        if x >= self.r1 * self.r1 {
            return Jet::constant(0.0, order);
        }
        let y = Jet::variable(x, order).sqrt().offset(-self.r0).scale(1.0 / (self.r1 - self.r0));
        let e1 = y.recip().scale(-1.0).exp();
        let e2 = y.scale(-1.0).offset(1.0).recip().scale(-1.0).exp();
        let s = &e1 / &(&e1 + &e2);
        s.scale(-1.0).offset(1.0)
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Config(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((i, f)) = t.split_once('.') {
        let neg = i.starts_with('-');
        let digits = format!("{}{}", i.trim_start_matches(['-', '+']), f);
        let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        let q = BigRational::new(n, BigInt::from(10).pow(f.len() as u32));
        return Ok(if neg { -q } else { q });
    }
    Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?))
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

mod rational_serde {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Float(f64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let text = match Raw::deserialize(d)? {
            Raw::Int(i) => i.to_string(),
            Raw::Float(f) => format!("{f:?}"),
            Raw::Text(t) => t,
        };
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    #[serde(with = "rational_serde")]
    pub coeff: BigRational,
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(coeff: BigRational, exponents: Vec<u32>) -> Self {
        Self { coeff, exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeSpec {
    pub monomials: Vec<Monomial>,
    #[serde(default)]
    pub bump: Bump,
}

impl AmplitudeSpec {
    pub fn new(monomials: Vec<Monomial>, bump: Bump) -> Self {
        Self { monomials, bump }
    }

    /// `f = c·β` near the fixed component.
    pub fn constant(d: usize, c: i64) -> Self {
        Self::new(vec![Monomial::new(BigRational::from_integer(c.into()), vec![0; d])], Bump::default())
    }

    pub fn dim(&self) -> Option<usize> {
        self.monomials.first().map(|m| m.exponents.len())
    }

    pub fn degree(&self) -> u32 {
        self.monomials.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn validate(&self, model: &LocalModel) -> Result<()> {
        Bump::new(self.bump.r0, self.bump.r1)?;
        if let Some(m) = self.monomials.iter().find(|m| m.exponents.len() != model.codim()) {
            return domain(format!(
                "monomial has {} exponents but the model has dimension {}",
                m.exponents.len(),
                model.codim()
            ));
        }
        Ok(())
    }

    pub fn poly<T: Real>(&self, x: &[T]) -> T {
        let mut acc = T::cst(0.0);
        for m in &self.monomials {
            let mut t = T::cst(m.coeff.to_f64().unwrap_or(f64::NAN));
            for (xi, &e) in x.iter().zip(&m.exponents) {
                if e > 0 {
                    t = t * xi.powi(e as i32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// `f(x)` with the cutoff taken in `|T_F^{-1} x|² = Σ |λ_i| x_i²`.
    pub fn eval<T: Real>(&self, model: &LocalModel, x: &[T]) -> T {
        let mut r2 = T::cst(0.0);
        for (i, xi) in x.iter().enumerate() {
            r2 = r2 + xi.clone() * xi.clone() * T::cst(model.coordinate_weight(i) as f64);
        }
        self.poly(x) * self.bump.beta_real(r2)
    }
}

/// Access to `𝒮` and its partial derivatives; `∂_+` acts on the first argument.
pub trait MeanFunction: Sync {
    /// `∂_−^{a} ∂_+^{b} 𝒮(t, u)`, evaluated on the smooth extension for negative arguments.
    fn deriv(&self, t: f64, u: f64, a_minus: usize, b_plus: usize) -> f64;
    /// `𝒮(T, U)` vanishes once `T + U ≥ reach`.
    fn reach(&self) -> f64;
    /// Values of `T + U` where `𝒮` changes character (cutoff transitions).
    fn breaks(&self) -> Vec<f64> {
        Vec::new()
    }

    /// `∂_−^{pm} ∂_+^{pp} (∂_− − ∂_+)^q 𝒮(t, u)`.
    fn op(&self, t: f64, u: f64, pm: usize, pp: usize, q: usize) -> f64 {
        (0..=q)
            .map(|i| {
                let c = binomial(q as i64, i as i64).to_f64().unwrap_or(0.0);
                let s = if (q - i) % 2 == 0 { 1.0 } else { -1.0 };
                s * c * self.deriv(t, u, pm + i, pp + q - i)
            })
            .sum()
    }
}

/// Normalization used in the origin-derivative/Laplacian identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaplacianNormalization {
    /// `2^k n(n+2)⋯(n+2k−2)`, the mean-value (Pizzetti) constant.
    Pizzetti,
    /// `(2n)^k`, which agrees with the former only for `k ≤ 1`.
    PowerOfTwoN,
}

/// `𝒮_{f∘T_F}` for one model and amplitude.
#[derive(Clone, Debug)]
pub struct ScriptS {
    pub model: LocalModel,
    pub amplitude: AmplitudeSpec,
    pub bump: Bump,
    /// Coefficients of `T^a U^b` in `P`, in units of `π^{d/2}`.
    pub poly: BTreeMap<(u32, u32), BigRational>,
    pub pi_power: i32,
    poly_f: Vec<(u32, u32, f64)>,
}

fn falling(n: u32, k: usize) -> f64 {
    (0..k).map(|i| n as f64 - i as f64).product()
}

impl ScriptS {
    pub fn new(model: &LocalModel, amplitude: &AmplitudeSpec) -> Result<Self> {
        amplitude.validate(model)?;
        let d = model.codim();
        let np = if model.is_definite() { d } else { model.n_plus };
        let mut poly: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for m in &amplitude.monomials {
            if m.exponents.iter().any(|e| e % 2 == 1) || m.coeff.is_zero() {
                continue;
            }
            // x = T_F w divides each coordinate pair by √|λ_j|
            let mut q = m.coeff.clone();
            for (j, pair) in m.exponents.chunks(2).enumerate() {
                let e = (pair[0] + pair[1]) / 2;
                q /= BigRational::from_integer(BigInt::from(model.weights[j].abs()).pow(e));
            }
            let (ap, am) = m.exponents.split_at(np);
            q *= monomial_moment_exact(ap);
            if !am.is_empty() {
                q *= monomial_moment_exact(am);
            }
            let key = (ap.iter().sum::<u32>() / 2, am.iter().sum::<u32>() / 2);
            let slot = poly.entry(key).or_insert_with(BigRational::zero);
            *slot += q;
        }
        poly.retain(|_, v| !v.is_zero());
        let pi_power = d as i32 / 2;
        let pi = std::f64::consts::PI.powi(pi_power);
        let poly_f = poly.iter().map(|(&(a, b), q)| (a, b, q.to_f64().unwrap_or(f64::NAN) * pi)).collect();
        Ok(Self { model: model.clone(), amplitude: amplitude.clone(), bump: amplitude.bump, poly, pi_power, poly_f })
    }

    pub fn is_definite(&self) -> bool {
        self.model.is_definite()
    }

    /// `𝒮(t, u)` without derivative bookkeeping.
    pub fn value(&self, t: f64, u: f64) -> f64 {
        let b = self.bump.beta(t + u);
        if b == 0.0 {
            0.0
        } else {
            b * self.poly_deriv(t, u, 0, 0)
        }
    }

    /// `∂_U^{a} ∂_T^{b} P(t, u)`.
    pub fn poly_deriv(&self, t: f64, u: f64, a: usize, b: usize) -> f64 {
        self.poly_f
            .iter()
            .filter(|(pt, pu, _)| *pt as usize >= b && *pu as usize >= a)
            .map(|&(pt, pu, c)| {
                c * falling(pt, b) * t.powi(pt as i32 - b as i32) * falling(pu, a) * u.powi(pu as i32 - a as i32)
            })
            .sum()
    }

    /// `𝒮^{(k)}(t)` of a definite model.
    pub fn deriv1(&self, t: f64, k: usize) -> f64 {
        self.deriv(t, 0.0, 0, k)
    }

    /// Exact `∂_−^{a} ∂_+^{b} 𝒮(0, 0)`; the cutoff is flat at the origin.
    pub fn exact_origin_deriv(&self, a_minus: usize, b_plus: usize) -> ExactScalar {
        let q = self.poly.get(&(b_plus as u32, a_minus as u32)).cloned().unwrap_or_else(BigRational::zero);
        let q = q * BigRational::from_integer(factorial(a_minus as u64) * factorial(b_plus as u64));
        ExactScalar::term(q, self.pi_power, 0)
    }

    /// Exact `∂_−^{pm} ∂_+^{pp} (∂_− − ∂_+)^q 𝒮(0, 0)`.
    pub fn exact_origin_op(&self, pm: usize, pp: usize, q: usize) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for i in 0..=q {
            let c = BigRational::from_integer(binomial(q as i64, i as i64) * if (q - i) % 2 == 0 { 1 } else { -1 });
            acc += self.exact_origin_deriv(pm + i, pp + q - i).scale(&c);
        }
        acc
    }

    /// `S_{f∘T_F}(r, s) = 𝒮(r², s²)`.
    pub fn spherical_mean(&self, r: f64, s: f64) -> f64 {
        self.deriv(r * r, s * s, 0, 0)
    }

    /// `S_{f∘T_F}(r, s)` by product quadrature on the spheres.
    pub fn spherical_mean_quadrature(&self, r: f64, s: f64) -> f64 {
        let amp = &self.amplitude;
        let model = &self.model;
        sphere_mean_of(model, r, s, amp.degree() as usize + 2, |x| amp.eval(model, x))
    }

    /// `∂_−^{dm} ∂_+^{dp} 𝒮(t, u)` on the closed quadrant.
    pub fn script_s_eval(&self, t: f64, u: f64, dm: usize, dp: usize) -> Result<f64> {
        if t < 0.0 || u < 0.0 || !t.is_finite() || !u.is_finite() {
            return domain(format!("𝒮 is defined for T, U ≥ 0, got ({t}, {u})"));
        }
        if self.is_definite() && (u != 0.0 || dm != 0) {
            return domain("a definite model has a one-variable mean");
        }
        Ok(self.deriv(t, u, dm, dp))
    }

    /// `(Δ^Q_±)^k f(0)` with `Δ^Q_± = Σ_{i in block} |λ_i|^{-1} ∂_i²`; `None` means the whole space.
    pub fn laplacian_power_at_origin(&self, side: Option<Sign>, k: usize) -> BigRational {
        let d = self.model.codim();
        let block = match side {
            None => 0..d,
            Some(Sign::Plus) => 0..self.model.n_plus,
            Some(Sign::Minus) => self.model.n_plus..d,
        };
        let mut acc = BigRational::zero();
        for m in &self.amplitude.monomials {
            let e = &m.exponents;
            let inside = e.iter().enumerate().all(|(i, &a)| block.contains(&i) || a == 0);
            if !inside || e.iter().any(|a| a % 2 == 1) || m.degree() as usize != 2 * k {
                continue;
            }
            let mut term = m.coeff.clone() * BigRational::from_integer(factorial(k as u64));
            for (i, &a) in e.iter().enumerate() {
                let b = (a / 2) as u64;
                term *= BigRational::new(factorial(a as u64), factorial(b));
                term /= BigRational::from_integer(BigInt::from(self.model.coordinate_weight(i)).pow(b as u32));
            }
            acc += term;
        }
        acc
    }

    /// Right-hand side of `∂^k 𝒮(0) = vol·(Δ^Q)^k f(0) / N_k` for the chosen `N_k`.
    pub fn origin_derivative_by_laplacian(
        &self,
        side: Option<Sign>,
        k: usize,
        norm: LaplacianNormalization,
    ) -> Result<ExactScalar> {
        let (n, other) = match (side, self.is_definite()) {
            (None, true) => (self.model.codim(), 0),
            (Some(Sign::Plus), false) => (self.model.n_plus, self.model.n_minus),
            (Some(Sign::Minus), false) => (self.model.n_minus, self.model.n_plus),
            _ => return domain("side must be given exactly for indefinite models"),
        };
        let denom: BigInt = match norm {
            LaplacianNormalization::Pizzetti => (0..k).map(|i| BigInt::from(2 * (n + 2 * i))).product(),
            LaplacianNormalization::PowerOfTwoN => BigInt::from(2 * n).pow(k as u32),
        };
        let vol = sphere_volume_exact(n) * sphere_volume_exact(other);
        let q = vol * self.laplacian_power_at_origin(side, k) / BigRational::from_integer(denom);
        Ok(ExactScalar::term(q, self.pi_power, 0))
    }

    /// Left-hand side of the same identity from the exact mean.
    pub fn origin_derivative(&self, side: Option<Sign>, k: usize) -> ExactScalar {
        match side {
            Some(Sign::Minus) => self.exact_origin_deriv(k, 0),
            _ => self.exact_origin_deriv(0, k),
        }
    }
}

impl MeanFunction for ScriptS {
    fn deriv(&self, t: f64, u: f64, a_minus: usize, b_plus: usize) -> f64 {
        if a_minus + b_plus == 0 {
            return self.value(t, u);
        }
        let jet = self.bump.beta_jet(t + u, a_minus + b_plus);
        let mut acc = 0.0;
        for i in 0..=a_minus {
            for k in 0..=b_plus {
                let beta = jet.derivative(i + k);
                if beta == 0.0 {
                    continue;
                }
                let c = (binomial(a_minus as i64, i as i64) * binomial(b_plus as i64, k as i64)).to_f64().unwrap_or(0.0);
                acc += c * beta * self.poly_deriv(t, u, a_minus - i, b_plus - k);
            }
        }
        acc
    }

    fn reach(&self) -> f64 {
        self.bump.r1 * self.bump.r1
    }

    fn breaks(&self) -> Vec<f64> {
        vec![self.bump.r0 * self.bump.r0, self.bump.r1 * self.bump.r1]
    }
}

/// `S_{g∘T_F}(r, s) = ∫∫ g(T_F(rθ⁺, sθ⁻)) dθ⁺ dθ⁻`, exact for polynomial `g∘T_F` of degree `≤ degree`.
pub fn sphere_mean_of<F: FnMut(&[f64]) -> f64>(model: &LocalModel, r: f64, s: f64, degree: usize, mut g: F) -> f64 {
    let d = model.codim();
    let scale: Vec<f64> = (0..d).map(|i| (model.coordinate_weight(i) as f64).sqrt().recip()).collect();
    let mut x = vec![0.0; d];
    if model.is_definite() {
        let rule = SphereRule::new(d, degree);
        return rule.integrate(|th| {
            for i in 0..d {
                x[i] = r * th[i] * scale[i];
            }
            g(&x)
        });
    }
    let (np, nm) = (model.n_plus, model.n_minus);
    let rp = SphereRule::new(np, degree);
    let rm = SphereRule::new(nm, degree);
    let mut acc = 0.0;
    for i in 0..rp.len() {
        let tp = rp.node(i);
        for k in 0..np {
            x[k] = r * tp[k] * scale[k];
        }
        let inner = rm.integrate(|tm| {
            for k in 0..nm {
                x[np + k] = s * tm[k] * scale[np + k];
            }
            g(&x)
        });
        acc += rp.weights[i] * inner;
    }
    acc
}

/// Monomial shorthand used by examples and tests: `coeff · Π x_i^{e_i}`.
pub fn monomial(coeff: i64, exponents: &[u32]) -> Monomial {
    Monomial::new(BigRational::from_integer(coeff.into()), exponents.to_vec())
}

/// Rational monomial shorthand.
pub fn monomial_q(num: i64, den: i64, exponents: &[u32]) -> Monomial {
    Monomial::new(BigRational::new(num.into(), den.into()), exponents.to_vec())
}


#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sample(weights: Vec<i64>, monos: Vec<Monomial>) -> ScriptS {
        let m = LocalModel::new(weights, 0.0).unwrap();
        ScriptS::new(&m, &AmplitudeSpec::new(monos, Bump::new(1.5, 2.5).unwrap())).unwrap()
    }

    #[test]
    fn square_of_first_coordinate() {
        let s = sample(vec![1, -1], vec![monomial(1, &[2, 0, 0, 0])]);
        for r in [0.1, 0.7, 1.0] {
            assert!((s.spherical_mean(r, 0.3) - 4.0 * PI * PI * r * r / 2.0).abs() < 1e-12);
        }
        assert_eq!(s.exact_origin_deriv(0, 1), ExactScalar::term(BigRational::from_integer(2.into()), 2, 0));
    }

    #[test]
    fn odd_monomials_average_out() {
        let s = sample(vec![1, -1], vec![monomial(1, &[1, 0, 0, 0]), monomial(3, &[0, 1, 2, 1])]);
        assert!(s.poly.is_empty());
        assert_eq!(s.spherical_mean(0.8, 0.4), 0.0);
    }

    #[test]
    fn exact_mean_matches_sphere_quadrature() {
        let cases = vec![
            sample(vec![2, -1], vec![monomial(1, &[2, 2, 0, 0]), monomial_q(-3, 2, &[0, 0, 4, 0]), monomial(1, &[0; 4])]),
            sample(vec![1, 3, -2], vec![monomial(2, &[0, 2, 2, 0, 0, 2]), monomial(1, &[1, 0, 0, 0, 0, 0]), monomial(5, &[0; 6])]),
            sample(vec![-1, -2], vec![monomial(1, &[4, 0, 0, 2]), monomial(-1, &[0, 0, 2, 0])]),
            sample(vec![3], vec![monomial(1, &[2, 2]), monomial(7, &[0, 0])]),
        ];
        for s in &cases {
            for (r, u) in [(0.3, 0.5), (1.0, 0.2), (1.2, 1.1), (1.6, 0.9), (0.4, 2.0)] {
                let u = if s.is_definite() { 0.0 } else { u };
                let exact = s.spherical_mean(r, u);
                let quad = s.spherical_mean_quadrature(r, u);
                assert!((exact - quad).abs() < 1e-11 * exact.abs().max(1.0), "{exact} vs {quad}");
            }
        }
    }

    #[test]
    fn bump_jet_matches_finite_differences() {
        let b = Bump::new(1.0, 2.0).unwrap();
        for x in [1.2, 2.0, 2.9, 3.7] {
            let jet = b.beta_jet(x, 3);
            let h = 1e-4;
            let fd1 = (b.beta(x + h) - b.beta(x - h)) / (2.0 * h);
            let fd2 = (b.beta(x + h) - 2.0 * b.beta(x) + b.beta(x - h)) / (h * h);
            assert!((jet.value() - b.beta(x)).abs() < 1e-15);
            assert!((jet.derivative(1) - fd1).abs() < 1e-6, "x={x}");
            assert!((jet.derivative(2) - fd2).abs() < 1e-4, "x={x}");
        }
        assert_eq!(b.profile(0.9), 1.0);
        assert_eq!(b.profile(2.0), 0.0);
        assert!((b.profile(1.5) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn delta_operators_match_partial_derivatives() {
        // δ_r = (2r)^{-1} ∂_r on S(r, s) = 𝒮(r², s²)
        let s = sample(vec![1, -2], vec![monomial(1, &[2, 0, 2, 0]), monomial(2, &[4, 0, 0, 0]), monomial(1, &[0; 4])]);
        let h = 1e-5;
        for (r, u) in [(0.5, 0.7), (1.3, 0.6), (1.4, 1.1)] {
            let dr = (s.spherical_mean_quadrature(r + h, u) - s.spherical_mean_quadrature(r - h, u)) / (2.0 * h) / (2.0 * r);
            let ds = (s.spherical_mean_quadrature(r, u + h) - s.spherical_mean_quadrature(r, u - h)) / (2.0 * h) / (2.0 * u);
            let scale = s.spherical_mean(r, u).abs().max(1.0);
            assert!((dr - s.deriv(r * r, u * u, 0, 1)).abs() < 1e-6 * scale);
            assert!((ds - s.deriv(r * r, u * u, 1, 0)).abs() < 1e-6 * scale);
        }
    }

    #[test]
    fn strict_domain() {
        let s = sample(vec![1, -1], vec![monomial(1, &[0; 4])]);
        assert!(s.script_s_eval(-0.1, 0.0, 0, 0).is_err());
        assert!(s.script_s_eval(0.1, 0.2, 1, 1).is_ok());
    }

    #[test]
    fn laplacian_identity_with_mean_value_normalization() {
        let s = sample(
            vec![2, 1, -3],
            vec![monomial(1, &[2, 0, 2, 0, 0, 0]), monomial(3, &[0, 4, 0, 0, 0, 0]), monomial(1, &[0, 0, 0, 0, 2, 2])],
        );
        for side in [Sign::Plus, Sign::Minus] {
            for k in 0..=2 {
                let lhs = s.origin_derivative(Some(side), k);
                let rhs = s.origin_derivative_by_laplacian(Some(side), k, LaplacianNormalization::Pizzetti).unwrap();
                assert_eq!(lhs, rhs, "side {side:?} k={k}");
            }
        }
        let disk = sample(vec![1], vec![monomial(1, &[4, 0]), monomial(2, &[2, 2]), monomial(1, &[0, 4])]);
        assert_eq!(disk.origin_derivative(None, 2), ExactScalar::term(BigRational::from_integer(4.into()), 1, 0));
        let literal = disk.origin_derivative_by_laplacian(None, 2, LaplacianNormalization::PowerOfTwoN).unwrap();
        assert_eq!(literal, ExactScalar::term(BigRational::from_integer(8.into()), 1, 0));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
