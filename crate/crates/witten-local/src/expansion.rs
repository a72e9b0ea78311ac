//! Asymptotic expansion `I_F(ε) ~ Σ_j ε^{j+1} A_j` of the local integral
//! `I_F(ε) = ∫∫ e^{i(J−ζ)x/ε} f(w) σ(x) dx dw` near one fixed component.
//!
//! The model integral in `(T, U) = (r², s²)` is computed at `ε' = 2ε`,
//! `ζ' = 2ζ_F` with coefficients `a_j`; then `A_j = 2^{j+1} a_j / Λ_F`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::amplitude::{MeanFunction, ScriptS};
use crate::coeff::{c_def_jk, c_jkl, c_l_rational, c_pm_j0pq, CTable};
use crate::error::{domain, Result};
use crate::exact::{binomial, factorial, sign_pow, two_pow, ExactScalar};
use crate::kernel::interior_integral;
use crate::model::{LocalModel, Sign};
use crate::schwartz::SchwartzSpec;

/// Linear functional of `σ` multiplying a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functional {
    /// `σ^{(j)}(0)`
    Deriv(usize),
    /// `σ^{[j]}_±(0)`
    Bracket(usize, Sign),
}

impl Functional {
    pub fn eval(&self, sigma: &SchwartzSpec) -> Complex64 {
        match *self {
            Functional::Deriv(j) => sigma.deriv_at_zero(j),
            Functional::Bracket(j, s) => sigma.bracket(j, s),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Functional::Deriv(j) => format!("sigma^({j})(0)"),
            Functional::Bracket(j, s) => format!("sigma^[{j}]_{}(0)", s.symbol()),
        }
    }
}

/// `weight · factor · functional(σ)` with an exact weight and a numerical factor.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub functional: Functional,
    pub weight: ExactScalar,
    pub factor: f64,
    /// Quadrature error bound on `factor`.
    pub factor_error: f64,
    pub label: String,
}

impl Term {
    pub fn value(&self, sigma: &SchwartzSpec) -> Complex64 {
        self.weight.to_complex() * self.factor * self.functional.eval(sigma)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Coefficient {
    pub j: usize,
    /// Terms carrying `σ^{(j)}(0)`.
    pub regular: Vec<Term>,
    /// Terms carrying `σ^{[j]}_±(0)`.
    pub singular: Vec<Term>,
}

impl Coefficient {
    fn new(j: usize) -> Self {
        Self { j, regular: Vec::new(), singular: Vec::new() }
    }

    pub fn regular_value(&self, sigma: &SchwartzSpec) -> Complex64 {
        self.regular.iter().map(|t| t.value(sigma)).sum()
    }

    pub fn singular_value(&self, sigma: &SchwartzSpec) -> Complex64 {
        self.singular.iter().map(|t| t.value(sigma)).sum()
    }

    pub fn value(&self, sigma: &SchwartzSpec) -> Complex64 {
        self.regular_value(sigma) + self.singular_value(sigma)
    }

    /// Exact total weight of the singular terms on `σ^{[j]}_±(0)`.
    pub fn singular_weight(&self, side: Sign) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for t in &self.singular {
            if t.functional == Functional::Bracket(self.j, side) && t.factor == 1.0 {
                acc += &t.weight;
            }
        }
        acc
    }

    /// Sum of quadrature error bounds scaled by `|weight·functional|`.
    pub fn error_bound(&self, sigma: &SchwartzSpec) -> f64 {
        self.regular
            .iter()
            .chain(&self.singular)
            .map(|t| t.factor_error * (t.weight.to_complex() * t.functional.eval(sigma)).norm())
            .sum()
    }
}

/// How the boundary terms of the `ζ_F < 0` branch are signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BoundarySign {
    /// Signs obtained by expanding the kernel derivatives directly.
    #[default]
    Derived,
    /// The collected display with the common `(−1)^k` kept on both branches.
    Collected,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub model: LocalModel,
    pub zeta_f: f64,
    pub order: usize,
    /// `ℓ` with `I_F(ε) ≍ ε^ℓ`; `None` when every coefficient vanishes.
    pub leading_order: Option<usize>,
    pub coefficients: Vec<Coefficient>,
}

impl ExpansionResult {
    pub fn values(&self, sigma: &SchwartzSpec) -> Vec<Complex64> {
        self.coefficients.iter().map(|c| c.value(sigma)).collect()
    }

    /// `Σ_{j ≤ upto} ε^{j+1} A_j`.
    pub fn partial_sum(&self, eps: f64, sigma: &SchwartzSpec, upto: usize) -> Complex64 {
        self.coefficients.iter().take(upto + 1).map(|c| c.value(sigma) * eps.powi(c.j as i32 + 1)).sum()
    }

    /// One row per term: `j,part,functional,weight,factor,re,im`.
    pub fn to_csv(&self, sigma: &SchwartzSpec) -> String {
        let mut out = String::from("j,part,functional,weight,factor,re,im\n");
        for c in &self.coefficients {
            for (part, terms) in [("regular", &c.regular), ("singular", &c.singular)] {
                for t in terms {
                    let v = t.value(sigma);
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{:.17e},{:.17e},{:.17e}",
                        c.j,
                        part,
                        t.functional.label(),
                        t.weight,
                        t.factor,
                        v.re,
                        v.im
                    );
                }
            }
        }
        out
    }
}

/// `2^{j+1}/Λ_F`.
fn rescale(model: &LocalModel, j: usize) -> BigRational {
    two_pow(j as i64 + 1) / BigRational::from_integer(BigInt::from(model.lambda()))
}

fn rat_i(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

struct Integrals<'a> {
    mean: &'a dyn MeanFunction,
    zeta: f64,
    cache: HashMap<(usize, usize), (f64, f64)>,
}

impl<'a> Integrals<'a> {
    fn get(&mut self, n: usize, m: usize) -> (f64, f64) {
        let (mean, zeta) = (self.mean, self.zeta);
        *self.cache.entry((n, m)).or_insert_with(|| {
            let r = interior_integral(mean, n, m, zeta);
            (r.value, r.error)
        })
    }
}

/// Expansion coefficients `A_0..A_M` at `ζ_F`.
pub fn expand(s: &ScriptS, zeta_f: f64, order: usize) -> Result<ExpansionResult> {
    expand_with(s, zeta_f, order, BoundarySign::Derived)
}

pub fn expand_with(s: &ScriptS, zeta_f: f64, order: usize, mode: BoundarySign) -> Result<ExpansionResult> {
    if !zeta_f.is_finite() {
        return domain("ζ_F must be finite");
    }
    if s.is_definite() {
        expand_definite(s, zeta_f, order)
    } else {
        expand_indefinite(s, zeta_f, order, mode)
    }
}

pub fn expand_indefinite(s: &ScriptS, zeta_f: f64, order: usize, mode: BoundarySign) -> Result<ExpansionResult> {
    let model = &s.model;
    if model.is_definite() {
        return domain("expand_indefinite needs an indefinite model");
    }
    let zp = 2.0 * zeta_f;
    let coefficients = if zp == 0.0 {
        indefinite_at_zero(s, order)?
    } else {
        let side = if zp > 0.0 { Sign::Plus } else { Sign::Minus };
        let mut ints = Integrals { mean: s, zeta: zp, cache: HashMap::new() };
        (0..=order).map(|j| indefinite_off_zero(s, &mut ints, zp, side, j, mode)).collect::<Result<_>>()?
    };
    Ok(ExpansionResult { model: model.clone(), zeta_f, order, leading_order: Some(1), coefficients })
}

fn indefinite_at_zero(s: &ScriptS, order: usize) -> Result<Vec<Coefficient>> {
    let model = &s.model;
    let (lp, lm) = (model.l_plus(), model.l_minus());
    let big_l = lp + lm - 2;
    let mut ints = Integrals { mean: s, zeta: 0.0, cache: HashMap::new() };
    let mut out = Vec::new();
    for j in 0..=order {
        let mut c = Coefficient::new(j);
        let scale = rescale(model, j);
        for l in 0..=j.min(big_l) {
            let (v, e) = ints.get(big_l - l, j - l);
            c.regular.push(Term {
                functional: Functional::Deriv(j),
                weight: c_jkl(lp, lm, j, 0, l)?.scale(&scale),
                factor: v,
                factor_error: e,
                label: format!("interior l={l}"),
            });
        }
        if j > big_l {
            let total = j - big_l - 1;
            for p in 0..=total {
                let q = total - p;
                // c^+ pairs with ∂_−^p, c^− with (−∂_+)^p
                let wp = c_pm_j0pq(lp, lm, Sign::Plus, j, p, q)? * s.exact_origin_op(p, 0, q);
                let wm = c_pm_j0pq(lp, lm, Sign::Minus, j, p, q)?
                    * s.exact_origin_op(0, p, q).scale(&rat_i(sign_pow(p as i64)));
                for (side, w) in [(Sign::Plus, wp), (Sign::Minus, wm)] {
                    if w.is_zero() {
                        continue;
                    }
                    c.singular.push(Term {
                        functional: Functional::Bracket(j, side),
                        weight: w.scale(&scale),
                        factor: 1.0,
                        factor_error: 0.0,
                        label: format!("origin p={p} q={q}"),
                    });
                }
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// Coefficient `A_j` for `ζ' ≠ 0`, or its one-sided limit when `zp = 0` and
/// `side` names the approach direction.
fn indefinite_off_zero(
    s: &ScriptS,
    ints: &mut Integrals,
    zp: f64,
    side: Sign,
    j: usize,
    mode: BoundarySign,
) -> Result<Coefficient> {
    let model = &s.model;
    let (lp, lm) = (model.l_plus(), model.l_minus());
    let big_l = lp + lm - 2;
    let za = zp.abs();
    let scale = rescale(model, j);
    let pre = ExactScalar::term(two_pow(-2 - big_l as i64), 1, 0) * ExactScalar::i_pow(-(j as i64));
    let mut c = Coefficient::new(j);
    for k in 0..=big_l {
        for l in k..=(k + j).min(big_l) {
            let n = big_l - l;
            let mm = j + k - l;
            // interior
            let (v, e) = ints.get(n, mm);
            let zk = zp.powi(k as i32);
            if zk != 0.0 {
                c.regular.push(Term {
                    functional: Functional::Deriv(j),
                    weight: c_jkl(lp, lm, j, k, l)?.scale(&scale),
                    factor: zk * v,
                    factor_error: zk.abs() * e,
                    label: format!("interior k={k} l={l}"),
                });
            }
            if mm == 0 {
                continue;
            }
            // boundary at (|ζ'|, 0) for ζ' > 0 and (0, |ζ'|) for ζ' < 0
            let table = CTable::build(n, mm);
            let base = rat_i(sign_pow(k as i64)) * BigRational::from_integer(binomial(l as i64, k as i64))
                * c_l_rational(lp, lm, l)
                / BigRational::from_integer(factorial(mm as u64));
            let lo = big_l as i64 - j as i64 + 1;
            let hi = (big_l - l + k) as i64;
            for m in lo..=hi {
                let pq = m + j as i64 - big_l as i64 - 1;
                if pq < 0 {
                    continue;
                }
                let zpow = za.powi(m.max(k as i64) as i32);
                if zpow == 0.0 {
                    continue;
                }
                let mut sign = match side {
                    Sign::Plus => 1,
                    Sign::Minus => sign_pow(big_l as i64 - l as i64 - m + k as i64 + 1),
                };
                if side == Sign::Minus && mode == BoundarySign::Derived {
                    sign *= sign_pow(k as i64);
                }
                for p in 0..=pq as usize {
                    let q = pq as usize - p;
                    let cc = table.get(mm, p, q);
                    if cc.is_zero() {
                        continue;
                    }
                    let val = match side {
                        Sign::Plus => sign_pow(p as i64) as f64 * s.op(za, 0.0, 0, p, q),
                        Sign::Minus => s.op(0.0, za, p, 0, q),
                    };
                    let w = pre.scale(&(base.clone() * rat_i(sign) * cc)).scale(&scale);
                    c.regular.push(Term {
                        functional: Functional::Deriv(j),
                        weight: w,
                        factor: zpow * val,
                        factor_error: 0.0,
                        label: format!("boundary k={k} l={l} m={m} p={p} q={q}"),
                    });
                }
            }
        }
    }
    Ok(c)
}

pub fn expand_definite(s: &ScriptS, zeta_f: f64, order: usize) -> Result<ExpansionResult> {
    let model = &s.model;
    let sf = match model.definite_sign() {
        Some(sf) if model.is_definite() => sf,
        _ => return domain("expand_definite needs a definite model"),
    };
    let big_l = model.codim() / 2;
    let zp = 2.0 * zeta_f;
    let mut coefficients = Vec::new();
    let leading_order = if zp == 0.0 {
        for j in 0..=order {
            let mut c = Coefficient::new(j);
            if j + 1 >= big_l {
                let w = c_def_jk(big_l, j, 0)? * s.exact_origin_deriv(0, j + 1 - big_l);
                let w = w.scale(&(rat_i(sign_pow(if sf == Sign::Minus { j as i64 } else { 0 })) * rescale(model, j)));
                if !w.is_zero() {
                    c.singular.push(Term {
                        functional: Functional::Bracket(j, sf.flip()),
                        weight: w,
                        factor: 1.0,
                        factor_error: 0.0,
                        label: "origin".into(),
                    });
                }
            }
            coefficients.push(c);
        }
        Some(big_l)
    } else if Sign::of(zp) == Some(sf) {
        for j in 0..=order {
            coefficients.push(definite_matching(s, sf, zp, j)?);
        }
        Some(1)
    } else {
        coefficients = (0..=order).map(Coefficient::new).collect();
        None
    };
    Ok(ExpansionResult { model: model.clone(), zeta_f, order, leading_order, coefficients })
}

/// Matching-sign definite coefficient; `zp = 0` gives the limit from that side.
fn definite_matching(s: &ScriptS, sf: Sign, zp: f64, j: usize) -> Result<Coefficient> {
    let model = &s.model;
    let big_l = model.codim() / 2;
    let mut c = Coefficient::new(j);
    for k in 0..big_l {
        if j + k + 1 < big_l {
            continue;
        }
        let zk = zp.powi(k as i32);
        if zk == 0.0 {
            continue;
        }
        let sign = if sf == Sign::Minus { sign_pow((j + k) as i64) } else { 1 };
        let w = c_def_jk(big_l, j, k)?.scale(&(rat_i(sign) * rescale(model, j)));
        c.regular.push(Term {
            functional: Functional::Deriv(j),
            weight: w,
            factor: zk * s.deriv1(zp.abs(), j + k + 1 - big_l),
            factor_error: 0.0,
            label: format!("k={k}"),
        });
    }
    Ok(c)
}

/// `lim_{ζ_F → 0^±} A_j`, by evaluating the `ζ_F ≠ 0` branch at the endpoint.
pub fn one_sided_limit(s: &ScriptS, j: usize, side: Sign) -> Result<Coefficient> {
    if s.is_definite() {
        let sf = s.model.definite_sign().expect("definite");
        if side != sf {
            return Ok(Coefficient::new(j));
        }
        return definite_matching(s, sf, 0.0, j);
    }
    let mut ints = Integrals { mean: s, zeta: 0.0, cache: HashMap::new() };
    indefinite_off_zero(s, &mut ints, 0.0, side, j, BoundarySign::Derived)
}

/// Singular weight at order `j_F = d/2 − 1` on `σ^{[j_F]}_±(0)` from the `ζ_F = 0` expansion.
pub fn leading_singular_weight(s: &ScriptS, side: Sign) -> Result<ExactScalar> {
    let jf = s.model.j_f_order();
    let r = expand(s, 0.0, jf)?;
    Ok(r.coefficients[jf].singular_weight(side))
}
