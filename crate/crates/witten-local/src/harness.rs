//! Table builders behind the `witten` subcommands.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::coeff::CoeffTable;
use crate::error::Result;
use crate::expansion::{expand, one_sided_limit, Functional};
use crate::model::Sign;
use crate::oracle::{extract_coefficients, noise_floor, oracle_sweep, remainder_slope, OracleValue};
use crate::scenario::Scenario;

/// Default allowed shortfall of a fitted remainder slope below `M + 2`.
pub const DEFAULT_SLOPE_TOL: f64 = 0.2;

pub fn coeff_text(sc: &Scenario) -> Result<String> {
    Ok(CoeffTable::for_model(&sc.local_model()?, sc.order)?.to_text())
}

fn fmt(x: f64) -> String {
    format!("{x:.12e}")
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Oracle values for every `ζ` on the configured grid.
pub fn oracle_table(sc: &Scenario) -> Result<Vec<(f64, Vec<OracleValue>)>> {
    let s = sc.script()?;
    let grid = sc.oracle.grid();
    sc.zeta_values
        .iter()
        .map(|&z| Ok((z, oracle_sweep(&s, &sc.sigma, sc.zeta_f(z), &grid, sc.oracle.method, sc.oracle.quadrature_tol)?)))
        .collect()
}

/// `zeta,epsilon,re,im,error,method`.
pub fn oracle_csv(sc: &Scenario) -> Result<String> {
    let mut rows = Vec::new();
    for (z, vals) in oracle_table(sc)? {
        for v in vals {
            rows.push(vec![fmt(z), fmt(v.eps), fmt(v.value), fmt(0.0), fmt(v.error), sc.oracle.method.label().into()]);
        }
    }
    to_csv(&["zeta", "epsilon", "re", "im", "error", "method"], &rows)
}

/// `zeta,j,functional,re,im`: one row per functional, then the coefficient total.
pub fn sweep_csv(sc: &Scenario) -> Result<String> {
    let s = sc.script()?;
    let mut rows = Vec::new();
    for &z in &sc.zeta_values {
        let ex = expand(&s, sc.zeta_f(z), sc.order)?;
        for c in &ex.coefficients {
            let mut by: BTreeMap<String, Complex64> = BTreeMap::new();
            by.insert(Functional::Deriv(c.j).label(), c.regular_value(&sc.sigma));
            for t in &c.singular {
                *by.entry(t.functional.label()).or_default() += t.value(&sc.sigma);
            }
            for (label, v) in &by {
                rows.push(vec![fmt(z), c.j.to_string(), label.clone(), fmt(v.re), fmt(v.im)]);
            }
            let total = c.value(&sc.sigma);
            rows.push(vec![fmt(z), c.j.to_string(), "total".into(), fmt(total.re), fmt(total.im)]);
        }
    }
    to_csv(&["zeta", "j", "functional", "re", "im"], &rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeStatus {
    Pass,
    Fail,
    FloorLimited,
    /// The expansion vanishes identically and the integral decays faster than every tested order.
    Superpolynomial,
}

impl SlopeStatus {
    pub fn label(self) -> &'static str {
        match self {
            SlopeStatus::Pass => "pass",
            SlopeStatus::Fail => "fail",
            SlopeStatus::FloorLimited => "floor-limited",
            SlopeStatus::Superpolynomial => "superpolynomial decay",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SlopeRow {
    pub zeta: f64,
    pub m: usize,
    pub slope: f64,
    pub points: usize,
    pub status: SlopeStatus,
}

#[derive(Clone, Debug)]
pub struct CoefficientRow {
    pub zeta: f64,
    pub j: usize,
    pub expansion: Complex64,
    pub extracted: f64,
}

#[derive(Clone, Debug)]
pub struct JumpRow {
    pub j: usize,
    pub plus: Complex64,
    pub minus: Complex64,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub slopes: Vec<SlopeRow>,
    pub coefficients: Vec<CoefficientRow>,
    pub jumps: Vec<JumpRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.slopes.iter().all(|r| r.status != SlopeStatus::Fail)
    }

    pub fn slopes_csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .slopes
            .iter()
            .map(|r| vec![fmt(r.zeta), r.m.to_string(), fmt(r.slope), r.points.to_string(), r.status.label().into()])
            .collect();
        to_csv(&["zeta", "M", "slope", "points", "status"], &rows)
    }

    pub fn coefficients_csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .coefficients
            .iter()
            .map(|r| {
                let diff = (r.extracted - r.expansion.re).abs();
                let rel = if r.expansion.norm() > 0.0 { fmt(diff / r.expansion.norm()) } else { String::new() };
                vec![fmt(r.zeta), r.j.to_string(), fmt(r.expansion.re), fmt(r.expansion.im), fmt(r.extracted), fmt(diff), rel]
            })
            .collect();
        to_csv(&["zeta", "j", "expansion_re", "expansion_im", "extracted", "abs_diff", "rel_diff"], &rows)
    }

    pub fn jumps_csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .jumps
            .iter()
            .map(|r| {
                let d = r.plus - r.minus;
                vec![r.j.to_string(), fmt(r.plus.re), fmt(r.plus.im), fmt(r.minus.re), fmt(r.minus.im), fmt(d.re), fmt(d.im)]
            })
            .collect();
        to_csv(&["j", "plus_re", "plus_im", "minus_re", "minus_im", "jump_re", "jump_im"], &rows)
    }
}

/// Expansion against oracle: remainder slopes for every `M ≤ order`, a
/// least-squares coefficient comparison, and one-sided limits when the `ζ`
/// values straddle `J(F)`. A slope fails when it is below `M + 2 − tol`.
pub fn verify(sc: &Scenario, tol: f64) -> Result<VerifyReport> {
    let s = sc.script()?;
    let grid = sc.oracle.grid();
    let mut slopes = Vec::new();
    let mut coefficients = Vec::new();
    for (z, vals) in oracle_table(sc)? {
        let ex = expand(&s, sc.zeta_f(z), sc.order)?;
        let floor: Vec<f64> = vals.iter().map(noise_floor).collect();
        let vanishing = ex.leading_order.is_none();
        for m in 0..=sc.order {
            let rem: Vec<f64> = vals.iter().map(|v| v.value - ex.partial_sum(v.eps, &sc.sigma, m).re).collect();
            let fit = remainder_slope(&grid, &rem, &floor)?;
            let status = if fit.floor_limited {
                SlopeStatus::FloorLimited
            } else if fit.slope < m as f64 + 2.0 - tol {
                SlopeStatus::Fail
            } else if vanishing {
                SlopeStatus::Superpolynomial
            } else {
                SlopeStatus::Pass
            };
            slopes.push(SlopeRow { zeta: z, m, slope: fit.slope, points: fit.points_used, status });
        }
        let j_max = (sc.order + 2).min(grid.len() - 1);
        let values: Vec<f64> = vals.iter().map(|v| v.value).collect();
        let fitted = extract_coefficients(&grid, &values, j_max).unwrap_or_else(|_| vec![f64::NAN; j_max + 1]);
        for c in &ex.coefficients {
            coefficients.push(CoefficientRow { zeta: z, j: c.j, expansion: c.value(&sc.sigma), extracted: fitted[c.j] });
        }
    }
    let mut jumps = Vec::new();
    let above = sc.zeta_values.iter().any(|&z| sc.zeta_f(z) > 0.0);
    let below = sc.zeta_values.iter().any(|&z| sc.zeta_f(z) < 0.0);
    if above && below {
        for j in 0..=sc.order {
            let plus = one_sided_limit(&s, j, Sign::Plus)?.value(&sc.sigma);
            let minus = one_sided_limit(&s, j, Sign::Minus)?.value(&sc.sigma);
            jumps.push(JumpRow { j, plus, minus });
        }
    }
    Ok(VerifyReport { slopes, coefficients, jumps })
}
