//! One-sided limits of the coefficients at the fixed level and the jump they carry.

use witten_local::amplitude::{AmplitudeSpec, ScriptS};
use witten_local::expansion::one_sided_limit;
use witten_local::oracle::{extract_coefficients, oracle_integral, OracleMethod};
use witten_local::schwartz::SchwartzSpec;
use witten_local::{LocalModel, Sign};

fn main() -> witten_local::Result<()> {
    let m = LocalModel::new(vec![1, -1], 0.0)?;
    let s = ScriptS::new(&m, &AmplitudeSpec::constant(4, 1))?;
    let sigma = SchwartzSpec::new(vec![1.0, 1.0], 1.0)?;
    for j in 0..=2 {
        let p = one_sided_limit(&s, j, Sign::Plus)?.value(&sigma);
        let q = one_sided_limit(&s, j, Sign::Minus)?.value(&sigma);
        println!("j = {j}: from above {:+.6}, from below {:+.6}, jump {:+.6}", p.re, q.re, (p - q).re);
    }
    for zeta in [0.125, -0.125, 0.015625, -0.015625] {
        let eps: Vec<f64> = (0..8).map(|i| f64::abs(zeta) / 16.0 * 0.5f64.powi(i)).collect();
        let v = eps
            .iter()
            .map(|&e| oracle_integral(&s, &sigma, zeta, e, OracleMethod::Reduced2d).map(|r| r.value))
            .collect::<witten_local::Result<Vec<f64>>>()?;
        let a = extract_coefficients(&eps, &v, 2)?;
        println!("zeta_F = {zeta:+}: fitted A_1 = {:+.6}", a[1]);
    }
    Ok(())
}
