//! Direct quadrature of the local integral by two routes, and the remainder
//! slope of the expansion against it.

use witten_local::amplitude::{monomial, AmplitudeSpec, Bump, ScriptS};
use witten_local::expansion::expand;
use witten_local::oracle::{noise_floor, oracle_integral, oracle_sweep, remainder_slope, OracleMethod, DEFAULT_TOL};
use witten_local::schwartz::SchwartzSpec;
use witten_local::LocalModel;

fn main() -> witten_local::Result<()> {
    let m = LocalModel::new(vec![1, -2], 0.0)?;
    let f = AmplitudeSpec::new(
        vec![monomial(1, &[0; 4]), monomial(1, &[2, 0, 0, 0]), monomial(1, &[0, 0, 0, 4])],
        Bump::new(0.5, 2.0)?,
    );
    let s = ScriptS::new(&m, &f)?;
    let sigma = SchwartzSpec::new(vec![1.0, 0.5], 1.0)?;
    let zeta = 0.5;

    for eps in [0.1, 0.01] {
        let a = oracle_integral(&s, &sigma, zeta, eps, OracleMethod::Reduced2d)?;
        let b = oracle_integral(&s, &sigma, zeta, eps, OracleMethod::Split1d)?;
        println!("eps = {eps}: reduced-2d {:.15e}, split-1d {:.15e}", a.value, b.value);
    }

    let grid: Vec<f64> = (3..=12).map(|k| 2f64.powi(-k)).collect();
    let vals = oracle_sweep(&s, &sigma, zeta, &grid, OracleMethod::Reduced2d, DEFAULT_TOL)?;
    let ex = expand(&s, zeta, 2)?;
    let floor: Vec<f64> = vals.iter().map(noise_floor).collect();
    for order in 0..=2 {
        let rem: Vec<f64> = vals.iter().map(|v| v.value - ex.partial_sum(v.eps, &sigma, order).re).collect();
        let fit = remainder_slope(&grid, &rem, &floor)?;
        println!("M = {order}: slope {:.3} from {} points", fit.slope, fit.points_used);
    }
    Ok(())
}
