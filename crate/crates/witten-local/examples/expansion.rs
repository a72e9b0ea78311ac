//! Expansion coefficients of a saddle-type local model on both sides of its level.

use witten_local::amplitude::{monomial, AmplitudeSpec, Bump, ScriptS};
use witten_local::expansion::expand;
use witten_local::schwartz::SchwartzSpec;
use witten_local::LocalModel;

fn main() -> witten_local::Result<()> {
    let m = LocalModel::new(vec![1, -1], 0.0)?;
    let f = AmplitudeSpec::new(vec![monomial(1, &[0; 4]), monomial(1, &[2, 0, 0, 0])], Bump::default());
    let s = ScriptS::new(&m, &f)?;
    let sigma = SchwartzSpec::new(vec![1.0, 1.0], 1.0)?;
    for zeta in [-0.25, 0.0, 0.25] {
        let r = expand(&s, zeta, 3)?;
        println!("zeta_F = {zeta:+}: leading order {:?}", r.leading_order);
        for (j, v) in r.values(&sigma).iter().enumerate() {
            println!("  A_{j} = {:+.10e} {:+.3e}i", v.re, v.im);
        }
    }
    println!("\nterms at zeta_F = 0:\n{}", expand(&s, 0.0, 3)?.to_csv(&sigma));
    Ok(())
}
