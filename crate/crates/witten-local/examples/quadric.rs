//! Integrals over the quadric level sets against the same quantities as t-integrals.

use witten_local::amplitude::{monomial, AmplitudeSpec, Bump, ScriptS};
use witten_local::kernel::interior_integral;
use witten_local::quadric::{amplitude_integral, w_dpm_integral, QuadricSlice};
use witten_local::LocalModel;

fn main() -> witten_local::Result<()> {
    let m = LocalModel::new(vec![1, 2, -1], 0.0)?;
    let f = AmplitudeSpec::new(vec![monomial(1, &[0; 6]), monomial(1, &[2, 0, 0, 0, 0, 2])], Bump::default());
    let s = ScriptS::new(&m, &f)?;
    for zeta in [-0.5, 0.0, 0.5] {
        let slice = QuadricSlice::new(&m, zeta)?;
        println!("zeta = {zeta:+}: surface integral of f = {:.12}", amplitude_integral(&slice, &f).value);
        for (k, l) in [(0, 0), (1, 1), (2, 2)] {
            let lhs = w_dpm_integral(&slice, &f, k, l)?.value;
            let rhs = interior_integral(&s, k, l, 2.0 * zeta).value;
            println!("  k={k} l={l}: {lhs:+.12e} vs {rhs:+.12e}");
        }
    }
    Ok(())
}
