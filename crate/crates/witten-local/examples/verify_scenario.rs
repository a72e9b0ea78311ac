//! Loads a scenario file and prints the verification tables.
//!
//! `cargo run --example verify_scenario -- examples/scenarios/definite_d2.toml`

use std::path::PathBuf;

use witten_local::harness::{verify, DEFAULT_SLOPE_TOL};
use witten_local::scenario::Scenario;

fn main() -> witten_local::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/scenarios/definite_d2.toml"));
    let sc = Scenario::load(&path)?;
    let report = verify(&sc, DEFAULT_SLOPE_TOL)?;
    print!("{}", report.slopes_csv()?);
    print!("{}", report.coefficients_csv()?);
    println!("passed: {}", report.passed());
    Ok(())
}
