//! Exact coefficient tables and fixed-point constants.

use witten_local::coeff::{leading_constants, CoeffTable, LeadingConstants};
use witten_local::LocalModel;

fn main() -> witten_local::Result<()> {
    let saddle = LocalModel::new(vec![2, -1], 0.0)?;
    let table = CoeffTable::for_model(&saddle, 3)?;
    print!("{}", table.to_text());

    for w in [vec![1, -1], vec![1, 1, -1], vec![1, 2], vec![-1, -1]] {
        let m = LocalModel::new(w.clone(), 0.0)?;
        match leading_constants(&m)? {
            LeadingConstants::Indefinite { c_f, d_plus, d_minus } => {
                println!("{w:?}: C_F = {c_f}, N+C_F = {d_plus}, N-C_F = {d_minus}")
            }
            LeadingConstants::Definite { c_f, d } => println!("{w:?}: C_F = {c_f}, 2^(d/2-1) C_F = {d}"),
        }
    }
    Ok(())
}
