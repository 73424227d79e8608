// Energies and the counts that bound product sets from below.

use std::error::Error;

use heislab::energy::{dot_product_set_vectors, energy_add, energy_mul, m_count, product_profile, x_count};
use heislab::{FieldCtx, ScalarSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ctx = FieldCtx::prime(31)?;
    let interval: ScalarSet<_> = (1..=8).map(|v| ctx.from_int(v)).collect();
    let subgroup = ScalarSet::new(ctx.mult_subgroup(5)?);
    for (name, a) in [("{1..8}", &interval), ("subgroup of order 5", &subgroup)] {
        let profile = product_profile(&ctx, a)?;
        let len = a.len() as u128;
        println!(
            "{name}: E+ = {}, Ex = {}, |[A,A,0]^2| = {}, S = {}, X = {}, |A|^8/S = {:.1}",
            energy_add(&ctx, a),
            energy_mul(&ctx, a),
            profile.size,
            profile.s_count,
            x_count(&ctx, a)?,
            (len.pow(8) as f64) / profile.s_count as f64
        );
        let m = m_count(&ctx, a)?;
        println!("  M = {} (within 2 Ex^(1/2) |A|^3: {})", m.count, m.within_bound);
    }

    let f11 = FieldCtx::prime(11)?;
    let e: Vec<_> = [[1, 2], [2, 5], [3, 3], [7, 1]].iter().map(|v| f11.vector(v)).collect();
    let dots = dot_product_set_vectors(&f11, &e)?;
    println!("|Pi(E)| = {}, max row {}", dots.values.len(), dots.max_row);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
