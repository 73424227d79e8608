// Fourier analysis on F_q^n: Plancherel, orthogonality triples and the
// bilinear count of two lifted multisets.

use std::error::Error;

use heislab::spectral::{
    bilinear_count_n, fourier_transform, lifted_sets_for_thm1, plancherel_residual, triple_count_direct,
    triple_count_spectral, DensityTable,
};
use heislab::FieldCtx;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ctx = FieldCtx::prime(7)?;
    let e: Vec<_> = [[1, 0], [0, 1], [1, 1], [2, 3], [3, 5], [6, 6]]
        .iter()
        .map(|v| ctx.vector(v))
        .collect();

    let f = DensityTable::indicator(ctx.clone(), 2, &e)?;
    let fhat = fourier_transform(&f)?;
    println!("Plancherel residual {:.2e}", plancherel_residual(&f, &fhat));

    let direct = triple_count_direct(&ctx, &e)?;
    let spectral = triple_count_spectral(&ctx, 2, &e)?;
    println!("orthogonality triples: direct {direct}, spectral {spectral:.6}");

    let f5 = FieldCtx::prime(5)?;
    let small: Vec<_> = [[1, 2], [3, 4], [0, 1]].iter().map(|v| f5.vector(v)).collect();
    let (a, b) = lifted_sets_for_thm1(&f5, &small)?;
    let n = bilinear_count_n(&f5, &a, &b)?;
    println!(
        "N = {} against main term {} (error bound {:.1}, within: {})",
        n.count, n.main_term, n.error_bound, n.within_bound
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
