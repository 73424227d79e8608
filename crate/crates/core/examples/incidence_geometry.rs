// Points, lines and incidences in the plane over F_p and over C.

use std::error::Error;

use heislab::incidence::{
    build_thm0_lines, collinear_triples, dyadic_buckets, dyadic_invariants_hold, incidence_count, rich_lines,
    sum_cubes, PointSet2,
};
use heislab::{ComplexRational, ComplexRationals, FieldCtx, ScalarSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c = ComplexRationals;
    let a: ScalarSet<_> = (1..=3).map(|v| ComplexRational::from_ints(v, 0)).collect();
    let grid = PointSet2::grid(&a);
    let rich = rich_lines(&c, &grid, 3)?;
    println!("{} lines contain 3 points of {{1,2,3}}^2:", rich.len());
    for (line, k) in &rich {
        println!("  {} ({k} points)", line.format(&c));
    }
    println!("collinear triples T = {}", collinear_triples(&c, &a)?.ordered);

    let ctx = FieldCtx::prime(13)?;
    let a: ScalarSet<_> = [1, 2, 3, 5, 8].iter().map(|&v| ctx.from_int(v)).collect();
    let grid = PointSet2::grid(&a);
    let lines = build_thm0_lines(&ctx, &a)?;
    let report = incidence_count(&ctx, &grid, &lines)?;
    println!(
        "I(AxA, L) = {} with {} points and {} lines (ratio to the Stevens-de Zeeuw bound {:.3})",
        report.incidences, report.points, report.lines, report.stevens_de_zeeuw_ratio
    );
    let buckets = dyadic_buckets(&lines);
    for b in &buckets {
        println!("  multiplicity in [{}, {}): {} lines", b.k, 2 * b.k, b.lines.len());
    }
    println!("dyadic invariants hold: {}", dyadic_invariants_hold(&lines, &buckets));
    let cubes = sum_cubes(&ctx, &grid, None)?;
    println!("sum of cubes over spanned lines {}, Holder: {:?}", cubes.value, cubes.holder_holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
