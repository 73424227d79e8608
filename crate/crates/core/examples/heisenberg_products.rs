// The Heisenberg group: the group law, bricks, product sets and center cosets.

use std::error::Error;

use heislab::heisenberg::shkredov_condition;
use heislab::{Brick, BrickPart, FieldCtx, HeisenbergGroup};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ctx = FieldCtx::prime(5)?;
    let h1 = HeisenbergGroup::new(ctx.clone(), 1)?;
    let a = h1.point(&[1], &[2], 3)?;
    let b = h1.point(&[4], &[1], 0)?;
    let ab = h1.mul(&a, &b)?;
    println!("{} * {} = {}", h1.format(&a), h1.format(&b), h1.format(&ab));
    assert_eq!(Ok(ab.clone()), h1.mul_via_matrix(&a, &b));
    println!("as a matrix: {:?}", h1.to_matrix(&ab).iter().map(|r| r.iter().map(|e| e.index()).collect::<Vec<_>>()).collect::<Vec<_>>());

    // [A, A, 0] for A = {1, 2, 3}
    let set: Vec<_> = [1, 2, 3].iter().map(|&v| ctx.from_int(v)).collect();
    let part = BrickPart::boxed(vec![set]);
    let brick = Brick::new(part.clone(), part, vec![ctx.zero()])?;
    let prod = h1.brick_product(&brick, &brick)?;
    println!(
        "|[A,A,0]| = {}, |[A,A,0]^2| = {}, collisions S = {}, center cosets = {}",
        brick.len(),
        prod.len(),
        prod.collision_energy(),
        prod.coset_count()
    );

    // a box brick in H_2(F_5) and the coset-growth hypothesis
    let h2 = HeisenbergGroup::new(ctx.clone(), 2)?;
    let xs: Vec<_> = (0..3).map(|v| ctx.from_int(v)).collect();
    let boxed = BrickPart::boxed(vec![xs.clone(), xs.clone()]);
    let brick = Brick::new(boxed.clone(), boxed, ctx.elements().collect())?;
    let prod = h2.brick_product(&brick, &brick)?;
    let check = shkredov_condition(&brick, 5)?;
    println!(
        "H_2(F_5) brick of size {}: {} cosets (|brick|/p = {}), hypothesis holds: {}",
        brick.len(),
        prod.coset_count(),
        brick.len() / 5,
        check.holds
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
