// Finite field arithmetic: extension fields, traces, characters and
// multiplicative subgroups.

use std::error::Error;

use heislab::FieldCtx;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f9 = FieldCtx::of_order(9)?;
    println!("{f9} with modulus {:?} (little-endian)", f9.modulus());
    let t = f9.from_coeffs(&[0, 1])?;
    println!("t^2 = {}", f9.format(f9.mul(t, t)));
    println!("generator {}", f9.format(f9.generator()));

    // the trace is additive and takes every value of F_3 equally often
    let mut counts = [0; 3];
    for a in f9.elements() {
        counts[f9.trace(a) as usize] += 1;
    }
    println!("trace value counts {counts:?}");

    let char_sum: num_complex::Complex64 = f9.elements().map(|a| f9.character(a)).sum();
    println!("sum of the additive character over F_9: {:.2e}", char_sum.norm());

    let f13 = FieldCtx::prime(13)?;
    for d in [2, 3, 4, 6] {
        let h: Vec<String> = f13.mult_subgroup(d)?.into_iter().map(|e| f13.format(e)).collect();
        println!("subgroup of order {d} in F_13: {{{}}}", h.join(", "));
    }
    match FieldCtx::new(3, 2, Some(&[2, 0, 1])) {
        Err(e) => println!("x^2 + 2 over F_3: {e}"),
        Ok(_) => return Err("x^2 + 2 = (x - 1)(x + 1) is reducible".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
