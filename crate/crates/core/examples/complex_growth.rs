// Product sets over the complex numbers: intervals against |A|^(29/8).

use std::error::Error;

use heislab::energy::product_profile;
use heislab::lab::{gen_set, GeneratedSet, SetDomain};
use heislab::ComplexRationals;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:>4} {:>10} {:>12} {:>8}", "N", "product", "N^(29/8)", "ratio");
    for n in [4, 8, 12, 16] {
        let spec = format!("interval:lo=1;size={n}").parse()?;
        let GeneratedSet::Complex(a) = gen_set(&spec, &SetDomain::Complex)? else {
            return Err("interval over C gives scalars".into());
        };
        let size = product_profile(&ComplexRationals, &a)?.size;
        let bound = (n as f64).powf(29.0 / 8.0);
        println!("{n:>4} {size:>10} {bound:>12.1} {:>8.4}", size as f64 / bound);
    }
    let spec = "gaussian_grid:side=3".parse()?;
    let GeneratedSet::Complex(a) = gen_set(&spec, &SetDomain::Complex)? else {
        return Err("grid over C gives scalars".into());
    };
    println!("Gaussian grid of size {}: product {}", a.len(), product_profile(&ComplexRationals, &a)?.size);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
