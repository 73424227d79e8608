// Runs every verification suite and prints the failure lists.

use std::error::Error;

use heislab::lab::{verify_suite, VerifySuite};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut failed = 0;
    for suite in VerifySuite::ALL {
        let report = verify_suite(suite);
        print!("{report}");
        failed += report.failures().len();
    }
    if failed > 0 {
        return Err(format!("{failed} checks failed").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
