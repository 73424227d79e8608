// A small parameter sweep, written as CSV and summarized per theorem.

use std::error::Error;

use heislab::lab::{rows::rows_to_string, run_experiment, theorem_report, Format, Suite, SweepConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut config = SweepConfig::new(Suite::Thm3);
    config.fields = vec![11, 13, 17];
    config.family = "random:size=4".parse()?;
    config.sizes = vec![3, 5];
    config.trials = 2;
    config.seed = 7;
    let rows = run_experiment(&config)?;

    let csv = rows_to_string(&rows, Format::Csv)?;
    for line in csv.lines().take(4) {
        println!("{line}");
    }
    println!("... {} rows", rows.len());
    print!("{}", theorem_report(&rows, "1.3")?);

    let mut subgroups = SweepConfig::new(Suite::Thm9);
    subgroups.fields = vec![31, 61];
    subgroups.family = "mult_subgroup:d=5".parse()?;
    subgroups.sizes = vec![3, 5, 6, 10];
    let rows = run_experiment(&subgroups)?;
    print!("{}", theorem_report(&rows, "1.9")?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
