//! Set generators, parameter sweeps, theorem reports and verification suites.
//!
//! ```
//! use heislab::lab::{run_experiment, theorem_report, Suite, SweepConfig};
//!
//! let mut config = SweepConfig::new(Suite::Thm4);
//! config.fields = vec![5];
//! config.family = "interval:lo=0;hi=4".parse().unwrap();
//! let rows = run_experiment(&config).unwrap();
//! let report = theorem_report(&rows, "1.4").unwrap();
//! assert_eq!(report.min_ratio, Some(1.0));
//! ```

pub mod config;
pub mod report;
pub mod rows;
pub mod setspec;
pub mod sweep;
pub mod verify;

pub use config::GrowthOptions;
pub use report::{theorem_report, TheoremReport};
pub use rows::{read_rows, write_rows, Bound, BoundTerm, ExperimentRow, Format};
pub use setspec::{gen_set, GeneratedSet, SetDomain, SetKind, SetSpec, RNG_ALGORITHM};
pub use sweep::{run_experiment, Suite, SweepConfig};
pub use verify::{verify_suite, VerifyReport, VerifySuite};
